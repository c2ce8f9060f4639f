use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorize, multiplicative_order};
use crate::error::{Error, Result};

/// Primitive prime divisors of `q^n − 1`: primes `r` dividing it and no
/// `q^k − 1` with `k < n`, ascending.
pub fn ppd(q: u64, n: u32) -> Result<Vec<u64>> {
    if q < 2 || n < 1 {
        return Err(Error::Precondition(format!("ppd needs q >= 2 and n >= 1, got ({q}, {n})")));
    }
    let m = q
        .checked_pow(n)
        .ok_or_else(|| Error::OutOfRange(format!("{q}^{n} exceeds 64 bits")))?
        - 1;
    Ok(factorize(m)
        .into_iter()
        .map(|(r, _)| r)
        .filter(|&r| multiplicative_order(q % r, r) == Some(n as u64))
        .collect())
}

/// `(q^{a_1} − (−1)^{a_1})⋯(q^{a_k} − (−1)^{a_k}) / (q + 1)`.
pub fn torus_order_unitary(shape: &[usize], q: u64) -> Result<BigInt> {
    if shape.is_empty() || shape.contains(&0) {
        return Err(Error::Precondition("torus shape parts must be positive".into()));
    }
    let qb = BigInt::from(q);
    let num = shape.iter().fold(BigInt::one(), |acc, &a| {
        let sign = if a % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        acc * (qb.pow(a as u32) - sign)
    });
    let (quot, rem) = num.div_rem(&(qb + 1));
    if !rem.is_zero() {
        return Err(Error::NonIntegral(format!("torus order for {shape:?} at q = {q}")));
    }
    Ok(quot)
}

/// `|GU_n(q)| = q^{n(n−1)/2} Π_{i=1}^{n} (q^i − (−1)^i)`.
pub fn gu_order(n: u32, q: u64) -> BigInt {
    let qb = BigInt::from(q);
    (1..=n).fold(qb.pow(n * (n - 1) / 2), |acc, i| {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        acc * (qb.pow(i) - sign)
    })
}

/// `|SU_n(q)| = |GU_n(q)| / (q + 1)`.
pub fn su_order(n: u32, q: u64) -> BigInt {
    gu_order(n, q) / (BigInt::from(q) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::partition::partitions;

    #[test]
    fn ppd_examples() {
        assert_eq!(ppd(4, 2).unwrap(), vec![5]);
        assert_eq!(ppd(2, 6).unwrap(), Vec::<u64>::new());
        assert_eq!(ppd(3, 6).unwrap(), vec![7]);
        assert_eq!(ppd(7, 2).unwrap(), Vec::<u64>::new());
        assert_eq!(ppd(2, 1).unwrap(), Vec::<u64>::new());
        for q in [2u64, 3, 4, 5] {
            for n in 2..=14u32 {
                for r in ppd(q, n).unwrap() {
                    assert_eq!(multiplicative_order(q % r, r), Some(n as u64));
                }
            }
        }
    }

    #[test]
    fn torus_examples() {
        assert_eq!(torus_order_unitary(&[7], 2).unwrap(), BigInt::from(43));
        assert_eq!(torus_order_unitary(&[1, 1, 4], 2).unwrap(), BigInt::from(45));
        assert_eq!(torus_order_unitary(&[1; 5], 3).unwrap(), BigInt::from(4).pow(4));
        assert_eq!(gu_order(3, 2), BigInt::from(648));
        assert_eq!(gu_order(2, 2), BigInt::from(18));
        assert_eq!(gu_order(3, 3), BigInt::from(24192));
    }

    #[test]
    fn tori_divide_group_order() {
        for q in [2u64, 3] {
            for n in 1..=8usize {
                let order = su_order(n as u32, q);
                for shape in partitions(n) {
                    let t = torus_order_unitary(shape.parts(), q).unwrap();
                    assert!(order.is_multiple_of(&t), "{shape} at q={q}");
                }
            }
        }
    }
}
