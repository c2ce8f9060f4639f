use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `x^k − 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = BigInt::from(-1);
        c[k] = BigInt::one();
        IntPoly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly(out).trimmed()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        IntPoly(c)
    }

    /// Exact division by a monic divisor; `None` if a remainder is left.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree();
        if !d.0[dd].is_one() {
            return None;
        }
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return r.iter().all(Zero::is_zero).then(|| IntPoly(vec![BigInt::zero()]));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                r[i + j] -= &c * dj;
            }
            q[i] = c;
        }
        r.iter().all(Zero::is_zero).then(|| IntPoly(q).trimmed())
    }

    fn trimmed(mut self) -> IntPoly {
        while self.0.len() > 1 && self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "x".into(),
                (1, false) => format!("{mag}*x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{mag}*x^{i}"),
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (sign, body)) in terms.iter().enumerate() {
            match (k, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `GL_n(q)`: `ρ_λ(q)`.
    Linear,
    /// `GU_n(q)`: `|ρ_λ(−q)|`.
    Unitary,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Variant::Linear),
            "unitary" => Ok(Variant::Unitary),
            _ => Err(Error::Parse(format!("variant must be linear or unitary, got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts descending; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.parts[0])
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Hook lengths of every box, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }

    /// `a(λ) = Σ_{i<j} min(λ_i, λ_j)`.
    pub fn a_statistic(&self) -> usize {
        // parts are descending, so min(λ_i, λ_j) = λ_j for i < j
        self.parts.iter().enumerate().map(|(j, &p)| j * p).sum()
    }

    /// `ρ_λ(x) = x^{a(λ)} Π_{i=1}^{n}(x^i − 1) / Π_h (x^{l(h)} − 1)`.
    pub fn rho_polynomial(&self) -> IntPoly {
        let n = self.size();
        let mut num = IntPoly::one();
        for i in 1..=n {
            num = num.mul(&IntPoly::x_pow_minus_one(i));
        }
        for h in self.hooks() {
            num = num
                .div_exact(&IntPoly::x_pow_minus_one(h))
                .expect("hook product divides the order polynomial");
        }
        num.shift(self.a_statistic())
    }

    pub fn unipotent_degree(&self, q: u64, variant: Variant) -> BigInt {
        let rho = self.rho_polynomial();
        match variant {
            Variant::Linear => rho.eval(&BigInt::from(q)),
            Variant::Unitary => rho.eval(&-BigInt::from(q)).abs(),
        }
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Comma-separated parts, e.g. `4,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        Partition::new(parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, parts descending, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(p("7").rho_polynomial(), IntPoly::one());
        let st = p("1,1,1,1").rho_polynomial();
        assert_eq!(st, IntPoly::one().shift(6));
        assert_eq!(p("6,1").unipotent_degree(2, Variant::Unitary), BigInt::from(42));
        assert_eq!(p("4,2,1").unipotent_degree(2, Variant::Unitary), BigInt::from(7568));
        assert_eq!(p("1,1,1,1").unipotent_degree(2, Variant::Unitary), BigInt::from(64));
        // linear (n−1,1) degree is q(q^{n−1} − 1)/(q − 1)
        assert_eq!(p("3,1").unipotent_degree(3, Variant::Linear), BigInt::from(39));
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(p("2,1").hooks(), vec![3, 1, 1]);
        assert!("3,0".parse::<Partition>().is_err());
        assert_eq!(p("6,1").rho_polynomial().to_string(), "x^6 + x^5 + x^4 + x^3 + x^2 + x");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn conjugates_share_degree_up_to_power() {
        for n in 1..=10 {
            for lam in partitions(n) {
                let mu = lam.conjugate();
                let (a, b) = (lam.a_statistic(), mu.a_statistic());
                let (rl, rm) = (lam.rho_polynomial(), mu.rho_polynomial());
                if b >= a {
                    assert_eq!(rl.shift(b - a), rm, "{lam}");
                } else {
                    assert_eq!(rm.shift(a - b), rl, "{lam}");
                }
            }
        }
    }

    fn any_partition() -> impl Strategy<Value = Partition> {
        (1usize..=12).prop_flat_map(|n| {
            let all = partitions(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn hooks_invariant_under_conjugation(lam in any_partition()) {
            let mut a = lam.hooks();
            let mut b = lam.conjugate().hooks();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn degrees_are_positive(lam in any_partition(), q in 2u64..6) {
            prop_assert!(lam.unipotent_degree(q, Variant::Unitary).is_positive());
            prop_assert!(lam.unipotent_degree(q, Variant::Linear).is_positive());
        }
    }
}
