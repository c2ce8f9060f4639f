use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};

/// Element of a [`Field`]: the coefficient vector of its polynomial
/// representative read as a base-`p` integer, constant term least
/// significant. This encoding is also the canonical element order.
pub type Elem = u32;

const MAX_FIELD_SIZE: u64 = 1 << 16;

/// `GF(p^k)` realised as `GF(p)[x]/(f)` for the lexicographically smallest
/// monic irreducible `f` of degree `k`.
pub struct Field {
    p: u32,
    k: u32,
    size: u32,
    modulus: Vec<u32>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}
impl Eq for Field {}

fn poly_rem_mod(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - (c * bj) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() as u32 - 1;
    for d in 1..=k / 2 {
        for code in 0..(p as u64).pow(d) {
            let mut g = digits(code as u32, p, d);
            g.push(1);
            if poly_rem_mod(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Arc<Field>> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::Precondition("extension degree must be positive".into()));
        }
        let size = p.checked_pow(k).filter(|&s| s <= MAX_FIELD_SIZE).ok_or_else(|| {
            Error::OutOfRange(format!("GF({p}^{k}) exceeds {MAX_FIELD_SIZE} elements"))
        })?;
        let (p, size) = (p as u32, size as u32);
        let modulus = (0..size)
            .map(|code| {
                let mut f = digits(code, p, k);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");

        let mut field = Field {
            p,
            k,
            size,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        let order = (size - 1) as u64;
        let factors = arith::prime_divisors(order);
        field.generator = (1..size)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| field.slow_pow(g, order / r) != 1)
            })
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(size as usize - 1);
        let mut log = vec![0u32; size as usize];
        let mut x: Elem = 1;
        for i in 0..size - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = field.slow_mul(x, field.generator);
        }
        field.exp = exp;
        field.log = log;
        if size <= 256 {
            let mut t = Vec::with_capacity((size * size) as usize);
            for a in 0..size {
                for b in 0..size {
                    t.push(field.digit_add(a, b));
                }
            }
            field.add_table = Some(t);
        }
        Ok(Arc::new(field))
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let (p, k) = (self.p, self.k);
        let (da, db) = (digits(a, p, k), digits(b, p, k));
        let mut prod = vec![0u32; 2 * k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let r = poly_rem_mod(&prod, &self.modulus, p);
        self.encode(&r)
    }

    fn slow_pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut acc, mut base) = (1, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn encode(&self, coeffs: &[u32]) -> Elem {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn digit_add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size as u64
    }

    /// Modulus coefficients, constant term first (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Smallest generator of the multiplicative group in canonical order.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    /// Coefficient vector, constant term first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        digits(a, self.p, self.k)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!("{coeffs:?} is not an element of {self:?}")));
        }
        Ok(self.encode(coeffs))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[(a * self.size + b) as usize],
            None => self.digit_add(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u32> = self
            .coefficients(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.encode(&d)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.size - 1)) as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.size - 1 - l) % (self.size - 1)) as usize])
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let ord = (self.size - 1) as i64;
        let l = (self.log[a as usize] as i64 * e.rem_euclid(ord)).rem_euclid(ord);
        self.exp[l as usize]
    }

    /// Discrete logarithm base the canonical generator.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn element_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = (self.size - 1) as u64;
        Some(n / arith::gcd(n, l))
    }

    /// `a ↦ a^q`.
    pub fn frobenius(&self, a: Elem, q: u64) -> Elem {
        self.pow(a, q as i64)
    }

    /// For `GF(q²)`, returns `q`.
    pub fn half_order(&self) -> Result<u64> {
        if self.k % 2 != 0 {
            return Err(Error::Precondition(format!("{self:?} is not a quadratic extension")));
        }
        Ok((self.p as u64).pow(self.k / 2))
    }

    /// Writes an element as its coefficient vector, e.g. `1,0` for `GF(p^2)`,
    /// or a plain integer when `k = 1`.
    pub fn format(&self, a: Elem) -> String {
        self.coefficients(a)
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        let coeffs: std::result::Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse()).collect();
        let coeffs = coeffs.map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
        self.from_coefficients(&coeffs)
    }
}

/// `GF(q²)` together with the norm-one generator `δ = γ^{q-1}`.
pub fn norm_one_generator(field: &Field) -> Result<Elem> {
    let q = field.half_order()?;
    Ok(field.pow(field.generator(), (q - 1) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.generator(), 2);
        // GF(8): x³ + x + 1 is the smallest irreducible cubic
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, k) in [(2, 2), (3, 2), (2, 3), (5, 2), (7, 1)] {
            let f = Field::new(p, k).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                    for &c in els.iter().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            assert_eq!(f.element_order(f.generator()), Some(f.size() - 1));
        }
    }

    #[test]
    fn frobenius_fixes_subfield() {
        for (p, k) in [(2, 2), (3, 2), (2, 4), (5, 2)] {
            let f = Field::new(p, k).unwrap();
            let q = f.half_order().unwrap();
            let fixed: Vec<Elem> = f.elements().filter(|&a| f.frobenius(a, q) == a).collect();
            assert_eq!(fixed.len() as u64, q);
            for a in f.elements() {
                assert_eq!(f.frobenius(f.frobenius(a, q), q), a);
                for b in f.elements().step_by(5) {
                    assert_eq!(
                        f.frobenius(f.mul(a, b), q),
                        f.mul(f.frobenius(a, q), f.frobenius(b, q))
                    );
                    assert_eq!(
                        f.frobenius(f.add(a, b), q),
                        f.add(f.frobenius(a, q), f.frobenius(b, q))
                    );
                }
            }
        }
    }

    #[test]
    fn norm_one_generators() {
        for (p, k, q) in [(2u64, 2u32, 2u64), (3, 2, 3), (2, 4, 4), (5, 2, 5)] {
            let f = Field::new(p, k).unwrap();
            let d = norm_one_generator(&f).unwrap();
            assert_eq!(f.element_order(d), Some(q + 1));
            assert_eq!(f.frobenius(d, q), f.inv(d).unwrap());
            assert_eq!(f.pow(d, q as i64 + 1), 1);
            for j in 1..=q as i64 {
                assert_ne!(f.pow(d, j), 1);
            }
        }
        assert!(norm_one_generator(&Field::new(2, 3).unwrap()).is_err());
    }

    #[test]
    fn element_text() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
        assert!(f.parse("3,0").is_err());
        assert!(f.parse("1,1,1").is_err());
    }
}
