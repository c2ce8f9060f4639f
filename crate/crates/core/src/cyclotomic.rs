//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A value is stored on the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` modulo the
//! `n`-th cyclotomic polynomial, at the smallest conductor `n` whose field
//! contains it. Since that representation is unique, equality, hashing and
//! ordering are structural.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{self, euler_phi, lcm};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

thread_local! {
    static CYCLOTOMIC_POLYS: RefCell<HashMap<u64, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term
/// first.
pub fn cyclotomic_polynomial(n: u64) -> Rc<Vec<i64>> {
    if let Some(p) = CYCLOTOMIC_POLYS.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in arith::divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = divide_monic(&num, &div);
    }
    let rc = Rc::new(num);
    CYCLOTOMIC_POLYS.with(|c| c.borrow_mut().insert(n, rc.clone()));
    rc
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn reduce_dense(n: u64, mut dense: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for i in (deg..dense.len()).rev() {
        if dense[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut dense[i], BigRational::zero());
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                dense[i - deg + j] -= &c * BigRational::from_integer(BigInt::from(pj));
            }
        }
    }
    dense.truncate(deg);
    dense.resize(deg, BigRational::zero());
    dense
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u64, k: i64) -> Self {
        Cyclotomic::from_terms(n, &[(k, BigRational::one())])
    }

    /// `Σ coeff · ζ_n^exp`, exponents taken modulo `n`.
    pub fn from_terms(n: u64, terms: &[(i64, BigRational)]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let mut dense = vec![BigRational::zero(); n as usize];
        for (e, c) in terms {
            dense[e.rem_euclid(n as i64) as usize] += c;
        }
        Cyclotomic::canonical(n, dense)
    }

    /// Like [`Cyclotomic::from_terms`] with integer numerator/denominator
    /// pairs, failing on a zero denominator.
    pub fn make(n: u64, terms: &[(i64, BigInt, BigInt)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("conductor must be positive".into()));
        }
        let mut rs = Vec::with_capacity(terms.len());
        for (e, num, den) in terms {
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            rs.push((*e, BigRational::new(num.clone(), den.clone())));
        }
        Ok(Cyclotomic::from_terms(n, &rs))
    }

    fn canonical(n: u64, dense: Vec<BigRational>) -> Self {
        let coeffs = reduce_dense(n, dense);
        let mut x = Cyclotomic {
            conductor: n,
            coeffs,
        };
        x.descend();
        x
    }

    // Moves the value to the smallest conductor containing it.
    fn descend(&mut self) {
        loop {
            if self.coeffs.iter().all(Zero::is_zero) {
                *self = Cyclotomic {
                    conductor: 1,
                    coeffs: vec![BigRational::zero()],
                };
                return;
            }
            let n = self.conductor;
            let mut moved = false;
            for p in arith::prime_divisors(n) {
                if let Some(y) = self.try_descend(p) {
                    *self = y;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return;
            }
        }
    }

    fn try_descend(&self, p: u64) -> Option<Cyclotomic> {
        let n = self.conductor;
        let m = n / p;
        if m % p == 0 {
            // Φ_n(x) = Φ_m(x^p): the subfield is spanned by powers divisible by p.
            if self
                .coeffs
                .iter()
                .enumerate()
                .any(|(i, c)| i as u64 % p != 0 && !c.is_zero())
            {
                return None;
            }
            let coeffs = self.coeffs.iter().step_by(p as usize).cloned().collect();
            return Some(Cyclotomic {
                conductor: m,
                coeffs,
            });
        }
        // p ∥ n: project with the relative trace and test membership.
        let p_inv = arith::inv_mod(p % m.max(1), m.max(1));
        let m_inv = arith::inv_mod(m % p, p);
        let mut dense = vec![BigRational::zero(); m as usize];
        let scale = BigRational::from_integer(BigInt::from(p - 1));
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = i as u64;
            let a = if m == 1 { 0 } else { (i % m) * p_inv % m };
            let b = (i % p) * m_inv % p;
            if b == 0 {
                dense[a as usize] += c * &scale;
            } else {
                dense[a as usize] -= c;
            }
        }
        for d in dense.iter_mut() {
            *d = &*d / &scale;
        }
        let coeffs = reduce_dense(m, dense);
        let y = Cyclotomic {
            conductor: m,
            coeffs,
        };
        if y.lift(n).coeffs == self.coeffs {
            Some(y)
        } else {
            None
        }
    }

    // Reduced (not descended) representation at a multiple of the conductor.
    fn lift(&self, n: u64) -> Cyclotomic {
        debug_assert_eq!(n % self.conductor, 0);
        if n == self.conductor {
            return self.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_dense(n, dense),
        }
    }

    fn dense_at(&self, n: u64) -> Vec<BigRational> {
        let step = (n / self.conductor) as usize;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[i * step] = c.clone();
            }
        }
        dense
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients at the stored conductor.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Image under `ζ ↦ ζ^k`, `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.conductor;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as i64 * k).rem_euclid(n as i64) as usize;
                dense[e] += c;
            }
        }
        Cyclotomic::canonical(n, dense)
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conjugate(&self) -> Cyclotomic {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Cyclotomic {
        (0..e).fold(Cyclotomic::one(), |acc, _| &acc * self)
    }

    /// Floating-point value, for display only.
    pub fn approximate(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let th = 2.0 * std::f64::consts::PI * i as f64 / n;
            (re + v * th.cos(), im + v * th.sin())
        })
    }

    /// Nonzero terms as (exponent, coefficient), increasing exponent.
    pub fn terms(&self) -> Vec<(u64, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64, c.clone()))
            .collect()
    }

    /// `{ "conductor": n, "terms": [[exponent, numerator, denominator], …] }`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .into_iter()
            .map(|(e, c)| json!([e, bigint_json(c.numer()), bigint_json(c.denom())]))
            .collect();
        json!({ "conductor": self.conductor, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Cyclotomic> {
        let bad = |msg: &str| Error::InvalidTable(format!("cyclotomic value: {msg}"));
        let n = v
            .get("conductor")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing conductor"))?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("term"))?;
            let e = t[0].as_i64().ok_or_else(|| bad("exponent"))?;
            parsed.push((e, json_bigint(&t[1])?, json_bigint(&t[2])?));
        }
        Cyclotomic::make(n, &parsed)
    }
}

fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(i) => json!(i),
        None => json!(n.to_string()),
    }
}

fn json_bigint(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    v.as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidTable(format!("bad integer {v}")))
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    /// Writes e.g. `-1`, `3/5`, `E(5)+E(5)^4`, `2*E(3)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let n = self.conductor;
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let root = match e {
                0 => String::new(),
                1 => format!("E({n})"),
                _ => format!("E({n})^{e}"),
            };
            if root.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{abs}*{root}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            let coeffs: Vec<_> = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            let mut x = Cyclotomic {
                conductor: self.conductor,
                coeffs,
            };
            x.descend();
            return x;
        }
        let n = lcm(self.conductor, rhs.conductor);
        let mut dense = self.dense_at(n);
        let step = (n / rhs.conductor) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            dense[i * step] += c;
        }
        Cyclotomic::canonical(n, dense)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        let n = lcm(self.conductor, rhs.conductor);
        let (sa, sb) = (n / self.conductor, n / rhs.conductor);
        let mut dense = vec![BigRational::zero(); n as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = ((i as u64 * sa + j as u64 * sb) % n) as usize;
                dense[e] += a * b;
            }
        }
        Cyclotomic::canonical(n, dense)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(r: BigRational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

/// Dimension of `Q(ζ_n)` over `Q`.
pub fn field_degree(n: u64) -> u64 {
    euler_phi(n)
}
