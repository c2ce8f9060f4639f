//! The dual pair `GU_k(q) × GU_n(q) ⊂ GU_{kn}(q)`: direct evaluation of
//! `D_α(g) = |S|⁻¹ Σ_{z∈S} conj α(z) ω(z ⊗ g)` and the closed forms for
//! unipotent values.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::numbers::gu_order;
use super::partition::{Partition, Variant};
use super::weil::{weil_zeta_dim, WeilContext};
use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::ff::{Elem, FFMatrix};
use crate::oracle::{dixon_character_table, groups, ClassData, SmallGroup};

/// `S = GU_k(q)` with its classes and computed character table.
pub struct DualPair {
    pub k: usize,
    pub q: u64,
    pub group: SmallGroup<FFMatrix>,
    pub classes: ClassData,
    pub table: CharacterTable,
    /// Table column of each class of `classes`.
    column: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCandidate {
    pub row: usize,
    pub real: bool,
    pub d_alpha_one: Cyclotomic,
}

/// Which row of the `GU_k(q)` table was used as `α`, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSelection {
    pub row: usize,
    pub degree: u64,
    pub n: usize,
    pub target: Option<BigInt>,
    pub candidates: Vec<AlphaCandidate>,
}

impl fmt::Display for AlphaSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} of degree {}", self.row, self.degree)?;
        if let Some(t) = &self.target {
            write!(f, " matching D_alpha(1) = {t}")?;
        }
        write!(f, "; candidates:")?;
        for c in &self.candidates {
            let real = if c.real { "real" } else { "non-real" };
            write!(f, " [row {} {real} D_alpha(1)={}]", c.row, c.d_alpha_one)?;
        }
        Ok(())
    }
}

impl DualPair {
    /// Enumerates `GU_k(q)` (`k ∈ {2, 3}`, `q ∈ {2, 3}`) and computes its
    /// character table.
    pub fn new(k: usize, q: u64) -> Result<Self> {
        if !(2..=3).contains(&k) || !(2..=3).contains(&q) {
            return Err(Error::OutOfRange(format!("dual pair needs k, q in {{2, 3}}, got ({k}, {q})")));
        }
        let group = groups::unitary(k, q)?;
        let classes = group.conjugacy_classes();
        let table = dixon_character_table(&group, &classes, &format!("GU{k}({q})"))?;
        let column = classes
            .names
            .iter()
            .map(|n| table.class_index(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(DualPair {
            k,
            q,
            group,
            classes,
            table,
            column,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn row_degree(&self, row: usize) -> Option<u64> {
        let d = self.table.irreducibles.get(row)?[self.table.identity_class()].to_integer()?;
        u64::try_from(d).ok()
    }

    pub fn row_is_real(&self, row: usize) -> bool {
        self.table.irreducibles[row].iter().all(Cyclotomic::is_real)
    }

    /// `D_α(g)` for `α` the given table row and `g` an `n × n` matrix over
    /// `GF(q²)`.
    pub fn d_alpha(&self, row: usize, g: &FFMatrix) -> Result<Cyclotomic> {
        let alpha = self
            .table
            .irreducibles
            .get(row)
            .ok_or_else(|| Error::Precondition(format!("no row {row} in the GU_{}({}) table", self.k, self.q)))?;
        let field = self.group.element(0).field();
        if **g.field() != **field {
            return Err(Error::FieldMismatch);
        }
        let mut total = Cyclotomic::zero();
        for c in 0..self.classes.len() {
            let z = self.group.element(self.classes.representatives[c]);
            let omega = weil_zeta_dim(&z.kronecker(g)?, self.q);
            let weight = BigRational::from_integer(omega * BigInt::from(self.classes.sizes[c]));
            total = &total + &alpha[self.column[c]].conjugate().scale(&weight);
        }
        let inv_order = BigRational::new(BigInt::from(1), BigInt::from(self.order()));
        Ok(total.scale(&inv_order))
    }

    pub fn d_alpha_at_identity(&self, row: usize, n: usize) -> Result<Cyclotomic> {
        let field = self.group.element(0).field().clone();
        self.d_alpha(row, &FFMatrix::identity(field, n))
    }

    /// Picks `α` among rows of the given degree: real rows first, then by
    /// index; the first whose `D_α(1)` is a positive integer equal to
    /// `target` (when given) wins. Every candidate is recorded.
    pub fn select_alpha(&self, degree: u64, n: usize, target: Option<&BigInt>) -> Result<AlphaSelection> {
        let mut candidates = Vec::new();
        for row in 0..self.table.irreducibles.len() {
            if self.row_degree(row) != Some(degree) {
                continue;
            }
            candidates.push(AlphaCandidate {
                row,
                real: self.row_is_real(row),
                d_alpha_one: self.d_alpha_at_identity(row, n)?,
            });
        }
        candidates.sort_by_key(|c| (!c.real, c.row));
        let chosen = candidates.iter().find(|c| match c.d_alpha_one.to_integer() {
            Some(v) => v.is_positive() && target.is_none_or(|t| *t == v),
            None => false,
        });
        match chosen {
            Some(c) => Ok(AlphaSelection {
                row: c.row,
                degree,
                n,
                target: target.cloned(),
                candidates: candidates.clone(),
            }),
            None => Err(Error::Precondition(format!(
                "no row of degree {degree} gives an admissible D_alpha(1) at n = {n}"
            ))),
        }
    }
}

/// `D_α(1)` expected for the `k = 3` unipotent choice: the degree of the
/// unipotent character `(n−3, 2, 1)`.
pub fn d3_target(n: usize, q: u64) -> Result<BigInt> {
    if n < 6 {
        return Err(Error::Precondition(format!("need n >= 6, got {n}")));
    }
    Ok(Partition::new(vec![n - 3, 2, 1])?.unipotent_degree(q, Variant::Unitary))
}

/// `D_α(1)` expected for the `k = 2` choice: `(q^n − (−1)^n)/(q + 1)` times
/// the degree of the unipotent character `(n−2, 1)` of `GU_{n−1}(q)`.
pub fn d2_target(n: usize, q: u64) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::Precondition(format!("need n >= 4, got {n}")));
    }
    let qb = BigInt::from(q);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let index = (qb.pow(n as u32) - sign) / (&qb + 1);
    Ok(index * Partition::new(vec![n - 2, 1])?.unipotent_degree(q, Variant::Unitary))
}

fn neg_q(q: &BigInt, e: i64) -> BigRational {
    let base = BigRational::from_integer(-q.clone());
    num_traits::pow::Pow::pow(base, e as i32)
}

fn qpow(q: &BigInt, e: i64) -> BigRational {
    num_traits::pow::Pow::pow(BigRational::from_integer(q.clone()), e as i32)
}

/// The printed six-term expression for `|GU_3(q)|·χ(u)`, divided by
/// `|GU_3(q)|`; `r` Jordan blocks, `r1` of size one.
pub fn d3_unipotent_closed(q: u64, r: i64, r1: i64) -> Result<BigRational> {
    if r < r1 || r1 < 0 {
        return Err(Error::Precondition(format!("need r >= r1 >= 0, got ({r}, {r1})")));
    }
    let qb = BigInt::from(q);
    let qr = BigRational::from_integer(qb.clone());
    let i = |x: i64| BigRational::from_integer(BigInt::from(x));
    let q1 = &qr - i(1);
    let q3p1 = qpow(&qb, 3) + i(1);
    let q2mq1 = qpow(&qb, 2) - &qr + i(1);
    let inner = |e: i64| -neg_q(&qb, e) - &qr;
    let tail = -neg_q(&qb, r + 1) - &qr * &q1;

    let t1 = (qpow(&qb, 2) - &qr) * inner(3 * r);
    let t2 = &qr * inner(3 * r - r1) * &q1 * &q3p1;
    let t3 = qpow(&qb, 2) * &q1 * &q2mq1 * (-qpow(&qb, 2 * r + 1) + &tail);
    let t4 = qpow(&qb, 2) * &q1 * &q3p1 * (-neg_q(&qb, 2 * r - r1 + 1) + &tail);
    let t5 = i(2) * qpow(&qb, 3) * &q1 * &q1 * &q2mq1
        * ((i(-3) * neg_q(&qb, r + 1) - &qr * (&qr - i(2))) / i(6));
    let t6 = qpow(&qb, 4) / i(3) * (&qr + i(1)) * (&qr + i(1)) * (&qr + i(1)) * &q1 * &q1;
    let total = t1 - t2 - t3 + t4 + t5 + t6;
    Ok(total / BigRational::from_integer(gu_order(3, q)))
}

/// The printed three-term expression for `|GU_2(q)|·χ(u)`, divided by
/// `|GU_2(q)|`.
pub fn d2_unipotent_closed(q: u64, r: i64, r1: i64) -> Result<BigRational> {
    if r < r1 || r1 < 0 {
        return Err(Error::Precondition(format!("need r >= r1 >= 0, got ({r}, {r1})")));
    }
    let qb = BigInt::from(q);
    let qr = BigRational::from_integer(qb.clone());
    let one = BigRational::from_integer(BigInt::from(1));
    let q1 = &qr - &one;
    let t1 = &q1 * (qpow(&qb, 2 * r) - &one);
    let t2 = (qpow(&qb, 2) - &one) * (neg_q(&qb, 2 * r - r1) - &one);
    let t3 = &qr * &q1 * (neg_q(&qb, r) * (-&qr + &one) + &q1);
    Ok((t1 - t2 + t3) / BigRational::from_integer(gu_order(2, q)))
}

/// A transvection `I + a·v·v*` with `v` isotropic and `a + a^q = 0`: a
/// unipotent element of `SU_n(q)` with Jordan type `(2, 1^{n−2})`.
pub fn transvection(ctx: &WeilContext) -> Result<FFMatrix> {
    let f = &ctx.field;
    let q = ctx.q;
    let n = ctx.n;
    if n < 2 {
        return Err(Error::InvalidDegree(n));
    }
    // smallest isotropic vector supported on the first three coordinates
    let width = n.min(3);
    let size = f.size() as u32;
    let mut v: Option<Vec<Elem>> = None;
    'search: for code in 1..(size as u64).pow(width as u32) {
        let mut c = code;
        let mut cand = vec![0; n];
        for slot in cand.iter_mut().take(width) {
            *slot = (c % size as u64) as Elem;
            c /= size as u64;
        }
        let form = cand
            .iter()
            .fold(0, |acc, &x| f.add(acc, f.mul(x, f.frobenius(x, q))));
        if form == 0 {
            v = Some(cand);
            break 'search;
        }
    }
    let v = v.ok_or_else(|| Error::Precondition("no isotropic vector".into()))?;
    let a = f
        .elements()
        .find(|&a| a != 0 && f.add(a, f.frobenius(a, q)) == 0)
        .ok_or_else(|| Error::Precondition("no trace-zero scalar".into()))?;
    let mut entries = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let outer = f.mul(a, f.mul(v[i], f.frobenius(v[j], q)));
            entries[i * n + j] = f.add(u32::from(i == j), outer);
        }
    }
    FFMatrix::new(f.clone(), n, entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconciliationLine {
    pub k: usize,
    pub element: &'static str,
    pub r: i64,
    pub r1: i64,
    pub closed: BigRational,
    pub direct: Cyclotomic,
    pub matches: bool,
}

impl fmt::Display for ReconciliationLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} u={} r={} r1={} closed={} direct={} {}",
            self.k,
            self.element,
            self.r,
            self.r1,
            self.closed,
            self.direct,
            if self.matches { "match" } else { "mismatch" }
        )
    }
}

#[derive(Clone, Debug)]
pub struct ReconciliationReport {
    pub n: usize,
    pub q: u64,
    pub alpha2: AlphaSelection,
    pub alpha3: AlphaSelection,
    pub lines: Vec<ReconciliationLine>,
}

/// Compares the closed forms with direct evaluation at `u = 1` and at a
/// transvection `u ~ (2, 1^{n−2})`.
pub fn reconcile(n: usize, q: u64) -> Result<ReconciliationReport> {
    let ctx = WeilContext::new(n, q)?;
    let id = FFMatrix::identity(ctx.field.clone(), n);
    let u = transvection(&ctx)?;
    let elements: [(&'static str, &FFMatrix, i64, i64); 2] = [
        ("1", &id, n as i64, n as i64),
        ("(2,1^(n-2))", &u, n as i64 - 1, n as i64 - 2),
    ];
    let mut lines = Vec::new();
    let s2 = DualPair::new(2, q)?;
    let alpha2 = s2.select_alpha(q - 1, n, Some(&d2_target(n, q)?))?;
    let s3 = DualPair::new(3, q)?;
    let alpha3 = s3.select_alpha(q * q - q, n, Some(&d3_target(n, q)?))?;
    for (pair, sel, closed_fn) in [
        (&s2, &alpha2, d2_unipotent_closed as fn(u64, i64, i64) -> Result<BigRational>),
        (&s3, &alpha3, d3_unipotent_closed),
    ] {
        for (name, g, r, r1) in elements {
            let closed = closed_fn(q, r, r1)?;
            let direct = pair.d_alpha(sel.row, g)?;
            let matches = direct == Cyclotomic::from_rational(closed.clone());
            lines.push(ReconciliationLine {
                k: pair.k,
                element: name,
                r,
                r1,
                closed,
                direct,
                matches,
            });
        }
    }
    Ok(ReconciliationReport {
        n,
        q,
        alpha2,
        alpha3,
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn targets() {
        assert_eq!(d3_target(7, 2).unwrap(), BigInt::from(7568));
        assert_eq!(d2_target(7, 2).unwrap(), BigInt::from(946));
    }

    #[test]
    fn transvection_is_unitary_unipotent() {
        for (n, q) in [(7, 2), (5, 3)] {
            let ctx = WeilContext::new(n, q).unwrap();
            let u = transvection(&ctx).unwrap();
            assert!(u.is_unitary(q));
            assert_eq!(u.kernel_dim(1), n - 1);
            assert!(!u.is_identity());
            assert_eq!(u.determinant(), 1);
        }
    }

    #[test]
    fn closed_form_denominators() {
        assert!(d3_unipotent_closed(2, 1, 2).is_err());
        let v = d2_unipotent_closed(2, 7, 7).unwrap() * BigRational::from_integer(gu_order(2, 2));
        assert!(!v.is_zero());
    }
}
