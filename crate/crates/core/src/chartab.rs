//! Character tables: storage, validation, structure constants and
//! involution coverage.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub element_order: u64,
    /// Index of the class of inverses.
    pub inverse: usize,
}

/// Irreducible characters (rows) on conjugacy classes (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_name: String,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    group_name: String,
    order: u64,
    classes: Vec<ClassInfo>,
    irreducibles: Vec<Vec<Value>>,
}

impl CharacterTable {
    /// Checks shape and metadata, not character theory; see [`validate_table`].
    pub fn new(
        group_name: impl Into<String>,
        order: u64,
        classes: Vec<ClassInfo>,
        irreducibles: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        let k = classes.len();
        if k == 0 {
            return Err(Error::InvalidTable("no classes".into()));
        }
        if irreducibles.len() != k {
            return Err(Error::InvalidTable(format!(
                "{} classes but {} irreducible rows",
                k,
                irreducibles.len()
            )));
        }
        if let Some(r) = irreducibles.iter().position(|row| row.len() != k) {
            return Err(Error::InvalidTable(format!("row {r} does not have {k} entries")));
        }
        let mut seen = BTreeSet::new();
        for c in &classes {
            if !seen.insert(c.name.as_str()) {
                return Err(Error::InvalidTable(format!("duplicate class name {}", c.name)));
            }
            if c.inverse >= k {
                return Err(Error::InvalidTable(format!(
                    "class {} has inverse index {} out of range",
                    c.name, c.inverse
                )));
            }
            if c.size == 0 || c.element_order == 0 {
                return Err(Error::InvalidTable(format!("class {} has zero size or order", c.name)));
            }
        }
        if order == 0 {
            return Err(Error::InvalidTable("zero group order".into()));
        }
        Ok(CharacterTable {
            group_name: group_name.into(),
            order,
            classes,
            irreducibles,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawTable = serde_json::from_str(text)?;
        let rows = raw
            .irreducibles
            .iter()
            .map(|row| row.iter().map(Cyclotomic::from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        CharacterTable::new(raw.group_name, raw.order, raw.classes, rows)
    }

    /// Pretty JSON with a trailing newline; stable under parse/serialize.
    pub fn to_json_string(&self) -> String {
        let raw = RawTable {
            group_name: self.group_name.clone(),
            order: self.order,
            classes: self.classes.clone(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|row| row.iter().map(Cyclotomic::to_json).collect())
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("tables serialize");
        s.push('\n');
        s
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.order / self.classes[c].size
    }

    pub fn degrees(&self) -> Vec<&Cyclotomic> {
        self.irreducibles.iter().map(|row| &row[self.identity_class()]).collect()
    }

    /// First class of element order 1.
    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.element_order == 1)
            .unwrap_or(0)
    }

    pub fn class_index(&self, name: &str) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownClass {
                name: name.to_string(),
                valid: self
                    .classes
                    .iter()
                    .map(|c| c.name.as_str())
                    .collect::<Vec<_>>()
                    .join(" "),
            })
    }

    pub fn involution_classes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| self.classes[c].element_order == 2)
            .collect()
    }

    /// Classes by (element order, descending size, name); rows by degree,
    /// trivial character first, then by values.
    pub fn canonicalize(&self) -> CharacterTable {
        let mut perm: Vec<usize> = (0..self.len()).collect();
        perm.sort_by(|&a, &b| {
            let (ca, cb) = (&self.classes[a], &self.classes[b]);
            (ca.element_order, std::cmp::Reverse(ca.size), &ca.name)
                .cmp(&(cb.element_order, std::cmp::Reverse(cb.size), &cb.name))
        });
        let mut new_pos = vec![0; self.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_pos[old] = new;
        }
        let classes = perm
            .iter()
            .map(|&old| {
                let c = &self.classes[old];
                ClassInfo {
                    inverse: new_pos[c.inverse],
                    ..c.clone()
                }
            })
            .collect();
        let mut rows: Vec<Vec<Cyclotomic>> = self
            .irreducibles
            .iter()
            .map(|row| perm.iter().map(|&old| row[old].clone()).collect())
            .collect();
        rows.sort_by(|a, b| {
            let one = Cyclotomic::one();
            let key = |r: &Vec<Cyclotomic>| (r[0].to_rational(), r.iter().any(|x| *x != one));
            key(a).cmp(&key(b)).then_with(|| a.cmp(b))
        });
        CharacterTable {
            group_name: self.group_name.clone(),
            order: self.order,
            classes,
            irreducibles: rows,
        }
    }
}

pub fn parse_table(path: &Path) -> Result<CharacterTable> {
    CharacterTable::from_json_str(&std::fs::read_to_string(path)?)
}

pub fn serialize_table(t: &CharacterTable, path: &Path) -> Result<()> {
    std::fs::write(path, t.to_json_string())?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableFailure {
    RowOrthogonality { r: usize, s: usize },
    ColumnOrthogonality { j: usize, k: usize },
    DegreeSum { sum: String, order: u64 },
    NonIntegralDegree { row: usize },
    InverseConsistency { row: usize, class: usize },
    ClassSizes { sum: u64, order: u64 },
    SizeDoesNotDivide { class: usize },
    InverseNotInvolution { class: usize },
}

impl fmt::Display for TableFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableFailure::RowOrthogonality { r, s } => write!(f, "row orthogonality fails for rows {r}, {s}"),
            TableFailure::ColumnOrthogonality { j, k } => {
                write!(f, "column orthogonality fails for classes {j}, {k}")
            }
            TableFailure::DegreeSum { sum, order } => write!(f, "sum of squared degrees {sum} != {order}"),
            TableFailure::NonIntegralDegree { row } => write!(f, "degree of row {row} is not a positive integer"),
            TableFailure::InverseConsistency { row, class } => {
                write!(f, "row {row}: value on inverse of class {class} is not the conjugate")
            }
            TableFailure::ClassSizes { sum, order } => write!(f, "class sizes sum to {sum}, not {order}"),
            TableFailure::SizeDoesNotDivide { class } => write!(f, "size of class {class} does not divide the order"),
            TableFailure::InverseNotInvolution { class } => {
                write!(f, "inverse map is not an involution at class {class}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<TableFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Both orthogonality relations, the degree sum, integral degrees and
/// `χ(g⁻¹) = conj χ(g)`, each failure reported with its indices.
pub fn validate_table(t: &CharacterTable) -> ValidationReport {
    let mut failures = Vec::new();
    let k = t.len();
    let size_sum: u64 = t.classes.iter().map(|c| c.size).sum();
    if size_sum != t.order {
        failures.push(TableFailure::ClassSizes { sum: size_sum, order: t.order });
    }
    for (c, info) in t.classes.iter().enumerate() {
        if t.order % info.size != 0 {
            failures.push(TableFailure::SizeDoesNotDivide { class: c });
        }
        if t.classes[info.inverse].inverse != c {
            failures.push(TableFailure::InverseNotInvolution { class: c });
        }
    }
    let conj: Vec<Vec<Cyclotomic>> = t
        .irreducibles
        .iter()
        .map(|row| row.iter().map(Cyclotomic::conjugate).collect())
        .collect();
    for r in 0..k {
        for s in r..k {
            let sum: Cyclotomic = (0..k)
                .map(|j| (&t.irreducibles[r][j] * &conj[s][j]).scale(&rat(t.classes[j].size)))
                .sum();
            let expect = if r == s { t.order as i64 } else { 0 };
            if sum != Cyclotomic::from_integer(expect) {
                failures.push(TableFailure::RowOrthogonality { r, s });
            }
        }
    }
    for j in 0..k {
        for l in j..k {
            let sum: Cyclotomic = (0..k).map(|r| &t.irreducibles[r][j] * &conj[r][l]).sum();
            let expect = if j == l && t.classes[j].size != 0 {
                Cyclotomic::from_rational(BigRational::new(
                    BigInt::from(t.order),
                    BigInt::from(t.classes[j].size),
                ))
            } else {
                Cyclotomic::zero()
            };
            if sum != expect {
                failures.push(TableFailure::ColumnOrthogonality { j, k: l });
            }
        }
    }
    let id = t.identity_class();
    let mut deg_sum = BigRational::zero();
    for (r, row) in t.irreducibles.iter().enumerate() {
        match row[id].to_integer() {
            Some(d) if d.is_positive() => deg_sum += BigRational::from_integer(&d * &d),
            _ => failures.push(TableFailure::NonIntegralDegree { row: r }),
        }
        for (c, info) in t.classes.iter().enumerate() {
            if row[info.inverse] != conj[r][c] {
                failures.push(TableFailure::InverseConsistency { row: r, class: c });
            }
        }
    }
    if deg_sum != rat(t.order) {
        failures.push(TableFailure::DegreeSum {
            sum: deg_sum.to_string(),
            order: t.order,
        });
    }
    ValidationReport { failures }
}

fn check_classes(t: &CharacterTable, sources: &[usize], target: usize) -> Result<()> {
    if sources.is_empty() {
        return Err(Error::Precondition("at least one source class is required".into()));
    }
    if let Some(&c) = sources.iter().chain([&target]).find(|&&c| c >= t.len()) {
        return Err(Error::Precondition(format!("class index {c} out of range")));
    }
    Ok(())
}

/// `Σ_χ χ(g_1)⋯χ(g_m)·χ(g⁻¹) / χ(1)^{m−1}`.
pub fn kappa(t: &CharacterTable, sources: &[usize], target: usize) -> Result<Cyclotomic> {
    check_classes(t, sources, target)?;
    let id = t.identity_class();
    let m = sources.len() as i32;
    let mut total = Cyclotomic::zero();
    for row in &t.irreducibles {
        let deg = row[id]
            .to_rational()
            .filter(|d| !d.is_zero())
            .ok_or_else(|| Error::InvalidTable("degree is not a nonzero rational".into()))?;
        let mut term = row[t.classes[target].inverse].clone();
        for &c in sources {
            term = &term * &row[c];
        }
        let scale = num_traits::pow::Pow::pow(deg, -(m - 1));
        total = &total + &term.scale(&scale);
    }
    Ok(total)
}

/// Number of tuples from the source classes whose product is a fixed
/// element of the target class:
/// `|G|^{m−1} / Π|C_G(g_i)| · κ`.
pub fn eta(t: &CharacterTable, sources: &[usize], target: usize) -> Result<BigInt> {
    let k = kappa(t, sources, target)?;
    let mut factor = BigRational::from_integer(BigInt::from(t.order).pow(sources.len() as u32 - 1));
    for &c in sources {
        factor /= rat(t.centralizer_order(c));
    }
    let value = k.scale(&factor);
    match value.to_integer() {
        Some(n) if !n.is_negative() => Ok(n),
        _ => Err(Error::CorruptTable(value.to_string())),
    }
}

/// Classes made of products of at most two involutions.
pub fn strongly_real_classes(t: &CharacterTable) -> Result<BTreeSet<usize>> {
    let invs = t.involution_classes();
    let mut out = BTreeSet::new();
    for c in 0..t.len() {
        let order = t.classes[c].element_order;
        if order <= 2 {
            out.insert(c);
            continue;
        }
        for &a in &invs {
            for &b in &invs {
                if !out.contains(&c) && eta(t, &[a, b], c)?.is_positive() {
                    out.insert(c);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    /// `levels[j]` holds the non-identity classes reachable as a product of
    /// exactly `j` involutions (index 0 is empty).
    pub levels: Vec<BTreeSet<usize>>,
    /// Least number of involutions giving each class, `None` if not within `k`.
    pub min_level: Vec<Option<u32>>,
    /// Identity: covered at 0 trivially, and at 2 once an involution exists.
    pub identity_class: usize,
    /// Least `j ≤ k` with every class a product of at most `j` involutions.
    pub width: Option<u32>,
}

/// Iterated class products with involution classes, `j = 1..=k`.
pub fn involution_cover(t: &CharacterTable, k: u32) -> Result<CoverReport> {
    let invs = t.involution_classes();
    if invs.is_empty() {
        return Err(Error::Precondition("table has no involution class".into()));
    }
    let id = t.identity_class();
    let mut levels = vec![BTreeSet::new()];
    let mut min_level: Vec<Option<u32>> = vec![None; t.len()];
    min_level[id] = Some(0);
    let mut current: BTreeSet<usize> = invs.iter().copied().collect();
    for j in 1..=k {
        if j > 1 {
            let mut next = BTreeSet::new();
            for c in 0..t.len() {
                'search: for &a in &current {
                    for &i in &invs {
                        if eta(t, &[a, i], c)?.is_positive() {
                            next.insert(c);
                            break 'search;
                        }
                    }
                }
            }
            current = next;
        }
        for &c in &current {
            if min_level[c].is_none() {
                min_level[c] = Some(j);
            }
        }
        levels.push(current.iter().copied().filter(|&c| c != id).collect());
    }
    let width = if min_level.iter().all(Option::is_some) {
        min_level.iter().flatten().copied().max()
    } else {
        None
    };
    Ok(CoverReport {
        levels,
        min_level,
        identity_class: id,
        width,
    })
}

/// `χ(1)` of each row as an integer, if all are.
pub fn integer_degrees(t: &CharacterTable) -> Option<Vec<BigInt>> {
    t.degrees().into_iter().map(Cyclotomic::to_integer).collect()
}
