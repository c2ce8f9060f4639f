use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Square matrix over a finite field, entries row-major.
#[derive(Clone)]
pub struct FFMatrix {
    field: Arc<Field>,
    n: usize,
    entries: Vec<Elem>,
}

impl PartialEq for FFMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries && *self.field == *other.field
    }
}
impl Eq for FFMatrix {}

impl Hash for FFMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for FFMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FFMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.entries).cmp(&(other.n, &other.entries))
    }
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl FFMatrix {
    pub fn new(field: Arc<Field>, n: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Precondition(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|&e| e as u64 >= field.size()) {
            return Err(Error::Precondition("entry outside the field".into()));
        }
        Ok(FFMatrix { field, n, entries })
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: Arc<Field>, n: usize, lambda: Elem) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = lambda;
        }
        FFMatrix { field, n, entries }
    }

    pub fn diag(field: Arc<Field>, d: &[Elem]) -> Self {
        let n = d.len();
        let mut entries = vec![0; n * n];
        for (i, &x) in d.iter().enumerate() {
            entries[i * n + i] = x;
        }
        FFMatrix { field, n, entries }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn mul(&self, other: &FFMatrix) -> Result<FFMatrix> {
        if self.n != other.n || *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &FFMatrix) -> FFMatrix {
        let (n, f) = (self.n, &self.field);
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b != 0 {
                        out[i * n + j] = f.add(out[i * n + j], f.mul(a, b));
                    }
                }
            }
        }
        FFMatrix {
            field: self.field.clone(),
            n,
            entries: out,
        }
    }

    /// `self − λ·I`.
    pub fn minus_scalar(&self, lambda: Elem) -> FFMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let e = &mut m.entries[i * self.n + i];
            *e = self.field.sub(*e, lambda);
        }
        m
    }

    pub fn rank(&self) -> usize {
        let (n, f) = (self.n, &self.field);
        let mut a = self.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| a[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                a.swap(rank * n + j, piv * n + j);
            }
            let inv = f.inv(a[rank * n + col]).unwrap();
            for r in 0..n {
                if r == rank || a[r * n + col] == 0 {
                    continue;
                }
                let factor = f.mul(a[r * n + col], inv);
                for j in col..n {
                    let v = f.mul(factor, a[rank * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Dimension of the kernel of `self − λ·I`.
    pub fn kernel_dim(&self, lambda: Elem) -> usize {
        self.n - self.minus_scalar(lambda).rank()
    }

    pub fn determinant(&self) -> Elem {
        let (n, f) = (self.n, &self.field);
        let mut a = self.entries.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(col * n + j, piv * n + j);
                }
                det = f.neg(det);
            }
            let p = a[col * n + col];
            det = f.mul(det, p);
            let inv = f.inv(p).unwrap();
            for r in col + 1..n {
                if a[r * n + col] == 0 {
                    continue;
                }
                let factor = f.mul(a[r * n + col], inv);
                for j in col..n {
                    let v = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FFMatrix> {
        let (n, f) = (self.n, &self.field);
        let w = 2 * n;
        let mut a = vec![0; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.get(i, j);
            }
            a[i * w + n + i] = 1;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * w + col] != 0)?;
            for j in 0..w {
                a.swap(col * w + j, piv * w + j);
            }
            let inv = f.inv(a[col * w + col]).unwrap();
            for j in 0..w {
                a[col * w + j] = f.mul(a[col * w + j], inv);
            }
            for r in 0..n {
                if r == col || a[r * w + col] == 0 {
                    continue;
                }
                let factor = a[r * w + col];
                for j in 0..w {
                    let v = f.mul(factor, a[col * w + j]);
                    a[r * w + j] = f.sub(a[r * w + j], v);
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| a[i * w + n..i * w + w].to_vec())
            .collect();
        Some(FFMatrix {
            field: self.field.clone(),
            n,
            entries,
        })
    }

    /// Entrywise `x ↦ x^q`.
    pub fn frobenius(&self, q: u64) -> FFMatrix {
        FFMatrix {
            field: self.field.clone(),
            n: self.n,
            entries: self.entries.iter().map(|&x| self.field.frobenius(x, q)).collect(),
        }
    }

    pub fn transpose(&self) -> FFMatrix {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.entries[(k % n) * n + k / n]).collect();
        FFMatrix {
            field: self.field.clone(),
            n,
            entries,
        }
    }

    /// Conjugate transpose with respect to `x ↦ x^q`.
    pub fn adjoint(&self, q: u64) -> FFMatrix {
        self.transpose().frobenius(q)
    }

    /// True iff `adjoint(M)·M = I` (standard Hermitian form).
    pub fn is_unitary(&self, q: u64) -> bool {
        self.adjoint(q).mul_unchecked(self).is_identity()
    }

    pub fn kronecker(&self, other: &FFMatrix) -> Result<FFMatrix> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let f = &self.field;
        let mut entries = vec![0; n * n];
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x == 0 {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        entries[(i * b + k) * n + j * b + l] = f.mul(x, other.get(k, l));
                    }
                }
            }
        }
        Ok(FFMatrix {
            field: self.field.clone(),
            n,
            entries,
        })
    }

    pub fn pow(&self, mut e: u64) -> FFMatrix {
        let mut acc = FFMatrix::identity(self.field.clone(), self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Rows of space-separated entries; see [`Field::format`].
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut s = format!("GF({}^{}) {}\n", f.characteristic(), f.degree(), self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| f.format(self.get(i, j))).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the matrix text format: a header `GF(p^k) n` followed by `n`
    /// rows of `n` entries. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<FFMatrix> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let (field, n) = parse_header(header)?;
        let mut entries = Vec::with_capacity(n * n);
        for line in lines {
            for tok in line.split_whitespace() {
                entries.push(field.parse(tok)?);
            }
        }
        if entries.len() != n * n {
            return Err(Error::Parse(format!(
                "expected {} entries, found {}",
                n * n,
                entries.len()
            )));
        }
        FFMatrix::new(field, n, entries)
    }
}

/// Parses `GF(p^k) n` (or `GF(p) n`).
pub fn parse_header(header: &str) -> Result<(Arc<Field>, usize)> {
    let bad = || Error::Parse(format!("bad matrix header {header:?}"));
    let rest = header.trim().strip_prefix("GF(").ok_or_else(bad)?;
    let (field_part, dim) = rest.split_once(')').ok_or_else(bad)?;
    let (p, k) = match field_part.split_once('^') {
        Some((p, k)) => (p.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?),
        None => (field_part.trim().parse().map_err(|_| bad())?, 1),
    };
    let n: usize = dim.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    Ok((Field::new(p, k)?, n))
}

/// All of `GU_k(q)` in canonical order, built row by row from orthonormal
/// vectors. Restricted to `k ≤ 3`, `q ≤ 3`.
pub fn enumerate_unitary_group(field: &Arc<Field>, k: usize) -> Result<Vec<FFMatrix>> {
    let q = field.half_order()?;
    if k == 0 || k > 3 || q > 3 {
        return Err(Error::OutOfRange(format!(
            "GU_{k}({q}) enumeration is limited to k <= 3 and q <= 3"
        )));
    }
    let f = field;
    let form = |u: &[Elem], v: &[Elem]| {
        u.iter()
            .zip(v)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, f.frobenius(b, q))))
    };
    let size = f.size() as u32;
    let mut units = Vec::new();
    for code in 0..(size as u64).pow(k as u32) {
        let mut c = code;
        let v: Vec<Elem> = (0..k)
            .map(|_| {
                let x = (c % size as u64) as Elem;
                c /= size as u64;
                x
            })
            .rev()
            .collect();
        if form(&v, &v) == 1 {
            units.push(v);
        }
    }
    units.sort();
    let mut out = Vec::new();
    let mut rows: Vec<&Vec<Elem>> = Vec::with_capacity(k);
    fn extend<'a>(
        units: &'a [Vec<Elem>],
        rows: &mut Vec<&'a Vec<Elem>>,
        k: usize,
        form: &dyn Fn(&[Elem], &[Elem]) -> Elem,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if rows.len() == k {
            out.push(rows.iter().flat_map(|r| r.iter().copied()).collect());
            return;
        }
        for u in units {
            if rows.iter().all(|r| form(r, u) == 0) {
                rows.push(u);
                extend(units, rows, k, form, out);
                rows.pop();
            }
        }
    }
    let mut raw = Vec::new();
    extend(&units, &mut rows, k, &form, &mut raw);
    for entries in raw {
        out.push(FFMatrix {
            field: field.clone(),
            n: k,
            entries,
        });
    }
    out.sort();
    Ok(out)
}
