//! Python bindings for `iwidth`.

use std::collections::BTreeMap;

use iwidth::chartab;
use iwidth::lie::{self, Partition, Variant};
use iwidth::oracle::{self, groups};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: iwidth::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Permutation", module = "iwidth_py", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPermutation(iwidth::Permutation);

#[pymethods]
impl PyPermutation {
    /// Parses cycle notation, e.g. `Permutation("(1 2 3)(4 5)", 6)`.
    #[new]
    fn new(text: &str, degree: usize) -> PyResult<Self> {
        iwidth::Permutation::parse(text, degree).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        iwidth::Permutation::from_images(&images).map(Self).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn is_even(&self) -> bool {
        self.0.parity().is_even()
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.0.cycle_decomposition().cycle_type()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `a * b` applies `a` first.
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?}, {})", self.0.to_string(), self.0.degree())
    }
}

/// At most three even involutions whose product (left to right) is `g`.
#[pyfunction]
fn decompose(g: &PyPermutation) -> PyResult<Vec<PyPermutation>> {
    let f = iwidth::decompose(&g.0).map_err(err)?;
    Ok(f.factors.into_iter().map(PyPermutation).collect())
}

#[pyclass(name = "Cyclotomic", module = "iwidth_py", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyCyclotomic(iwidth::Cyclotomic);

#[pymethods]
impl PyCyclotomic {
    #[new]
    fn new(n: i64) -> Self {
        Self(iwidth::Cyclotomic::from_integer(n))
    }

    /// `ζ_n^k`.
    #[staticmethod]
    fn zeta(n: u64, k: i64) -> Self {
        Self(iwidth::Cyclotomic::zeta(n, k))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        iwidth::Cyclotomic::from_json(&v).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn conductor(&self) -> u64 {
        self.0.conductor()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn is_real(&self) -> bool {
        self.0.is_real()
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    /// Complex approximation.
    fn __complex__(&self) -> (f64, f64) {
        self.0.approximate()
    }

    fn __add__(&self, o: &Self) -> Self {
        Self(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        Self(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        Self(&self.0 * &o.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Cyclotomic({})", self.0)
    }
}

#[pyclass(name = "CharacterTable", module = "iwidth_py", frozen)]
pub struct PyCharacterTable(chartab::CharacterTable);

#[pymethods]
impl PyCharacterTable {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        chartab::CharacterTable::from_json_str(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        chartab::parse_table(path.as_ref()).map(Self).map_err(err)
    }

    /// Burnside-Dixon table of a named group (A3..A10, PSL27, M11).
    #[staticmethod]
    fn compute(name: &str) -> PyResult<Self> {
        let g = groups::named(name).map_err(err)?;
        oracle::dixon_character_table(&g, &g.conjugacy_classes(), name)
            .map(Self)
            .map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json_string()
    }

    #[getter]
    fn group_name(&self) -> String {
        self.0.group_name.clone()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.0.order
    }

    fn class_names(&self) -> Vec<String> {
        self.0.classes.iter().map(|c| c.name.clone()).collect()
    }

    fn value(&self, row: usize, class_name: &str) -> PyResult<PyCyclotomic> {
        let c = self.0.class_index(class_name).map_err(err)?;
        let r = self
            .0
            .irreducibles
            .get(row)
            .ok_or_else(|| PyValueError::new_err(format!("no row {row}")))?;
        Ok(PyCyclotomic(r[c].clone()))
    }

    fn degrees(&self) -> Vec<String> {
        self.0.degrees().iter().map(|d| d.to_string()).collect()
    }

    /// Failure messages; empty when the table is consistent.
    fn validate(&self) -> Vec<String> {
        chartab::validate_table(&self.0)
            .failures
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn eta(&self, classes: Vec<String>, target: &str) -> PyResult<BigInt> {
        let (src, tgt) = self.indices(&classes, target)?;
        chartab::eta(&self.0, &src, tgt).map_err(err)
    }

    fn kappa(&self, classes: Vec<String>, target: &str) -> PyResult<PyCyclotomic> {
        let (src, tgt) = self.indices(&classes, target)?;
        chartab::kappa(&self.0, &src, tgt).map(PyCyclotomic).map_err(err)
    }

    fn strongly_real_classes(&self) -> PyResult<Vec<String>> {
        let s = chartab::strongly_real_classes(&self.0).map_err(err)?;
        Ok(s.into_iter().map(|c| self.0.classes[c].name.clone()).collect())
    }

    /// Least number of involutions covering every class, `None` beyond `k`.
    fn cover_width(&self, k: u32) -> PyResult<Option<u32>> {
        chartab::involution_cover(&self.0, k).map(|r| r.width).map_err(err)
    }
}

impl PyCharacterTable {
    fn indices(&self, classes: &[String], target: &str) -> PyResult<(Vec<usize>, usize)> {
        let src = classes
            .iter()
            .map(|n| self.0.class_index(n))
            .collect::<iwidth::Result<Vec<_>>>()
            .map_err(err)?;
        Ok((src, self.0.class_index(target).map_err(err)?))
    }
}

/// Group width and the width of each class, by brute force.
#[pyfunction]
fn involution_width(name: &str) -> PyResult<(u32, BTreeMap<String, u32>)> {
    let g = groups::named(name).map_err(err)?;
    let cd = g.conjugacy_classes();
    let w = oracle::involution_width_oracle(&g, &cd).map_err(err)?;
    let per = w.class_names.iter().cloned().zip(w.class_widths.iter().copied()).collect();
    Ok((w.group_width, per))
}

#[pyfunction]
#[pyo3(signature = (parts, q, variant = "unitary"))]
fn unipotent_degree(parts: Vec<usize>, q: u64, variant: &str) -> PyResult<BigInt> {
    let lam = Partition::new(parts).map_err(err)?;
    let v: Variant = variant.parse().map_err(err)?;
    Ok(lam.unipotent_degree(q, v))
}

#[pyfunction]
fn ppd(q: u64, n: u32) -> PyResult<Vec<u64>> {
    lie::ppd(q, n).map_err(err)
}

#[pyfunction]
fn torus_order(shape: Vec<usize>, q: u64) -> PyResult<BigInt> {
    lie::torus_order_unitary(&shape, q).map_err(err)
}

/// Exact value of a constituent-degree row as a string (`a` or `a/b`).
#[pyfunction]
fn table1_value(row: &str, n: u32, q: u64) -> PyResult<String> {
    lie::table1_value(row, n, q).map(|v| v.to_string()).map_err(err)
}

#[pyfunction]
fn table1_rows() -> Vec<&'static str> {
    lie::row_ids()
}

/// Closed forms against direct dual-pair evaluation, one line each.
#[pyfunction]
fn reconcile(n: usize, q: u64) -> PyResult<Vec<String>> {
    let r = lie::reconcile(n, q).map_err(err)?;
    Ok(r.lines.iter().map(ToString::to_string).collect())
}

#[pymodule]
fn iwidth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyCyclotomic>()?;
    m.add_class::<PyCharacterTable>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(involution_width, m)?)?;
    m.add_function(wrap_pyfunction!(unipotent_degree, m)?)?;
    m.add_function(wrap_pyfunction!(ppd, m)?)?;
    m.add_function(wrap_pyfunction!(torus_order, m)?)?;
    m.add_function(wrap_pyfunction!(table1_value, m)?)?;
    m.add_function(wrap_pyfunction!(table1_rows, m)?)?;
    m.add_function(wrap_pyfunction!(reconcile, m)?)?;
    Ok(())
}
