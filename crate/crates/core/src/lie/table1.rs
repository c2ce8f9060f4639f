//! Degrees `D_α(1)` of the constituents of the Weil character restricted
//! along `GU_3(q) × GU_n(q)`, one row per family of `α ∈ Irr(GU_3(q))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

pub struct Table1Row {
    pub id: &'static str,
    /// The character `α`, written `χ_{degree}^{(parameters)}`.
    pub label: &'static str,
    formula: fn(&Terms) -> BigRational,
}

struct Terms {
    q: BigInt,
    n: u32,
}

impl Terms {
    fn qp(&self, e: u32) -> BigInt {
        self.q.pow(e)
    }
    /// `q^{n−s} + sign`.
    fn f(&self, s: u32, sign: i64) -> BigInt {
        self.q.pow(self.n - s) + sign
    }
    fn r(num: BigInt, den: BigInt) -> BigRational {
        BigRational::new(num, den)
    }
    fn base(&self) -> BigInt {
        self.f(0, 1) * self.f(1, -1)
    }
    fn q3p1(&self) -> BigInt {
        self.qp(3) + 1
    }
    fn q2m1(&self) -> BigInt {
        self.qp(2) - 1
    }
    fn qp1(&self) -> BigInt {
        &self.q + 1
    }
    /// `q(q^{n−1} − 1)/(q + 1)`.
    fn weil_tail(&self) -> BigRational {
        Self::r(&self.q * self.f(1, -1), self.qp1())
    }
    /// `(q^n + 1)/(q + 1)`.
    fn linear_tail(&self) -> BigRational {
        Self::r(self.f(0, 1), self.qp1())
    }
}

pub const TABLE1_ROWS: &[Table1Row] = &[
    Table1Row {
        id: "1-q1",
        label: "χ_1^(q+1)",
        formula: |t| {
            Terms::r(
                t.qp(3) * t.base() * t.f(5, -1),
                t.q3p1() * t.q2m1() * t.qp1(),
            ) + t.weil_tail()
        },
    },
    Table1Row {
        id: "1-t",
        label: "χ_1^(t)",
        formula: |t| Terms::r(t.base() * t.f(2, 1), t.q3p1() * t.q2m1() * t.qp1()),
    },
    Table1Row {
        id: "q3-q1",
        label: "χ_{q^3}^(q+1)",
        formula: |t| {
            Terms::r(
                t.qp(6) * t.f(1, -1) * t.f(2, 1) * t.f(4, 1),
                t.q3p1() * t.q2m1() * t.qp1(),
            ) + t.weil_tail()
        },
    },
    Table1Row {
        id: "q3-t",
        label: "χ_{q^3}^(t)",
        formula: |t| Terms::r(t.qp(3) * t.base() * t.f(2, 1), t.q3p1() * t.q2m1() * t.qp1()),
    },
    Table1Row {
        id: "q2q-q1",
        label: "χ_{q^2-q}^(q+1)",
        formula: |t| {
            Terms::r(
                t.qp(4) * t.f(0, 1) * t.f(2, 1) * t.f(4, 1),
                t.q3p1() * t.qp1().pow(2),
            )
        },
    },
    Table1Row {
        id: "q2q-t",
        label: "χ_{q^2-q}^(t)",
        formula: |t| Terms::r(&t.q * t.base() * t.f(2, 1), t.q3p1() * t.qp1().pow(2)),
    },
    Table1Row {
        id: "q2q1-t-q1",
        label: "χ_{q^2-q+1}^(t,q+1)",
        formula: |t| {
            Terms::r(t.qp(2) * t.base() * t.f(4, 1), t.q2m1() * t.qp1().pow(2)) + t.linear_tail()
        },
    },
    Table1Row {
        id: "q2q1-q1-u",
        label: "χ_{q^2-q+1}^(q+1,u)",
        formula: |t| Terms::r(&t.q * t.base() * t.f(3, -1), t.q2m1() * t.qp1().pow(2)),
    },
    Table1Row {
        id: "q2q1-t-u",
        label: "χ_{q^2-q+1}^(t,u)",
        formula: |t| Terms::r(t.base() * t.f(2, 1), t.q2m1() * t.qp1().pow(2)),
    },
    Table1Row {
        id: "qq2q1-t-q1",
        label: "χ_{q(q^2-q+1)}^(t,q+1)",
        formula: |t| {
            Terms::r(t.qp(3) * t.base() * t.f(3, -1), t.q2m1() * t.qp1().pow(2)) + t.linear_tail()
        },
    },
    Table1Row {
        id: "qq2q1-q1-u",
        label: "χ_{q(q^2-q+1)}^(q+1,u)",
        formula: |t| Terms::r(t.qp(2) * t.base() * t.f(3, -1), t.q2m1() * t.qp1().pow(2)),
    },
    Table1Row {
        id: "qq2q1-t-u",
        label: "χ_{q(q^2-q+1)}^(t,u)",
        formula: |t| Terms::r(&t.q * t.base() * t.f(2, 1), t.q2m1() * t.qp1().pow(2)),
    },
    Table1Row {
        id: "q1q2q1-t-u-q1",
        label: "χ_{(q-1)(q^2-q+1)}^(t,u,q+1)",
        formula: |t| Terms::r(&t.q * t.base() * t.f(3, -1), t.qp1().pow(3)),
    },
    Table1Row {
        id: "q1q2q1-t-u-v",
        label: "χ_{(q-1)(q^2-q+1)}^(t,u,v)",
        formula: |t| Terms::r(t.base() * t.f(2, 1), t.qp1().pow(3)),
    },
    Table1Row {
        id: "q31-q1-u",
        label: "χ_{q^3+1}^(q+1,u)",
        formula: |t| Terms::r(&t.q * t.base() * t.f(3, -1), t.q2m1() * t.qp1()),
    },
    Table1Row {
        id: "q31-t-u",
        label: "χ_{q^3+1}^(t,u)",
        formula: |t| Terms::r(t.base() * t.f(2, 1), t.q2m1() * t.qp1()),
    },
    Table1Row {
        id: "q1q21-t",
        label: "χ_{(q+1)(q^2-1)}^(t)",
        formula: |t| Terms::r(t.base() * t.f(2, 1), t.q3p1()),
    },
];

pub fn table1_row(id: &str) -> Result<&'static Table1Row> {
    TABLE1_ROWS.iter().find(|r| r.id == id).ok_or_else(|| {
        let ids: Vec<&str> = TABLE1_ROWS.iter().map(|r| r.id).collect();
        Error::Precondition(format!("unknown row {id:?}; rows: {}", ids.join(" ")))
    })
}

/// The row's formula as an exact rational, before any integrality check.
pub fn table1_value(id: &str, n: u32, q: u64) -> Result<BigRational> {
    let row = table1_row(id)?;
    if n < 7 || n % 2 == 0 || q < 2 {
        return Err(Error::Precondition(format!("need odd n >= 7 and q >= 2, got ({n}, {q})")));
    }
    Ok((row.formula)(&Terms { q: BigInt::from(q), n }))
}

/// `D_α(1)` for the row; errors unless the formula gives a positive integer.
pub fn table1_degree(id: &str, n: u32, q: u64) -> Result<BigInt> {
    let v = table1_value(id, n, q)?;
    if v.is_integer() && v.is_positive() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral(format!("row {id} at (n, q) = ({n}, {q}) gives {v}")))
    }
}

pub fn row_ids() -> Vec<&'static str> {
    TABLE1_ROWS.iter().map(|r| r.id).collect()
}
