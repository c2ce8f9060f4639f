use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::prime_power;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::ff::{norm_one_generator, Elem, FFMatrix, Field};

/// Data for evaluating Weil characters of `GU_n(q)`.
#[derive(Clone, Debug)]
pub struct WeilContext {
    pub n: usize,
    pub q: u64,
    pub field: Arc<Field>,
    /// Norm-one generator `δ = γ^{q−1}` of order `q + 1`.
    pub delta: Elem,
}

impl WeilContext {
    pub fn new(n: usize, q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let field = Field::new(p, 2 * e)?;
        let delta = norm_one_generator(&field)?;
        Ok(WeilContext { n, q, field, delta })
    }

    /// `ε = ζ_{q+1}`.
    pub fn epsilon_conductor(&self) -> u64 {
        self.q + 1
    }

    /// `s = diag(1, …, 1, δ)`.
    pub fn s(&self) -> FFMatrix {
        let mut d = vec![1; self.n];
        d[self.n - 1] = self.delta;
        FFMatrix::diag(self.field.clone(), &d)
    }

    fn check(&self, g: &FFMatrix) -> Result<()> {
        if g.dim() != self.n || **g.field() != *self.field {
            return Err(Error::Precondition(format!(
                "expected an {}x{} matrix over {:?}",
                self.n, self.n, self.field
            )));
        }
        Ok(())
    }
}

fn neg_q_pow(q: u64, e: usize) -> BigInt {
    (-BigInt::from(q)).pow(e as u32)
}

/// `ζ(g) = (−1)^m (−q)^{dim Ker(g − 1)}` for an `m × m` matrix `g`.
pub fn weil_zeta_dim(g: &FFMatrix, q: u64) -> BigInt {
    let sign = if g.dim() % 2 == 0 { 1 } else { -1 };
    neg_q_pow(q, g.kernel_dim(1)) * sign
}

pub fn weil_zeta(ctx: &WeilContext, g: &FFMatrix) -> Result<BigInt> {
    ctx.check(g)?;
    Ok(weil_zeta_dim(g, ctx.q))
}

/// `(−1)^n/(q+1) Σ_{l=0}^{q} ε^{−tl} (−q)^{dim Ker(g − δ^{−l})}`.
pub fn weil_chi(ctx: &WeilContext, t: u64, g: &FFMatrix) -> Result<Cyclotomic> {
    ctx.check(g)?;
    let q = ctx.q;
    if t > q {
        return Err(Error::Precondition(format!("t must lie in 0..={q}, got {t}")));
    }
    let f = &ctx.field;
    let delta_inv = f.inv(ctx.delta).expect("δ is nonzero");
    let m = q + 1;
    let mut terms = Vec::with_capacity(m as usize);
    let mut lambda = 1;
    for l in 0..m {
        let dim = g.kernel_dim(lambda);
        let exp = -((t * l) as i64);
        terms.push((exp, BigRational::from_integer(neg_q_pow(q, dim))));
        lambda = f.mul(lambda, delta_inv);
    }
    let sign = if ctx.n % 2 == 0 { 1 } else { -1 };
    let scale = BigRational::new(BigInt::from(sign), BigInt::from(m));
    Ok(Cyclotomic::from_terms(m, &terms).scale(&scale))
}
