//! Standard generating sets for the groups used in tests and the CLI.

use super::group::SmallGroup;
use crate::error::{Error, Result};
use crate::ff::{enumerate_unitary_group, FFMatrix, Field};
use crate::permutation::Permutation;

const CAP: usize = 200_000;

/// Generators of `A_m`: `(1 2 ⋯ m)` or `(2 3 ⋯ m)` by parity of `m`,
/// together with `(1 2 3)`. For `m = 5` the pair `(1 2 3 4 5)`, `(3 4 5)`.
pub fn alternating_generators(m: usize) -> Result<Vec<Permutation>> {
    if m < 3 {
        return Err(Error::InvalidDegree(m));
    }
    if m == 5 {
        return Ok(vec![
            Permutation::parse("(1 2 3 4 5)", 5)?,
            Permutation::parse("(3 4 5)", 5)?,
        ]);
    }
    let long: Vec<usize> = if m % 2 == 1 { (1..=m).collect() } else { (2..=m).collect() };
    Ok(vec![
        Permutation::from_cycles(m, &[long])?,
        Permutation::from_cycles(m, &[vec![1, 2, 3]])?,
    ])
}

pub fn alternating(m: usize) -> Result<SmallGroup<Permutation>> {
    SmallGroup::enumerate(&alternating_generators(m)?, CAP)
}

/// `PSL(2,7)` on the projective line `{0,…,6,∞}` (points `x+1`, `∞ = 8`):
/// `x ↦ x+1` and `x ↦ −1/x`.
pub fn psl27_generators() -> Vec<Permutation> {
    vec![
        Permutation::parse("(1 2 3 4 5 6 7)", 8).unwrap(),
        Permutation::parse("(1 8)(2 7)(3 4)(5 6)", 8).unwrap(),
    ]
}

pub fn psl27() -> Result<SmallGroup<Permutation>> {
    SmallGroup::enumerate(&psl27_generators(), CAP)
}

/// Standard generators of `M11` on 11 points.
pub fn m11_generators() -> Vec<Permutation> {
    vec![
        Permutation::parse("(2 10)(4 11)(5 7)(8 9)", 11).unwrap(),
        Permutation::parse("(1 4 3 8)(2 5 6 9)", 11).unwrap(),
    ]
}

pub fn m11() -> Result<SmallGroup<Permutation>> {
    SmallGroup::enumerate(&m11_generators(), CAP)
}

/// `GU_k(q)` as a matrix group, `k ≤ 3`, `q ≤ 3`.
pub fn unitary(k: usize, q: u64) -> Result<SmallGroup<FFMatrix>> {
    let (p, e) = crate::arith::prime_power(q)
        .ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    let field = Field::new(p, 2 * e)?;
    SmallGroup::from_elements(&enumerate_unitary_group(&field, k)?)
}

/// Named group lookup used by the CLI: `A5`…`A9`, `PSL27`, `M11`.
pub fn named(name: &str) -> Result<SmallGroup<Permutation>> {
    let upper = name.to_ascii_uppercase();
    match upper.as_str() {
        "PSL27" | "PSL(2,7)" | "L2(7)" => psl27(),
        "M11" => m11(),
        _ => match upper.strip_prefix('A').and_then(|m| m.parse().ok()) {
            Some(m) if (3..=10).contains(&m) => alternating(m),
            _ => Err(Error::Precondition(format!(
                "unknown group {name:?}; known: A3..A10, PSL27, M11"
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let orders: Vec<usize> = (3..=8).map(|m| alternating(m).unwrap().order()).collect();
        assert_eq!(orders, vec![3, 12, 60, 360, 2520, 20160]);
        assert_eq!(psl27().unwrap().order(), 168);
        assert_eq!(m11().unwrap().order(), 7920);
        assert_eq!(unitary(2, 2).unwrap().order(), 18);
        assert_eq!(named("a6").unwrap().order(), 360);
        assert!(named("J1").is_err());
    }

    #[test]
    fn m11_classes() {
        let g = m11().unwrap();
        let cd = g.conjugacy_classes();
        assert_eq!(cd.len(), 10);
        assert_eq!(
            cd.names,
            vec!["1A", "2A", "3A", "4A", "5A", "6A", "8A", "8B", "11A", "11B"]
        );
        assert_eq!(cd.sizes, vec![1, 165, 440, 990, 1584, 1320, 990, 990, 720, 720]);
    }
}
