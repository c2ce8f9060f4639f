//! Permutations of `{1..m}` with cycle-structure introspection.
//!
//! Points are 1-indexed in every public signature and in the text format.
//! Products follow the left-to-right convention: `p * q` sends `i` to
//! `q(p(i))`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    // 0-based images; images[i] is the image of point i + 1, minus one.
    images: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    pub degree: usize,
    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// smallest point.
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
    /// Number of nontrivial cycles of length congruent to 0, 1, 2, 3 mod 4.
    pub residue_counts: [usize; 4],
}

impl CycleDecomposition {
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        t.extend(std::iter::repeat(1).take(self.fixed_points.len()));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-indexed images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if seen[img - 1] {
                return Err(Error::RepeatedPoint { point: img });
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 1-indexed points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if seen[pt - 1] {
                    return Err(Error::RepeatedPoint { point: pt });
                }
                seen[pt - 1] = true;
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    /// Commas are accepted as separators inside a cycle.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut chars = text.trim().chars().peekable();
        if chars.peek().is_none() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        while let Some(c) = chars.next() {
            if c.is_whitespace() {
                continue;
            }
            if c != '(' {
                return Err(Error::Parse(format!("expected '(' but found {c:?}")));
            }
            let mut body = String::new();
            let mut closed = false;
            for c in chars.by_ref() {
                if c == ')' {
                    closed = true;
                    break;
                }
                if c == '(' {
                    return Err(Error::Parse("nested '('".into()));
                }
                body.push(c);
            }
            if !closed {
                return Err(Error::Parse("unbalanced parentheses".into()));
            }
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let pt: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
                cycle.push(pt);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-indexed point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-indexed image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    // Unchecked compose; callers guarantee equal degrees.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        let mut residue_counts = [0usize; 4];
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            if cycle.len() == 1 {
                fixed_points.push(start + 1);
            } else {
                residue_counts[cycle.len() % 4] += 1;
                cycles.push(cycle);
            }
        }
        CycleDecomposition {
            degree: m,
            cycles,
            fixed_points,
            residue_counts,
        }
    }

    pub fn parity(&self) -> Parity {
        let d = self.cycle_decomposition();
        let transpositions: usize = d.cycles.iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn order(&self) -> u64 {
        self.cycle_decomposition()
            .cycles
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Number of points moved.
    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 != j)
            .count()
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked
    /// product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.cycle_decomposition();
        if d.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &d.cycles {
            write!(f, "(")?;
            for (k, pt) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, m: usize) -> Permutation {
        Permutation::parse(s, m).unwrap()
    }

    #[test]
    fn parse_cycle() {
        let c = p("(1 2 3 4 5)", 5);
        assert_eq!(c.images(), vec![2, 3, 4, 5, 1]);
        assert!(p("()", 4).is_identity());
        assert_eq!(p("()", 4).degree(), 4);
        assert_eq!(p(" ( 1, 2 ) ( 3 4)", 4).images(), vec![2, 1, 4, 3]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse("(1 2)(2 3)", 3),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            Permutation::parse("(1 1)", 3),
            Err(Error::RepeatedPoint { point: 1 })
        );
        assert!(matches!(
            Permutation::parse("(1 6)", 5),
            Err(Error::PointOutOfRange { point: 6, degree: 5 })
        ));
        assert!(matches!(Permutation::parse("(1 2", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("1 2)", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("((1 2))", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(1 x)", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(0 1)", 5), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn compose_convention() {
        let x1 = p("(1 5)(2 4)", 5);
        let x2 = p("(2 5)(3 4)", 5);
        assert_eq!(x1.compose(&x2).unwrap(), p("(1 2 3 4 5)", 5));
        let c = p("(1 2 3)", 3);
        assert_eq!(&c * &c, p("(1 3 2)", 3));
        assert_eq!(&c * &Permutation::identity(3), c);
        assert!(matches!(
            c.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn decomposition() {
        let g = p("(1 2 3 4 5)(6 7 8)", 9);
        let d = g.cycle_decomposition();
        assert_eq!(d.cycles, vec![vec![1, 2, 3, 4, 5], vec![6, 7, 8]]);
        assert_eq!(d.fixed_points, vec![9]);
        assert_eq!(d.residue_counts, [0, 1, 0, 1]);

        let d = Permutation::identity(5).cycle_decomposition();
        assert!(d.cycles.is_empty());
        assert_eq!(d.fixed_points, vec![1, 2, 3, 4, 5]);
        assert_eq!(d.residue_counts, [0; 4]);

        let d = p("(1 2)(3 4)", 4).cycle_decomposition();
        assert_eq!(d.residue_counts[2], 2);
        assert_eq!((d.residue_counts[0] + d.residue_counts[2]) % 2, 0);

        // canonical form starts each cycle at its smallest point
        let d = p("(5 3 4)(2 1)", 5).cycle_decomposition();
        assert_eq!(d.cycles, vec![vec![1, 2], vec![3, 4, 5]]);
        assert_eq!(d.cycle_type(), vec![3, 2]);
    }

    #[test]
    fn parities() {
        assert_eq!(p("(1 2 3)", 3).parity(), Parity::Even);
        assert_eq!(p("(1 2)", 3).parity(), Parity::Odd);
        assert_eq!(p("(1 2 3 4)", 4).parity(), Parity::Odd);
        assert_eq!(Permutation::identity(1).parity(), Parity::Even);
    }

    #[test]
    fn display_and_order() {
        let g = p("(4 6)(3 1 2)", 7);
        assert_eq!(g.to_string(), "(1 2 3)(4 6)");
        assert_eq!(g.order(), 6);
        assert_eq!(g.pow(6), Permutation::identity(7));
        assert_eq!(g.pow(5), g.inverse());
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=12)
            .prop_flat_map(|m| Just((0..m).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(&v.iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap())
    }

    fn arb_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
        (1usize..=12).prop_flat_map(|m| {
            let v: Vec<usize> = (1..=m).collect();
            (Just(v.clone()).prop_shuffle(), Just(v).prop_shuffle()).prop_map(|(a, b)| {
                (
                    Permutation::from_images(&a).unwrap(),
                    Permutation::from_images(&b).unwrap(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(g in arb_perm()) {
            prop_assert!((&g * &g.inverse()).is_identity());
        }

        #[test]
        fn parity_is_homomorphism((a, b) in arb_pair()) {
            let lhs = (&a * &b).parity().is_even();
            prop_assert_eq!(lhs, a.parity().is_even() == b.parity().is_even());
        }

        #[test]
        fn print_parse_round_trip(g in arb_perm()) {
            prop_assert_eq!(Permutation::parse(&g.to_string(), g.degree()).unwrap(), g);
        }

        #[test]
        fn cycles_remultiply(g in arb_perm()) {
            let d = g.cycle_decomposition();
            let mut acc = Permutation::identity(g.degree());
            for c in &d.cycles {
                acc = &acc * &Permutation::from_cycles(g.degree(), &[c.clone()]).unwrap();
            }
            prop_assert_eq!(acc, g);
        }
    }
}
