//! Constructive factorization of even permutations into at most three
//! involutions of the alternating group.
//!
//! Every template below is written on the points `1..=n` of a cycle
//! `(1 2 … n)` and transported to an actual cycle by sending template point
//! `i` to the `i`-th point of the cycle (read from its smallest element).

use crate::error::{Error, Result};
use crate::permutation::{CycleDecomposition, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionFactorization {
    pub degree: usize,
    pub factors: Vec<Permutation>,
    pub target: Permutation,
}

impl InvolutionFactorization {
    /// Recomposes the factors left to right.
    pub fn product(&self) -> Permutation {
        self.factors
            .iter()
            .fold(Permutation::identity(self.degree), |acc, f| &acc * f)
    }

    /// True iff every factor is an even involution, there are at most three,
    /// and they recompose to the target.
    pub fn verify(&self) -> bool {
        self.factors.len() <= 3
            && self
                .factors
                .iter()
                .all(|f| f.order() == 2 && f.parity().is_even())
            && self.product() == self.target
    }
}

// Transpositions (a b) on template points, transported along `cycle`.
fn transport(cycle: &[usize], pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .map(|&(a, b)| (cycle[a - 1], cycle[b - 1]))
        .collect()
}

fn from_transpositions(degree: usize, ts: &[(usize, usize)]) -> Permutation {
    let cycles: Vec<Vec<usize>> = ts.iter().map(|&(a, b)| vec![a, b]).collect();
    Permutation::from_cycles(degree, &cycles).expect("disjoint transpositions")
}

// x1 = (1 n)(2 n-1)…((n-1)/2 (n+3)/2)
fn x1_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=(n - 1) / 2).map(|i| (i, n + 1 - i)).collect()
}

// x2 = (2 n)(3 n-1)…((n+1)/2 (n+3)/2)
fn x2_pairs(n: usize) -> Vec<(usize, usize)> {
    (2..=(n + 1) / 2).map(|i| (i, n + 2 - i)).collect()
}

// y1 = (1 n-1)(2 n-2)…((n-2)/2 (n+2)/2); empty for n = 2
fn y1_pairs(n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        return Vec::new();
    }
    (1..=(n - 2) / 2).map(|i| (i, n - i)).collect()
}

// y2 = z1 = (1 n)(2 n-1)…(n/2 (n+2)/2)
fn y2_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n / 2).map(|i| (i, n + 1 - i)).collect()
}

// z2 = (2 n)(3 n-1)…(n/2 (n+4)/2); empty for n = 2
fn z2_pairs(n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        return Vec::new();
    }
    (2..=n / 2).map(|i| (i, n + 2 - i)).collect()
}

fn check_cycle(degree: usize, cycle: &[usize]) -> Result<()> {
    let mut seen = vec![false; degree + 1];
    for &pt in cycle {
        if pt == 0 || pt > degree {
            return Err(Error::PointOutOfRange { point: pt, degree });
        }
        if seen[pt] {
            return Err(Error::RepeatedPoint { point: pt });
        }
        seen[pt] = true;
    }
    Ok(())
}

/// Odd cycle `c` of length `n ≥ 3` written as `x1 · x2` with `x1, x2` of
/// order at most two. Both factors are even when `n ≡ 1 (mod 4)` and odd when
/// `n ≡ 3 (mod 4)`.
pub fn pair_for_odd_cycle(degree: usize, cycle: &[usize]) -> Result<(Permutation, Permutation)> {
    let n = cycle.len();
    if n < 3 || n % 2 == 0 {
        return Err(Error::Precondition(format!(
            "odd cycle of length at least 3 required, got length {n}"
        )));
    }
    check_cycle(degree, cycle)?;
    Ok((
        from_transpositions(degree, &transport(cycle, &x1_pairs(n))),
        from_transpositions(degree, &transport(cycle, &x2_pairs(n))),
    ))
}

/// Two disjoint even cycles `c, c′` written as `t1 · t2 = c·c′` with even
/// involutions `t1, t2`. A factor may be the identity (only when both cycles
/// are transpositions).
pub fn pair_for_even_pair(
    degree: usize,
    c: &[usize],
    c2: &[usize],
) -> Result<(Permutation, Permutation)> {
    let (n, n2) = (c.len(), c2.len());
    if n < 2 || n % 2 == 1 || n2 < 2 || n2 % 2 == 1 {
        return Err(Error::Precondition(format!(
            "even cycles required, got lengths {n} and {n2}"
        )));
    }
    check_cycle(degree, c)?;
    check_cycle(degree, c2)?;
    if let Some(&pt) = c.iter().find(|pt| c2.contains(pt)) {
        return Err(Error::RepeatedPoint { point: pt });
    }
    // 0 mod 4 uses the y-pair, 2 mod 4 the z-pair.
    let halves = |len: usize| {
        if len % 4 == 0 {
            (y1_pairs(len), y2_pairs(len))
        } else {
            (y2_pairs(len), z2_pairs(len))
        }
    };
    let (a1, a2) = halves(n);
    let (b1, b2) = halves(n2);
    let mut t1 = transport(c, &a1);
    t1.extend(transport(c2, &b1));
    let mut t2 = transport(c, &a2);
    t2.extend(transport(c2, &b2));
    Ok((from_transpositions(degree, &t1), from_transpositions(degree, &t2)))
}

/// A cycle of length `n ≡ 3 (mod 4)`, `n ≥ 7`, as a product of three even
/// involutions supported on the cycle.
pub fn triple_for_3mod4(
    degree: usize,
    cycle: &[usize],
) -> Result<(Permutation, Permutation, Permutation)> {
    let n = cycle.len();
    if n % 4 != 3 || n < 7 {
        return Err(Error::Precondition(format!(
            "cycle length must be 3 mod 4 and at least 7, got {n}"
        )));
    }
    check_cycle(degree, cycle)?;
    let mid = ((n - 1) / 2, (n + 3) / 2);
    let end = (2, n);
    // x1 already ends with `mid`; x2 already starts with `end`.
    let s1: Vec<_> = x1_pairs(n).into_iter().filter(|&t| t != mid).collect();
    let s2 = vec![mid, end];
    let s3: Vec<_> = x2_pairs(n).into_iter().filter(|&t| t != end).collect();
    Ok((
        from_transpositions(degree, &transport(cycle, &s1)),
        from_transpositions(degree, &transport(cycle, &s2)),
        from_transpositions(degree, &transport(cycle, &s3)),
    ))
}

/// A cycle of length `n ≡ 3 (mod 4)` together with two points it fixes,
/// written as a product of two even involutions using `(f1 f2)` to fix the
/// parity.
pub fn pair_with_fixed_points(
    degree: usize,
    cycle: &[usize],
    f1: usize,
    f2: usize,
) -> Result<(Permutation, Permutation)> {
    let n = cycle.len();
    if n % 4 != 3 {
        return Err(Error::Precondition(format!(
            "cycle length must be 3 mod 4, got {n}"
        )));
    }
    check_cycle(degree, cycle)?;
    if f1 == f2 || cycle.contains(&f1) || cycle.contains(&f2) {
        return Err(Error::Precondition(
            "fixed points must be distinct and outside the cycle".into(),
        ));
    }
    for f in [f1, f2] {
        if f == 0 || f > degree {
            return Err(Error::PointOutOfRange { point: f, degree });
        }
    }
    let mut t1 = transport(cycle, &x1_pairs(n));
    t1.push((f1, f2));
    let mut t2 = transport(cycle, &x2_pairs(n));
    t2.push((f1, f2));
    Ok((from_transpositions(degree, &t1), from_transpositions(degree, &t2)))
}

/// Writes an even permutation of degree `m ≥ 5` as a product of at most
/// three involutions of `A_m`.
pub fn decompose(g: &Permutation) -> Result<InvolutionFactorization> {
    let m = g.degree();
    if m < 5 {
        return Err(Error::InvalidDegree(m));
    }
    if !g.parity().is_even() {
        return Err(Error::OddPermutation(g.to_string()));
    }
    let done = |factors: Vec<Permutation>| {
        let factors = factors.into_iter().filter(|f| !f.is_identity()).collect();
        Ok(InvolutionFactorization {
            degree: m,
            factors,
            target: g.clone(),
        })
    };
    if g.is_identity() {
        return done(Vec::new());
    }

    let CycleDecomposition {
        cycles,
        fixed_points,
        ..
    } = g.cycle_decomposition();
    let mut ones = Vec::new();
    let mut evens = Vec::new();
    let mut threes = Vec::new();
    for c in cycles {
        match c.len() % 4 {
            1 => ones.push(c),
            3 => threes.push(c),
            _ => evens.push(c),
        }
    }
    // Stable: equal lengths keep canonical order.
    threes.sort_by_key(Vec::len);

    // Strongly real part: every cycle but (when n3 is odd) the last 3-mod-4 one.
    let mut t1 = Permutation::identity(m);
    let mut t2 = Permutation::identity(m);
    let mut absorb = |a: Permutation, b: Permutation| {
        t1 = &t1 * &a;
        t2 = &t2 * &b;
    };
    for c in &ones {
        let (a, b) = pair_for_odd_cycle(m, c)?;
        absorb(a, b);
    }
    for pair in evens.chunks(2) {
        let (a, b) = pair_for_even_pair(m, &pair[0], &pair[1])?;
        absorb(a, b);
    }
    let last = if threes.len() % 2 == 1 {
        threes.pop()
    } else {
        None
    };
    for pair in threes.chunks(2) {
        let (a, a2) = pair_for_odd_cycle(m, &pair[0])?;
        let (b, b2) = pair_for_odd_cycle(m, &pair[1])?;
        absorb(&a * &b, &a2 * &b2);
    }

    let Some(ck) = last else {
        return done(vec![t1, t2]);
    };
    let rest_trivial = t1.is_identity() && t2.is_identity();

    if ck.len() == 3 && rest_trivial {
        // g is a single 3-cycle: ((1 2)(f1 f2)) · ((f1 f2)(1 3)).
        let (f1, f2) = (fixed_points[0], fixed_points[1]);
        let a = from_transpositions(m, &[(ck[0], ck[1]), (f1, f2)]);
        let b = from_transpositions(m, &[(f1, f2), (ck[0], ck[2])]);
        return done(vec![a, b]);
    }
    if fixed_points.len() >= 2 {
        let (a, b) = pair_with_fixed_points(m, &ck, fixed_points[0], fixed_points[1])?;
        return done(vec![&t1 * &a, &t2 * &b]);
    }
    if ck.len() > 3 {
        let (s1, s2, s3) = triple_for_3mod4(m, &ck)?;
        return done(vec![&t1 * &s1, &t2 * &s2, s3]);
    }

    // |c_k| = 3 with g·c_k⁻¹ ≠ 1: borrow a transposition (i j) from a
    // nontrivial half, preferring the second.
    let c12 = from_transpositions(m, &[(ck[0], ck[1])]);
    let c13 = from_transpositions(m, &[(ck[0], ck[2])]);
    let first_transposition = |t: &Permutation| {
        let c = &t.cycle_decomposition().cycles[0];
        from_transpositions(m, &[(c[0], c[1])])
    };
    if !t2.is_identity() {
        let ij = first_transposition(&t2);
        let middle = &(&t2 * &ij) * &c12;
        let last = &ij * &c13;
        done(vec![t1, middle, last])
    } else {
        let ij = first_transposition(&t1);
        let head = &(&t1 * &ij) * &c12;
        let last = &ij * &c13;
        done(vec![head, last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, m: usize) -> Permutation {
        Permutation::parse(s, m).unwrap()
    }

    #[test]
    fn odd_cycle_pairs() {
        let (x1, x2) = pair_for_odd_cycle(5, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(x1, p("(1 5)(2 4)", 5));
        assert_eq!(x2, p("(2 5)(3 4)", 5));

        let (x1, x2) = pair_for_odd_cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(x1, p("(1 3)", 3));
        assert_eq!(x2, p("(2 3)", 3));
        assert!(!x1.parity().is_even() && !x2.parity().is_even());
        assert_eq!(&x1 * &x2, p("(1 2 3)", 3));

        let (x1, x2) = pair_for_odd_cycle(7, &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(&x1 * &x2, p("(1 2 3 4 5 6 7)", 7));
        assert_eq!((x1.order(), x2.order()), (2, 2));
        assert!(!x1.parity().is_even() && !x2.parity().is_even());

        // relabelled cycle
        let (x1, x2) = pair_for_odd_cycle(9, &[2, 9, 4, 7, 5]).unwrap();
        assert_eq!(&x1 * &x2, p("(2 9 4 7 5)", 9));

        assert!(pair_for_odd_cycle(5, &[1, 2, 3, 4]).is_err());
        assert!(pair_for_odd_cycle(5, &[1]).is_err());
    }

    #[test]
    fn even_pairs() {
        for (c, c2, m) in [
            (vec![1, 2, 3, 4], vec![5, 6, 7, 8], 8),
            (vec![1, 2], vec![3, 4], 4),
            (vec![1, 2, 3, 4], vec![5, 6], 6),
            (vec![1, 2], vec![3, 4, 5, 6], 6),
            (vec![1, 2, 3, 4, 5, 6], vec![7, 8, 9, 10, 11, 12], 12),
            (vec![1, 2, 3, 4, 5, 6, 7, 8], vec![9, 10], 10),
        ] {
            let (t1, t2) = pair_for_even_pair(m, &c, &c2).unwrap();
            let target = Permutation::from_cycles(m, &[c.clone(), c2.clone()]).unwrap();
            assert_eq!(&t1 * &t2, target, "{c:?} {c2:?}");
            for t in [&t1, &t2] {
                assert!(t.parity().is_even());
                assert!(t.order() <= 2);
            }
        }
        let (t1, t2) = pair_for_even_pair(4, &[1, 2], &[3, 4]).unwrap();
        assert_eq!(t1, p("(1 2)(3 4)", 4));
        assert!(t2.is_identity());

        assert!(pair_for_even_pair(6, &[1, 2, 3], &[4, 5]).is_err());
        assert!(pair_for_even_pair(6, &[1, 2], &[2, 3]).is_err());
    }

    #[test]
    fn triples() {
        let (s1, s2, s3) = triple_for_3mod4(7, &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(s1, p("(1 7)(2 6)", 7));
        assert_eq!(s2, p("(3 5)(2 7)", 7));
        assert_eq!(s3, p("(3 6)(4 5)", 7));
        assert_eq!(&(&s1 * &s2) * &s3, p("(1 2 3 4 5 6 7)", 7));

        let c: Vec<usize> = (1..=11).collect();
        let (s1, s2, s3) = triple_for_3mod4(11, &c).unwrap();
        assert_eq!(
            &(&s1 * &s2) * &s3,
            Permutation::from_cycles(11, &[c]).unwrap()
        );
        for s in [s1, s2, s3] {
            assert!(s.parity().is_even() && s.order() == 2);
        }
        assert!(triple_for_3mod4(3, &[1, 2, 3]).is_err());
        assert!(triple_for_3mod4(9, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).is_err());
    }

    #[test]
    fn fixed_point_pairs() {
        let (t1, t2) = pair_with_fixed_points(5, &[1, 2, 3], 4, 5).unwrap();
        assert_eq!(t1, p("(1 3)(4 5)", 5));
        assert_eq!(t2, p("(4 5)(2 3)", 5));
        assert_eq!(&t1 * &t2, p("(1 2 3)", 5));

        let c: Vec<usize> = (1..=7).collect();
        let (t1, t2) = pair_with_fixed_points(9, &c, 8, 9).unwrap();
        assert_eq!(&t1 * &t2, Permutation::from_cycles(9, &[c]).unwrap());
        assert!(t1.parity().is_even() && t2.parity().is_even());

        assert!(pair_with_fixed_points(6, &[1, 2, 3, 4], 5, 6).is_err());
        assert!(pair_with_fixed_points(6, &[1, 2, 3], 3, 6).is_err());
    }

    #[test]
    fn decompose_examples() {
        let f = decompose(&p("(1 2 3 4 5)", 5)).unwrap();
        assert_eq!(f.factors, vec![p("(1 5)(2 4)", 5), p("(2 5)(3 4)", 5)]);

        let f = decompose(&p("(1 2 3)", 5)).unwrap();
        assert_eq!(f.factors, vec![p("(1 2)(4 5)", 5), p("(4 5)(1 3)", 5)]);

        let f = decompose(&p("(1 2 3 4 5 6 7)", 7)).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert!(f.verify());

        let f = decompose(&Permutation::identity(6)).unwrap();
        assert!(f.factors.is_empty());
        assert!(f.verify());
    }

    #[test]
    fn decompose_branches() {
        for (s, m, max) in [
            ("(1 2)(3 4)(5 6 7)", 7, 2),
            ("(1 2 3)(4 5 6)(7 8 9)", 9, 3),
            ("(1 2 3)(4 5 6 7 8)", 8, 3),
            ("(1 2 3)(4 5 6)", 6, 2),
            ("(1 2 3 4 5 6 7)", 9, 2),
            ("(1 2 3 4)(5 6 7 8)(9 10 11)", 11, 3),
            ("(1 2)(3 4)", 5, 1),
        ] {
            let f = decompose(&p(s, m)).unwrap();
            assert!(f.verify(), "{s}");
            assert!(f.factors.len() <= max, "{s}: {:?}", f.factors);
        }
    }

    #[test]
    fn decompose_errors() {
        assert!(matches!(decompose(&p("(1 2)", 5)), Err(Error::OddPermutation(_))));
        assert!(matches!(decompose(&p("(1 2 3)", 4)), Err(Error::InvalidDegree(4))));
    }
}
