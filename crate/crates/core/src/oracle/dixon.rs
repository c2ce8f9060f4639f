//! Character tables from class multiplication coefficients, computed modulo
//! a prime and lifted to cyclotomic integers.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::group::{ClassData, GroupElement, SmallGroup};
use super::modp::Zp;
use crate::arith::is_prime;
use crate::chartab::{validate_table, CharacterTable, ClassInfo};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

const MAX_ATTEMPTS: usize = 12;

/// `coeffs[j][k][l]` = number of `x ∈ C_j` with `x⁻¹·z_l ∈ C_k`, for a fixed
/// `z_l ∈ C_l`.
pub fn class_coefficients<E: GroupElement>(g: &SmallGroup<E>, cd: &ClassData) -> Vec<Vec<Vec<u64>>> {
    let k = cd.len();
    let mut out = vec![vec![vec![0u64; k]; k]; k];
    for j in 0..k {
        for &x in &cd.classes[j] {
            let xi = g.inverse(x);
            for l in 0..k {
                let y = g.mul(xi, cd.representatives[l]);
                out[j][cd.element_class[y]][l] += 1;
            }
        }
    }
    out
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2·√|G|·max|C|`, starting after `after`.
pub fn dixon_prime(order: u64, max_class: u64, exponent: u64, after: u64) -> u64 {
    let bound = 4 * order as u128 * max_class as u128 * max_class as u128;
    let mut p = exponent + 1;
    loop {
        if (p as u128) * (p as u128) > bound && p > after && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

/// Complete irreducible character table of `g`, validated exactly.
pub fn dixon_character_table<E: GroupElement>(
    g: &SmallGroup<E>,
    cd: &ClassData,
    group_name: &str,
) -> Result<CharacterTable> {
    let coeffs = class_coefficients(g, cd);
    let exponent = g.exponent(cd);
    let max_class = *cd.sizes.iter().max().unwrap();
    let mut p = 0;
    let mut last_err = Error::Dixon("no attempt made".into());
    for _ in 0..MAX_ATTEMPTS {
        p = dixon_prime(g.order() as u64, max_class, exponent, p);
        match attempt(g, cd, &coeffs, p, group_name) {
            Ok(t) => return Ok(t),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn attempt<E: GroupElement>(
    g: &SmallGroup<E>,
    cd: &ClassData,
    coeffs: &[Vec<Vec<u64>>],
    p: u64,
    group_name: &str,
) -> Result<CharacterTable> {
    let z = Zp::new(p);
    let k = cd.len();
    let order = g.order() as u64;
    let id = cd.element_class[g.identity_index()];

    // Simultaneous eigenvectors w with M_j·w = ω_j·w, M_j[k][l] = c_{jkl}.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()];
    for (j, mj) in coeffs.iter().enumerate() {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        if j == id {
            continue;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_space(z, mj, basis)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) || spaces.len() != k {
        return Err(Error::Dixon(format!("eigenspaces did not separate modulo {p}")));
    }

    let root = z.primitive_root();
    let mut rows = Vec::with_capacity(k);
    for space in &spaces {
        let w = &space[0];
        if w[id] == 0 {
            return Err(Error::Dixon(format!("eigenvector vanishes at the identity modulo {p}")));
        }
        let s = z.inv(w[id]);
        let w: Vec<u64> = w.iter().map(|&x| z.mul(x, s)).collect();
        // χ(1)² · Σ_l w_l w_{l*} / h_l = |G|
        let mut sum = 0;
        for l in 0..k {
            let t = z.mul(z.mul(w[l], w[cd.inverse[l]]), z.inv(cd.sizes[l] % p));
            sum = z.add(sum, t);
        }
        if sum == 0 {
            return Err(Error::Dixon(format!("degenerate norm modulo {p}")));
        }
        let d2 = z.mul(order % p, z.inv(sum));
        let d = (d2 as f64).sqrt().round() as u64;
        let d = (d.saturating_sub(1)..=d + 1)
            .find(|&x| x * x == d2 && x > 0 && order % x == 0)
            .ok_or_else(|| Error::Dixon(format!("no integral degree modulo {p}")))?;
        let values: Vec<u64> = (0..k)
            .map(|l| z.mul(z.mul(w[l], d % p), z.inv(cd.sizes[l] % p)))
            .collect();
        let mut row = Vec::with_capacity(k);
        for l in 0..k {
            row.push(lift_value(g, cd, z, root, &values, l, d)?);
        }
        rows.push(row);
    }

    let classes = (0..k)
        .map(|c| ClassInfo {
            name: cd.names[c].clone(),
            size: cd.sizes[c],
            element_order: cd.element_orders[c],
            inverse: cd.inverse[c],
        })
        .collect();
    let table = CharacterTable::new(group_name, order, classes, rows)?.canonicalize();
    let report = validate_table(&table);
    if !report.passed() {
        return Err(Error::Dixon(format!(
            "table modulo {p} failed validation: {}",
            report.failures[0]
        )));
    }
    Ok(table)
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `m` restricted to it.
fn split_space(z: Zp, m: &[Vec<u64>], basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>> {
    let k = m.len();
    let (basis, pivots) = z.rref(&basis, k);
    let d = basis.len();
    // image of each basis vector, in basis coordinates (entries at pivots)
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|v| {
            (0..k)
                .map(|r| (0..k).fold(0, |acc, c| z.add(acc, z.mul(m[r][c] % z.p, v[c]))))
                .collect()
        })
        .collect();
    // A[i][b] = coordinate i of M·basis[b]
    let a: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|b| images[b][pivots[i]]).collect())
        .collect();
    let roots = z.roots(&z.char_poly(&a));
    if roots.len() == 1 {
        let ker = z.kernel(&minus(z, &a, roots[0]), d);
        if ker.len() == d {
            return Ok(vec![basis]);
        }
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let ker = z.kernel(&minus(z, &a, lambda), d);
        total += ker.len();
        let vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|x| {
                (0..k)
                    .map(|c| (0..d).fold(0, |acc, b| z.add(acc, z.mul(x[b], basis[b][c]))))
                    .collect()
            })
            .collect();
        out.push(z.rref(&vecs, k).0);
    }
    if total != d {
        return Err(Error::Dixon(format!("class matrix not diagonalizable modulo {}", z.p)));
    }
    Ok(out)
}

fn minus(z: Zp, a: &[Vec<u64>], lambda: u64) -> Vec<Vec<u64>> {
    a.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| if i == j { z.sub(x, lambda) } else { x })
                .collect()
        })
        .collect()
}

/// Recovers `χ(g) = Σ_s m_s ζ_o^s` from the values of `χ` on the powers of
/// `g`, where `o` is the order of `g` and `ζ_o ↦ root^{(p−1)/o}`.
fn lift_value<E: GroupElement>(
    g: &SmallGroup<E>,
    cd: &ClassData,
    z: Zp,
    root: u64,
    values: &[u64],
    class: usize,
    degree: u64,
) -> Result<Cyclotomic> {
    let o = cd.element_orders[class];
    let zeta = z.pow(root, (z.p - 1) / o);
    let zeta_inv = z.inv(zeta);
    let mut power_values = Vec::with_capacity(o as usize);
    let rep = cd.representatives[class];
    let mut acc = g.identity_index();
    for _ in 0..o {
        power_values.push(values[cd.element_class[acc]]);
        acc = g.mul(acc, rep);
    }
    let o_inv = z.inv(o % z.p);
    let mut terms = Vec::new();
    let mut total = 0;
    for s in 0..o {
        let step = z.pow(zeta_inv, s);
        let mut m = 0;
        let mut w = 1;
        for &v in &power_values {
            m = z.add(m, z.mul(v, w));
            w = z.mul(w, step);
        }
        let m = z.mul(m, o_inv);
        if m > degree {
            return Err(Error::Dixon(format!("multiplicity out of range modulo {}", z.p)));
        }
        total += m;
        if m > 0 {
            terms.push((s as i64, BigRational::from_integer(BigInt::from(m))));
        }
    }
    if total != degree {
        return Err(Error::Dixon(format!("multiplicities do not sum to the degree modulo {}", z.p)));
    }
    Ok(Cyclotomic::from_terms(o, &terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::groups;
    use crate::permutation::Permutation;

    fn table_of(g: &SmallGroup<Permutation>, name: &str) -> CharacterTable {
        dixon_character_table(g, &g.conjugacy_classes(), name).unwrap()
    }

    fn degrees(t: &CharacterTable) -> Vec<i64> {
        t.degrees()
            .iter()
            .map(|d| i64::try_from(d.to_integer().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn small_tables() {
        let c2 = SmallGroup::enumerate(&[Permutation::parse("(1 2)", 2).unwrap()], 10).unwrap();
        let t = table_of(&c2, "C2");
        let one = Cyclotomic::one();
        assert_eq!(t.irreducibles, vec![vec![one.clone(), one.clone()], vec![one.clone(), -one]]);
        let a5 = groups::alternating(5).unwrap();
        let t = table_of(&a5, "A5");
        assert_eq!(degrees(&t), vec![1, 3, 3, 4, 5]);
        // golden-ratio values 1 + ζ₅ + ζ₅⁴ and 1 + ζ₅² + ζ₅³ on the 5-cycle classes
        let z = |k| Cyclotomic::zeta(5, k);
        let phi = &(&Cyclotomic::one() + &z(1)) + &z(4);
        let psi = &(&Cyclotomic::one() + &z(2)) + &z(3);
        let mut seen = vec![t.irreducibles[1][3].clone(), t.irreducibles[2][3].clone()];
        seen.sort();
        let mut want = vec![phi.clone(), psi.clone()];
        want.sort();
        assert_eq!(seen, want);
        assert_eq!(&phi * &psi, -Cyclotomic::one());
    }

    #[test]
    fn psl27_degrees() {
        let g = groups::psl27().unwrap();
        assert_eq!(degrees(&table_of(&g, "PSL(2,7)")), vec![1, 3, 3, 6, 7, 8]);
    }

    #[test]
    fn prime_choice() {
        // A5: exponent 30, max class 20, |G| = 60; p² > 4·60·400
        let p = dixon_prime(60, 20, 30, 0);
        assert_eq!(p % 30, 1);
        assert!(p * p > 96000);
        assert_eq!(p, 331);
    }
}
