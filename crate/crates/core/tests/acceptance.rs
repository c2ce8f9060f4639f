//! The eleven acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use iwidth::chartab::{eta, involution_cover, validate_table, CharacterTable};
use iwidth::ff::enumerate_unitary_group;
use iwidth::lie::{
    d3_target, ppd, reconcile, row_ids, table1_value, weil_chi, weil_zeta, DualPair, Partition,
    Variant, WeilContext,
};
use iwidth::oracle::{count_tuples, dixon_character_table, groups, involution_width_oracle, GroupElement, SmallGroup};
use iwidth::arith::multiplicative_order;
use iwidth::ff::FFMatrix;
use iwidth::{decompose, Cyclotomic};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_alternating_widths() -> Outcome {
    let mut got = Vec::new();
    for (m, want) in [(5, 2), (6, 2), (7, 3), (8, 3), (9, 3)] {
        let g = groups::alternating(m).map_err(|e| e.to_string())?;
        let cd = g.conjugacy_classes();
        let w = involution_width_oracle(&g, &cd).map_err(|e| e.to_string())?;
        ensure(w.group_width == want, || format!("A{m} has width {}, expected {want}", w.group_width))?;
        got.push(format!("A{m}={}", w.group_width));
    }
    Ok(got.join(" "))
}

fn c2_constructive_soundness() -> Outcome {
    let mut total = 0usize;
    for m in 5..=9 {
        let g = groups::alternating(m).map_err(|e| e.to_string())?;
        for x in g.elements() {
            let f = decompose(x).map_err(|e| format!("{x}: {e}"))?;
            ensure(f.verify(), || format!("{x}: factorization does not verify"))?;
            let d = x.cycle_decomposition();
            let n3 = d.cycles.iter().filter(|c| c.len() % 4 == 3).count();
            if n3 % 2 == 0 || d.fixed_points.len() >= 2 {
                ensure(f.factors.len() <= 2, || format!("{x}: {} factors", f.factors.len()))?;
            }
            total += 1;
        }
    }
    Ok(format!("{total} elements of A5..A9"))
}

fn eta_vs_counts<E: GroupElement>(g: &SmallGroup<E>, name: &str) -> Result<usize, String> {
    let cd = g.conjugacy_classes();
    let t = dixon_character_table(g, &cd, name).map_err(|e| e.to_string())?;
    let col: Vec<usize> = cd.names.iter().map(|n| t.class_index(n).unwrap()).collect();
    let k = cd.len();
    let mut checked = 0;
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    for a in 0..k {
        for b in 0..k {
            tuples.push(vec![a, b]);
            for c in 0..k {
                tuples.push(vec![a, b, c]);
            }
        }
    }
    for tuple in &tuples {
        let cols: Vec<usize> = tuple.iter().map(|&c| col[c]).collect();
        for target in 0..k {
            let count = count_tuples(g, &cd, tuple, cd.representatives[target]).map_err(|e| e.to_string())?;
            let e = eta(&t, &cols, col[target]).map_err(|e| e.to_string())?;
            ensure(e == BigInt::from(count), || {
                format!("{name} {:?} -> {}: eta {e}, count {count}", tuple, cd.names[target])
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn c3_structure_constants() -> Outcome {
    let a5 = eta_vs_counts(&groups::alternating(5).unwrap(), "A5")?;
    let psl = eta_vs_counts(&groups::psl27().unwrap(), "PSL27")?;
    Ok(format!("{a5} A5 and {psl} PSL(2,7) constants"))
}

fn table_of<E: GroupElement>(g: &SmallGroup<E>, name: &str) -> Result<CharacterTable, String> {
    dixon_character_table(g, &g.conjugacy_classes(), name).map_err(|e| e.to_string())
}

fn c4_table_integrity() -> Outcome {
    let mut out = Vec::new();
    for name in ["A5", "A6", "PSL27", "M11"] {
        let g = groups::named(name).map_err(|e| e.to_string())?;
        let t = table_of(&g, name)?;
        let report = validate_table(&t);
        ensure(report.passed(), || format!("{name}: {:?}", report.failures))?;
        let sum: Cyclotomic = t.degrees().iter().map(|d| *d * *d).sum();
        ensure(sum == Cyclotomic::from_integer(g.order() as i64), || format!("{name}: degree sum {sum}"))?;
        out.push(format!("{name}({} classes)", t.len()));
    }
    Ok(out.join(" "))
}

fn c5_m11_cover() -> Outcome {
    let t = table_of(&groups::m11().unwrap(), "M11")?;
    let start = Instant::now();
    let r = involution_cover(&t, 4).map_err(|e| e.to_string())?;
    ensure(start.elapsed() <= Duration::from_secs(60), || "cover exceeded 1 minute".into())?;
    ensure(r.width == Some(3), || format!("M11 cover width {:?}", r.width))?;
    Ok("M11 class-level width 3".into())
}

fn c6_hook_degrees() -> Outcome {
    let deg = |s: &str, q| s.parse::<Partition>().unwrap().unipotent_degree(q, Variant::Unitary);
    ensure(deg("6,1", 2) == BigInt::from(42), || format!("(6,1): {}", deg("6,1", 2)))?;
    ensure(deg("4,2,1", 2) == BigInt::from(7568), || format!("(4,2,1): {}", deg("4,2,1", 2)))?;
    for n in 1..=10usize {
        for q in [2u64, 3, 4, 5] {
            let st = Partition::new(vec![1; n]).unwrap().unipotent_degree(q, Variant::Unitary);
            let want = BigInt::from(q).pow((n * (n - 1) / 2) as u32);
            ensure(st == want, || format!("St at n={n}, q={q}: {st}"))?;
        }
    }
    Ok("42, 7568, Steinberg degrees".into())
}

fn c7_table1_integrality() -> Outcome {
    let mut bad = Vec::new();
    for n in [7u32, 9, 11] {
        for q in [2u64, 3] {
            for id in row_ids() {
                let v = table1_value(id, n, q).map_err(|e| e.to_string())?;
                if !(v.is_integer() && v.is_positive()) {
                    bad.push(format!("{id}@({n},{q})={v}"));
                }
            }
            let row = table1_value("q2q-q1", n, q).unwrap();
            let lam = Partition::new(vec![n as usize - 3, 2, 1]).unwrap();
            let want = BigRational::from_integer(lam.unipotent_degree(q, Variant::Unitary));
            if row != want {
                bad.push(format!("q2q-q1@({n},{q})={row} != {want}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{} rows at 6 points", row_ids().len()))
    } else {
        Err(format!("non-integral: {}", bad.join(", ")))
    }
}

fn c8_weil_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (n, q) in [(3, 2), (3, 3), (4, 2), (7, 2)] {
        let ctx = WeilContext::new(n, q).map_err(|e| e.to_string())?;
        let size = ctx.field.size() as u32;
        for _ in 0..100 {
            let entries = (0..n * n).map(|_| rng.gen_range(0..size)).collect();
            let g = FFMatrix::new(ctx.field.clone(), n, entries).unwrap();
            let total: Cyclotomic = (0..=q).map(|t| weil_chi(&ctx, t, &g).unwrap()).sum();
            let zeta = Cyclotomic::from_rational(BigRational::from_integer(weil_zeta(&ctx, &g).unwrap()));
            ensure(total == zeta, || format!("({n},{q}): sum {total} != zeta {zeta}"))?;
        }
    }
    for q in [2u64, 3] {
        for n in 3..=8usize {
            let ctx = WeilContext::new(n, q).map_err(|e| e.to_string())?;
            let id = FFMatrix::identity(ctx.field.clone(), n);
            let chi0 = weil_chi(&ctx, 0, &id).unwrap().to_integer().ok_or("chi_0(1) not an integer")?;
            let qb = BigInt::from(q);
            let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            let lhs = chi0 + &qb * (qb.pow(n as u32) - sign) / (&qb + 1);
            ensure(lhs == qb.pow(n as u32), || format!("degree identity fails at ({n},{q})"))?;
        }
    }
    Ok("400 random matrices, degree identity n=3..8".into())
}

fn c9_dual_pair_degree() -> Outcome {
    let ctx = WeilContext::new(3, 2).map_err(|e| e.to_string())?;
    let all = enumerate_unitary_group(&ctx.field, 3).map_err(|e| e.to_string())?;
    ensure(all.len() == 648, || format!("GU3(2) has {} elements", all.len()))?;
    let pair = DualPair::new(3, 2).map_err(|e| e.to_string())?;
    let target = d3_target(7, 2).map_err(|e| e.to_string())?;
    let sel = pair.select_alpha(2, 7, Some(&target)).map_err(|e| e.to_string())?;
    let hit = sel
        .candidates
        .iter()
        .find(|c| c.d_alpha_one == Cyclotomic::from_integer(7568))
        .ok_or_else(|| format!("no degree-2 row gives 7568: {sel}"))?;
    Ok(format!("|GU3(2)| = 648, row {} gives D_alpha(1) = 7568", hit.row))
}

fn c10_ppd() -> Outcome {
    ensure(ppd(2, 6).unwrap().is_empty(), || "ppd(2,6) is not empty".into())?;
    let mut checked = 0;
    for q in [2u64, 3, 4, 5] {
        for n in 2..=14u32 {
            let primes = ppd(q, n).map_err(|e| e.to_string())?;
            for r in primes {
                ensure(multiplicative_order(q % r, r) == Some(n as u64), || {
                    format!("{r} is not a ppd of ({q},{n})")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} primes"))
}

fn c11_reconciliation() -> Outcome {
    let rep = reconcile(7, 2).map_err(|e| e.to_string())?;
    let mut out = std::io::stderr();
    writeln!(out, "    alpha(k=2): {}", rep.alpha2).ok();
    writeln!(out, "    alpha(k=3): {}", rep.alpha3).ok();
    for l in &rep.lines {
        writeln!(out, "    {l}").ok();
    }
    let mismatches = rep.lines.iter().filter(|l| !l.matches).count();
    ensure(rep.lines.len() == 4, || format!("{} report lines", rep.lines.len()))?;
    Ok(format!("report produced, {} of {} lines mismatch", mismatches, rep.lines.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("1 alternating widths", c1_alternating_widths, 300),
        ("2 constructive soundness", c2_constructive_soundness, 600),
        ("3 structure constants", c3_structure_constants, 120),
        ("4 table integrity", c4_table_integrity, 600),
        ("5 M11 cover", c5_m11_cover, 600),
        ("6 hook degrees", c6_hook_degrees, 10),
        ("7 constituent-degree integrality", c7_table1_integrality, 10),
        ("8 Weil identities", c8_weil_identities, 60),
        ("9 dual-pair degree", c9_dual_pair_degree, 900),
        ("10 ppd", c10_ppd, 10),
        ("11 reconciliation report", c11_reconciliation, 900),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(limit) {
            outcome = Err(format!("took {elapsed:?}, limit {limit}s"));
        }
        match &outcome {
            Ok(detail) => writeln!(err, "PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => writeln!(err, "FAIL criterion {name} ({elapsed:.2?}): {why}"),
        }
        .ok();
        if outcome.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
