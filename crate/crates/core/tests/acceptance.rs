//! Acceptance run: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use algebra3::algebra::{invariant_profile, is_zeropotent, StructureTable};
use algebra3::catalog::{canonical_table, catalog_list, enumerate_curled2, known_witnesses, sampled_labels, Family, Label};
use algebra3::classify::classify;
use algebra3::iso::{are_isomorphic, ff_oracle, scramble, verify_witness};
use algebra3::scalar::{ratio, ExtScalar, FieldMode, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [FieldMode; 2] = [FieldMode::Real, FieldMode::Complex];

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn failures(list: Vec<String>) -> Result<(), String> {
    match list.len() {
        0 => Ok(()),
        n => Err(format!("{n} failures, first: {}", list[0])),
    }
}

fn fixed_labels(mode: FieldMode, dim: usize) -> Vec<Label> {
    catalog_list(mode, dim).into_iter().filter(|l| !l.is_stub()).collect()
}

fn catalog_associativity() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for mode in MODES {
        for dim in 1..=3 {
            for label in sampled_labels(mode, dim) {
                let t = canonical_table(&label, mode).map_err(|e| format!("{label}: {e}"))?;
                n += 1;
                if let Some(v) = t.check_associativity().first() {
                    bad.push(format!("{label} ({mode}) at {v:?}"));
                }
            }
        }
    }
    failures(bad)?;
    Ok(format!("{n} tables associative"))
}

fn invariant_tables() -> Outcome {
    use Family::*;
    // printed values (alpha, beta, gamma)
    let mut printed: Vec<(Label, (usize, usize, usize))> = vec![
        (Label::fixed(C3_2), (3, 1, 1)),
        (Label::fixed(C3_3), (3, 2, 0)),
        (Label::fixed(C3_4), (3, 0, 2)),
        (Label::fixed(W3_1), (1, 2, 2)),
        (Label::fixed(W3_2), (1, 2, 2)),
        (Label::fixed(W3_4), (1, 2, 2)),
        (Label::fixed(W3_5), (2, 2, 1)),
        (Label::fixed(W3_6), (2, 1, 2)),
        (Label::fixed(W3_7), (3, 1, 0)),
        (Label::fixed(W3_8), (3, 0, 1)),
        (Label::fixed(W3_9), (3, 0, 1)),
        (Label::fixed(W3_10), (3, 1, 0)),
    ];
    for k in [0, 1, 2, 5] {
        printed.push((Label::with_k(W3_3, Scalar::int(k)), (1, 1, 1)));
        printed.push((Label::with_k(W3_3m, Scalar::int(k)), (1, 1, 1)));
    }
    let mut bad = Vec::new();
    for (label, want) in &printed {
        let t = canonical_table(label, FieldMode::Real).map_err(|e| e.to_string())?;
        let p = invariant_profile(&t).map_err(|e| e.to_string())?;
        if (p.alpha, p.beta, p.gamma) != *want {
            bad.push(format!("{label}: got ({}, {}, {}), want {want:?}", p.alpha, p.beta, p.gamma));
        }
    }
    // only alpha is given for these two
    for (f, want) in [(C3_0, 0), (C3_1, 1)] {
        let t = canonical_table(&Label::fixed(f), FieldMode::Real).map_err(|e| e.to_string())?;
        let alpha = invariant_profile(&t).map_err(|e| e.to_string())?.alpha;
        if alpha != want {
            bad.push(format!("{f}: alpha {alpha}, want {want}"));
        }
    }
    failures(bad)?;
    Ok(format!("{} profiles match", printed.len() + 2))
}

fn known_witness_check() -> Outcome {
    let ws = known_witnesses();
    let mut bad = Vec::new();
    for w in &ws {
        let m = w.matrix.map(|x| ExtScalar::from(x.clone()));
        match verify_witness(&w.source, &w.target, &m) {
            Ok(true) => {}
            Ok(false) => bad.push(format!("{} does not verify", w.name)),
            Err(e) => bad.push(format!("{}: {e}", w.name)),
        }
    }
    failures(bad)?;
    Ok(format!("{} witnesses verified", ws.len()))
}

fn curled2() -> Outcome {
    let mut got = enumerate_curled2();
    let mut want = vec![
        [0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 1],
        [1, 0, 0, 1, 0, 0],
        [1, 1, 0, 1, 1, 0],
        [1, 1, 1, 0, 0, 1],
    ];
    got.sort();
    want.sort();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("7 tuples".to_string())
}

fn round_trip() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for mode in MODES {
        for dim in 1..=3 {
            for label in sampled_labels(mode, dim) {
                let t = canonical_table(&label, mode).map_err(|e| e.to_string())?;
                for seed in 0..100 {
                    n += 1;
                    match classify(&scramble(&t, seed).0) {
                        Ok(r) if r.label == label && r.label.k_squared() == label.k_squared() => {}
                        Ok(r) => bad.push(format!("{label} ({mode}, seed {seed}) gave {}", r.label)),
                        Err(e) => bad.push(format!("{label} ({mode}, seed {seed}): {e}")),
                    }
                }
            }
        }
    }
    failures(bad)?;
    Ok(format!("{n} scrambles"))
}

fn random_k() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ks: Vec<(i64, i64)> = (0..50).map(|_| (rng.gen_range(-10..=10), rng.gen_range(1..=10))).collect();
    // make sure the equal-square case shows up
    ks[1] = (-ks[0].0, ks[0].1);
    let mut bad = Vec::new();
    let mut tables = Vec::new();
    for (i, &(n, d)) in ks.iter().enumerate() {
        let label = Label::with_k(Family::W3_3, Scalar::real(ratio(n, d)));
        let t = canonical_table(&label, FieldMode::Real).map_err(|e| e.to_string())?;
        let t = scramble(&t, 1000 + i as u64).0;
        let want = Scalar::real(ratio(n * n, d * d));
        match classify(&t) {
            Ok(r) if r.label.family == Family::W3_3 && r.label.k_squared() == Some(&want) => {}
            Ok(r) => bad.push(format!("k = {n}/{d} gave {}", r.label)),
            Err(e) => bad.push(format!("k = {n}/{d}: {e}")),
        }
        tables.push(t);
    }
    let mut pairs = 0;
    for i in 0..ks.len() - 1 {
        let (a, b) = (ks[i], ks[i + 1]);
        // k² = k'² iff |n|·d' = |n'|·d
        let same = a.0.abs() * b.1 == b.0.abs() * a.1;
        let r = are_isomorphic(&tables[i], &tables[i + 1]).map_err(|e| e.to_string())?;
        pairs += 1;
        if r.isomorphic != same || (!same && r.separator.is_none()) {
            bad.push(format!("{a:?} vs {b:?}: isomorphic = {}", r.isomorphic));
        }
    }
    failures(bad)?;
    Ok(format!("50 k recovered, {pairs} pairs decided"))
}

fn real_complex_split() -> Outcome {
    let ks = [Scalar::int(0), Scalar::int(1), Scalar::int(2), Scalar::real(ratio(1, 2)), Scalar::real(ratio(-7, 3))];
    let mut bad = Vec::new();
    for k in &ks {
        let minus = canonical_table(&Label::with_k(Family::W3_3m, k.clone()), FieldMode::Real).map_err(|e| e.to_string())?;
        for k2 in &ks {
            let plus = canonical_table(&Label::with_k(Family::W3_3, k2.clone()), FieldMode::Real).map_err(|e| e.to_string())?;
            let r = are_isomorphic(&plus, &minus).map_err(|e| e.to_string())?;
            if r.isomorphic || r.separator.is_none() {
                bad.push(format!("real W3_3({k2}) vs W3_3m({k}) not separated"));
            }
        }
        // over C the minus form is a plus form with k² negated
        let c = scramble(&minus.with_mode(FieldMode::Complex), 17).0;
        let want = -(k * k);
        match classify(&c) {
            Ok(r) if r.label.family == Family::W3_3 && r.label.k_squared() == Some(&want) => {}
            Ok(r) => bad.push(format!("complex W3_3m({k}) gave {}", r.label)),
            Err(e) => bad.push(format!("complex W3_3m({k}): {e}")),
        }
    }
    failures(bad)?;
    Ok(format!("{} real pairs separated, {} complex relabels", ks.len() * ks.len(), ks.len()))
}

fn pairwise() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for mode in MODES {
        for dim in 1..=3 {
            let labels = fixed_labels(mode, dim);
            let tables: Vec<StructureTable> =
                labels.iter().map(|l| canonical_table(l, mode)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
            for i in 0..labels.len() {
                for j in i + 1..labels.len() {
                    pairs += 1;
                    let r = are_isomorphic(&tables[i], &tables[j]).map_err(|e| e.to_string())?;
                    if r.isomorphic || r.separator.is_none() {
                        bad.push(format!("{} / {} ({mode})", labels[i], labels[j]));
                    }
                }
            }
        }
    }
    // frozen oracle results: no isomorphism exists mod 3 or mod 5
    let hard = [
        (Family::W3_7, Family::W3_10),
        (Family::W3_8, Family::W3_9),
        (Family::W3_1, Family::W3_4),
        (Family::A2_1, Family::A2_2),
    ];
    for (x, y) in hard {
        let a = canonical_table(&Label::fixed(x), FieldMode::Real).map_err(|e| e.to_string())?;
        let b = canonical_table(&Label::fixed(y), FieldMode::Real).map_err(|e| e.to_string())?;
        for p in [3, 5] {
            match ff_oracle(&a, &b, p) {
                Ok(None) => {}
                Ok(Some(m)) => bad.push(format!("{x} -> {y} over GF({p}): {:?}", m.entries)),
                Err(e) => bad.push(format!("{x} -> {y} over GF({p}): {e}")),
            }
        }
    }
    failures(bad)?;
    Ok(format!("{pairs} pairs separated, 8 oracle runs empty"))
}

fn constant(rng: &mut ChaCha8Rng, mode: FieldMode) -> Scalar {
    let re = rng.gen_range(-2..=2);
    match mode {
        FieldMode::Real => Scalar::int(re),
        FieldMode::Complex => Scalar::gaussian(re, rng.gen_range(-2..=2)),
    }
}

/// Sparse table with a few nonzero constants.
fn sparse_table(rng: &mut ChaCha8Rng, mode: FieldMode) -> StructureTable {
    let dim = [1, 2, 3, 3, 3][rng.gen_range(0..5)];
    let mut t = StructureTable::zero(dim, mode);
    for _ in 0..rng.gen_range(1..=4) {
        let (i, j, s) = (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
        t.set(i, j, s, constant(rng, mode));
    }
    t
}

fn random_associative() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = Vec::new();
    let mut n = 0;
    let mut drawn = 0;
    while n < 1000 {
        let mode = MODES[n % 2];
        let t = sparse_table(&mut rng, mode);
        drawn += 1;
        if !t.is_associative() {
            continue;
        }
        n += 1;
        let first = match classify(&t) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{:?}: {e}", t.nested()));
                continue;
            }
        };
        match classify(&scramble(&t, n as u64).0) {
            Ok(r) if r.label == first.label => {}
            Ok(r) => bad.push(format!("{:?}: {} then {}", t.nested(), first.label, r.label)),
            Err(e) => bad.push(format!("{:?} rescrambled: {e}", t.nested())),
        }
    }
    failures(bad)?;
    Ok(format!("1000 tables from {drawn} draws"))
}

fn zeropotent() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = Vec::new();
    let mut positives = 0;
    for n in 0..1000 {
        let mode = MODES[n % 2];
        let dim = rng.gen_range(1..=3);
        let mut t = StructureTable::zero(dim, mode);
        match n % 3 {
            // alternating: e_i e_i = 0, e_j e_i = -e_i e_j
            0 | 1 => {
                for i in 0..dim {
                    for j in i + 1..dim {
                        for s in 0..dim {
                            let c = constant(&mut rng, mode);
                            t.set(j, i, s, -c.clone());
                            t.set(i, j, s, c);
                        }
                    }
                }
                if n % 3 == 1 {
                    let (i, j, s) = (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
                    let c = t.get(i, j, s).clone() + constant(&mut rng, mode);
                    t.set(i, j, s, c);
                }
            }
            _ => t = sparse_table(&mut rng, mode),
        }
        let dim = t.dim();
        // oracle: x² vanishes identically iff c_ii = 0 and c_ij = -c_ji
        let zero = Scalar::int(0);
        let alternating = (0..dim).all(|i| {
            (0..dim).all(|j| (0..dim).all(|s| t.get(i, j, s).clone() + t.get(j, i, s).clone() == zero))
        });
        let sampled = (0..100).all(|_| {
            let x: Vec<Scalar> = (0..dim).map(|_| constant(&mut rng, mode) + Scalar::int(rng.gen_range(-20..=20))).collect();
            t.mul_vec(&x, &x).iter().all(|c| *c == zero)
        });
        let got = is_zeropotent(&t);
        positives += got as usize;
        if got != alternating || got != sampled {
            bad.push(format!("{:?}: is_zeropotent {got}, alternating {alternating}, sampled {sampled}", t.nested()));
        }
    }
    failures(bad)?;
    Ok(format!("1000 tables agree, {positives} zeropotent"))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "catalog associativity", budget: Some(secs(1)), run: catalog_associativity },
        Criterion { id: 2, name: "invariant tables", budget: Some(secs(1)), run: invariant_tables },
        Criterion { id: 3, name: "closed-form witnesses", budget: None, run: known_witness_check },
        Criterion { id: 4, name: "curled 2-dim enumeration", budget: None, run: curled2 },
        Criterion { id: 5, name: "scramble round trip", budget: Some(secs(60)), run: round_trip },
        Criterion { id: 6, name: "W3_3 random k", budget: None, run: random_k },
        Criterion { id: 7, name: "real/complex split", budget: None, run: real_complex_split },
        Criterion { id: 8, name: "pairwise non-isomorphism", budget: Some(secs(300)), run: pairwise },
        Criterion { id: 9, name: "random associative tables", budget: None, run: random_associative },
        Criterion { id: 10, name: "zeropotent characterization", budget: None, run: zeropotent },
    ];
    let mut all_ok = true;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(b)) = (&outcome, c.budget) {
            if elapsed > b {
                outcome = Err(format!("took {elapsed:.2?}, budget {b:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(detail) => {
                all_ok = false;
                println!("FAIL {:>2} {}: {detail} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
