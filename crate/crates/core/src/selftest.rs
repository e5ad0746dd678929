//! Built-in consistency checks over a catalog.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::invariant_profile;
use crate::catalog::{catalog_list, enumerate_curled2, expected_invariants, known_witnesses, sampled_labels, Catalog, Family, Label};
use crate::classify::classify;
use crate::document::{CatalogExport, TableDocument};
use crate::error::Result;
use crate::iso::{are_isomorphic, ff_oracle, scramble, verify_witness};
use crate::linalg::Matrix;
use crate::scalar::{ExtScalar, FieldMode};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.id, self.detail)
    }
}

/// Hard pairs for the prime-field oracle, all non-isomorphic over GF(5).
pub const ORACLE_PAIRS: [(Family, Family); 4] =
    [(Family::W3_7, Family::W3_10), (Family::W3_8, Family::W3_9), (Family::W3_1, Family::W3_4), (Family::A2_1, Family::A2_2)];

const MODES: [FieldMode; 2] = [FieldMode::Real, FieldMode::Complex];

pub fn run(catalog: &Catalog, level: Level) -> Vec<Check> {
    let mut checks: Vec<(&'static str, fn(&Catalog) -> Result<Vec<String>>)> = vec![
        ("catalog-associativity", associativity),
        ("invariant-table", invariant_table),
        ("known-witnesses", witnesses),
        ("curled2-enumeration", curled2),
        ("document-roundtrip", documents),
    ];
    if level == Level::Full {
        checks.push(("classification-roundtrip", round_trips));
        checks.push(("pairwise-separation", separation));
        checks.push(("oracle-gf5", oracle));
    }
    checks
        .into_iter()
        .map(|(id, f)| {
            let start = Instant::now();
            let (passed, detail) = match f(catalog) {
                Ok(failures) if failures.is_empty() => (true, "ok".to_string()),
                Ok(failures) => (false, failures.join("; ")),
                Err(e) => (false, e.to_string()),
            };
            Check { id, passed, detail, elapsed: start.elapsed() }
        })
        .collect()
}

fn all_labels() -> impl Iterator<Item = (FieldMode, Label)> {
    MODES.into_iter().flat_map(|mode| (1..=3).flat_map(move |d| sampled_labels(mode, d)).map(move |l| (mode, l)))
}

fn associativity(catalog: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (mode, label) in all_labels() {
        let bad = catalog.table(&label, mode)?.check_associativity();
        if !bad.is_empty() {
            out.push(format!("{label} ({mode}) violates {bad:?}"));
        }
    }
    Ok(out)
}

fn invariant_table(catalog: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (mode, label) in all_labels() {
        let got = invariant_profile(&catalog.table(&label, mode)?)?;
        if got != expected_invariants(&label, mode)? {
            out.push(format!("{label} ({mode}) has {got}"));
        }
    }
    Ok(out)
}

fn witnesses(_: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for w in known_witnesses() {
        let m: Matrix<ExtScalar> = w.matrix.map(|x| ExtScalar::from(x));
        if !verify_witness(&w.source, &w.target, &m)? {
            out.push(w.name.to_string());
        }
    }
    Ok(out)
}

fn curled2(_: &Catalog) -> Result<Vec<String>> {
    let got = enumerate_curled2();
    Ok(if got.len() == 7 { vec![] } else { vec![format!("{} solutions", got.len())] })
}

fn documents(catalog: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (mode, label) in all_labels() {
        let t = catalog.table(&label, mode)?;
        let doc = TableDocument::from_table(&t);
        if TableDocument::parse(&doc.to_json())?.to_table()? != t {
            out.push(format!("{label} ({mode})"));
        }
    }
    let export = CatalogExport::build(catalog)?;
    if CatalogExport::parse(&export.to_json())? != export {
        out.push("catalog export".to_string());
    }
    Ok(out)
}

fn round_trips(catalog: &Catalog) -> Result<Vec<String>> {
    let jobs: Vec<(FieldMode, Label, u64)> =
        all_labels().flat_map(|(mode, label)| (0..10).map(move |seed| (mode, label.clone(), seed))).collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(mode, label, seed)| {
            let outcome = catalog.table(label, *mode).and_then(|t| classify(&scramble(&t, *seed).0));
            match outcome {
                Ok(r) if r.label == *label => None,
                Ok(r) => Some(format!("{label} ({mode}, seed {seed}) gave {}", r.label)),
                Err(e) => Some(format!("{label} ({mode}, seed {seed}): {e}")),
            }
        })
        .collect();
    Ok(failures)
}

fn separation(catalog: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for mode in MODES {
        for d in 1..=3 {
            let labels: Vec<Label> = catalog_list(mode, d).into_iter().filter(|l| !l.is_stub()).collect();
            let tables = labels.iter().map(|l| catalog.table(l, mode)).collect::<Result<Vec<_>>>()?;
            for i in 0..labels.len() {
                for j in i + 1..labels.len() {
                    let r = are_isomorphic(&tables[i], &tables[j])?;
                    if r.isomorphic || r.separator.is_none() {
                        out.push(format!("{} / {} ({mode})", labels[i], labels[j]));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn oracle(catalog: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (x, y) in ORACLE_PAIRS {
        let a = catalog.table(&Label::fixed(x), FieldMode::Real)?;
        let b = catalog.table(&Label::fixed(y), FieldMode::Real)?;
        if let Some(m) = ff_oracle(&a, &b, 5)? {
            out.push(format!("{x} -> {y} over GF(5): {:?}", m.entries));
        }
    }
    Ok(out)
}
