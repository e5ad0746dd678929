use algebra3::catalog::{canonical_table, Catalog, Family, Label};
use algebra3::scalar::FieldMode;
use algebra3::selftest::{run, Level};

fn failing(checks: &[algebra3::selftest::Check]) -> Vec<&'static str> {
    checks.iter().filter(|c| !c.passed).map(|c| c.id).collect()
}

#[test]
fn quick_passes_on_the_standard_catalog() {
    let checks = run(Catalog::standard(), Level::Quick);
    assert_eq!(checks.len(), 5);
    assert!(failing(&checks).is_empty(), "{checks:?}");
}

#[test]
fn swapped_tables_fail_the_invariant_table() {
    let t = |f| canonical_table(&Label::fixed(f), FieldMode::Complex).unwrap();
    let broken = Catalog::standard().clone().with_table(Family::W3_5, t(Family::W3_6)).with_table(Family::W3_6, t(Family::W3_5));
    let checks = run(&broken, Level::Quick);
    assert_eq!(failing(&checks), vec!["invariant-table"]);
    let detail = &checks.iter().find(|c| c.id == "invariant-table").unwrap().detail;
    assert!(detail.contains("W3_5") && detail.contains("W3_6"), "{detail}");
}

#[test]
fn non_associative_table_fails_associativity() {
    // eg = f, g² = e
    let mut t = canonical_table(&Label::fixed(Family::C3_0), FieldMode::Complex).unwrap();
    t.set(0, 2, 1, algebra3::scalar::Scalar::int(1));
    t.set(2, 2, 0, algebra3::scalar::Scalar::int(1));
    let broken = Catalog::standard().clone().with_table(Family::C3_0, t);
    let failed = failing(&run(&broken, Level::Quick));
    assert!(failed.contains(&"catalog-associativity"), "{failed:?}");
}

#[test]
fn full_passes() {
    let checks = run(Catalog::standard(), Level::Full);
    assert_eq!(checks.len(), 8);
    assert!(failing(&checks).is_empty(), "{checks:?}");
}
