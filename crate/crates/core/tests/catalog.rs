use algebra3::algebra::{invariant_profile, StructureTable};
use algebra3::catalog::{
    canonical_table, catalog_list, enumerate_curled2, expected_invariants, metadata, sampled_labels, separator, Family,
    Label,
};
use algebra3::scalar::{FieldMode, Scalar};
use algebra3::Error;

fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::int(x)).collect()
}

#[test]
fn canonical_table_examples() {
    let u4 = canonical_table(&Label::fixed(Family::U3_4), FieldMode::Real).unwrap();
    let e = v(&[1, 0, 0]);
    for x in [v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])] {
        assert_eq!(u4.multiply(&e, &x).unwrap(), x);
        assert_eq!(u4.multiply(&x, &e).unwrap(), x);
    }
    assert_eq!(u4.product(1, 1), v(&[0, 0, 1]));
    for (i, j) in [(1, 2), (2, 1), (2, 2)] {
        assert_eq!(u4.product(i, j), v(&[0, 0, 0]));
    }

    let w0 = canonical_table(&Label::with_k(Family::W3_3, Scalar::int(0)), FieldMode::Complex).unwrap();
    let mut expect = StructureTable::zero(3, FieldMode::Complex);
    expect.set_product(1, 1, &v(&[1, 0, 0]));
    expect.set_product(2, 2, &v(&[1, 0, 0]));
    assert_eq!(w0, expect);

    let zero = canonical_table(&Label::fixed(Family::C3_0), FieldMode::Real).unwrap();
    assert!(zero.is_zero_table());

    assert!(matches!(
        canonical_table(&Label::fixed(Family::S3_3m), FieldMode::Complex),
        Err(Error::RealOnlyLabel(_))
    ));
    assert!(matches!(canonical_table(&Label::fixed(Family::W3_3), FieldMode::Real), Err(Error::MissingParameter(_))));
}

#[test]
fn list_counts() {
    let fixed = |mode, dim| catalog_list(mode, dim).iter().filter(|l| !l.is_stub()).count();
    let stubs = |mode, dim| catalog_list(mode, dim).iter().filter(|l| l.is_stub()).count();
    // 5 unital, 5 curled, 4 straight and 9 waved algebras plus one family
    assert_eq!((fixed(FieldMode::Complex, 3), stubs(FieldMode::Complex, 3)), (23, 1));
    // the reals add U3_2m, S3_3m and the W3_3m family
    assert_eq!((fixed(FieldMode::Real, 3), stubs(FieldMode::Real, 3)), (25, 2));
    let names: Vec<String> = catalog_list(FieldMode::Complex, 1).iter().map(|l| l.to_string()).collect();
    assert_eq!(names, vec!["A1_0", "A1_1"]);
    assert_eq!(fixed(FieldMode::Complex, 2), 7);
    assert_eq!(fixed(FieldMode::Real, 2), 8);
    let stub = catalog_list(FieldMode::Complex, 3).into_iter().find(|l| l.is_stub()).unwrap();
    assert_eq!(stub.to_string(), "W3_3(k) family");
}

#[test]
fn expected_invariant_examples() {
    let abc = |label: &Label, mode| {
        let p = expected_invariants(label, mode).unwrap();
        (p.alpha, p.beta, p.gamma)
    };
    assert_eq!(abc(&Label::fixed(Family::W3_5), FieldMode::Real), (2, 2, 1));
    assert_eq!(abc(&Label::fixed(Family::C3_4), FieldMode::Real), (3, 0, 2));
    for k in [Scalar::int(0), Scalar::int(1), Scalar::int(2), Scalar::gaussian(1, 1)] {
        assert_eq!(abc(&Label::with_k(Family::W3_3, k), FieldMode::Complex), (1, 1, 1));
    }
}

#[test]
fn stored_profiles_match_the_tables() {
    for mode in [FieldMode::Real, FieldMode::Complex] {
        for dim in 1..=3 {
            for label in sampled_labels(mode, dim) {
                let t = canonical_table(&label, mode).unwrap();
                assert_eq!(invariant_profile(&t).unwrap(), expected_invariants(&label, mode).unwrap(), "{label}");
                let m = metadata(&label).unwrap();
                let p = invariant_profile(&t).unwrap();
                assert_eq!((m.commutative, m.unital, m.zeropotent), (p.commutative, p.unital, p.zeropotent), "{label}");
            }
        }
    }
}

#[test]
fn zeropotent_algebras_are_c0_and_c1() {
    let zp: Vec<Family> = catalog_list(FieldMode::Real, 3)
        .into_iter()
        .filter(|l| !l.is_stub() && metadata(l).unwrap().zeropotent)
        .map(|l| l.family)
        .collect();
    assert_eq!(zp, vec![Family::C3_0, Family::C3_1]);
}

#[test]
fn distinct_labels_are_separated() {
    for mode in [FieldMode::Real, FieldMode::Complex] {
        for dim in 1..=3 {
            let labels = sampled_labels(mode, dim);
            for a in &labels {
                for b in &labels {
                    let pa = expected_invariants(a, mode).unwrap();
                    let pb = expected_invariants(b, mode).unwrap();
                    assert_eq!(separator(a, &pa, b, &pb).is_some(), a != b, "{a} / {b}");
                }
            }
        }
    }
}

#[test]
fn curled_two_dimensional_solutions() {
    let sols = enumerate_curled2();
    assert_eq!(sols.len(), 7);
    assert!(sols.contains(&[0, 0, 0, 0, 0, 0]));
    assert!(sols.contains(&[1, 1, 0, 1, 1, 0]));
    // independent check of the equations behind each tuple: the table must
    // be associative with e² = ke, f² = lf, ef = ae + bf, fe = ce + df
    for s in &sols {
        let [k, l, a, b, c, d] = s.map(|x| x as i64);
        let mut t = StructureTable::zero(2, FieldMode::Real);
        t.set_product(0, 0, &v(&[k, 0]));
        t.set_product(1, 1, &v(&[0, l]));
        t.set_product(0, 1, &v(&[a, b]));
        t.set_product(1, 0, &v(&[c, d]));
        assert!(t.check_associativity().is_empty(), "{s:?}");
    }
    // and every associative 0/1 tuple of this shape is listed
    let mut count = 0;
    for bits in 0..64u8 {
        let s: [u8; 6] = std::array::from_fn(|i| (bits >> (5 - i)) & 1);
        let [k, l, a, b, c, d] = s.map(|x| x as i64);
        let mut t = StructureTable::zero(2, FieldMode::Real);
        t.set_product(0, 0, &v(&[k, 0]));
        t.set_product(1, 1, &v(&[0, l]));
        t.set_product(0, 1, &v(&[a, b]));
        t.set_product(1, 0, &v(&[c, d]));
        // every element curled: (xe + yf)² stays on the line of xe + yf
        let curled = algebra3::algebra::algebra_shape(&t) == algebra3::algebra::Shape::Curled;
        if t.check_associativity().is_empty() && curled && (a <= l && c <= l && b <= k && d <= k) {
            count += 1;
            assert!(sols.contains(&s), "{s:?} missing");
        }
    }
    assert_eq!(count, 7);
}
