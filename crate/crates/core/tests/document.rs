use algebra3::catalog::{sampled_labels, Catalog};
use algebra3::document::{read_documents, CatalogExport, TableDocument};
use algebra3::scalar::FieldMode;
use algebra3::Error;

#[test]
fn documents_round_trip_for_the_catalog() {
    for mode in [FieldMode::Real, FieldMode::Complex] {
        for dim in 1..=3 {
            for label in sampled_labels(mode, dim) {
                let t = Catalog::standard().table(&label, mode).unwrap();
                let doc = TableDocument::from_table(&t);
                let text = doc.to_json();
                let back = TableDocument::parse(&text).unwrap();
                assert_eq!(back, doc);
                assert_eq!(back.to_table().unwrap(), t, "{label}");
                assert_eq!(back.to_json(), text);
            }
        }
    }
}

#[test]
fn field_order_and_basis_names() {
    let text = r#"{"table": [[["1/2+i"]]], "field": "complex", "basis": ["u"], "dim": 1, "format": 1}"#;
    let doc = TableDocument::parse(text).unwrap();
    assert_eq!(doc.names(), vec!["u"]);
    let t = doc.to_table().unwrap();
    assert_eq!(t.get(0, 0, 0).to_string(), "1/2+i");
    let again = TableDocument::parse(&doc.to_json()).unwrap();
    assert_eq!(again, doc);
}

#[test]
fn malformed_documents() {
    let bad = |text: &str| match TableDocument::parse(text).and_then(|d| d.to_table()) {
        Err(Error::Document(msg)) => msg,
        Err(e) => panic!("{e:?}"),
        Ok(_) => panic!("accepted {text}"),
    };
    let one = |entry: &str, field: &str| format!(r#"{{"format":1,"dim":1,"field":"{field}","table":[[["{entry}"]]]}}"#);
    assert!(bad(&one("1/0", "real")).contains("table[0][0][0]"));
    assert!(bad(&one("x", "real")).contains("table[0][0][0]"));
    assert!(bad(r#"{"format":2,"dim":1,"field":"real","table":[[["1"]]]}"#).contains("format"));
    assert!(bad(r#"{"format":1,"dim":2,"field":"real","table":[[["1"]]]}"#).contains("rows"));
    assert!(bad(r#"{"format":1,"dim":1,"field":"real","basis":["a","b"],"table":[[["1"]]]}"#).contains("basis"));
    assert!(bad(r#"{"format":1,"dim":1,"field":"quaternion","table":[[["1"]]]}"#).contains("line 1"));
    assert_eq!(
        TableDocument::parse(&one("i", "real")).unwrap().to_table(),
        Err(Error::RealModeTableWithComplexEntries)
    );
}

#[test]
fn export_is_stable_and_readable() {
    let a = CatalogExport::build(Catalog::standard()).unwrap();
    let b = CatalogExport::build(Catalog::standard()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    // 2 + 8 + 25 fixed and 6 family members over R, 2 + 7 + 23 and 4 over C
    assert_eq!(a.entries.len(), 41 + 36);
    let docs = read_documents(&a.to_json()).unwrap();
    assert_eq!(docs.len(), a.entries.len());
    assert!(docs.iter().all(|(name, _)| name.is_some()));
    let w = a.entries.iter().find(|e| e.label == "W3_3" && e.k.as_deref() == Some("2")).unwrap();
    assert_eq!(w.document.table[2][1], vec!["2", "0", "0"]);
    assert_eq!((w.profile.alpha, w.profile.beta, w.profile.gamma), (1, 1, 1));
}
