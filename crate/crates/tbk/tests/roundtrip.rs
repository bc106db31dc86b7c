use tbk::io::{self, BundleDoc, ExtensionDoc, FanSpec, MatroidSpec};
use tbk_core::bundle::TropicalBundle;
use tbk_core::fan::Fan;
use tbk_core::matroid::Matroid;
use tbk_core::tautological::tautological_bundle;

fn reload(b: &TropicalBundle) -> TropicalBundle {
    let text = io::to_json(&BundleDoc::canonical(b));
    let doc: BundleDoc = io::parse_json(&text, "test").unwrap();
    let again = doc.build().unwrap();
    assert_eq!(io::to_json(&BundleDoc::canonical(&again)), text);
    again
}

#[test]
fn fixtures_round_trip() {
    for text in [tbk::cli::FANO_BUNDLE, tbk::cli::VAMOS_P1, tbk::cli::U23_ZERO] {
        let b = io::parse_json::<BundleDoc>(text, "fixture").unwrap().build().unwrap();
        let again = reload(&b);
        assert_eq!(again, b);
        assert_eq!(again.matroid().labels(), b.matroid().labels());
        assert_eq!(again.fan().rays(), b.fan().rays());
        assert_eq!(again.adapted_bases(), b.adapted_bases());
    }
}

#[test]
fn generated_bundles_round_trip() {
    for m in [Matroid::uniform(2, 4).unwrap(), Matroid::fano()] {
        let t = tautological_bundle(&m).unwrap();
        assert_eq!(reload(&t), t);
    }
}

#[test]
fn csv_round_trip() {
    let b = io::parse_json::<BundleDoc>(tbk::cli::FANO_BUNDLE, "fixture").unwrap().build().unwrap();
    let csv = io::write_diagram_csv(&b);
    assert_eq!(csv, include_str!("../fixtures/fano-bundle.csv"));
    let rows = io::read_diagram_csv(&csv, b.matroid(), b.fan().rays().len()).unwrap();
    assert_eq!(rows, b.diagram());
}

#[test]
fn csv_rejects_bad_input() {
    let m = Matroid::uniform(2, 3).unwrap();
    let header = format!("ray,{}\n", m.labels().join(","));
    assert!(io::read_diagram_csv("ray,a,b,c\n0,0,0,0\n", &m, 1).is_err());
    assert!(io::read_diagram_csv(&format!("{header}0,0,0,0\n0,1,1,1\n"), &m, 2).is_err());
    assert!(io::read_diagram_csv(&format!("{header}1,0,0,0\n"), &m, 2).is_err());
    assert!(io::read_diagram_csv(&format!("{header}0,0,x,0\n"), &m, 1).is_err());
}

#[test]
fn specs_round_trip() {
    for m in [Matroid::fano(), Matroid::vamos(), Matroid::uniform(3, 5).unwrap()] {
        let spec = MatroidSpec::canonical(&m);
        let back: MatroidSpec = serde_json::from_str(&io::to_json(&spec)).unwrap();
        assert_eq!(back.build().unwrap(), m);
    }
    for f in [Fan::p1(), Fan::p2(), Fan::p1xp1(), Fan::permutahedral(4).unwrap()] {
        let spec = FanSpec::canonical(&f);
        let back: FanSpec = serde_json::from_str(&io::to_json(&spec)).unwrap();
        assert_eq!(back.build().unwrap(), f);
    }
    let named: MatroidSpec = serde_json::from_str(r#""uniform:2,4""#).unwrap();
    assert_eq!(named.build().unwrap(), Matroid::uniform(2, 4).unwrap());
    let matrix: MatroidSpec = serde_json::from_str(r#"{"labels": ["a", "b", "c"], "matrix": [[1, 0, 1], [0, 1, 1]], "prime": 2}"#).unwrap();
    assert_eq!(matrix.build().unwrap().rank(), 2);
}

#[test]
fn extension_round_trip() {
    let doc: ExtensionDoc = serde_json::from_str(
        r#"{"source": "uniform:2,3", "target": {"labels": ["e1", "e2", "e3", "z"], "bases": [["e1","e2"],["e1","e3"],["e2","e3"],["e1","z"],["e2","z"],["e3","z"]]}, "map": [0, 1, 2]}"#,
    )
    .unwrap();
    let e = doc.build().unwrap();
    let back: ExtensionDoc = serde_json::from_str(&io::to_json(&ExtensionDoc::canonical(&e))).unwrap();
    assert_eq!(back.build().unwrap().map, e.map);
    assert_eq!(back.build().unwrap().target, e.target);
}
