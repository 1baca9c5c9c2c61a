//! Replays the fuzz corpus seeds through the same round-trip checks as the
//! fuzz targets, so they run on stable with the ordinary test suite.

use std::path::PathBuf;

use ocl_core::experiment::ExperimentConfig;
use ocl_core::graph::Color;
use ocl_core::io::{parse_document, write_document};
use ocl_core::registry::AlgoSpec;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            (path.display().to_string(), std::fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn documents_round_trip() {
    let mut parsed = 0;
    for (name, bytes) in seeds("parse_document") {
        let Ok(doc) = parse_document(&bytes) else {
            continue;
        };
        parsed += 1;
        let text = write_document(&doc.instance, doc.scripts.as_deref());
        let again = parse_document(text.as_bytes()).unwrap();
        assert_eq!(write_document(&again.instance, again.scripts.as_deref()), text, "{name}");
    }
    assert!(parsed >= 4);
}

#[test]
fn colors_round_trip() {
    for (name, bytes) in seeds("parse_color") {
        if let Ok(color) = std::str::from_utf8(&bytes).unwrap().parse::<Color>() {
            assert_eq!(color.to_string().parse::<Color>().unwrap(), color, "{name}");
        }
    }
}

#[test]
fn algorithms_round_trip() {
    for (name, bytes) in seeds("parse_algo") {
        let spec: AlgoSpec = std::str::from_utf8(&bytes).unwrap().parse().unwrap();
        assert_eq!(spec.to_string().parse::<AlgoSpec>().unwrap(), spec, "{name}");
    }
}

#[test]
fn configs_decode() {
    let ok = seeds("experiment_config")
        .iter()
        .filter(|(_, b)| serde_json::from_slice::<ExperimentConfig>(b).is_ok())
        .count();
    assert!(ok >= 1);
}

mod arbitrary_input {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn parsers_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..256)) {
            let _ = parse_document(&bytes);
            let _ = serde_json::from_slice::<ExperimentConfig>(&bytes);
            let text = String::from_utf8_lossy(&bytes);
            let _ = text.parse::<Color>();
            let _ = text.parse::<AlgoSpec>();
        }

        #[test]
        fn json_shaped_documents_never_panic(
            n in 0usize..6,
            order in prop::collection::vec(0usize..8, 0..8),
            edges in prop::collection::vec((0usize..8, 0usize..8), 0..8),
            preds in prop::collection::vec((0usize..8, "[a-z#/]{0,3}"), 0..6),
        ) {
            let preds: serde_json::Map<String, serde_json::Value> = preds
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.into()))
                .collect();
            let doc = serde_json::json!({ "n": n, "order": order, "edges": edges, "predictions": preds });
            if let Ok(parsed) = parse_document(doc.to_string().as_bytes()) {
                let text = write_document(&parsed.instance, parsed.scripts.as_deref());
                prop_assert!(parse_document(text.as_bytes()).is_ok());
            }
        }
    }
}
