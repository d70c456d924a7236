mod common;

use common::{build, corpus_dir, desk_records};
use uast_core::analytics::corpus_stats;
use uast_core::schema::{compute_metadata, source_hash};
use uast_core::{validate_record, LanguageId, UniversalFileRecord};

fn sensor_stats() -> UniversalFileRecord {
    let text = std::fs::read_to_string(corpus_dir().join("fixtures/sensor_stats.py")).unwrap();
    build(LanguageId::Python, "sensor_stats.py", &text)
}

#[test]
fn fixture_metadata_block() {
    let r = sensor_stats();
    let m = &r.metadata;
    assert_eq!((m.lines, m.nodes, m.errors), (247, 1853, 0));
    assert_eq!(format!("{:.1}", m.avg_line_length), "34.2");
    assert_eq!(m.source_hash.len(), 64);
    assert_eq!(m.source_hash, source_hash(r.source().unwrap()));
    validate_record(&r).unwrap();
}

#[test]
fn fixture_density() {
    let r = sensor_stats();
    let stats = corpus_stats(std::slice::from_ref(&r));
    let density = stats[&LanguageId::Python].avg_density;
    assert!((density - 1853.0 / 247.0).abs() < 1e-12);
    assert!((density - 7.502).abs() <= 0.001, "{density}");
}

#[test]
fn three_short_lines() {
    let m = compute_metadata("a\nbb\nccc\n", &[]);
    assert_eq!(m.lines, 3);
    assert_eq!(m.avg_line_length, 2.0);
}

#[test]
fn empty_source() {
    let r = build(LanguageId::Python, "e.py", "");
    assert_eq!((r.metadata.lines, r.metadata.avg_line_length, r.metadata.errors), (0, 0.0, 0));
    assert_eq!(r.metadata.nodes, r.nodes.len());
    assert_eq!(r.nodes.len(), 1);
}

#[test]
fn hash_vectors() {
    assert_eq!(source_hash(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    assert_eq!(source_hash("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    assert_eq!(source_hash("abc"), source_hash("abc"));
}

#[test]
fn metadata_recomputes_after_json_round_trip() {
    for r in desk_records().iter().step_by(10) {
        let text = serde_json::to_string(r).unwrap();
        let back: UniversalFileRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, r);
        let again = compute_metadata(back.source().unwrap(), &back.nodes);
        assert_eq!(again, r.metadata);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn canonical_key_order() {
    let r = build(LanguageId::Python, "x.py", "x = 1\n");
    let text = serde_json::to_string(&r).unwrap();
    let keys = ["\"language\"", "\"path\"", "\"metadata\"", "\"nodes\"", "\"node_categories\"", "\"cross_language_map\""];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    let meta = ["\"lines\"", "\"avg_line_length\"", "\"nodes\"", "\"errors\"", "\"source_hash\""];
    let block = &text[text.find("\"metadata\"").unwrap()..];
    let positions: Vec<usize> = meta.iter().map(|k| block.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    assert!(!text.contains(": ") && !text.contains('\n'));
}
