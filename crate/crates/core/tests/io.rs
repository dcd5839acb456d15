mod support;

use std::fs;

use e2e_cer::io::{load_page, pair_test_set, PairOptions};
use e2e_cer::{Error, Line};
use support::fixtures;

#[test]
fn pagexml_and_text_fixtures_agree() {
    let xml = load_page(fixtures().join("sorted_table_xml/gt/table.xml")).unwrap();
    let txt = load_page(fixtures().join("sorted_table/gt/table.txt")).unwrap();
    assert!(xml.warnings.is_empty());
    let a: Vec<&str> = xml.page.lines.iter().map(Line::text).collect();
    let b: Vec<&str> = txt.page.lines.iter().map(Line::text).collect();
    assert_eq!(a, b);
    assert_eq!(xml.page.id, "table");
    assert_eq!(xml.page.lines[0].id(), Some("g1"));
    assert!(xml.page.lines.iter().all(|l| l.baseline().is_some()));
}

#[test]
fn plain_text_normalization() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    fs::write(&path, "  a b\r\n\r\nc  \n").unwrap();
    let doc = load_page(&path).unwrap();
    let texts: Vec<&str> = doc.page.lines.iter().map(Line::text).collect();
    assert_eq!(texts, ["a b", "", "c"]);
    assert_eq!(doc.warnings.len(), 2);
    assert!(matches!(
        load_page(dir.path().join("missing.txt")),
        Err(Error::Io { .. })
    ));
}

fn write(dir: &std::path::Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

#[test]
fn directories_pair_by_stem() {
    let (gt, hyp) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    write(gt.path(), "a.txt", "x\n");
    write(gt.path(), "b.txt", "y\n");
    write(hyp.path(), "b.txt", "y\n");
    write(hyp.path(), "a.txt", "z\n");
    write(hyp.path(), "c.txt", "w\n");

    let paired = pair_test_set(gt.path(), hyp.path(), PairOptions::default()).unwrap();
    let ids: Vec<&str> = paired.set.pairs().iter().map(|p| p.id.as_str()).collect();
    assert_eq!(ids, ["a", "b"]);
    assert_eq!(paired.set.pairs()[0].hyp.lines[0].text(), "z");
    assert_eq!(paired.warnings.len(), 1);
    assert!(paired.warnings[0].contains('c'));

    let strict = PairOptions {
        strict_hyp: true,
        ..Default::default()
    };
    let paired = pair_test_set(gt.path(), hyp.path(), strict).unwrap();
    let extra = &paired.set.pairs()[2];
    assert_eq!(extra.id, "c");
    assert!(extra.gt.is_empty());
}

#[test]
fn unpaired_and_duplicate_files() {
    let (gt, hyp) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    write(gt.path(), "a.txt", "x\n");
    write(gt.path(), "b.txt", "y\n");
    write(hyp.path(), "a.txt", "x\n");

    let err = pair_test_set(gt.path(), hyp.path(), PairOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Unpaired(ref id) if id == "b"));
    let skip = PairOptions {
        skip_unpaired_gt: true,
        ..Default::default()
    };
    let paired = pair_test_set(gt.path(), hyp.path(), skip).unwrap();
    assert_eq!(paired.set.len(), 1);
    assert!(paired.warnings[0].contains("'b'"));

    write(hyp.path(), "a.xml", "<PcGts/>");
    let err = pair_test_set(gt.path(), hyp.path(), skip).unwrap_err();
    assert!(matches!(err, Error::DuplicateId { ref id, .. } if id == "a"));

    let err = pair_test_set(gt.path().join("a.txt"), hyp.path(), skip).unwrap_err();
    assert!(matches!(err, Error::Config(_)));
}

#[test]
fn single_files_form_one_pair() {
    let dir = fixtures().join("sorted_table");
    let paired = pair_test_set(
        dir.join("gt/table.txt"),
        dir.join("hyp/table.txt"),
        PairOptions::default(),
    )
    .unwrap();
    assert_eq!(paired.set.len(), 1);
    assert_eq!(paired.set.pairs()[0].gt.len(), 12);
    assert_eq!(paired.set.pairs()[0].hyp.len(), 9);
}
