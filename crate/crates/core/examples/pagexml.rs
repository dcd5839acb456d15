//! Reading a PageXML file: lines in reading order, with ids and baselines.

use e2e_cer::io::load_page;

fn main() -> e2e_cer::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/tests/fixtures/sorted_table_xml/hyp/table.xml"
        )
        .to_string()
    });
    let doc = load_page(&path)?;
    println!("page '{}' with {} lines", doc.page.id, doc.page.len());
    for line in &doc.page.lines {
        let points = line.baseline().map_or(0, |b| b.points().len());
        println!(
            "  {:<4} {:<20} {points} baseline points",
            line.id().unwrap_or("-"),
            line.text()
        );
    }
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    Ok(())
}
