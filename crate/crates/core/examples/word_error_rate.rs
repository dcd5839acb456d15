//! Word error rates of the column-sorted table fixture, with and without
//! reading order.

use e2e_cer::io::load_page;
use e2e_cer::{evaluate, Level, MeasureConfig};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/sorted_table");

fn main() -> e2e_cer::Result<()> {
    let gt = load_page(format!("{FIXTURES}/gt/table.txt"))?.page;
    let hyp = load_page(format!("{FIXTURES}/hyp/table.txt"))?.page;

    for reading_order in [true, false] {
        let config = MeasureConfig::new(Level::Word, reading_order, false, false);
        let c = *evaluate(&hyp, &gt, &config)?.counts().unwrap();
        println!(
            "{:<8} INS {} DEL {} SUB {} COR {}  WER {:.1}%",
            config.label(),
            c.ins,
            c.del,
            c.sub,
            c.cor,
            c.cer()? * 100.0
        );
    }
    Ok(())
}
