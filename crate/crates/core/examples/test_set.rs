//! Evaluating a directory pair and printing both report formats.

use e2e_cer::io::{pair_test_set, PairOptions};
use e2e_cer::report::Report;
use e2e_cer::{Evaluator, Level, MeasureConfig};

const FIXTURES: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/fixtures/sorted_table_xml"
);

fn main() -> e2e_cer::Result<()> {
    let paired = pair_test_set(
        format!("{FIXTURES}/gt"),
        format!("{FIXTURES}/hyp"),
        PairOptions::default(),
    )?;
    let config = MeasureConfig::new(Level::Word, true, false, true);
    let eval = Evaluator::new()
        .with_jobs(2)
        .evaluate_set(&paired.set, &config)?;
    let report = Report::new(&eval);
    print!("{}", report.to_table());
    println!();
    print!("{}", report.to_json());
    Ok(())
}
