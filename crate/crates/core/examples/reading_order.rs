//! The same page scored with and without the reading-order constraint.
//! Swapping two lines costs nothing for the greedy assignment but is
//! penalized by the exact solver.

use e2e_cer::{greedy_ld, solve, Level, MeasureConfig, Page};

fn main() -> e2e_cer::Result<()> {
    let gt = Page::from_texts("t", &["Schönbrunn", "Aberg", "102", "103"])?;
    let hyp = Page::from_texts("t", &["Schönbrunn", "10", "Aberg", "103"])?;

    let exact = solve(
        &hyp,
        &gt,
        &MeasureConfig::new(Level::Character, true, false, false),
        None,
    )?;
    let free = greedy_ld(
        &hyp,
        &gt,
        &MeasureConfig::new(Level::Character, false, false, false),
        None,
    )?;

    println!("with reading order: {}", exact.distance);
    println!(
        "  W {:?}  U {:?}  V {:?}",
        exact.alignment.matched, exact.alignment.unmatched_hyp, exact.alignment.unmatched_gt
    );
    println!("without:            {}", free.distance);
    println!("  W {:?}", free.alignment.matched);
    Ok(())
}
