//! The exact solver's search strategies give the same distance; the
//! default one is much faster on long pages.

use std::time::Instant;

use e2e_cer::{solve_with, Level, MeasureConfig, Page, Strategy, TokenizerRegistry};

fn main() -> e2e_cer::Result<()> {
    let gt_lines: Vec<String> = (0..60)
        .map(|k| format!("line {k} of the ground truth"))
        .collect();
    let hyp_lines: Vec<String> = gt_lines
        .iter()
        .enumerate()
        .filter(|(k, _)| k % 17 != 3)
        .map(|(k, l)| {
            if k % 5 == 0 {
                l.replace("the", "tne")
            } else {
                l.clone()
            }
        })
        .collect();
    let gt = Page::from_texts("long", &gt_lines)?;
    let hyp = Page::from_texts("long", &hyp_lines)?;
    let config = MeasureConfig::new(Level::Character, true, false, false);
    let registry = TokenizerRegistry::default();

    for strategy in [
        Strategy::ShortestPath,
        Strategy::CharacterGrid,
        Strategy::FullTable,
    ] {
        let t = Instant::now();
        let sol = solve_with(&hyp, &gt, &config, None, strategy, &registry)?;
        println!(
            "{strategy:?}: distance {} in {:.1?}",
            sol.distance,
            t.elapsed()
        );
    }
    Ok(())
}
