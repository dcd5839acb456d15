//! Forgiving segmentation errors: a hypothesis line that should have been
//! two lines costs nothing once the split is allowed.

use e2e_cer::{solve, Level, Line, MeasureConfig, Page};

fn main() -> e2e_cer::Result<()> {
    let gt = Page::from_texts("s", &["Kainz Josina", "Led."])?;
    let hyp = Page::from_texts("s", &["Kainz Josina Led."])?;

    for segmentation in [false, true] {
        let config = MeasureConfig::new(Level::Character, true, false, segmentation);
        let sol = solve(&hyp, &gt, &config, None)?;
        println!("{}: distance {}", config.label(), sol.distance);
        if let Some(seg) = &sol.alignment.segmented_hyp {
            let lines: Vec<&str> = seg.lines.iter().map(Line::text).collect();
            println!("  re-segmented hypothesis: {lines:?}");
        }
    }
    Ok(())
}
