//! Baseline geometry: tolerances, coverage and the neighborhood gate.

use e2e_cer::geometry::{coverage, tolerance};
use e2e_cer::{
    solve, Baseline, BaselineNeighborhood, Level, Line, MeasureConfig, Neighborhood, Page,
};

fn line(text: &str, y: i64) -> e2e_cer::Result<Line> {
    Ok(Line::new(text)?.with_baseline(Baseline::from_coords(&[(0, y), (400, y)])?))
}

fn main() -> e2e_cer::Result<()> {
    let gt = Page::new(
        "g",
        vec![line("alpha beta", 100)?, line("gamma delta", 200)?],
    );
    // Same text, but the second line was detected far away.
    let hyp = Page::new(
        "g",
        vec![line("alpha beta", 104)?, line("gamma delta", 600)?],
    );

    let config = MeasureConfig::new(Level::Word, true, true, false);
    let gt_bl: Vec<Baseline> = gt
        .lines
        .iter()
        .filter_map(|l| l.baseline().cloned())
        .collect();
    for x in 0..gt.len() {
        let tol = tolerance(&gt_bl, x, &config)?;
        for (y, h) in hyp.lines.iter().enumerate() {
            let cov = coverage(h.baseline().unwrap(), &gt_bl[x], tol);
            println!("gt {x} (tol {tol:.0}px) vs hyp {y}: coverage {cov:.2}");
        }
    }

    let nbh = BaselineNeighborhood::new(&hyp, &gt, &config)?;
    println!("hyp 1 may match gt 1: {}", nbh.is_neighbor(1, 1));

    for geometry in [false, true] {
        let config = MeasureConfig {
            geometry,
            ..config.clone()
        };
        let sol = solve(&hyp, &gt, &config, None)?;
        println!("{}: distance {}", config.label(), sol.distance);
    }
    Ok(())
}
