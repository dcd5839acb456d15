//! Character error rate of a small page with the default configuration
//! (reading order on).

use e2e_cer::{evaluate, MeasureConfig, Page};

fn main() -> e2e_cer::Result<()> {
    let gt = Page::from_texts(
        "letter",
        &["Dear Sir,", "thank you for your letter", "of May 3rd."],
    )?;
    let hyp = Page::from_texts(
        "letter",
        &["Dear Sir.", "thank yon for your lettcr", "of May 3rd"],
    )?;

    let config = MeasureConfig::default();
    let result = evaluate(&hyp, &gt, &config)?;
    let c = result.counts().expect("edit measure");
    println!(
        "{}: ins {} del {} sub {} cor {}",
        config.label(),
        c.ins,
        c.del,
        c.sub,
        c.cor
    );
    println!(
        "CER {:.2}%  precision {:.2}%  recall {:.2}%",
        c.cer()? * 100.0,
        c.precision()? * 100.0,
        c.recall()? * 100.0
    );
    if let Some(a) = result.alignment() {
        println!("matched line pairs: {:?}", a.matched);
    }
    Ok(())
}
