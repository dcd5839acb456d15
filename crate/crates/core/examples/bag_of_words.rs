//! Bag-of-words scores ignore line order and line boundaries entirely.

use e2e_cer::{bag_of_words, Page};

fn main() -> e2e_cer::Result<()> {
    let gt = Page::from_texts("b", &["to be or", "not to be"])?;
    let hyp = Page::from_texts("b", &["not to bee", "to be or"])?;
    let b = bag_of_words(&hyp, &gt, "space")?;
    println!("TP {} FP {} FN {}", b.tp, b.fp, b.fn_);
    println!(
        "precision {:.1}%  recall {:.1}%",
        b.precision()? * 100.0,
        b.recall()? * 100.0
    );
    Ok(())
}
