//! Registering a tokenizer that also splits off punctuation, then using it
//! for word error rates.

use e2e_cer::{Evaluator, Level, MeasureConfig, Page, TokenizerRegistry};

fn punctuation_aware(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for word in text.split(' ').filter(|w| !w.is_empty()) {
        let body = word.trim_end_matches(|c: char| c.is_ascii_punctuation());
        if !body.is_empty() {
            out.push(body.to_string());
        }
        out.extend(word[body.len()..].chars().map(String::from));
    }
    out
}

fn main() -> e2e_cer::Result<()> {
    let mut registry = TokenizerRegistry::default();
    registry.register("punct", punctuation_aware);
    let evaluator = Evaluator::new().with_registry(registry);

    let gt = Page::from_texts("t", &["Hello, world."])?;
    let hyp = Page::from_texts("t", &["Hello world."])?;
    for tokenizer in ["space", "punct"] {
        let config = MeasureConfig {
            tokenizer: tokenizer.to_string(),
            ..MeasureConfig::new(Level::Word, true, false, false)
        };
        let c = *evaluator
            .evaluate_page(&hyp, &gt, &config)?
            .counts()
            .unwrap();
        println!(
            "{tokenizer:>6}: {} errors over {} tokens",
            c.errors(),
            c.gt_len
        );
    }
    Ok(())
}
