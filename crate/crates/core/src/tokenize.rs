//! Word tokenizers and the bag-of-words measure.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::types::{Line, Page, SPACE};

/// Id of the built-in tokenizer splitting at runs of U+0020.
pub const DEFAULT_TOKENIZER: &str = "space";

/// Deterministic, stateless mapping from line text to tokens.
pub trait Tokenizer: Send + Sync {
    fn tokenize(&self, text: &str) -> Vec<String>;
}

impl<F> Tokenizer for F
where
    F: Fn(&str) -> Vec<String> + Send + Sync,
{
    fn tokenize(&self, text: &str) -> Vec<String> {
        self(text)
    }
}

/// Splits at runs of the space character; other whitespace is kept.
#[derive(Debug, Clone, Copy, Default)]
pub struct SpaceTokenizer;

impl Tokenizer for SpaceTokenizer {
    fn tokenize(&self, text: &str) -> Vec<String> {
        text.split(SPACE)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect()
    }
}

/// Splits at any Unicode whitespace.
#[derive(Debug, Clone, Copy, Default)]
pub struct WhitespaceTokenizer;

impl Tokenizer for WhitespaceTokenizer {
    fn tokenize(&self, text: &str) -> Vec<String> {
        text.split_whitespace().map(str::to_string).collect()
    }
}

/// Tokenizers addressable by string id.
#[derive(Clone)]
pub struct TokenizerRegistry {
    entries: HashMap<String, Arc<dyn Tokenizer>>,
}

impl std::fmt::Debug for TokenizerRegistry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut ids: Vec<_> = self.entries.keys().collect();
        ids.sort();
        f.debug_struct("TokenizerRegistry")
            .field("ids", &ids)
            .finish()
    }
}

impl Default for TokenizerRegistry {
    fn default() -> Self {
        let mut reg = TokenizerRegistry {
            entries: HashMap::new(),
        };
        reg.register(DEFAULT_TOKENIZER, SpaceTokenizer);
        reg.register("whitespace", WhitespaceTokenizer);
        reg
    }
}

impl TokenizerRegistry {
    pub fn register(&mut self, id: impl Into<String>, tokenizer: impl Tokenizer + 'static) {
        self.entries.insert(id.into(), Arc::new(tokenizer));
    }

    pub fn get(&self, id: &str) -> Result<&dyn Tokenizer> {
        self.entries
            .get(id)
            .map(|t| t.as_ref())
            .ok_or_else(|| Error::config(format!("unknown tokenizer '{id}'")))
    }

    pub fn ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.entries.keys().map(String::as_str).collect();
        ids.sort_unstable();
        ids
    }

    /// Tokens of one line. Empty tokens are never returned.
    pub fn tokenize(&self, line: &Line, id: &str) -> Result<Vec<String>> {
        let mut tokens = self.get(id)?.tokenize(line.text());
        tokens.retain(|t| !t.is_empty());
        Ok(tokens)
    }

    /// The page with every line replaced by its token sequence.
    pub fn word_level(&self, page: &Page, id: &str) -> Result<Vec<Vec<String>>> {
        page.lines.iter().map(|l| self.tokenize(l, id)).collect()
    }
}

/// Tokenizes with a tokenizer from the default registry.
pub fn tokenize(line: &Line, id: &str) -> Result<Vec<String>> {
    TokenizerRegistry::default().tokenize(line, id)
}

/// Bag-of-words tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BowCounts {
    pub tp: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl BowCounts {
    pub fn precision(&self) -> Result<f64> {
        let hyp = self.tp + self.fp;
        if hyp == 0 {
            return Err(Error::UndefinedRate("hypothesis token count"));
        }
        Ok(self.tp as f64 / hyp as f64)
    }

    pub fn recall(&self) -> Result<f64> {
        let gt = self.tp + self.fn_;
        if gt == 0 {
            return Err(Error::UndefinedRate("ground-truth token count"));
        }
        Ok(self.tp as f64 / gt as f64)
    }
}

impl std::ops::Add for BowCounts {
    type Output = BowCounts;

    fn add(self, rhs: BowCounts) -> BowCounts {
        BowCounts {
            tp: self.tp + rhs.tp,
            fp: self.fp + rhs.fp,
            fn_: self.fn_ + rhs.fn_,
        }
    }
}

/// Multiset overlap of the tokens of two pages.
pub fn bag_of_words_with(
    registry: &TokenizerRegistry,
    hyp: &Page,
    gt: &Page,
    id: &str,
) -> Result<BowCounts> {
    let mut balance: HashMap<String, (u64, u64)> = HashMap::new();
    let (mut n_hyp, mut n_gt) = (0u64, 0u64);
    for line in &hyp.lines {
        for tok in registry.tokenize(line, id)? {
            balance.entry(tok).or_default().0 += 1;
            n_hyp += 1;
        }
    }
    for line in &gt.lines {
        for tok in registry.tokenize(line, id)? {
            balance.entry(tok).or_default().1 += 1;
            n_gt += 1;
        }
    }
    let tp: u64 = balance.values().map(|&(h, g)| h.min(g)).sum();
    Ok(BowCounts {
        tp,
        fp: n_hyp - tp,
        fn_: n_gt - tp,
    })
}

pub fn bag_of_words(hyp: &Page, gt: &Page, id: &str) -> Result<BowCounts> {
    bag_of_words_with(&TokenizerRegistry::default(), hyp, gt, id)
}
