//! Maps pages onto integer symbol sequences so the solvers work the same way
//! for characters and for words.

use std::collections::HashMap;

use crate::error::Result;
use crate::tokenize::TokenizerRegistry;
use crate::types::{Level, Page, SPACE};

/// A symbol of a text line. `Space` is the separator that a line break may
/// stand in for when segmentation errors are forgiven.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Sym {
    Space,
    Tok(u32),
}

#[derive(Debug, Clone)]
pub(crate) struct Encoded {
    pub hyp: Vec<Vec<Sym>>,
    pub gt: Vec<Vec<Sym>>,
    /// Cost of inserting or deleting a `Space`: 1 for characters, 0 for the
    /// word separator.
    pub space_weight: u32,
    level: Level,
    words: Vec<String>,
}

impl Encoded {
    pub fn weight(&self, s: Sym) -> u32 {
        match s {
            Sym::Space => self.space_weight,
            Sym::Tok(_) => 1,
        }
    }

    pub fn line_weight(&self, line: &[Sym]) -> u32 {
        line.iter().map(|&s| self.weight(s)).sum()
    }

    /// The symbols that count towards lengths and edit operations.
    pub fn counted(&self, line: &[Sym]) -> Vec<Sym> {
        line.iter()
            .copied()
            .filter(|&s| self.weight(s) > 0)
            .collect()
    }

    pub fn decode(&self, line: &[Sym]) -> String {
        let mut out = String::new();
        for &s in line {
            match (s, self.level) {
                (Sym::Space, _) => out.push(SPACE),
                (Sym::Tok(c), Level::Character) => {
                    out.push(char::from_u32(c).unwrap_or(char::REPLACEMENT_CHARACTER))
                }
                (Sym::Tok(w), _) => out.push_str(&self.words[w as usize]),
            }
        }
        out
    }
}

pub(crate) fn encode(
    hyp: &Page,
    gt: &Page,
    level: Level,
    segmentation: bool,
    registry: &TokenizerRegistry,
    tokenizer: &str,
) -> Result<Encoded> {
    match level {
        Level::Character => {
            let chars = |p: &Page| {
                p.lines
                    .iter()
                    .map(|l| {
                        l.text()
                            .chars()
                            .map(|c| {
                                if c == SPACE {
                                    Sym::Space
                                } else {
                                    Sym::Tok(c as u32)
                                }
                            })
                            .collect()
                    })
                    .collect()
            };
            Ok(Encoded {
                hyp: chars(hyp),
                gt: chars(gt),
                space_weight: 1,
                level,
                words: Vec::new(),
            })
        }
        Level::Word | Level::BagOfWords => {
            let mut vocab: HashMap<String, u32> = HashMap::new();
            let mut words = Vec::new();
            let mut words_of = |p: &Page| -> Result<Vec<Vec<Sym>>> {
                let mut lines = Vec::with_capacity(p.len());
                for line in &p.lines {
                    let mut syms = Vec::new();
                    for (k, tok) in registry.tokenize(line, tokenizer)?.into_iter().enumerate() {
                        if segmentation && k > 0 {
                            syms.push(Sym::Space);
                        }
                        let next = vocab.len() as u32;
                        let id = *vocab.entry(tok).or_insert_with_key(|t| {
                            words.push(t.clone());
                            next
                        });
                        syms.push(Sym::Tok(id));
                    }
                    lines.push(syms);
                }
                Ok(lines)
            };
            let hyp_lines = words_of(hyp)?;
            let gt_lines = words_of(gt)?;
            Ok(Encoded {
                hyp: hyp_lines,
                gt: gt_lines,
                space_weight: 0,
                level,
                words,
            })
        }
    }
}
