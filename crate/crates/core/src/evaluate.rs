//! Per-page and test-set evaluation for any measure configuration.

use rayon::prelude::*;
use serde::Serialize;

use crate::dp::{solve_with, Strategy};
use crate::error::{Error, Result};
use crate::greedy::greedy_ld_with;
use crate::tokenize::{bag_of_words_with, BowCounts, TokenizerRegistry};
use crate::types::{aggregate, Alignment, ErrorCounts, Level, MeasureConfig, Page, TestSet};

/// Scores of one page pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Scores {
    /// Error rate measures (CER, WER).
    Edit {
        distance: u64,
        counts: ErrorCounts,
        alignment: Alignment,
    },
    BagOfWords(BowCounts),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PageResult {
    pub id: String,
    pub scores: Scores,
}

impl PageResult {
    pub fn counts(&self) -> Option<&ErrorCounts> {
        match &self.scores {
            Scores::Edit { counts, .. } => Some(counts),
            Scores::BagOfWords(_) => None,
        }
    }

    pub fn bow(&self) -> Option<&BowCounts> {
        match &self.scores {
            Scores::BagOfWords(b) => Some(b),
            Scores::Edit { .. } => None,
        }
    }

    pub fn alignment(&self) -> Option<&Alignment> {
        match &self.scores {
            Scores::Edit { alignment, .. } => Some(alignment),
            Scores::BagOfWords(_) => None,
        }
    }
}

/// Results for a whole test set, in input order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub config: MeasureConfig,
    pub pages: Vec<PageResult>,
    pub warnings: Vec<String>,
}

impl Evaluation {
    /// Sum of the per-page counts; `None` for the bag-of-words level.
    pub fn total_counts(&self) -> Option<ErrorCounts> {
        (self.config.level != Level::BagOfWords)
            .then(|| aggregate(self.pages.iter().filter_map(PageResult::counts)))
    }

    pub fn total_bow(&self) -> Option<BowCounts> {
        match self.config.level {
            Level::BagOfWords => Some(
                self.pages
                    .iter()
                    .filter_map(PageResult::bow)
                    .fold(BowCounts::default(), |a, &b| a + b),
            ),
            _ => None,
        }
    }
}

/// Notes on switches that the configuration ignores.
pub fn config_warnings(config: &MeasureConfig) -> Vec<String> {
    let mut out = Vec::new();
    if config.level == Level::BagOfWords {
        if config.reading_order {
            out.push("bag-of-words ignores the reading order".to_string());
        }
        if config.segmentation {
            out.push("bag-of-words ignores segmentation".to_string());
        }
        if config.geometry {
            out.push("bag-of-words ignores geometry".to_string());
        }
    }
    out
}

/// Evaluates pages with a fixed tokenizer registry and search strategy.
#[derive(Debug, Clone, Default)]
pub struct Evaluator {
    registry: TokenizerRegistry,
    strategy: Strategy,
    jobs: Option<usize>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_registry(mut self, registry: TokenizerRegistry) -> Self {
        self.registry = registry;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// Limits the number of pages evaluated at the same time.
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs.max(1));
        self
    }

    pub fn registry(&self) -> &TokenizerRegistry {
        &self.registry
    }

    pub fn evaluate_page(
        &self,
        hyp: &Page,
        gt: &Page,
        config: &MeasureConfig,
    ) -> Result<PageResult> {
        let scores = if config.level == Level::BagOfWords {
            config.validate()?;
            Scores::BagOfWords(bag_of_words_with(
                &self.registry,
                hyp,
                gt,
                &config.tokenizer,
            )?)
        } else {
            let solution = if config.reading_order {
                solve_with(hyp, gt, config, None, self.strategy, &self.registry)?
            } else {
                greedy_ld_with(hyp, gt, config, None, &self.registry)?
            };
            Scores::Edit {
                distance: solution.distance,
                counts: solution.counts,
                alignment: solution.alignment,
            }
        };
        Ok(PageResult {
            id: gt.id.clone(),
            scores,
        })
    }

    pub fn evaluate_set(&self, set: &TestSet, config: &MeasureConfig) -> Result<Evaluation> {
        let run = || {
            set.pairs()
                .par_iter()
                .map(|p| {
                    let mut r = self.evaluate_page(&p.hyp, &p.gt, config)?;
                    r.id = p.id.clone();
                    Ok(r)
                })
                .collect::<Result<Vec<_>>>()
        };
        let pages = match self.jobs {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
                .install(run)?,
            None => run()?,
        };
        Ok(Evaluation {
            config: config.clone(),
            pages,
            warnings: config_warnings(config),
        })
    }
}

/// Evaluates one page pair with default tokenizers.
pub fn evaluate(hyp: &Page, gt: &Page, config: &MeasureConfig) -> Result<PageResult> {
    Evaluator::default().evaluate_page(hyp, gt, config)
}
