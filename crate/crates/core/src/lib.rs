//! End-to-end error rates between ground-truth and hypothesis pages of a text
//! recognition system.
//!
//! Lines are compared as whole pages, so errors of the line detection and of
//! the reading order show up in the rates. Three switches shape the measure:
//! reading order (`R`), baseline geometry (`G`) and forgiven segmentation
//! errors (`S`). Configurations with `R` are solved exactly by [`solve`], the
//! others greedily by [`greedy_ld`]. [`evaluate`] picks the right one.

pub mod cli;
pub mod dp;
pub mod edit_distance;
mod encode;
pub mod error;
pub mod evaluate;
pub mod geometry;
pub mod greedy;
pub mod io;
pub mod report;
pub mod tokenize;
pub mod types;

pub use dp::{solve, solve_with, Solution, Strategy};
pub use edit_distance::{levenshtein, levenshtein_str, CharAlignment, EditOp, Levenshtein};
pub use error::{Error, Result};
pub use evaluate::{evaluate, Evaluation, Evaluator, PageResult};
pub use geometry::{AcceptAll, Baseline, BaselineNeighborhood, Neighborhood, Point};
pub use greedy::{greedy_ld, greedy_ld_with, CandidateMatch};
pub use tokenize::{bag_of_words, BowCounts, Tokenizer, TokenizerRegistry};
pub use types::{
    aggregate, Alignment, ErrorCounts, Level, Line, MeasureConfig, Page, PagePair, TestSet,
};
