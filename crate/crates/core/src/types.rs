//! Domain types shared by every solver: lines, pages, test sets, the measure
//! configuration and the error tallies derived from an alignment.
//!
//! Line and page indices are zero-based throughout the crate.

use std::collections::HashSet;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Baseline;

/// The only character treated as a word separator and as the counterpart of a
/// line break when segmentation errors are forgiven.
pub const SPACE: char = ' ';

/// One text line: its transcription and, optionally, its baseline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    baseline: Option<Baseline>,
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
}

impl Line {
    /// Creates a line, rejecting text with leading/trailing spaces or line breaks.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.starts_with(SPACE) || text.ends_with(SPACE) {
            return Err(Error::InvalidInput(format!(
                "line {text:?} has leading or trailing spaces"
            )));
        }
        if text.contains(['\n', '\r']) {
            return Err(Error::InvalidInput(format!(
                "line {text:?} contains a line break"
            )));
        }
        Ok(Line {
            text,
            baseline: None,
            id: None,
        })
    }

    /// Segments of a re-segmented hypothesis. They may begin or end with a
    /// space when the source had doubled spaces or empty lines.
    pub(crate) fn segment(text: String, baseline: Option<Baseline>, id: Option<String>) -> Self {
        Line { text, baseline, id }
    }

    /// Like [`Line::new`] but strips leading and trailing spaces first.
    /// Returns the line and whether anything was stripped.
    pub fn normalized(text: &str) -> Result<(Self, bool)> {
        let trimmed = text.trim_matches(SPACE);
        let changed = trimmed.len() != text.len();
        Ok((Line::new(trimmed)?, changed))
    }

    pub fn with_baseline(mut self, baseline: Baseline) -> Self {
        self.baseline = Some(baseline);
        self
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn baseline(&self) -> Option<&Baseline> {
        self.baseline.as_ref()
    }

    pub fn id(&self) -> Option<&str> {
        self.id.as_deref()
    }

    /// Number of characters (Unicode scalar values).
    pub fn char_len(&self) -> usize {
        self.text.chars().count()
    }

    pub(crate) fn set_baseline(&mut self, baseline: Option<Baseline>) {
        self.baseline = baseline;
    }
}

/// An ordered tuple of lines; the index of a line is its reading-order rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Page {
    pub id: String,
    pub lines: Vec<Line>,
}

impl Page {
    pub fn new(id: impl Into<String>, lines: Vec<Line>) -> Self {
        Page {
            id: id.into(),
            lines,
        }
    }

    /// Builds a page without baselines from plain strings.
    pub fn from_texts<S: AsRef<str>>(id: impl Into<String>, texts: &[S]) -> Result<Self> {
        let lines = texts
            .iter()
            .map(|t| Line::new(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Page::new(id, lines))
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Total number of characters over all lines.
    pub fn char_len(&self) -> usize {
        self.lines.iter().map(Line::char_len).sum()
    }

    /// Human readable name of line `idx` for diagnostics.
    pub fn line_label(&self, idx: usize) -> String {
        match self.lines.get(idx).and_then(Line::id) {
            Some(id) => format!("{}:{}", self.id, id),
            None => format!("{}:line {}", self.id, idx + 1),
        }
    }
}

/// A ground-truth page together with the hypothesis produced for it.
#[derive(Debug, Clone)]
pub struct PagePair {
    pub id: String,
    pub gt: Page,
    pub hyp: Page,
}

/// A collection of page pairs, unique by id.
#[derive(Debug, Clone, Default)]
pub struct TestSet {
    pairs: Vec<PagePair>,
}

impl TestSet {
    pub fn new(pairs: Vec<PagePair>) -> Result<Self> {
        let mut seen = HashSet::new();
        for pair in &pairs {
            if !seen.insert(pair.id.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "page id '{}' appears twice in the test set",
                    pair.id
                )));
            }
        }
        Ok(TestSet { pairs })
    }

    pub fn pairs(&self) -> &[PagePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Token level at which the measure is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "camelCase")]
pub enum Level {
    /// Characters are the atomic symbols (CER).
    #[default]
    Character,
    /// Tokens produced by a tokenizer are the atomic symbols (WER).
    Word,
    /// Order-free multiset comparison of tokens.
    BagOfWords,
}

/// Which of the eight measure variants to compute, and at which level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MeasureConfig {
    /// Matched line pairs must preserve both reading orders.
    pub reading_order: bool,
    /// Line pairs may only match when their baselines are neighbors.
    pub geometry: bool,
    /// Hypothesis lines may be split at spaces or merged without cost.
    pub segmentation: bool,
    pub level: Level,
    /// Tokenizer id, used by the word and bag-of-words levels.
    pub tokenizer: String,
    /// Upper bound of the baseline tolerance, in pixels.
    pub tolerance_cap: f64,
    /// Tolerance as a fraction of the distance to the nearest other GT baseline.
    pub tolerance_fraction: f64,
}

impl Default for MeasureConfig {
    fn default() -> Self {
        MeasureConfig {
            reading_order: true,
            geometry: false,
            segmentation: false,
            level: Level::Character,
            tokenizer: crate::tokenize::DEFAULT_TOKENIZER.to_string(),
            tolerance_cap: 30.0,
            tolerance_fraction: 0.25,
        }
    }
}

impl MeasureConfig {
    pub fn new(level: Level, reading_order: bool, geometry: bool, segmentation: bool) -> Self {
        MeasureConfig {
            reading_order,
            geometry,
            segmentation,
            level,
            ..MeasureConfig::default()
        }
    }

    /// Short label in the usual notation, e.g. `CER^{R,S}` or `BOW`.
    pub fn label(&self) -> String {
        let base = match self.level {
            Level::Character => "CER",
            Level::Word => "WER",
            Level::BagOfWords => "BOW",
        };
        let mut flags = Vec::new();
        if self.reading_order && self.level != Level::BagOfWords {
            flags.push("R");
        }
        if self.geometry {
            flags.push("G");
        }
        if self.segmentation && self.level != Level::BagOfWords {
            flags.push("S");
        }
        if flags.is_empty() {
            base.to_string()
        } else {
            format!("{base}^{{{}}}", flags.join(","))
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.tolerance_cap <= 0.0 || !self.tolerance_cap.is_finite() {
            return Err(Error::config("tolerance cap must be a positive number"));
        }
        if self.tolerance_fraction <= 0.0 || !self.tolerance_fraction.is_finite() {
            return Err(Error::config(
                "tolerance fraction must be a positive number",
            ));
        }
        Ok(())
    }
}

/// Insertion/deletion/substitution/correct tallies of an alignment.
///
/// `del` counts hypothesis symbols that had to be removed and `ins` counts
/// ground-truth symbols missing from the hypothesis, so that
/// `cor + sub + del == hyp_len` and `cor + sub + ins == gt_len`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ErrorCounts {
    pub ins: u64,
    pub del: u64,
    pub sub: u64,
    pub cor: u64,
    pub gt_len: u64,
    pub hyp_len: u64,
}

impl ErrorCounts {
    /// Counts for a hypothesis line that is not assigned to anything.
    pub fn deleted(len: u64) -> Self {
        ErrorCounts {
            del: len,
            hyp_len: len,
            ..Default::default()
        }
    }

    /// Counts for a ground-truth line that is not assigned to anything.
    pub fn inserted(len: u64) -> Self {
        ErrorCounts {
            ins: len,
            gt_len: len,
            ..Default::default()
        }
    }

    /// Number of edit operations.
    pub fn errors(&self) -> u64 {
        self.ins + self.del + self.sub
    }

    /// Error rate `(ins + del + sub) / gt_len`; CER or WER depending on the level.
    /// May exceed 1.
    pub fn cer(&self) -> Result<f64> {
        if self.gt_len == 0 {
            return Err(Error::UndefinedRate("ground-truth length"));
        }
        Ok(self.errors() as f64 / self.gt_len as f64)
    }

    pub fn precision(&self) -> Result<f64> {
        if self.hyp_len == 0 {
            return Err(Error::UndefinedRate("hypothesis length"));
        }
        Ok(self.cor as f64 / self.hyp_len as f64)
    }

    pub fn recall(&self) -> Result<f64> {
        if self.gt_len == 0 {
            return Err(Error::UndefinedRate("ground-truth length"));
        }
        Ok(self.cor as f64 / self.gt_len as f64)
    }

    /// True when both length identities hold.
    pub fn is_consistent(&self) -> bool {
        self.cor + self.sub + self.del == self.hyp_len
            && self.cor + self.sub + self.ins == self.gt_len
    }
}

impl Add for ErrorCounts {
    type Output = ErrorCounts;

    fn add(self, rhs: ErrorCounts) -> ErrorCounts {
        ErrorCounts {
            ins: self.ins + rhs.ins,
            del: self.del + rhs.del,
            sub: self.sub + rhs.sub,
            cor: self.cor + rhs.cor,
            gt_len: self.gt_len + rhs.gt_len,
            hyp_len: self.hyp_len + rhs.hyp_len,
        }
    }
}

impl AddAssign for ErrorCounts {
    fn add_assign(&mut self, rhs: ErrorCounts) {
        *self = *self + rhs;
    }
}

impl std::iter::Sum for ErrorCounts {
    fn sum<I: Iterator<Item = ErrorCounts>>(iter: I) -> Self {
        iter.fold(ErrorCounts::default(), Add::add)
    }
}

/// Field-wise sum of per-page counts; the empty list gives all zeros.
pub fn aggregate<'a>(per_page: impl IntoIterator<Item = &'a ErrorCounts>) -> ErrorCounts {
    per_page.into_iter().copied().sum()
}

/// Line assignment between a hypothesis and a ground-truth page.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Alignment {
    /// Assigned `(hyp, gt)` pairs, sorted by hypothesis index. When
    /// `segmented_hyp` is present, hypothesis indices refer to it.
    pub matched: Vec<(usize, usize)>,
    /// Hypothesis lines without partner, ascending.
    pub unmatched_hyp: Vec<usize>,
    /// Ground-truth lines without partner, ascending.
    pub unmatched_gt: Vec<usize>,
    /// The re-segmented hypothesis, present when segmentation errors are forgiven.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segmented_hyp: Option<Page>,
}

impl Alignment {
    pub(crate) fn normalize(&mut self) {
        self.matched.sort_unstable();
        self.unmatched_hyp.sort_unstable();
        self.unmatched_gt.sort_unstable();
    }

    /// Checks the partition and cardinality laws for `n` hypothesis and `m`
    /// ground-truth lines, plus monotonicity when `reading_order` is set.
    pub fn check(&self, n: usize, m: usize, reading_order: bool) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        let mut hyp_seen = vec![false; n];
        let mut gt_seen = vec![false; m];
        let hyp_iter = self
            .matched
            .iter()
            .map(|&(y, _)| y)
            .chain(self.unmatched_hyp.iter().copied());
        for y in hyp_iter {
            if y >= n || std::mem::replace(&mut hyp_seen[y], true) {
                return fail(format!("hypothesis index {y} invalid or repeated"));
            }
        }
        let gt_iter = self
            .matched
            .iter()
            .map(|&(_, x)| x)
            .chain(self.unmatched_gt.iter().copied());
        for x in gt_iter {
            if x >= m || std::mem::replace(&mut gt_seen[x], true) {
                return fail(format!("ground-truth index {x} invalid or repeated"));
            }
        }
        if 2 * self.matched.len() + self.unmatched_hyp.len() + self.unmatched_gt.len() != n + m {
            return fail("alignment does not cover every line".into());
        }
        if reading_order {
            let mut pairs = self.matched.clone();
            pairs.sort_unstable();
            if pairs.windows(2).any(|w| w[0].1 >= w[1].1) {
                return fail("matched pairs violate the reading order".into());
            }
        }
        Ok(())
    }
}
