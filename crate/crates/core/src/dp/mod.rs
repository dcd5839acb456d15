//! Exact line-assignment distances under the reading-order constraint, with
//! optional geometric gating and forgiven segmentation errors.

pub mod flat;
pub(crate) mod grid;
mod lines;
mod search;
mod split;

use serde::Serialize;

pub use flat::{flatten, substitution_cost, FlatSequence, FlatSymbol, INFINITY};
pub use split::{split_best_path, split_best_path_with_segmentation, LineSplit, SegmentSplit};

use crate::edit_distance::levenshtein;
use crate::encode::{encode, Encoded, Sym};
use crate::error::{Error, Result};
use crate::geometry::{BaselineNeighborhood, Neighborhood};
use crate::tokenize::TokenizerRegistry;
use crate::types::{Alignment, ErrorCounts, Level, Line, MeasureConfig, Page};
use grid::Grid;

/// How the best path is searched.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Strategy {
    /// Best-first search. Without segmentation it runs on line pairs, since a
    /// best path always passes through every line break.
    #[default]
    ShortestPath,
    /// Best-first search over single symbols, whatever the configuration.
    CharacterGrid,
    /// The complete table; quadratic memory, meant for cross-checking.
    FullTable,
}

/// Result of one page comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Solution {
    pub distance: u64,
    pub alignment: Alignment,
    pub counts: ErrorCounts,
    /// Best path through the flattened grid. Empty for the greedy solver.
    #[serde(skip)]
    pub path: Vec<(usize, usize)>,
}

pub(crate) enum Gate<'a> {
    Off,
    Borrowed(&'a dyn Neighborhood),
    Owned(BaselineNeighborhood),
}

impl Gate<'_> {
    pub fn get(&self) -> Option<&dyn Neighborhood> {
        match self {
            Gate::Off => None,
            Gate::Borrowed(n) => Some(*n),
            Gate::Owned(n) => Some(n),
        }
    }
}

/// The neighborhood to apply: none without geometry, otherwise the supplied
/// one or the one computed from the baselines.
pub(crate) fn gate_for<'a>(
    hyp: &Page,
    gt: &Page,
    config: &MeasureConfig,
    neighborhood: Option<&'a dyn Neighborhood>,
) -> Result<Gate<'a>> {
    if !config.geometry {
        return Ok(Gate::Off);
    }
    Ok(match neighborhood {
        Some(n) => Gate::Borrowed(n),
        None => Gate::Owned(BaselineNeighborhood::new(hyp, gt, config)?),
    })
}

pub(crate) fn prepare(
    hyp: &Page,
    gt: &Page,
    config: &MeasureConfig,
    registry: &TokenizerRegistry,
) -> Result<Encoded> {
    config.validate()?;
    if config.level == Level::BagOfWords {
        return Err(Error::config(
            "the bag-of-words level has no line alignment; use bag_of_words",
        ));
    }
    encode(
        hyp,
        gt,
        config.level,
        config.segmentation,
        registry,
        &config.tokenizer,
    )
}

/// Counts of a matched pair, over the symbols that carry weight.
pub(crate) fn pair_counts(enc: &Encoded, h: &[Sym], g: &[Sym]) -> ErrorCounts {
    levenshtein(&enc.counted(h), &enc.counted(g)).counts
}

pub(crate) fn segment_line(enc: &Encoded, hyp: &Page, syms: &[Sym], origin: usize) -> Line {
    let parent = &hyp.lines[origin];
    Line::segment(
        enc.decode(syms),
        parent.baseline().cloned(),
        parent.id().map(str::to_string),
    )
}

pub(crate) fn check_total(distance: u64, counts: &ErrorCounts) -> Result<()> {
    if counts.errors() != distance || !counts.is_consistent() {
        return Err(Error::Internal(format!(
            "alignment counts {counts:?} disagree with distance {distance}"
        )));
    }
    Ok(())
}

/// Exact distance with the default search strategy and tokenizers.
pub fn solve(
    hyp: &Page,
    gt: &Page,
    config: &MeasureConfig,
    neighborhood: Option<&dyn Neighborhood>,
) -> Result<Solution> {
    solve_with(
        hyp,
        gt,
        config,
        neighborhood,
        Strategy::default(),
        &TokenizerRegistry::default(),
    )
}

/// Exact distance for configurations with reading order.
///
/// With `config.geometry`, `neighborhood` decides which line pairs may be
/// matched; when it is `None` it is derived from the baselines of both pages.
pub fn solve_with(
    hyp: &Page,
    gt: &Page,
    config: &MeasureConfig,
    neighborhood: Option<&dyn Neighborhood>,
    strategy: Strategy,
    registry: &TokenizerRegistry,
) -> Result<Solution> {
    if !config.reading_order {
        return Err(Error::config(
            "the exact solver needs reading order; use greedy_ld otherwise",
        ));
    }
    let enc = prepare(hyp, gt, config, registry)?;
    let gate = gate_for(hyp, gt, config, neighborhood)?;
    let hl: Vec<&[Sym]> = enc.hyp.iter().map(Vec::as_slice).collect();
    let gl: Vec<&[Sym]> = enc.gt.iter().map(Vec::as_slice).collect();
    let ho: Vec<usize> = (0..hl.len()).collect();
    let go: Vec<usize> = (0..gl.len()).collect();
    let seg = config.segmentation;
    let grid = Grid::new(&hl, &ho, &gl, &go, seg, enc.space_weight, gate.get());
    let (distance, path) = match strategy {
        Strategy::ShortestPath if !seg => lines::shortest_path(&grid, &hl, &gl)?,
        Strategy::ShortestPath | Strategy::CharacterGrid => search::shortest_path(&grid)?,
        Strategy::FullTable => search::full_table(&grid)?,
    };
    let distance = u64::from(distance);

    let mut counts = ErrorCounts::default();
    let mut alignment = if seg {
        let s = split_best_path_with_segmentation(
            &path,
            &grid.hyp_flat.ext_breaks,
            &grid.gt_flat.breaks,
        )?;
        let segments: Vec<Vec<Sym>> = s
            .segments
            .iter()
            .map(|&(a, b)| grid.segment(a, b))
            .collect();
        for &(k, x) in &s.matched {
            counts += pair_counts(&enc, &segments[k], &enc.gt[x]);
        }
        for &k in &s.unmatched_hyp {
            counts += ErrorCounts::deleted(u64::from(enc.line_weight(&segments[k])));
        }
        let lines = s
            .segments
            .iter()
            .zip(&segments)
            .map(|(&(_, b), syms)| segment_line(&enc, hyp, syms, grid.segment_owner(b)))
            .collect();
        Alignment {
            matched: s.matched,
            unmatched_hyp: s.unmatched_hyp,
            unmatched_gt: s.unmatched_gt,
            segmented_hyp: Some(Page::new(hyp.id.clone(), lines)),
        }
    } else {
        let s = split_best_path(&path, &grid.hyp_flat.breaks, &grid.gt_flat.breaks)?;
        for &(y, x) in &s.matched {
            counts += pair_counts(&enc, &enc.hyp[y], &enc.gt[x]);
        }
        for &y in &s.unmatched_hyp {
            counts += ErrorCounts::deleted(u64::from(enc.line_weight(&enc.hyp[y])));
        }
        Alignment {
            matched: s.matched,
            unmatched_hyp: s.unmatched_hyp,
            unmatched_gt: s.unmatched_gt,
            segmented_hyp: None,
        }
    };
    for &x in &alignment.unmatched_gt {
        counts += ErrorCounts::inserted(u64::from(enc.line_weight(&enc.gt[x])));
    }
    alignment.normalize();
    let n = alignment
        .segmented_hyp
        .as_ref()
        .map_or(hyp.len(), Page::len);
    alignment.check(n, gt.len(), true)?;
    check_total(distance, &counts)?;
    Ok(Solution {
        distance,
        alignment,
        counts,
        path,
    })
}
