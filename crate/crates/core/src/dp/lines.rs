//! Line-level shortest path for configurations without segmentation.
//!
//! Line breaks can neither be inserted, deleted nor substituted, so every
//! best path through the character grid visits a break point on each line
//! break and stays inside one line pair in between. The search therefore runs
//! on break points only, with line-pair distances computed on demand, and the
//! character path is rebuilt afterwards.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::dp::grid::Grid;
use crate::dp::search::Path;
use crate::edit_distance::{levenshtein, levenshtein_distance};
use crate::encode::Sym;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Match,
    SkipHyp,
    SkipGt,
}

struct LineGraph<'g, 'a> {
    grid: &'g Grid<'a>,
    hyp: &'g [&'g [Sym]],
    gt: &'g [&'g [Sym]],
    pot_h: Vec<u32>,
    pot_g: Vec<u32>,
    hb: &'g [usize],
    gb: &'g [usize],
}

fn suffix_lengths(lines: &[&[Sym]]) -> Vec<u32> {
    let mut pot = vec![0u32; lines.len() + 1];
    for k in (0..lines.len()).rev() {
        pot[k] = pot[k + 1] + lines[k].len() as u32;
    }
    pot
}

impl LineGraph<'_, '_> {
    fn heuristic(&self, y: usize, x: usize) -> u32 {
        self.pot_h[y].abs_diff(self.pot_g[x])
    }

    fn may_match(&self, y: usize, x: usize) -> bool {
        self.grid.gate_allows(self.hb[y + 1], self.gb[x + 1])
    }

    fn match_cost(&self, cache: &mut FxHashMap<(usize, usize), u32>, y: usize, x: usize) -> u32 {
        *cache
            .entry((y, x))
            .or_insert_with(|| levenshtein_distance(self.hyp[y], self.gt[x]) as u32)
    }
}

/// Exact best path for a grid built without segmentation.
pub(crate) fn shortest_path(grid: &Grid<'_>, hyp: &[&[Sym]], gt: &[&[Sym]]) -> Result<(u32, Path)> {
    debug_assert!(!grid.segmentation);
    let graph = LineGraph {
        grid,
        hyp,
        gt,
        pot_h: suffix_lengths(hyp),
        pot_g: suffix_lengths(gt),
        hb: &grid.hyp_flat.breaks,
        gb: &grid.gt_flat.breaks,
    };
    let (n, m) = (hyp.len(), gt.len());
    let key = |y: usize, x: usize| y * (m + 1) + x;
    let mut ld_cache = FxHashMap::default();
    let mut best: FxHashMap<usize, u32> = FxHashMap::default();
    let mut heap = BinaryHeap::new();
    best.insert(0, 0);
    heap.push((Reverse(graph.heuristic(0, 0)), 0u32, 0usize, 0usize));
    let mut found = None;
    while let Some((Reverse(f), g, y, x)) = heap.pop() {
        if found.is_some_and(|d| f > d) {
            break;
        }
        if best.get(&key(y, x)).is_some_and(|&b| g > b) {
            continue;
        }
        if (y, x) == (n, m) {
            found.get_or_insert(g);
            continue;
        }
        let mut relax = |ty: usize, tx: usize, cost: u32| {
            let ng = g + cost;
            let slot = best.entry(key(ty, tx)).or_insert(u32::MAX);
            if ng < *slot {
                *slot = ng;
                heap.push((Reverse(ng + graph.heuristic(ty, tx)), ng, ty, tx));
            }
        };
        if y < n && x < m && graph.may_match(y, x) {
            let c = graph.match_cost(&mut ld_cache, y, x);
            relax(y + 1, x + 1, c);
        }
        if y < n {
            relax(y + 1, x, hyp[y].len() as u32);
        }
        if x < m {
            relax(y, x + 1, gt[x].len() as u32);
        }
    }
    let distance = found.ok_or_else(|| Error::Internal("end point unreachable".into()))?;

    let cost = |y: usize, x: usize| best.get(&key(y, x)).copied();
    let mut steps = Vec::with_capacity(n + m);
    let (mut y, mut x) = (n, m);
    while (y, x) != (0, 0) {
        let here = cost(y, x).ok_or_else(|| Error::Internal("unreached line pair".into()))?;
        let skip_gt = (x > 0).then(|| (Step::SkipGt, y, x - 1, gt[x - 1].len() as u32));
        let matched = (x > 0 && y > 0 && graph.may_match(y - 1, x - 1)).then(|| {
            (
                Step::Match,
                y - 1,
                x - 1,
                graph.match_cost(&mut ld_cache, y - 1, x - 1),
            )
        });
        let skip_hyp = (y > 0).then(|| (Step::SkipHyp, y - 1, x, hyp[y - 1].len() as u32));
        let order = match skip_gt {
            Some((_, _, _, c)) if c > 0 => [skip_gt, matched, skip_hyp],
            _ => [matched, skip_hyp, skip_gt],
        };
        let (step, py, px, _) = order
            .into_iter()
            .flatten()
            .find(|&(_, py, px, c)| cost(py, px).is_some_and(|b| b + c == here))
            .ok_or_else(|| {
                Error::Internal(format!("no tight predecessor at line pair ({y}, {x})"))
            })?;
        steps.push((step, py, px));
        (y, x) = (py, px);
    }
    steps.reverse();

    let (hb, gb) = (graph.hb, graph.gb);
    let mut path = vec![(0, 0), (hb[0], gb[0])];
    for (step, y, x) in steps {
        match step {
            Step::Match => {
                let (a, b) = (hb[y], gb[x]);
                for op in levenshtein(hyp[y], gt[x]).alignment.ops {
                    path.push((a + op.i, b + op.j));
                }
                path.push((hb[y + 1], gb[x + 1]));
            }
            Step::SkipHyp => path.push((hb[y + 1], gb[x])),
            Step::SkipGt => path.push((hb[y], gb[x + 1])),
        }
    }
    Ok((distance, path))
}
