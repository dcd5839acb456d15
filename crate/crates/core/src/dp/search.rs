//! Best paths through the character grid: label-setting search with an
//! admissible potential, and the exhaustive table used as its oracle.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::dp::flat::INFINITY;
use crate::dp::grid::Grid;
use crate::error::{Error, Result};

pub(crate) type Path = Vec<(usize, usize)>;

/// Walks back from the end point choosing the first predecessor (in the
/// grid's preference order) that is tight under `cost`.
fn backtrace(grid: &Grid<'_>, cost: impl Fn(usize, usize) -> Option<u32>) -> Result<Path> {
    let mut cur = (grid.rows(), grid.cols());
    let mut path = vec![cur];
    while cur != (0, 0) {
        let here =
            cost(cur.0, cur.1).ok_or_else(|| Error::Internal("unreached grid point".into()))?;
        let step = grid
            .preds(cur.0, cur.1)
            .into_iter()
            .flatten()
            .find(|e| cost(e.i, e.j).is_some_and(|c| c.checked_add(e.cost) == Some(here)));
        match step {
            Some(e) => {
                cur = (e.i, e.j);
                path.push(cur);
            }
            None => {
                return Err(Error::Internal(format!(
                    "no tight predecessor at ({}, {})",
                    cur.0, cur.1
                )))
            }
        }
    }
    path.reverse();
    Ok(path)
}

/// A* search. Keeps settling until every point that could lie on a best path
/// has its exact cost, so the backtrace is independent of heap order.
pub(crate) fn shortest_path(grid: &Grid<'_>) -> Result<(u32, Path)> {
    let width = grid.cols() + 1;
    let key = |i: usize, j: usize| i * width + j;
    let target = (grid.rows(), grid.cols());
    let mut best: FxHashMap<usize, u32> = FxHashMap::default();
    let mut heap = BinaryHeap::new();
    best.insert(0, 0);
    heap.push((Reverse(grid.heuristic(0, 0)), 0u32, 0usize, 0usize));
    let mut found = None;
    let mut succ = Vec::with_capacity(5);
    while let Some((Reverse(f), g, i, j)) = heap.pop() {
        if found.is_some_and(|d| f > d) {
            break;
        }
        if best.get(&key(i, j)).is_some_and(|&b| g > b) {
            continue;
        }
        if (i, j) == target {
            found.get_or_insert(g);
            continue;
        }
        grid.succs(i, j, &mut succ);
        for e in &succ {
            let ng = g + e.cost;
            let slot = best.entry(key(e.i, e.j)).or_insert(INFINITY);
            if ng < *slot {
                *slot = ng;
                heap.push((Reverse(ng + grid.heuristic(e.i, e.j)), ng, e.i, e.j));
            }
        }
    }
    let distance = found.ok_or_else(|| Error::Internal("end point unreachable".into()))?;
    let path = backtrace(grid, |i, j| best.get(&key(i, j)).copied())?;
    Ok((distance, path))
}

/// Fills the whole `(|h|+1) x (|g|+1)` table.
pub(crate) fn full_table(grid: &Grid<'_>) -> Result<(u32, Path)> {
    let width = grid.cols() + 1;
    let mut table = vec![INFINITY; (grid.rows() + 1) * width];
    table[0] = 0;
    for i in 0..=grid.rows() {
        for j in 0..=grid.cols() {
            if i == 0 && j == 0 {
                continue;
            }
            let mut here = INFINITY;
            for e in grid.preds(i, j).into_iter().flatten() {
                let from = table[e.i * width + e.j];
                if from != INFINITY {
                    here = here.min(from + e.cost);
                }
            }
            table[i * width + j] = here;
        }
    }
    let distance = table[grid.rows() * width + grid.cols()];
    if distance == INFINITY {
        return Err(Error::Internal("end point unreachable".into()));
    }
    let path = backtrace(grid, |i, j| {
        let c = table[i * width + j];
        (c != INFINITY).then_some(c)
    })?;
    Ok((distance, path))
}
