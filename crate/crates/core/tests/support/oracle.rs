//! Brute-force references. Nothing here calls into the crate's solvers.

use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restrict {
    None,
    ReadingOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForce {
    pub distance: usize,
    /// Matched (hyp, gt) pairs of one optimal assignment.
    pub assignment: Vec<(usize, usize)>,
}

/// Plain Wagner-Fischer.
pub fn ld<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub fn chars(lines: &[&str]) -> Vec<Vec<char>> {
    lines.iter().map(|l| l.chars().collect()).collect()
}

pub fn words(lines: &[&str]) -> Vec<Vec<String>> {
    lines
        .iter()
        .map(|l| {
            l.split(' ')
                .filter(|w| !w.is_empty())
                .map(str::to_string)
                .collect()
        })
        .collect()
}

/// Minimum over every assignment matrix (optionally order-preserving and
/// limited to allowed pairs) of matched LD plus unmatched line lengths.
/// Refuses pages with more than five lines.
pub fn brute_force_ld<T: PartialEq>(
    hyp: &[Vec<T>],
    gt: &[Vec<T>],
    restrict: Restrict,
    allowed: Option<&dyn Fn(usize, usize) -> bool>,
) -> Option<BruteForce> {
    if hyp.len() > 5 || gt.len() > 5 {
        return None;
    }
    Some(enumerate(hyp, gt, restrict, allowed))
}

fn enumerate<T: PartialEq>(
    hyp: &[Vec<T>],
    gt: &[Vec<T>],
    restrict: Restrict,
    allowed: Option<&dyn Fn(usize, usize) -> bool>,
) -> BruteForce {
    let pair: Vec<Vec<usize>> = hyp
        .iter()
        .map(|h| gt.iter().map(|g| ld(h, g)).collect())
        .collect();
    let mut best = BruteForce {
        distance: usize::MAX,
        assignment: Vec::new(),
    };
    let mut used = vec![false; gt.len()];
    let mut chosen = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec<T>(
        y: usize,
        hyp: &[Vec<T>],
        gt: &[Vec<T>],
        pair: &[Vec<usize>],
        restrict: Restrict,
        allowed: Option<&dyn Fn(usize, usize) -> bool>,
        used: &mut [bool],
        chosen: &mut Vec<(usize, usize)>,
        best: &mut BruteForce,
    ) {
        if y == hyp.len() {
            let mut cost: usize = chosen.iter().map(|&(a, b)| pair[a][b]).sum();
            let matched_h: HashSet<usize> = chosen.iter().map(|p| p.0).collect();
            cost += (0..hyp.len())
                .filter(|k| !matched_h.contains(k))
                .map(|k| hyp[k].len())
                .sum::<usize>();
            cost += (0..gt.len())
                .filter(|&x| !used[x])
                .map(|x| gt[x].len())
                .sum::<usize>();
            if cost < best.distance {
                best.distance = cost;
                best.assignment = chosen.clone();
            }
            return;
        }
        rec(y + 1, hyp, gt, pair, restrict, allowed, used, chosen, best);
        let lo = match (restrict, chosen.last()) {
            (Restrict::ReadingOrder, Some(&(_, x))) => x + 1,
            _ => 0,
        };
        for x in lo..gt.len() {
            if used[x] || !allowed.map_or(true, |f| f(y, x)) {
                continue;
            }
            used[x] = true;
            chosen.push((y, x));
            rec(y + 1, hyp, gt, pair, restrict, allowed, used, chosen, best);
            chosen.pop();
            used[x] = false;
        }
    }
    rec(
        0,
        hyp,
        gt,
        &pair,
        restrict,
        allowed,
        &mut used,
        &mut chosen,
        &mut best,
    );
    best
}

/// Every page reachable from `hyp` by splitting lines at spaces and merging
/// neighbouring lines (the line break becomes a space). Refuses more than
/// three lines or twelve characters.
pub fn segmentations(hyp: &[&str]) -> Option<Vec<Vec<String>>> {
    let total: usize = hyp.iter().map(|l| l.chars().count()).sum();
    if hyp.len() > 3 || total > 12 {
        return None;
    }
    if hyp.is_empty() {
        return Some(vec![Vec::new()]);
    }
    // Joining with spaces makes line junctions look like spaces: each one
    // is either cut (a line break) or kept (a space, i.e. merged lines).
    let joined: Vec<char> = hyp.join(" ").chars().collect();
    let cuts: Vec<usize> = (0..joined.len()).filter(|&k| joined[k] == ' ').collect();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << cuts.len()) {
        let mut lines = vec![String::new()];
        let mut next = 0;
        for (k, &c) in joined.iter().enumerate() {
            if next < cuts.len() && cuts[next] == k {
                let cut = mask & (1 << next) != 0;
                next += 1;
                if cut {
                    lines.push(String::new());
                    continue;
                }
            }
            lines.last_mut().unwrap().push(c);
        }
        out.insert(lines);
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort();
    Some(v)
}

/// Exact minimum over segmentations of the reading-order distance, at
/// character level.
pub fn brute_force_seg(hyp: &[&str], gt: &[&str]) -> Option<usize> {
    let gt = chars(gt);
    segmentations(hyp)?
        .iter()
        .map(|seg| {
            let h: Vec<Vec<char>> = seg.iter().map(|l| l.chars().collect()).collect();
            monotone_min(&h, &gt)
        })
        .min()
}

/// Order-preserving assignment minimum by enumeration, without a size guard.
/// Used on segmentations, which may have many short lines.
fn monotone_min<T: PartialEq>(hyp: &[Vec<T>], gt: &[Vec<T>]) -> usize {
    let pair: Vec<Vec<usize>> = hyp
        .iter()
        .map(|h| gt.iter().map(|g| ld(h, g)).collect())
        .collect();
    fn rec(
        y: usize,
        lo: usize,
        hl: &[usize],
        gl: &[usize],
        pair: &[Vec<usize>],
        used: &mut Vec<bool>,
    ) -> usize {
        if y == hl.len() {
            return (0..gl.len()).filter(|&x| !used[x]).map(|x| gl[x]).sum();
        }
        let mut best = hl[y] + rec(y + 1, lo, hl, gl, pair, used);
        for x in lo..gl.len() {
            used[x] = true;
            best = best.min(pair[y][x] + rec(y + 1, x + 1, hl, gl, pair, used));
            used[x] = false;
        }
        best
    }
    let hl: Vec<usize> = hyp.iter().map(Vec::len).collect();
    let gl: Vec<usize> = gt.iter().map(Vec::len).collect();
    rec(0, 0, &hl, &gl, &pair, &mut vec![false; gt.len()])
}

/// Sanity checks of the reference distance itself.
pub fn ld_examples() {
    assert_eq!(ld(&['a', 'b'], &['a', 'b']), 0);
    assert_eq!(ld(&[] as &[char], &['a', 'b']), 2);
    let k: Vec<char> = "kitten".chars().collect();
    let s: Vec<char> = "sitting".chars().collect();
    assert_eq!(ld(&k, &s), 3);
}
