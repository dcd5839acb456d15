//! Distances without the reading-order constraint.
//!
//! Each round lets every remaining GT line pick its cheapest hypothesis
//! segment independently, then commits the pairs in order of their line error
//! rate as long as the hypothesis material is still free. Whatever is left
//! goes into the next round until one side runs out.

use serde::Serialize;

use crate::dp::grid::Grid;
use crate::dp::{check_total, gate_for, pair_counts, prepare, segment_line, Solution, INFINITY};
use crate::encode::{Encoded, Sym};
use crate::error::{Error, Result};
use crate::geometry::Neighborhood;
use crate::tokenize::TokenizerRegistry;
use crate::types::{Alignment, ErrorCounts, MeasureConfig, Page};

/// The cheapest hypothesis segment found for one GT line in a round.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateMatch {
    /// Hypothesis line the segment ends in.
    pub hyp_index: usize,
    pub gt_index: usize,
    /// `line_ld / |gt line|`, or `line_ld` for an empty GT line.
    pub line_cer: f64,
    pub line_ld: u64,
}

/// A still unassigned stretch of a hypothesis line.
#[derive(Debug, Clone)]
struct Piece {
    syms: Vec<Sym>,
    origin: usize,
    offset: usize,
}

struct Candidate {
    public: CandidateMatch,
    x: usize,
    from: usize,
    to: usize,
}

enum Role {
    Matched(usize),
    Unmatched,
}

struct Out {
    origin: usize,
    offset: usize,
    syms: Vec<Sym>,
    role: Role,
}

fn split_words(syms: &[Sym]) -> impl Iterator<Item = (usize, &[Sym])> {
    let mut start = 0;
    syms.split(|&s| s == Sym::Space).map(move |w| {
        let at = start;
        start += w.len() + 1;
        (at, w)
    })
}

const UNREACHABLE: u64 = u64::MAX;

/// Packs an edit cost with the number of insertions and deletions it uses, so
/// that equal costs are ordered by how much of both lines got aligned.
fn packed(cost: u32, indel: bool) -> u64 {
    if cost == INFINITY {
        UNREACHABLE
    } else {
        (u64::from(cost) << 32) | u64::from(indel && cost > 0)
    }
}

fn plus(a: u64, b: u64) -> u64 {
    if a == UNREACHABLE || b == UNREACHABLE {
        UNREACHABLE
    } else {
        a + b
    }
}

/// Best segment for the GT line between breaks `j0` and `j1`: its cost and
/// its break positions. Among segments of equal cost the one needing the
/// fewest insertions and deletions wins, then the latest end, then the
/// latest start.
fn best_segment(grid: &Grid<'_>, j0: usize, j1: usize) -> Option<(u32, usize, usize)> {
    let rows = grid.rows();
    let height = rows + 1;
    let cols = j1 - j0 + 1;
    let mut d = vec![UNREACHABLE; height * cols];
    let sub = |i: usize, j: usize| packed(grid.sub(i, j), false);
    let del = |i: usize| packed(grid.del(i), true);
    let ins = |j: usize| packed(grid.ins(j), true);
    for i in 1..=rows {
        d[i] = if grid.is_hyp_break(i) {
            0
        } else {
            plus(d[i - 1], del(i))
        };
    }
    for c in 1..cols - 1 {
        let j = j0 + c;
        for i in 1..=rows {
            let mut v = plus(d[(c - 1) * height + i], ins(j));
            if i >= 2 {
                v = v
                    .min(plus(d[(c - 1) * height + i - 1], sub(i, j)))
                    .min(plus(d[c * height + i - 1], del(i)));
            }
            d[c * height + i] = v;
        }
    }
    let last = cols - 1;
    let mut best: Option<(u64, usize)> = None;
    for i in 2..=rows {
        if !grid.is_hyp_break(i) || !grid.gate_allows(i, j1) {
            continue;
        }
        let v = d[(last - 1) * height + i - 1];
        if v != UNREACHABLE && best.map_or(true, |(b, _)| v <= b) {
            best = Some((v, i));
        }
    }
    let (value, end) = best?;

    let (mut i, mut c) = (end - 1, last - 1);
    loop {
        let here = d[c * height + i];
        if c == 0 {
            if grid.is_hyp_break(i) {
                break;
            }
            i -= 1;
            continue;
        }
        let j = j0 + c;
        if i >= 2 && plus(d[(c - 1) * height + i - 1], sub(i, j)) == here {
            i -= 1;
            c -= 1;
        } else if i >= 2 && plus(d[c * height + i - 1], del(i)) == here {
            i -= 1;
        } else {
            c -= 1;
        }
    }
    Some(((value >> 32) as u32, i, end))
}

fn line_cer(ld: u32, gt_weight: u32) -> f64 {
    if gt_weight == 0 {
        f64::from(ld)
    } else {
        f64::from(ld) / f64::from(gt_weight)
    }
}

/// Greedy distance with the default tokenizers.
pub fn greedy_ld(
    hyp: &Page,
    gt: &Page,
    config: &MeasureConfig,
    neighborhood: Option<&dyn Neighborhood>,
) -> Result<Solution> {
    greedy_ld_with(hyp, gt, config, neighborhood, &TokenizerRegistry::default())
}

/// Distance for configurations without reading order. The result is an
/// upper bound of the unrestricted minimum.
pub fn greedy_ld_with(
    hyp: &Page,
    gt: &Page,
    config: &MeasureConfig,
    neighborhood: Option<&dyn Neighborhood>,
    registry: &TokenizerRegistry,
) -> Result<Solution> {
    if config.reading_order {
        return Err(Error::config(
            "the greedy solver ignores reading order; use solve for it",
        ));
    }
    let enc = prepare(hyp, gt, config, registry)?;
    let gate = gate_for(hyp, gt, config, neighborhood)?;
    let seg = config.segmentation;

    let mut pieces: Vec<Piece> = enc
        .hyp
        .iter()
        .enumerate()
        .map(|(y, syms)| Piece {
            syms: syms.clone(),
            origin: y,
            offset: 0,
        })
        .collect();
    let mut open_gt: Vec<usize> = (0..enc.gt.len()).collect();
    let mut out: Vec<Out> = Vec::new();
    let mut unmatched_gt = Vec::new();
    let mut distance = 0u64;

    loop {
        if let Some(g) = gate.get() {
            open_gt.retain(|&x| {
                let reachable = pieces.iter().any(|p| g.is_neighbor(p.origin, x));
                if !reachable {
                    distance += u64::from(enc.line_weight(&enc.gt[x]));
                    unmatched_gt.push(x);
                }
                reachable
            });
        }
        if open_gt.is_empty() {
            for p in pieces.drain(..) {
                let parts: Vec<(usize, Vec<Sym>)> = if seg {
                    split_words(&p.syms)
                        .map(|(at, w)| (at, w.to_vec()))
                        .collect()
                } else {
                    vec![(0, p.syms.clone())]
                };
                for (at, syms) in parts {
                    distance += u64::from(enc.line_weight(&syms));
                    out.push(Out {
                        origin: p.origin,
                        offset: p.offset + at,
                        syms,
                        role: Role::Unmatched,
                    });
                }
            }
            break;
        }
        if pieces.is_empty() {
            for &x in &open_gt {
                distance += u64::from(enc.line_weight(&enc.gt[x]));
            }
            unmatched_gt.append(&mut open_gt);
            break;
        }

        let hl: Vec<&[Sym]> = pieces.iter().map(|p| p.syms.as_slice()).collect();
        let ho: Vec<usize> = pieces.iter().map(|p| p.origin).collect();
        let gl: Vec<&[Sym]> = open_gt.iter().map(|&x| enc.gt[x].as_slice()).collect();
        let grid = Grid::new(&hl, &ho, &gl, &open_gt, seg, enc.space_weight, gate.get());
        let hb = grid.hyp_flat.breaks.clone();
        let gb = grid.gt_flat.breaks.clone();

        let mut candidates: Vec<Candidate> = Vec::new();
        for (k, &x) in open_gt.iter().enumerate() {
            if let Some((ld, from, to)) = best_segment(&grid, gb[k], gb[k + 1]) {
                candidates.push(Candidate {
                    public: CandidateMatch {
                        hyp_index: grid.segment_owner(to),
                        gt_index: x,
                        line_cer: line_cer(ld, enc.line_weight(&enc.gt[x])),
                        line_ld: u64::from(ld),
                    },
                    x,
                    from,
                    to,
                });
            }
        }
        if let Some(g) = gate.get() {
            candidates.retain(|c| g.is_neighbor(c.public.hyp_index, c.x));
        }
        if candidates.is_empty() {
            return Err(Error::Internal(
                "no candidate pair in a greedy round".into(),
            ));
        }
        candidates.sort_by(|a, b| {
            a.public
                .line_cer
                .total_cmp(&b.public.line_cer)
                .then(a.x.cmp(&b.x))
                .then(a.from.cmp(&b.from))
        });

        let mut taken: Vec<(usize, usize)> = Vec::new();
        let mut done_gt = Vec::new();
        for c in &candidates {
            if taken.iter().any(|&(s, e)| c.from < e && s < c.to) {
                continue;
            }
            taken.push((c.from, c.to));
            done_gt.push(c.x);
            distance += c.public.line_ld;
            let (origin, offset) = locate(&pieces, &hb, c.from);
            out.push(Out {
                origin,
                offset,
                syms: grid.segment(c.from, c.to),
                role: Role::Matched(c.x),
            });
        }
        open_gt.retain(|x| !done_gt.contains(x));
        pieces = remnants(&pieces, &hb, &taken, seg);
    }

    assemble(hyp, gt, &enc, out, unmatched_gt, distance, seg)
}

/// Original line and offset of the first symbol after break position `from`.
fn locate(pieces: &[Piece], hb: &[usize], from: usize) -> (usize, usize) {
    // Index of the piece opened by the last line break at or before `from`.
    let k = hb.partition_point(|&b| b <= from) - 1;
    let p = &pieces[k];
    (p.origin, p.offset + from - hb[k])
}

/// What remains of the pieces after the segments in `taken` were assigned.
fn remnants(pieces: &[Piece], hb: &[usize], taken: &[(usize, usize)], seg: bool) -> Vec<Piece> {
    let covered = |p: usize| taken.iter().any(|&(s, e)| s <= p && p <= e);
    let mut next = Vec::new();
    for (k, piece) in pieces.iter().enumerate() {
        let (start, end) = (hb[k], hb[k + 1]);
        let touched = taken.iter().any(|&(s, e)| s < end && start < e);
        if !touched {
            next.push(piece.clone());
            continue;
        }
        if !seg {
            continue;
        }
        let mut run: Option<usize> = None;
        let flush = |from: usize, to: usize, next: &mut Vec<Piece>| {
            let mut a = from;
            let mut b = to;
            while a < b && piece.syms[a] == Sym::Space {
                a += 1;
            }
            while b > a && piece.syms[b - 1] == Sym::Space {
                b -= 1;
            }
            if a < b {
                next.push(Piece {
                    syms: piece.syms[a..b].to_vec(),
                    origin: piece.origin,
                    offset: piece.offset + a,
                });
            }
        };
        for p in start + 1..end {
            let idx = p - start - 1;
            match (covered(p), run) {
                (false, None) => run = Some(idx),
                (true, Some(r)) => {
                    flush(r, idx, &mut next);
                    run = None;
                }
                _ => {}
            }
        }
        if let Some(r) = run {
            flush(r, piece.syms.len(), &mut next);
        }
    }
    next
}

fn assemble(
    hyp: &Page,
    gt: &Page,
    enc: &Encoded,
    mut out: Vec<Out>,
    unmatched_gt: Vec<usize>,
    distance: u64,
    seg: bool,
) -> Result<Solution> {
    out.sort_by_key(|o| (o.origin, o.offset));
    let mut counts = ErrorCounts::default();
    let mut alignment = Alignment::default();
    let mut lines = Vec::new();
    for (idx, o) in out.iter().enumerate() {
        let y = if seg { idx } else { o.origin };
        match o.role {
            Role::Matched(x) => {
                counts += pair_counts(enc, &o.syms, &enc.gt[x]);
                alignment.matched.push((y, x));
            }
            Role::Unmatched => {
                counts += ErrorCounts::deleted(u64::from(enc.line_weight(&o.syms)));
                alignment.unmatched_hyp.push(y);
            }
        }
        if seg {
            lines.push(segment_line(enc, hyp, &o.syms, o.origin));
        }
    }
    for &x in &unmatched_gt {
        counts += ErrorCounts::inserted(u64::from(enc.line_weight(&enc.gt[x])));
    }
    alignment.unmatched_gt = unmatched_gt;
    if seg {
        alignment.segmented_hyp = Some(Page::new(hyp.id.clone(), lines));
    }
    alignment.normalize();
    let n = alignment
        .segmented_hyp
        .as_ref()
        .map_or(hyp.len(), Page::len);
    alignment.check(n, gt.len(), false)?;
    check_total(distance, &counts)?;
    Ok(Solution {
        distance,
        alignment,
        counts,
        path: Vec::new(),
    })
}
