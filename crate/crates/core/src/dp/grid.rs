//! Cost model of the flattened alignment grid.
//!
//! A grid point `(i, j)` stands for "the first `i` hypothesis and the first
//! `j` ground-truth symbols are aligned". Points where both coordinates sit on
//! a break (for the hypothesis: a line break, or also a space when
//! segmentation errors are forgiven) are *break points*; there a whole line
//! is matched, skipped on the hypothesis side, or skipped on the ground-truth
//! side. Everywhere else the usual single-symbol edit operations apply, and
//! line breaks can never be inserted or deleted.

use crate::dp::flat::{FlatSequence, FlatSymbol, INFINITY};
use crate::encode::Sym;
use crate::geometry::Neighborhood;

pub(crate) const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Edge {
    pub i: usize,
    pub j: usize,
    pub cost: u32,
}

pub(crate) struct Grid<'a> {
    pub h: Vec<FlatSymbol<Sym>>,
    pub g: Vec<FlatSymbol<Sym>>,
    hb: Vec<bool>,
    gb: Vec<bool>,
    h_prev: Vec<usize>,
    h_next: Vec<usize>,
    g_prev: Vec<usize>,
    g_next: Vec<usize>,
    /// At hypothesis break positions: weight of the segment ending there.
    h_seg_cost: Vec<u32>,
    /// At ground-truth break positions: weight of the line ending there.
    g_line_cost: Vec<u32>,
    /// At every position: origin line of the symbol (a break belongs to the
    /// line it opens).
    h_line_of: Vec<usize>,
    /// At ground-truth break positions: origin of the line ending there.
    g_line_ending: Vec<usize>,
    pot_h: Vec<u32>,
    pot_g: Vec<u32>,
    pub segmentation: bool,
    space_weight: u32,
    gate: Option<&'a dyn Neighborhood>,
    pub hyp_flat: FlatSequence<Sym>,
    pub gt_flat: FlatSequence<Sym>,
}

fn neighbors_of(marks: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let mut prev = vec![NONE; marks.len()];
    let mut next = vec![NONE; marks.len()];
    let mut last = NONE;
    for (p, &m) in marks.iter().enumerate() {
        if m {
            prev[p] = last;
            if last != NONE {
                next[last] = p;
            }
            last = p;
        }
    }
    (prev, next)
}

impl<'a> Grid<'a> {
    /// `hyp_origin[k]` / `gt_origin[k]` name the line indices the gate sees for
    /// the `k`-th supplied line.
    pub fn new(
        hyp: &[&[Sym]],
        hyp_origin: &[usize],
        gt: &[&[Sym]],
        gt_origin: &[usize],
        segmentation: bool,
        space_weight: u32,
        gate: Option<&'a dyn Neighborhood>,
    ) -> Self {
        let is_space = |s: &Sym| *s == Sym::Space;
        let own = |l: &&[Sym]| l.to_vec();
        let hyp_flat = FlatSequence::from_lines(&hyp.iter().map(own).collect::<Vec<_>>(), is_space);
        let gt_flat = FlatSequence::from_lines(&gt.iter().map(own).collect::<Vec<_>>(), is_space);
        let weight = |s: &FlatSymbol<Sym>| match s {
            FlatSymbol::Break => 0,
            FlatSymbol::Symbol(Sym::Space) => space_weight,
            FlatSymbol::Symbol(Sym::Tok(_)) => 1,
        };
        // Lower-bound weights: with segmentation, spaces can be traded against
        // line breaks for free, so they must not count.
        let pot_weight = |s: &FlatSymbol<Sym>| match s {
            FlatSymbol::Symbol(Sym::Space) if segmentation => 0,
            other => weight(other),
        };

        let hn = hyp_flat.len();
        let gn = gt_flat.len();
        let mut hb = vec![false; hn + 1];
        let h_marks = if segmentation {
            &hyp_flat.ext_breaks
        } else {
            &hyp_flat.breaks
        };
        for &p in h_marks {
            hb[p] = true;
        }
        let mut gb = vec![false; gn + 1];
        for &p in &gt_flat.breaks {
            gb[p] = true;
        }
        let (h_prev, h_next) = neighbors_of(&hb);
        let (g_prev, g_next) = neighbors_of(&gb);

        let mut h_seg_cost = vec![0u32; hn + 1];
        let mut acc = 0;
        for p in 1..=hn {
            if hb[p] {
                h_seg_cost[p] = acc;
                acc = 0;
            } else {
                acc += weight(&hyp_flat.symbols[p - 1]);
            }
        }
        let mut g_line_cost = vec![0u32; gn + 1];
        let mut acc = 0;
        for p in 1..=gn {
            if gb[p] {
                g_line_cost[p] = acc;
                acc = 0;
            } else {
                acc += weight(&gt_flat.symbols[p - 1]);
            }
        }

        let mut h_line_of = vec![NONE; hn + 1];
        let mut line = 0usize;
        for (p, slot) in h_line_of.iter_mut().enumerate().skip(1) {
            if hyp_flat.symbols[p - 1].is_break() && p > 1 {
                line += 1;
            }
            *slot = hyp_origin.get(line).copied().unwrap_or(NONE);
        }
        let mut g_line_ending = vec![NONE; gn + 1];
        for (k, &p) in gt_flat.breaks.iter().enumerate().skip(1) {
            g_line_ending[p] = gt_origin[k - 1];
        }

        let suffix = |flat: &FlatSequence<Sym>| {
            let mut pot = vec![0u32; flat.len() + 1];
            for p in (0..flat.len()).rev() {
                pot[p] = pot[p + 1] + pot_weight(&flat.symbols[p]);
            }
            pot
        };
        let pot_h = suffix(&hyp_flat);
        let pot_g = suffix(&gt_flat);

        Grid {
            h: hyp_flat.symbols.clone(),
            g: gt_flat.symbols.clone(),
            hb,
            gb,
            h_prev,
            h_next,
            g_prev,
            g_next,
            h_seg_cost,
            g_line_cost,
            h_line_of,
            g_line_ending,
            pot_h,
            pot_g,
            segmentation,
            space_weight,
            gate,
            hyp_flat,
            gt_flat,
        }
    }

    pub fn rows(&self) -> usize {
        self.h.len()
    }

    pub fn cols(&self) -> usize {
        self.g.len()
    }

    pub fn is_hyp_break(&self, i: usize) -> bool {
        self.hb[i]
    }

    pub fn is_break_point(&self, i: usize, j: usize) -> bool {
        self.hb[i] && self.gb[j]
    }

    fn valid(i: usize, j: usize) -> bool {
        (i == 0) == (j == 0)
    }

    /// Admissible and consistent lower bound on the remaining cost.
    pub fn heuristic(&self, i: usize, j: usize) -> u32 {
        self.pot_h[i].abs_diff(self.pot_g[j])
    }

    fn weight(&self, s: Sym) -> u32 {
        match s {
            Sym::Space => self.space_weight,
            Sym::Tok(_) => 1,
        }
    }

    /// Substitution cost of `h_i` by `g_j` away from break points.
    pub fn sub(&self, i: usize, j: usize) -> u32 {
        use FlatSymbol::*;
        let h = match (self.h[i - 1], self.segmentation) {
            (Break, true) => Sym::Space,
            (Break, false) => return INFINITY,
            (Symbol(s), _) => s,
        };
        match self.g[j - 1] {
            Break => INFINITY,
            Symbol(g) if g == h => 0,
            Symbol(g) if self.weight(g) == 0 || self.weight(h) == 0 => INFINITY,
            Symbol(_) => 1,
        }
    }

    pub fn del(&self, i: usize) -> u32 {
        match self.h[i - 1] {
            FlatSymbol::Break if self.segmentation => self.space_weight,
            FlatSymbol::Break => INFINITY,
            FlatSymbol::Symbol(s) => self.weight(s),
        }
    }

    pub fn ins(&self, j: usize) -> u32 {
        match self.g[j - 1] {
            FlatSymbol::Break => INFINITY,
            FlatSymbol::Symbol(s) => self.weight(s),
        }
    }

    /// Origin line of the hypothesis segment ending at break position `i`.
    pub fn segment_owner(&self, i: usize) -> usize {
        self.h_line_of[i - 1]
    }

    /// Whether the segment ending at `i` may be matched with the GT line ending at `j`.
    pub fn gate_allows(&self, i: usize, j: usize) -> bool {
        match self.gate {
            Some(gate) if i >= 2 && j >= 2 => {
                gate.is_neighbor(self.segment_owner(i), self.g_line_ending[j])
            }
            _ => true,
        }
    }

    /// Predecessors of `(i, j)` in backtrace preference order.
    pub fn preds(&self, i: usize, j: usize) -> [Option<Edge>; 3] {
        let mut out = [None; 3];
        if i == 0 || j == 0 {
            return out;
        }
        if self.is_break_point(i, j) {
            let diag = (Self::valid(i - 1, j - 1) && self.gate_allows(i, j)).then_some(Edge {
                i: i - 1,
                j: j - 1,
                cost: 0,
            });
            let skip_gt = (self.g_prev[j] != NONE).then(|| Edge {
                i,
                j: self.g_prev[j],
                cost: self.g_line_cost[j],
            });
            let skip_hyp = (self.h_prev[i] != NONE).then(|| Edge {
                i: self.h_prev[i],
                j,
                cost: self.h_seg_cost[i],
            });
            // An erroneous hypothesis line is attributed to the earliest
            // eligible GT line; skipping an empty GT line is the last resort.
            out = match skip_gt {
                Some(e) if e.cost > 0 => [skip_gt, diag, skip_hyp],
                _ => [diag, skip_hyp, skip_gt],
            };
        } else {
            if Self::valid(i - 1, j - 1) {
                let c = self.sub(i, j);
                if c != INFINITY {
                    out[0] = Some(Edge {
                        i: i - 1,
                        j: j - 1,
                        cost: c,
                    });
                }
            }
            if Self::valid(i - 1, j) {
                let c = self.del(i);
                if c != INFINITY {
                    out[1] = Some(Edge {
                        i: i - 1,
                        j,
                        cost: c,
                    });
                }
            }
            if Self::valid(i, j - 1) {
                let c = self.ins(j);
                if c != INFINITY {
                    out[2] = Some(Edge {
                        i,
                        j: j - 1,
                        cost: c,
                    });
                }
            }
        }
        out
    }

    /// Successors of `(i, j)`; the inverse of [`Grid::preds`].
    pub fn succs(&self, i: usize, j: usize, out: &mut Vec<Edge>) {
        out.clear();
        let (rows, cols) = (self.rows(), self.cols());
        if i < rows && j < cols {
            let (ti, tj) = (i + 1, j + 1);
            if self.is_break_point(ti, tj) {
                if self.gate_allows(ti, tj) {
                    out.push(Edge {
                        i: ti,
                        j: tj,
                        cost: 0,
                    });
                }
            } else {
                let c = self.sub(ti, tj);
                if c != INFINITY {
                    out.push(Edge {
                        i: ti,
                        j: tj,
                        cost: c,
                    });
                }
            }
        }
        if i < rows && j >= 1 && !self.is_break_point(i + 1, j) {
            let c = self.del(i + 1);
            if c != INFINITY {
                out.push(Edge {
                    i: i + 1,
                    j,
                    cost: c,
                });
            }
        }
        if j < cols && i >= 1 && !self.is_break_point(i, j + 1) {
            let c = self.ins(j + 1);
            if c != INFINITY {
                out.push(Edge {
                    i,
                    j: j + 1,
                    cost: c,
                });
            }
        }
        if i >= 1 && j >= 1 && self.is_break_point(i, j) {
            let ni = self.h_next[i];
            if ni != NONE {
                out.push(Edge {
                    i: ni,
                    j,
                    cost: self.h_seg_cost[ni],
                });
            }
            let nj = self.g_next[j];
            if nj != NONE {
                out.push(Edge {
                    i,
                    j: nj,
                    cost: self.g_line_cost[nj],
                });
            }
        }
    }

    /// Hypothesis symbols strictly between two break positions, with line
    /// breaks read as spaces.
    pub fn segment(&self, from: usize, to: usize) -> Vec<Sym> {
        self.h[from..to - 1]
            .iter()
            .map(|s| match s {
                FlatSymbol::Break => Sym::Space,
                FlatSymbol::Symbol(s) => *s,
            })
            .collect()
    }
}
