//! Classic Levenshtein distance between two symbol sequences, with a
//! deterministic backtrace.

use serde::Serialize;

use crate::types::ErrorCounts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EditOp {
    Match,
    Substitute,
    /// Removes a hypothesis symbol.
    Delete,
    /// Adds a ground-truth symbol.
    Insert,
}

/// One step of an edit script. `(i, j)` is the grid point reached after the
/// step, i.e. the number of hypothesis and ground-truth symbols consumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EditStep {
    pub op: EditOp,
    pub i: usize,
    pub j: usize,
}

/// Edit script turning a hypothesis sequence into a ground-truth sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CharAlignment {
    pub ops: Vec<EditStep>,
}

impl CharAlignment {
    /// Number of non-match steps.
    pub fn cost(&self) -> usize {
        self.ops.iter().filter(|s| s.op != EditOp::Match).count()
    }

    /// Applies the script to `h`, taking inserted and substituted symbols from `g`.
    pub fn replay<T: Clone>(&self, h: &[T], g: &[T]) -> Vec<T> {
        let mut out = Vec::with_capacity(g.len());
        for step in &self.ops {
            match step.op {
                EditOp::Match => out.push(h[step.i - 1].clone()),
                EditOp::Substitute | EditOp::Insert => out.push(g[step.j - 1].clone()),
                EditOp::Delete => {}
            }
        }
        out
    }

    pub fn counts(&self, hyp_len: usize, gt_len: usize) -> ErrorCounts {
        let mut counts = ErrorCounts {
            hyp_len: hyp_len as u64,
            gt_len: gt_len as u64,
            ..Default::default()
        };
        for step in &self.ops {
            match step.op {
                EditOp::Match => counts.cor += 1,
                EditOp::Substitute => counts.sub += 1,
                EditOp::Delete => counts.del += 1,
                EditOp::Insert => counts.ins += 1,
            }
        }
        counts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levenshtein {
    pub distance: usize,
    pub alignment: CharAlignment,
    pub counts: ErrorCounts,
}

/// Levenshtein distance from `h` to `g` with unit costs.
///
/// Backtrace ties are broken match > substitute > delete > insert, so the
/// resulting counts are deterministic.
pub fn levenshtein<T: PartialEq>(h: &[T], g: &[T]) -> Levenshtein {
    let (n, m) = (h.len(), g.len());
    let width = m + 1;
    let mut table = vec![0usize; (n + 1) * width];
    for (j, cell) in table[..width].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=n {
        table[i * width] = i;
        for j in 1..=m {
            let diag = table[(i - 1) * width + j - 1] + usize::from(h[i - 1] != g[j - 1]);
            let del = table[(i - 1) * width + j] + 1;
            let ins = table[i * width + j - 1] + 1;
            table[i * width + j] = diag.min(del).min(ins);
        }
    }

    let mut ops = Vec::with_capacity(n.max(m));
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        let here = table[i * width + j];
        if i > 0 && j > 0 {
            let same = h[i - 1] == g[j - 1];
            if table[(i - 1) * width + j - 1] + usize::from(!same) == here {
                let op = if same {
                    EditOp::Match
                } else {
                    EditOp::Substitute
                };
                ops.push(EditStep { op, i, j });
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && table[(i - 1) * width + j] + 1 == here {
            ops.push(EditStep {
                op: EditOp::Delete,
                i,
                j,
            });
            i -= 1;
        } else {
            ops.push(EditStep {
                op: EditOp::Insert,
                i,
                j,
            });
            j -= 1;
        }
    }
    ops.reverse();
    let alignment = CharAlignment { ops };
    let counts = alignment.counts(n, m);
    Levenshtein {
        distance: table[n * width + m],
        alignment,
        counts,
    }
}

/// Distance only, in `O(|g|)` memory.
pub fn levenshtein_distance<T: PartialEq>(h: &[T], g: &[T]) -> usize {
    let mut row: Vec<usize> = (0..=g.len()).collect();
    for (i, hs) in h.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, gs) in g.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = (diag + usize::from(hs != gs)).min(up + 1).min(row[j] + 1);
            diag = up;
        }
    }
    row[g.len()]
}

/// Convenience wrapper comparing strings character by character.
pub fn levenshtein_str(h: &str, g: &str) -> Levenshtein {
    let h: Vec<char> = h.chars().collect();
    let g: Vec<char> = g.chars().collect();
    levenshtein(&h, &g)
}
