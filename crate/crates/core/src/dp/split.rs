//! Reading line assignments off a best path.

use serde::Serialize;

use crate::error::{Error, Result};

/// Line-level assignment read from a best path. Indices are zero-based line
/// numbers; line `y` lies between the breaks `y` and `y + 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LineSplit {
    pub matched: Vec<(usize, usize)>,
    pub unmatched_hyp: Vec<usize>,
    pub unmatched_gt: Vec<usize>,
}

/// Assignment of hypothesis segments to GT lines. `segments[k] = (a, b)`
/// means the hypothesis symbols strictly between break positions `a` and `b`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SegmentSplit {
    pub segments: Vec<(usize, usize)>,
    /// `(segment, gt line)` pairs.
    pub matched: Vec<(usize, usize)>,
    pub unmatched_hyp: Vec<usize>,
    pub unmatched_gt: Vec<usize>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Internal(format!("malformed best path: {}", msg.into()))
}

fn split(
    path: &[(usize, usize)],
    breaks_hyp: &[usize],
    breaks_gt: &[usize],
    merges: bool,
) -> Result<SegmentSplit> {
    let (Some(&h_last), Some(&g_last)) = (breaks_hyp.last(), breaks_gt.last()) else {
        return Err(malformed("break lists must not be empty"));
    };
    if path.first() != Some(&(0, 0)) {
        return Err(malformed("does not start at (0, 0)"));
    }
    if path.last() != Some(&(h_last, g_last)) {
        return Err(malformed("does not end at the last break point"));
    }
    if path
        .windows(2)
        .any(|w| w[1].0 < w[0].0 || w[1].1 < w[0].1 || w[0] == w[1])
    {
        return Err(malformed("not monotone"));
    }
    let rank = |breaks: &[usize], p: usize| breaks.binary_search(&p).ok();
    let points: Vec<(usize, usize)> = path
        .iter()
        .filter_map(|&(i, j)| Some((rank(breaks_hyp, i)?, rank(breaks_gt, j)?)))
        .collect();
    if points.first() != Some(&(0, 0)) {
        return Err(malformed("first break point missing"));
    }

    let mut out = SegmentSplit::default();
    for w in points.windows(2) {
        let ((y0, x0), (y1, x1)) = (w[0], w[1]);
        let seg = (breaks_hyp[y0], breaks_hyp[y1]);
        match (y1 > y0, x1 > x0) {
            (true, true) if x1 == x0 + 1 && (merges || y1 == y0 + 1) => {
                out.matched.push((out.segments.len(), x0));
                out.segments.push(seg);
            }
            (true, false) if y1 == y0 + 1 => {
                out.unmatched_hyp.push(out.segments.len());
                out.segments.push(seg);
            }
            (false, true) if x1 == x0 + 1 => out.unmatched_gt.push(x0),
            _ => return Err(malformed(format!("jump from {:?} to {:?}", w[0], w[1]))),
        }
    }
    Ok(out)
}

/// Splits a best path into matched, hypothesis-only and GT-only lines.
///
/// `path` runs from `(0, 0)` to the last pair of breaks; `breaks_hyp` and
/// `breaks_gt` are the 1-based line-break positions of both flattened pages.
pub fn split_best_path(
    path: &[(usize, usize)],
    breaks_hyp: &[usize],
    breaks_gt: &[usize],
) -> Result<LineSplit> {
    let s = split(path, breaks_hyp, breaks_gt, false)?;
    let line_of = |k: usize| {
        breaks_hyp
            .binary_search(&s.segments[k].0)
            .expect("segment starts on a break")
    };
    Ok(LineSplit {
        matched: s.matched.iter().map(|&(k, x)| (line_of(k), x)).collect(),
        unmatched_hyp: s.unmatched_hyp.iter().map(|&k| line_of(k)).collect(),
        unmatched_gt: s.unmatched_gt,
    })
}

/// Like [`split_best_path`] with `ext_breaks_hyp` listing line breaks and
/// spaces of the hypothesis. Matched segments may span several of them
/// (merged lines); unmatched ones never do, so they contain no space.
pub fn split_best_path_with_segmentation(
    path: &[(usize, usize)],
    ext_breaks_hyp: &[usize],
    breaks_gt: &[usize],
) -> Result<SegmentSplit> {
    split(path, ext_breaks_hyp, breaks_gt, true)
}
