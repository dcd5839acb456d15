//! Baseline neighborhood predicate used to gate line assignments.
//!
//! A hypothesis line is a neighbor of ground-truth line `x` when some part of
//! the GT baseline lies within a tolerance of the hypothesis baseline. The
//! tolerance shrinks for crowded pages: it is a fraction of the distance from
//! baseline `x` to the closest other GT baseline, capped from above.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::types::{Line, MeasureConfig, Page};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// Polyline below a text line, ordered along the writing direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Baseline {
    points: Vec<Point>,
}

impl Serialize for Baseline {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.points.iter().map(|p| [p.x, p.y]))
    }
}

impl Baseline {
    /// Needs at least one point with non-negative coordinates; consecutive
    /// duplicates are dropped.
    pub fn new(points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut pts: Vec<Point> = Vec::new();
        for p in points {
            if p.x < 0 || p.y < 0 {
                return Err(Error::InvalidInput(format!(
                    "baseline point ({}, {}) has a negative coordinate",
                    p.x, p.y
                )));
            }
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        if pts.is_empty() {
            return Err(Error::InvalidInput("baseline without points".into()));
        }
        Ok(Baseline { points: pts })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Baseline::new(coords.iter().map(|&(x, y)| Point::new(x, y)))
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    fn segments(&self) -> impl Iterator<Item = (P, P)> + '_ {
        let single = (self.points.len() == 1).then(|| {
            let p = P::from(self.points[0]);
            (p, p)
        });
        self.points
            .windows(2)
            .map(|w| (P::from(w[0]), P::from(w[1])))
            .chain(single)
    }

    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| a.dist(b)).sum()
    }

    /// Points along the polyline every `step` pixels of arc length, starting at
    /// the first point and always including the last one.
    fn resample(&self, step: f64) -> Vec<P> {
        let mut out = vec![P::from(self.points[0])];
        let mut carried = 0.0;
        for w in self.points.windows(2) {
            let (a, b) = (P::from(w[0]), P::from(w[1]));
            let len = a.dist(b);
            let mut t = step - carried;
            while t <= len + 1e-9 {
                let f = t / len;
                out.push(P {
                    x: a.x + (b.x - a.x) * f,
                    y: a.y + (b.y - a.y) * f,
                });
                t += step;
            }
            carried = len - (t - step);
        }
        if let Some(last) = self.points.last().map(|&p| P::from(p)) {
            if out.last().map_or(true, |q| q.dist(last) > 1e-6) {
                out.push(last);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct P {
    x: f64,
    y: f64,
}

impl From<Point> for P {
    fn from(p: Point) -> Self {
        P {
            x: p.x as f64,
            y: p.y as f64,
        }
    }
}

impl P {
    fn dist(self, o: P) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }
}

fn point_segment_distance(p: P, a: P, b: P) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist(P {
        x: a.x + t * dx,
        y: a.y + t * dy,
    })
}

fn point_polyline_distance(p: P, line: &Baseline) -> f64 {
    line.segments()
        .map(|(a, b)| point_segment_distance(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

fn cross(o: P, a: P, b: P) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn segments_intersect(a: P, b: P, c: P, d: P) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

/// Minimal Euclidean distance between two polylines (0 when they cross).
pub fn polyline_distance(a: &Baseline, b: &Baseline) -> f64 {
    let mut best = f64::INFINITY;
    for (p, q) in a.segments() {
        for (r, s) in b.segments() {
            if segments_intersect(p, q, r, s) {
                return 0.0;
            }
            best = best
                .min(point_segment_distance(p, r, s))
                .min(point_segment_distance(q, r, s))
                .min(point_segment_distance(r, p, q))
                .min(point_segment_distance(s, p, q));
        }
    }
    best
}

/// Tolerance for GT baseline `x`: `min(fraction * d_near, cap)` where `d_near`
/// is the distance to the closest other GT baseline, or `cap` when there is none.
pub fn tolerance(gt_baselines: &[Baseline], x: usize, config: &MeasureConfig) -> Result<f64> {
    let own = gt_baselines.get(x).ok_or_else(|| {
        Error::InvalidInput(format!(
            "baseline index {x} out of range ({} baselines)",
            gt_baselines.len()
        ))
    })?;
    let nearest = gt_baselines
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != x)
        .map(|(_, other)| polyline_distance(own, other))
        .fold(f64::INFINITY, f64::min);
    Ok((config.tolerance_fraction * nearest).min(config.tolerance_cap))
}

/// Fraction of the GT baseline (resampled at 1 px) lying within `tol` of the
/// hypothesis baseline.
pub fn coverage(hyp: &Baseline, gt: &Baseline, tol: f64) -> f64 {
    let samples = gt.resample(1.0);
    let hits = samples
        .iter()
        .filter(|&&p| point_polyline_distance(p, hyp) <= tol)
        .count();
    hits as f64 / samples.len() as f64
}

fn require_baseline<'a>(line: &'a Line, role: &str) -> Result<&'a Baseline> {
    line.baseline().ok_or_else(|| {
        Error::config(format!(
            "{role} line {} has no baseline but geometry is enabled",
            line.id()
                .map_or_else(|| format!("{:?}", line.text()), str::to_string)
        ))
    })
}

/// Whether `hyp_line` belongs to the neighborhood of GT line `x`.
pub fn is_neighbor(
    hyp_line: &Line,
    gt_line: &Line,
    gt_baselines: &[Baseline],
    x: usize,
    config: &MeasureConfig,
) -> Result<bool> {
    let hb = require_baseline(hyp_line, "hypothesis")?;
    let gb = require_baseline(gt_line, "ground-truth")?;
    let tol = tolerance(gt_baselines, x, config)?;
    Ok(coverage(hb, gb, tol) > 0.0)
}

/// Predicate deciding whether hypothesis line `hyp` may be assigned to
/// ground-truth line `gt` (indices into the evaluated pages).
pub trait Neighborhood: Sync {
    fn is_neighbor(&self, hyp: usize, gt: usize) -> bool;
}

impl<F: Fn(usize, usize) -> bool + Sync> Neighborhood for F {
    fn is_neighbor(&self, hyp: usize, gt: usize) -> bool {
        self(hyp, gt)
    }
}

/// Accepts every pair; geometry then has no effect.
#[derive(Debug, Clone, Copy, Default)]
pub struct AcceptAll;

impl Neighborhood for AcceptAll {
    fn is_neighbor(&self, _: usize, _: usize) -> bool {
        true
    }
}

/// Precomputed baseline neighborhood of a page pair.
#[derive(Debug, Clone)]
pub struct BaselineNeighborhood {
    // neighbors[x][y]
    neighbors: Vec<Vec<bool>>,
}

impl BaselineNeighborhood {
    /// Every line of both pages must carry a baseline.
    pub fn new(hyp: &Page, gt: &Page, config: &MeasureConfig) -> Result<Self> {
        let hyp_bl = hyp
            .lines
            .iter()
            .enumerate()
            .map(|(y, l)| {
                l.baseline().cloned().ok_or_else(|| {
                    Error::config(format!(
                        "hypothesis line {} has no baseline but geometry is enabled",
                        hyp.line_label(y)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let gt_bl = gt
            .lines
            .iter()
            .enumerate()
            .map(|(x, l)| {
                l.baseline().cloned().ok_or_else(|| {
                    Error::config(format!(
                        "ground-truth line {} has no baseline but geometry is enabled",
                        gt.line_label(x)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let neighbors = (0..gt_bl.len())
            .map(|x| {
                let tol = tolerance(&gt_bl, x, config)?;
                Ok(hyp_bl
                    .iter()
                    .map(|hb| coverage(hb, &gt_bl[x], tol) > 0.0)
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BaselineNeighborhood { neighbors })
    }
}

impl Neighborhood for BaselineNeighborhood {
    fn is_neighbor(&self, hyp: usize, gt: usize) -> bool {
        self.neighbors[gt][hyp]
    }
}
