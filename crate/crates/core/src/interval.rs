//! Interval models, their grid-point form, and the bounded-functionality
//! witness for interval graphs.
//!
//! A model with `n` intervals is normalized by ranking its `2n` endpoints
//! `1..=2n` from left to right. Each interval then becomes a grid point
//! `(i, j)` with `i < j`, where column `i` holds its left endpoint and row
//! `j` its right endpoint. Every row and every column carries exactly one
//! endpoint.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parameters::{pair_witness, PairMode, Witness, WitnessOrigin};

/// Closed intervals `[l, r]` with coordinates `integer / scale_denominator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntervalFile")]
pub struct IntervalRep {
    pub scale_denominator: i64,
    pub intervals: Vec<(i64, i64)>,
}

#[derive(Deserialize)]
struct IntervalFile {
    scale_denominator: i64,
    intervals: Vec<(i64, i64)>,
}

impl TryFrom<IntervalFile> for IntervalRep {
    type Error = Error;

    fn try_from(f: IntervalFile) -> Result<Self> {
        IntervalRep::with_scale(f.scale_denominator, f.intervals)
    }
}

impl IntervalRep {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        Self::with_scale(1, intervals)
    }

    pub fn with_scale(scale_denominator: i64, intervals: Vec<(i64, i64)>) -> Result<Self> {
        if scale_denominator <= 0 {
            return Err(Error::InvalidParameter(format!("scale_denominator {scale_denominator} must be positive")));
        }
        if intervals.is_empty() {
            return Err(Error::InvalidParameter("interval list is empty".into()));
        }
        if let Some((v, &(l, r))) = intervals.iter().enumerate().find(|(_, &(l, r))| l > r) {
            return Err(Error::InvalidParameter(format!("interval {v} = [{l}, {r}] has l > r")));
        }
        Ok(Self { scale_denominator, intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Endpoint events sorted by coordinate, left endpoints first on ties, then by id.
fn sorted_events(intervals: &[(i64, i64)]) -> Vec<(i64, u8, usize)> {
    let mut ev: Vec<(i64, u8, usize)> =
        intervals.iter().enumerate().flat_map(|(v, &(l, r))| [(l, 0u8, v), (r, 1u8, v)]).collect();
    ev.sort_unstable();
    ev
}

/// Intersection graph of closed intervals, by an endpoint sweep.
pub(crate) fn interval_graph(intervals: &[(i64, i64)]) -> Graph {
    let n = intervals.len();
    let mut g = Graph::empty(n);
    let mut active: Vec<usize> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for (_, kind, v) in sorted_events(intervals) {
        if kind == 0 {
            for &u in &active {
                g.set_edge(u, v);
            }
            slot[v] = active.len();
            active.push(v);
        } else {
            let at = slot[v];
            active.swap_remove(at);
            if let Some(&moved) = active.get(at) {
                slot[moved] = at;
            }
        }
    }
    g
}

/// Vertex `v` is interval `v`; edges join intersecting closed intervals.
pub fn graph_from_intervals(rep: &IntervalRep) -> Graph {
    interval_graph(&rep.intervals)
}

/// Interval endpoints ranked `1..=2n`: one grid point `(i, j)`, `i < j`, per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointFile")]
pub struct PointRep {
    pub points: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct PointFile {
    points: Vec<(usize, usize)>,
}

impl TryFrom<PointFile> for PointRep {
    type Error = Error;

    fn try_from(f: PointFile) -> Result<Self> {
        PointRep::new(f.points)
    }
}

impl PointRep {
    /// Validates that the coordinates are a permutation of `1..=2n` with `i < j` per point.
    pub fn new(points: Vec<(usize, usize)>) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::InvalidPointRep("no points".into()));
        }
        let mut used = vec![false; 2 * n + 1];
        for (v, &(i, j)) in points.iter().enumerate() {
            if i >= j {
                return Err(Error::InvalidPointRep(format!("point {v} = ({i}, {j}) is not above the diagonal")));
            }
            for c in [i, j] {
                if c == 0 || c > 2 * n {
                    return Err(Error::InvalidPointRep(format!("coordinate {c} outside 1..={}", 2 * n)));
                }
                if std::mem::replace(&mut used[c], true) {
                    return Err(Error::InvalidPointRep(format!("coordinate {c} used twice")));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn manhattan(&self, u: usize, v: usize) -> usize {
        let ((a, b), (c, d)) = (self.points[u], self.points[v]);
        a.abs_diff(c) + b.abs_diff(d)
    }

    /// `owner[c]` is the vertex with an endpoint at coordinate `c` (index 0 unused).
    fn owners(&self) -> Vec<usize> {
        let mut owner = vec![usize::MAX; 2 * self.len() + 1];
        for (v, &(i, j)) in self.points.iter().enumerate() {
            owner[i] = v;
            owner[j] = v;
        }
        owner
    }
}

/// Graph of the point form: `(i, j)` and `(p, q)` adjacent iff `[i, j]` and `[p, q]` intersect.
pub fn graph_from_points(rep: &PointRep) -> Graph {
    let iv: Vec<(i64, i64)> = rep.points.iter().map(|&(i, j)| (i as i64, j as i64)).collect();
    interval_graph(&iv)
}

/// Ranks all endpoints `1..=2n`; ties are broken left endpoint first, then by id.
pub fn normalize(rep: &IntervalRep) -> PointRep {
    let mut points = vec![(0, 0); rep.len()];
    for (rank, (_, kind, v)) in sorted_events(&rep.intervals).into_iter().enumerate() {
        if kind == 0 {
            points[v].0 = rank + 1;
        } else {
            points[v].1 = rank + 1;
        }
    }
    PointRep { points }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SdLemmaViolation {
    pub u: usize,
    pub v: usize,
    pub sd: usize,
    pub manhattan: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdLemmaReport {
    pub pairs_checked: usize,
    pub violation: Option<SdLemmaViolation>,
}

/// Checks `sd(u, v) <= manhattan(u, v) - 2` for every vertex pair.
pub fn check_sd_lemma(rep: &PointRep) -> SdLemmaReport {
    let g = graph_from_points(rep);
    let n = rep.len();
    let mut pairs_checked = 0;
    for u in 0..n {
        for v in u + 1..n {
            pairs_checked += 1;
            let sd = g.distinguisher_count(u, v);
            let manhattan = rep.manhattan(u, v);
            if sd + 2 > manhattan {
                return SdLemmaReport { pairs_checked, violation: Some(SdLemmaViolation { u, v, sd, manhattan }) };
            }
        }
    }
    SdLemmaReport { pairs_checked, violation: None }
}

const STRIPE: usize = 5;

#[inline]
fn stripe(c: usize) -> usize {
    (c - 1) / STRIPE
}

/// A validated witness with at most 8 arguments for some vertex of the
/// interval graph of `rep`.
///
/// Up to 8 vertices the target is vertex 0 with all others as arguments.
/// Otherwise the grid is cut into stripes of 5 rows and 5 columns. A block
/// with two points gives a pair witness (Manhattan distance at most 8). If
/// every block has at most one point, a point in a non-empty block that is
/// neither the leftmost of its row stripe nor the topmost of its column
/// stripe is a function of the nearest point above it in its column stripe,
/// the nearest point left of it in its row stripe, and the at most 3 + 3
/// intervals with an endpoint strictly between them.
pub fn find_low_fun_witness(rep: &PointRep) -> Result<Witness> {
    let g = graph_from_points(rep);
    let n = rep.len();
    if n <= 8 {
        let args: Vec<usize> = (1..n).collect();
        return Witness::from_observations(&g, 0, args, WitnessOrigin::SmallN)?.checked(&g);
    }

    // (row stripe, column stripe) -> points, row-major
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (v, &(i, j)) in rep.points.iter().enumerate() {
        blocks.entry((stripe(j), stripe(i))).or_default().push(v);
    }

    if let Some(members) = blocks.values().find(|m| m.len() >= 2) {
        let (x, y) = (members[0], members[1]);
        let mut w = pair_witness(&g, x, y, PairMode::Distinguishers)?;
        w.origin = WitnessOrigin::StripeCase1;
        if w.arity() > 7 {
            return Err(Error::Internal(format!("block pair ({x}, {y}) has sd {} > 6", w.arity() - 1)));
        }
        return Ok(w);
    }

    let mut leftmost: BTreeMap<usize, usize> = BTreeMap::new();
    let mut topmost: BTreeMap<usize, usize> = BTreeMap::new();
    for &(row, col) in blocks.keys() {
        leftmost.entry(row).and_modify(|c| *c = (*c).min(col)).or_insert(col);
        topmost.entry(col).and_modify(|r| *r = (*r).max(row)).or_insert(row);
    }
    let (&(row, col), members) = blocks
        .iter()
        .find(|(&(row, col), _)| leftmost[&row] != col && topmost[&col] != row)
        .ok_or_else(|| Error::Internal(format!("no non-empty non-marginal block among {n} points")))?;
    let x = members[0];
    let (xi, xj) = rep.points[x];
    let y = (0..n)
        .filter(|&v| stripe(rep.points[v].0) == col && rep.points[v].1 > xj)
        .min_by_key(|&v| rep.points[v].1)
        .ok_or_else(|| Error::Internal(format!("no point above {x} in its column stripe")))?;
    let z = (0..n)
        .filter(|&v| stripe(rep.points[v].1) == row && rep.points[v].0 < xi)
        .max_by_key(|&v| rep.points[v].0)
        .ok_or_else(|| Error::Internal(format!("no point left of {x} in its row stripe")))?;

    let owner = rep.owners();
    let yi = rep.points[y].0;
    let zj = rep.points[z].1;
    let between = |a: usize, b: usize| (a.min(b) + 1..a.max(b)).map(|c| owner[c]);
    let mut extras: Vec<usize> =
        between(xi, yi).chain(between(xj, zj)).filter(|&v| v != x && v != y && v != z).collect();
    extras.sort_unstable();
    extras.dedup();

    let mut args = vec![y, z];
    args.extend(extras);
    Witness::from_rule(x, args, WitnessOrigin::StripeCase2, |m| m & 0b11 == 0b11)?.checked(&g)
}
