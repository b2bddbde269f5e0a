//! Axis-parallel closed boxes with exact integer coordinates, their
//! intersection graphs, and realizations that check themselves against the
//! graph they are meant to reproduce.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::{point_box_incidence_structure, Construction};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalRep;
use crate::parameters::{check_abc_partition, AbcOrders};

/// Closed boxes in `R^d`; true coordinate = integer / `scale_denominator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoxFile")]
pub struct BoxSystem {
    pub d: usize,
    pub scale_denominator: i64,
    pub boxes: Vec<Vec<(i64, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, String>>,
}

#[derive(Deserialize)]
struct BoxFile {
    d: usize,
    scale_denominator: i64,
    boxes: Vec<Vec<(i64, i64)>>,
    #[serde(default)]
    labels: Option<BTreeMap<usize, String>>,
}

impl TryFrom<BoxFile> for BoxSystem {
    type Error = Error;

    fn try_from(f: BoxFile) -> Result<Self> {
        let mut bs = BoxSystem::new(f.d, f.scale_denominator, f.boxes)?;
        bs.labels = f.labels;
        Ok(bs)
    }
}

impl BoxSystem {
    pub fn new(d: usize, scale_denominator: i64, boxes: Vec<Vec<(i64, i64)>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("box dimension must be at least 1".into()));
        }
        if scale_denominator <= 0 {
            return Err(Error::InvalidParameter(format!("scale_denominator {scale_denominator} must be positive")));
        }
        for (m, b) in boxes.iter().enumerate() {
            if b.len() != d {
                return Err(Error::InvalidParameter(format!("box {m} has {} coordinates, expected {d}", b.len())));
            }
            if let Some((lo, hi)) = b.iter().find(|(lo, hi)| lo > hi) {
                return Err(Error::InvalidParameter(format!("box {m} has side [{lo}, {hi}] with lo > hi")));
            }
        }
        Ok(Self { d, scale_denominator, boxes, labels: None })
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Every side has length exactly `scale_denominator`.
    pub fn is_unit(&self) -> bool {
        self.boxes.iter().all(|b| b.iter().all(|(lo, hi)| hi - lo == self.scale_denominator))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("box serialization cannot fail")
    }
}

fn overlap(a: (i64, i64), b: (i64, i64)) -> bool {
    a.0 <= b.1 && b.0 <= a.1
}

/// Intersection graph of closed boxes (touching counts). Labels are copied over.
pub fn graph_from_boxes(bs: &BoxSystem) -> Graph {
    let n = bs.boxes.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&m| (bs.boxes[m][0].0, m));
    let mut edges = Vec::new();
    for (pos, &u) in order.iter().enumerate() {
        let hi = bs.boxes[u][0].1;
        for &v in order[pos + 1..].iter().take_while(|&&v| bs.boxes[v][0].0 <= hi) {
            if bs.boxes[u].iter().zip(&bs.boxes[v]).skip(1).all(|(&a, &b)| overlap(a, b)) {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let g = Graph::from_edge_list(n, &edges).expect("box ids are in range");
    // labels naming missing boxes are dropped
    match &bs.labels {
        Some(l) => g.with_labels(l.iter().filter(|(&v, _)| v < n).map(|(&v, s)| (v, s.clone())).collect()).expect("in range"),
        None => g,
    }
}

/// Outcome of a realization: the graph asked for, the graph the geometry produces.
#[derive(Clone, Debug, Serialize)]
pub struct RealizationReport {
    pub target_graph: Graph,
    pub realized_graph: Graph,
    pub equal: bool,
    pub unit: bool,
}

impl RealizationReport {
    fn check(target: Graph, realized: Graph, unit: bool, what: &str) -> Result<Self> {
        let equal = target.equal_labeled(&realized);
        if !equal {
            let diff = (0..target.n().min(realized.n()))
                .flat_map(|u| (u + 1..target.n().min(realized.n())).map(move |v| (u, v)))
                .find(|&(u, v)| target.has_edge(u, v) != realized.has_edge(u, v));
            return Err(Error::RealizationMismatch(match diff {
                Some((u, v)) => format!("{what}: pair ({u}, {v}) differs"),
                None => format!("{what}: vertex counts {} vs {}", target.n(), realized.n()),
            }));
        }
        Ok(Self { target_graph: target, realized_graph: realized, equal, unit })
    }
}

/// Plane realization of `H^n_i`: points, boxes, and the containment check.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneRealization {
    pub scale_denominator: i64,
    pub points: Vec<(i64, i64)>,
    pub boxes: BoxSystem,
    pub report: RealizationReport,
}

fn contains(b: &[(i64, i64)], p: (i64, i64)) -> bool {
    b[0].0 <= p.0 && p.0 <= b[0].1 && b[1].0 <= p.1 && p.1 <= b[1].1
}

/// Bipartite incidence graph of points (first) and 2D boxes (after).
pub fn incidence_graph(points: &[(i64, i64)], boxes: &BoxSystem) -> Graph {
    let p = points.len();
    let mut edges = Vec::new();
    for (m, b) in boxes.boxes.iter().enumerate() {
        edges.extend(points.iter().enumerate().filter(|(_, &q)| contains(b, q)).map(|(v, _)| (v, p + m)));
    }
    Graph::from_edge_list(p + boxes.len(), &edges).expect("incidences are in range")
}

/// Realizes `H^n_i` by points and boxes in the plane.
///
/// Each level refines the grid by `F = 2n+2`, places `n` copies of the
/// previous level side by side, lifts copy `c` by `c` grid steps, and adds one
/// box per original point around its `n` copies. Points stay at distance
/// at least one step from every box boundary, so the lifts never cross one.
pub fn realize_pointbox_plane(n: usize, i: usize) -> Result<PlaneRealization> {
    let target = point_box_incidence_structure(n, i)?;
    let f = 2 * n as i64 + 2;
    let nn = n as i64;
    let mut points: Vec<(i64, i64)> = (0..nn).map(|c| (1, c + 1)).collect();
    let mut boxes: Vec<[(i64, i64); 2]> = vec![[(0, 2), (0, nn + 1)]];
    let mut scale: i64 = 1;
    let overflow = || Error::Overflow(format!("plane realization of H^{n}_{i}"));
    for _ in 2..=i {
        scale = scale.checked_mul(f).ok_or_else(overflow)?;
        let width = points.iter().map(|p| p.0).chain(boxes.iter().map(|b| b[0].1)).max().unwrap_or(0);
        let shift = width.checked_mul(f).and_then(|w| w.checked_add(f)).ok_or_else(overflow)?;
        let (pp, bb) = (points.len(), boxes.len());
        let mut next_points = Vec::with_capacity(n * pp);
        let mut next_boxes = Vec::with_capacity(n * bb + pp);
        for c in 0..nn {
            let dx = c * shift;
            next_points.extend(points.iter().map(|&(x, y)| (x * f + dx, y * f + c)));
            next_boxes.extend(boxes.iter().map(|b| [(b[0].0 * f + dx, b[0].1 * f + dx), (b[1].0 * f, b[1].1 * f)]));
        }
        for v in 0..pp {
            let copies = (0..n).map(|c| next_points[c * pp + v]);
            let (lo, hi) = copies.fold((i64::MAX, i64::MIN), |(lo, hi), (x, _)| (lo.min(x), hi.max(x)));
            let y = points[v].1 * f;
            next_boxes.push([(lo - 1, hi + 1), (y - 1, y + nn)]);
        }
        points = next_points;
        boxes = next_boxes;
    }
    let bs = BoxSystem::new(2, scale, boxes.iter().map(|b| b.to_vec()).collect())?;
    let realized = incidence_graph(&points, &bs);
    let report = RealizationReport::check(target.to_graph(), realized, false, "plane point-box realization")?;
    Ok(PlaneRealization { scale_denominator: scale, points, boxes: bs, report })
}

/// Boxes in `R^3` whose intersection graph is the point-box incidence graph.
///
/// Coordinates are tripled. Box `m` becomes a slab at height `[3m, 3m+1]`;
/// each point becomes a column of half-width 1 through all slabs. Points
/// come first in the output, then boxes.
pub fn embed_pointbox_r3(points: &[(i64, i64)], boxes: &BoxSystem) -> Result<(BoxSystem, RealizationReport)> {
    if boxes.d != 2 {
        return Err(Error::InvalidParameter(format!("expected planar boxes, got d = {}", boxes.d)));
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(p) = points.iter().find(|&&p| !seen.insert(p)) {
        return Err(Error::InvalidParameter(format!("point {p:?} occurs twice")));
    }
    let overflow = || Error::Overflow("R^3 embedding".into());
    let t = |x: i64| x.checked_mul(3).ok_or_else(overflow);
    let b = boxes.len() as i64;
    let top = b.checked_mul(3).and_then(|z| z.checked_add(1)).ok_or_else(overflow)?;
    let mut out = Vec::with_capacity(points.len() + boxes.len());
    for &(x, y) in points {
        out.push(vec![(t(x)? - 1, t(x)? + 1), (t(y)? - 1, t(y)? + 1), (0, top)]);
    }
    for (m, bx) in boxes.boxes.iter().enumerate() {
        let z = 3 * m as i64;
        out.push(vec![(t(bx[0].0)?, t(bx[0].1)?), (t(bx[1].0)?, t(bx[1].1)?), (z, z + 1)]);
    }
    let scale = boxes.scale_denominator.checked_mul(3).ok_or_else(overflow)?;
    let bs = BoxSystem::new(3, scale, out)?;
    let realized = graph_from_boxes(&bs);
    let report = RealizationReport::check(incidence_graph(points, boxes), realized, false, "R^3 slab embedding")?;
    Ok((bs, report))
}

fn abc_orders(abc: &Construction) -> Result<AbcOrders> {
    let (a, b, c) = abc.abc_parts();
    check_abc_partition(&abc.graph, &a, &b, &c)
}

/// 1-based positions of every vertex in the recovered orders.
fn positions(orders: &AbcOrders, total: usize) -> (Vec<usize>, Vec<usize>) {
    let mut pos = vec![0; total];
    let mut pos_prime = vec![0; total];
    for list in [&orders.a, &orders.b, &orders.c] {
        for (k, &v) in list.iter().enumerate() {
            pos[v] = k + 1;
        }
    }
    for (k, &v) in orders.b_prime.iter().enumerate() {
        pos_prime[v] = k + 1;
    }
    (pos, pos_prime)
}

/// Unit squares of side `L = 4n` (the scale) realizing an ABC graph.
///
/// Lower-left corners: `a_i` at `(-i, -i)`; the `B` vertex at A-side position
/// `j` and C-side position `m` at `(n-m, L-j+1)`; `c_m` at `(n+L+1-m, L+1-m)`.
pub fn realize_abc_unit_squares(abc: &Construction) -> Result<(BoxSystem, RealizationReport)> {
    let orders = abc_orders(abc)?;
    let n = orders.n() as i64;
    let l = 4 * n;
    let total = abc.graph.n();
    let (pos, pos_prime) = positions(&orders, total);
    let mut corners = vec![(0i64, 0i64); total];
    for &v in &orders.a {
        let i = pos[v] as i64;
        corners[v] = (-i, -i);
    }
    for &v in &orders.b {
        let (j, m) = (pos[v] as i64, pos_prime[v] as i64);
        corners[v] = (n - m, l - j + 1);
    }
    for &v in &orders.c {
        let m = pos[v] as i64;
        corners[v] = (n + l + 1 - m, l + 1 - m);
    }
    let boxes = corners.iter().map(|&(x, y)| vec![(x, x + l), (y, y + l)]).collect();
    let mut bs = BoxSystem::new(2, l, boxes)?;
    bs.labels = Some(abc.graph.labels().clone()).filter(|m| !m.is_empty());
    let unit = bs.is_unit();
    let report = RealizationReport::check(abc.graph.clone(), graph_from_boxes(&bs), unit, "ABC unit squares")?;
    if !unit {
        return Err(Error::Internal("ABC square realization produced a non-unit box".into()));
    }
    Ok((bs, report))
}

/// Interval model of an ABC graph at scale 10, with `Q = 100n`:
/// `a_i = [0, 10(n-i)+5]`, `b = [10(n-j)+8, Q-10m]` for A-side position `j` and
/// C-side position `m`, `c_j = [Q-10j+5, Q+10]`.
pub fn realize_abc_intervals(abc: &Construction) -> Result<(IntervalRep, RealizationReport)> {
    let orders = abc_orders(abc)?;
    let n = orders.n() as i64;
    let q = 100 * n;
    let total = abc.graph.n();
    let (pos, pos_prime) = positions(&orders, total);
    let mut iv = vec![(0i64, 0i64); total];
    for &v in &orders.a {
        iv[v] = (0, 10 * (n - pos[v] as i64) + 5);
    }
    for &v in &orders.b {
        iv[v] = (10 * (n - pos[v] as i64) + 8, q - 10 * pos_prime[v] as i64);
    }
    for &v in &orders.c {
        iv[v] = (q - 10 * pos[v] as i64 + 5, q + 10);
    }
    let rep = IntervalRep::with_scale(10, iv)?;
    let realized = crate::interval::graph_from_intervals(&rep);
    let report = RealizationReport::check(abc.graph.clone(), realized, false, "ABC intervals")?;
    Ok((rep, report))
}
