//! Generators for the graph families: half graphs, ABC graphs, `G_k` and its
//! ABC extension, point-box incidence graphs `H^n_i`, hypercubes.
//!
//! Every generator returns a [`Construction`]: the graph, with per-vertex
//! labels embedded as strings, plus the parsed [`ConstructionLabels`].
//!
//! Label strings, per family:
//!
//! | family    | vertex labels                                   |
//! |-----------|-------------------------------------------------|
//! | half      | `X:i`, `Y:j`                                    |
//! | abc       | `A:i`, `B:j:j'` (A-side, C-side order), `C:m`   |
//! | gk        | `A:i`, `B:bx,by:i,j:p,q`, `C:j`                 |
//! | hni       | `P:v`, `Box:b` (0-based)                        |
//! | hypercube | `Q:<bitstring, most significant bit first>`     |
//!
//! Order indices are 1-based.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Upper bound on the vertex count of any generated graph.
pub const MAX_GENERATED_VERTICES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Half,
    Abc,
    Gk,
    Hni,
    Hypercube,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Part {
    X,
    Y,
    A,
    B,
    C,
    P,
    Box,
    Q,
}

/// Family-specific metadata of one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexMeta {
    pub part: Part,
    /// 1-based position in the part's order (`x_i`, `a_i`, `c_j`, A-side `b_j`), or the
    /// 0-based point/box index for `hni`.
    pub order: Option<usize>,
    /// 1-based position of a `B` vertex in the C-side order of an ABC graph.
    pub order_prime: Option<usize>,
    /// `(b_x, b_y)` of a `G_k` vertex in `B`.
    pub coords: Option<(usize, usize)>,
    /// Block `(i, j)` of a `G_k` vertex in `B`.
    pub block: Option<(usize, usize)>,
    /// `(p, q)` of a `G_k` vertex in `B`.
    pub pq: Option<(usize, usize)>,
    pub bits: Option<String>,
}

impl VertexMeta {
    fn new(part: Part) -> Self {
        Self { part, order: None, order_prime: None, coords: None, block: None, pq: None, bits: None }
    }

    fn ordered(part: Part, order: usize) -> Self {
        Self { order: Some(order), ..Self::new(part) }
    }
}

impl fmt::Display for VertexMeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = self.order.unwrap_or(0);
        match self.part {
            Part::X => write!(f, "X:{o}"),
            Part::Y => write!(f, "Y:{o}"),
            Part::A => write!(f, "A:{o}"),
            Part::C => write!(f, "C:{o}"),
            Part::P => write!(f, "P:{o}"),
            Part::Box => write!(f, "Box:{o}"),
            Part::Q => write!(f, "Q:{}", self.bits.as_deref().unwrap_or("")),
            Part::B => match (self.coords, self.block, self.pq) {
                (Some((bx, by)), Some((i, j)), Some((p, q))) => write!(f, "B:{bx},{by}:{i},{j}:{p},{q}"),
                _ => write!(f, "B:{o}:{}", self.order_prime.unwrap_or(0)),
            },
        }
    }
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

fn parse_meta(label: &str) -> Option<VertexMeta> {
    let mut it = label.split(':');
    let head = it.next()?;
    let fields: Vec<&str> = it.collect();
    let single = |part| Some(VertexMeta::ordered(part, fields.first()?.parse().ok()?)).filter(|_| fields.len() == 1);
    match head {
        "X" => single(Part::X),
        "Y" => single(Part::Y),
        "A" => single(Part::A),
        "C" => single(Part::C),
        "P" => single(Part::P),
        "Box" => single(Part::Box),
        "Q" if fields.len() == 1 && fields[0].chars().all(|c| c == '0' || c == '1') => {
            Some(VertexMeta { bits: Some(fields[0].to_string()), ..VertexMeta::new(Part::Q) })
        }
        "B" if fields.len() == 2 => Some(VertexMeta {
            order_prime: Some(fields[1].parse().ok()?),
            ..VertexMeta::ordered(Part::B, fields[0].parse().ok()?)
        }),
        "B" if fields.len() == 3 => Some(VertexMeta {
            coords: Some(parse_pair(fields[0])?),
            block: Some(parse_pair(fields[1])?),
            pq: Some(parse_pair(fields[2])?),
            ..VertexMeta::new(Part::B)
        }),
        _ => None,
    }
}

/// Per-vertex metadata of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionLabels {
    pub family: Family,
    pub vertices: Vec<VertexMeta>,
}

impl ConstructionLabels {
    pub fn to_graph_labels(&self) -> BTreeMap<usize, String> {
        self.vertices.iter().enumerate().map(|(v, m)| (v, m.to_string())).collect()
    }

    /// Parses the labels embedded in a graph; every vertex must carry one.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut vertices = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let label = g.label(v).ok_or_else(|| Error::MalformedLabels(format!("vertex {v} has no label")))?;
            let meta =
                parse_meta(label).ok_or_else(|| Error::MalformedLabels(format!("vertex {v}: cannot parse {label:?}")))?;
            vertices.push(meta);
        }
        let has = |p: Part| vertices.iter().any(|m| m.part == p);
        let family = if has(Part::X) || has(Part::Y) {
            Family::Half
        } else if has(Part::P) || has(Part::Box) {
            Family::Hni
        } else if has(Part::Q) {
            Family::Hypercube
        } else if vertices.iter().any(|m| m.coords.is_some()) {
            Family::Gk
        } else {
            Family::Abc
        };
        let allowed: &[Part] = match family {
            Family::Half => &[Part::X, Part::Y],
            Family::Hni => &[Part::P, Part::Box],
            Family::Hypercube => &[Part::Q],
            Family::Gk | Family::Abc => &[Part::A, Part::B, Part::C],
        };
        if let Some(v) = vertices.iter().position(|m| !allowed.contains(&m.part)) {
            return Err(Error::MalformedLabels(format!("vertex {v} has a part foreign to family {family:?}")));
        }
        if family == Family::Gk && vertices.iter().any(|m| m.part == Part::B && m.coords.is_none()) {
            return Err(Error::MalformedLabels("G_k labels mix coordinate and order forms".into()));
        }
        Ok(Self { family, vertices })
    }

    pub fn part_set(&self, part: Part) -> VertexSet {
        let n = self.vertices.len();
        let mut s = VertexSet::empty(n);
        for (v, m) in self.vertices.iter().enumerate() {
            if m.part == part {
                s.insert(v);
            }
        }
        s
    }

    pub fn count(&self, part: Part) -> usize {
        self.vertices.iter().filter(|m| m.part == part).count()
    }
}

/// A generated graph together with its labels.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub labels: ConstructionLabels,
}

impl Construction {
    fn assemble(graph: Graph, labels: ConstructionLabels) -> Self {
        debug_assert_eq!(graph.n(), labels.vertices.len());
        let graph = graph.with_labels(labels.to_graph_labels()).expect("one label per vertex");
        Self { graph, labels }
    }

    /// Rebuilds a construction from a labeled graph (e.g. loaded from JSON).
    pub fn from_graph(graph: Graph) -> Result<Self> {
        let labels = ConstructionLabels::from_graph(&graph)?;
        Ok(Self { graph, labels })
    }

    /// The `A`, `B`, `C` vertex sets.
    pub fn abc_parts(&self) -> (VertexSet, VertexSet, VertexSet) {
        (self.labels.part_set(Part::A), self.labels.part_set(Part::B), self.labels.part_set(Part::C))
    }
}

fn size_guard(what: &str, n: u128) -> Result<usize> {
    if n > MAX_GENERATED_VERTICES as u128 {
        return Err(Error::InvalidParameter(format!(
            "{what} would have {n} vertices, more than {MAX_GENERATED_VERTICES}"
        )));
    }
    Ok(n as usize)
}

/// Bipartite `X`, `Y` with `x_i ~ y_j` iff `i < j`. Ids: `x_i = i-1`, `y_j = n+j-1`.
pub fn half_graph(n: usize) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParameter("half graph needs n >= 1".into()));
    }
    size_guard("half graph", 2 * n as u128)?;
    let g = Graph::from_fn(2 * n, |u, v| u < n && v >= n && u < v - n);
    let vertices = (1..=n).map(|i| VertexMeta::ordered(Part::X, i)).chain((1..=n).map(|j| VertexMeta::ordered(Part::Y, j)));
    Ok(Construction::assemble(g, ConstructionLabels { family: Family::Half, vertices: vertices.collect() }))
}

/// Checks a 1-based permutation of `[n]`.
pub fn check_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &p in perm {
        if p == 0 || p > n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidParameter(format!("{perm:?} is not a permutation of 1..={n}")));
        }
    }
    Ok(())
}

/// ABC graph on `3n` vertices from explicit 1-based orders.
///
/// `a_side[v]` / `c_side[v]` give, for `B` vertex `v` (0-based within `B`),
/// its positions in the A-side and C-side orders.
fn abc_from_orders(n: usize, a_side: &[usize], c_side: &[usize]) -> Graph {
    Graph::from_fn(3 * n, |u, v| {
        let (pu, pv) = (u / n, v / n);
        let (iu, iv) = (u % n, v % n);
        match (pu, pv) {
            (x, y) if x == y => true,
            (0, 1) => iu + 1 < a_side[iv],
            (1, 2) => c_side[iu] < iv + 1,
            _ => false,
        }
    })
}

/// ABC graph with `b'_i = b_{perm(i)}`. Ids: `a_i = i-1`, `b_j = n+j-1`, `c_m = 2n+m-1`.
pub fn abc_graph(n: usize, perm: &[usize]) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParameter("ABC graph needs n >= 1".into()));
    }
    if perm.len() != n {
        return Err(Error::InvalidParameter(format!("permutation has length {}, expected {n}", perm.len())));
    }
    check_permutation(perm)?;
    size_guard("ABC graph", 3 * n as u128)?;
    let a_side: Vec<usize> = (1..=n).collect();
    let mut c_side = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        c_side[p - 1] = i + 1;
    }
    let g = abc_from_orders(n, &a_side, &c_side);
    let mut vertices: Vec<VertexMeta> = (1..=n).map(|i| VertexMeta::ordered(Part::A, i)).collect();
    vertices.extend((0..n).map(|v| VertexMeta { order_prime: Some(c_side[v]), ..VertexMeta::ordered(Part::B, a_side[v]) }));
    vertices.extend((1..=n).map(|m| VertexMeta::ordered(Part::C, m)));
    Ok(Construction::assemble(g, ConstructionLabels { family: Family::Abc, vertices }))
}

/// The grid coordinates of `B` in `G_k`, in id order: blocks `(i, j)`
/// lexicographically, then `(p, q)` lexicographically.
pub fn gk_b_coordinates(k: usize) -> Vec<((usize, usize), (usize, usize), (usize, usize))> {
    let k2 = k * k;
    let mut out = Vec::with_capacity(k2 * k2);
    for i in 1..=k {
        for j in 1..=k {
            for p in 1..=k {
                for q in 0..k {
                    let bx = p * k - q + (i - 1) * k2;
                    let by = q * k + p + (j - 1) * k2;
                    out.push(((bx, by), (i, j), (p, q)));
                }
            }
        }
    }
    out
}

/// `G_k`: cliques `A`, `C` of size `k^3` and `B` of size `k^4` with
/// `a_i ~ b` iff `i < b_x` and `b ~ c_j` iff `b_y < j`. Ids: `A`, then `B`, then `C`.
pub fn g_k(k: usize) -> Result<Construction> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("G_k needs k >= 2, got {k}")));
    }
    let kk = (k as u128).min(1 << 20);
    size_guard("G_k", 2 * kk.pow(3) + kk.pow(4))?;
    let (t, nb) = (k.pow(3), k.pow(4));
    let coords = gk_b_coordinates(k);
    let part = |v: usize| if v < t { 0 } else if v < t + nb { 1 } else { 2 };
    let g = Graph::from_fn(2 * t + nb, |u, v| match (part(u), part(v)) {
        (x, y) if x == y => true,
        (0, 1) => u + 1 < coords[v - t].0 .0,
        (1, 2) => coords[u - t].0 .1 < v - t - nb + 1,
        _ => false,
    });
    let mut vertices: Vec<VertexMeta> = (1..=t).map(|i| VertexMeta::ordered(Part::A, i)).collect();
    vertices.extend(coords.iter().map(|&(c, blk, pq)| VertexMeta {
        coords: Some(c),
        block: Some(blk),
        pq: Some(pq),
        ..VertexMeta::new(Part::B)
    }));
    vertices.extend((1..=t).map(|j| VertexMeta::ordered(Part::C, j)));
    Ok(Construction::assemble(g, ConstructionLabels { family: Family::Gk, vertices }))
}

/// Result of [`extend_gk_to_abc`].
#[derive(Clone, Debug)]
pub struct AbcExtension {
    pub abc: Construction,
    /// `embedding[old] = new` for every vertex of the input `G_k`.
    pub embedding: Vec<usize>,
}

/// Pads `A` and `C` of a `G_k` to `k^4` vertices each so that the result is an ABC graph.
///
/// `B` is ordered by `b_y` (ties by id) on the C side and by `b_x` on the A
/// side. Original `c_j` takes C-side position `k(j-1)+1`; new C vertices fill
/// the gaps with neighbourhoods growing one `B` vertex at a time. `A` mirrors
/// this: `a_i` takes A-side position `k*i`. Original ids are kept; new `A`
/// vertices are appended, then new `C` vertices.
pub fn extend_gk_to_abc(gk: &Construction) -> Result<AbcExtension> {
    let labels = &gk.labels;
    if labels.family != Family::Gk {
        return Err(Error::MalformedLabels(format!("expected G_k labels, found {:?}", labels.family)));
    }
    let t = labels.count(Part::A);
    let nb = labels.count(Part::B);
    let k = (1..=t).find(|&k| k * k * k >= t).unwrap_or(0);
    if k < 2 || k * k * k != t || labels.count(Part::C) != t || nb != k * t {
        return Err(Error::MalformedLabels(format!("part sizes {t}, {nb}, {} do not fit any G_k", labels.count(Part::C))));
    }
    let n_old = gk.graph.n();
    let coords = |v: usize| labels.vertices[v].coords.expect("G_k B vertices carry coordinates");
    let b_ids: Vec<usize> = (0..n_old).filter(|&v| labels.vertices[v].part == Part::B).collect();
    for &v in &b_ids {
        let (bx, by) = coords(v);
        if !(1..=t).contains(&bx) || !(1..=t).contains(&by) {
            return Err(Error::MalformedLabels(format!("vertex {v} has coordinates ({bx}, {by}) outside 1..={t}")));
        }
    }

    let mut by_x = b_ids.clone();
    by_x.sort_by_key(|&v| (coords(v).0, v));
    let mut by_y = b_ids.clone();
    by_y.sort_by_key(|&v| (coords(v).1, v));
    // 1-based positions of each B vertex in the two orders
    let mut a_side = BTreeMap::new();
    let mut c_side = BTreeMap::new();
    for (pos, &v) in by_x.iter().enumerate() {
        a_side.insert(v, pos + 1);
    }
    for (pos, &v) in by_y.iter().enumerate() {
        c_side.insert(v, pos + 1);
    }

    let order_of = |v: usize| labels.vertices[v].order.ok_or_else(|| Error::MalformedLabels(format!("vertex {v} has no order")));
    let n_new = 3 * nb;
    let mut metas: Vec<VertexMeta> = Vec::with_capacity(n_new);
    for v in 0..n_old {
        let m = &labels.vertices[v];
        metas.push(match m.part {
            Part::A => VertexMeta::ordered(Part::A, k * order_of(v)?),
            Part::C => VertexMeta::ordered(Part::C, k * (order_of(v)? - 1) + 1),
            _ => VertexMeta { order_prime: Some(c_side[&v]), ..VertexMeta::ordered(Part::B, a_side[&v]) },
        });
    }
    metas.extend((1..=nb).filter(|r| r % k != 0).map(|r| VertexMeta::ordered(Part::A, r)));
    metas.extend((1..=nb).filter(|m| (m - 1) % k != 0).map(|m| VertexMeta::ordered(Part::C, m)));
    debug_assert_eq!(metas.len(), n_new);

    let g = Graph::from_fn(n_new, |u, v| {
        let (mu, mv) = (&metas[u], &metas[v]);
        let (ou, ov) = (mu.order.unwrap_or(0), mv.order.unwrap_or(0));
        match (mu.part, mv.part) {
            (x, y) if x == y => true,
            (Part::A, Part::B) => ou < ov,
            (Part::B, Part::A) => ov < ou,
            (Part::B, Part::C) => mu.order_prime.unwrap_or(0) < ov,
            (Part::C, Part::B) => mv.order_prime.unwrap_or(0) < ou,
            _ => false,
        }
    });
    let abc = Construction::assemble(g, ConstructionLabels { family: Family::Abc, vertices: metas });
    Ok(AbcExtension { abc, embedding: (0..n_old).collect() })
}

/// Incidence structure of `H^n_i`: `members[b]` lists the points in box `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointBoxIncidence {
    pub points: usize,
    pub members: Vec<Vec<usize>>,
}

/// `H^n_1` is the star with `n` points in one box; `H^n_i` is `n` disjoint
/// copies of `H^n_{i-1}` plus one new box per point of `H^n_{i-1}`,
/// containing that point's `n` copies. Copy `c` offsets points by
/// `c * p_{i-1}` and boxes by `c * b_{i-1}`; new boxes come last.
pub fn point_box_incidence_structure(n: usize, i: usize) -> Result<PointBoxIncidence> {
    if n == 0 || i == 0 || i > n {
        return Err(Error::InvalidParameter(format!("H^n_i needs n >= 1 and 1 <= i <= n, got n={n}, i={i}")));
    }
    let p = (n as u128).checked_pow(i as u32).unwrap_or(u128::MAX);
    let b = (i as u128).saturating_mul((n as u128).checked_pow(i as u32 - 1).unwrap_or(u128::MAX));
    size_guard("H^n_i", p.saturating_add(b))?;
    let mut cur = PointBoxIncidence { points: n, members: vec![(0..n).collect()] };
    for _ in 2..=i {
        let (pp, bb) = (cur.points, cur.members.len());
        let mut members = Vec::with_capacity(n * bb + pp);
        for c in 0..n {
            members.extend(cur.members.iter().map(|m| m.iter().map(|&v| v + c * pp).collect::<Vec<_>>()));
        }
        members.extend((0..pp).map(|v| (0..n).map(|c| v + c * pp).collect::<Vec<_>>()));
        debug_assert_eq!(members.len(), n * bb + pp);
        cur = PointBoxIncidence { points: n * pp, members };
    }
    Ok(cur)
}

impl PointBoxIncidence {
    /// Bipartite graph: points `0..P`, then boxes `P..P+B`.
    pub fn to_graph(&self) -> Graph {
        let p = self.points;
        let mut edges = Vec::new();
        for (b, m) in self.members.iter().enumerate() {
            edges.extend(m.iter().map(|&v| (v, p + b)));
        }
        Graph::from_edge_list(p + self.members.len(), &edges).expect("incidences are in range")
    }
}

/// `H^n_i` as a labeled graph (points first, then boxes).
pub fn point_box_incidence(n: usize, i: usize) -> Result<Construction> {
    let inc = point_box_incidence_structure(n, i)?;
    let g = inc.to_graph();
    let vertices = (0..inc.points)
        .map(|v| VertexMeta::ordered(Part::P, v))
        .chain((0..inc.members.len()).map(|b| VertexMeta::ordered(Part::Box, b)))
        .collect();
    Ok(Construction::assemble(g, ConstructionLabels { family: Family::Hni, vertices }))
}

/// `Q_n`: vertex `v` is the bitstring of `v`, edges at Hamming distance 1.
pub fn hypercube(n: usize) -> Result<Construction> {
    if !(1..=16).contains(&n) {
        return Err(Error::InvalidParameter(format!("hypercube dimension must be in 1..=16, got {n}")));
    }
    let size = 1usize << n;
    let mut edges = Vec::with_capacity(n * size / 2);
    for v in 0..size {
        for d in 0..n {
            let w = v ^ (1 << d);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let g = Graph::from_edge_list(size, &edges).expect("cube edges are in range");
    let vertices = (0..size)
        .map(|v| VertexMeta { bits: Some(format!("{v:0n$b}")), ..VertexMeta::new(Part::Q) })
        .collect();
    Ok(Construction::assemble(g, ConstructionLabels { family: Family::Hypercube, vertices }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::{check_abc_partition, recover_half_graph_orders};

    #[test]
    fn half_graph_examples() {
        assert_eq!(half_graph(1).unwrap().graph.edge_count(), 0);
        assert_eq!(half_graph(2).unwrap().graph.edges(), vec![(0, 3)]);
        assert_eq!(half_graph(3).unwrap().graph.edge_count(), 3);
        assert!(half_graph(0).is_err());
        let h = half_graph(3).unwrap();
        let r = recover_half_graph_orders(&h.graph, &h.labels.part_set(Part::X), &h.labels.part_set(Part::Y)).unwrap();
        assert_eq!(r.x_order, vec![0, 1, 2]);
        assert_eq!(r.y_order, vec![3, 4, 5]);
    }

    #[test]
    fn abc_examples() {
        let c = abc_graph(1, &[1]).unwrap();
        assert_eq!(c.graph.edge_count(), 0);
        let c = abc_graph(2, &[1, 2]).unwrap();
        // cliques {0,1}, {2,3}, {4,5}; a1-b2; b'1 = b1 - c2
        assert_eq!(c.graph.edges(), vec![(0, 1), (0, 3), (2, 3), (2, 5), (4, 5)]);
        assert!(abc_graph(3, &[1, 1, 2]).is_err());
        assert!(abc_graph(3, &[1, 2]).is_err());
    }

    #[test]
    fn abc_orders_round_trip() {
        let c = abc_graph(4, &[2, 1, 4, 3]).unwrap();
        let (a, b, cc) = c.abc_parts();
        let o = check_abc_partition(&c.graph, &a, &b, &cc).unwrap();
        assert_eq!(o.b, vec![4, 5, 6, 7]);
        assert_eq!(o.b_prime, vec![5, 4, 7, 6]);
        assert_ne!(o.b, o.b_prime);
    }

    #[test]
    fn gk_b11() {
        let first: Vec<(usize, usize)> = gk_b_coordinates(2).into_iter().take(4).map(|c| c.0).collect();
        assert_eq!(first, vec![(2, 1), (1, 3), (4, 2), (3, 4)]);
        let g = g_k(2).unwrap();
        assert_eq!(g.graph.n(), 32);
        assert!(g_k(1).is_err());
    }

    #[test]
    fn gk_coordinates_in_range() {
        for k in 2..=4 {
            let t = k * k * k;
            let cs = gk_b_coordinates(k);
            assert_eq!(cs.len(), k * t);
            for ((bx, by), _, _) in &cs {
                assert!((1..=t).contains(bx) && (1..=t).contains(by));
            }
            // each coordinate value is hit exactly k times per axis
            for v in 1..=t {
                assert_eq!(cs.iter().filter(|c| c.0 .0 == v).count(), k);
                assert_eq!(cs.iter().filter(|c| c.0 .1 == v).count(), k);
            }
        }
    }

    #[test]
    fn labels_round_trip_through_json() {
        for c in [half_graph(3).unwrap(), abc_graph(3, &[3, 1, 2]).unwrap(), g_k(2).unwrap(), point_box_incidence(2, 2).unwrap(), hypercube(3).unwrap()] {
            let back = Graph::from_json(&c.graph.to_json()).unwrap();
            let parsed = Construction::from_graph(back).unwrap();
            assert_eq!(parsed.labels, c.labels);
        }
        let bad = Graph::empty(2).with_labels([(0, "A:1".into()), (1, "Z:3".into())].into()).unwrap();
        assert!(Construction::from_graph(bad).is_err());
    }

    #[test]
    fn extension_k2() {
        let gk = g_k(2).unwrap();
        let ext = extend_gk_to_abc(&gk).unwrap();
        assert_eq!(ext.abc.graph.n(), 48);
        let (a, b, c) = ext.abc.abc_parts();
        check_abc_partition(&ext.abc.graph, &a, &b, &c).unwrap();
        let s = VertexSet::from_ids(48, ext.embedding.iter().copied()).unwrap();
        let back = ext.abc.graph.induced_subgraph(&s).unwrap().graph;
        assert!(back.equal_labeled(&gk.graph));
        assert!(extend_gk_to_abc(&half_graph(2).unwrap()).is_err());
    }

    #[test]
    fn point_box_examples() {
        let h = point_box_incidence(2, 1).unwrap();
        assert_eq!(h.graph.edges(), vec![(0, 2), (1, 2)]);
        let h = point_box_incidence(3, 3).unwrap();
        assert_eq!(h.labels.count(Part::P), 27);
        assert_eq!(h.labels.count(Part::Box), 27);
        let h = point_box_incidence(2, 2).unwrap();
        assert!((0..h.graph.n()).all(|v| h.graph.degree(v) == 2));
        assert!(point_box_incidence(2, 3).is_err());
        assert!(point_box_incidence(0, 1).is_err());
    }

    #[test]
    fn hypercube_examples() {
        let q1 = hypercube(1).unwrap();
        assert_eq!(q1.graph.edges(), vec![(0, 1)]);
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.graph.n(), q3.graph.edge_count()), (8, 12));
        assert_eq!(q3.graph.label(5), Some("Q:101"));
        assert!(hypercube(0).is_err() && hypercube(17).is_err());
    }
}
