//! Structural predicates and recognizers used by the constructions' checkers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub twin_pairs: Vec<(usize, usize)>,
    pub anti_twin_pairs: Vec<(usize, usize)>,
    pub triangle_free: bool,
    /// No two vertices with `p` or more common neighbours.
    pub k2p_free: bool,
    pub threshold: bool,
}

/// Twins, anti-twins, triangle/`K_{2,p}` freeness and the threshold property.
pub fn structure_scan(g: &Graph, p: usize) -> Result<StructureReport> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("K_{{2,p}} needs p >= 2, got {p}")));
    }
    let n = g.n();
    let mut twin_pairs = Vec::new();
    let mut anti_twin_pairs = Vec::new();
    let mut k2p_free = true;
    for u in 0..n {
        for v in u + 1..n {
            let d = g.distinguisher_count(u, v);
            if d == 0 {
                twin_pairs.push((u, v));
            }
            if d == n - 2 {
                anti_twin_pairs.push((u, v));
            }
            if k2p_free && g.common_neighbors(u, v) >= p {
                k2p_free = false;
            }
        }
    }
    Ok(StructureReport {
        twin_pairs,
        anti_twin_pairs,
        triangle_free: is_triangle_free(g),
        k2p_free,
        threshold: is_threshold(g),
    })
}

pub(crate) fn is_triangle_free(g: &Graph) -> bool {
    g.edges().into_iter().all(|(u, v)| g.common_neighbors(u, v) == 0)
}

pub(crate) fn max_common_neighbors(g: &Graph) -> usize {
    let n = g.n();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| g.common_neighbors(u, v)).max().unwrap_or(0)
}

/// Peels isolated or dominating vertices until none remain.
fn is_threshold(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut left = n;
    while left > 0 {
        let Some(v) = (0..n).find(|&v| alive[v] && (deg[v] == 0 || deg[v] == left - 1)) else {
            return false;
        };
        alive[v] = false;
        left -= 1;
        for u in g.neighbors(v) {
            deg[u] -= 1;
        }
    }
    true
}

/// Orders realizing a half graph: `x_order[i] ~ y_order[j]` iff `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfGraphOrders {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

/// Recovers the (unique) orders under which the `X`–`Y` edges form a half graph.
pub fn recover_half_graph_orders(g: &Graph, xs: &VertexSet, ys: &VertexSet) -> Result<HalfGraphOrders> {
    for s in [xs, ys] {
        if s.universe() != g.n() {
            return Err(Error::VertexSetMismatch { expected: s.universe(), actual: g.n() });
        }
    }
    let (m, my) = (xs.len(), ys.len());
    if m != my {
        return Err(Error::InvalidParameter(format!("half graph parts have sizes {m} and {my}")));
    }
    if m == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = xs.iter().find(|&v| ys.contains(v)) {
        return Err(Error::NotHalfGraph { reason: "parts overlap".into(), x: v, y: v });
    }
    let count_into = |v: usize, side: &VertexSet| side.iter().filter(|&w| g.has_edge(v, w)).count();
    let mut x_order: Vec<(usize, usize)> = xs.iter().map(|x| (count_into(x, ys), x)).collect();
    x_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut y_order: Vec<(usize, usize)> = ys.iter().map(|y| (count_into(y, xs), y)).collect();
    y_order.sort();
    let x_order: Vec<usize> = x_order.into_iter().map(|(_, x)| x).collect();
    let y_order: Vec<usize> = y_order.into_iter().map(|(_, y)| y).collect();
    for (i, &x) in x_order.iter().enumerate() {
        for (j, &y) in y_order.iter().enumerate() {
            if g.has_edge(x, y) != (i < j) {
                let reason = if i < j {
                    format!("x at position {i} must see y at position {j}")
                } else {
                    format!("x at position {i} must not see y at position {j}")
                };
                return Err(Error::NotHalfGraph { reason, x, y });
            }
        }
    }
    Ok(HalfGraphOrders { x_order, y_order })
}

/// The four orders of an ABC graph. `b` is the order seen from `A`,
/// `b_prime` the one seen from `C`; they are independent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbcOrders {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub b_prime: Vec<usize>,
    pub c: Vec<usize>,
}

impl AbcOrders {
    pub fn n(&self) -> usize {
        self.a.len()
    }
}

/// Checks that `A`, `B`, `C` witness an ABC graph and returns the recovered orders.
pub fn check_abc_partition(g: &Graph, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> Result<AbcOrders> {
    for s in [a, b, c] {
        if s.universe() != g.n() {
            return Err(Error::VertexSetMismatch { expected: s.universe(), actual: g.n() });
        }
    }
    for v in 0..g.n() {
        let hits = [a, b, c].iter().filter(|s| s.contains(v)).count();
        if hits != 1 {
            return Err(Error::NotAbc {
                reason: format!("vertex {v} lies in {hits} parts, expected exactly one"),
                pair: None,
            });
        }
    }
    let sizes = [a.len(), b.len(), c.len()];
    if sizes[0] != sizes[1] || sizes[1] != sizes[2] || sizes[0] == 0 {
        return Err(Error::NotAbc {
            reason: format!("part sizes {}, {}, {} are not equal and positive", sizes[0], sizes[1], sizes[2]),
            pair: None,
        });
    }
    for (name, part) in [("A", a), ("B", b), ("C", c)] {
        let members = part.to_vec();
        for (i, &u) in members.iter().enumerate() {
            if let Some(&v) = members[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return Err(Error::NotAbc { reason: format!("{name} is not a clique"), pair: Some((u, v)) });
            }
        }
    }
    for u in a.iter() {
        if let Some(v) = c.iter().find(|&v| g.has_edge(u, v)) {
            return Err(Error::NotAbc { reason: "edge between A and C".into(), pair: Some((u, v)) });
        }
    }
    let wrap = |side: &str, e: Error| match e {
        Error::NotHalfGraph { reason, x, y } => {
            Error::NotAbc { reason: format!("{side} edges are not a half graph: {reason}"), pair: Some((x, y)) }
        }
        other => other,
    };
    let ab = recover_half_graph_orders(g, a, b).map_err(|e| wrap("A-B", e))?;
    let bc = recover_half_graph_orders(g, b, c).map_err(|e| wrap("B-C", e))?;
    Ok(AbcOrders { a: ab.x_order, b: ab.y_order, b_prime: bc.x_order, c: bc.y_order })
}

/// The pair `(u, w)` showing `x` is not a function of `S`: `u ~ x`, `w !~ x`,
/// and neither is adjacent to any vertex of `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationPair {
    pub u: usize,
    pub w: usize,
}

/// Lists every violated premise of the refutation argument for arity `k`
/// and `K_{2,p}`-freeness; empty when all hold.
pub fn refutation_premises(g: &Graph, k: usize, p: usize) -> Vec<String> {
    let mut bad = Vec::new();
    if p < 2 {
        bad.push(format!("p = {p} < 2"));
    }
    if !is_triangle_free(g) {
        bad.push("graph contains a triangle".into());
    }
    let common = max_common_neighbors(g);
    if p >= 2 && common >= p {
        bad.push(format!("graph contains K_{{2,{p}}} (two vertices share {common} neighbours)"));
    }
    let n = g.n() as i64;
    let (delta, big_delta) = (g.min_degree(), g.max_degree());
    if delta < k * p + 1 {
        bad.push(format!("min degree {delta} < kp+1 = {}", k * p + 1));
    }
    let (k, d) = (k as i64, big_delta as i64);
    if d * (k + 1) > n - k - 2 {
        bad.push(format!("max degree {d} > (n-k-2)/(k+1) = {}/{}", n - k - 2, k + 1));
    }
    bad
}

/// Finds the pair that refutes `x` being a function of `S`, after checking
/// every premise that guarantees such a pair exists.
pub fn refute_function(g: &Graph, x: usize, s: &VertexSet, k: usize, p: usize) -> Result<RefutationPair> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if s.universe() != g.n() {
        return Err(Error::VertexSetMismatch { expected: s.universe(), actual: g.n() });
    }
    let mut bad = Vec::new();
    if s.len() != k {
        bad.push(format!("|S| = {} != k = {k}", s.len()));
    }
    if s.contains(x) {
        bad.push(format!("x = {x} lies in S"));
    }
    bad.extend(refutation_premises(g, k, p));
    if !bad.is_empty() {
        return Err(Error::PremisesViolated(bad));
    }
    let members = s.to_vec();
    let touches_s = |v: usize| s.contains(v) || members.iter().any(|&m| g.has_edge(m, v));
    let u = g.neighbors(x).find(|&v| !touches_s(v));
    let w = (0..g.n()).find(|&v| v != x && !g.has_edge(x, v) && !touches_s(v));
    match (u, w) {
        (Some(u), Some(w)) => Ok(RefutationPair { u, w }),
        _ => Err(Error::Internal(format!("premises hold but no refutation pair exists for x = {x}"))),
    }
}
