//! Exact functionality and symmetric difference, at vertex and graph level.

mod hitting_set;
pub(crate) mod structure;
mod witness;

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

pub use structure::{
    check_abc_partition, refutation_premises, recover_half_graph_orders, refute_function, structure_scan, AbcOrders,
    HalfGraphOrders, RefutationPair, StructureReport,
};
pub use witness::{profile, Witness, WitnessOrigin, WitnessViolation, MAX_WITNESS_ARITY};

use crate::error::{Error, Result};
use crate::graph::{mask_bits, Graph, VertexSet, WORD};
use crate::par::Exec;

/// Environment variable overriding both exact-search guards.
pub const MAX_N_ENV: &str = "FUNBOX_MAX_N";

/// Size guards for the graph-level exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    pub fun_max_n: usize,
    pub sd_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { fun_max_n: 12, sd_max_n: 14 }
    }
}

impl Limits {
    /// Defaults, with both guards replaced by `FUNBOX_MAX_N` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(v) => {
                let n: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("{MAX_N_ENV}={v:?} is not a count")))?;
                Ok(Self { fun_max_n: n, sd_max_n: n })
            }
            Err(_) => Ok(Self::default()),
        }
    }
}

/// Vertex count the bit-mask kernels can handle.
pub const MASK_MAX_N: usize = WORD;

fn mask_guard(g: &Graph, what: &'static str, limit: usize) -> Result<Vec<u64>> {
    let limit = limit.min(MASK_MAX_N);
    if g.n() > limit {
        return Err(Error::SizeLimit { what, n: g.n(), limit });
    }
    Ok(g.masks().expect("n checked against the word size"))
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n == WORD { u64::MAX } else { (1u64 << n) - 1 }
}

/// Number of vertices other than `x`, `y` adjacent to exactly one of them.
pub fn sd_pair(g: &Graph, x: usize, y: usize) -> Result<usize> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(g.distinguisher_count(x, y))
}

/// Minimum pairwise symmetric difference inside the subset `s`, stopping at `floor`.
fn min_pair_sd(masks: &[u64], s: u64, floor: usize) -> usize {
    let mut best = usize::MAX;
    let mut rest = s;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        for y in mask_bits(rest) {
            let d = ((masks[x] ^ masks[y]) & s & !(1u64 << x | 1u64 << y)).count_ones() as usize;
            if d < best {
                best = d;
                if best <= floor {
                    return best;
                }
            }
        }
    }
    best
}

/// Symmetric difference of the graph: max over induced subgraphs with at
/// least two vertices of the minimum pairwise `sd_pair`; 0 below two vertices.
pub fn sd_graph(g: &Graph, limits: Limits) -> Result<usize> {
    sd_graph_with(g, limits, Exec::default())
}

pub fn sd_graph_with(g: &Graph, limits: Limits, exec: Exec) -> Result<usize> {
    let masks = mask_guard(g, "sd_graph", limits.sd_max_n)?;
    let n = g.n();
    if n < 2 {
        return Ok(0);
    }
    let best = AtomicUsize::new(0);
    let total = 1u64 << n;
    let parts = exec.map_chunks(total, 256, |range| {
        let mut local = 0;
        for s in range {
            if s.count_ones() < 2 {
                continue;
            }
            let floor = best.load(Ordering::Relaxed);
            let v = min_pair_sd(&masks, s, floor);
            if v > floor {
                local = local.max(v);
                best.fetch_max(v, Ordering::Relaxed);
            }
        }
        local
    });
    Ok(parts.into_iter().max().unwrap_or(0))
}

/// Result of [`is_function_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctionCheck {
    pub is_function: bool,
    /// Two vertices with equal adjacency to the set but different adjacency to the target.
    pub counterexample: Option<(usize, usize)>,
}

/// Whether `y` is a function of the vertices in `s`.
pub fn is_function_of(g: &Graph, y: usize, s: &VertexSet) -> Result<FunctionCheck> {
    check_vertex(g, y)?;
    if s.universe() != g.n() {
        return Err(Error::VertexSetMismatch { expected: s.universe(), actual: g.n() });
    }
    if s.contains(y) {
        return Err(Error::TargetInSet(y));
    }
    let members = s.to_vec();
    let mut classes: HashMap<Vec<u64>, (usize, bool)> = HashMap::new();
    for z in (0..g.n()).filter(|&z| z != y && !s.contains(z)) {
        let mut key = vec![0u64; members.len().div_ceil(WORD)];
        for (i, &m) in members.iter().enumerate() {
            if g.has_edge(m, z) {
                key[i / WORD] |= 1 << (i % WORD);
            }
        }
        let adj = g.has_edge(y, z);
        match classes.get(&key) {
            Some(&(rep, rep_adj)) if rep_adj != adj => {
                return Ok(FunctionCheck { is_function: false, counterexample: Some((rep, z)) });
            }
            Some(_) => {}
            None => {
                classes.insert(key, (z, adj));
            }
        }
    }
    Ok(FunctionCheck { is_function: true, counterexample: None })
}

/// Exact functionality of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunctionality {
    pub k: usize,
    pub witness: Witness,
}

/// Minimum `k` such that `y` is a function of `k` other vertices, with the
/// lexicographically least optimal argument set as witness.
///
/// Solved as a minimum hitting set over conflict-pair requirement sets;
/// limited to graphs with at most 64 vertices.
pub fn fun_vertex(g: &Graph, y: usize) -> Result<VertexFunctionality> {
    check_vertex(g, y)?;
    let masks = mask_guard(g, "fun_vertex", MASK_MAX_N)?;
    let sets = hitting_set::conflict_sets(&masks, full_mask(g.n()), y);
    let chosen = hitting_set::min_hitting_set(&sets);
    let args: Vec<usize> = mask_bits(chosen).collect();
    let witness = Witness::from_observations(g, y, args, WitnessOrigin::Exhaustive)?.checked(g)?;
    Ok(VertexFunctionality { k: witness.arity(), witness })
}

/// Functionality of `y` inside the subgraph induced by `within`.
fn fun_in(masks: &[u64], within: u64, y: usize) -> usize {
    hitting_set::min_size(&hitting_set::conflict_sets(masks, within, y))
}

/// Whether `y` has functionality at most `budget` inside `within`.
fn fun_at_most(masks: &[u64], within: u64, y: usize, budget: usize) -> bool {
    let sets = hitting_set::conflict_sets(masks, within, y);
    hitting_set::can_hit(&sets, within & !(1u64 << y), budget)
}

/// Functionality of the graph: max over nonempty induced subgraphs of the
/// minimum vertex functionality. The one-vertex graph has functionality 0.
pub fn fun_graph(g: &Graph, limits: Limits) -> Result<usize> {
    fun_graph_with(g, limits, Exec::default())
}

pub fn fun_graph_with(g: &Graph, limits: Limits, exec: Exec) -> Result<usize> {
    let masks = mask_guard(g, "fun_graph", limits.fun_max_n)?;
    let n = g.n();
    if n < 2 {
        return Ok(0);
    }
    let best = AtomicUsize::new(0);
    let parts = exec.map_chunks(1u64 << n, 256, |range| {
        let mut local = 0;
        for s in range {
            // at most two vertices: a vertex of functionality 0 always exists
            if s.count_ones() < 3 {
                continue;
            }
            let floor = best.load(Ordering::Relaxed);
            if mask_bits(s).any(|y| fun_at_most(&masks, s, y, floor)) {
                continue;
            }
            let v = mask_bits(s).map(|y| fun_in(&masks, s, y)).min().expect("nonempty subset");
            local = local.max(v);
            best.fetch_max(v, Ordering::Relaxed);
        }
        local
    });
    Ok(parts.into_iter().max().unwrap_or(0))
}

/// Which footnote construction [`pair_witness`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// `x` is a function of `y` and the vertices distinguishing `x`, `y` (identity on `y`).
    Distinguishers,
    /// `x` is a function of `y` and the vertices not distinguishing them (negation of `y`).
    Nondistinguishers,
}

/// Witness that `x` is a function of `[y] ++ Z` for the chosen pair mode.
pub fn pair_witness(g: &Graph, x: usize, y: usize, mode: PairMode) -> Result<Witness> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    let want_distinguishing = mode == PairMode::Distinguishers;
    let mut args = vec![y];
    args.extend(
        (0..g.n())
            .filter(|&z| z != x && z != y)
            .filter(|&z| (g.has_edge(z, x) != g.has_edge(z, y)) == want_distinguishing),
    );
    let (origin, negate) = match mode {
        PairMode::Distinguishers => (WitnessOrigin::PairDistinguishers, false),
        PairMode::Nondistinguishers => (WitnessOrigin::PairNondistinguishers, true),
    };
    Witness::from_rule(x, args, origin, |m| (m & 1 == 1) != negate)?.checked(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    fn cube(d: usize) -> Graph {
        Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1)
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    #[test]
    fn sd_pair_examples() {
        assert_eq!(sd_pair(&Graph::complete(5), 0, 1).unwrap(), 0);
        assert_eq!(sd_pair(&path(4), 0, 1).unwrap(), 1);
        assert_eq!(sd_pair(&path(4), 1, 2).unwrap(), 2);
        assert_eq!(sd_pair(&path(4), 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn sd_graph_examples() {
        let l = Limits::default();
        assert_eq!(sd_graph(&Graph::empty(1), l).unwrap(), 0);
        assert_eq!(sd_graph(&Graph::complete(4), l).unwrap(), 0);
        assert_eq!(sd_graph(&cycle(5), l).unwrap(), 2);
        assert!(matches!(sd_graph(&Graph::empty(15), l), Err(Error::SizeLimit { limit: 14, .. })));
    }

    #[test]
    fn is_function_of_examples() {
        let c5 = cycle(5);
        let r = is_function_of(&c5, 0, &VertexSet::from_ids(5, [1, 4]).unwrap()).unwrap();
        assert!(r.is_function);
        let r = is_function_of(&c5, 0, &VertexSet::from_ids(5, [2]).unwrap()).unwrap();
        assert!(!r.is_function);
        assert_eq!(r.counterexample, Some((1, 3)));
        // twins 0 and 2 of C4
        let c4 = cycle(4);
        assert!(is_function_of(&c4, 2, &VertexSet::from_ids(4, [0]).unwrap()).unwrap().is_function);
        assert_eq!(
            is_function_of(&c4, 2, &VertexSet::from_ids(4, [2]).unwrap()),
            Err(Error::TargetInSet(2))
        );
    }

    #[test]
    fn fun_vertex_examples() {
        assert_eq!(fun_vertex(&star(3), 0).unwrap().k, 0);
        assert_eq!(fun_vertex(&Graph::empty(3), 1).unwrap().k, 0);
        for v in 0..5 {
            assert_eq!(fun_vertex(&cycle(5), v).unwrap().k, 2);
        }
        let q3 = cube(3);
        for v in 0..8 {
            let r = fun_vertex(&q3, v).unwrap();
            assert_eq!(r.k, 1);
            assert_eq!(r.witness.args, vec![v ^ 7]);
            assert_eq!(r.witness.table, vec![true, false]);
        }
    }

    #[test]
    fn fun_graph_examples() {
        let l = Limits::default();
        assert_eq!(fun_graph(&star(3), l).unwrap(), 0);
        assert_eq!(fun_graph(&path(4), l).unwrap(), 1);
        assert_eq!(fun_graph(&cycle(5), l).unwrap(), 2);
        assert_eq!(fun_graph(&Graph::empty(1), l).unwrap(), 0);
        assert!(fun_graph(&Graph::empty(13), l).is_err());
    }

    #[test]
    fn pair_witness_examples() {
        let c4 = cycle(4);
        let w = pair_witness(&c4, 0, 2, PairMode::Distinguishers).unwrap();
        assert_eq!(w.args, vec![2]);
        assert_eq!(w.table, vec![false, true]);

        let w = pair_witness(&cube(3), 0, 7, PairMode::Nondistinguishers).unwrap();
        assert_eq!(w.args, vec![7]);
        assert_eq!(w.table, vec![true, false]);

        let w = pair_witness(&path(4), 0, 1, PairMode::Distinguishers).unwrap();
        assert_eq!(w.args, vec![1, 2]);
        assert_eq!(w.table, vec![false, true, false, true]);
        assert!(w.validate(&path(4)).is_ok());
        assert_eq!(pair_witness(&path(4), 1, 1, PairMode::Distinguishers), Err(Error::SameVertex(1)));
    }

    #[test]
    fn exec_modes_agree() {
        let g = Graph::from_fn(11, |u, v| (u * 7 + v * 3) % 5 < 2);
        let l = Limits::default();
        assert_eq!(
            fun_graph_with(&g, l, Exec::Sequential).unwrap(),
            fun_graph_with(&g, l, Exec::Parallel).unwrap()
        );
        assert_eq!(sd_graph_with(&g, l, Exec::Sequential).unwrap(), sd_graph_with(&g, l, Exec::Parallel).unwrap());
    }
}
