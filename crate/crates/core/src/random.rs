//! Seeded generators. Every draw comes from a splitmix64 stream whose state
//! is the seed itself; a value below `m` is `next_u64() % m`.
//!
//! Campaign instance `t` of a run seeded with `s` uses the seed
//! [`instance_seed`]`(s, t)`, the `t`-th output of the stream seeded with `s`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::constructions::check_permutation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalRep;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 stream starting at state `seed`.
pub fn stream(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Output number `index` (0-based) of the stream seeded with `seed`.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    stream(seed.wrapping_add(index.wrapping_mul(GOLDEN))).next_u64()
}

fn below(rng: &mut SplitMix64, m: u64) -> u64 {
    rng.next_u64() % m
}

/// `n` closed intervals, each from two endpoints drawn in `0..coord_range`.
pub fn random_interval_rep(n: usize, seed: u64, coord_range: u64) -> Result<IntervalRep> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one interval".into()));
    }
    if coord_range < 2 {
        return Err(Error::InvalidParameter(format!("coord_range must be at least 2, got {coord_range}")));
    }
    if coord_range > i64::MAX as u64 {
        return Err(Error::InvalidParameter(format!("coord_range {coord_range} does not fit in i64")));
    }
    let mut rng = stream(seed);
    let intervals = (0..n)
        .map(|_| {
            let a = below(&mut rng, coord_range) as i64;
            let b = below(&mut rng, coord_range) as i64;
            (a.min(b), a.max(b))
        })
        .collect();
    IntervalRep::new(intervals)
}

/// Each pair `u < v`, in lexicographic order, is an edge iff the next draw
/// modulo `den` is below `num`.
pub fn random_graph(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    if den == 0 || num > den {
        return Err(Error::InvalidParameter(format!("edge probability {num}/{den} is not in [0, 1]")));
    }
    let mut rng = stream(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if below(&mut rng, den) < num {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Uniform permutation of `1..=n` (Fisher-Yates, last position first).
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = stream(seed);
    let mut perm: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = below(&mut rng, i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    debug_assert!(check_permutation(&perm).is_ok());
    perm
}

/// Threshold graph: vertices join one at a time, each isolated or dominating
/// by a coin flip, then ids are shuffled.
pub fn random_threshold_graph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    let mut rng = stream(seed);
    let dominating: Vec<bool> = (0..n).map(|_| below(&mut rng, 2) == 1).collect();
    let relabel = random_permutation(n, rng.next_u64());
    let mut edges = Vec::new();
    for v in 0..n {
        if dominating[v] {
            edges.extend((0..v).map(|u| (relabel[u] - 1, relabel[v] - 1)));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// `k` distinct vertices of `0..n`, none equal to `avoid`.
pub fn random_subset_avoiding(rng: &mut SplitMix64, n: usize, k: usize, avoid: usize) -> Result<Vec<usize>> {
    if k + 1 > n {
        return Err(Error::InvalidParameter(format!("cannot pick {k} vertices besides one of {n}")));
    }
    let mut out: Vec<usize> = Vec::with_capacity(k);
    while out.len() < k {
        let v = below(rng, n as u64) as usize;
        if v != avoid && !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Uniform index below `n`.
pub fn random_index(rng: &mut SplitMix64, n: usize) -> usize {
    below(rng, n as u64) as usize
}
