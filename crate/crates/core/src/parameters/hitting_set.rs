//! Minimum hitting set over a family of vertex masks (`n <= 64`).
//!
//! Vertex `y` is a function of `S` iff `S` meets the requirement set of
//! every conflict pair `(z, z')` with `adj(y,z) != adj(y,z')`: either `S`
//! contains `z` or `z'`, or some member of `S` tells them apart. So the
//! functionality of `y` is the minimum hitting set of those requirement sets.

use crate::graph::mask_bits;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Requirement sets for target `y` inside the vertex subset `within`.
///
/// Returns a subset-minimal family (supersets dropped), sorted.
pub(crate) fn conflict_sets(masks: &[u64], within: u64, y: usize) -> Vec<u64> {
    let others = within & !bit(y);
    let nbrs = masks[y] & others;
    let non = others & !masks[y];
    let mut sets = Vec::with_capacity((nbrs.count_ones() * non.count_ones()) as usize);
    for z in mask_bits(nbrs) {
        for w in mask_bits(non) {
            sets.push((bit(z) | bit(w) | (masks[z] ^ masks[w])) & others);
        }
    }
    minimalize(sets)
}

/// Drops duplicates and strict supersets.
pub(crate) fn minimalize(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Number of pairwise disjoint sets found greedily (smallest first): a lower bound.
fn packing_bound(sets: &[u64], allowed: u64) -> usize {
    let mut order: Vec<u64> = sets.iter().map(|s| s & allowed).collect();
    order.sort_unstable_by_key(|s| s.count_ones());
    let mut used = 0u64;
    let mut count = 0;
    for s in order {
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

/// Size of a greedy cover: an upper bound on the optimum.
fn greedy_cover(sets: &[u64]) -> usize {
    let mut open: Vec<u64> = sets.to_vec();
    let mut size = 0;
    while !open.is_empty() {
        let universe = open.iter().fold(0, |a, s| a | s);
        let best = mask_bits(universe)
            .max_by_key(|&e| (open.iter().filter(|&&s| s & bit(e) != 0).count(), std::cmp::Reverse(e)))
            .expect("open sets are non-empty");
        open.retain(|&s| s & bit(best) == 0);
        size += 1;
    }
    size
}

/// Whether some subset of `allowed` with at most `budget` elements meets every set.
pub(crate) fn can_hit(sets: &[u64], allowed: u64, budget: usize) -> bool {
    if sets.is_empty() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let mut pick = sets[0] & allowed;
    for &s in sets {
        let r = s & allowed;
        if r == 0 {
            return false;
        }
        if r.count_ones() < pick.count_ones() {
            pick = r;
        }
    }
    if packing_bound(sets, allowed) > budget {
        return false;
    }
    // branch on the elements of the tightest set, most frequent first
    let mut elems: Vec<(usize, usize)> = mask_bits(pick)
        .map(|e| (sets.iter().filter(|&&s| s & bit(e) != 0).count(), e))
        .collect();
    elems.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut allowed = allowed;
    for (_, e) in elems {
        let rest: Vec<u64> = sets.iter().copied().filter(|&s| s & bit(e) == 0).collect();
        if can_hit(&rest, allowed, budget - 1) {
            return true;
        }
        // any solution through e was just explored
        allowed &= !bit(e);
    }
    false
}

/// Size of a minimum hitting set.
pub(crate) fn min_size(sets: &[u64]) -> usize {
    if sets.is_empty() {
        return 0;
    }
    let universe = sets.iter().fold(0, |a, s| a | s);
    let lower = packing_bound(sets, universe);
    let upper = greedy_cover(sets);
    (lower..upper).find(|&k| can_hit(sets, universe, k)).unwrap_or(upper)
}

/// Lexicographically least (by sorted element list) minimum hitting set.
pub(crate) fn min_hitting_set(sets: &[u64]) -> u64 {
    let k = min_size(sets);
    let universe = sets.iter().fold(0, |a, s| a | s);
    let mut chosen = 0u64;
    let mut open: Vec<u64> = sets.to_vec();
    let mut floor = 0usize;
    for slot in 0..k {
        let remaining = k - slot - 1;
        let pick = mask_bits(universe)
            .filter(|&e| e >= floor)
            .find(|&e| {
                let rest: Vec<u64> = open.iter().copied().filter(|&s| s & bit(e) == 0).collect();
                let above = universe & !((bit(e) << 1).wrapping_sub(1));
                can_hit(&rest, above, remaining)
            })
            .expect("a minimum hitting set exists");
        chosen |= bit(pick);
        open.retain(|&s| s & bit(pick) == 0);
        floor = pick + 1;
    }
    debug_assert!(open.is_empty());
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min(sets: &[u64], n: usize) -> (usize, u64) {
        let mut best: Option<(usize, Vec<usize>, u64)> = None;
        for m in 0u64..1 << n {
            if sets.iter().all(|&s| s & m != 0) {
                let size = m.count_ones() as usize;
                let elems: Vec<usize> = mask_bits(m).collect();
                let better = match &best {
                    None => true,
                    Some((bs, be, _)) => size < *bs || (size == *bs && elems < *be),
                };
                if better {
                    best = Some((size, elems, m));
                }
            }
        }
        let (s, _, m) = best.unwrap();
        (s, m)
    }

    #[test]
    fn matches_brute_force() {
        let mut state = 0x1234_5678_u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let n = 1 + (next() % 10) as usize;
            let count = (next() % 12) as usize;
            let sets: Vec<u64> = (0..count)
                .map(|_| {
                    let s = next() & ((1 << n) - 1);
                    if s == 0 { 1 } else { s }
                })
                .collect();
            let (size, lex) = brute_min(&sets, n);
            assert_eq!(min_size(&sets), size, "{sets:?}");
            assert_eq!(min_hitting_set(&sets), lex, "{sets:?}");
        }
    }

    #[test]
    fn minimalize_drops_supersets() {
        assert_eq!(minimalize(vec![0b111, 0b011, 0b011, 0b100, 0b110]), vec![0b011, 0b100]);
    }

    #[test]
    fn empty_family() {
        assert_eq!(min_size(&[]), 0);
        assert_eq!(min_hitting_set(&[]), 0);
    }
}
