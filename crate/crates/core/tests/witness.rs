use funbox_core::interval::{check_sd_lemma, find_low_fun_witness, graph_from_points, normalize, PointRep};
use funbox_core::parameters::{profile, Witness, WitnessOrigin};
use funbox_core::random::{random_interval_rep, random_permutation};
use funbox_core::Graph;

/// Independent replay of a witness table.
fn replay(g: &Graph, w: &Witness) -> bool {
    (0..g.n())
        .filter(|&z| z != w.target && !w.args.contains(&z))
        .all(|z| w.table[profile(g, &w.args, z)] == g.neighbors(w.target).any(|u| u == z))
}

/// Grid points with every left endpoint before every right endpoint, arranged
/// so that no 5x5 block holds two points: column stripe `a` sends its five
/// points to rows `groups` apart, hence (for `groups >= 5`) to five row stripes.
fn spread_rep(groups: usize, seed: u64) -> PointRep {
    let n = 5 * groups;
    let mut points = Vec::with_capacity(n);
    for a in 0..groups {
        let pi = random_permutation(5, seed.wrapping_add(a as u64));
        for b in 0..5 {
            let row = n + groups * (pi[b] - 1) + a + 1;
            points.push((5 * a + b + 1, row));
        }
    }
    PointRep::new(points).unwrap()
}

#[test]
fn spread_models_reach_the_second_case() {
    for groups in 5..=9 {
        for seed in 0..5 {
            let rep = spread_rep(groups, seed);
            let g = graph_from_points(&rep);
            let w = find_low_fun_witness(&rep).unwrap();
            assert_eq!(w.origin, WitnessOrigin::StripeCase2, "groups {groups}, seed {seed}");
            assert!(w.arity() <= 8);
            assert!(replay(&g, &w));
        }
    }
}

/// Random pairing of the ranks `1..=2n`, kept only if no 5x5 block holds two points.
fn sparse_random_rep(n: usize, seed: u64) -> Option<PointRep> {
    let ranks = random_permutation(2 * n, seed);
    let points: Vec<(usize, usize)> =
        ranks.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
    let mut blocks = std::collections::BTreeSet::new();
    points.iter().all(|&(i, j)| blocks.insert(((j - 1) / 5, (i - 1) / 5))).then(|| PointRep::new(points).unwrap())
}

#[test]
fn sparse_random_models_use_the_second_case() {
    let mut hits = 0;
    let mut incomplete = 0;
    for seed in 0..20_000u64 {
        let n = 9 + seed as usize % 4;
        let Some(rep) = sparse_random_rep(n, seed) else { continue };
        let g = graph_from_points(&rep);
        let w = find_low_fun_witness(&rep).unwrap();
        assert_eq!(w.origin, WitnessOrigin::StripeCase2);
        assert!(w.arity() <= 8);
        assert!(replay(&g, &w));
        hits += 1;
        incomplete += usize::from(g.edge_count() < n * (n - 1) / 2);
    }
    assert!(hits >= 100 && incomplete >= 100, "{hits} sparse models, {incomplete} incomplete");
}

#[test]
fn random_models_get_small_witnesses() {
    let mut seen = std::collections::BTreeSet::new();
    for seed in 0..300u64 {
        let n = 1 + (seed as usize * 13) % 60;
        let rep = normalize(&random_interval_rep(n, seed, 10 * n as u64 + 2).unwrap());
        let g = graph_from_points(&rep);
        let w = find_low_fun_witness(&rep).unwrap();
        let bound = if n <= 8 { 7 } else { 8 };
        assert!(w.arity() <= bound, "n = {n}: arity {}", w.arity());
        assert!(replay(&g, &w));
        seen.insert(w.origin);
        assert!(check_sd_lemma(&rep).violation.is_none());
    }
    assert!(seen.contains(&WitnessOrigin::SmallN) && seen.contains(&WitnessOrigin::StripeCase1));
}

#[test]
fn sd_lemma_bound_is_tight_somewhere() {
    // two disjoint intervals next to each other in rank order: manhattan 2, sd 0
    let rep = PointRep::new(vec![(1, 2), (3, 4)]).unwrap();
    let r = check_sd_lemma(&rep);
    assert_eq!(r.pairs_checked, 1);
    assert!(r.violation.is_none());
    assert_eq!(rep.manhattan(0, 1), 4);
}
