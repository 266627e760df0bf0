mod common;

use std::collections::BTreeSet;

use ramsey_stars::bounds::{bounds_double_star, bounds_star, bounds_substar};
use ramsey_stars::construct::*;
use ramsey_stars::detect::{brute_force_find, find_mono};
use ramsey_stars::search::ListAssignment;
use ramsey_stars::{ColoredCompleteGraph, Pattern};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Two-set Hall condition on every edge, written from the definition.
fn has_mono_double_star(g: &ColoredCompleteGraph, n: usize, m: usize) -> bool {
    let order = g.order();
    (0..order).any(|u| {
        (0..order).filter(|&v| v != u).any(|v| {
            let c = g.color(u, v);
            let nu: BTreeSet<usize> = (0..order)
                .filter(|&x| x != u && x != v && g.color(u, x) == c)
                .collect();
            let nv: BTreeSet<usize> = (0..order)
                .filter(|&x| x != u && x != v && g.color(v, x) == c)
                .collect();
            nu.len() >= n && nv.len() >= m && nu.union(&nv).count() >= n + m
        })
    })
}

fn max_color_degree(g: &ColoredCompleteGraph) -> usize {
    (0..g.order())
        .flat_map(|v| (1..=g.colors()).map(move |c| (v, c)))
        .map(|(v, c)| g.color_degree(v, c))
        .max()
        .unwrap_or(0)
}

fn check(w: &WitnessCertificate, expected_order: usize) {
    assert!(w.verified);
    assert_eq!(w.graph.order(), expected_order, "{}", w.construction_id);
    assert_eq!(w.claimed_bound, expected_order + 1);
    assert!(w.scheme.covers(expected_order));
    assert!(find_mono(&w.graph, w.pattern).is_none());
    if let Pattern::DoubleStar { n, m } = w.pattern {
        assert!(
            !has_mono_double_star(&w.graph, n, m),
            "{} {}",
            w.construction_id,
            w.pattern
        );
    }
    if expected_order <= 12 {
        assert!(brute_force_find(&w.graph, w.pattern).unwrap().is_none());
    }
}

#[test]
fn odd_k_double_star_witnesses() {
    for k in [1, 3, 5, 7] {
        for n in 1..=5 {
            for m in 1..=n {
                let w = witness_double_star_odd_k(n, m, k).unwrap();
                check(&w, k * n + m + 1);
                assert!(bounds_double_star(n, m, k).lower() >= w.claimed_bound);
            }
        }
    }
}

#[test]
fn even_k_double_star_witnesses() {
    for k in [2, 4, 6] {
        for n in 1..=5 {
            for m in 1..=n {
                let w = witness_double_star_even_k(n, m, k).unwrap();
                check(&w, (k - 1) * n + 2 * m + 1);
                assert_eq!(w.scheme.b.len(), m);
                assert!(bounds_double_star(n, m, k).lower() >= w.claimed_bound);
            }
        }
    }
}

#[test]
fn divisible_double_star_witnesses() {
    for (n, m, k) in [
        (2, 2, 6),
        (1, 1, 4),
        (2, 1, 5),
        (3, 1, 6),
        (4, 1, 7),
        (2, 2, 11),
        (4, 3, 9),
        (3, 3, 8),
    ] {
        let w = witness_double_star_divisible(n, m, k, 1).unwrap();
        check(&w, k * n + m + 1);
        let b = bounds_double_star(n, m, k);
        assert!(b.lower() >= w.claimed_bound, "({n},{m},{k})");
    }
}

#[test]
fn divisible_witness_delegates_when_order_is_odd() {
    // even k: the multipartite coloring itself; n and k odd: the odd-k coloring
    let w = witness_double_star_divisible(1, 1, 4, 0).unwrap();
    assert_eq!(w.construction_id, ConstructionId::DoubleStarDivisible);
    let w = witness_double_star_divisible(3, 1, 11, 0).unwrap();
    assert_eq!(w.construction_id, ConstructionId::DoubleStarOddK);
    check(&w, 11 * 3 + 1 + 1);
}

#[test]
fn half_divisible_double_star_witnesses() {
    for (n, m, k) in [
        (4, 1, 4),
        (2, 1, 3),
        (2, 1, 5),
        (4, 3, 5),
        (6, 1, 5),
        (4, 1, 7),
    ] {
        let w = witness_double_star_half_divisible(n, m, k, 3).unwrap();
        check(&w, k * n + m + 1);
        assert!(bounds_double_star(n, m, k).lower() >= w.claimed_bound);
    }
}

#[test]
fn star_witnesses_at_every_feasible_order() {
    for k in 1..=4 {
        for n in 1..=6 {
            let top = max_star_witness_order(n, k);
            for order in 1..=top {
                let w = witness_star(n, k, order).unwrap();
                check(&w, order);
                assert!(max_color_degree(&w.graph) < n || order == 1);
            }
            assert!(witness_star(n, k, top + 1).is_err());
            assert_eq!(bounds_star(n, k).lower(), top + 1, "n={n} k={k}");
        }
    }
}

#[test]
fn star_relaxation_witnesses() {
    for k in 1..=4 {
        for n in 1..=4 {
            for m in 1..=n {
                let w = witness_star_relaxation(Pattern::DoubleStar { n, m }, k).unwrap();
                assert!(bounds_double_star(n, m, k).lower() >= w.claimed_bound);
                assert!(find_mono(&w.graph, Pattern::Star { n: n + 1 }).is_none());
            }
        }
    }
}

#[test]
fn substar_star_relaxation() {
    for k in 1..=4 {
        for n in 2..=5 {
            let w = witness_star_relaxation(Pattern::SubdividedStar { n, m: 1 }, k).unwrap();
            assert!(bounds_substar(n, 1, k).lower() >= w.claimed_bound);
        }
    }
}

#[test]
fn larger_odd_k_witness() {
    let w = witness_double_star_odd_k(6, 3, 5).unwrap();
    check(&w, 34);
}

#[test]
fn substar_witnesses() {
    for k in [1, 3, 5] {
        for n in 2..=5 {
            for m in 1..=n {
                let w = witness_substar(n, m, k).unwrap();
                check(&w, k * (n - 1) + m + 1);
                assert!(bounds_substar(n, m, k).lower() >= w.claimed_bound);
            }
        }
    }
    for n in 2..=6 {
        for m in 1..n {
            let w = witness_substar_2color(n, m).unwrap();
            check(&w, n + 2 * m);
            assert!(bounds_substar(n, m, 2).lower() >= w.claimed_bound);
        }
    }
}

#[test]
fn two_clique_coloring_fails_when_m_equals_n() {
    // the blue bipartite part holds S_n^n centered in the large clique
    for n in 2..=4 {
        let g =
            ColoredCompleteGraph::from_fn(
                3 * n,
                2,
                |x, y| if (x < 2 * n) == (y < 2 * n) { 1 } else { 2 },
            )
            .unwrap();
        assert!(find_mono(&g, Pattern::SubdividedStar { n, m: n }).is_some());
    }
}

#[test]
fn list_p4_witnesses_for_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (p, universe, rounds) in [(3, 5, 100), (3, 4, 50), (5, 7, 10)] {
        for _ in 0..rounds {
            let lists = ListAssignment::random(p + 2, p, universe, &mut rng);
            let w = witness_list_p4(p, &lists).unwrap();
            assert!(w.verified && lists.respects(&w.graph));
            assert!(!has_mono_double_star(&w.graph, 1, 1));
        }
    }
}

#[test]
fn construction_ids_round_trip() {
    for id in ConstructionId::ALL {
        assert_eq!(id.as_str().parse::<ConstructionId>().unwrap(), id);
    }
    assert!("nope".parse::<ConstructionId>().is_err());
}
