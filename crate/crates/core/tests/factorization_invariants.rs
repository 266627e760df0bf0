mod common;

use std::collections::BTreeSet;

use ramsey_stars::factorize::{
    decompose_into_n_factors, extract_perfect_matchings, max_matching_min_cover,
    one_factorization_even, proper_edge_coloring_complete, two_factorization, FactorError, Graph,
    DEFAULT_RETRY_BUDGET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{is_factorization, random_bipartite, random_regular};

#[test]
fn round_robin_one_factorizations() {
    for q in (2..=20).step_by(2) {
        let f = one_factorization_even(q);
        assert_eq!(f.factors.len(), q - 1);
        assert!(
            is_factorization(&Graph::complete(q), &f.factors, 1),
            "K_{q}"
        );
    }
}

#[test]
fn proper_colorings_of_complete_graphs() {
    for q in 2..=15 {
        let c = proper_edge_coloring_complete(q);
        let chi = if q % 2 == 0 { q - 1 } else { q };
        assert_eq!(c.colors(), chi, "chromatic index of K_{q}");
        let mut used = BTreeSet::new();
        for v in 0..q {
            let at_v: Vec<_> = (0..q).filter(|&u| u != v).map(|u| c.color(u, v)).collect();
            let distinct: BTreeSet<_> = at_v.iter().copied().collect();
            assert_eq!(
                distinct.len(),
                q - 1,
                "K_{q}: vertex {v} sees a repeated color"
            );
            assert!(at_v.iter().all(|&x| x >= 1 && x as usize <= chi));
            used.extend(distinct.iter().copied());
            if q % 2 == 1 {
                let missing: Vec<_> = (1..=chi as u16).filter(|x| !distinct.contains(x)).collect();
                assert_eq!(missing, vec![c.missing(v).unwrap()]);
            }
        }
        assert_eq!(used.len(), chi);
        if q % 2 == 1 {
            let missing: BTreeSet<_> = (0..q).map(|v| c.missing(v).unwrap()).collect();
            assert_eq!(missing.len(), q, "missing colors are distinct");
        }
        let classes = c.classes();
        assert!(classes.iter().all(|cl| {
            let ends: Vec<_> = cl.iter().flat_map(|&(u, v)| [u, v]).collect();
            ends.iter().collect::<BTreeSet<_>>().len() == ends.len()
        }));
    }
}

#[test]
fn petersen_two_factorizations_of_random_regular_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2fac);
    let mut done = 0;
    while done < 50 {
        let r = rng.gen_range(1..=4);
        let order = rng.gen_range(2 * r + 1..=16);
        let host = random_regular(order, 2 * r, &mut rng);
        let f = two_factorization(&host).unwrap();
        assert_eq!(f.factors.len(), r);
        assert!(
            is_factorization(&host, &f.factors, 2),
            "order {order}, degree {}",
            2 * r
        );
        done += 1;
    }
}

#[test]
fn two_factorization_rejects_odd_or_irregular_hosts() {
    assert_eq!(
        two_factorization(&Graph::complete(4)),
        Err(FactorError::NotEvenRegular)
    );
    let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
    assert_eq!(two_factorization(&path), Err(FactorError::NotEvenRegular));
}

#[test]
fn perfect_matchings_from_random_regular_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let order = 2 * rng.gen_range(3..=8);
        let d = rng.gen_range(order / 2..order);
        let host = random_regular(order, d, &mut rng);
        let want = d / 2;
        let ex = extract_perfect_matchings(&host, want, 11, DEFAULT_RETRY_BUDGET).unwrap();
        assert_eq!(ex.matchings.len(), want);
        for m in &ex.matchings {
            let mut g = Graph::empty(order);
            for &(u, v) in m {
                g.add_edge(u, v);
            }
            assert!(is_factorization(&g, std::slice::from_ref(m), 1));
            assert!(m.iter().all(|&(u, v)| host.has_edge(u, v)));
        }
        assert_eq!(ex.remainder.regular_degree(), Some(d - want));
    }
}

#[test]
fn n_factor_decompositions_of_multipartite_hosts() {
    // (n, m, blocks, count): blocks of size n+m+1, host degree n*count
    for (n, m, blocks, count) in [
        (2, 2, 3, 5),
        (1, 1, 2, 3),
        (3, 1, 4, 5),
        (4, 1, 3, 3),
        (3, 3, 4, 7),
    ] {
        let size = n + m + 1;
        let v: Vec<Vec<usize>> = (0..blocks)
            .map(|i| (i * size..(i + 1) * size).collect())
            .collect();
        let host = Graph::complete_multipartite(&v);
        assert_eq!(host.regular_degree(), Some(size * (blocks - 1)));
        assert_eq!(size * (blocks - 1), n * count);
        let f = decompose_into_n_factors(&host, n, count, 5, DEFAULT_RETRY_BUDGET).unwrap();
        assert!(is_factorization(&host, &f.factors, n), "n={n} m={m}");
    }
}

/// Maximum matching size by simple augmenting paths.
fn kuhn_size(host: &Graph, is_left: &[bool]) -> usize {
    fn try_augment(u: usize, host: &Graph, seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for w in host.neighbors(u) {
            if !std::mem::replace(&mut seen[w], true)
                && (mate[w].is_none() || try_augment(mate[w].unwrap(), host, seen, mate))
            {
                mate[w] = Some(u);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; host.order()];
    (0..host.order())
        .filter(|&u| is_left[u])
        .filter(|&u| try_augment(u, host, &mut vec![false; host.order()], &mut mate))
        .count()
}

#[test]
fn konig_certificates_on_random_bipartite_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b6f);
    for _ in 0..500 {
        let (l, r) = (rng.gen_range(0..=12), rng.gen_range(0..=12));
        let p = rng.gen_range(0.0..0.6);
        let (host, is_left) = random_bipartite(l, r, p, &mut rng);
        let cert = max_matching_min_cover(&host, &is_left).unwrap();
        assert_eq!(cert.matching.len(), cert.cover.len());
        let mut used = BTreeSet::new();
        for &(a, b) in &cert.matching {
            assert!(is_left[a] && !is_left[b] && host.has_edge(a, b));
            assert!(used.insert(a) && used.insert(b));
        }
        let cover: BTreeSet<_> = cert.cover.iter().copied().collect();
        assert!(host
            .edges()
            .iter()
            .all(|(u, v)| cover.contains(u) || cover.contains(v)));
        assert_eq!(cert.matching.len(), kuhn_size(&host, &is_left));
    }
}

#[test]
fn konig_rejects_non_bipartite_input() {
    let tri = Graph::complete(3);
    assert!(matches!(
        max_matching_min_cover(&tri, &[true, false, false]),
        Err(FactorError::NotBipartite { .. })
    ));
}
