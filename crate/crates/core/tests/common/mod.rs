//! Helpers shared by the integration tests. Everything here is written
//! independently of the library internals so it can serve as an oracle.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ramsey_stars::factorize::Graph;
use ramsey_stars::{Color, ColoredCompleteGraph, Embedding, Pattern};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_coloring<R: Rng>(order: usize, k: Color, rng: &mut R) -> ColoredCompleteGraph {
    ColoredCompleteGraph::from_fn(order, k, |_, _| rng.gen_range(1..=k)).unwrap()
}

/// Pattern edges written out from the definitions, independent of
/// `Pattern::edges`.
pub fn pattern_edges(p: Pattern) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match p {
        Pattern::Star { n } => {
            for i in 0..n {
                out.push((0, 1 + i));
            }
        }
        Pattern::DoubleStar { n, m } => {
            out.push((0, 1));
            for i in 0..n {
                out.push((0, 2 + i));
            }
            for j in 0..m {
                out.push((1, 2 + n + j));
            }
        }
        Pattern::SubdividedStar { n, m } => {
            for i in 1..=n {
                out.push((0, i));
            }
            for i in 1..=m {
                out.push((i, n + i));
            }
        }
    }
    out
}

/// Checks that `e` is an injective, monochromatic copy of its pattern in `g`.
pub fn embedding_is_valid(g: &ColoredCompleteGraph, e: &Embedding) -> bool {
    let slots = match e.pattern {
        Pattern::Star { n } => n + 1,
        Pattern::DoubleStar { n, m } => n + m + 2,
        Pattern::SubdividedStar { n, m } => n + m + 1,
    };
    let distinct: BTreeSet<usize> = e.vertex_map.iter().copied().collect();
    e.vertex_map.len() == slots
        && distinct.len() == slots
        && e.vertex_map.iter().all(|&v| v < g.order())
        && pattern_edges(e.pattern)
            .into_iter()
            .all(|(a, b)| g.color(e.vertex_map[a], e.vertex_map[b]) == e.color)
}

/// Edge set as normalized pairs.
pub fn edge_set(edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

/// Checks that `factors` partition the edges of `host` into spanning
/// `degree`-regular subgraphs.
pub fn is_factorization(host: &Graph, factors: &[Vec<(usize, usize)>], degree: usize) -> bool {
    let mut seen = BTreeSet::new();
    for f in factors {
        let mut deg = vec![0usize; host.order()];
        for &(u, v) in f {
            if u == v || !host.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != degree) {
            return false;
        }
    }
    seen == edge_set(&host.edges())
}

/// Random `d`-regular graph: a circulant followed by degree-preserving
/// double-edge swaps. Odd `d` needs even `order`.
pub fn random_regular<R: Rng>(order: usize, d: usize, rng: &mut R) -> Graph {
    assert!(d < order && (order * d).is_multiple_of(2));
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..order {
        for s in 1..=d / 2 {
            let j = (i + s) % order;
            edges.insert((i.min(j), i.max(j)));
        }
        if d % 2 == 1 {
            let j = (i + order / 2) % order;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let mut list: Vec<(usize, usize)> = edges.iter().copied().collect();
    for _ in 0..10 * list.len() {
        let (i, j) = (rng.gen_range(0..list.len()), rng.gen_range(0..list.len()));
        let ((a, b), (c, e)) = (list[i], list[j]);
        let (c, e) = if rng.gen_bool(0.5) { (c, e) } else { (e, c) };
        // a-b, c-e  ->  a-c, b-e
        if [a, b].contains(&c) || [a, b].contains(&e) {
            continue;
        }
        let n1 = (a.min(c), a.max(c));
        let n2 = (b.min(e), b.max(e));
        if edges.contains(&n1) || edges.contains(&n2) {
            continue;
        }
        edges.remove(&list[i]);
        edges.remove(&list[j]);
        edges.insert(n1);
        edges.insert(n2);
        list[i] = n1;
        list[j] = n2;
    }
    let g = Graph::from_edges(order, edges);
    assert_eq!(g.regular_degree(), Some(d));
    g
}

/// Random bipartite graph with sides `0..l` and `l..l+r`.
pub fn random_bipartite<R: Rng>(l: usize, r: usize, p: f64, rng: &mut R) -> (Graph, Vec<bool>) {
    let mut g = Graph::empty(l + r);
    for a in 0..l {
        for b in 0..r {
            if rng.gen_bool(p) {
                g.add_edge(a, l + b);
            }
        }
    }
    let is_left = (0..l + r).map(|v| v < l).collect();
    (g, is_left)
}

pub fn shuffled<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
