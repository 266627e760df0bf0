//! Edge colorings and factorizations consumed by the witness constructions:
//! proper edge colorings of `K_q`, 1-factorizations, Petersen 2-factorizations,
//! extraction of edge-disjoint perfect matchings, and König certificates.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{pair_count, pair_index, Color};
use crate::matching::hopcroft_karp;

/// Default number of randomized retries for perfect-matching extraction.
pub const DEFAULT_RETRY_BUDGET: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("host is not regular of positive even degree")]
    NotEvenRegular,
    #[error("host is not regular")]
    NotRegular,
    #[error("host has odd order {0}; perfect matchings need even order")]
    OddOrder(usize),
    #[error("host degree {found} does not equal the requested {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("found only {found} of {requested} edge-disjoint perfect matchings")]
    ExtractionFailed { requested: usize, found: usize },
    #[error("edge {{{u},{v}}} lies inside one side of the bipartition")]
    NotBipartite { u: usize, v: usize },
    #[error("bipartition has {found} entries for {order} vertices")]
    InvalidBipartition { order: usize, found: usize },
}

/// A simple undirected graph on `0..order`, stored as sorted adjacency sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); order],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(order: usize, edges: I) -> Self {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(order: usize) -> Self {
        Graph::from_edges(
            order,
            (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))),
        )
    }

    pub fn cycle(order: usize) -> Self {
        Graph::from_edges(order, (0..order).map(|i| (i, (i + 1) % order)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// The complete multipartite graph with the given vertex blocks: every
    /// pair in different blocks is an edge.
    pub fn complete_multipartite(blocks: &[Vec<usize>]) -> Self {
        let order = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; order];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        Graph::from_edges(
            order,
            (0..order)
                .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
                .filter(|&(u, v)| block_of[u] != block_of[v]),
        )
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.adj[u].remove(&v) && self.adj[v].remove(&u)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, BTreeSet::len);
        self.adj.iter().all(|nb| nb.len() == d).then_some(d)
    }
}

/// A partition of `host`'s edges into spanning factors; factor `i` is
/// `degrees[i]`-regular on all of `host`'s vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub host: Graph,
    pub factors: Vec<Vec<(usize, usize)>>,
    pub degrees: Vec<usize>,
}

impl Factorization {
    /// Checks disjointness, exact cover of the host, and per-factor degrees.
    pub fn verify(&self) -> Result<(), String> {
        if self.factors.len() != self.degrees.len() {
            return Err("factor and degree lists differ in length".into());
        }
        let order = self.host.order();
        let mut seen = BTreeSet::new();
        for (i, (factor, &d)) in self.factors.iter().zip(&self.degrees).enumerate() {
            let mut deg = vec![0usize; order];
            for &(u, v) in factor {
                if !self.host.has_edge(u, v) {
                    return Err(format!("factor {i} uses non-edge {{{u},{v}}}"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(format!("edge {{{u},{v}}} appears twice"));
                }
                deg[u] += 1;
                deg[v] += 1;
            }
            if let Some(v) = deg.iter().position(|&x| x != d) {
                return Err(format!(
                    "factor {i} has degree {} at vertex {v}, expected {d}",
                    deg[v]
                ));
            }
        }
        if seen.len() != self.host.edge_count() {
            return Err(format!(
                "factors cover {} of {} host edges",
                seen.len(),
                self.host.edge_count()
            ));
        }
        Ok(())
    }
}

/// A proper edge coloring of `K_q` with `χ'(K_q)` colors.
#[derive(Debug, Clone)]
pub struct ProperEdgeColoring {
    order: usize,
    colors: usize,
    table: Vec<Color>,
    missing: Option<Vec<Color>>,
}

impl ProperEdgeColoring {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of colors used: `q` for odd `q`, `q - 1` for even `q`.
    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> Color {
        assert!(u != v);
        self.table[pair_index(u, v)]
    }

    /// For odd `q`, the color absent at vertex `v`; it equals `v + 1`.
    pub fn missing(&self, v: usize) -> Option<Color> {
        self.missing.as_ref().map(|m| m[v])
    }

    /// Edges of each color class, class `c` at index `c - 1`.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.colors];
        for u in 0..self.order {
            for v in u + 1..self.order {
                out[self.color(u, v) as usize - 1].push((u, v));
            }
        }
        out
    }
}

/// Proper edge coloring of `K_q`, `q >= 2`.
///
/// Odd `q` uses the circle construction `u + v (mod q)`, relabeled so that
/// vertex `v` misses color `v + 1`. Even `q` colors `K_{q-1}` that way and
/// joins the hub `q - 1` to each `v` in `v`'s missing color.
pub fn proper_edge_coloring_complete(q: usize) -> ProperEdgeColoring {
    assert!(q >= 2, "proper_edge_coloring_complete needs q >= 2");
    let odd_part = if q % 2 == 1 { q } else { q - 1 };
    // multiplying by the inverse of 2 sends the missing color 2v to v
    let half = odd_part.div_ceil(2);
    let odd_color = |u: usize, v: usize| (((u + v) * half) % odd_part + 1) as Color;
    let mut table = vec![0 as Color; pair_count(q)];
    for u in 0..q {
        for v in u + 1..q {
            table[pair_index(u, v)] = if v < odd_part {
                odd_color(u, v)
            } else {
                (u + 1) as Color
            };
        }
    }
    let missing = (q % 2 == 1).then(|| (1..=q as Color).collect());
    ProperEdgeColoring {
        order: q,
        colors: odd_part,
        table,
        missing,
    }
}

/// `q - 1` edge-disjoint perfect matchings of `K_q`, `q` even (round robin).
pub fn one_factorization_even(q: usize) -> Factorization {
    assert!(
        q >= 2 && q.is_multiple_of(2),
        "one_factorization_even needs even q >= 2"
    );
    let coloring = proper_edge_coloring_complete(q);
    let factors = coloring.classes();
    Factorization {
        host: Graph::complete(q),
        degrees: vec![1; factors.len()],
        factors,
    }
}

/// Splits a `2r`-regular graph into `r` edge-disjoint 2-factors.
///
/// Each component's Euler circuit orients the edges so every vertex has
/// in- and out-degree `r`; the out/in bipartite graph is `r`-regular and
/// splits into `r` perfect matchings, each of which maps back to a 2-factor.
pub fn two_factorization(host: &Graph) -> Result<Factorization, FactorError> {
    let degree = host.regular_degree().ok_or(FactorError::NotEvenRegular)?;
    if degree == 0 || degree % 2 == 1 {
        return Err(FactorError::NotEvenRegular);
    }
    let r = degree / 2;
    let order = host.order();
    let oriented: Vec<(usize, usize)> = euler_circuits(order, &host.edges())
        .into_iter()
        .flatten()
        .collect();
    let matchings = split_regular_bipartite(order, oriented, r);
    let factors: Vec<Vec<(usize, usize)>> = matchings
        .into_iter()
        .map(|m| {
            let mut f: Vec<_> = m.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
            f.sort_unstable();
            f
        })
        .collect();
    Ok(Factorization {
        host: host.clone(),
        degrees: vec![2; factors.len()],
        factors,
    })
}

/// Euler circuits of every component with edges; each circuit is a list of
/// oriented edges in traversal order. All degrees must be even.
fn euler_circuits(order: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); order];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut used = vec![false; edges.len()];
    let mut next = vec![0usize; order];
    let mut circuits = Vec::new();
    for start in 0..order {
        let mut stack: Vec<(usize, Option<(usize, usize)>)> = vec![(start, None)];
        let mut circuit = Vec::new();
        while let Some(&(v, arrived_by)) = stack.last() {
            while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
                next[v] += 1;
            }
            if let Some(&(w, id)) = adj[v].get(next[v]) {
                used[id] = true;
                stack.push((w, Some((v, w))));
            } else {
                stack.pop();
                circuit.extend(arrived_by);
            }
        }
        if !circuit.is_empty() {
            circuit.reverse();
            circuits.push(circuit);
        }
    }
    circuits
}

/// Splits an `r`-regular bipartite graph (left `0..side`, right `0..side`,
/// edges `(left, right)`) into `r` perfect matchings: Euler halving when `r`
/// is even, peeling one perfect matching when `r` is odd.
fn split_regular_bipartite(
    side: usize,
    edges: Vec<(usize, usize)>,
    r: usize,
) -> Vec<Vec<(usize, usize)>> {
    if r == 1 {
        return vec![edges];
    }
    if r.is_multiple_of(2) {
        // right vertex j becomes side + j in the combined graph
        let combined: Vec<(usize, usize)> = edges.iter().map(|&(l, j)| (l, side + j)).collect();
        let mut halves = (Vec::new(), Vec::new());
        for circuit in euler_circuits(2 * side, &combined) {
            for (i, (a, b)) in circuit.into_iter().enumerate() {
                let e = if a < side {
                    (a, b - side)
                } else {
                    (b, a - side)
                };
                if i % 2 == 0 {
                    halves.0.push(e);
                } else {
                    halves.1.push(e);
                }
            }
        }
        let mut out = split_regular_bipartite(side, halves.0, r / 2);
        out.extend(split_regular_bipartite(side, halves.1, r / 2));
        return out;
    }
    let mut adj = vec![Vec::new(); side];
    for &(l, j) in &edges {
        adj[l].push(j);
    }
    let matching = hopcroft_karp(side, &adj);
    assert_eq!(
        matching.size(),
        side,
        "regular bipartite graphs have perfect matchings"
    );
    let perfect: Vec<(usize, usize)> = matching.pairs().collect();
    let rest: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|&(l, j)| matching.mate_left[l] != Some(j))
        .collect();
    let mut out = vec![perfect];
    out.extend(split_regular_bipartite(side, rest, r - 1));
    out
}

/// `r` edge-disjoint perfect matchings of `host` together with the leftover
/// graph.
#[derive(Debug, Clone)]
pub struct MatchingExtraction {
    pub matchings: Vec<Vec<(usize, usize)>>,
    pub remainder: Graph,
    /// Attempt index (0 = unshuffled) that succeeded.
    pub attempt: usize,
}

/// Peels `r` perfect matchings greedily with a general maximum-matching
/// algorithm; retries with seeded vertex orderings up to `budget` attempts.
pub fn extract_perfect_matchings(
    host: &Graph,
    r: usize,
    seed: u64,
    budget: usize,
) -> Result<MatchingExtraction, FactorError> {
    let order = host.order();
    if order % 2 == 1 {
        return Err(FactorError::OddOrder(order));
    }
    let mut best = 0;
    for attempt in 0..budget.max(1) {
        let mut perm: Vec<usize> = (0..order).collect();
        if attempt > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
            perm.shuffle(&mut rng);
        }
        let mut remainder = host.clone();
        let mut matchings = Vec::with_capacity(r);
        while matchings.len() < r {
            let mate = blossom_matching(&remainder, &perm);
            if mate.iter().any(Option::is_none) {
                break;
            }
            let m: Vec<(usize, usize)> = mate
                .iter()
                .enumerate()
                .filter_map(|(u, &v)| v.filter(|&v| u < v).map(|v| (u, v)))
                .collect();
            for &(u, v) in &m {
                remainder.remove_edge(u, v);
            }
            matchings.push(m);
        }
        if matchings.len() == r {
            return Ok(MatchingExtraction {
                matchings,
                remainder,
                attempt,
            });
        }
        best = best.max(matchings.len());
    }
    Err(FactorError::ExtractionFailed {
        requested: r,
        found: best,
    })
}

/// Edmonds' blossom algorithm. `perm` fixes the order in which vertices
/// and neighbors are visited.
fn blossom_matching(g: &Graph, perm: &[usize]) -> Vec<Option<usize>> {
    const NIL: usize = usize::MAX;
    let n = g.order();
    let mut rank = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        rank[v] = i;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).collect();
            nb.sort_by_key(|&w| rank[w]);
            nb
        })
        .collect();

    let mut mate = vec![NIL; n];
    let mut parent = vec![NIL; n];
    let mut base: Vec<usize> = (0..n).collect();

    fn lca(mut a: usize, mut b: usize, mate: &[usize], parent: &[usize], base: &[usize]) -> usize {
        let mut on_path = vec![false; mate.len()];
        loop {
            a = base[a];
            on_path[a] = true;
            if mate[a] == usize::MAX {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if on_path[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    }

    fn mark_path(
        mut v: usize,
        b: usize,
        mut child: usize,
        mate: &[usize],
        parent: &mut [usize],
        base: &[usize],
        in_blossom: &mut [bool],
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    for &root in perm {
        if mate[root] != NIL {
            continue;
        }
        let mut used = vec![false; n];
        parent.iter_mut().for_each(|p| *p = NIL);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut end = NIL;
        'bfs: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NIL && parent[mate[to]] != NIL) {
                    let cur = lca(v, to, &mate, &parent, &base);
                    let mut in_blossom = vec![false; n];
                    mark_path(v, cur, to, &mate, &mut parent, &base, &mut in_blossom);
                    mark_path(to, cur, v, &mate, &mut parent, &base, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NIL {
                    parent[to] = v;
                    if mate[to] == NIL {
                        end = to;
                        break 'bfs;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut u = end;
        while u != NIL {
            let pv = parent[u];
            let ppv = mate[pv];
            mate[u] = pv;
            mate[pv] = u;
            u = ppv;
        }
    }
    mate.into_iter().map(|m| (m != NIL).then_some(m)).collect()
}

/// Partitions an `n·count`-regular host into `count` edge-disjoint
/// `n`-factors: grouped 2-factors when `n` is even; a perfect matching plus
/// `(n-1)/2` 2-factors per factor when `n` is odd.
pub fn decompose_into_n_factors(
    host: &Graph,
    n: usize,
    count: usize,
    seed: u64,
    budget: usize,
) -> Result<Factorization, FactorError> {
    assert!(n >= 1 && count >= 1);
    let found = host.regular_degree().ok_or(FactorError::NotRegular)?;
    if found != n * count {
        return Err(FactorError::ArityMismatch {
            expected: n * count,
            found,
        });
    }
    let (mut factors, even_host) = if n % 2 == 1 {
        let ex = extract_perfect_matchings(host, count, seed, budget)?;
        (ex.matchings, ex.remainder)
    } else {
        (vec![Vec::new(); count], host.clone())
    };
    let per_factor = n / 2;
    if per_factor > 0 {
        let two = two_factorization(&even_host)?;
        for (i, cycle_factor) in two.factors.into_iter().enumerate() {
            factors[i / per_factor].extend(cycle_factor);
        }
    }
    for f in &mut factors {
        f.sort_unstable();
    }
    Ok(Factorization {
        host: host.clone(),
        degrees: vec![n; count],
        factors,
    })
}

/// A maximum matching and a minimum vertex cover of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCertificate {
    /// Matched pairs `(left, right)`.
    pub matching: Vec<(usize, usize)>,
    /// Cover vertices, sorted.
    pub cover: Vec<usize>,
}

/// Maximum matching (Hopcroft–Karp) plus the König cover
/// `(L - Z) ∪ (R ∩ Z)`, where `Z` is everything reachable from unmatched
/// left vertices by alternating paths. `is_left[v]` gives `v`'s side.
pub fn max_matching_min_cover(
    host: &Graph,
    is_left: &[bool],
) -> Result<BipartiteCertificate, FactorError> {
    let order = host.order();
    if is_left.len() != order {
        return Err(FactorError::InvalidBipartition {
            order,
            found: is_left.len(),
        });
    }
    if let Some((u, v)) = host
        .edges()
        .into_iter()
        .find(|&(u, v)| is_left[u] == is_left[v])
    {
        return Err(FactorError::NotBipartite { u, v });
    }
    let left: Vec<usize> = (0..order).filter(|&v| is_left[v]).collect();
    let right: Vec<usize> = (0..order).filter(|&v| !is_left[v]).collect();
    let mut local = vec![0usize; order];
    for (i, &v) in left.iter().enumerate() {
        local[v] = i;
    }
    for (i, &v) in right.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&l| host.neighbors(l).map(|r| local[r]).collect())
        .collect();
    let matching = hopcroft_karp(right.len(), &adj);

    let mut reach_left = vec![false; left.len()];
    let mut reach_right = vec![false; right.len()];
    let mut queue: VecDeque<usize> = (0..left.len())
        .filter(|&l| matching.mate_left[l].is_none())
        .collect();
    for &l in &queue {
        reach_left[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            if matching.mate_left[l] == Some(r) || reach_right[r] {
                continue;
            }
            reach_right[r] = true;
            if let Some(next) = matching.mate_right[r] {
                if !reach_left[next] {
                    reach_left[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    let mut cover: Vec<usize> = left
        .iter()
        .enumerate()
        .filter(|&(i, _)| !reach_left[i])
        .map(|(_, &v)| v)
        .chain(
            right
                .iter()
                .enumerate()
                .filter(|&(i, _)| reach_right[i])
                .map(|(_, &v)| v),
        )
        .collect();
    cover.sort_unstable();
    Ok(BipartiteCertificate {
        matching: matching.pairs().map(|(l, r)| (left[l], right[r])).collect(),
        cover,
    })
}
