//! Exhaustive search: pattern-free colorings, exact small Ramsey numbers,
//! proper list edge colorings, and tiny list-Ramsey checks.
//!
//! The engine colors edges in lexicographic pair order and prunes a branch as
//! soon as the color class just extended contains the pattern through the new
//! edge. Color classes are kept as `u64` adjacency masks, so instances are
//! limited to 64 vertices (in practice the search is only feasible far below).

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{pair_index, Color, ColoredCompleteGraph, Pattern};
use crate::detect;

const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("node budget of {budget} exhausted after {nodes} nodes")]
    BudgetExhausted { budget: u64, nodes: u64 },
    #[error("search supports at most {MAX_ORDER} vertices (got {0})")]
    TooLarge(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("edge {{{u},{v}}} has {found} colors, expected {expected}")]
    NonUniform {
        u: usize,
        v: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {{{u},{v}}} lists color {color} twice")]
    DuplicateColor { u: usize, v: usize, color: Color },
    #[error("edge {{{u},{v}}} lists color 0; colors start at 1")]
    ZeroColor { u: usize, v: usize },
    #[error("lists must be non-empty")]
    Empty,
}

/// Per-edge color lists of uniform size on `K_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    order: usize,
    size: usize,
    universe: Color,
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Lists produced by `list_of(u, v)` for every `u < v`; stored sorted.
    pub fn from_fn<F>(order: usize, mut list_of: F) -> Result<Self, ListError>
    where
        F: FnMut(usize, usize) -> Vec<Color>,
    {
        let mut lists = vec![Vec::new(); order * order.saturating_sub(1) / 2];
        let mut size = None;
        let mut universe = 0;
        for u in 0..order {
            for v in u + 1..order {
                let mut list = list_of(u, v);
                list.sort_unstable();
                if list.is_empty() {
                    return Err(ListError::Empty);
                }
                if list[0] == 0 {
                    return Err(ListError::ZeroColor { u, v });
                }
                if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                    return Err(ListError::DuplicateColor { u, v, color: w[0] });
                }
                let expected = *size.get_or_insert(list.len());
                if list.len() != expected {
                    return Err(ListError::NonUniform {
                        u,
                        v,
                        expected,
                        found: list.len(),
                    });
                }
                universe = universe.max(*list.last().unwrap());
                lists[pair_index(u, v)] = list;
            }
        }
        Ok(ListAssignment {
            order,
            size: size.unwrap_or(0),
            universe,
            lists,
        })
    }

    pub fn constant(order: usize, list: &[Color]) -> Result<Self, ListError> {
        Self::from_fn(order, |_, _| list.to_vec())
    }

    /// Independent uniformly random `size`-subsets of `1..=universe`.
    pub fn random<R: Rng>(order: usize, size: usize, universe: Color, rng: &mut R) -> Self {
        assert!(size >= 1 && size <= universe as usize);
        Self::from_fn(order, |_, _| {
            sample(rng, universe as usize, size)
                .into_iter()
                .map(|i| i as Color + 1)
                .collect()
        })
        .expect("random lists are well formed")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Common list size `k`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Largest color appearing in any list.
    pub fn universe(&self) -> Color {
        self.universe
    }

    pub fn list(&self, u: usize, v: usize) -> &[Color] {
        &self.lists[pair_index(u, v)]
    }

    pub fn is_constant(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// Whether every edge of `g` is colored from its list.
    pub fn respects(&self, g: &ColoredCompleteGraph) -> bool {
        g.order() == self.order && g.edges().all(|(u, v, c)| self.list(u, v).contains(&c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node budget (per worker when `workers > 1`).
    pub budget: u64,
    /// Canonical color ordering: a color may first appear only after all
    /// smaller colors have appeared on earlier edges.
    pub symmetry_breaking: bool,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 2_000_000_000,
            symmetry_breaking: true,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A pattern-free coloring (already re-checked by the exact detector).
    Free(ColoredCompleteGraph),
    /// Every coloring contains the pattern.
    Forced,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_forced(&self) -> bool {
        matches!(self.verdict, Verdict::Forced)
    }
}

/// Decides whether some `k`-coloring of `K_order` avoids a monochromatic
/// `pattern`.
pub fn exists_free_coloring(
    order: usize,
    k: Color,
    pattern: Pattern,
    options: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    let allowed: Vec<Color> = (1..=k).collect();
    let edges = order * order.saturating_sub(1) / 2;
    run(
        order,
        k,
        vec![allowed; edges],
        options.symmetry_breaking,
        pattern,
        options,
    )
}

/// Result of scanning `N = 1..=cap` for the first forced order.
#[derive(Debug, Clone)]
pub enum RamseyValue {
    /// `r(pattern; k) = value`; `witness` is a free coloring of `K_{value-1}`.
    Exact {
        value: usize,
        witness: ColoredCompleteGraph,
        nodes_explored: u64,
    },
    /// No forced order up to `cap`, so `r > cap`.
    LowerBoundOnly {
        lower: usize,
        witness: ColoredCompleteGraph,
        nodes_explored: u64,
    },
}

impl RamseyValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            RamseyValue::Exact { value, .. } => Some(*value),
            RamseyValue::LowerBoundOnly { .. } => None,
        }
    }
}

pub fn ramsey_exact(
    pattern: Pattern,
    k: Color,
    cap: usize,
    options: SearchOptions,
) -> Result<RamseyValue, SearchError> {
    assert!(cap >= 1);
    let mut nodes = 0;
    let mut witness = None;
    for order in 1..=cap {
        let outcome = exists_free_coloring(order, k, pattern, options)?;
        nodes += outcome.nodes_explored;
        match outcome.verdict {
            Verdict::Free(g) => witness = Some(g),
            Verdict::Forced => {
                let witness = witness
                    .ok_or_else(|| SearchError::Internal("K_1 cannot force a pattern".into()))?;
                return Ok(RamseyValue::Exact {
                    value: order,
                    witness,
                    nodes_explored: nodes,
                });
            }
        }
    }
    Ok(RamseyValue::LowerBoundOnly {
        lower: cap + 1,
        witness: witness.expect("cap >= 1"),
        nodes_explored: nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListRamseyVerdict {
    ForcedForL,
    FreeColoringFound(ColoredCompleteGraph),
}

/// Decides whether every `L`-coloring of `K_order` contains the pattern.
/// Color symmetry is exploited only when `L` is constant.
pub fn list_ramsey_check(
    lists: &ListAssignment,
    pattern: Pattern,
    options: SearchOptions,
) -> Result<ListRamseyVerdict, SearchError> {
    let symmetric = options.symmetry_breaking && lists.is_constant();
    let outcome = run(
        lists.order,
        lists.universe,
        lists.lists.clone(),
        symmetric,
        pattern,
        options,
    )?;
    Ok(match outcome.verdict {
        Verdict::Forced => ListRamseyVerdict::ForcedForL,
        Verdict::Free(g) => ListRamseyVerdict::FreeColoringFound(g),
    })
}

fn run(
    order: usize,
    universe: Color,
    allowed: Vec<Vec<Color>>,
    symmetric: bool,
    pattern: Pattern,
    options: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if order > MAX_ORDER {
        return Err(SearchError::TooLarge(order));
    }
    let start = Instant::now();
    let edges: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect();
    // engine works in lexicographic edge order; `allowed` is pair-indexed
    let allowed: Vec<Vec<Color>> = edges
        .iter()
        .map(|&(u, v)| allowed[pair_index(u, v)].clone())
        .collect();
    let template = Engine {
        order,
        pattern,
        edges,
        allowed,
        symmetric,
        assigned: Vec::new(),
        adj: vec![vec![0u64; order]; universe as usize + 1],
        max_rank: 0,
        nodes: 0,
        budget: options.budget,
    };

    let (free, nodes) = if options.workers <= 1 {
        let mut engine = template;
        let found = engine.dfs(0, None)?;
        (found.then(|| engine.assigned.clone()), engine.nodes)
    } else {
        run_parallel(template, options.workers)?
    };

    let verdict = match free {
        None => Verdict::Forced,
        Some(assigned) => {
            let mut it = assigned.into_iter();
            let g =
                ColoredCompleteGraph::from_fn(order, universe.max(1), |_, _| it.next().unwrap())
                    .map_err(|e| SearchError::Internal(e.to_string()))?;
            if let Some(e) = detect::find_mono(&g, pattern) {
                return Err(SearchError::Internal(format!(
                    "search returned a coloring containing {:?}",
                    e
                )));
            }
            Verdict::Free(g)
        }
    };
    Ok(SearchOutcome {
        verdict,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Splits the tree at a shallow depth and explores the branches on a
/// `workers`-thread pool. The lowest-indexed free branch wins; branches above
/// an already-found free branch stop early.
fn run_parallel(
    template: Engine,
    workers: usize,
) -> Result<(Option<Vec<Color>>, u64), SearchError> {
    let depth = template.edges.len().min(4);
    let mut prefixes = Vec::new();
    let mut root = template.clone();
    root.collect_prefixes(0, depth, &mut prefixes);

    let best = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SearchError::Internal(e.to_string()))?;
    let results: Vec<Result<(Option<Vec<Color>>, u64), SearchError>> = pool.install(|| {
        prefixes
            .par_iter()
            .enumerate()
            .map(|(i, prefix)| {
                if best.load(Ordering::Relaxed) < i {
                    return Ok((None, 0));
                }
                let mut engine = template.clone();
                engine.replay(prefix);
                let found = engine.dfs(prefix.len(), Some((&best, i)))?;
                if found {
                    best.fetch_min(i, Ordering::Relaxed);
                    Ok((Some(engine.assigned.clone()), engine.nodes))
                } else {
                    Ok((None, engine.nodes))
                }
            })
            .collect()
    });

    let mut nodes = 0;
    let mut free = None;
    let mut exhausted = None;
    for r in results {
        match r {
            Ok((found, n)) => {
                nodes += n;
                if free.is_none() {
                    free = found;
                }
            }
            Err(e @ SearchError::BudgetExhausted { .. }) => exhausted = Some(e),
            Err(e) => return Err(e),
        }
    }
    match (free, exhausted) {
        (Some(f), _) => Ok((Some(f), nodes)),
        (None, Some(e)) => Err(e),
        (None, None) => Ok((None, nodes)),
    }
}

#[derive(Clone)]
struct Engine {
    order: usize,
    pattern: Pattern,
    edges: Vec<(usize, usize)>,
    allowed: Vec<Vec<Color>>,
    symmetric: bool,
    /// Colors of edges `0..assigned.len()`.
    assigned: Vec<Color>,
    /// `adj[c][v]`: neighbors of `v` in color class `c`.
    adj: Vec<Vec<u64>>,
    /// One past the highest list position used so far (symmetric mode).
    max_rank: usize,
    nodes: u64,
    budget: u64,
}

impl Engine {
    fn push(&mut self, c: Color) {
        let (u, v) = self.edges[self.assigned.len()];
        self.adj[c as usize][u] |= 1 << v;
        self.adj[c as usize][v] |= 1 << u;
        self.assigned.push(c);
    }

    fn pop(&mut self) {
        let c = self.assigned.pop().expect("pop on empty assignment");
        let (u, v) = self.edges[self.assigned.len()];
        self.adj[c as usize][u] &= !(1 << v);
        self.adj[c as usize][v] &= !(1 << u);
    }

    fn replay(&mut self, prefix: &[Color]) {
        for &c in prefix {
            let edge = self.assigned.len();
            let rank = self.allowed[edge]
                .iter()
                .position(|&a| a == c)
                .expect("prefix color");
            self.max_rank = self.max_rank.max(rank + 1);
            self.push(c);
        }
    }

    /// Candidate positions in the current edge's list under symmetry breaking.
    fn choices(&self, edge: usize) -> usize {
        let list = self.allowed[edge].len();
        if self.symmetric {
            list.min(self.max_rank + 1)
        } else {
            list
        }
    }

    fn dfs(
        &mut self,
        edge: usize,
        cancel: Option<(&AtomicUsize, usize)>,
    ) -> Result<bool, SearchError> {
        if edge == self.edges.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExhausted {
                budget: self.budget,
                nodes: self.nodes,
            });
        }
        if let Some((best, me)) = cancel {
            if self.nodes.is_multiple_of(4096) && best.load(Ordering::Relaxed) < me {
                return Ok(false);
            }
        }
        let (u, v) = self.edges[edge];
        for rank in 0..self.choices(edge) {
            let c = self.allowed[edge][rank];
            self.push(c);
            if !contains_through(&self.adj[c as usize], self.order, self.pattern, u, v) {
                let saved = self.max_rank;
                self.max_rank = self.max_rank.max(rank + 1);
                let found = self.dfs(edge + 1, cancel)?;
                self.max_rank = saved;
                if found {
                    return Ok(true);
                }
            }
            self.pop();
        }
        Ok(false)
    }

    /// All pattern-free prefixes of length `depth` in search order.
    fn collect_prefixes(&mut self, edge: usize, depth: usize, out: &mut Vec<Vec<Color>>) {
        if edge == depth {
            out.push(self.assigned.clone());
            return;
        }
        let (u, v) = self.edges[edge];
        for rank in 0..self.choices(edge) {
            let c = self.allowed[edge][rank];
            self.push(c);
            if !contains_through(&self.adj[c as usize], self.order, self.pattern, u, v) {
                let saved = self.max_rank;
                self.max_rank = self.max_rank.max(rank + 1);
                self.collect_prefixes(edge + 1, depth, out);
                self.max_rank = saved;
            }
            self.pop();
        }
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

/// Whether the color class `adj` contains `pattern` using the edge `uv`.
/// Assumes the class was pattern-free before `uv` was added.
fn contains_through(adj: &[u64], order: usize, pattern: Pattern, u: usize, v: usize) -> bool {
    match pattern {
        Pattern::Star { n } => {
            adj[u].count_ones() as usize >= n || adj[v].count_ones() as usize >= n
        }
        Pattern::DoubleStar { n, m } => {
            // the central edge is uv or touches u or v
            let central = |x: usize, y: usize| {
                double_star_on(adj, x, y, n, m) || (n != m && double_star_on(adj, y, x, n, m))
            };
            central(u, v)
                || bits(adj[u]).any(|w| w != v && central(u, w))
                || bits(adj[v]).any(|w| w != u && central(v, w))
        }
        Pattern::SubdividedStar { n, m } => {
            let centers = adj[u] | adj[v] | (1 << u) | (1 << v);
            bits(centers).any(|x| subdivided_star_at(adj, order, x, n, m))
        }
    }
}

fn double_star_on(adj: &[u64], x: usize, y: usize, n: usize, m: usize) -> bool {
    let nx = adj[x] & !(1 << y);
    let ny = adj[y] & !(1 << x);
    let a = nx.count_ones() as usize;
    let b = ny.count_ones() as usize;
    let t = (nx & ny).count_ones() as usize;
    a >= n && b >= m && a + b - t >= n + m
}

fn subdivided_star_at(adj: &[u64], order: usize, x: usize, n: usize, m: usize) -> bool {
    let s = adj[x];
    let degree = s.count_ones() as usize;
    if degree < n {
        return false;
    }
    let all = if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    };
    let outside = all & !s & !(1 << x);
    let members: Vec<usize> = bits(s).collect();
    for r in 0..=(degree - n).min(m) {
        let mut idx: Vec<usize> = (0..r).collect();
        loop {
            let released = idx.iter().fold(0u64, |acc, &i| acc | 1 << members[i]);
            if mask_matching(adj, s & !released, outside | released, m) {
                return true;
            }
            if !crate::matching::next_combination(&mut idx, members.len()) {
                break;
            }
        }
    }
    false
}

/// Whether the bipartite graph between `left` and `right` (edges taken from
/// `adj`) has a matching of size `need`. Kuhn's augmenting paths on masks.
fn mask_matching(adj: &[u64], left: u64, right: u64, need: usize) -> bool {
    fn augment(adj: &[u64], l: usize, right: u64, seen: &mut u64, mate: &mut [usize; 64]) -> bool {
        for r in bits(adj[l] & right & !*seen) {
            *seen |= 1 << r;
            if mate[r] == usize::MAX || augment(adj, mate[r], right, seen, mate) {
                mate[r] = l;
                return true;
            }
        }
        false
    }
    let mut mate = [usize::MAX; 64];
    let mut size = 0;
    for l in bits(left) {
        let mut seen = 0;
        if augment(adj, l, right, &mut seen, &mut mate) {
            size += 1;
            if size >= need {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListEdgeColoring {
    /// A proper coloring with every edge colored from its list.
    Colored(ColoredCompleteGraph),
    Unsolvable,
}

/// Proper list edge coloring of `K_q` by backtracking, always branching on
/// the uncolored edge with the fewest remaining options.
pub fn list_edge_coloring(
    lists: &ListAssignment,
    budget: u64,
) -> Result<ListEdgeColoring, SearchError> {
    let q = lists.order;
    let edges: Vec<(usize, usize)> = (0..q)
        .flat_map(|u| (u + 1..q).map(move |v| (u, v)))
        .collect();
    let mut solver = ListSolver {
        lists,
        edges: &edges,
        color: vec![0; edges.len()],
        used: vec![vec![false; lists.universe as usize + 1]; q],
        nodes: 0,
        budget,
    };
    if !solver.solve(edges.len())? {
        return Ok(ListEdgeColoring::Unsolvable);
    }
    let g = ColoredCompleteGraph::from_fn(q, lists.universe.max(1), |u, v| {
        solver.color[edges.iter().position(|&e| e == (u, v)).unwrap()]
    })
    .map_err(|e| SearchError::Internal(e.to_string()))?;
    Ok(ListEdgeColoring::Colored(g))
}

struct ListSolver<'a> {
    lists: &'a ListAssignment,
    edges: &'a [(usize, usize)],
    color: Vec<Color>,
    used: Vec<Vec<bool>>,
    nodes: u64,
    budget: u64,
}

impl ListSolver<'_> {
    fn options(&self, e: usize) -> impl Iterator<Item = Color> + '_ {
        let (u, v) = self.edges[e];
        self.lists
            .list(u, v)
            .iter()
            .copied()
            .filter(move |&c| !self.used[u][c as usize] && !self.used[v][c as usize])
    }

    fn solve(&mut self, remaining: usize) -> Result<bool, SearchError> {
        if remaining == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExhausted {
                budget: self.budget,
                nodes: self.nodes,
            });
        }
        let pick = (0..self.edges.len())
            .filter(|&e| self.color[e] == 0)
            .min_by_key(|&e| self.options(e).count())
            .expect("remaining > 0");
        let (u, v) = self.edges[pick];
        let options: Vec<Color> = self.options(pick).collect();
        for c in options {
            self.color[pick] = c;
            self.used[u][c as usize] = true;
            self.used[v][c as usize] = true;
            if self.solve(remaining - 1)? {
                return Ok(true);
            }
            self.used[u][c as usize] = false;
            self.used[v][c as usize] = false;
        }
        self.color[pick] = 0;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn p4_on_k4_is_avoidable_and_on_k5_forced() {
        let free = exists_free_coloring(4, 2, Pattern::p4(), opts()).unwrap();
        assert!(matches!(free.verdict, Verdict::Free(_)));
        let forced = exists_free_coloring(5, 2, Pattern::p4(), opts()).unwrap();
        assert!(forced.is_forced());
    }

    #[test]
    fn cherry_forced_on_triangle() {
        let out = exists_free_coloring(3, 2, Pattern::Star { n: 2 }, opts()).unwrap();
        assert!(out.is_forced());
    }

    #[test]
    fn ramsey_values_for_small_patterns() {
        let r = ramsey_exact(Pattern::p4(), 2, 8, opts()).unwrap();
        assert_eq!(r.exact(), Some(5));
        let r = ramsey_exact(Pattern::Star { n: 2 }, 2, 5, opts()).unwrap();
        assert_eq!(r.exact(), Some(3));
        let r = ramsey_exact(Pattern::Star { n: 3 }, 2, 3, opts()).unwrap();
        assert!(matches!(r, RamseyValue::LowerBoundOnly { lower: 4, .. }));
    }

    #[test]
    fn budget_is_reported_separately() {
        let tight = SearchOptions {
            budget: 3,
            ..opts()
        };
        let err = exists_free_coloring(5, 2, Pattern::p4(), tight).unwrap_err();
        assert!(matches!(
            err,
            SearchError::BudgetExhausted { budget: 3, .. }
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        for order in 3..=6 {
            let seq =
                exists_free_coloring(order, 2, Pattern::DoubleStar { n: 2, m: 1 }, opts()).unwrap();
            let par = exists_free_coloring(
                order,
                2,
                Pattern::DoubleStar { n: 2, m: 1 },
                SearchOptions {
                    workers: 4,
                    ..opts()
                },
            )
            .unwrap();
            assert_eq!(seq.is_forced(), par.is_forced(), "K_{order}");
            assert_eq!(seq.verdict, par.verdict, "lowest branch wins");
        }
    }

    #[test]
    fn list_coloring_k4() {
        let lists = ListAssignment::constant(4, &[1, 2, 3]).unwrap();
        match list_edge_coloring(&lists, u64::MAX).unwrap() {
            ListEdgeColoring::Colored(g) => {
                assert!(detect::find_mono_star(&g, 2).is_none());
                assert!(lists.respects(&g));
            }
            ListEdgeColoring::Unsolvable => panic!("K_4 is 3-edge-colorable"),
        }
        let single = ListAssignment::constant(3, &[1]).unwrap();
        assert_eq!(
            list_edge_coloring(&single, u64::MAX).unwrap(),
            ListEdgeColoring::Unsolvable
        );
    }

    #[test]
    fn list_assignment_validation() {
        let err = ListAssignment::from_fn(3, |u, _| if u == 0 { vec![1, 2] } else { vec![1] });
        assert!(matches!(err, Err(ListError::NonUniform { .. })));
        let err = ListAssignment::from_fn(2, |_, _| vec![2, 2]);
        assert!(matches!(
            err,
            Err(ListError::DuplicateColor { color: 2, .. })
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let l = ListAssignment::random(5, 3, 6, &mut rng);
        assert_eq!(l.size(), 3);
        assert!(l.universe() <= 6);
    }

    #[test]
    fn constant_list_p4_check() {
        let l5 = ListAssignment::constant(5, &[1, 2, 3]).unwrap();
        assert!(matches!(
            list_ramsey_check(&l5, Pattern::p4(), opts()).unwrap(),
            ListRamseyVerdict::FreeColoringFound(_)
        ));
    }
}
