//! Lower-bound witness colorings.
//!
//! Every builder re-checks its output with the exact detector (and with the
//! brute-force oracle when the graph is small enough) before returning it. A
//! construction that fails its own check is an [`ConstructError::Internal`]
//! error, never a certificate.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coloring::{Color, ColoredCompleteGraph, GraphError, Pattern};
use crate::detect::{self, BRUTE_FORCE_CUTOFF};
use crate::factorize::{
    decompose_into_n_factors, proper_edge_coloring_complete, two_factorization, FactorError, Graph,
    DEFAULT_RETRY_BUDGET,
};
use crate::matching::hopcroft_karp;
use crate::search::{
    exists_free_coloring, list_edge_coloring, ListAssignment, ListEdgeColoring, SearchError,
    SearchOptions, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidArity(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("lists have size {found}, expected {expected}")]
    ListSizeMismatch { expected: usize, found: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Internal(e.to_string())
    }
}

impl From<SearchError> for ConstructError {
    fn from(e: SearchError) -> Self {
        ConstructError::Internal(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    DoubleStarOddK,
    DoubleStarEvenK,
    DoubleStarDivisible,
    DoubleStarHalfDivisible,
    StarRelaxation,
    StarBundles,
    SubstarOddK,
    SubstarTwoColor,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 8] = [
        ConstructionId::DoubleStarOddK,
        ConstructionId::DoubleStarEvenK,
        ConstructionId::DoubleStarDivisible,
        ConstructionId::DoubleStarHalfDivisible,
        ConstructionId::StarRelaxation,
        ConstructionId::StarBundles,
        ConstructionId::SubstarOddK,
        ConstructionId::SubstarTwoColor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionId::DoubleStarOddK => "double-star-odd-k",
            ConstructionId::DoubleStarEvenK => "double-star-even-k",
            ConstructionId::DoubleStarDivisible => "double-star-divisible",
            ConstructionId::DoubleStarHalfDivisible => "double-star-half-divisible",
            ConstructionId::StarRelaxation => "star-relaxation",
            ConstructionId::StarBundles => "star-matching-bundles",
            ConstructionId::SubstarOddK => "substar-odd-k",
            ConstructionId::SubstarTwoColor => "substar-two-color",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructionId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown construction id {s:?}"))
    }
}

/// Named vertex blocks of a construction. `a` and `b` may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartitionScheme {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub v: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    A,
    B,
    /// 1-based index into `v`.
    V(usize),
}

impl PartitionScheme {
    /// Block containing `x`, if any.
    pub fn part_of(&self, x: usize) -> Option<Block> {
        if self.a.contains(&x) {
            return Some(Block::A);
        }
        if self.b.contains(&x) {
            return Some(Block::B);
        }
        self.v
            .iter()
            .position(|p| p.contains(&x))
            .map(|i| Block::V(i + 1))
    }

    /// Whether the blocks are disjoint and cover exactly `0..order`.
    pub fn covers(&self, order: usize) -> bool {
        let mut seen = vec![false; order];
        for &x in self.a.iter().chain(&self.b).chain(self.v.iter().flatten()) {
            if x >= order || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A verified pattern-free coloring certifying `r(pattern; colors) >= claimed_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub pattern: Pattern,
    pub colors: Color,
    pub graph: ColoredCompleteGraph,
    pub construction_id: ConstructionId,
    pub scheme: PartitionScheme,
    pub verified: bool,
    /// `graph.order() + 1`.
    pub claimed_bound: usize,
    pub seed: Option<u64>,
}

/// Checks `graph` against `pattern` with the exact detector, and also with
/// brute force when the graph is within the oracle's cutoff.
pub fn verify_free(graph: &ColoredCompleteGraph, pattern: Pattern) -> Result<(), ConstructError> {
    if let Some(e) = detect::find_mono(graph, pattern) {
        return Err(ConstructError::Internal(format!(
            "construction contains a monochromatic {pattern}: {:?}",
            e.vertex_map
        )));
    }
    if graph.order() <= BRUTE_FORCE_CUTOFF {
        if let Ok(Some(e)) = detect::brute_force_find(graph, pattern) {
            return Err(ConstructError::Internal(format!(
                "detector missed a monochromatic {pattern} found by brute force: {:?}",
                e.vertex_map
            )));
        }
    }
    Ok(())
}

fn certify(
    pattern: Pattern,
    graph: ColoredCompleteGraph,
    construction_id: ConstructionId,
    scheme: PartitionScheme,
    seed: Option<u64>,
) -> Result<WitnessCertificate, ConstructError> {
    if !scheme.covers(graph.order()) {
        return Err(ConstructError::Internal(format!(
            "{construction_id}: partition does not cover K_{}",
            graph.order()
        )));
    }
    verify_free(&graph, pattern)?;
    Ok(WitnessCertificate {
        pattern,
        colors: graph.colors(),
        claimed_bound: graph.order() + 1,
        graph,
        construction_id,
        scheme,
        verified: true,
        seed,
    })
}

fn double_star_pattern(n: usize, m: usize) -> Result<Pattern, ConstructError> {
    Pattern::double_star(n, m).map_err(|e| ConstructError::InvalidArity(e.to_string()))
}

fn to_color(k: usize) -> Result<Color, ConstructError> {
    Color::try_from(k).map_err(|_| ConstructError::InvalidArity(format!("k = {k} is too large")))
}

/// The block layout shared by the odd-`k` constructions: `A` of size
/// `a_size` followed by `V_1..V_k` of size `block`. Edges inside `V_i` and
/// between `V_i` and `A` get color `i`; `V_i`–`V_j` edges get the color of
/// `v_i v_j` in a proper coloring of `K_k` where `v_i` misses color `i`;
/// edges inside `A` get color `k`.
fn odd_block_coloring(
    k: usize,
    a_size: usize,
    block: usize,
) -> Result<(ColoredCompleteGraph, PartitionScheme), ConstructError> {
    debug_assert!(k % 2 == 1);
    let order = a_size + k * block;
    let scheme = PartitionScheme {
        a: (0..a_size).collect(),
        b: Vec::new(),
        v: (0..k)
            .map(|i| (a_size + i * block..a_size + (i + 1) * block).collect())
            .collect(),
    };
    let colors = to_color(k)?;
    if k == 1 {
        return Ok((ColoredCompleteGraph::monochromatic(order, 1, 1)?, scheme));
    }
    let proper = proper_edge_coloring_complete(k);
    // block index (0-based) of a vertex, None for A
    let block_of = |x: usize| (x >= a_size).then(|| (x - a_size) / block);
    let graph =
        ColoredCompleteGraph::from_fn(order, colors, |x, y| match (block_of(x), block_of(y)) {
            (None, None) => colors,
            (None, Some(i)) | (Some(i), None) => (i + 1) as Color,
            (Some(i), Some(j)) if i == j => (i + 1) as Color,
            (Some(i), Some(j)) => proper.color(i, j),
        })?;
    Ok((graph, scheme))
}

/// `S(n,m)`-free `k`-coloring of `K_{kn+m+1}` for odd `k`.
pub fn witness_double_star_odd_k(
    n: usize,
    m: usize,
    k: usize,
) -> Result<WitnessCertificate, ConstructError> {
    let pattern = double_star_pattern(n, m)?;
    if k.is_multiple_of(2) {
        return Err(ConstructError::InvalidArity(format!("k = {k} must be odd")));
    }
    let (graph, scheme) = odd_block_coloring(k, m + 1, n)?;
    certify(pattern, graph, ConstructionId::DoubleStarOddK, scheme, None)
}

/// `S(n,m)`-free `k`-coloring of `K_{(k-1)n+2m+1}` for even `k`: the odd
/// construction with `k - 1` colors plus a block `B` of size `m`, joined to
/// everything else in color `k` and colored `1` inside.
pub fn witness_double_star_even_k(
    n: usize,
    m: usize,
    k: usize,
) -> Result<WitnessCertificate, ConstructError> {
    let pattern = double_star_pattern(n, m)?;
    if k < 2 || k % 2 == 1 {
        return Err(ConstructError::InvalidArity(format!(
            "k = {k} must be even"
        )));
    }
    let (inner, inner_scheme) = odd_block_coloring(k - 1, m + 1, n)?;
    let a_size = m + 1;
    let b = a_size..a_size + m;
    let order = inner.order() + m;
    let colors = to_color(k)?;
    let to_inner = |x: usize| if x < a_size { x } else { x - m };
    let graph = ColoredCompleteGraph::from_fn(order, colors, |x, y| {
        match (b.contains(&x), b.contains(&y)) {
            (true, true) => 1,
            (true, false) | (false, true) => colors,
            (false, false) => inner.color(to_inner(x), to_inner(y)),
        }
    })?;
    let shift = |x: usize| if x < a_size { x } else { x + m };
    let scheme = PartitionScheme {
        a: inner_scheme.a,
        b: b.collect(),
        v: inner_scheme
            .v
            .iter()
            .map(|p| p.iter().map(|&x| shift(x)).collect())
            .collect(),
    };
    certify(
        pattern,
        graph,
        ConstructionId::DoubleStarEvenK,
        scheme,
        None,
    )
}

/// Blocks of size `n+m+1`; the complete multipartite graph between them is
/// split into `k-1` edge-disjoint `n`-factors colored `1..k-1`, and edges
/// inside blocks get color `k`.
fn factor_block_coloring(
    n: usize,
    m: usize,
    k: usize,
    blocks: usize,
    seed: u64,
    id: ConstructionId,
) -> Result<WitnessCertificate, ConstructError> {
    let pattern = double_star_pattern(n, m)?;
    let size = n + m + 1;
    let order = size * blocks;
    let v: Vec<Vec<usize>> = (0..blocks)
        .map(|i| (i * size..(i + 1) * size).collect())
        .collect();
    let host = Graph::complete_multipartite(&v);
    let factorization = decompose_into_n_factors(&host, n, k - 1, seed, DEFAULT_RETRY_BUDGET)?;
    factorization.verify().map_err(ConstructError::Internal)?;
    let colors = to_color(k)?;
    let mut table = vec![vec![colors; order]; order];
    for (i, factor) in factorization.factors.iter().enumerate() {
        for &(x, y) in factor {
            table[x][y] = (i + 1) as Color;
            table[y][x] = (i + 1) as Color;
        }
    }
    let graph = ColoredCompleteGraph::from_fn(order, colors, |x, y| table[x][y])?;
    let scheme = PartitionScheme {
        v,
        ..Default::default()
    };
    certify(pattern, graph, id, scheme, Some(seed))
}

/// `S(n,m)`-free `k`-coloring of `K_{kn+m+1}` when `(n+m+1) | (k-1)` and
/// `n` is even or `m` is odd.
///
/// When `n` and `k` are both odd the order `kn+m+1` is odd, no perfect
/// matchings exist, and the odd-`k` block construction (same order) is
/// returned instead.
pub fn witness_double_star_divisible(
    n: usize,
    m: usize,
    k: usize,
    seed: u64,
) -> Result<WitnessCertificate, ConstructError> {
    double_star_pattern(n, m)?;
    let size = n + m + 1;
    if k < 2 || !(k - 1).is_multiple_of(size) {
        return Err(ConstructError::InvalidArity(format!(
            "k - 1 = {} is not a positive multiple of n + m + 1 = {size}",
            k.saturating_sub(1)
        )));
    }
    if n % 2 == 1 && m.is_multiple_of(2) {
        return Err(ConstructError::InvalidArity(format!(
            "n = {n} is odd and m = {m} is even"
        )));
    }
    if n % 2 == 1 && k % 2 == 1 {
        return witness_double_star_odd_k(n, m, k);
    }
    let ell = (k - 1) / size;
    factor_block_coloring(
        n,
        m,
        k,
        n * ell + 1,
        seed,
        ConstructionId::DoubleStarDivisible,
    )
}

/// `S(n,m)`-free `k`-coloring of `K_{kn+m+1}` when `n` is even, `m` is odd
/// and `(n+m+1)/2 | (k-1)`, on `nℓ/2 + 1` blocks.
pub fn witness_double_star_half_divisible(
    n: usize,
    m: usize,
    k: usize,
    seed: u64,
) -> Result<WitnessCertificate, ConstructError> {
    double_star_pattern(n, m)?;
    if n % 2 == 1 || m.is_multiple_of(2) {
        return Err(ConstructError::InvalidArity(format!(
            "needs n even and m odd (got n = {n}, m = {m})"
        )));
    }
    let half = (n + m).div_ceil(2);
    if k < 2 || !(k - 1).is_multiple_of(half) {
        return Err(ConstructError::InvalidArity(format!(
            "k - 1 = {} is not a positive multiple of (n + m + 1)/2 = {half}",
            k.saturating_sub(1)
        )));
    }
    let ell = (k - 1) / half;
    factor_block_coloring(
        n,
        m,
        k,
        n * ell / 2 + 1,
        seed,
        ConstructionId::DoubleStarHalfDivisible,
    )
}

/// A `k`-coloring of `K_order` in which every color class has maximum degree
/// at most `n - 1`, hence `K_{1,n}`-free.
///
/// Up to `k(n-1)` vertices the matching classes of a proper edge coloring are
/// bundled `n - 1` at a time. At `k(n-1)+1` vertices every class must be
/// `(n-1)`-regular, which needs `(n-1)·order` even: perfect matchings are
/// bundled when the order is even, 2-factors of `K_order` when it is odd.
pub fn witness_star(
    n: usize,
    k: usize,
    order: usize,
) -> Result<WitnessCertificate, ConstructError> {
    let pattern = Pattern::star(n).map_err(|e| ConstructError::InvalidArity(e.to_string()))?;
    if k == 0 || order == 0 {
        return Err(ConstructError::InvalidArity(
            "k and order must be positive".into(),
        ));
    }
    let colors = to_color(k)?;
    let cap = k * (n - 1);
    let scheme = PartitionScheme {
        v: vec![(0..order).collect()],
        ..Default::default()
    };
    if order == 1 {
        let graph = ColoredCompleteGraph::monochromatic(1, colors, 1)?;
        return certify(pattern, graph, ConstructionId::StarBundles, scheme, None);
    }
    if order > cap + 1 {
        return Err(ConstructError::Infeasible(format!(
            "order {order} exceeds k(n-1)+1 = {}",
            cap + 1
        )));
    }
    let classes: Vec<Vec<(usize, usize)>> = if order <= cap || order.is_multiple_of(2) {
        proper_edge_coloring_complete(order).classes()
    } else if (n - 1).is_multiple_of(2) {
        two_factorization(&Graph::complete(order))?.factors
    } else {
        return Err(ConstructError::Infeasible(format!(
            "each color class would have to be {}-regular on {order} vertices, but (n-1)*order is odd",
            n - 1
        )));
    };
    let per_color = if order <= cap || order.is_multiple_of(2) {
        n - 1
    } else {
        (n - 1) / 2
    };
    let mut table = vec![vec![0 as Color; order]; order];
    for (j, class) in classes.iter().enumerate() {
        let c = (j / per_color + 1) as Color;
        for &(x, y) in class {
            table[x][y] = c;
            table[y][x] = c;
        }
    }
    let graph = ColoredCompleteGraph::from_fn(order, colors, |x, y| table[x][y])?;
    certify(pattern, graph, ConstructionId::StarBundles, scheme, None)
}

/// Largest order `witness_star` accepts for `(n, k)`.
pub fn max_star_witness_order(n: usize, k: usize) -> usize {
    let cap = k * (n - 1);
    let top = cap + 1;
    if top == 1 || top.is_multiple_of(2) || (n - 1).is_multiple_of(2) {
        top
    } else {
        cap
    }
}

/// The largest star witness for the biggest star inside `pattern`:
/// `K_{1,n+1}` in `S(n,m)`, `K_{1,n}` in `S_n^m` and in `K_{1,n}` itself.
pub fn witness_star_relaxation(
    pattern: Pattern,
    k: usize,
) -> Result<WitnessCertificate, ConstructError> {
    let pattern = pattern
        .validated()
        .map_err(|e| ConstructError::InvalidArity(e.to_string()))?;
    let s = match pattern {
        Pattern::Star { n } | Pattern::SubdividedStar { n, .. } => n,
        Pattern::DoubleStar { n, .. } => n + 1,
    };
    if k == 0 {
        return Err(ConstructError::InvalidArity("k must be positive".into()));
    }
    let star = witness_star(s, k, max_star_witness_order(s, k))?;
    certify(
        pattern,
        star.graph,
        ConstructionId::StarRelaxation,
        star.scheme,
        None,
    )
}

/// `S_n^m`-free `k`-coloring of `K_{k(n-1)+m+1}` for odd `k`: the odd-`k`
/// block layout with `|A| = m+1` and `|V_i| = n-1`.
pub fn witness_substar(n: usize, m: usize, k: usize) -> Result<WitnessCertificate, ConstructError> {
    let pattern =
        Pattern::subdivided_star(n, m).map_err(|e| ConstructError::InvalidArity(e.to_string()))?;
    if k.is_multiple_of(2) {
        return Err(ConstructError::InvalidArity(format!("k = {k} must be odd")));
    }
    let (graph, scheme) = odd_block_coloring(k, m + 1, n - 1)?;
    certify(pattern, graph, ConstructionId::SubstarOddK, scheme, None)
}

/// `S_n^m`-free 2-coloring of `K_{n+2m}`: blocks `A` (`n+m` vertices) and
/// `B` (`m` vertices) are red cliques joined by blue edges. Requires `m < n`;
/// at `m = n` the blue edges contain `S_n^n` centered in `A`.
pub fn witness_substar_2color(n: usize, m: usize) -> Result<WitnessCertificate, ConstructError> {
    let pattern =
        Pattern::subdivided_star(n, m).map_err(|e| ConstructError::InvalidArity(e.to_string()))?;
    if m >= n {
        return Err(ConstructError::InvalidArity(format!(
            "two-color construction needs m < n (got n = {n}, m = {m})"
        )));
    }
    let a_size = n + m;
    let order = a_size + m;
    let graph =
        ColoredCompleteGraph::from_fn(
            order,
            2,
            |x, y| {
                if (x < a_size) == (y < a_size) {
                    1
                } else {
                    2
                }
            },
        )?;
    let scheme = PartitionScheme {
        a: (0..a_size).collect(),
        b: (a_size..order).collect(),
        v: Vec::new(),
    };
    certify(
        pattern,
        graph,
        ConstructionId::SubstarTwoColor,
        scheme,
        None,
    )
}

/// Runs one named construction. `order` applies to the star construction
/// only (default: the largest feasible order).
pub fn build_witness(
    id: ConstructionId,
    pattern: Pattern,
    k: usize,
    order: Option<usize>,
    seed: u64,
) -> Result<WitnessCertificate, ConstructError> {
    let pattern = pattern
        .validated()
        .map_err(|e| ConstructError::InvalidArity(e.to_string()))?;
    let mismatch = || ConstructError::InvalidArity(format!("{id} does not build {pattern}"));
    match (id, pattern) {
        (ConstructionId::DoubleStarOddK, Pattern::DoubleStar { n, m }) => {
            witness_double_star_odd_k(n, m, k)
        }
        (ConstructionId::DoubleStarEvenK, Pattern::DoubleStar { n, m }) => {
            witness_double_star_even_k(n, m, k)
        }
        (ConstructionId::DoubleStarDivisible, Pattern::DoubleStar { n, m }) => {
            witness_double_star_divisible(n, m, k, seed)
        }
        (ConstructionId::DoubleStarHalfDivisible, Pattern::DoubleStar { n, m }) => {
            witness_double_star_half_divisible(n, m, k, seed)
        }
        (ConstructionId::StarRelaxation, p) => witness_star_relaxation(p, k),
        (ConstructionId::StarBundles, Pattern::Star { n }) => {
            witness_star(n, k, order.unwrap_or_else(|| max_star_witness_order(n, k)))
        }
        (ConstructionId::SubstarOddK, Pattern::SubdividedStar { n, m }) => witness_substar(n, m, k),
        (ConstructionId::SubstarTwoColor, Pattern::SubdividedStar { n, m }) if k == 2 => {
            witness_substar_2color(n, m)
        }
        _ => Err(mismatch()),
    }
}

/// The largest verified witness among all constructions that apply to
/// `pattern` and `k`; ties go to the earlier entry of [`ConstructionId::ALL`].
/// Stars use the star construction directly rather than its relaxation.
pub fn best_witness(
    pattern: Pattern,
    k: usize,
    seed: u64,
) -> Result<WitnessCertificate, ConstructError> {
    let mut best: Option<WitnessCertificate> = None;
    let mut last_err = None;
    for id in ConstructionId::ALL {
        if id == ConstructionId::StarRelaxation && matches!(pattern, Pattern::Star { .. }) {
            continue;
        }
        match build_witness(id, pattern, k, None, seed) {
            Ok(w) => {
                if best
                    .as_ref()
                    .is_none_or(|b| w.graph.order() > b.graph.order())
                {
                    best = Some(w);
                }
            }
            Err(e @ ConstructError::Internal(_)) => return Err(e),
            Err(e) => last_err = Some(e),
        }
    }
    best.ok_or_else(|| {
        last_err
            .unwrap_or_else(|| ConstructError::Infeasible(format!("no construction for {pattern}")))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListBranch {
    /// Constant lists: an ordinary `P_4`-free `p`-coloring, relabeled.
    Constant,
    /// Edges at this vertex get distinct colors; the rest is a proper list
    /// edge coloring of `K_{p+1}`.
    RainbowVertex(usize),
}

/// A `P_4`-free coloring of `K_{p+2}` respecting a list assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListWitness {
    pub p: usize,
    pub graph: ColoredCompleteGraph,
    pub branch: ListBranch,
    pub verified: bool,
}

fn is_odd_prime(p: usize) -> bool {
    p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `P_4`-free `L`-coloring of `K_{p+2}` for an odd prime `p` and lists of
/// size `p`.
pub fn witness_list_p4(p: usize, lists: &ListAssignment) -> Result<ListWitness, ConstructError> {
    if !is_odd_prime(p) {
        return Err(ConstructError::NotOddPrime(p));
    }
    if lists.size() != p {
        return Err(ConstructError::ListSizeMismatch {
            expected: p,
            found: lists.size(),
        });
    }
    let order = p + 2;
    if lists.order() != order {
        return Err(ConstructError::InvalidArity(format!(
            "lists are on K_{}, expected K_{order}",
            lists.order()
        )));
    }
    let universe = lists.universe();

    let (graph, branch) = if lists.is_constant() {
        let palette = lists.list(0, 1).to_vec();
        let outcome =
            exists_free_coloring(order, to_color(p)?, Pattern::p4(), SearchOptions::default())?;
        let Verdict::Free(plain) = outcome.verdict else {
            return Err(ConstructError::Internal(format!(
                "no P_4-free {p}-coloring of K_{order}"
            )));
        };
        let graph = ColoredCompleteGraph::from_fn(order, universe, |x, y| {
            palette[plain.color(x, y) as usize - 1]
        })?;
        (graph, ListBranch::Constant)
    } else {
        let u = (0..order)
            .find(|&u| {
                let mut seen: Vec<Color> = (0..order)
                    .filter(|&v| v != u)
                    .flat_map(|v| lists.list(u, v).iter().copied())
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                seen.len() > p
            })
            .ok_or_else(|| {
                ConstructError::Internal(
                    "non-constant lists without a vertex seeing p+1 colors".into(),
                )
            })?;
        let others: Vec<usize> = (0..order).filter(|&v| v != u).collect();
        // distinct representatives for the edges at u
        let adj: Vec<Vec<usize>> = others
            .iter()
            .map(|&v| lists.list(u, v).iter().map(|&c| c as usize).collect())
            .collect();
        let sdr = hopcroft_karp(universe as usize + 1, &adj);
        if sdr.size() != others.len() {
            return Err(ConstructError::Internal(format!(
                "edges at vertex {u} have no system of distinct colors"
            )));
        }
        let rest = ListAssignment::from_fn(p + 1, |x, y| lists.list(others[x], others[y]).to_vec())
            .map_err(|e| ConstructError::Internal(e.to_string()))?;
        let ListEdgeColoring::Colored(inner) = list_edge_coloring(&rest, u64::MAX)? else {
            return Err(ConstructError::Internal(format!(
                "K_{} has no proper coloring from its lists",
                p + 1
            )));
        };
        let local = |x: usize| if x < u { x } else { x - 1 };
        let graph = ColoredCompleteGraph::from_fn(order, universe, |x, y| {
            if x == u || y == u {
                let other = if x == u { y } else { x };
                sdr.mate_left[local(other)].expect("perfect SDR") as Color
            } else {
                inner.color(local(x), local(y))
            }
        })?;
        (graph, ListBranch::RainbowVertex(u))
    };

    if !lists.respects(&graph) {
        return Err(ConstructError::Internal("coloring leaves its lists".into()));
    }
    verify_free(&graph, Pattern::p4())?;
    Ok(ListWitness {
        p,
        graph,
        branch,
        verified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_k_trivial_case() {
        let w = witness_double_star_odd_k(1, 1, 1).unwrap();
        assert_eq!(w.graph.order(), 3);
        assert_eq!(w.claimed_bound, 4);
    }

    #[test]
    fn odd_k_color_degree_in_v1() {
        let w = witness_double_star_odd_k(3, 1, 3).unwrap();
        assert_eq!(w.graph.order(), 11);
        assert_eq!(w.claimed_bound, 12);
        let v1 = w.scheme.v[0][0];
        assert_eq!(w.graph.color_degree(v1, 1), (3 - 1) + (1 + 1));
    }

    #[test]
    fn odd_k_components_have_n_plus_m_plus_1_vertices() {
        let (n, m, k) = (4, 2, 5);
        let w = witness_double_star_odd_k(n, m, k).unwrap();
        for (i, block) in w.scheme.v.iter().enumerate() {
            let c = (i + 1) as Color;
            // BFS over color-c edges from the block
            let mut seen = vec![false; w.graph.order()];
            let mut stack = vec![block[0]];
            seen[block[0]] = true;
            while let Some(x) = stack.pop() {
                for y in w.graph.color_neighbors(x, c) {
                    if !std::mem::replace(&mut seen[y], true) {
                        stack.push(y);
                    }
                }
            }
            assert_eq!(seen.iter().filter(|&&s| s).count(), n + m + 1);
        }
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(
            witness_double_star_odd_k(3, 1, 4),
            Err(ConstructError::InvalidArity(_))
        ));
        assert!(matches!(
            witness_double_star_odd_k(1, 2, 3),
            Err(ConstructError::InvalidArity(_))
        ));
        assert!(matches!(
            witness_double_star_even_k(3, 1, 3),
            Err(ConstructError::InvalidArity(_))
        ));
        assert!(matches!(
            witness_double_star_divisible(3, 2, 2, 0),
            Err(ConstructError::InvalidArity(_))
        ));
        assert!(matches!(
            witness_double_star_half_divisible(3, 1, 4, 0),
            Err(ConstructError::InvalidArity(_))
        ));
        assert!(matches!(
            witness_substar_2color(3, 3),
            Err(ConstructError::InvalidArity(_))
        ));
        assert!(matches!(
            witness_substar(3, 1, 2),
            Err(ConstructError::InvalidArity(_))
        ));
    }

    #[test]
    fn star_witness_cases() {
        let w = witness_star(3, 2, 4).unwrap();
        assert!((0..4).all(|v| (1..=2).all(|c| w.graph.color_degree(v, c) <= 2)));
        let w = witness_star(3, 2, 5).unwrap();
        assert!((0..5).all(|v| (1..=2).all(|c| w.graph.color_degree(v, c) == 2)));
        assert!(matches!(
            witness_star(2, 2, 3),
            Err(ConstructError::Infeasible(_))
        ));
        assert!(matches!(
            witness_star(3, 2, 6),
            Err(ConstructError::Infeasible(_))
        ));
        // both even: k(n-1)+1 = 7 is odd and n-1 = 3 is odd
        assert_eq!(max_star_witness_order(4, 2), 6);
        assert!(witness_star(4, 2, 6).is_ok());
        assert!(matches!(
            witness_star(4, 2, 7),
            Err(ConstructError::Infeasible(_))
        ));
    }

    #[test]
    fn best_witness_picks_largest() {
        let w = best_witness(Pattern::DoubleStar { n: 3, m: 1 }, 3, 0).unwrap();
        assert_eq!(w.graph.order(), 11);
        let w = best_witness(Pattern::DoubleStar { n: 2, m: 2 }, 6, 0).unwrap();
        assert_eq!(w.graph.order(), 15);
        let w = best_witness(Pattern::Star { n: 3 }, 2, 0).unwrap();
        assert_eq!(w.graph.order(), 5);
        assert_eq!(w.construction_id, ConstructionId::StarBundles);
        let w = best_witness(Pattern::SubdividedStar { n: 3, m: 2 }, 2, 0).unwrap();
        assert_eq!(w.construction_id, ConstructionId::SubstarTwoColor);
        assert!(matches!(
            build_witness(
                ConstructionId::SubstarOddK,
                Pattern::Star { n: 2 },
                3,
                None,
                0
            ),
            Err(ConstructError::InvalidArity(_))
        ));
    }

    #[test]
    fn list_witness_rejects_non_primes() {
        let lists = ListAssignment::constant(4, &[1, 2]).unwrap();
        assert_eq!(
            witness_list_p4(2, &lists),
            Err(ConstructError::NotOddPrime(2))
        );
        let lists = ListAssignment::constant(5, &[1, 2]).unwrap();
        assert_eq!(
            witness_list_p4(3, &lists),
            Err(ConstructError::ListSizeMismatch {
                expected: 3,
                found: 2
            })
        );
        assert!(is_odd_prime(3) && is_odd_prime(7) && !is_odd_prime(9) && !is_odd_prime(1));
    }

    #[test]
    fn constant_lists_use_search() {
        let lists = ListAssignment::constant(5, &[2, 5, 9]).unwrap();
        let w = witness_list_p4(3, &lists).unwrap();
        assert_eq!(w.branch, ListBranch::Constant);
        assert!(lists.respects(&w.graph));
    }
}
