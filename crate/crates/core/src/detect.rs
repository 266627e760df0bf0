//! Exact detectors for monochromatic stars, double stars and subdivided stars,
//! plus an exhaustive brute-force oracle.
//!
//! All detectors scan in a fixed order (vertex index, then color index) and
//! return the first witness they meet, so results are reproducible.

use thiserror::Error;

use crate::coloring::{Color, ColoredCompleteGraph, Embedding, Pattern};
use crate::matching::{hopcroft_karp, next_combination};

/// Default vertex cutoff for [`brute_force_find`].
pub const BRUTE_FORCE_CUTOFF: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("brute force refused K_{order}: cutoff is {cutoff} vertices")]
    InstanceTooLarge { order: usize, cutoff: usize },
}

/// Dispatches to the specialized detector for `pattern`.
pub fn find_mono(g: &ColoredCompleteGraph, pattern: Pattern) -> Option<Embedding> {
    match pattern {
        Pattern::Star { n } => find_mono_star(g, n),
        Pattern::DoubleStar { n, m } => find_mono_double_star(g, n, m),
        Pattern::SubdividedStar { n, m } => find_mono_subdivided_star(g, n, m),
    }
}

/// Monochromatic `K_{1,n}`: the least `(v, c)` with `color_degree(v, c) >= n`.
pub fn find_mono_star(g: &ColoredCompleteGraph, n: usize) -> Option<Embedding> {
    assert!(n >= 1, "star needs n >= 1");
    for v in 0..g.order() {
        for c in 1..=g.colors() {
            let nb = g.color_neighbors(v, c);
            if nb.len() >= n {
                return Some(Embedding::star(c, v, &nb[..n]));
            }
        }
    }
    None
}

/// Monochromatic `S(n, m)`.
///
/// For an edge `uv` of color `c`, with `a = |N_c(u) - v|`, `b = |N_c(v) - u|`
/// and `t` common `c`-neighbors, a copy with major center `u` and minor center
/// `v` exists iff `a >= n`, `b >= m` and `a + b - t >= n + m`.
pub fn find_mono_double_star(g: &ColoredCompleteGraph, n: usize, m: usize) -> Option<Embedding> {
    assert!(n >= m && m >= 1, "double star needs n >= m >= 1");
    let order = g.order();
    if order < n + m + 2 {
        return None;
    }
    for u in 0..order {
        for v in 0..order {
            if u == v {
                continue;
            }
            let c = g.color(u, v);
            if let Some(e) = double_star_at(g, u, v, c, n, m) {
                return Some(e);
            }
        }
    }
    None
}

fn double_star_at(
    g: &ColoredCompleteGraph,
    u: usize,
    v: usize,
    c: Color,
    n: usize,
    m: usize,
) -> Option<Embedding> {
    let mut private_u = Vec::new();
    let mut private_v = Vec::new();
    let mut common = Vec::new();
    for w in 0..g.order() {
        if w == u || w == v {
            continue;
        }
        match (g.color(u, w) == c, g.color(v, w) == c) {
            (true, true) => common.push(w),
            (true, false) => private_u.push(w),
            (false, true) => private_v.push(w),
            (false, false) => {}
        }
    }
    let a = private_u.len() + common.len();
    let b = private_v.len() + common.len();
    if a < n || b < m || a + b - common.len() < n + m {
        return None;
    }
    let mut major_leaves: Vec<usize> = private_u.iter().copied().take(n).collect();
    let from_common = n - major_leaves.len();
    major_leaves.extend_from_slice(&common[..from_common]);
    let mut minor_leaves: Vec<usize> = private_v.iter().copied().take(m).collect();
    let rest = m - minor_leaves.len();
    minor_leaves.extend_from_slice(&common[from_common..from_common + rest]);
    Some(Embedding::double_star(
        c,
        (u, v),
        &major_leaves,
        &minor_leaves,
    ))
}

/// Monochromatic `S_n^m`.
///
/// For each center `x` and color `c` with `S = N_c(x)`, `|S| >= n`: some set
/// `R ⊆ S` with `|R| <= min(|S| - n, m)` is released from leaf duty, and a
/// bipartite matching of size `m` is sought between candidate leaves `S - R`
/// and candidate subdivision vertices `(V - S - x) ∪ R`. This is exhaustive:
/// any copy determines such an `R` (the subdivision vertices lying in `S`).
pub fn find_mono_subdivided_star(
    g: &ColoredCompleteGraph,
    n: usize,
    m: usize,
) -> Option<Embedding> {
    assert!(
        n >= 2 && n >= m && m >= 1,
        "subdivided star needs n >= 2, n >= m >= 1"
    );
    let order = g.order();
    if order < n + m + 1 {
        return None;
    }
    for x in 0..order {
        for c in 1..=g.colors() {
            let s = g.color_neighbors(x, c);
            if s.len() < n {
                continue;
            }
            if let Some(e) = subdivided_star_at(g, x, c, &s, n, m) {
                return Some(e);
            }
        }
    }
    None
}

fn subdivided_star_at(
    g: &ColoredCompleteGraph,
    x: usize,
    c: Color,
    s: &[usize],
    n: usize,
    m: usize,
) -> Option<Embedding> {
    let order = g.order();
    let mut in_s = vec![false; order];
    for &y in s {
        in_s[y] = true;
    }
    let outside: Vec<usize> = (0..order).filter(|&w| w != x && !in_s[w]).collect();
    let max_release = (s.len() - n).min(m);

    for r in 0..=max_release {
        let mut idx: Vec<usize> = (0..r).collect();
        loop {
            let mut released = vec![false; order];
            for &i in &idx {
                released[s[i]] = true;
            }
            let left: Vec<usize> = s.iter().copied().filter(|&y| !released[y]).collect();
            let right: Vec<usize> = outside
                .iter()
                .copied()
                .chain(idx.iter().map(|&i| s[i]))
                .collect();
            let adj: Vec<Vec<usize>> = left
                .iter()
                .map(|&y| {
                    right
                        .iter()
                        .enumerate()
                        .filter(|&(_, &z)| g.color(y, z) == c)
                        .map(|(j, _)| j)
                        .collect()
                })
                .collect();
            let matching = hopcroft_karp(right.len(), &adj);
            if matching.size() >= m {
                let legs: Vec<(usize, usize)> = matching
                    .pairs()
                    .take(m)
                    .map(|(l, r)| (left[l], right[r]))
                    .collect();
                let plain: Vec<usize> = left
                    .iter()
                    .copied()
                    .filter(|y| !legs.iter().any(|&(leg, _)| leg == *y))
                    .take(n - m)
                    .collect();
                return Some(Embedding::subdivided_star(c, x, &legs, &plain));
            }
            if !next_combination(&mut idx, s.len()) {
                break;
            }
        }
    }
    None
}

/// Exhaustive search over injective vertex maps, one color at a time, with
/// the default cutoff of [`BRUTE_FORCE_CUTOFF`] vertices.
pub fn brute_force_find(
    g: &ColoredCompleteGraph,
    pattern: Pattern,
) -> Result<Option<Embedding>, DetectError> {
    brute_force_find_with_cutoff(g, pattern, BRUTE_FORCE_CUTOFF)
}

pub fn brute_force_find_with_cutoff(
    g: &ColoredCompleteGraph,
    pattern: Pattern,
    cutoff: usize,
) -> Result<Option<Embedding>, DetectError> {
    if g.order() > cutoff {
        return Err(DetectError::InstanceTooLarge {
            order: g.order(),
            cutoff,
        });
    }
    let slots = pattern.vertex_count();
    if slots > g.order() {
        return Ok(None);
    }
    // back[s]: earlier slots adjacent to slot s.
    let mut back = vec![Vec::new(); slots];
    for (a, b) in pattern.edges() {
        let (lo, hi) = (a.min(b), a.max(b));
        back[hi].push(lo);
    }
    // Interchangeable slots (pattern automorphisms) are forced increasing.
    let mut prev_same = vec![None; slots];
    let mut chain = |range: std::ops::Range<usize>| {
        for s in range.clone().skip(1) {
            prev_same[s] = Some(s - 1);
        }
    };
    match pattern {
        Pattern::Star { n } => chain(1..n + 1),
        Pattern::DoubleStar { n, m } => {
            chain(2..2 + n);
            chain(2 + n..2 + n + m);
        }
        Pattern::SubdividedStar { n, m } => {
            chain(1..m + 1);
            chain(m + 1..n + 1);
        }
    }

    let mut map = vec![usize::MAX; slots];
    let mut used = vec![false; g.order()];
    for c in 1..=g.colors() {
        let search = Backtrack {
            g,
            color: c,
            back: &back,
            prev_same: &prev_same,
        };
        if search.place(0, &mut map, &mut used) {
            return Ok(Some(Embedding {
                color: c,
                pattern,
                vertex_map: map,
            }));
        }
    }
    Ok(None)
}

struct Backtrack<'a> {
    g: &'a ColoredCompleteGraph,
    color: Color,
    back: &'a [Vec<usize>],
    prev_same: &'a [Option<usize>],
}

impl Backtrack<'_> {
    fn place(&self, slot: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if slot == map.len() {
            return true;
        }
        let start = self.prev_same[slot].map_or(0, |p| map[p] + 1);
        for v in start..self.g.order() {
            if used[v] {
                continue;
            }
            if self.back[slot]
                .iter()
                .any(|&p| self.g.color(map[p], v) != self.color)
            {
                continue;
            }
            map[slot] = v;
            used[v] = true;
            if self.place(slot + 1, map, used) {
                return true;
            }
            used[v] = false;
        }
        false
    }
}
