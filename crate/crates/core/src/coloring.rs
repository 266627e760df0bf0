//! Edge-colored complete graphs, target patterns and embeddings.
//!
//! Colors are 1-based (`1..=k`); vertices are 0-based (`0..order`).

use std::fmt;

use thiserror::Error;

/// An edge color in `1..=k`.
pub type Color = u16;

/// Index of the unordered pair `{u, v}` in the triangular table.
#[inline]
pub(crate) fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

#[inline]
pub(crate) fn pair_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("color count must be at least 1")]
    NoColors,
    #[error("edge {{{u},{v}}} is missing")]
    MissingEdge { u: usize, v: usize },
    #[error("edge {{{u},{v}}} is listed more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {{{u},{v}}} has color {color}, outside 1..={colors}")]
    ColorOutOfRange {
        u: usize,
        v: usize,
        color: Color,
        colors: Color,
    },
    #[error("edge {{{u},{v}}} names a vertex outside 0..{order}")]
    VertexOutOfRange { u: usize, v: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A complete graph `K_N` together with a (not necessarily proper)
/// `k`-edge-coloring. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredCompleteGraph {
    order: usize,
    colors: Color,
    table: Vec<Color>,
}

impl fmt::Debug for ColoredCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ColoredCompleteGraph(K_{}, k={}) [",
            self.order, self.colors
        )?;
        for (i, (u, v, c)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{v}:{c}")?;
        }
        f.write_str("]")
    }
}

impl ColoredCompleteGraph {
    /// Builds a graph from an explicit edge list that must cover every
    /// unordered pair exactly once.
    pub fn build<I>(order: usize, colors: Color, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        check_header(order, colors)?;
        let mut table = vec![0 as Color; pair_count(order)];
        for (u, v, c) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange { u, v, order });
            }
            let (u, v) = (u.min(v), u.max(v));
            if c == 0 || c > colors {
                return Err(GraphError::ColorOutOfRange {
                    u,
                    v,
                    color: c,
                    colors,
                });
            }
            let slot = &mut table[pair_index(u, v)];
            if *slot != 0 {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            *slot = c;
        }
        for u in 0..order {
            for v in u + 1..order {
                if table[pair_index(u, v)] == 0 {
                    return Err(GraphError::MissingEdge { u, v });
                }
            }
        }
        Ok(Self {
            order,
            colors,
            table,
        })
    }

    /// Builds a graph by evaluating `color_of(u, v)` for every pair `u < v`.
    pub fn from_fn<F>(order: usize, colors: Color, mut color_of: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> Color,
    {
        check_header(order, colors)?;
        let mut table = vec![0 as Color; pair_count(order)];
        for u in 0..order {
            for v in u + 1..order {
                let c = color_of(u, v);
                if c == 0 || c > colors {
                    return Err(GraphError::ColorOutOfRange {
                        u,
                        v,
                        color: c,
                        colors,
                    });
                }
                table[pair_index(u, v)] = c;
            }
        }
        Ok(Self {
            order,
            colors,
            table,
        })
    }

    pub fn monochromatic(order: usize, colors: Color, color: Color) -> Result<Self, GraphError> {
        Self::from_fn(order, colors, |_, _| color)
    }

    /// Returns a copy with the single edge `{u, v}` recolored.
    pub fn recolored(&self, u: usize, v: usize, color: Color) -> Result<Self, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u >= self.order || v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                u,
                v,
                order: self.order,
            });
        }
        if color == 0 || color > self.colors {
            return Err(GraphError::ColorOutOfRange {
                u,
                v,
                color,
                colors: self.colors,
            });
        }
        let mut out = self.clone();
        out.table[pair_index(u, v)] = color;
        Ok(out)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn colors(&self) -> Color {
        self.colors
    }

    /// Color of the edge `{u, v}`. Panics if `u == v` or either is out of range.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        assert!(
            u != v && u < self.order && v < self.order,
            "no edge {{{u},{v}}}"
        );
        self.table[pair_index(u, v)]
    }

    /// All edges `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (0..self.order).flat_map(move |u| {
            (u + 1..self.order).map(move |v| (u, v, self.table[pair_index(u, v)]))
        })
    }

    pub fn color_degree(&self, v: usize, c: Color) -> usize {
        (0..self.order)
            .filter(|&u| u != v && self.table[pair_index(u, v)] == c)
            .count()
    }

    /// Neighbors of `v` along edges of color `c`, in increasing order.
    pub fn color_neighbors(&self, v: usize, c: Color) -> Vec<usize> {
        (0..self.order)
            .filter(|&u| u != v && self.table[pair_index(u, v)] == c)
            .collect()
    }

    /// `{ w ∉ {u,v} : τ(uw) = c and τ(vw) = c }`, in increasing order.
    pub fn common_color_neighbors(&self, u: usize, v: usize, c: Color) -> Vec<usize> {
        (0..self.order)
            .filter(|&w| {
                w != u
                    && w != v
                    && self.table[pair_index(u, w)] == c
                    && self.table[pair_index(v, w)] == c
            })
            .collect()
    }

    /// Checks that `e` is an injective, monochromatic copy of its pattern.
    pub fn validate_embedding(&self, e: &Embedding) -> Result<(), EmbeddingDefect> {
        let expected = e.pattern.vertex_count();
        if e.vertex_map.len() != expected {
            return Err(EmbeddingDefect::WrongLength {
                expected,
                found: e.vertex_map.len(),
            });
        }
        if e.color == 0 || e.color > self.colors {
            return Err(EmbeddingDefect::ColorOutOfRange(e.color));
        }
        let mut seen = vec![false; self.order];
        for &v in &e.vertex_map {
            if v >= self.order {
                return Err(EmbeddingDefect::VertexOutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(EmbeddingDefect::NotInjective(v));
            }
        }
        for (a, b) in e.pattern.edges() {
            let (u, v) = (e.vertex_map[a], e.vertex_map[b]);
            let found = self.color(u, v);
            if found != e.color {
                return Err(EmbeddingDefect::WrongColor {
                    u,
                    v,
                    expected: e.color,
                    found,
                });
            }
        }
        Ok(())
    }
}

fn check_header(order: usize, colors: Color) -> Result<(), GraphError> {
    if order == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if colors == 0 {
        return Err(GraphError::NoColors);
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("star needs n >= 1 (got {0})")]
    Star(usize),
    #[error("double star needs n >= m >= 1 (got n={n}, m={m})")]
    DoubleStar { n: usize, m: usize },
    #[error("subdivided star needs n >= 2 and n >= m >= 1 (got n={n}, m={m})")]
    SubdividedStar { n: usize, m: usize },
}

/// The target graph `H`.
///
/// Pattern vertices are numbered centers first, then leaves, then
/// subdivision vertices:
///
/// * `Star(n)`: `0` is the center, `1..=n` the leaves.
/// * `DoubleStar(n, m)`: `0` is the major center `u`, `1` the minor center `v`,
///   `2..2+n` the leaves of `u`, `2+n..2+n+m` the leaves of `v`.
/// * `SubdividedStar(n, m)`: `0` is the center `x`, `1..=n` are `y_1..y_n`,
///   `n+1..=n+m` are `z_1..z_m` with `z_i` attached to `y_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    Star { n: usize },
    DoubleStar { n: usize, m: usize },
    SubdividedStar { n: usize, m: usize },
}

impl Pattern {
    pub fn star(n: usize) -> Result<Self, PatternError> {
        Pattern::Star { n }.validated()
    }

    pub fn double_star(n: usize, m: usize) -> Result<Self, PatternError> {
        Pattern::DoubleStar { n, m }.validated()
    }

    pub fn subdivided_star(n: usize, m: usize) -> Result<Self, PatternError> {
        Pattern::SubdividedStar { n, m }.validated()
    }

    /// `P_4 = S(1,1)`.
    pub fn p4() -> Self {
        Pattern::DoubleStar { n: 1, m: 1 }
    }

    pub fn validated(self) -> Result<Self, PatternError> {
        match self {
            Pattern::Star { n } if n == 0 => Err(PatternError::Star(n)),
            Pattern::DoubleStar { n, m } if m == 0 || n < m => {
                Err(PatternError::DoubleStar { n, m })
            }
            Pattern::SubdividedStar { n, m } if n < 2 || m == 0 || n < m => {
                Err(PatternError::SubdividedStar { n, m })
            }
            p => Ok(p),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Star { n } => n + 1,
            Pattern::DoubleStar { n, m } => n + m + 2,
            Pattern::SubdividedStar { n, m } => n + m + 1,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - 1
    }

    /// Pattern edges as pairs of slots into an embedding's `vertex_map`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            Pattern::Star { n } => (1..=n).map(|i| (0, i)).collect(),
            Pattern::DoubleStar { n, m } => std::iter::once((0, 1))
                .chain((0..n).map(|i| (0, 2 + i)))
                .chain((0..m).map(|j| (1, 2 + n + j)))
                .collect(),
            Pattern::SubdividedStar { n, m } => (1..=n)
                .map(|i| (0, i))
                .chain((1..=m).map(|i| (i, n + i)))
                .collect(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Star { n } => write!(f, "K_{{1,{n}}}"),
            Pattern::DoubleStar { n: 1, m: 1 } => f.write_str("P_4"),
            Pattern::DoubleStar { n, m } => write!(f, "S({n},{m})"),
            Pattern::SubdividedStar { n, m } => write!(f, "S_{n}^{m}"),
        }
    }
}

/// A monochromatic copy of a pattern: `vertex_map[slot]` is the graph vertex
/// hosting pattern vertex `slot` (see [`Pattern`] for the slot layout).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub color: Color,
    pub pattern: Pattern,
    pub vertex_map: Vec<usize>,
}

impl Embedding {
    pub fn star(color: Color, center: usize, leaves: &[usize]) -> Self {
        let mut vertex_map = Vec::with_capacity(leaves.len() + 1);
        vertex_map.push(center);
        vertex_map.extend_from_slice(leaves);
        Embedding {
            color,
            pattern: Pattern::Star { n: leaves.len() },
            vertex_map,
        }
    }

    pub fn double_star(
        color: Color,
        (major, minor): (usize, usize),
        major_leaves: &[usize],
        minor_leaves: &[usize],
    ) -> Self {
        let mut vertex_map = vec![major, minor];
        vertex_map.extend_from_slice(major_leaves);
        vertex_map.extend_from_slice(minor_leaves);
        Embedding {
            color,
            pattern: Pattern::DoubleStar {
                n: major_leaves.len(),
                m: minor_leaves.len(),
            },
            vertex_map,
        }
    }

    /// `legs` are the subdivided edges `(y_i, z_i)`; `plain` the remaining
    /// leaves of the center.
    pub fn subdivided_star(
        color: Color,
        center: usize,
        legs: &[(usize, usize)],
        plain: &[usize],
    ) -> Self {
        let mut vertex_map = vec![center];
        vertex_map.extend(legs.iter().map(|&(y, _)| y));
        vertex_map.extend_from_slice(plain);
        vertex_map.extend(legs.iter().map(|&(_, z)| z));
        Embedding {
            color,
            pattern: Pattern::SubdividedStar {
                n: legs.len() + plain.len(),
                m: legs.len(),
            },
            vertex_map,
        }
    }

    /// Graph edges used by this copy.
    pub fn graph_edges(&self) -> Vec<(usize, usize)> {
        self.pattern
            .edges()
            .into_iter()
            .map(|(a, b)| (self.vertex_map[a], self.vertex_map[b]))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingDefect {
    #[error("vertex map has {found} entries, pattern needs {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
    #[error("color {0} is not in the palette")]
    ColorOutOfRange(Color),
    #[error("vertex {0} is used twice")]
    NotInjective(usize),
    #[error("edge {{{u},{v}}} has color {found}, expected {expected}")]
    WrongColor {
        u: usize,
        v: usize,
        expected: Color,
        found: Color,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono_k4() -> ColoredCompleteGraph {
        ColoredCompleteGraph::monochromatic(4, 2, 1).unwrap()
    }

    #[test]
    fn build_single_edge() {
        let g = ColoredCompleteGraph::build(2, 1, [(0, 1, 1)]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.color(1, 0), 1);
    }

    #[test]
    fn build_reports_missing_pair() {
        let err = ColoredCompleteGraph::build(3, 2, [(0, 1, 1), (0, 2, 1)]).unwrap_err();
        assert_eq!(err, GraphError::MissingEdge { u: 1, v: 2 });
    }

    #[test]
    fn build_reports_color_out_of_range() {
        let err = ColoredCompleteGraph::build(3, 2, [(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::ColorOutOfRange {
                u: 1,
                v: 2,
                color: 3,
                colors: 2
            }
        );
    }

    #[test]
    fn build_reports_duplicates_either_orientation() {
        let err = ColoredCompleteGraph::build(2, 1, [(0, 1, 1), (1, 0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn color_degree_on_monochromatic_k4() {
        let g = mono_k4();
        assert_eq!(g.color_degree(2, 1), 3);
        assert_eq!(g.color_degree(2, 2), 0);
    }

    #[test]
    fn common_neighbors() {
        let g = mono_k4();
        assert_eq!(g.common_color_neighbors(0, 1, 1), vec![2, 3]);
        let g = g.recolored(2, 3, 2).unwrap();
        assert_eq!(g.common_color_neighbors(2, 3, 1), vec![0, 1]);
        assert!(g.common_color_neighbors(2, 3, 2).is_empty());
    }

    #[test]
    fn p4_embedding_checks() {
        let g = mono_k4();
        // path 0-1-2-3 as S(1,1): centers 1,2; leaf 0 on 1, leaf 3 on 2
        let ok = Embedding::double_star(1, (1, 2), &[0], &[3]);
        assert_eq!(g.validate_embedding(&ok), Ok(()));

        let repeated = Embedding::double_star(1, (1, 2), &[0], &[0]);
        assert_eq!(
            g.validate_embedding(&repeated),
            Err(EmbeddingDefect::NotInjective(0))
        );

        let g2 = g.recolored(2, 3, 2).unwrap();
        assert!(matches!(
            g2.validate_embedding(&ok),
            Err(EmbeddingDefect::WrongColor { u: 2, v: 3, .. })
        ));
    }

    #[test]
    fn pattern_arities() {
        assert!(Pattern::double_star(1, 2).is_err());
        assert!(Pattern::subdivided_star(1, 1).is_err());
        assert!(Pattern::star(0).is_err());
        assert_eq!(Pattern::star(3).unwrap().vertex_count(), 4);
        assert_eq!(Pattern::double_star(3, 2).unwrap().vertex_count(), 7);
        assert_eq!(Pattern::subdivided_star(3, 2).unwrap().vertex_count(), 6);
        for p in [
            Pattern::p4(),
            Pattern::SubdividedStar { n: 4, m: 2 },
            Pattern::Star { n: 5 },
        ] {
            assert_eq!(p.edges().len(), p.edge_count());
        }
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = ColoredCompleteGraph::from_fn(4, 3, |u, v| ((u + v) % 3 + 1) as Color).unwrap();
        let pairs: Vec<_> = g.edges().map(|(u, v, _)| (u, v)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let rebuilt = ColoredCompleteGraph::build(4, 3, g.edges()).unwrap();
        assert_eq!(rebuilt, g);
    }
}
