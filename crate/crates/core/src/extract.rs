//! Proof-following extractors.
//!
//! Each extractor takes an arbitrary coloring at the order where an upper
//! bound applies and produces the monochromatic copy by running the counting
//! argument behind that bound: a monochromatic star, a family of same-colored
//! stars on the remaining vertices, leaf multiplicities `p(x)`, and a vertex
//! (or leaf set) of high multiplicity. There is no fallback to the exact
//! detector: if a step's guarantee fails the extractor returns
//! [`ExtractError::Internal`].
//!
//! Ties are broken toward the lowest vertex index and the lowest color.

use std::fmt;

use thiserror::Error;

use crate::coloring::{Color, ColoredCompleteGraph, Embedding, Pattern};
use crate::factorize::{max_matching_min_cover, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Evaluation of one counting inequality `lhs > rhs` together with the
/// number `t` of same-colored stars it is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingCondition {
    pub t: i128,
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

/// Which upper-bound arguments apply to a pattern and palette size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    pub pattern: Pattern,
    pub k: usize,
    /// Double stars: `(n+1)·⌈(n+1)/(k-1)⌉ > m((k-1)n+m)`, `t = ⌈(n+1)/(k-1)⌉`.
    pub double_star_upper: Option<CountingCondition>,
    /// `S(n,1)`: `k >= 3` and `n >= (k-1)(k-2)`.
    pub double_star_m1: Option<bool>,
    /// Subdivided stars: `t > m` and `nt > (t-m)(m-1)t + m((n-1)(k-1)+m)`,
    /// `t = ⌈(n-m+1)/(k-1)⌉`.
    pub substar_upper: Option<CountingCondition>,
}

impl ConditionReport {
    pub fn double_star_upper_holds(&self) -> bool {
        self.double_star_upper.is_some_and(|c| c.holds)
    }

    pub fn substar_upper_holds(&self) -> bool {
        self.substar_upper.is_some_and(|c| c.holds)
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    (a + b - 1) / b
}

/// Evaluates the hypotheses of the upper-bound arguments. Entries that do
/// not apply to the pattern, or need `k >= 2`, are `None`.
pub fn check_conditions(pattern: Pattern, k: usize) -> ConditionReport {
    let mut report = ConditionReport {
        pattern,
        k,
        double_star_upper: None,
        double_star_m1: None,
        substar_upper: None,
    };
    if k < 2 {
        return report;
    }
    let kk = k as i128;
    match pattern {
        Pattern::DoubleStar { n, m } => {
            let (n, m) = (n as i128, m as i128);
            let t = ceil_div(n + 1, kk - 1);
            let lhs = (n + 1) * t;
            let rhs = m * ((kk - 1) * n + m);
            report.double_star_upper = Some(CountingCondition {
                t,
                lhs,
                rhs,
                holds: lhs > rhs,
            });
            if m == 1 {
                report.double_star_m1 = Some(k >= 3 && n >= (kk - 1) * (kk - 2));
            }
        }
        Pattern::SubdividedStar { n, m } => {
            let (n, m) = (n as i128, m as i128);
            let t = ceil_div(n - m + 1, kk - 1);
            let lhs = n * t;
            let rhs = (t - m) * (m - 1) * t + m * ((n - 1) * (kk - 1) + m);
            report.substar_upper = Some(CountingCondition {
                t,
                lhs,
                rhs,
                holds: t > m && lhs > rhs,
            });
        }
        Pattern::Star { .. } => {}
    }
    report
}

/// Leaf sets `L_1..L_t` of same-colored stars over a ground set, with the
/// multiplicity `p(x)` of every ground vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafFamily {
    pub ground: Vec<usize>,
    pub centers: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    /// `counts[i]` is `p(ground[i])`.
    pub counts: Vec<usize>,
}

impl LeafFamily {
    fn new(ground: Vec<usize>, centers: Vec<usize>, members: Vec<Vec<usize>>) -> Self {
        let counts = ground
            .iter()
            .map(|x| members.iter().filter(|l| l.contains(x)).count())
            .collect();
        LeafFamily {
            ground,
            centers,
            members,
            counts,
        }
    }

    pub fn count_of(&self, x: usize) -> usize {
        self.ground
            .iter()
            .position(|&g| g == x)
            .map_or(0, |i| self.counts[i])
    }

    /// `Σ_x p(x)`.
    pub fn total_count(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `Σ_i |L_i|`.
    pub fn total_size(&self) -> usize {
        self.members.iter().map(Vec::len).sum()
    }

    /// The double-counting identity `Σ_x p(x) = Σ_i |L_i|`; members must lie
    /// in the ground set.
    pub fn identity_holds(&self) -> bool {
        self.members
            .iter()
            .flatten()
            .all(|x| self.ground.contains(x))
            && self.total_count() == self.total_size()
    }

    fn checked(self) -> Result<Self, ExtractError> {
        if self.identity_holds() {
            Ok(self)
        } else {
            Err(ExtractError::Internal(format!(
                "leaf family bookkeeping: sum of p(x) = {}, sum of |L_i| = {}",
                self.total_count(),
                self.total_size()
            )))
        }
    }
}

/// A "we may assume" step made explicit. `permutation[i]` is the actual
/// color or vertex that plays role `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    pub description: String,
    pub permutation: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtractionTrace {
    pub steps: Vec<String>,
    pub relabelings: Vec<Relabeling>,
    pub family: Option<LeafFamily>,
    /// The high-multiplicity vertex (`b*`, the shared leaf, or the first
    /// chosen `b_i`).
    pub chosen: Option<usize>,
}

impl ExtractionTrace {
    fn step(&mut self, s: impl Into<String>) {
        self.steps.push(s.into());
    }

    fn relabel(&mut self, description: impl Into<String>, permutation: Vec<usize>) {
        self.relabelings.push(Relabeling {
            description: description.into(),
            permutation,
        });
    }
}

impl fmt::Display for ExtractionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "{:>2}. {s}", i + 1)?;
        }
        for r in &self.relabelings {
            writeln!(f, "    relabel: {} {:?}", r.description, r.permutation)?;
        }
        if let Some(fam) = &self.family {
            writeln!(
                f,
                "    family: {} stars, sum p(x) = {}, sum |L_i| = {}",
                fam.members.len(),
                fam.total_count(),
                fam.total_size()
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub embedding: Embedding,
    pub trace: ExtractionTrace,
}

/// First `size` vertices of `candidates` joined to `center` in the lowest
/// color of `palette` that has that many.
fn pigeonhole_star(
    g: &ColoredCompleteGraph,
    center: usize,
    candidates: &[usize],
    palette: &[Color],
    size: usize,
) -> Option<(Color, Vec<usize>)> {
    palette.iter().find_map(|&c| {
        let leaves: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&x| g.color(center, x) == c)
            .take(size)
            .collect();
        (leaves.len() == size).then_some((c, leaves))
    })
}

/// Color permutation putting `c` in the role of color `k`.
fn color_role_swap(k: Color, c: Color) -> Vec<usize> {
    (1..=k)
        .map(|r| if r == k { c } else if r == c { k } else { r } as usize)
        .collect()
}

/// Groups stars by color and keeps the first `t` stars of the lowest color
/// that has at least `t`.
fn same_colored_stars(
    stars: &[(usize, Color, Vec<usize>)],
    palette: &[Color],
    t: usize,
) -> Option<(Color, Vec<(usize, Vec<usize>)>)> {
    palette.iter().find_map(|&c| {
        let chosen: Vec<(usize, Vec<usize>)> = stars
            .iter()
            .filter(|s| s.1 == c)
            .take(t)
            .map(|(a, _, l)| (*a, l.clone()))
            .collect();
        (chosen.len() == t).then_some((c, chosen))
    })
}

fn finish(
    g: &ColoredCompleteGraph,
    embedding: Embedding,
    trace: ExtractionTrace,
) -> Result<Extraction, ExtractError> {
    g.validate_embedding(&embedding)
        .map_err(|e| ExtractError::Internal(format!("assembled copy is invalid: {e}")))?;
    Ok(Extraction { embedding, trace })
}

fn internal(step: &str) -> ExtractError {
    ExtractError::Internal(format!("guarantee failed: {step}"))
}

/// Monochromatic `S(n,m)` in a `k`-coloring of `K_{kn+m+2}` under the
/// double-star counting condition, with `k = g.colors()`.
pub fn extract_double_star(
    g: &ColoredCompleteGraph,
    n: usize,
    m: usize,
) -> Result<Extraction, ExtractError> {
    let pattern =
        Pattern::double_star(n, m).map_err(|e| ExtractError::HypothesisViolated(e.to_string()))?;
    let k = g.colors() as usize;
    let cond = check_conditions(pattern, k);
    if !cond.double_star_upper_holds() {
        return Err(ExtractError::HypothesisViolated(format!(
            "counting condition fails for {pattern} with k = {k}"
        )));
    }
    let order = k * n + m + 2;
    if g.order() != order {
        return Err(ExtractError::HypothesisViolated(format!(
            "order {} differs from kn+m+2 = {order}",
            g.order()
        )));
    }
    let kc = k as Color;
    let mut trace = ExtractionTrace::default();
    let all: Vec<Color> = (1..=kc).collect();

    let center = 0;
    let others: Vec<usize> = (1..order).collect();
    let (blue, a) = pigeonhole_star(g, center, &others, &all, n + 1)
        .ok_or_else(|| internal("vertex 0 spans a monochromatic K_{1,n+1}"))?;
    trace.step(format!(
        "monochromatic K_{{1,{}}} at {center} in color {blue}, leaves A = {a:?}",
        n + 1
    ));
    trace.relabel(
        format!("color {blue} plays the role of color k"),
        color_role_swap(kc, blue),
    );
    let b: Vec<usize> = (1..order).filter(|x| !a.contains(x)).collect();

    for (i, &ai) in a.iter().enumerate() {
        let blue_b: Vec<usize> = b
            .iter()
            .copied()
            .filter(|&x| g.color(ai, x) == blue)
            .take(m)
            .collect();
        if blue_b.len() == m {
            trace.step(format!(
                "a_{} = {ai} has {m} neighbors in B in color {blue}; done",
                i + 1
            ));
            let rest: Vec<usize> = a.iter().copied().filter(|&x| x != ai).collect();
            let e = Embedding::double_star(blue, (center, ai), &rest, &blue_b);
            return finish(g, e, trace);
        }
    }
    trace.step(format!(
        "every leaf has at most {} neighbors in B in color {blue}",
        m - 1
    ));

    let rest_palette: Vec<Color> = all.iter().copied().filter(|&c| c != blue).collect();
    let mut stars = Vec::with_capacity(a.len());
    for &ai in &a {
        let (c, leaves) = pigeonhole_star(g, ai, &b, &rest_palette, n + 1)
            .ok_or_else(|| internal("each leaf centers a K_{1,n+1} into B"))?;
        stars.push((ai, c, leaves));
    }
    let t = cond.double_star_upper.expect("checked").t as usize;
    let (red, chosen) = same_colored_stars(&stars, &rest_palette, t)
        .ok_or_else(|| internal("t stars share a color"))?;
    trace.step(format!("{t} stars into B share color {red}"));
    let mut red_role = vec![red as usize];
    red_role.extend(
        rest_palette
            .iter()
            .filter(|&&c| c != red)
            .map(|&c| c as usize),
    );
    trace.relabel(format!("color {red} plays the role of red"), red_role);

    let family = LeafFamily::new(
        b.clone(),
        chosen.iter().map(|s| s.0).collect(),
        chosen.iter().map(|s| s.1.clone()).collect(),
    )
    .checked()?;
    // b* with maximum p, lowest index on ties
    let (best, &p_best) = family
        .counts
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(&x.0)))
        .ok_or_else(|| internal("B is nonempty"))?;
    let b_star = family.ground[best];
    trace.step(format!("b* = {b_star} with p(b*) = {p_best}"));
    trace.chosen = Some(b_star);
    if p_best < m + 1 {
        trace.family = Some(family);
        return Err(internal("p(b*) >= m+1"));
    }
    let containing: Vec<usize> = (0..family.members.len())
        .filter(|&i| family.members[i].contains(&b_star))
        .take(m + 1)
        .collect();
    let mut order_of_stars = containing.clone();
    order_of_stars.extend((0..family.members.len()).filter(|i| !containing.contains(i)));
    trace.relabel("stars containing b* come first", order_of_stars);

    let hub = containing[m];
    let hub_center = family.centers[hub];
    let hub_leaves: Vec<usize> = family.members[hub]
        .iter()
        .copied()
        .filter(|&x| x != b_star)
        .collect();
    let minor_leaves: Vec<usize> = containing[..m].iter().map(|&i| family.centers[i]).collect();
    trace.step(format!(
        "color {red} copy: star at {hub_center} plus b* joined to {minor_leaves:?}"
    ));
    trace.family = Some(family);
    let e = Embedding::double_star(red, (hub_center, b_star), &hub_leaves, &minor_leaves);
    finish(g, e, trace)
}

/// Monochromatic `S(n,1)` in a `k`-coloring of `K_{kn+3}` when `k >= 3` and
/// `n >= (k-1)(k-2)`.
pub fn extract_double_star_m1(
    g: &ColoredCompleteGraph,
    n: usize,
    k: usize,
) -> Result<Extraction, ExtractError> {
    Pattern::double_star(n, 1).map_err(|e| ExtractError::HypothesisViolated(e.to_string()))?;
    if k < 3 || n < (k - 1) * (k - 2) {
        return Err(ExtractError::HypothesisViolated(format!(
            "needs k >= 3 and n >= (k-1)(k-2) (got n = {n}, k = {k})"
        )));
    }
    if g.colors() as usize > k {
        return Err(ExtractError::HypothesisViolated(format!(
            "coloring uses a palette of {} > k = {k}",
            g.colors()
        )));
    }
    let order = k * n + 3;
    if g.order() != order {
        return Err(ExtractError::HypothesisViolated(format!(
            "order {} differs from kn+3 = {order}",
            g.order()
        )));
    }
    let kc = k as Color;
    let all: Vec<Color> = (1..=kc).collect();
    let mut trace = ExtractionTrace::default();

    let v = 0;
    let others: Vec<usize> = (1..order).collect();
    let (blue, a) = pigeonhole_star(g, v, &others, &all, n + 1)
        .ok_or_else(|| internal("vertex 0 spans a monochromatic K_{1,n+1}"))?;
    trace.step(format!(
        "monochromatic K_{{1,{}}} at {v} in color {blue}, leaves A = {a:?}",
        n + 1
    ));
    trace.relabel(
        format!("color {blue} plays the role of color k"),
        color_role_swap(kc, blue),
    );
    let b: Vec<usize> = (1..order).filter(|x| !a.contains(x)).collect();

    for &ai in &a {
        if let Some(&bj) = b.iter().find(|&&x| g.color(ai, x) == blue) {
            trace.step(format!("edge {ai}-{bj} has color {blue}; done"));
            let rest: Vec<usize> = a.iter().copied().filter(|&x| x != ai).collect();
            return finish(
                g,
                Embedding::double_star(blue, (v, ai), &rest, &[bj]),
                trace,
            );
        }
    }
    trace.step(format!("no A-B edge has color {blue}"));

    let rest_palette: Vec<Color> = all.iter().copied().filter(|&c| c != blue).collect();
    let mut stars = Vec::with_capacity(a.len());
    for &ai in &a {
        let (c, leaves) = pigeonhole_star(g, ai, &b, &rest_palette, n + 1)
            .ok_or_else(|| internal("each leaf centers a K_{1,n+1} into B"))?;
        stars.push((ai, c, leaves));
    }
    let (red, chosen) = same_colored_stars(&stars, &rest_palette, k - 1)
        .ok_or_else(|| internal("k-1 stars share a color"))?;
    trace.step(format!("{} stars into B share color {red}", k - 1));
    let mut red_role = vec![red as usize];
    red_role.extend(
        rest_palette
            .iter()
            .filter(|&&c| c != red)
            .map(|&c| c as usize),
    );
    trace.relabel(format!("color {red} plays the role of red"), red_role);

    let family = LeafFamily::new(
        b,
        chosen.iter().map(|s| s.0).collect(),
        chosen.iter().map(|s| s.1.clone()).collect(),
    )
    .checked()?;
    let shared_at = family.counts.iter().position(|&p| p >= 2);
    let Some(idx) = shared_at else {
        trace.family = Some(family);
        return Err(internal("two of the k-1 stars share a leaf"));
    };
    let shared = family.ground[idx];
    trace.chosen = Some(shared);
    let holders: Vec<usize> = (0..family.members.len())
        .filter(|&i| family.members[i].contains(&shared))
        .take(2)
        .collect();
    let (hub, other) = (holders[0], holders[1]);
    trace.step(format!(
        "leaf {shared} is shared by the stars at {} and {}",
        family.centers[hub], family.centers[other]
    ));
    let hub_leaves: Vec<usize> = family.members[hub]
        .iter()
        .copied()
        .filter(|&x| x != shared)
        .collect();
    let e = Embedding::double_star(
        red,
        (family.centers[hub], shared),
        &hub_leaves,
        &[family.centers[other]],
    );
    trace.family = Some(family);
    finish(g, e, trace)
}

/// Monochromatic `S_n^m` in a `k`-coloring of `K_{k(n-1)+m+2}` under the
/// subdivided-star counting condition.
pub fn extract_subdivided_star(
    g: &ColoredCompleteGraph,
    n: usize,
    m: usize,
    k: usize,
) -> Result<Extraction, ExtractError> {
    let pattern = Pattern::subdivided_star(n, m)
        .map_err(|e| ExtractError::HypothesisViolated(e.to_string()))?;
    let cond = check_conditions(pattern, k);
    if !cond.substar_upper_holds() {
        let detail = cond
            .substar_upper
            .map(|c| format!("t = {}, {} > {} required", c.t, c.lhs, c.rhs))
            .unwrap_or_else(|| "k >= 2 required".into());
        return Err(ExtractError::HypothesisViolated(format!(
            "counting condition fails for {pattern} with k = {k}: {detail}"
        )));
    }
    if g.colors() as usize > k {
        return Err(ExtractError::HypothesisViolated(format!(
            "coloring uses a palette of {} > k = {k}",
            g.colors()
        )));
    }
    let order = k * (n - 1) + m + 2;
    if g.order() != order {
        return Err(ExtractError::HypothesisViolated(format!(
            "order {} differs from k(n-1)+m+2 = {order}",
            g.order()
        )));
    }
    let kc = k as Color;
    let all: Vec<Color> = (1..=kc).collect();
    let mut trace = ExtractionTrace::default();

    let center = 0;
    let others: Vec<usize> = (1..order).collect();
    let (blue, a) = pigeonhole_star(g, center, &others, &all, n)
        .ok_or_else(|| internal("vertex 0 spans a monochromatic K_{1,n}"))?;
    trace.step(format!(
        "monochromatic K_{{1,{n}}} at {center} in color {blue}, leaves A = {a:?}"
    ));
    trace.relabel(
        format!("color {blue} plays the role of color k"),
        color_role_swap(kc, blue),
    );
    let b: Vec<usize> = (1..order).filter(|x| !a.contains(x)).collect();

    // bipartite graph of color-`blue` edges between A and B
    let mut is_left = vec![false; order];
    for &x in &a {
        is_left[x] = true;
    }
    let mut host = Graph::empty(order);
    for &x in &a {
        for &y in &b {
            if g.color(x, y) == blue {
                host.add_edge(x, y);
            }
        }
    }
    let cert = max_matching_min_cover(&host, &is_left)
        .map_err(|e| ExtractError::Internal(e.to_string()))?;
    if cert.matching.len() != cert.cover.len() {
        return Err(internal(
            "maximum matching and minimum cover have equal size",
        ));
    }
    if cert.matching.len() >= m {
        trace.step(format!(
            "matching of size {} in color {blue} between A and B; done",
            cert.matching.len()
        ));
        let legs: Vec<(usize, usize)> = cert.matching[..m].to_vec();
        let plain: Vec<usize> = a
            .iter()
            .copied()
            .filter(|x| !legs.iter().any(|l| l.0 == *x))
            .collect();
        return finish(
            g,
            Embedding::subdivided_star(blue, center, &legs, &plain),
            trace,
        );
    }
    let cover = cert.cover;
    trace.step(format!(
        "maximum matching has size {}; minimum cover C = {cover:?}",
        cover.len()
    ));
    let a_rest: Vec<usize> = a.iter().copied().filter(|x| !cover.contains(x)).collect();
    let b_rest: Vec<usize> = b.iter().copied().filter(|x| !cover.contains(x)).collect();
    let used_a: Vec<usize> = a_rest.iter().copied().take(n - m + 1).collect();
    if used_a.len() < n - m + 1 {
        return Err(internal("|A'| >= n-m+1"));
    }
    let mut a_roles = used_a.clone();
    a_roles.extend(a.iter().filter(|x| !used_a.contains(x)));
    trace.relabel("A reordered so that a_1..a_{n-m+1} lie outside C", a_roles);

    let rest_palette: Vec<Color> = all.iter().copied().filter(|&c| c != blue).collect();
    let mut stars = Vec::with_capacity(used_a.len());
    for &ai in &used_a {
        let (c, leaves) = pigeonhole_star(g, ai, &b_rest, &rest_palette, n)
            .ok_or_else(|| internal("each a_i centers a K_{1,n} into B'"))?;
        stars.push((ai, c, leaves));
    }
    let t = cond.substar_upper.expect("checked").t as usize;
    let (red, chosen) = same_colored_stars(&stars, &rest_palette, t)
        .ok_or_else(|| internal("t stars share a color"))?;
    trace.step(format!("{t} stars into B' share color {red}"));
    let mut red_role = vec![red as usize];
    red_role.extend(
        rest_palette
            .iter()
            .filter(|&&c| c != red)
            .map(|&c| c as usize),
    );
    trace.relabel(format!("color {red} plays the role of red"), red_role);

    let family = LeafFamily::new(
        b_rest,
        chosen.iter().map(|s| s.0).collect(),
        chosen.iter().map(|s| s.1.clone()).collect(),
    )
    .checked()?;
    let heavy = |i: usize| -> Vec<usize> {
        family.members[i]
            .iter()
            .copied()
            .filter(|&x| family.count_of(x) > m)
            .collect()
    };
    let Some(j) = (0..family.members.len()).find(|&i| heavy(i).len() >= m) else {
        let b_star: usize = (0..family.members.len()).map(|i| heavy(i).len()).sum();
        trace.family = Some(family);
        return Err(ExtractError::Internal(format!(
            "guarantee failed: some L*_j has m elements (total heavy incidences {b_star})"
        )));
    };
    let bs: Vec<usize> = heavy(j).into_iter().take(m).collect();
    trace.step(format!(
        "L*_{} has at least {m} leaves with p >= m+1; using {bs:?}",
        j + 1
    ));
    trace.chosen = Some(bs[0]);

    // each b_i gets its own star other than L_j (greedy; each has >= m choices)
    let mut taken = vec![false; family.members.len()];
    taken[j] = true;
    let mut legs = Vec::with_capacity(m);
    for &bi in &bs {
        let s = (0..family.members.len())
            .find(|&i| !taken[i] && family.members[i].contains(&bi))
            .ok_or_else(|| internal("distinct stars for the chosen leaves"))?;
        taken[s] = true;
        legs.push((bi, family.centers[s]));
    }
    let mut star_roles = vec![j];
    star_roles.extend(
        legs.iter()
            .map(|&(_, c)| family.centers.iter().position(|&x| x == c).unwrap()),
    );
    star_roles.extend((0..family.members.len()).filter(|i| !taken[*i]));
    trace.relabel("stars reordered so that b_i lies in L_{i+1}", star_roles);

    let hub = family.centers[j];
    let plain: Vec<usize> = family.members[j]
        .iter()
        .copied()
        .filter(|x| !bs.contains(x))
        .collect();
    trace.step(format!(
        "color {red} copy centered at {hub} with legs {legs:?}"
    ));
    trace.family = Some(family);
    finish(
        g,
        Embedding::subdivided_star(red, hub, &legs, &plain),
        trace,
    )
}
