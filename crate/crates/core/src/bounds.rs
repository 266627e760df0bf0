//! Closed-form bounds and exact values, each entry tagged with its source.
//!
//! A report collects every applicable result as a [`BoundEntry`] and then
//! aggregates the certified ones into intervals for the Ramsey number and the
//! list Ramsey number. Since constant lists are allowed, `r_ℓ <= r`, so a
//! list lower bound also bounds `r` from below and an upper bound on `r` also
//! bounds `r_ℓ` from above. Asymptotic results are recorded uncertified and
//! never enter the aggregates.

use std::fmt;

use crate::coloring::Pattern;
use crate::extract::check_conditions;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Ramsey,
    ListRamsey,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub quantity: Quantity,
    pub side: Side,
    pub value: usize,
    pub source: String,
    pub certified: bool,
}

/// `lower <= value <= upper`; `upper = None` means no known upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lower: usize,
    pub upper: Option<usize>,
}

impl Interval {
    pub fn exact(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lower <= v && self.upper.is_none_or(|u| v <= u)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.exact(), self.upper) {
            (Some(v), _) => write!(f, "{v}"),
            (None, Some(u)) => write!(f, "[{}, {u}]", self.lower),
            (None, None) => write!(f, "[{}, ∞)", self.lower),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub pattern: Pattern,
    pub k: usize,
    pub entries: Vec<BoundEntry>,
    pub ramsey: Interval,
    pub list_ramsey: Interval,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn lower(&self) -> usize {
        self.ramsey.lower
    }

    pub fn upper(&self) -> Option<usize> {
        self.ramsey.upper
    }

    pub fn exact(&self) -> Option<usize> {
        self.ramsey.exact()
    }

    pub fn list_exact(&self) -> Option<usize> {
        self.list_ramsey.exact()
    }

    /// Certified entries that attain the aggregated bound for `quantity`.
    pub fn sources(&self, quantity: Quantity, side: Side) -> Vec<&str> {
        let target = match (quantity, side) {
            (Quantity::Ramsey, Side::Lower) => Some(self.ramsey.lower),
            (Quantity::Ramsey, _) => self.ramsey.upper,
            (Quantity::ListRamsey, Side::Lower) => Some(self.list_ramsey.lower),
            (Quantity::ListRamsey, _) => self.list_ramsey.upper,
        };
        self.entries
            .iter()
            .filter(|e| {
                e.certified
                    && e.quantity == quantity
                    && Some(e.value) == target
                    && (e.side == side || e.side == Side::Exact)
            })
            .map(|e| e.source.as_str())
            .collect()
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r({}; {}) = {}", self.pattern, self.k, self.ramsey)?;
        writeln!(
            f,
            "list r({}; {}) = {}",
            self.pattern, self.k, self.list_ramsey
        )?;
        for e in &self.entries {
            let q = match e.quantity {
                Quantity::Ramsey => "r",
                Quantity::ListRamsey => "list r",
            };
            let rel = match e.side {
                Side::Lower => ">=",
                Side::Upper => "<=",
                Side::Exact => "=",
            };
            let tag = if e.certified { "" } else { " (uncertified)" };
            writeln!(f, "  {q} {rel} {}: {}{tag}", e.value, e.source)?;
        }
        for c in &self.conditions {
            writeln!(f, "  condition {}: {}", c.name, c.value)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Builder {
    entries: Vec<BoundEntry>,
    conditions: Vec<Condition>,
    notes: Vec<String>,
}

impl Builder {
    fn add(&mut self, quantity: Quantity, side: Side, value: usize, source: impl Into<String>) {
        self.entries.push(BoundEntry {
            quantity,
            side,
            value,
            source: source.into(),
            certified: true,
        });
    }

    fn lower(&mut self, value: usize, source: impl Into<String>) {
        self.add(Quantity::Ramsey, Side::Lower, value, source);
    }

    fn upper(&mut self, value: usize, source: impl Into<String>) {
        self.add(Quantity::Ramsey, Side::Upper, value, source);
    }

    fn exact(&mut self, value: usize, source: impl Into<String>) {
        self.add(Quantity::Ramsey, Side::Exact, value, source);
    }

    fn list(&mut self, side: Side, value: usize, source: impl Into<String>) {
        self.add(Quantity::ListRamsey, side, value, source);
    }

    fn uncertified(
        &mut self,
        quantity: Quantity,
        side: Side,
        value: usize,
        source: impl Into<String>,
    ) {
        self.entries.push(BoundEntry {
            quantity,
            side,
            value,
            source: source.into(),
            certified: false,
        });
    }

    fn condition(&mut self, name: impl Into<String>, value: impl ToString) {
        self.conditions.push(Condition {
            name: name.into(),
            value: value.to_string(),
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn absorb(&mut self, other: BoundsReport, via: &str) {
        for mut e in other.entries {
            e.source = format!("{} (via {via})", e.source);
            self.entries.push(e);
        }
        self.conditions
            .extend(other.conditions.into_iter().map(|mut c| {
                c.name = format!("{} (via {via})", c.name);
                c
            }));
        self.notes.extend(other.notes);
    }

    fn finish(self, pattern: Pattern, k: usize) -> BoundsReport {
        let certified = |q: Quantity, sides: [Side; 2]| {
            self.entries
                .iter()
                .filter(move |e| e.certified && e.quantity == q && sides.contains(&e.side))
                .map(|e| e.value)
        };
        let lo = |q| certified(q, [Side::Lower, Side::Exact]).max();
        let hi = |q| certified(q, [Side::Upper, Side::Exact]).min();
        let (r_lo, r_hi) = (lo(Quantity::Ramsey), hi(Quantity::Ramsey));
        let (l_lo, l_hi) = (lo(Quantity::ListRamsey), hi(Quantity::ListRamsey));
        // r_ℓ <= r
        let ramsey = Interval {
            lower: r_lo.into_iter().chain(l_lo).max().unwrap_or(1),
            upper: r_hi,
        };
        let list_upper = match (l_hi, r_hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let list_ramsey = Interval {
            lower: l_lo.unwrap_or(1),
            upper: list_upper,
        };
        debug_assert!(
            ramsey.upper.is_none_or(|u| ramsey.lower <= u),
            "{pattern} k={k}: {ramsey:?}"
        );
        debug_assert!(list_ramsey.upper.is_none_or(|u| list_ramsey.lower <= u));
        BoundsReport {
            pattern,
            k,
            entries: self.entries,
            ramsey,
            list_ramsey,
            conditions: self.conditions,
            notes: self.notes,
        }
    }
}

/// `r(K_{1,n}; k)` (Burr–Roberts).
pub fn star_ramsey(n: usize, k: usize) -> usize {
    if n.is_multiple_of(2) && k.is_multiple_of(2) {
        k * (n - 1) + 1
    } else {
        k * (n - 1) + 2
    }
}

fn is_odd_prime(p: usize) -> bool {
    p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn star_entries(b: &mut Builder, n: usize, k: usize) {
    let base = k * (n - 1);
    if k == 1 {
        b.exact(n + 1, "one color: K_{n+1} is the smallest host");
        return;
    }
    b.lower(base + 1, "Burr–Roberts lower bound");
    b.upper(base + 2, "Burr–Roberts upper bound");
    b.exact(
        star_ramsey(n, k),
        "Burr–Roberts (k(n-1)+1 exactly when n and k are both even)",
    );
    b.condition("n and k both even", n.is_multiple_of(2) && k.is_multiple_of(2));
    b.list(
        Side::Lower,
        base + 1,
        "Alon–Bucić–Kalvari–Kuperwasser–Szabó list lower bound",
    );
    if n.is_multiple_of(2) && k.is_multiple_of(2) {
        b.list(
            Side::Exact,
            base + 1,
            "Alon–Bucić–Kalvari–Kuperwasser–Szabó, n and k even",
        );
    }
    if is_odd_prime(k) && n >= 2 {
        b.list(
            Side::Exact,
            base + 2,
            "odd-prime star list theorem (Schauz list edge coloring)",
        );
    }
    if k == 2 {
        b.list(
            Side::Exact,
            star_ramsey(n, 2),
            "Alon–Bucić–Kalvari–Kuperwasser–Szabó, two colors",
        );
    }
    if !(n.is_multiple_of(2) && k.is_multiple_of(2)) && !is_odd_prime(k) && k != 2 {
        b.note("list value equals k(n-1)+2 for all n beyond an unspecified threshold (Alon–Bucić–Kalvari–Kuperwasser–Szabó)");
    }
}

/// Bounds for `r(K_{1,n}; k)` and its list version.
pub fn bounds_star(n: usize, k: usize) -> BoundsReport {
    assert!(n >= 1 && k >= 1, "bounds_star needs n >= 1 and k >= 1");
    let mut b = Builder::default();
    star_entries(&mut b, n, k);
    b.finish(Pattern::Star { n }, k)
}

fn p4_entries(b: &mut Builder, k: usize) {
    let eps = k % 3;
    b.condition("ε = k mod 3", eps);
    if k == 3 {
        b.exact(6, "Irving, three colors");
    } else {
        match eps {
            1 => b.exact(2 * k + 2, "Irving (k ≡ 1 mod 3)"),
            2 => b.exact(2 * k + 1, "Irving (k ≡ 2 mod 3)"),
            _ => {
                b.lower(2 * k, "Irving (k ≡ 0 mod 3)");
                b.upper(2 * k + 1, "Irving (k ≡ 0 mod 3)");
            }
        }
    }
    if k >= 2 {
        b.list(
            Side::Lower,
            k + 1,
            "contains K_{1,2}; list star lower bound",
        );
    }
    if is_odd_prime(k) {
        b.list(
            Side::Lower,
            k + 3,
            "list P_4 construction on K_{p+2} (rainbow vertex plus Schauz)",
        );
    }
    if k == 3 {
        b.list(Side::Exact, 6, "list P_4 construction with Irving");
    }
    if k == 2 {
        b.list(Side::Exact, 5, "Liu, two colors");
    }
}

/// Bounds for `r(P_4; k)`.
pub fn bounds_p4(k: usize) -> BoundsReport {
    assert!(k >= 1, "bounds_p4 needs k >= 1");
    let mut b = Builder::default();
    p4_entries(&mut b, k);
    b.finish(Pattern::p4(), k)
}

fn divides(d: usize, x: usize) -> bool {
    d != 0 && x.is_multiple_of(d)
}

/// Bounds for `r(S(n,m); k)`, `n >= m >= 1`.
pub fn bounds_double_star(n: usize, m: usize, k: usize) -> BoundsReport {
    assert!(
        n >= m && m >= 1 && k >= 1,
        "bounds_double_star needs n >= m >= 1 and k >= 1"
    );
    let pattern = Pattern::DoubleStar { n, m };
    let mut b = Builder::default();
    if k == 1 {
        b.exact(n + m + 2, "one color: S(n,m) has n+m+2 vertices");
        return b.finish(pattern, k);
    }
    if (n, m) == (1, 1) {
        p4_entries(&mut b, k);
    }

    // lower bounds
    b.lower(star_ramsey(n + 1, k), "contains K_{1,n+1} (Burr–Roberts)");
    if k % 2 == 1 {
        b.lower(
            k * n + m + 2,
            "odd-k block coloring (proper coloring of K_k, |A| = m+1, |V_i| = n)",
        );
    } else {
        b.lower(
            (k - 1) * n + 2 * m + 2,
            "even-k block coloring with an extra block of size m",
        );
    }
    let size = n + m + 1;
    let divisible = divides(size, k - 1) && (n.is_multiple_of(2) || m % 2 == 1);
    b.condition("(n+m+1) | (k-1) and (n even or m odd)", divisible);
    if divisible {
        b.lower(
            k * n + m + 2,
            "multipartite n-factor coloring ((n+m+1) | (k-1))",
        );
    }
    let half_divisible = n.is_multiple_of(2) && m % 2 == 1 && divides(size / 2, k - 1);
    b.condition("n even, m odd, (n+m+1)/2 | (k-1)", half_divisible);
    if half_divisible {
        b.lower(
            k * n + m + 2,
            "multipartite n-factor coloring ((n+m+1)/2 | (k-1))",
        );
    }
    if divides(n + m + 1, k - 1) {
        b.note(format!(
            "Erdős–Graham: for k large enough with {} | (k-1), every tree with {} edges has r > k·{}+1",
            n + m + 1,
            n + m + 1,
            n + m
        ));
    }

    // upper bounds
    let cond = check_conditions(pattern, k);
    if let Some(c) = cond.double_star_upper {
        b.condition("ℓ = ⌈(n+1)/(k-1)⌉", c.t);
        b.condition(
            "(n+1)·ℓ > m((k-1)n+m)",
            format!("{} > {}: {}", c.lhs, c.rhs, c.holds),
        );
        if c.holds {
            b.upper(k * n + m + 2, "same-colored star family counting bound");
        }
    }
    if let Some(holds) = cond.double_star_m1 {
        b.condition("k >= 3 and n >= (k-1)(k-2)", holds);
        if holds {
            b.upper(k * n + 3, "shared-leaf pigeonhole bound for S(n,1)");
        }
    }
    if m == 1 && k == 3 {
        b.exact(
            3 * n + 3,
            "S(n,1) with three colors: odd-k coloring plus shared-leaf bound",
        );
    }

    // two colors
    if k == 2 {
        let eps = n % 2;
        b.condition("ε = n mod 2", eps);
        if n % 2 == 1 && m <= 2 {
            b.exact(
                (2 * n + 1).max(n + 2 * m + 2),
                "Grossman–Harary–Klawe (n odd, m <= 2)",
            );
        }
        let side = n * n <= 2 * m * m || n >= 3 * m;
        if (n.is_multiple_of(2) || m >= 3) && side {
            b.exact(
                (2 * n + 2).max(n + 2 * m + 2),
                "Grossman–Harary–Klawe (n even or m >= 3; n <= √2·m or n >= 3m)",
            );
        }
        if m == 1 && n >= 2 {
            b.exact(2 * n + 2 - eps, "Grossman–Harary–Klawe, S(n,1)");
        }
        b.condition("n <= 1.699(m+1)", 1000 * n <= 1699 * (m + 1));
        if 1000 * n <= 1699 * (m + 1) {
            b.exact(n + 2 * m + 2, "Norin–Sun–Zhao (n <= 1.699(m+1))");
        }
        b.uncertified(
            Quantity::Ramsey,
            Side::Lower,
            (5 * m + 10 * n) / 6,
            "Norin–Sun–Zhao asymptotic (5/6)m + (5/3)n, main term only",
        );
        if n >= 2 * m {
            b.uncertified(
                Quantity::Ramsey,
                Side::Lower,
                (105 * m + 189 * n) / 115,
                "Norin–Sun–Zhao asymptotic (21/23)m + (189/115)n, main term only",
            );
        }
    }

    // list versions
    b.list(
        Side::Lower,
        k * n + 1,
        "contains K_{1,n+1}; list star lower bound",
    );
    if is_odd_prime(k) {
        b.list(
            Side::Lower,
            k * n + 2,
            "contains K_{1,n+1}; odd-prime star list theorem",
        );
    }
    if k == 2 {
        let star = star_ramsey(n + 1, 2);
        b.list(
            Side::Lower,
            star,
            "contains K_{1,n+1}; two-color list star value",
        );
        if m == 1 && n >= 2 {
            b.list(
                Side::Exact,
                star,
                "S(n,1): Grossman–Harary–Klawe equals the list star value",
            );
        }
        if n >= 3 * m && (n.is_multiple_of(2) || m % 2 == 1) {
            b.list(
                Side::Exact,
                star,
                "n >= 3m: Grossman–Harary–Klawe equals the list star value",
            );
        }
    }
    b.finish(pattern, k)
}

/// Bounds for `r(S_n^m; k)`, `n >= 2`, `n >= m >= 1`.
pub fn bounds_substar(n: usize, m: usize, k: usize) -> BoundsReport {
    assert!(
        n >= 2 && n >= m && m >= 1 && k >= 1,
        "bounds_substar needs n >= 2, n >= m >= 1"
    );
    let pattern = Pattern::SubdividedStar { n, m };
    let mut b = Builder::default();
    if k == 1 {
        b.exact(n + m + 1, "one color: S_n^m has n+m+1 vertices");
        return b.finish(pattern, k);
    }
    if m == 1 {
        b.absorb(bounds_double_star(n - 1, 1, k), "S_n^1 = S(n-1,1)");
    }
    b.lower(star_ramsey(n, k), "contains K_{1,n} (Burr–Roberts)");
    if k % 2 == 1 {
        b.lower(
            k * (n - 1) + m + 2,
            "odd-k block coloring (|A| = m+1, |V_i| = n-1)",
        );
    }
    let cond = check_conditions(pattern, k);
    if let Some(c) = cond.substar_upper {
        b.condition("t = ⌈(n-m+1)/(k-1)⌉", c.t);
        b.condition(
            "t > m and nt > (t-m)(m-1)t + m((n-1)(k-1)+m)",
            format!(
                "t > m: {}, {} > {}: {}",
                c.t > m as i128,
                c.lhs,
                c.rhs,
                c.holds
            ),
        );
        if c.holds {
            b.upper(
                k * (n - 1) + m + 2,
                "König cover plus star family counting bound",
            );
        }
    }

    b.list(
        Side::Lower,
        k * (n - 1) + 1,
        "contains K_{1,n}; list star lower bound",
    );
    if is_odd_prime(k) {
        b.list(
            Side::Lower,
            k * (n - 1) + 2,
            "contains K_{1,n}; odd-prime star list theorem",
        );
    }

    if k == 2 {
        let star = star_ramsey(n, 2);
        b.list(
            Side::Lower,
            star,
            "contains K_{1,n}; two-color list star value",
        );
        let eps_shift = (n - 1) % 2;
        b.condition("ε = (n-1) mod 2", eps_shift);
        if (m == 2 || m == 3) && n >= 3 * m - 1 + eps_shift {
            b.exact(star, "two-color S_n^2 / S_n^3 case analysis (n >= 3m-1+ε)");
            b.list(
                Side::Exact,
                star,
                "two-color S_n^2 / S_n^3 case analysis (n >= 3m-1+ε)",
            );
        }
        let eps = n % 2;
        b.condition("ε = n mod 2", eps);
        if m < n {
            b.lower(
                n + 2 * m + 1,
                "two red cliques of sizes n+m and m joined in blue",
            );
        } else {
            b.uncertified(
                Quantity::Ramsey,
                Side::Lower,
                n + 2 * m + 1,
                "two red cliques of sizes n+m and m joined in blue",
            );
            b.note(format!(
                "the two-clique coloring of K_{} contains a blue S_{n}^{m} when m = n, so n+2m+1 is not certified here; for n = m = 2 (S_2^2 = P_5) it fails, since r(P_5; 2) = 6",
                n + 2 * m
            ));
        }
    }
    b.finish(pattern, k)
}

/// Bounds for any pattern.
pub fn bounds_for(pattern: Pattern, k: usize) -> BoundsReport {
    match pattern {
        Pattern::Star { n } => bounds_star(n, k),
        Pattern::DoubleStar { n: 1, m: 1 } => bounds_double_star(1, 1, k),
        Pattern::DoubleStar { n, m } => bounds_double_star(n, m, k),
        Pattern::SubdividedStar { n, m } => bounds_substar(n, m, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        assert_eq!(bounds_star(2, 2).exact(), Some(3));
        assert_eq!(bounds_star(3, 2).exact(), Some(6));
        let r = bounds_star(4, 3);
        assert_eq!(r.exact(), Some(11));
        assert_eq!(r.list_exact(), Some(11));
    }

    #[test]
    fn p4_examples() {
        assert_eq!(bounds_p4(3).exact(), Some(6));
        assert_eq!(bounds_p4(5).exact(), Some(11));
        let r = bounds_p4(6);
        assert_eq!((r.lower(), r.upper()), (12, Some(13)));
        assert_eq!(r.exact(), None);
        assert_eq!(bounds_p4(3).list_exact(), Some(6));
        assert_eq!(bounds_p4(2).exact(), Some(5));
    }

    #[test]
    fn double_star_examples() {
        assert_eq!(bounds_double_star(3, 1, 3).exact(), Some(12));
        assert_eq!(bounds_double_star(1, 1, 3).exact(), Some(6));
        assert_eq!(bounds_double_star(3, 2, 2).exact(), Some(9));
        let r = bounds_double_star(6, 3, 5);
        assert_eq!((r.lower(), r.upper()), (35, None));
        assert_eq!(bounds_double_star(2, 1, 2).exact(), Some(6));
        assert_eq!(bounds_double_star(3, 1, 2).exact(), Some(7));
    }

    #[test]
    fn substar_examples() {
        assert_eq!(bounds_substar(3, 1, 3).exact(), Some(9));
        assert_eq!(bounds_substar(5, 2, 2).exact(), Some(10));
        let r = bounds_substar(3, 3, 2);
        assert_eq!(r.upper(), None);
        assert!(r.entries.iter().any(|e| e.value == 10 && !e.certified));
        assert_eq!(bounds_substar(3, 2, 2).lower(), 8);
    }

    #[test]
    fn sources_are_reported() {
        let r = bounds_double_star(3, 1, 3);
        assert!(!r.sources(Quantity::Ramsey, Side::Lower).is_empty());
        assert!(!r.sources(Quantity::Ramsey, Side::Upper).is_empty());
    }
}
