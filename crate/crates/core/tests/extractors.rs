mod common;

use ramsey_stars::construct::{witness_double_star_odd_k, witness_substar};
use ramsey_stars::detect::find_mono;
use ramsey_stars::extract::*;
use ramsey_stars::{Color, ColoredCompleteGraph, Pattern};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{embedding_is_valid, random_coloring};

fn assert_sound(g: &ColoredCompleteGraph, x: &Extraction, pattern: Pattern) {
    assert_eq!(x.embedding.pattern, pattern);
    assert!(embedding_is_valid(g, &x.embedding));
    if let Some(f) = &x.trace.family {
        assert_eq!(f.total_count(), f.total_size());
        assert!(f.identity_holds());
    }
    assert!(find_mono(g, pattern).is_some());
}

/// Every coloring of `K_order` with `k` colors, by counting in base `k`.
fn all_colorings(order: usize, k: Color) -> impl Iterator<Item = ColoredCompleteGraph> {
    let pairs = order * (order - 1) / 2;
    let total = (k as u64).pow(pairs as u32);
    (0..total).map(move |mut code| {
        ColoredCompleteGraph::from_fn(order, k, |_, _| {
            let c = (code % k as u64) as Color + 1;
            code /= k as u64;
            c
        })
        .unwrap()
    })
}

#[test]
fn exhaustive_p4_on_k5() {
    let mut families = 0;
    for g in all_colorings(5, 2) {
        let x = extract_double_star(&g, 1, 1).unwrap();
        assert_sound(&g, &x, Pattern::DoubleStar { n: 1, m: 1 });
        families += x.trace.family.is_some() as usize;
    }
    assert!(families > 0);
}

#[test]
fn exhaustive_substar_2_1_on_k5() {
    let mut families = 0;
    for g in all_colorings(5, 2) {
        let x = extract_subdivided_star(&g, 2, 1, 2).unwrap();
        assert_sound(&g, &x, Pattern::SubdividedStar { n: 2, m: 1 });
        families += x.trace.family.is_some() as usize;
    }
    assert!(families > 0);
}

fn legal_double_star_triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for n in 1..=7 {
            for m in 1..=n {
                let order = k * n + m + 2;
                if order <= 32
                    && check_conditions(Pattern::DoubleStar { n, m }, k).double_star_upper_holds()
                {
                    out.push((n, m, k));
                }
            }
        }
    }
    out
}

fn legal_substar_triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for n in 2..=9 {
            for m in 1..=n {
                let order = k * (n - 1) + m + 2;
                if order <= 32
                    && check_conditions(Pattern::SubdividedStar { n, m }, k).substar_upper_holds()
                {
                    out.push((n, m, k));
                }
            }
        }
    }
    out
}

/// Colorings biased toward one color per vertex pair class, which tends to
/// push the extractors past their early exits.
fn biased_coloring<R: Rng>(order: usize, k: Color, rng: &mut R) -> ColoredCompleteGraph {
    let favored: Vec<Color> = (0..order).map(|_| rng.gen_range(1..=k)).collect();
    ColoredCompleteGraph::from_fn(order, k, |u, v| {
        if rng.gen_bool(0.7) {
            favored[u.min(v)]
        } else {
            rng.gen_range(1..=k)
        }
    })
    .unwrap()
}

#[test]
fn double_star_extractor_on_random_and_biased_colorings() {
    let triples = legal_double_star_triples();
    assert!(triples.len() > 5);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut families = 0;
    for (n, m, k) in triples {
        let order = k * n + m + 2;
        for round in 0..100 {
            let g = if round % 2 == 0 {
                random_coloring(order, k as Color, &mut rng)
            } else {
                biased_coloring(order, k as Color, &mut rng)
            };
            let x = extract_double_star(&g, n, m).unwrap_or_else(|e| panic!("({n},{m},{k}): {e}"));
            assert_sound(&g, &x, Pattern::DoubleStar { n, m });
            families += x.trace.family.is_some() as usize;
        }
    }
    assert!(families > 0);
}

#[test]
fn m1_extractor_on_random_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for k in 3..=4 {
        for n in (k - 1) * (k - 2)..=(k - 1) * (k - 2) + 3 {
            let n = n.max(1);
            let order = k * n + 3;
            for round in 0..60 {
                let g = if round % 2 == 0 {
                    random_coloring(order, k as Color, &mut rng)
                } else {
                    biased_coloring(order, k as Color, &mut rng)
                };
                let x = extract_double_star_m1(&g, n, k).unwrap();
                assert_sound(&g, &x, Pattern::DoubleStar { n, m: 1 });
            }
        }
    }
}

#[test]
fn m1_and_general_extractors_agree_on_k12() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let g = random_coloring(12, 3, &mut rng);
        let a = extract_double_star(&g, 3, 1).unwrap();
        let b = extract_double_star_m1(&g, 3, 3).unwrap();
        assert!(embedding_is_valid(&g, &a.embedding) && embedding_is_valid(&g, &b.embedding));
    }
}

#[test]
fn substar_extractor_on_random_and_biased_colorings() {
    let triples = legal_substar_triples();
    assert!(!triples.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut families = 0;
    for (n, m, k) in triples {
        let order = k * (n - 1) + m + 2;
        for round in 0..100 {
            let g = if round % 2 == 0 {
                random_coloring(order, k as Color, &mut rng)
            } else {
                biased_coloring(order, k as Color, &mut rng)
            };
            let x = extract_subdivided_star(&g, n, m, k)
                .unwrap_or_else(|e| panic!("({n},{m},{k}): {e}"));
            assert_sound(&g, &x, Pattern::SubdividedStar { n, m });
            families += x.trace.family.is_some() as usize;
        }
    }
    assert!(families > 0);
}

/// Adds one vertex to `g`; `color_of(x)` colors its edge to `x`.
fn pad(g: &ColoredCompleteGraph, mut color_of: impl FnMut(usize) -> Color) -> ColoredCompleteGraph {
    let n = g.order();
    ColoredCompleteGraph::from_fn(n + 1, g.colors(), |u, v| {
        if v == n {
            color_of(u)
        } else {
            g.color(u, v)
        }
    })
    .unwrap()
}

/// Pad vertices: every constant color, clones of each vertex (with each color
/// on the clone edge), and random ones.
fn adversarial_pads(g: &ColoredCompleteGraph, rng: &mut ChaCha8Rng) -> Vec<ColoredCompleteGraph> {
    let k = g.colors();
    let mut out: Vec<ColoredCompleteGraph> = (1..=k).map(|c| pad(g, |_| c)).collect();
    for v in 0..g.order() {
        for c in 1..=k {
            out.push(pad(g, |x| if x == v { c } else { g.color(v, x) }));
        }
    }
    for _ in 0..50 {
        out.push(pad(g, |_| rng.gen_range(1..=k)));
    }
    out
}

#[test]
fn extractors_on_padded_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let mut families = 0;
    let w = witness_double_star_odd_k(3, 1, 3).unwrap();
    for g in adversarial_pads(&w.graph, &mut rng) {
        assert_eq!(g.order(), 12);
        let x = extract_double_star(&g, 3, 1).unwrap();
        assert_sound(&g, &x, Pattern::DoubleStar { n: 3, m: 1 });
        families += x.trace.family.is_some() as usize;
        let x = extract_double_star_m1(&g, 3, 3).unwrap();
        assert_sound(&g, &x, Pattern::DoubleStar { n: 3, m: 1 });
    }
    let w = witness_double_star_odd_k(2, 1, 3).unwrap();
    for g in adversarial_pads(&w.graph, &mut rng) {
        let x = extract_double_star_m1(&g, 2, 3).unwrap();
        assert_sound(&g, &x, Pattern::DoubleStar { n: 2, m: 1 });
        families += x.trace.family.is_some() as usize;
    }
    let w = witness_substar(3, 1, 3).unwrap();
    for g in adversarial_pads(&w.graph, &mut rng) {
        assert_eq!(g.order(), 9);
        let x = extract_subdivided_star(&g, 3, 1, 3).unwrap();
        assert_sound(&g, &x, Pattern::SubdividedStar { n: 3, m: 1 });
        families += x.trace.family.is_some() as usize;
    }
    assert!(families > 0);
}

#[test]
fn extraction_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..20 {
        let g = random_coloring(9, 3, &mut rng);
        assert_eq!(
            extract_subdivided_star(&g, 3, 1, 3),
            extract_subdivided_star(&g, 3, 1, 3)
        );
    }
}

#[test]
fn traces_render() {
    let w = witness_substar(3, 1, 3).unwrap();
    let g = pad(&w.graph, |_| 1);
    let x = extract_subdivided_star(&g, 3, 1, 3).unwrap();
    let text = x.trace.to_string();
    assert!(text.contains("monochromatic"));
}
