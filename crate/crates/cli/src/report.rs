//! Text and JSON renderings of library results.

use ramsey_stars::bounds::{BoundsReport, Interval, Quantity, Side};
use ramsey_stars::{Embedding, Pattern};
use serde_json::{json, Value};

use crate::files::PatternJson;

pub fn embedding_json(e: &Embedding) -> Value {
    json!({
        "color": e.color,
        "pattern": PatternJson::from(e.pattern),
        "vertex_map": e.vertex_map,
        "edges": e.graph_edges(),
    })
}

/// Vertices listed by role.
pub fn embedding_text(e: &Embedding) -> String {
    let map = &e.vertex_map;
    let roles = match e.pattern {
        Pattern::Star { n } => format!("center {}, leaves {:?}", map[0], &map[1..=n]),
        Pattern::DoubleStar { n, m } => format!(
            "centers {} and {}, leaves {:?} and {:?}",
            map[0],
            map[1],
            &map[2..2 + n],
            &map[2 + n..2 + n + m]
        ),
        Pattern::SubdividedStar { n, m } => {
            let legs: Vec<(usize, usize)> = (1..=m).map(|i| (map[i], map[n + i])).collect();
            format!(
                "center {}, subdivided legs {:?}, plain leaves {:?}",
                map[0],
                legs,
                &map[m + 1..=n]
            )
        }
    };
    format!("monochromatic {} in color {}: {roles}", e.pattern, e.color)
}

fn interval_json(i: &Interval) -> Value {
    json!({ "lower": i.lower, "upper": i.upper, "exact": i.exact() })
}

/// `exact V`, or the interval when the bounds do not meet.
pub fn bounds_headline(r: &BoundsReport) -> String {
    match r.exact() {
        Some(v) => format!("exact {v}"),
        None => format!("bounds {}", r.ramsey),
    }
}

pub fn bounds_json(r: &BoundsReport) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "quantity": match e.quantity {
                    Quantity::Ramsey => "ramsey",
                    Quantity::ListRamsey => "list-ramsey",
                },
                "side": match e.side {
                    Side::Lower => "lower",
                    Side::Upper => "upper",
                    Side::Exact => "exact",
                },
                "value": e.value,
                "source": e.source,
                "certified": e.certified,
            })
        })
        .collect();
    let conditions: Vec<Value> = r
        .conditions
        .iter()
        .map(|c| json!({ "name": c.name, "value": c.value }))
        .collect();
    json!({
        "pattern": PatternJson::from(r.pattern),
        "k": r.k,
        "ramsey": interval_json(&r.ramsey),
        "list_ramsey": interval_json(&r.list_ramsey),
        "entries": entries,
        "conditions": conditions,
        "notes": r.notes,
    })
}
