//! On-disk JSON formats.
//!
//! Certificates and raw colorings share one schema; the construction fields
//! are absent from raw colorings. Files from any `1.x` version load; unknown
//! fields are ignored.

use std::path::Path;

use anyhow::{bail, Context, Result};
use ramsey_stars::construct::{PartitionScheme, WitnessCertificate};
use ramsey_stars::{Color, ColoredCompleteGraph, Pattern};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1.0";
const SCHEMA_MAJOR: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternJson {
    pub kind: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl From<Pattern> for PatternJson {
    fn from(p: Pattern) -> Self {
        let (kind, n, m) = match p {
            Pattern::Star { n } => ("star", n, None),
            Pattern::DoubleStar { n, m } => ("double-star", n, Some(m)),
            Pattern::SubdividedStar { n, m } => ("substar", n, Some(m)),
        };
        PatternJson {
            kind: kind.into(),
            n,
            m,
        }
    }
}

impl PatternJson {
    pub fn to_pattern(&self) -> Result<Pattern> {
        let m = || {
            self.m
                .with_context(|| format!("pattern kind {:?} needs m", self.kind))
        };
        let p = match self.kind.as_str() {
            "star" => Pattern::star(self.n)?,
            "double-star" => Pattern::double_star(self.n, m()?)?,
            "p4" => Pattern::p4(),
            "substar" => Pattern::subdivided_star(self.n, m()?)?,
            other => bail!("unknown pattern kind {other:?}"),
        };
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(rename = "V")]
    pub v: Vec<Vec<usize>>,
}

/// A certificate or a raw coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub schema_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternJson>,
    pub colors: Color,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionJson>,
    pub edges: Vec<(usize, usize, Color)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ColoringFile {
    /// Raw coloring; edges in lexicographic order.
    pub fn raw(graph: &ColoredCompleteGraph, pattern: Option<Pattern>) -> Self {
        ColoringFile {
            schema_version: SCHEMA_VERSION.into(),
            pattern: pattern.map(Into::into),
            colors: graph.colors(),
            order: graph.order(),
            construction_id: None,
            partition: None,
            edges: graph.edges().collect(),
            verified: None,
            claimed_bound: None,
            seed: None,
        }
    }

    pub fn certificate(w: &WitnessCertificate) -> Self {
        let PartitionScheme { a, b, v } = w.scheme.clone();
        ColoringFile {
            construction_id: Some(w.construction_id.to_string()),
            partition: Some(PartitionJson { a, b, v }),
            verified: Some(w.verified),
            claimed_bound: Some(w.claimed_bound),
            seed: w.seed,
            ..ColoringFile::raw(&w.graph, Some(w.pattern))
        }
    }

    pub fn is_certificate(&self) -> bool {
        self.construction_id.is_some()
    }

    pub fn graph(&self) -> Result<ColoredCompleteGraph> {
        let g = ColoredCompleteGraph::build(self.order, self.colors, self.edges.iter().copied())
            .context("invalid coloring")?;
        Ok(g)
    }

    pub fn pattern(&self) -> Result<Option<Pattern>> {
        self.pattern
            .as_ref()
            .map(PatternJson::to_pattern)
            .transpose()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: ColoringFile = serde_json::from_str(text).context("malformed coloring JSON")?;
        let major = file.schema_version.split('.').next().unwrap_or("");
        if major != SCHEMA_MAJOR {
            bail!(
                "unsupported schema version {:?} (expected {SCHEMA_MAJOR}.x)",
                file.schema_version
            );
        }
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("loading {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_stars::construct::witness_double_star_odd_k;

    #[test]
    fn certificate_round_trip() {
        let w = witness_double_star_odd_k(3, 1, 3).unwrap();
        let file = ColoringFile::certificate(&w);
        let back = ColoringFile::parse(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.graph().unwrap(), w.graph);
        assert_eq!(back.pattern().unwrap(), Some(w.pattern));
        assert!(back.edges.windows(2).all(|e| e[0] < e[1]));
    }

    #[test]
    fn minor_versions_and_unknown_fields_load() {
        let text = r#"{"schema_version":"1.7","colors":1,"order":2,
            "edges":[[0,1,1]],"future_field":{"x":1}}"#;
        let f = ColoringFile::parse(text).unwrap();
        assert!(!f.is_certificate());
        assert_eq!(f.graph().unwrap().order(), 2);
    }

    #[test]
    fn other_major_versions_are_rejected() {
        let text = r#"{"schema_version":"2.0","colors":1,"order":1,"edges":[]}"#;
        assert!(ColoringFile::parse(text).is_err());
    }

    #[test]
    fn p4_kind_is_accepted() {
        let p = PatternJson {
            kind: "p4".into(),
            n: 1,
            m: None,
        };
        assert_eq!(p.to_pattern().unwrap(), Pattern::p4());
    }
}
