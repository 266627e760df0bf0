//! Ramsey numbers of stars, double stars `S(n,m)` and subdivided stars `S_n^m`
//! in `k`-edge-colored complete graphs.
//!
//! * [`coloring`]: colored complete graphs, patterns, embeddings.
//! * [`detect`]: exact monochromatic-pattern detectors and a brute-force oracle.
//! * [`factorize`]: proper edge colorings, 1- and 2-factorizations, König certificates.
//! * [`construct`]: verified lower-bound witness colorings.
//! * [`extract`]: extractors that follow the upper-bound arguments step by step.
//! * [`bounds`]: closed-form bounds and exact values with provenance.
//! * [`search`]: exhaustive search for exact small Ramsey numbers and list colorings.

pub mod bounds;
pub mod coloring;
pub mod construct;
pub mod detect;
pub mod extract;
pub mod factorize;
mod matching;
pub mod search;

pub use coloring::{Color, ColoredCompleteGraph, Embedding, EmbeddingDefect, GraphError, Pattern};
