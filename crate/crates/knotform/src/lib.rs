//! Twisted cohomology pairings of knots computed from diagrams.

pub mod exact_algebra;
pub mod knot_diagram;
pub mod representation;
pub mod coloring;
pub mod pairing_engine;
pub mod twisted_alexander;
pub mod signature_lab;
pub mod seifert_oracle;
pub mod quandle_cocycle;
pub mod builtins;
