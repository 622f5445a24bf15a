//! Oriented knot diagrams as arcs and signed crossings.
//!
//! A crossing `(α, β, γ, ε)` carries the relation `α ⊳ β = γ`, where `β` is
//! the over-arc. For `ε = +1` the under-strand runs from `α` into `γ`; for
//! `ε = −1` it runs from `γ` into `α`. Every arc is the outgoing under-arc of
//! exactly one crossing.

mod pd;
mod torus;
mod xrl;

pub use pd::{parse_pd, print_pd};
pub use torus::torus_diagram;
pub use xrl::{parse_xrl, print_xrl};

/// PD text if it starts with `PD`, XRL otherwise.
pub fn parse_diagram(text: &str) -> Result<KnotDiagram, DiagramError> {
    if text.trim_start().starts_with("PD") {
        parse_pd(text)
    } else {
        parse_xrl(text)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiagramError {
    #[error("empty diagram")]
    Empty,
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("{arcs} arcs but {crossings} crossings")]
    CountMismatch { arcs: usize, crossings: usize },
    #[error("arc {0} is not the outgoing under-arc of exactly one crossing")]
    OutputNotUnique(String),
    #[error("arc {0} is not the incoming under-arc of exactly one crossing")]
    InputNotUnique(String),
    #[error("inconsistent orientation: {0}")]
    InconsistentOrientation(String),
    #[error("diagram has {0} components; only knots are supported")]
    MultipleComponents(usize),
    #[error("torus parameters ({0}, {1}) do not give a knot")]
    NotAKnot(i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub sign: i8,
}

impl Crossing {
    /// The under-arc leaving the crossing.
    pub fn output(&self) -> usize {
        if self.sign > 0 {
            self.gamma
        } else {
            self.alpha
        }
    }

    /// The under-arc entering the crossing.
    pub fn input(&self) -> usize {
        if self.sign > 0 {
            self.alpha
        } else {
            self.gamma
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnotDiagram {
    name: Option<String>,
    arcs: Vec<String>,
    crossings: Vec<Crossing>,
}

impl KnotDiagram {
    /// Build and validate a diagram.
    pub fn new(name: Option<String>, arcs: Vec<String>, crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        let d = KnotDiagram { name, arcs, crossings };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let n = self.arcs.len();
        if n == 0 || self.crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        if n != self.crossings.len() {
            return Err(DiagramError::CountMismatch { arcs: n, crossings: self.crossings.len() });
        }
        let mut outs = vec![0usize; n];
        let mut ins = vec![0usize; n];
        for c in &self.crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::Malformed { line: 0, msg: "sign must be ±1".into() });
            }
            outs[c.output()] += 1;
            ins[c.input()] += 1;
        }
        if let Some(a) = outs.iter().position(|&k| k != 1) {
            return Err(DiagramError::OutputNotUnique(self.arcs[a].clone()));
        }
        if let Some(a) = ins.iter().position(|&k| k != 1) {
            return Err(DiagramError::InputNotUnique(self.arcs[a].clone()));
        }
        let order = self.cycle_from(0);
        if order.len() != n {
            let mut seen = vec![false; n];
            let mut comps = 0;
            for s in 0..n {
                if !seen[s] {
                    comps += 1;
                    for a in self.cycle_from(s) {
                        seen[a] = true;
                    }
                }
            }
            return Err(DiagramError::MultipleComponents(comps));
        }
        Ok(())
    }

    /// Arcs in the order the knot traverses them, starting at `start`.
    pub fn cycle_from(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut a = start;
        loop {
            let c = self.crossings.iter().find(|c| c.input() == a).expect("validated");
            a = c.output();
            if a == start {
                return order;
            }
            order.push(a);
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn arcs(&self) -> &[String] {
        &self.arcs
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_index(&self, label: &str) -> Option<usize> {
        self.arcs.iter().position(|a| a == label)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Crossings with a given sign, as counts `(positive, negative)`.
    pub fn sign_counts(&self) -> (usize, usize) {
        let p = self.crossings.iter().filter(|c| c.sign > 0).count();
        (p, self.crossings.len() - p)
    }

    /// Label-free normal form: arcs renumbered along the knot from the start
    /// that gives the lexicographically least sorted crossing list.
    pub fn canonical(&self) -> Vec<Crossing> {
        let n = self.arcs.len();
        let mut best: Option<Vec<Crossing>> = None;
        for s in 0..n {
            let order = self.cycle_from(s);
            let mut pos = vec![0; n];
            for (i, &a) in order.iter().enumerate() {
                pos[a] = i;
            }
            let mut cs: Vec<Crossing> = self
                .crossings
                .iter()
                .map(|c| Crossing { alpha: pos[c.alpha], beta: pos[c.beta], gamma: pos[c.gamma], sign: c.sign })
                .collect();
            cs.sort();
            if best.as_ref().is_none_or(|b| cs < *b) {
                best = Some(cs);
            }
        }
        best.unwrap()
    }

    /// Equality up to relabeling of arcs and reordering of crossings.
    pub fn same_diagram(&self, other: &KnotDiagram) -> bool {
        self.arcs.len() == other.arcs.len() && self.canonical() == other.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_xrl_matches_torus() {
        let d = parse_xrl("a < b -> c : +\nb < c -> a : +\nc < a -> b : +\n").unwrap();
        let t = torus_diagram(2, 3).unwrap();
        assert!(d.same_diagram(&t));
        assert_eq!(t.writhe(), 3);
    }

    #[test]
    fn kink_is_a_one_arc_unknot() {
        let d = parse_xrl("a1 < a1 -> a1 : +").unwrap();
        assert_eq!(d.num_arcs(), 1);
    }

    #[test]
    fn arc_never_output_is_rejected() {
        let e = parse_xrl("a < b -> a : +\nb < a -> a : +\n").unwrap_err();
        assert!(matches!(e, DiagramError::OutputNotUnique(_)));
    }

    #[test]
    fn two_components_are_rejected() {
        let e = parse_xrl("a < a -> a : +\nb < b -> b : +\n").unwrap_err();
        assert_eq!(e, DiagramError::MultipleComponents(2));
    }
}
