//! Crossing-relation lists: one `a < b -> c : ±` line per crossing.
//!
//! An optional `arcs: l1 l2 …` line fixes the arc order; otherwise arcs are
//! numbered by first appearance.

use super::{Crossing, DiagramError, KnotDiagram};

pub fn parse_xrl(text: &str) -> Result<KnotDiagram, DiagramError> {
    let mut arcs: Vec<String> = Vec::new();
    let mut crossings = Vec::new();
    let index = |label: &str, arcs: &mut Vec<String>| -> usize {
        match arcs.iter().position(|a| a == label) {
            Some(i) => i,
            None => {
                arcs.push(label.to_string());
                arcs.len() - 1
            }
        }
    };
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| DiagramError::Malformed { line: ln + 1, msg: msg.to_string() };
        if let Some(list) = line.strip_prefix("arcs:") {
            if !arcs.is_empty() {
                return Err(bad("arcs: must precede the crossings"));
            }
            for l in list.split_whitespace() {
                if arcs.iter().any(|a| a == l) {
                    return Err(bad("repeated arc label"));
                }
                arcs.push(l.to_string());
            }
            continue;
        }
        let (rel, sign) = line.rsplit_once(':').ok_or_else(|| bad("missing ': ±'"))?;
        let sign = match sign.trim() {
            "+" | "+1" => 1,
            "-" | "-1" | "−" => -1,
            _ => return Err(bad("sign must be + or -")),
        };
        let (lhs, gamma) = rel.split_once("->").ok_or_else(|| bad("missing '->'"))?;
        let (alpha, beta) = lhs.split_once('<').ok_or_else(|| bad("missing '<'"))?;
        let labels = [alpha.trim(), beta.trim(), gamma.trim()];
        if labels.iter().any(|l| l.is_empty() || l.contains(char::is_whitespace)) {
            return Err(bad("arc labels must be single words"));
        }
        let a = index(labels[0], &mut arcs);
        let b = index(labels[1], &mut arcs);
        let g = index(labels[2], &mut arcs);
        crossings.push(Crossing { alpha: a, beta: b, gamma: g, sign });
    }
    KnotDiagram::new(None, arcs, crossings)
}

pub fn print_xrl(d: &KnotDiagram) -> String {
    let mut out = String::new();
    if let Some(n) = d.name() {
        out.push_str(&format!("# {n}\n"));
    }
    out.push_str(&format!("arcs: {}\n", d.arcs().join(" ")));
    for c in d.crossings() {
        let s = if c.sign > 0 { '+' } else { '-' };
        out.push_str(&format!("{} < {} -> {} : {}\n", d.arcs()[c.alpha], d.arcs()[c.beta], d.arcs()[c.gamma], s));
    }
    out
}
