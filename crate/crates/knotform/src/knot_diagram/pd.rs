//! Planar diagram codes `PD[X[i,j,k,l], ...]`.
//!
//! In `X[i,j,k,l]` the under-strand enters along `i` and leaves along `k`;
//! `j` and `l` are the over-strand. The crossing is positive when the
//! over-strand runs from `l` to `j`. Orientation of the over-strands is
//! propagated from the under-strands, so edge labels need not be
//! consecutive.

use std::collections::HashMap;

use super::{Crossing, DiagramError, KnotDiagram};

fn parse_tuples(text: &str) -> Result<Vec<[String; 4]>, DiagramError> {
    let bad = |msg: &str| DiagramError::Malformed { line: 1, msg: msg.to_string() };
    let mut s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(DiagramError::Empty);
    }
    if let Some(rest) = s.strip_prefix("PD") {
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| bad("unbalanced PD brackets"))?;
        s = inner.to_string();
    }
    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        rest = rest.strip_prefix(',').unwrap_or(rest);
        let body = rest.strip_prefix('X').ok_or_else(|| bad("expected X[...]"))?;
        let (open, close) = match body.chars().next() {
            Some('[') => ('[', ']'),
            Some('(') => ('(', ')'),
            _ => return Err(bad("expected '[' or '(' after X")),
        };
        let end = body.find(close).ok_or_else(|| bad("unterminated tuple"))?;
        let inner = &body[open.len_utf8()..end];
        let parts: Vec<String> = inner.split(',').map(|p| p.to_string()).collect();
        if parts.len() != 4 || parts.iter().any(|p| p.is_empty()) {
            return Err(bad(&format!("tuple X{open}{inner}{close} must have four entries")));
        }
        out.push([parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone()]);
        rest = &body[end + 1..];
    }
    if out.is_empty() {
        return Err(DiagramError::Empty);
    }
    Ok(out)
}

pub fn parse_pd(text: &str) -> Result<KnotDiagram, DiagramError> {
    let tuples = parse_tuples(text)?;
    let n = tuples.len();
    // Edge ids and their two ends (crossing, slot).
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<&str> = Vec::new();
    let mut ends: Vec<Vec<(usize, usize)>> = Vec::new();
    for (c, t) in tuples.iter().enumerate() {
        for (p, lab) in t.iter().enumerate() {
            let id = *ids.entry(lab.as_str()).or_insert_with(|| {
                labels.push(lab.as_str());
                ends.push(Vec::new());
                labels.len() - 1
            });
            ends[id].push((c, p));
        }
    }
    if let Some(e) = ends.iter().position(|v| v.len() != 2) {
        return Err(DiagramError::InconsistentOrientation(format!("edge {} occurs {} times", labels[e], ends[e].len())));
    }
    // entering[c][p]: whether the edge at slot p enters crossing c.
    let mut entering: Vec<[Option<bool>; 4]> = vec![[Some(true), None, Some(false), None]; n];
    loop {
        let mut changed = false;
        for v in &ends {
            let (a, b) = (v[0], v[1]);
            let (sa, sb) = (entering[a.0][a.1], entering[b.0][b.1]);
            match (sa, sb) {
                (Some(x), Some(y)) if x == y => {
                    return Err(DiagramError::InconsistentOrientation(format!(
                        "edge {} is oriented the same way at both ends",
                        tuples[a.0][a.1]
                    )))
                }
                (Some(x), None) => {
                    set_end(&mut entering, b, !x);
                    changed = true;
                }
                (None, Some(y)) => {
                    set_end(&mut entering, a, !y);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    if entering.iter().any(|e| e[1].is_none()) {
        return Err(DiagramError::InconsistentOrientation("an over-strand has no under-crossing".into()));
    }
    let over_in = |c: usize| if entering[c][1] == Some(true) { 1 } else { 3 };
    // successor along the knot, on edges
    let mut succ = vec![usize::MAX; labels.len()];
    for c in 0..n {
        let id = |p: usize| ids[tuples[c][p].as_str()];
        let oi = over_in(c);
        succ[id(0)] = id(2);
        succ[id(oi)] = id(4 - oi);
    }
    let mut seen = vec![false; labels.len()];
    let mut comps = 0;
    for s in 0..labels.len() {
        if !seen[s] {
            comps += 1;
            let mut e = s;
            while !seen[e] {
                seen[e] = true;
                e = succ[e];
            }
        }
    }
    if comps != 1 {
        return Err(DiagramError::MultipleComponents(comps));
    }
    // arcs: edges joined across over-passes
    let mut arc_of = vec![usize::MAX; labels.len()];
    let start = (0..labels.len()).min_by_key(|&e| sort_key(labels[e])).unwrap();
    // walk from the start edge; a new arc begins after each under-passage
    let mut under_out = vec![false; labels.len()];
    for t in &tuples {
        under_out[ids[t[2].as_str()]] = true;
    }
    let mut e = start;
    while !under_out[e] {
        e = pred(&succ, e);
    }
    let first = e;
    let mut arc = 0;
    loop {
        arc_of[e] = arc;
        let nx = succ[e];
        if nx == first {
            break;
        }
        if under_out[nx] {
            arc += 1;
        }
        e = nx;
    }
    let num_arcs = arc + 1;
    let mut crossings = Vec::with_capacity(n);
    for (c, t) in tuples.iter().enumerate() {
        let id = |p: usize| ids[t[p].as_str()];
        let positive = over_in(c) == 3;
        let beta = arc_of[id(1)];
        let (ai, ak) = (arc_of[id(0)], arc_of[id(2)]);
        let (alpha, gamma, sign) = if positive { (ai, ak, 1) } else { (ak, ai, -1) };
        crossings.push(Crossing { alpha, beta, gamma, sign });
    }
    let arcs = (1..=num_arcs).map(|i| i.to_string()).collect();
    KnotDiagram::new(None, arcs, crossings)
}

fn set_end(entering: &mut [[Option<bool>; 4]], end: (usize, usize), val: bool) {
    let (c, p) = end;
    entering[c][p] = Some(val);
    if p == 1 || p == 3 {
        entering[c][4 - p] = Some(!val);
    }
}

fn pred(succ: &[usize], e: usize) -> usize {
    succ.iter().position(|&s| s == e).unwrap()
}

fn sort_key(label: &str) -> (u8, i64, String) {
    match label.parse::<i64>() {
        Ok(v) => (0, v, String::new()),
        Err(_) => (1, 0, label.to_string()),
    }
}

/// A PD code for the diagram. Edges are numbered along the knot; over-passes
/// on an arc are ordered by crossing index.
pub fn print_pd(d: &KnotDiagram) -> String {
    let cs = d.crossings();
    let n = cs.len();
    let order = d.cycle_from(0);
    // edge numbers: arc a owns edges first_edge[a] .. first_edge[a] + overs(a)
    let mut first_edge = vec![0usize; d.num_arcs()];
    let mut next = 1;
    for &a in &order {
        first_edge[a] = next;
        next += 1 + cs.iter().filter(|c| c.beta == a).count();
    }
    let total = 2 * n;
    let wrap = |e: usize| if e > total { e - total } else { e };
    let mut slot_on_arc = vec![0usize; d.num_arcs()];
    let mut over_edges = vec![(0, 0); n];
    for (ci, c) in cs.iter().enumerate() {
        let s = slot_on_arc[c.beta];
        slot_on_arc[c.beta] += 1;
        let e_in = first_edge[c.beta] + s;
        over_edges[ci] = (e_in, e_in + 1);
    }
    let mut parts = Vec::with_capacity(n);
    for (ci, c) in cs.iter().enumerate() {
        let inp = c.input();
        let i = first_edge[inp] + cs.iter().filter(|x| x.beta == inp).count();
        let k = first_edge[c.output()];
        let (oin, oout) = over_edges[ci];
        let (j, l) = if c.sign > 0 { (oout, oin) } else { (oin, oout) };
        parts.push(format!("X[{},{},{},{}]", wrap(i), wrap(j), wrap(k), wrap(l)));
    }
    format!("PD[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot_diagram::torus_diagram;

    const TREFOIL: &str = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]";
    const FIG8: &str = "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]";

    #[test]
    fn trefoil_pd() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.num_arcs(), 3);
        assert_eq!(d.sign_counts(), (3, 0));
        assert!(d.same_diagram(&torus_diagram(2, 3).unwrap()));
    }

    #[test]
    fn figure_eight_pd() {
        let d = parse_pd(FIG8).unwrap();
        assert_eq!(d.num_arcs(), 4);
        assert_eq!(d.sign_counts(), (2, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert!(matches!(parse_pd("PD[X[1,2,3]]"), Err(DiagramError::Malformed { .. })));
        // Hopf link
        assert!(matches!(parse_pd("PD[X[4,1,3,2], X[2,3,1,4]]"), Err(DiagramError::MultipleComponents(2))));
        assert!(matches!(parse_pd("PD[X[1,2,1,2]]"), Err(DiagramError::InconsistentOrientation(_))));
    }

    #[test]
    fn print_then_parse() {
        for text in [TREFOIL, FIG8] {
            let d = parse_pd(text).unwrap();
            let again = parse_pd(&print_pd(&d)).unwrap();
            assert!(again.same_diagram(&d), "{}", print_pd(&d));
        }
    }
}
