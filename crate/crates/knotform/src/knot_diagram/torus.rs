//! Closed positive braids `(σ₁⋯σ_{m−1})ⁿ`.

use num_integer::Integer;

use super::{Crossing, DiagramError, KnotDiagram};

/// The closure of the `m`-strand braid `(σ₁⋯σ_{m−1})ⁿ`.
///
/// Each factor `σ₁⋯σ_{m−1}` has one arc passing over all `m − 1` of its
/// crossings; these are labelled `p1, …, pn` in factor order and come first.
/// The remaining arcs are labelled `s1, s2, …`.
pub fn torus_diagram(m: i64, n: i64) -> Result<KnotDiagram, DiagramError> {
    if m < 2 || n < 2 || m.gcd(&n) != 1 {
        return Err(DiagramError::NotAKnot(m, n));
    }
    let (m, n) = (m as usize, n as usize);
    let mut parent: Vec<usize> = (0..m).collect();
    let mut pos: Vec<usize> = (0..m).collect();
    let mut raw = Vec::with_capacity(n * (m - 1));
    for _ in 0..n {
        for i in 0..m - 1 {
            let over = pos[i];
            let under_in = pos[i + 1];
            let out = parent.len();
            parent.push(out);
            raw.push((under_in, over, out));
            pos[i] = out;
            pos[i + 1] = over;
        }
    }
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (b, &p) in pos.iter().enumerate() {
        let (rb, rp) = (find(&mut parent, b), find(&mut parent, p));
        if rb != rp {
            parent[rp] = rb;
        }
    }
    let mut label_of: Vec<Option<usize>> = vec![None; parent.len()];
    let mut arcs = Vec::new();
    for k in 0..n {
        let r = find(&mut parent, raw[k * (m - 1)].1);
        if label_of[r].is_none() {
            label_of[r] = Some(arcs.len());
            arcs.push(format!("p{}", k + 1));
        }
    }
    let mut short = 0;
    for &(a, b, g) in &raw {
        for x in [a, b, g] {
            let r = find(&mut parent, x);
            if label_of[r].is_none() {
                short += 1;
                label_of[r] = Some(arcs.len());
                arcs.push(format!("s{short}"));
            }
        }
    }
    let crossings = raw
        .iter()
        .map(|&(a, b, g)| Crossing {
            alpha: label_of[find(&mut parent, a)].unwrap(),
            beta: label_of[find(&mut parent, b)].unwrap(),
            gamma: label_of[find(&mut parent, g)].unwrap(),
            sign: 1,
        })
        .collect();
    Ok(KnotDiagram::new(Some(format!("torus:{m},{n}")), arcs, crossings)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_counts() {
        assert_eq!(torus_diagram(2, 3).unwrap().crossings().len(), 3);
        assert_eq!(torus_diagram(3, 4).unwrap().crossings().len(), 8);
        assert_eq!(torus_diagram(2, 4), Err(DiagramError::NotAKnot(2, 4)));
    }

    #[test]
    fn principal_arcs_pass_over_a_whole_factor() {
        let d = torus_diagram(4, 3).unwrap();
        for k in 0..3 {
            let overs = d.crossings().iter().filter(|c| c.beta == k).count();
            assert_eq!(overs, 3);
            assert_eq!(d.arcs()[k], format!("p{}", k + 1));
        }
    }

    #[test]
    fn writhe_is_crossing_count() {
        for (m, n) in [(2, 5), (3, 4), (5, 2)] {
            assert_eq!(torus_diagram(m, n).unwrap().writhe(), n * (m - 1));
        }
    }
}
