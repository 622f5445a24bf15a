//! Diagonal reduction over `F[t]` and the solution module of `A·x ≡ 0 (mod Δ)`.

use super::matrix::Matrix;
use super::poly::Poly;
use super::Ring;

/// `U·A·V = diag(d)`; returns `d` (monic, length `min(rows, cols)`) and `V`.
pub fn diagonalize(a: &Matrix<Poly>) -> (Vec<Poly>, Matrix<Poly>) {
    let field = a.get(0, 0).field().clone();
    let one = Poly::one(&field);
    let (m, n) = (a.rows(), a.cols());
    let mut a = a.clone();
    let mut v = Matrix::identity(n, &one);
    let mut diag = Vec::new();
    for k in 0..m.min(n) {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    if let Some(d) = a.get(i, j).degree() {
                        if best.is_none_or(|b| d < b.2) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                break;
            };
            a.swap_rows(bi, k);
            swap_cols(&mut a, bj, k);
            swap_cols(&mut v, bj, k);
            let piv = a.get(k, k).clone();
            let mut clean = true;
            for i in k + 1..m {
                let (q, r) = a.get(i, k).divrem(&piv).unwrap();
                if !q.is_zero() {
                    for j in k..n {
                        let val = a.get(i, j).sub(&q.mul(a.get(k, j)));
                        a.set(i, j, val);
                    }
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                let (q, r) = a.get(k, j).divrem(&piv).unwrap();
                if !q.is_zero() {
                    for i in 0..m {
                        let val = a.get(i, j).sub(&a.get(i, k).mul(&q));
                        a.set(i, j, val);
                    }
                    for i in 0..n {
                        let val = v.get(i, j).sub(&v.get(i, k).mul(&q));
                        v.set(i, j, val);
                    }
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(a.get(k, k).monic());
    }
    (diag, v)
}

fn swap_cols(a: &mut Matrix<Poly>, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..a.rows() {
        let t = a.get(i, x).clone();
        a.set(i, x, a.get(i, y).clone());
        a.set(i, y, t);
    }
}

/// Invariant factors `d₁ | d₂ | …` of a diagonal list.
pub fn invariant_factors(diag: &[Poly]) -> Vec<Poly> {
    let mut d: Vec<Poly> = diag.to_vec();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[i].is_zero() {
                d.swap(i, j);
                continue;
            }
            if d[j].is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].mul(&d[j]).div_exact(&g).unwrap().monic();
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Generators over `F[t]/(Δ)` of `{x : A·x ≡ 0 mod Δ}`, as polynomial vectors.
pub fn kernel_mod(a: &Matrix<Poly>, delta: &Poly) -> (Vec<Vec<Poly>>, Vec<Poly>) {
    let (diag, v) = diagonalize(a);
    let n = a.cols();
    let mut gens = Vec::new();
    for i in 0..n {
        let scale = match diag.get(i) {
            Some(s) if !s.is_zero() => delta.div_exact(&s.gcd(delta)).unwrap(),
            _ => Poly::one(delta.field()),
        };
        if scale.rem(delta).is_zero() {
            continue;
        }
        let col: Vec<Poly> = (0..n).map(|r| v.get(r, i).mul(&scale).rem(delta)).collect();
        if col.iter().any(|x| !x.is_zero_elem()) {
            gens.push(col);
        }
    }
    (gens, invariant_factors(&diag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Field;

    #[test]
    fn kernel_mod_square_of_linear() {
        let f = Field::rationals();
        // (t−1)·x ≡ 0 mod (t−1)²  ⇒  x ∈ ((t−1))
        let a = Matrix::from_rows(vec![vec![Poly::from_ints(&f, &[-1, 1])]]);
        let delta = Poly::from_ints(&f, &[1, -2, 1]);
        let (gens, _) = kernel_mod(&a, &delta);
        assert_eq!(gens, vec![vec![Poly::from_ints(&f, &[-1, 1])]]);
    }

    #[test]
    fn invariant_factors_of_coprime_pair() {
        let f = Field::rationals();
        let d = invariant_factors(&[Poly::from_ints(&f, &[-1, 1]), Poly::from_ints(&f, &[1, 1])]);
        assert_eq!(d[0], Poly::one(&f));
        assert_eq!(d[1], Poly::from_ints(&f, &[-1, 0, 1]));
    }
}
