//! Colorings by the finite Alexander quandle `F_p` with `t ↦ c`.

use num_traits::ToPrimitive;

use super::constraint_matrix;
use crate::exact_algebra::Laurent;
use crate::knot_diagram::KnotDiagram;
use crate::representation::ArcRepresentation;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FiniteError {
    #[error("search space {0} exceeds the guard {1}")]
    TooLarge(u128, u128),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("t = {0} is not a unit mod {1}")]
    NotUnit(u64, u64),
    #[error("coefficient is not defined mod p: {0}")]
    BadCoefficient(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteQuandle {
    pub p: u64,
    pub t: u64,
}

impl FiniteQuandle {
    pub fn new(p: u64, t: u64) -> Result<Self, FiniteError> {
        if p < 2 || (2..p).take_while(|k| k * k <= p).any(|k| p % k == 0) {
            return Err(FiniteError::NotPrime(p));
        }
        let t = t % p;
        if t == 0 {
            return Err(FiniteError::NotUnit(t, p));
        }
        Ok(FiniteQuandle { p, t })
    }

    /// `x ⊳ y = t·x + (1 − t)·y`.
    pub fn op(&self, x: u64, y: u64) -> u64 {
        (self.t * x + (self.p + 1 - self.t) * y) % self.p
    }

    pub fn pow_mod(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: u64) -> u64 {
        self.pow_mod(x, self.p - 2)
    }

    /// Reduce a Laurent polynomial with rational coefficients at `t = c`.
    pub fn eval(&self, x: &Laurent) -> Result<u64, FiniteError> {
        let p = self.p as i128;
        let tinv = self.inv(self.t);
        let mut acc = 0u64;
        for (k, c) in x.terms() {
            let r = c.as_rational().ok_or_else(|| FiniteError::BadCoefficient(format!("{c}")))?;
            let num = (r.numer() % p).to_i128().unwrap().rem_euclid(p) as u64;
            let den = (r.denom() % p).to_i128().unwrap().rem_euclid(p) as u64;
            if den == 0 {
                return Err(FiniteError::BadCoefficient(format!("{r}")));
            }
            let tk = if k >= 0 { self.pow_mod(self.t, k as u64) } else { self.pow_mod(tinv, (-k) as u64) };
            acc = (acc + num * self.inv(den) % self.p * tk) % self.p;
        }
        Ok(acc)
    }
}

/// Exhaustive count of colorings by `X = F_pⁿ`.
pub fn enumerate_finite(d: &KnotDiagram, f: &ArcRepresentation, x: FiniteQuandle, guard: u128) -> Result<u128, FiniteError> {
    let n = f.dim();
    let vars = d.num_arcs() * n;
    let space = (x.p as u128).checked_pow(vars as u32).unwrap_or(u128::MAX);
    if space > guard {
        return Err(FiniteError::TooLarge(space, guard));
    }
    let mats: Vec<Vec<u64>> = f
        .matrices()
        .iter()
        .map(|m| (0..n * n).map(|k| x.eval(m.get(k / n, k % n))).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut colors = vec![0u64; vars];
    let mut count = 0u128;
    loop {
        let ok = d.crossings().iter().all(|c| {
            let fb = &mats[c.beta];
            (0..n).all(|j| {
                let mut v = colors[c.beta * n + j];
                for i in 0..n {
                    let diff = (colors[c.alpha * n + i] + x.p - colors[c.beta * n + i]) % x.p;
                    v = (v + diff * fb[i * n + j]) % x.p;
                }
                v == colors[c.gamma * n + j]
            })
        });
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == vars {
                return Ok(count);
            }
            colors[k] += 1;
            if colors[k] < x.p {
                break;
            }
            colors[k] = 0;
            k += 1;
        }
    }
}

/// `p^(#unknowns − rank)` from the shared constraint matrix reduced mod `p`.
pub fn count_by_rank(d: &KnotDiagram, f: &ArcRepresentation, x: FiniteQuandle) -> Result<u128, FiniteError> {
    let m = constraint_matrix(d, f);
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows).map(|i| (0..cols).map(|j| x.eval(m.get(i, j))).collect()).collect::<Result<_, _>>()?;
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(p, rank);
        let inv = x.inv(a[rank][c]);
        for k in 0..cols {
            a[rank][k] = a[rank][k] * inv % x.p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let fct = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] + x.p * x.p - fct * a[rank][k] % x.p) % x.p;
                }
            }
        }
        rank += 1;
    }
    Ok((x.p as u128).pow((cols - rank) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Field;
    use crate::knot_diagram::{parse_xrl, torus_diagram};

    #[test]
    fn trefoil_mod_7() {
        let d = torus_diagram(2, 3).unwrap();
        let f = ArcRepresentation::abelian(&d, &Field::rationals());
        let x = FiniteQuandle::new(7, 3).unwrap();
        assert_eq!(enumerate_finite(&d, &f, x, 1 << 20).unwrap(), 49);
        assert_eq!(count_by_rank(&d, &f, x).unwrap(), 49);
    }

    #[test]
    fn kink_gives_only_constants() {
        let d = parse_xrl("a < a -> a : +").unwrap();
        let f = ArcRepresentation::abelian(&d, &Field::rationals());
        let x = FiniteQuandle::new(5, 2).unwrap();
        assert_eq!(enumerate_finite(&d, &f, x, 1000).unwrap(), 5);
    }

    #[test]
    fn guard_and_validation() {
        let d = torus_diagram(3, 4).unwrap();
        let f = ArcRepresentation::abelian(&d, &Field::rationals());
        let x = FiniteQuandle::new(7, 3).unwrap();
        assert!(matches!(enumerate_finite(&d, &f, x, 1000), Err(FiniteError::TooLarge(..))));
        assert_eq!(FiniteQuandle::new(9, 2), Err(FiniteError::NotPrime(9)));
    }
}
