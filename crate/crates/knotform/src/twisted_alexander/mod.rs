//! Twisted Alexander polynomials from the coloring constraint matrix.
//!
//! The constraint matrix with the base arc's column block removed is
//! square after deleting one crossing's row block. Its determinant is
//! found by evaluating at `t = 1, 2, …` and interpolating. Two row
//! deletions are combined by a gcd, and every factor shared with
//! `det(f(base) − I)` is divided out, with multiplicity.

use crate::coloring::constraint_matrix;
use crate::exact_algebra::{AlgebraError, Fe, Laurent, Matrix, Poly};
use crate::knot_diagram::KnotDiagram;
use crate::representation::ArcRepresentation;

pub use crate::exact_algebra::check_reciprocal;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TwistedError {
    #[error("(†) violated: the twisted Alexander polynomial is zero")]
    Zero,
    #[error("diagram has no crossings")]
    NoCrossings,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwistedAlexander {
    /// Monic with nonzero constant term.
    pub polynomial: Poly,
    /// gcd of the two square minors before division.
    pub minor_gcd: Poly,
    /// `det(f(base) − I)` as a polynomial.
    pub base_factor: Poly,
    /// The product of the factors removed from `minor_gcd`.
    pub removed: Poly,
}

impl TwistedAlexander {
    pub fn laurent(&self) -> Laurent {
        Laurent::from_poly(self.polynomial.clone())
    }

    /// `(a, N)` with `Δ = a·tᴺ·Δ̄`.
    pub fn reciprocal(&self) -> Option<(Fe, i64)> {
        check_reciprocal(&self.laurent())
    }
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Fe], ys: &[Fe]) -> Result<Poly, AlgebraError> {
    let f = xs[0].field().clone();
    let n = xs.len();
    let mut coef: Vec<Fe> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = &num * &den.inv()?;
        }
    }
    let mut p = Poly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Poly::new(&f, vec![-&xs[i], Fe::one(&f)]);
        p = p.mul(&lin).add(&Poly::constant(coef[i].clone()));
    }
    Ok(p)
}

/// Determinant of a square Laurent matrix, up to a power of `t`.
pub fn laurent_det(m: &Matrix<Laurent>) -> Result<Poly, AlgebraError> {
    let n = m.rows();
    let field = m.get(0, 0).field().clone();
    if n == 0 {
        return Ok(Poly::one(&field));
    }
    let mut shifted = m.clone();
    let mut bound = 0usize;
    for i in 0..n {
        let row: Vec<&Laurent> = (0..n).map(|j| m.get(i, j)).filter(|x| !x.is_zero()).collect();
        if row.is_empty() {
            return Ok(Poly::zero(&field));
        }
        let lo = row.iter().map(|x| x.low()).min().unwrap();
        let hi = row.iter().map(|x| x.high()).max().unwrap();
        bound += (hi - lo) as usize;
        for j in 0..n {
            let v = m.get(i, j).shift(-lo);
            shifted.set(i, j, v);
        }
    }
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let x = Fe::from_int(&field, k as i64 + 1);
        let mv = shifted.map(|e| e.eval(&x).expect("polynomial entries"));
        ys.push(mv.det()?);
        xs.push(x);
    }
    interpolate(&xs, &ys)
}

/// The square minor with the `base` column block and the `row` row block removed.
pub fn square_minor(big: &Matrix<Laurent>, n: usize, base: usize, row: usize) -> Result<Poly, AlgebraError> {
    let cols: Vec<usize> = (0..big.cols()).filter(|c| c / n != base).collect();
    let rows: Vec<usize> = (0..big.rows()).filter(|r| r / n != row).collect();
    laurent_det(&big.submatrix(&rows, &cols))
}

fn strip_low(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    p.unshift(p.valuation().unwrap_or(0))
}

pub fn twisted_delta(d: &KnotDiagram, f: &ArcRepresentation) -> Result<TwistedAlexander, TwistedError> {
    twisted_delta_at(d, f, 0)
}

pub fn twisted_delta_at(d: &KnotDiagram, f: &ArcRepresentation, base: usize) -> Result<TwistedAlexander, TwistedError> {
    let n = f.dim();
    let k = d.crossings().len();
    if k == 0 {
        return Err(TwistedError::NoCrossings);
    }
    let big = constraint_matrix(d, f);
    let mut minors = Vec::new();
    for r in 0..k {
        let m = square_minor(&big, n, base, r)?;
        if !m.is_zero() {
            minors.push(m);
            if minors.len() == 2 {
                break;
            }
        }
    }
    let Some(first) = minors.first() else {
        return Err(TwistedError::Zero);
    };
    let g = minors.iter().skip(1).fold(strip_low(first).monic(), |acc, m| acc.gcd(m));
    let id = Matrix::identity(n, &Laurent::one(f.field()));
    let base_factor = strip_low(&laurent_det(&f.matrix(base).sub(&id))?);
    let mut rest = g.clone();
    let mut removed = Poly::one(f.field());
    if !base_factor.is_zero() {
        loop {
            let c = rest.gcd(&base_factor);
            if c.degree() == Some(0) {
                break;
            }
            rest = rest.div_exact(&c)?;
            removed = removed.mul(&c);
        }
    }
    let polynomial = strip_low(&rest).monic();
    Ok(TwistedAlexander { polynomial, minor_gcd: g, base_factor, removed })
}
