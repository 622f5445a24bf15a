//! Colorings `C: arcs → M = (F[t±1]/Δ)ⁿ` with
//! `C(γ) = (C(α) − C(β))·f(β) + C(β)` at every crossing.

mod finite;
mod torus;

pub use finite::{count_by_rank, enumerate_finite, FiniteError, FiniteQuandle};
pub use torus::{bezout, torus_alexander, torus_generator, TorusData, TorusError};

use crate::exact_algebra::smith::kernel_mod;
use crate::exact_algebra::{AlgebraError, Laurent, Matrix, Poly, QuotElem, QuotRing, QuotRingRef};
use crate::knot_diagram::KnotDiagram;
use crate::representation::ArcRepresentation;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ColoringError {
    #[error("representation and diagram disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A coloring: one row vector per arc.
pub type Coloring = Vec<Vec<QuotElem>>;

/// The constraint matrix over `F[t±1]`: one block row per crossing, one
/// block column per arc, acting on the stacked colors as a column vector.
pub fn constraint_matrix(d: &KnotDiagram, f: &ArcRepresentation) -> Matrix<Laurent> {
    let n = f.dim();
    let field = f.field();
    let zero = Laurent::zero(field);
    let one = Laurent::one(field);
    let mut m = Matrix::zeros(d.crossings().len() * n, d.num_arcs() * n, &zero);
    let bump = |m: &mut Matrix<Laurent>, r: usize, c: usize, v: &Laurent| {
        let x = m.get(r, c).add(v);
        m.set(r, c, x);
    };
    for (ci, c) in d.crossings().iter().enumerate() {
        let fb = f.matrix(c.beta);
        for j in 0..n {
            let row = ci * n + j;
            bump(&mut m, row, c.gamma * n + j, &one);
            for i in 0..n {
                let fij = fb.get(i, j);
                bump(&mut m, row, c.alpha * n + i, &fij.neg());
                let id = if i == j { one.clone() } else { zero.clone() };
                bump(&mut m, row, c.beta * n + i, &id.sub(fij).neg());
            }
        }
    }
    m
}

/// A basis (or generating set) of the reduced coloring module.
#[derive(Debug, Clone)]
pub struct ColoringModule {
    ring: QuotRingRef,
    dim: usize,
    base: usize,
    basis: Vec<Coloring>,
    free: bool,
    elementary_divisors: Option<Vec<Poly>>,
}

impl ColoringModule {
    pub fn ring(&self) -> &QuotRingRef {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn basis(&self) -> &[Coloring] {
        &self.basis
    }

    /// Rank over `F[t]/Δ` when the module is free.
    pub fn rank(&self) -> Option<usize> {
        self.free.then_some(self.basis.len())
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    /// Invariant factors reported by the Smith-form fallback.
    pub fn elementary_divisors(&self) -> Option<&[Poly]> {
        self.elementary_divisors.as_deref()
    }

    /// The constant coloring with value `v` on every arc.
    pub fn diagonal(&self, v: &[QuotElem], arcs: usize) -> Coloring {
        vec![v.to_vec(); arcs]
    }
}

/// Check the crossing relation for a coloring.
pub fn is_coloring(d: &KnotDiagram, f: &ArcRepresentation, c: &Coloring) -> bool {
    let ring = c[0][0].ring().clone();
    d.crossings().iter().all(|x| {
        let fb = f.matrix(x.beta).map(|e| QuotElem::from_laurent(&ring, e));
        let diff: Vec<QuotElem> = c[x.alpha].iter().zip(&c[x.beta]).map(|(a, b)| a.sub(b)).collect();
        let lhs: Vec<QuotElem> = fb.vec_mul(&diff).iter().zip(&c[x.beta]).map(|(a, b)| a.add(b)).collect();
        lhs == c[x.gamma]
    })
}

/// Solve for `Col^red = {C : C(base) = 0}`, base being the first arc.
pub fn solve_colorings(d: &KnotDiagram, f: &ArcRepresentation, ring: &QuotRingRef) -> Result<ColoringModule, ColoringError> {
    solve_colorings_at(d, f, ring, 0)
}

pub fn solve_colorings_at(
    d: &KnotDiagram,
    f: &ArcRepresentation,
    ring: &QuotRingRef,
    base: usize,
) -> Result<ColoringModule, ColoringError> {
    if f.matrices().len() != d.num_arcs() {
        return Err(ColoringError::Mismatch(format!("{} matrices for {} arcs", f.matrices().len(), d.num_arcs())));
    }
    if f.field() != ring.field() && **f.field() != **ring.field() {
        return Err(ColoringError::Mismatch("coefficient fields differ".into()));
    }
    let n = f.dim();
    let big = constraint_matrix(d, f);
    let cols: Vec<usize> = (0..big.cols()).filter(|c| c / n != base).collect();
    let rows: Vec<usize> = (0..big.rows()).collect();
    let reduced = big.submatrix(&rows, &cols);
    let (gens, free, divisors) = kernel_over(&reduced, ring)?;
    let arcs = d.num_arcs();
    let basis = gens
        .into_iter()
        .map(|v| {
            let mut c = vec![vec![QuotElem::zero(ring); n]; arcs];
            for (k, &col) in cols.iter().enumerate() {
                c[col / n][col % n] = v[k].clone();
            }
            c
        })
        .collect();
    Ok(ColoringModule { ring: ring.clone(), dim: n, base, basis, free, elementary_divisors: divisors })
}

type KernelResult = (Vec<Vec<QuotElem>>, bool, Option<Vec<Poly>>);

/// Kernel over `F[t]/Δ`, splitting `Δ` when a pivot is a zero divisor.
fn kernel_over(m: &Matrix<Laurent>, ring: &QuotRingRef) -> Result<KernelResult, AlgebraError> {
    let mq = m.map(|x| QuotElem::from_laurent(ring, x));
    let zero = QuotElem::zero(ring);
    match mq.kernel(&zero) {
        Ok(k) => Ok((k, true, None)),
        Err(AlgebraError::ZeroDivisor { factor }) => {
            let delta = ring.modulus();
            let other = delta.div_exact(&factor)?;
            if factor.gcd(&other).degree() == Some(0) {
                let r1 = QuotRing::from_poly(&factor)?;
                let r2 = QuotRing::from_poly(&other)?;
                let (k1, f1, _) = kernel_over(m, &r1)?;
                let (k2, f2, _) = kernel_over(m, &r2)?;
                Ok(crt_combine(ring, &factor, &other, k1, f1, k2, f2))
            } else {
                smith_kernel(m, ring)
            }
        }
        Err(e) => Err(e),
    }
}

fn crt_combine(
    ring: &QuotRingRef,
    d1: &Poly,
    d2: &Poly,
    k1: Vec<Vec<QuotElem>>,
    free1: bool,
    k2: Vec<Vec<QuotElem>>,
    free2: bool,
) -> KernelResult {
    let (_, s, t) = d1.ext_gcd(d2);
    let e1 = QuotElem::from_poly(ring, &t.mul(d2));
    let e2 = QuotElem::from_poly(ring, &s.mul(d1));
    let lift = |v: &[QuotElem], e: &QuotElem| -> Vec<QuotElem> {
        v.iter().map(|x| QuotElem::from_poly(ring, x.rep()).mul(e)).collect()
    };
    if free1 && free2 && k1.len() == k2.len() {
        let gens = k1
            .iter()
            .zip(&k2)
            .map(|(a, b)| lift(a, &e1).iter().zip(lift(b, &e2)).map(|(x, y)| x.add(&y)).collect())
            .collect();
        return (gens, true, None);
    }
    let mut gens: Vec<Vec<QuotElem>> = k1.iter().map(|v| lift(v, &e1)).collect();
    gens.extend(k2.iter().map(|v| lift(v, &e2)));
    (gens, false, None)
}

fn smith_kernel(m: &Matrix<Laurent>, ring: &QuotRingRef) -> Result<KernelResult, AlgebraError> {
    let mp = m.map(|x| QuotElem::from_laurent(ring, x).rep().clone());
    let (gens, divisors) = kernel_mod(&mp, ring.modulus());
    let gens = gens.iter().map(|v| v.iter().map(|p| QuotElem::from_poly(ring, p)).collect()).collect();
    Ok((gens, false, Some(divisors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Field;
    use crate::knot_diagram::{parse_pd, parse_xrl, torus_diagram};

    fn trefoil_ring() -> QuotRingRef {
        QuotRing::from_poly(&Poly::from_ints(&Field::rationals(), &[1, -1, 1])).unwrap()
    }

    #[test]
    fn trefoil_rank_one_from_two_diagrams() {
        let ring = trefoil_ring();
        let f = ring.field().clone();
        for d in [torus_diagram(2, 3).unwrap(), parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").unwrap()] {
            let rep = ArcRepresentation::abelian(&d, &f);
            let m = solve_colorings(&d, &rep, &ring).unwrap();
            assert_eq!(m.rank(), Some(1));
            for c in m.basis() {
                assert!(is_coloring(&d, &rep, c));
                assert!(c[0].iter().all(|x| x.is_zero()));
            }
            let diag = m.diagonal(&[QuotElem::t(&ring)], d.num_arcs());
            assert!(is_coloring(&d, &rep, &diag));
        }
    }

    #[test]
    fn reducible_modulus_splits() {
        // Δ = (t²−t+1)(t+1): the factor t+1 carries no colorings
        let f = Field::rationals();
        let ring = QuotRing::from_poly(&Poly::from_ints(&f, &[1, -1, 1]).mul(&Poly::from_ints(&f, &[1, 1]))).unwrap();
        let d = torus_diagram(2, 3).unwrap();
        let rep = ArcRepresentation::abelian(&d, &f);
        let m = solve_colorings(&d, &rep, &ring).unwrap();
        assert!(!m.basis().is_empty());
        for c in m.basis() {
            assert!(is_coloring(&d, &rep, c));
        }
    }

    #[test]
    fn repeated_factor_uses_smith_form() {
        let f = Field::rationals();
        let tre = Poly::from_ints(&f, &[1, -1, 1]);
        let ring = QuotRing::from_poly(&tre.mul(&tre)).unwrap();
        let d = torus_diagram(2, 3).unwrap();
        let rep = ArcRepresentation::abelian(&d, &f);
        let m = solve_colorings(&d, &rep, &ring).unwrap();
        assert!(m.elementary_divisors().is_some() || m.rank().is_some());
        for c in m.basis() {
            assert!(is_coloring(&d, &rep, c));
        }
    }

    #[test]
    fn figure_eight_abelian() {
        let d = parse_xrl(include_str!("../../data/fig8.xrl")).unwrap();
        let f = Field::rationals();
        let ring = QuotRing::from_poly(&Poly::from_ints(&f, &[1, -3, 1])).unwrap();
        let rep = ArcRepresentation::abelian(&d, &f);
        let m = solve_colorings(&d, &rep, &ring).unwrap();
        assert_eq!(m.rank(), Some(1));
    }
}
