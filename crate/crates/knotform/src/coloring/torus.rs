//! The cyclic generator of `Col^red` for torus knots, normalized on the
//! principal arcs.

use num_integer::Integer;

use super::{solve_colorings, Coloring, ColoringError};
use crate::exact_algebra::{AlgebraError, Fe, Field, Poly, QuotElem, QuotRing, QuotRingRef};
use crate::knot_diagram::{torus_diagram, DiagramError, KnotDiagram};
use crate::representation::ArcRepresentation;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TorusError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("coloring module is not cyclic")]
    NotCyclic,
    #[error("principal arc {0} does not match the closed form")]
    PrincipalMismatch(usize),
}

/// Everything needed to state the torus-knot Blanchfield formula.
#[derive(Debug, Clone)]
pub struct TorusData {
    pub m: i64,
    pub n: i64,
    /// `a·n + b·m = 1`.
    pub a: i64,
    pub b: i64,
    pub diagram: KnotDiagram,
    pub ring: QuotRingRef,
    pub generator: Coloring,
}

/// `(t^{nm} − 1)(t − 1)/((t^n − 1)(t^m − 1))`.
pub fn torus_alexander(m: i64, n: i64) -> Poly {
    let f = Field::rationals();
    let pow1 = |k: i64| Poly::monomial(Fe::one(&f), k as usize).sub(&Poly::one(&f));
    let num = pow1(n * m).mul(&pow1(1));
    num.div_exact(&pow1(n).mul(&pow1(m))).expect("cyclotomic quotient")
}

pub fn bezout(m: i64, n: i64) -> (i64, i64) {
    let e = n.extended_gcd(&m);
    let (mut a, mut b) = (e.x, e.y);
    if a <= 0 {
        a += m;
        b -= n;
    }
    (a, b)
}

/// The diagram has `n` strands and `m` factors, so the principal arcs are
/// `p1, …, pm`. The generator has `C(p1) = 0` and
/// `C(p_i) = (1 − t^{an(i−1)})/(1 − t^{an})` for every `i`.
pub fn torus_generator(m: i64, n: i64) -> Result<TorusData, TorusError> {
    let diagram = torus_diagram(n, m)?;
    let (a, b) = bezout(m, n);
    let delta = torus_alexander(m, n);
    let ring = QuotRing::from_poly(&delta)?;
    let rep = ArcRepresentation::abelian(&diagram, ring.field());
    let module = solve_colorings(&diagram, &rep, &ring)?;
    if module.rank() != Some(1) {
        return Err(TorusError::NotCyclic);
    }
    let g = &module.basis()[0];
    let scale = g[1][0].inv()?;
    let generator: Coloring = g.iter().map(|v| vec![v[0].mul(&scale)]).collect();
    let step = QuotElem::t_pow(&ring, a * n);
    let denom = QuotElem::one(&ring).sub(&step).inv()?;
    for i in 0..m as usize {
        let expect = QuotElem::one(&ring).sub(&QuotElem::t_pow(&ring, a * n * i as i64)).mul(&denom);
        if generator[i][0] != expect {
            return Err(TorusError::PrincipalMismatch(i + 1));
        }
    }
    Ok(TorusData { m, n, a, b, diagram, ring, generator })
}
