//! The crossing-sum form
//! `Q_ψ(C, C′) = −Σ_τ ε_τ ψ(C(α) − C(β), C′(β) − C′(β)·f(β)⁻¹)`,
//! the Blanchfield pairing and the trace-reduced form.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::coloring::{Coloring, ColoringModule};
use crate::exact_algebra::{q, AlgebraError, Fe, Matrix, Poly, QuotElem, QuotRingRef};
use crate::knot_diagram::KnotDiagram;
use crate::representation::ArcRepresentation;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PairingError {
    #[error("ψ expects dimension {expected}, representation has {got}")]
    Dimension { expected: usize, got: usize },
    #[error("1 + t is not invertible modulo Δ")]
    OnePlusT,
    #[error("the Blanchfield pairing needs the abelian representation")]
    NotAbelian,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The three coefficient forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiKind {
    /// `(x, y) ↦ Σ x̄ᵢ yᵢ`.
    Psi0,
    /// Trace form on `sl₂` in coordinates `{h, e, f}`, first argument barred.
    Killing,
    /// `(x, y) ↦ √−1 · Σ xᵢ ȳᵢ`. The factor `√−1` is kept symbolic.
    HermitianI,
}

impl PsiKind {
    pub fn parse(s: &str) -> Option<PsiKind> {
        match s {
            "psi0" | "xy" => Some(PsiKind::Psi0),
            "killing" => Some(PsiKind::Killing),
            "hermitian-i" | "hermitian" => Some(PsiKind::HermitianI),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PsiKind::Psi0 => "psi0",
            PsiKind::Killing => "killing",
            PsiKind::HermitianI => "hermitian-i",
        }
    }

    pub fn has_sqrt_minus_one(self) -> bool {
        self == PsiKind::HermitianI
    }

    /// ψ without the symbolic `√−1`.
    pub fn eval(self, x: &[QuotElem], y: &[QuotElem]) -> Result<QuotElem, PairingError> {
        if x.len() != y.len() {
            return Err(PairingError::Dimension { expected: x.len(), got: y.len() });
        }
        let ring = x[0].ring();
        let mut acc = QuotElem::zero(ring);
        match self {
            PsiKind::Psi0 => {
                for (a, b) in x.iter().zip(y) {
                    acc = acc.add(&a.bar()?.mul(b));
                }
            }
            PsiKind::HermitianI => {
                for (a, b) in x.iter().zip(y) {
                    acc = acc.add(&a.mul(&b.bar()?));
                }
            }
            PsiKind::Killing => {
                if x.len() != 3 {
                    return Err(PairingError::Dimension { expected: 3, got: x.len() });
                }
                let xb: Vec<QuotElem> = x.iter().map(|a| a.bar()).collect::<Result<_, _>>()?;
                acc = xb[0].mul(&y[0]).scale(&Fe::from_int(ring.field(), 2));
                acc = acc.add(&xb[1].mul(&y[2])).add(&xb[2].mul(&y[1]));
            }
        }
        Ok(acc)
    }
}

fn to_quot(ring: &QuotRingRef, m: &Matrix<crate::exact_algebra::Laurent>) -> Matrix<QuotElem> {
    m.map(|x| QuotElem::from_laurent(ring, x))
}

/// The signed ψ-value at crossing `index`.
pub fn crossing_weight(
    d: &KnotDiagram,
    f: &ArcRepresentation,
    psi: PsiKind,
    c: &Coloring,
    c2: &Coloring,
    index: usize,
) -> Result<QuotElem, PairingError> {
    let x = &d.crossings()[index];
    let ring = c[0][0].ring();
    let d1: Vec<QuotElem> = c[x.alpha].iter().zip(&c[x.beta]).map(|(a, b)| a.sub(b)).collect();
    let winv = to_quot(ring, f.inverse(x.beta));
    let y = &c2[x.beta];
    let d2: Vec<QuotElem> = y.iter().zip(winv.vec_mul(y)).map(|(a, b)| a.sub(&b)).collect();
    let v = psi.eval(&d1, &d2)?;
    Ok(if x.sign > 0 { v.neg() } else { v })
}

/// `Q_ψ(C, C′)` without the symbolic `√−1`.
pub fn q_value(d: &KnotDiagram, f: &ArcRepresentation, psi: PsiKind, c: &Coloring, c2: &Coloring) -> Result<QuotElem, PairingError> {
    let ring = c[0][0].ring();
    let mut acc = QuotElem::zero(ring);
    for i in 0..d.crossings().len() {
        acc = acc.add(&crossing_weight(d, f, psi, c, c2, i)?);
    }
    Ok(acc)
}

/// A Gram matrix over `F[t±1]/(Δ)`; the true value is `√−1 · matrix` when
/// `sqrt_minus_one` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct GramForm {
    pub psi: PsiKind,
    pub matrix: Matrix<QuotElem>,
    pub sqrt_minus_one: bool,
}

impl GramForm {
    pub fn ring(&self) -> &QuotRingRef {
        self.matrix.get(0, 0).ring()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `Q(x, y) = −bar(Q(y, x))` entrywise.
    pub fn is_skew_hermitian(&self) -> Result<bool, AlgebraError> {
        self.symmetry(true)
    }

    pub fn is_hermitian(&self) -> Result<bool, AlgebraError> {
        self.symmetry(false)
    }

    fn symmetry(&self, skew: bool) -> Result<bool, AlgebraError> {
        // the symbolic √−1 is odd under bar
        let skew = skew ^ self.sqrt_minus_one;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let b = self.matrix.get(j, i).bar()?;
                let b = if skew { b.neg() } else { b };
                if *self.matrix.get(i, j) != b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Entries evaluated at `t = ρ`, including the `√−1` factor.
    pub fn eval_at(&self, rho: Complex64) -> DMatrix<Complex64> {
        let n = self.dim();
        let pre = if self.sqrt_minus_one { Complex64::i() } else { Complex64::new(1.0, 0.0) };
        DMatrix::from_fn(n, n, |i, j| pre * self.matrix.get(i, j).eval(rho))
    }

    pub fn det(&self) -> Result<QuotElem, AlgebraError> {
        self.matrix.det()
    }
}

/// Gram matrix of `Q_ψ` on a coloring basis.
pub fn gram(d: &KnotDiagram, f: &ArcRepresentation, psi: PsiKind, basis: &[Coloring]) -> Result<GramForm, PairingError> {
    if psi == PsiKind::Killing && f.dim() != 3 {
        return Err(PairingError::Dimension { expected: 3, got: f.dim() });
    }
    let k = basis.len();
    let mut rows = Vec::with_capacity(k);
    for ci in basis {
        let mut row = Vec::with_capacity(k);
        for cj in basis {
            row.push(q_value(d, f, psi, ci, cj)?);
        }
        rows.push(row);
    }
    Ok(GramForm { psi, matrix: Matrix::from_rows(rows), sqrt_minus_one: psi.has_sqrt_minus_one() })
}

pub fn gram_module(d: &KnotDiagram, f: &ArcRepresentation, psi: PsiKind, module: &ColoringModule) -> Result<GramForm, PairingError> {
    gram(d, f, psi, module.basis())
}

/// `(1 − t)(1 + t)⁻¹`.
pub fn bl_factor(ring: &QuotRingRef) -> Result<QuotElem, PairingError> {
    let one = QuotElem::one(ring);
    let t = QuotElem::t(ring);
    let inv = one.add(&t).inv().map_err(|_| PairingError::OnePlusT)?;
    Ok(one.sub(&t).mul(&inv))
}

/// `Bl = (1 − t)(1 + t)⁻¹ · Q_{ψ₀}` on a coloring basis of the abelian representation.
pub fn blanchfield(d: &KnotDiagram, f: &ArcRepresentation, basis: &[Coloring]) -> Result<GramForm, PairingError> {
    if f.dim() != 1 {
        return Err(PairingError::NotAbelian);
    }
    let q = gram(d, f, PsiKind::Psi0, basis)?;
    if basis.is_empty() {
        return Ok(q);
    }
    let s = bl_factor(q.ring())?;
    Ok(GramForm { matrix: q.matrix.map(|x| x.mul(&s)), ..q })
}

/// Entrywise trace into the coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceForm {
    pub matrix: Matrix<Fe>,
    pub sqrt_minus_one: bool,
}

impl TraceForm {
    /// The complex matrix of `√−1 · b` at the field's embedding, which is
    /// hermitian for the forms used with signatures.
    pub fn times_sqrt_minus_one(&self) -> DMatrix<Complex64> {
        let n = self.matrix.rows();
        let pre = if self.sqrt_minus_one { Complex64::new(-1.0, 0.0) } else { Complex64::i() };
        DMatrix::from_fn(n, n, |i, j| pre * self.matrix.get(i, j).embed())
    }
}

pub fn trace_reduce(g: &GramForm) -> TraceForm {
    TraceForm { matrix: g.matrix.map(|x| x.trace()), sqrt_minus_one: g.sqrt_minus_one }
}

/// Expand a basis over `F[t]/Δ` to an `F`-basis `{tᵏ·C}`.
pub fn field_basis(basis: &[Coloring]) -> Vec<Coloring> {
    let mut out = Vec::new();
    for c in basis {
        let ring = c[0][0].ring().clone();
        let t = QuotElem::t(&ring);
        let mut cur = c.clone();
        for _ in 0..ring.degree() {
            out.push(cur.clone());
            cur = cur.iter().map(|v| v.iter().map(|x| x.mul(&t)).collect()).collect();
        }
    }
    out
}

/// Gram of `b = Tr ∘ Q_ψ` on the `F`-basis from [`field_basis`].
pub fn trace_gram(d: &KnotDiagram, f: &ArcRepresentation, psi: PsiKind, basis: &[Coloring]) -> Result<TraceForm, PairingError> {
    let fb = field_basis(basis);
    if fb.is_empty() {
        let z = Fe::zero(f.field());
        return Ok(TraceForm { matrix: Matrix::zeros(0, 0, &z), sqrt_minus_one: psi.has_sqrt_minus_one() });
    }
    Ok(trace_reduce(&gram(d, f, psi, &fb)?))
}

/// Scale a coloring by a ring element.
pub fn scale_coloring(c: &Coloring, s: &QuotElem) -> Coloring {
    c.iter().map(|v| v.iter().map(|x| x.mul(s)).collect()).collect()
}

/// Search for `c` with `c·c̄ = r`, where `c = k⁻¹·Σ aᵢⱼ zʲ tⁱ` has integer
/// `|aᵢⱼ| ≤ bound` and `1 ≤ k ≤ scales`.
pub fn find_norm(r: &QuotElem, bound: i64, scales: i64) -> Option<QuotElem> {
    let ring = r.ring();
    if r.is_zero() {
        return Some(QuotElem::zero(ring));
    }
    let field = ring.field();
    let (n, e) = (ring.degree(), field.degree());
    let targets: Vec<(i64, QuotElem)> = (1..=scales).map(|k| (k, r.scale(&Fe::from_int(field, k * k)))).collect();
    let mut a = vec![-bound; n * e];
    loop {
        if a.iter().any(|&x| x != 0) {
            let coeffs: Vec<Fe> = (0..n)
                .map(|i| Fe::from_coords(field, a[i * e..(i + 1) * e].iter().map(|&x| q(x)).collect()))
                .collect();
            let c = QuotElem::from_poly(ring, &Poly::new(field, coeffs));
            if let Ok(cb) = c.bar() {
                let nc = c.mul(&cb);
                if let Some((k, _)) = targets.iter().find(|(_, t)| *t == nc) {
                    return Some(c.scale(&Fe::from_int(field, *k).inv().ok()?));
                }
            }
        }
        let mut i = 0;
        loop {
            if i == a.len() {
                return None;
            }
            a[i] += 1;
            if a[i] <= bound {
                break;
            }
            a[i] = -bound;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{solve_colorings, torus_generator};
    use crate::exact_algebra::{Field, Poly, QuotRing};
    use crate::knot_diagram::{parse_pd, parse_xrl};

    #[test]
    fn diagonal_coloring_has_zero_weight() {
        let t = torus_generator(2, 3).unwrap();
        let rep = ArcRepresentation::abelian(&t.diagram, t.ring.field());
        let diag = vec![vec![QuotElem::t(&t.ring)]; t.diagram.num_arcs()];
        for i in 0..3 {
            assert!(crossing_weight(&t.diagram, &rep, PsiKind::Psi0, &diag, &t.generator, i).unwrap().is_zero());
        }
    }

    #[test]
    fn trefoil_generator_has_unit_blanchfield() {
        let t = torus_generator(2, 3).unwrap();
        let rep = ArcRepresentation::abelian(&t.diagram, t.ring.field());
        let bl = blanchfield(&t.diagram, &rep, &[t.generator.clone()]).unwrap();
        assert!(bl.matrix.get(0, 0).is_one());
        assert!(bl.is_hermitian().unwrap());
    }

    #[test]
    fn psi0_gram_is_skew_hermitian() {
        let d = parse_xrl(include_str!("../../data/fig8.xrl")).unwrap();
        let f = Field::rationals();
        let ring = QuotRing::from_poly(&Poly::from_ints(&f, &[1, -3, 1])).unwrap();
        let rep = ArcRepresentation::abelian(&d, &f);
        let m = solve_colorings(&d, &rep, &ring).unwrap();
        let g = gram(&d, &rep, PsiKind::Psi0, &field_basis(m.basis())).unwrap();
        assert!(g.is_skew_hermitian().unwrap());
        let g = gram(&d, &rep, PsiKind::Psi0, m.basis()).unwrap();
        assert!(g.det().unwrap().inv().is_ok());
    }

    #[test]
    fn pd_trefoil_agrees_up_to_norm() {
        let ring = QuotRing::from_poly(&Poly::from_ints(&Field::rationals(), &[1, -1, 1])).unwrap();
        let d = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").unwrap();
        let rep = ArcRepresentation::abelian(&d, ring.field());
        let m = solve_colorings(&d, &rep, &ring).unwrap();
        let bl = blanchfield(&d, &rep, m.basis()).unwrap();
        assert!(bl.is_hermitian().unwrap());
        assert!(!bl.matrix.get(0, 0).is_zero());
    }

    #[test]
    fn empty_basis_gives_empty_form() {
        let d = parse_xrl("a < a -> a : +").unwrap();
        let ring = QuotRing::from_poly(&Poly::one(&Field::rationals())).unwrap();
        let rep = ArcRepresentation::abelian(&d, ring.field());
        let m = solve_colorings(&d, &rep, &ring).unwrap();
        assert!(m.basis().is_empty());
        assert_eq!(blanchfield(&d, &rep, m.basis()).unwrap().dim(), 0);
    }
}
