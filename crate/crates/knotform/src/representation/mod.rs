//! Assignments of matrices over `F[t±1]` to the arcs of a diagram.

mod file;

use crate::exact_algebra::{AlgebraError, Fe, FieldRef, Laurent, Matrix, Ring};
use crate::knot_diagram::KnotDiagram;

pub use file::{parse_rep_json, rep_to_json, RepFile};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("seed on unknown arc {0}")]
    UnknownArc(String),
    #[error("seed matrix on arc {0} is not invertible over F[t±1]")]
    NotInvertible(String),
    #[error("seeds do not determine the matrix on arc {0}")]
    Underdetermined(String),
    #[error("Wirtinger relation fails at crossing {0}")]
    Inconsistent(usize),
    #[error("parameters violate s²+s⁻²+u+u⁻¹−1 = 0")]
    RelationViolated,
    #[error("non-generic parameter: the factor {0} vanishes")]
    NotGeneric(String),
    #[error("s must be fixed by the involution")]
    NotSelfConjugate,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Abelian,
    Matrix(usize),
}

/// `f(arc)` for every arc, with inverses cached.
#[derive(Debug, Clone)]
pub struct ArcRepresentation {
    field: FieldRef,
    target: Target,
    mats: Vec<Matrix<Laurent>>,
    inverses: Vec<Matrix<Laurent>>,
    /// Underlying SL₂ matrices for the elliptic family.
    sl2: Option<Vec<Matrix<Fe>>>,
}

/// Inverse of a matrix whose determinant is a monomial.
pub fn laurent_inverse(m: &Matrix<Laurent>) -> Option<Matrix<Laurent>> {
    let one = Laurent::one(m.get(0, 0).field());
    let det = m.det_expand(&one);
    let dinv = det.inv_unit().ok()?;
    Some(m.adjugate_expand(&one).scale(&dinv))
}

fn conj_by(a: &Matrix<Laurent>, b: &Matrix<Laurent>, binv: &Matrix<Laurent>) -> Matrix<Laurent> {
    binv.mul(a).mul(b)
}

impl ArcRepresentation {
    /// Every arc goes to `t`.
    pub fn abelian(d: &KnotDiagram, field: &FieldRef) -> Self {
        let t = Matrix::from_rows(vec![vec![Laurent::t(field)]]);
        let ti = Matrix::from_rows(vec![vec![Laurent::t(field).inv_unit().unwrap()]]);
        ArcRepresentation {
            field: field.clone(),
            target: Target::Abelian,
            mats: vec![t; d.num_arcs()],
            inverses: vec![ti; d.num_arcs()],
            sl2: None,
        }
    }

    /// Propagate seed matrices across the diagram by `f(γ) = f(β)⁻¹f(α)f(β)`.
    pub fn from_seeds(d: &KnotDiagram, field: &FieldRef, seeds: &[(String, Matrix<Laurent>)]) -> Result<Self, RepError> {
        let n = d.num_arcs();
        let dim = seeds.first().map(|s| s.1.rows()).ok_or(RepError::Dimension("no seeds".into()))?;
        let mut mats: Vec<Option<Matrix<Laurent>>> = vec![None; n];
        let mut invs: Vec<Option<Matrix<Laurent>>> = vec![None; n];
        for (label, m) in seeds {
            let a = d.arc_index(label).ok_or_else(|| RepError::UnknownArc(label.clone()))?;
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::Dimension(format!("seed on {label} is not {dim}×{dim}")));
            }
            invs[a] = Some(laurent_inverse(m).ok_or_else(|| RepError::NotInvertible(label.clone()))?);
            mats[a] = Some(m.clone());
        }
        loop {
            let mut changed = false;
            for c in d.crossings() {
                let (a, b, g) = (c.alpha, c.beta, c.gamma);
                if mats[b].is_none() {
                    continue;
                }
                let (mb, ib) = (mats[b].clone().unwrap(), invs[b].clone().unwrap());
                if mats[g].is_none() {
                    if let Some(ma) = &mats[a] {
                        let mg = conj_by(ma, &mb, &ib);
                        invs[g] = Some(conj_by(invs[a].as_ref().unwrap(), &mb, &ib));
                        mats[g] = Some(mg);
                        changed = true;
                    }
                } else if mats[a].is_none() {
                    let mg = mats[g].as_ref().unwrap();
                    mats[a] = Some(conj_by(mg, &ib, &mb));
                    invs[a] = Some(conj_by(invs[g].as_ref().unwrap(), &ib, &mb));
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(a) = mats.iter().position(|m| m.is_none()) {
            return Err(RepError::Underdetermined(d.arcs()[a].clone()));
        }
        let rep = ArcRepresentation {
            field: field.clone(),
            target: Target::Matrix(dim),
            mats: mats.into_iter().map(Option::unwrap).collect(),
            inverses: invs.into_iter().map(Option::unwrap).collect(),
            sl2: None,
        };
        rep.check(d)?;
        Ok(rep)
    }

    /// Wirtinger consistency at every crossing.
    pub fn check(&self, d: &KnotDiagram) -> Result<(), RepError> {
        if self.mats.len() != d.num_arcs() {
            return Err(RepError::Dimension("representation and diagram disagree on arcs".into()));
        }
        for (i, c) in d.crossings().iter().enumerate() {
            let lhs = conj_by(&self.mats[c.alpha], &self.mats[c.beta], &self.inverses[c.beta]);
            if lhs != self.mats[c.gamma] {
                return Err(RepError::Inconsistent(i));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn matrix(&self, arc: usize) -> &Matrix<Laurent> {
        &self.mats[arc]
    }

    pub fn inverse(&self, arc: usize) -> &Matrix<Laurent> {
        &self.inverses[arc]
    }

    pub fn matrices(&self) -> &[Matrix<Laurent>] {
        &self.mats
    }

    pub fn sl2(&self) -> Option<&[Matrix<Fe>]> {
        self.sl2.as_deref()
    }

    /// `t·Ad(g)` on the basis `{h, e, f}` of trace-free matrices, for the
    /// right action `x·g = g⁻¹xg`.
    pub fn adjoint(&self) -> Option<ArcRepresentation> {
        let sl2 = self.sl2.as_ref()?;
        let t = Laurent::t(&self.field);
        let tinv = t.inv_unit().unwrap();
        let mut mats = Vec::new();
        let mut invs = Vec::new();
        for g in sl2 {
            let gi = g.inverse().ok()?;
            mats.push(adjoint_matrix(g, &gi).map(|x| Laurent::constant(x.clone()).mul(&t)));
            invs.push(adjoint_matrix(&gi, g).map(|x| Laurent::constant(x.clone()).mul(&tinv)));
        }
        Some(ArcRepresentation { field: self.field.clone(), target: Target::Matrix(3), mats, inverses: invs, sl2: None })
    }
}

/// Coordinates of a trace-free 2×2 matrix in the basis `h, e, f`.
pub fn sl2_coords(x: &Matrix<Fe>) -> [Fe; 3] {
    [x.get(0, 0).clone(), x.get(0, 1).clone(), x.get(1, 0).clone()]
}

pub fn sl2_basis(field: &FieldRef) -> [Matrix<Fe>; 3] {
    let z = Fe::zero(field);
    let o = Fe::one(field);
    [
        Matrix::from_rows(vec![vec![o.clone(), z.clone()], vec![z.clone(), -&o]]),
        Matrix::from_rows(vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]]),
        Matrix::from_rows(vec![vec![z.clone(), z.clone()], vec![o, z]]),
    ]
}

/// Row `i` holds the coordinates of `g⁻¹·bᵢ·g`.
pub fn adjoint_matrix(g: &Matrix<Fe>, ginv: &Matrix<Fe>) -> Matrix<Fe> {
    let basis = sl2_basis(g.get(0, 0).field());
    Matrix::from_rows(basis.iter().map(|b| sl2_coords(&ginv.mul(b).mul(g)).to_vec()).collect())
}

/// The product whose vanishing makes `u` non-generic.
pub fn genericity_factors(u: &Fe) -> Result<Vec<(&'static str, Fe)>, AlgebraError> {
    let f = u.field();
    let one = Fe::one(f);
    let c = |n: i64| Fe::from_int(f, n);
    let w = u + &u.inv()?;
    Ok(vec![
        ("u-1", u - &one),
        ("u+u^-1-1", &w - &one),
        ("2u+2u^-1-1", &(&c(2) * &w) - &one),
        ("2u+2u^-1-5", &(&c(2) * &w) - &c(5)),
        ("u^3-u^2-2u-1", &(&(&u.pow(3)? - &u.pow(2)?) - &(&c(2) * u)) - &one),
    ])
}

/// The figure-eight family: seeds `t·[[s,1],[0,s⁻¹]]` on `A` and
/// `t·[[s,0],[u+1,s⁻¹]]` on `B`, propagated over the diagram.
pub fn elliptic_sl2_rep(d: &KnotDiagram, s: &Fe, u: &Fe, arcs: (&str, &str)) -> Result<ArcRepresentation, RepError> {
    let f = s.field().clone();
    if s.is_zero() || u.is_zero() {
        return Err(RepError::Algebra(AlgebraError::DivisionByZero));
    }
    if s.conj() != *s {
        return Err(RepError::NotSelfConjugate);
    }
    let si = s.inv()?;
    let rel = &(&(&(&(s * s) + &(&si * &si)) + u) + &u.inv()?) - &Fe::one(&f);
    if !rel.is_zero() {
        return Err(RepError::RelationViolated);
    }
    for (name, v) in genericity_factors(u)? {
        if v.is_zero() {
            return Err(RepError::NotGeneric(name.into()));
        }
    }
    let zero = Fe::zero(&f);
    let m1 = Matrix::from_rows(vec![vec![s.clone(), Fe::one(&f)], vec![zero.clone(), si.clone()]]);
    let m2 = Matrix::from_rows(vec![vec![s.clone(), zero], vec![u + &Fe::one(&f), si]]);
    let t = Laurent::t(&f);
    let lift = |m: &Matrix<Fe>| m.map(|x| Laurent::constant(x.clone()).mul(&t));
    let mut rep = ArcRepresentation::from_seeds(d, &f, &[(arcs.0.to_string(), lift(&m1)), (arcs.1.to_string(), lift(&m2))])?;
    // recover the SL₂ part by stripping the common factor t
    let sl2 = rep
        .mats
        .iter()
        .map(|m| m.map(|x| if x.is_zero() { Fe::zero(&f) } else { x.coeff(1) }))
        .collect();
    rep.sl2 = Some(sl2);
    Ok(rep)
}

/// The block `diag(ζ^{e₁},…,ζ^{e_q})·C` with `C` the `q×q` cyclic shift
/// carrying `t` in its bottom-left corner.
pub fn induced_block(field: &FieldRef, exps: &[i64]) -> Result<Matrix<Laurent>, AlgebraError> {
    let q = exps.len();
    let zeta = Fe::zeta(field).ok_or_else(|| AlgebraError::InvalidField("not cyclotomic".into()))?;
    let zero = Laurent::zero(field);
    let mut m = Matrix::zeros(q, q, &zero);
    for (i, &e) in exps.iter().enumerate() {
        let c = zeta.pow(e)?;
        if i + 1 < q {
            m.set(i, i + 1, Laurent::constant(c));
        } else {
            m.set(i, 0, Laurent::monomial(c, 1));
        }
    }
    Ok(m)
}

/// Induced representation from seed exponent vectors on arcs.
pub fn induced_rep(d: &KnotDiagram, field: &FieldRef, seeds: &[(String, Vec<i64>)]) -> Result<ArcRepresentation, RepError> {
    let mats = seeds
        .iter()
        .map(|(a, e)| Ok((a.clone(), induced_block(field, e)?)))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    ArcRepresentation::from_seeds(d, field, &mats)
}

/// Killing form check `ψ(x·g, y·g) = ψ(x, y)` for the adjoint action.
pub fn killing(x: &Matrix<Fe>, y: &Matrix<Fe>) -> Fe {
    let p = x.mul(y);
    p.get(0, 0).r_add(p.get(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Field;
    use crate::knot_diagram::parse_xrl;

    const FIG8: &str = include_str!("../../data/fig8.xrl");
    const K12: &str = include_str!("../../data/12a169.xrl");

    #[test]
    fn abelian_is_consistent() {
        let d = parse_xrl(K12).unwrap();
        let f = Field::rationals();
        let r = ArcRepresentation::abelian(&d, &f);
        r.check(&d).unwrap();
        assert!(r.matrices().iter().all(|m| *m.get(0, 0) == Laurent::t(&f)));
    }

    #[test]
    fn fig8_at_s1_u_zeta3() {
        let d = parse_xrl(FIG8).unwrap();
        let f = Field::cyclotomic_fixed(3);
        let u = Fe::gen(&f);
        let r = elliptic_sl2_rep(&d, &Fe::one(&f), &u, ("A", "B")).unwrap();
        let ad = r.adjoint().unwrap();
        ad.check(&d).unwrap();
        assert!(matches!(
            elliptic_sl2_rep(&d, &Fe::one(&f), &Fe::one(&f), ("A", "B")),
            Err(RepError::RelationViolated | RepError::NotGeneric(_))
        ));
    }

    #[test]
    fn genericity_values_at_zeta3() {
        let f = Field::cyclotomic_fixed(3);
        let u = Fe::gen(&f);
        let v = genericity_factors(&u).unwrap();
        assert_eq!(v[1].1, Fe::from_int(&f, -2));
        assert_eq!(v[2].1, Fe::from_int(&f, -3));
        assert_eq!(v[3].1, Fe::from_int(&f, -7));
    }

    #[test]
    fn inconsistent_seeds_are_rejected() {
        let d = parse_xrl(K12).unwrap();
        let f = Field::cyclotomic(5);
        let e = induced_rep(&d, &f, &[("a1".into(), vec![0, 0, 0]), ("a2".into(), vec![1, 0, 0])]);
        assert!(matches!(e, Err(RepError::Inconsistent(_))));
    }

    #[test]
    fn trivial_character_is_the_shift_everywhere() {
        let d = parse_xrl(K12).unwrap();
        let f = Field::cyclotomic(5);
        let r = induced_rep(&d, &f, &[("a1".into(), vec![0, 0, 0]), ("a2".into(), vec![0, 0, 0])]).unwrap();
        let c = induced_block(&f, &[0, 0, 0]).unwrap();
        assert!(r.matrices().iter().all(|m| *m == c));
    }
}
