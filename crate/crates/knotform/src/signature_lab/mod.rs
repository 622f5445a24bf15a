//! λ-invariants of hermitian spaces with a `t`-action, twisting by unit
//! complex numbers, and unit-circle sweeps of the signature difference.
//!
//! Coordinates are column vectors: the form is `b̃(x, y) = x* G y` with
//! `G` hermitian (it is `√−1·b`), and `t` acts by `x ↦ T x`.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::coloring::Coloring;
use crate::exact_algebra::{QuotElem, QuotRingRef};
use crate::knot_diagram::KnotDiagram;
use crate::pairing_engine::{trace_gram, PairingError, PsiKind};
use crate::representation::ArcRepresentation;

pub const TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SignatureError {
    #[error("form is degenerate on the component at {0}")]
    Degenerate(String),
    #[error("generalized eigenspaces have total dimension {got}, expected {expected}")]
    Decomposition { got: usize, expected: usize },
    #[error("w = {0} is not generic")]
    NonGeneric(String),
    #[error("|w| must be 1")]
    NotUnit,
    #[error("condition violated: {0}")]
    Condition(String),
    #[error("the coloring module must be free")]
    NotFree,
    #[error(transparent)]
    Pairing(#[from] PairingError),
}

#[derive(Debug, Clone)]
pub struct HermitianSpace {
    /// Hermitian matrix of `√−1·b`.
    pub gram: DMatrix<Complex64>,
    /// Multiplication by `t` on column coordinates.
    pub t_action: DMatrix<Complex64>,
    /// Eigenvalues of `t_action` with multiplicity.
    pub roots: Vec<Complex64>,
    /// Whether `b` is conjugate-linear in its second argument.
    pub conj_second: bool,
}

fn cfmt(z: Complex64) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}

impl HermitianSpace {
    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    /// `b̃` on the `F`-basis `{tᵏ·g}` of a cyclic coloring module.
    pub fn from_colorings(
        d: &KnotDiagram,
        f: &ArcRepresentation,
        psi: PsiKind,
        ring: &QuotRingRef,
        basis: &[Coloring],
    ) -> Result<HermitianSpace, SignatureError> {
        let tf = trace_gram(d, f, psi, basis)?;
        let conj_second = psi == PsiKind::HermitianI;
        let b = tf.times_sqrt_minus_one();
        let gram = if conj_second { b.transpose() } else { b };
        let deg = ring.degree();
        let n = deg * basis.len();
        // column j of T is the coordinate vector of e_j·t
        let coeffs: Vec<Complex64> = ring.modulus().coeffs().iter().map(|c| c.embed()).collect();
        let mut t_action = DMatrix::zeros(n, n);
        for blk in 0..basis.len() {
            for k in 0..deg {
                let j = blk * deg + k;
                if k + 1 < deg {
                    t_action[(j + 1, j)] = Complex64::new(1.0, 0.0);
                } else {
                    for i in 0..deg {
                        t_action[(blk * deg + i, j)] = -coeffs[i];
                    }
                }
            }
        }
        let mut roots = Vec::new();
        for _ in basis {
            roots.extend(ring.roots());
        }
        Ok(HermitianSpace { gram, t_action, roots, conj_second })
    }

    /// `H ⊗ τ` with `τ′ = w·τ`; the Gram is unchanged.
    pub fn twist(&self, w: Complex64) -> HermitianSpace {
        HermitianSpace {
            gram: self.gram.clone(),
            t_action: self.t_action.map(|x| x * w),
            roots: self.roots.iter().map(|r| r * w).collect(),
            conj_second: self.conj_second,
        }
    }

    /// Change of basis `x = P x′`.
    pub fn transform(&self, p: &DMatrix<Complex64>) -> Option<HermitianSpace> {
        let pinv = p.clone().try_inverse()?;
        Some(HermitianSpace {
            gram: p.adjoint() * &self.gram * p,
            t_action: &pinv * &self.t_action * p,
            roots: self.roots.clone(),
            conj_second: self.conj_second,
        })
    }

    /// Distinct eigenvalues with multiplicities.
    pub fn distinct_roots(&self) -> Vec<(Complex64, usize)> {
        let mut out: Vec<(Complex64, usize)> = Vec::new();
        for r in &self.roots {
            match out.iter_mut().find(|(z, _)| (z - r).norm() < 1e-7) {
                Some(e) => e.1 += 1,
                None => out.push((*r, 1)),
            }
        }
        out
    }

    /// Generalized eigenspaces `V_z = ker (T − z)^k`, as column bases.
    pub fn primary_decompose(&self) -> Result<Vec<(Complex64, DMatrix<Complex64>)>, SignatureError> {
        let n = self.dim();
        let mut out = Vec::new();
        let mut total = 0;
        for (z, mult) in self.distinct_roots() {
            let shifted = &self.t_action - DMatrix::identity(n, n) * z;
            let mut pw = DMatrix::identity(n, n);
            for _ in 0..mult {
                pw = &pw * &shifted;
            }
            let basis = null_space(&pw, mult);
            total += basis.ncols();
            out.push((z, basis));
        }
        if total != n {
            return Err(SignatureError::Decomposition { got: total, expected: n });
        }
        Ok(out)
    }

    /// `λ(H, b) = Σ_{|z|=1} λ(V_z, b)`, returned per component as well.
    pub fn lambda_components(&self) -> Result<Vec<(Complex64, f64)>, SignatureError> {
        let mut out = Vec::new();
        for (z, v) in self.primary_decompose()? {
            if (z.norm() - 1.0).abs() > 1e-7 {
                continue;
            }
            let val = if (z - 1.0).norm() < 1e-7 {
                let tinv = self.t_action.clone().try_inverse().expect("t acts invertibly");
                let a = &self.t_action - tinv;
                let g1 = if self.conj_second { &self.gram * &a } else { a.adjoint() * &self.gram };
                let g1 = (&g1 + g1.adjoint()) * Complex64::new(0.5, 0.0);
                -(restricted_signature(&g1, &v).map_err(|_| SignatureError::Degenerate(cfmt(z)))? as f64)
            } else {
                let mut a = z.arg() / (2.0 * PI);
                if a < 0.0 {
                    a += 1.0;
                }
                let s = restricted_signature(&self.gram, &v).map_err(|_| SignatureError::Degenerate(cfmt(z)))?;
                (2.0 * a - 1.0) * s as f64
            };
            out.push((z, val));
        }
        Ok(out)
    }

    pub fn lambda(&self) -> Result<f64, SignatureError> {
        Ok(self.lambda_components()?.iter().map(|x| x.1).sum())
    }

    /// Arguments in `[0, 2π)` of `{1, −1} ∪ {ρ̄, −ρ̄ : |ρ| = 1}`.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts = vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)];
        for (r, _) in self.distinct_roots() {
            if (r.norm() - 1.0).abs() < 1e-7 {
                pts.push(r.conj());
                pts.push(-r.conj());
            }
        }
        let mut th: Vec<f64> = pts.iter().map(|z| angle(*z)).collect();
        th.sort_by(|a, b| a.partial_cmp(b).unwrap());
        th.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        th
    }

    /// `λ(H, b) − λ(H ⊗ τ, b ⊗ w)`.
    pub fn cg_difference(&self, w: Complex64) -> Result<f64, SignatureError> {
        if (w.norm() - 1.0).abs() > 1e-9 {
            return Err(SignatureError::NotUnit);
        }
        let th = angle(w);
        if self.breakpoints().iter().any(|b| circ_dist(*b, th) < 1e-9) {
            return Err(SignatureError::NonGeneric(cfmt(w)));
        }
        Ok(self.lambda()? - self.twist(w).lambda()?)
    }

    /// Evaluate on `grid` equally spaced angles and at three interior points
    /// of every arc between breakpoints.
    pub fn sweep(&self, grid: usize) -> Result<SignatureProfile, SignatureError> {
        let bps = self.breakpoints();
        let mut arcs = Vec::new();
        for (i, &lo) in bps.iter().enumerate() {
            let hi = if i + 1 < bps.len() { bps[i + 1] } else { bps[0] + 2.0 * PI };
            let mut vals = Vec::new();
            for k in 1..=3 {
                let th = lo + (hi - lo) * k as f64 / 4.0;
                vals.push(self.cg_difference(Complex64::from_polar(1.0, th))?);
            }
            let constant = vals.iter().all(|v| (v - vals[0]).abs() < 1e-6);
            arcs.push(ArcValue { from: lo, to: hi, value: vals[1], constant });
        }
        let mut samples = Vec::with_capacity(grid);
        for k in 0..grid {
            let th = 2.0 * PI * k as f64 / grid as f64;
            let v = match self.cg_difference(Complex64::from_polar(1.0, th)) {
                Ok(v) => Some(v),
                Err(SignatureError::NonGeneric(_)) => None,
                Err(e) => return Err(e),
            };
            samples.push((th, v));
        }
        Ok(SignatureProfile { breakpoints: bps, arcs, samples })
    }
}

fn angle(z: Complex64) -> f64 {
    let a = z.arg();
    let a = if a < -1e-12 { a + 2.0 * PI } else { a.max(0.0) };
    if a >= 2.0 * PI - 1e-12 {
        0.0
    } else {
        a
    }
}

fn circ_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// Orthonormal basis of `ker A`, expecting dimension `expect` when the
/// singular values leave it ambiguous.
fn null_space(a: &DMatrix<Complex64>, expect: usize) -> DMatrix<Complex64> {
    let n = a.ncols();
    let svd = a.clone().svd(false, true);
    let vt = svd.v_t.expect("requested");
    let sv = svd.singular_values;
    let scale = sv.iter().cloned().fold(1.0, f64::max);
    let mut idx: Vec<usize> = (0..sv.len()).collect();
    idx.sort_by(|&i, &j| sv[i].partial_cmp(&sv[j]).unwrap());
    let small: Vec<usize> = idx.iter().cloned().filter(|&i| sv[i] < 1e-8 * scale).collect();
    let chosen: Vec<usize> = if small.len() == expect { small } else { idx.into_iter().take(expect).collect() };
    DMatrix::from_fn(n, chosen.len(), |r, c| vt[(chosen[c], r)].conj())
}

/// Signature of `V* G V`, failing if an eigenvalue is within tolerance of 0.
pub fn restricted_signature(g: &DMatrix<Complex64>, v: &DMatrix<Complex64>) -> Result<i64, f64> {
    let h = v.adjoint() * g * v;
    let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
    hermitian_signature(&h)
}

pub fn hermitian_signature(h: &DMatrix<Complex64>) -> Result<i64, f64> {
    if h.nrows() == 0 {
        return Ok(0);
    }
    let eig = h.clone().symmetric_eigenvalues();
    let scale = eig.iter().map(|x| x.abs()).fold(1.0, f64::max);
    let mut s = 0;
    for &e in eig.iter() {
        if e.abs() < TOL * scale {
            return Err(e);
        }
        s += if e > 0.0 { 1 } else { -1 };
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcValue {
    pub from: f64,
    pub to: f64,
    pub value: f64,
    /// All three interior samples agreed.
    pub constant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignatureProfile {
    pub breakpoints: Vec<f64>,
    pub arcs: Vec<ArcValue>,
    pub samples: Vec<(f64, Option<f64>)>,
}

impl SignatureProfile {
    pub fn value_at(&self, theta: f64) -> Option<f64> {
        let th = theta.rem_euclid(2.0 * PI);
        if self.breakpoints.iter().any(|b| circ_dist(*b, th) < 1e-9) {
            return None;
        }
        self.arcs
            .iter()
            .find(|a| (a.from < th && th < a.to) || (a.to > 2.0 * PI && th + 2.0 * PI < a.to))
            .map(|a| a.value)
    }

    pub fn csv(&self) -> String {
        let mut s = String::from("theta,value\n");
        for (th, v) in &self.samples {
            match v {
                Some(v) => s.push_str(&format!("{th:.9},{}\n", fmt_value(*v))),
                None => s.push_str(&format!("{th:.9},?\n")),
            }
        }
        s
    }
}

fn fmt_value(v: f64) -> String {
    let r = v.round();
    if (v - r).abs() < 1e-6 {
        format!("{}", r as i64)
    } else {
        format!("{v:.9}")
    }
}

impl fmt::Display for SignatureProfile {
    /// Alternating breakpoints and arcs, starting and ending at `w = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut head = Vec::new();
        let mut row = Vec::new();
        for a in &self.arcs {
            head.push(format!("{:.4}", a.from));
            row.push("?".to_string());
            head.push("...".into());
            row.push(fmt_value(a.value));
        }
        head.push(format!("{:.4}", 2.0 * PI));
        row.push("?".into());
        writeln!(f, "theta | {}", head.join(" | "))?;
        write!(f, "value | {}", row.join(" | "))
    }
}

/// Scale a coloring basis by a unit of the ring.
pub fn rescale(basis: &[Coloring], s: &QuotElem) -> Vec<Coloring> {
    basis.iter().map(|c| crate::pairing_engine::scale_coloring(c, s)).collect()
}
