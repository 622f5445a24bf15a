//! The Seifert-matrix route to `Δ_K` and the Blanchfield pairing.
//!
//! Two presentations are built over `R = Q[t±1]/(Δ)`:
//!
//! * homology: `H = t^{g−1}·(1 − t)·adj(t⁻¹V − V′)` on the standard
//!   generators, read as numerators over `Δ`;
//! * cohomology: `K = (1 − t⁻¹)(tV − V′)` restricted to the column space of
//!   `adj(t⁻¹V − V′)`.
//!
//! Both are compared with the diagrammatic pairing by [`crosscheck`].

use std::fmt;

use num_traits::{Signed, Zero};

use crate::coloring::{solve_colorings, ColoringError};
use crate::exact_algebra::{q, AlgebraError, Field, Laurent, Matrix, Poly, QuotElem, QuotRing, QuotRingRef, Q};
use crate::knot_diagram::KnotDiagram;
use crate::pairing_engine::{blanchfield, find_norm, PairingError};
use crate::representation::ArcRepresentation;
use crate::twisted_alexander::{twisted_delta, TwistedError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeifertError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix is not square with even size ({0} rows)")]
    Shape(usize),
    #[error("det(V - V') = {0}, expected ±1")]
    NotUnimodular(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Twisted(#[from] TwistedError),
}

/// A validated integer Seifert matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    v: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(v: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        let n = v.len();
        if n % 2 != 0 || v.iter().any(|r| r.len() != n) {
            return Err(SeifertError::Shape(n));
        }
        let s = SeifertMatrix { v };
        if n == 0 {
            return Ok(s);
        }
        let d = s.rational(|i, j| s.v[i][j] - s.v[j][i]).det()?;
        if d.as_rational().map(|r| r.abs()) != Some(q(1)) {
            return Err(SeifertError::NotUnimodular(d.to_string()));
        }
        Ok(s)
    }

    pub fn genus(&self) -> usize {
        self.v.len() / 2
    }

    pub fn size(&self) -> usize {
        self.v.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.v
    }

    fn rational(&self, f: impl Fn(usize, usize) -> i64) -> Matrix<crate::exact_algebra::Fe> {
        let field = Field::rationals();
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| crate::exact_algebra::Fe::from_int(&field, f(i, j)))
    }

    /// `a·tᵏ·V − b·V′` as a Laurent matrix.
    fn pencil(&self, k: i64, a: i64, b: i64) -> Matrix<Laurent> {
        let field = Field::rationals();
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| {
            let x = Laurent::monomial(crate::exact_algebra::Fe::from_int(&field, a * self.v[i][j]), k);
            x.sub(&Laurent::from_int(&field, b * self.v[j][i]))
        })
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.v {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Rows of integers separated by spaces or commas; `#` starts a comment.
/// An empty file is the genus zero matrix.
pub fn parse_seifert(text: &str) -> Result<SeifertMatrix, SeifertError> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i64>().map_err(|e| SeifertError::Parse { line: k + 1, msg: format!("{s:?}: {e}") }))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    SeifertMatrix::new(rows)
}

/// `det(tV − V′)`.
pub fn delta_from_seifert(v: &SeifertMatrix) -> Laurent {
    let field = Field::rationals();
    if v.size() == 0 {
        return Laurent::one(&field);
    }
    v.pencil(1, 1, 1).det_expand(&Laurent::one(&field))
}

/// The two Blanchfield presentations of a Seifert matrix.
#[derive(Debug, Clone)]
pub struct SeifertForms {
    pub ring: Option<QuotRingRef>,
    /// `t^{g−1}(1 − t)·adj(t⁻¹V − V′)` on the standard generators.
    pub homology: Matrix<QuotElem>,
    /// `(1 − t⁻¹)(tV − V′)`.
    pub cohomology: Matrix<QuotElem>,
    /// An `R`-basis of the column space of `adj(t⁻¹V − V′)`.
    pub cohomology_basis: Vec<Vec<QuotElem>>,
    /// `ȳᵢᵀ·K·yⱼ` on that basis.
    pub cohomology_gram: Matrix<QuotElem>,
}

impl SeifertForms {
    pub fn is_hermitian(&self) -> Result<bool, AlgebraError> {
        Ok(hermitian(&self.homology)? && hermitian(&self.cohomology)? && hermitian(&self.cohomology_gram)?)
    }

    /// Rank of the homology Gram, which is the rank of the Alexander module
    /// when `R` is a field.
    pub fn homology_rank(&self) -> Result<usize, AlgebraError> {
        if self.homology.rows() == 0 {
            return Ok(0);
        }
        self.homology.rank()
    }
}

fn hermitian(m: &Matrix<QuotElem>) -> Result<bool, AlgebraError> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(j, i).bar()? != *m.get(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn empty_forms() -> SeifertForms {
    let empty = Matrix::from_rows(Vec::new());
    SeifertForms {
        ring: None,
        homology: empty.clone(),
        cohomology: empty.clone(),
        cohomology_basis: Vec::new(),
        cohomology_gram: empty,
    }
}

/// The quotient ring of `delta_from_seifert(V)`.
pub fn seifert_ring(v: &SeifertMatrix) -> Result<QuotRingRef, AlgebraError> {
    QuotRing::new(&delta_from_seifert(v))
}

pub fn blanchfield_from_seifert(v: &SeifertMatrix) -> Result<SeifertForms, SeifertError> {
    if v.size() == 0 {
        return Ok(empty_forms());
    }
    let ring = seifert_ring(v)?;
    blanchfield_in(v, &ring)
}

/// Both presentations over a given ring, which must have the modulus of `V`.
pub fn blanchfield_in(v: &SeifertMatrix, ring: &QuotRingRef) -> Result<SeifertForms, SeifertError> {
    if v.size() == 0 {
        return Ok(empty_forms());
    }
    let field = ring.field().clone();
    let one = Laurent::one(&field);
    let reduce = |m: &Matrix<Laurent>| m.map(|x| QuotElem::from_laurent(ring, x));
    let n = v.size();
    let adj = v.pencil(-1, 1, 1).adjugate_expand(&one);
    let t = Laurent::t(&field);
    let h_scale = one.sub(&t).mul(&Laurent::monomial(crate::exact_algebra::Fe::one(&field), v.genus() as i64 - 1));
    let homology = reduce(&adj.scale(&h_scale));
    let k_scale = one.sub(&t.inv_unit()?);
    let cohomology = reduce(&v.pencil(1, 1, 1).scale(&k_scale));

    let adj_q = reduce(&adj);
    let mut basis: Vec<Vec<QuotElem>> = Vec::new();
    for j in 0..n {
        let col: Vec<QuotElem> = (0..n).map(|i| adj_q.get(i, j).clone()).collect();
        if col.iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut trial = basis.clone();
        trial.push(col.clone());
        if Matrix::from_rows(trial).rank()? == basis.len() + 1 {
            basis.push(col);
        }
    }
    let kb: Vec<Vec<QuotElem>> = basis.iter().map(|y| cohomology.mul_vec(y)).collect();
    let mut gram = Matrix::zeros(basis.len(), basis.len(), &QuotElem::zero(ring));
    for (i, x) in basis.iter().enumerate() {
        let xb: Vec<QuotElem> = x.iter().map(|a| a.bar()).collect::<Result<_, _>>()?;
        for (j, ky) in kb.iter().enumerate() {
            let mut acc = QuotElem::zero(ring);
            for (a, b) in xb.iter().zip(ky) {
                acc = acc.add(&a.mul(b));
            }
            gram.set(i, j, acc);
        }
    }
    Ok(SeifertForms { ring: Some(ring.clone()), homology, cohomology, cohomology_basis: basis, cohomology_gram: gram })
}

/// Signature of a rational symmetric matrix by congruence diagonalization.
pub fn rational_signature(m: &[Vec<Q>]) -> i64 {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut sig = 0;
    while !a.is_empty() {
        let n = a.len();
        let p = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero()) else {
                    break;
                };
                // x_i ← x_i + x_j makes the (i, i) entry 2·a_ij.
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let piv = a[p][p].clone();
        sig += if piv.is_positive() { 1 } else { -1 };
        let rest: Vec<usize> = (0..n).filter(|&k| k != p).collect();
        a = rest
            .iter()
            .map(|&i| rest.iter().map(|&j| &a[i][j] - &a[i][p] * &a[p][j] / &piv).collect())
            .collect();
    }
    sig
}

/// Signatures of `K(−1)` and of `V + V′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureShortcut {
    pub shortcut: i64,
    pub classical: i64,
}

impl SignatureShortcut {
    pub fn matches(&self) -> bool {
        self.shortcut == self.classical
    }
}

pub fn signature_shortcut(v: &SeifertMatrix) -> SignatureShortcut {
    let n = v.size();
    let e = v.entries();
    // (1 − t⁻¹)(tV − V′) at t = −1 is 2·(−V − V′).
    let k: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| q(-2 * (e[i][j] + e[j][i]))).collect()).collect();
    let s: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| q(e[i][j] + e[j][i])).collect()).collect();
    SignatureShortcut { shortcut: rational_signature(&k), classical: rational_signature(&s) }
}

/// Outcome of comparing the diagram and Seifert routes.
#[derive(Debug, Clone)]
pub struct Crosscheck {
    pub passed: bool,
    pub diagnostics: Vec<String>,
    /// `c` with `Bl_D(g, g) = c̄·c·G_S(y, y)`, so `g ↦ c·y` is the isometry
    /// onto the cohomology presentation.
    pub witness: Option<QuotElem>,
    /// The same for the homology presentation.
    pub homology_witness: Option<QuotElem>,
    pub diagram_value: Option<QuotElem>,
    pub seifert_value: Option<QuotElem>,
}

impl Crosscheck {
    fn fail(diagnostics: Vec<String>) -> Self {
        Crosscheck { passed: false, diagnostics, witness: None, homology_witness: None, diagram_value: None, seifert_value: None }
    }
}

pub const NORM_BOUND: i64 = 3;
pub const NORM_SCALES: i64 = 12;

/// Compare the diagrammatic Blanchfield pairing of `D` with the Seifert
/// presentations of `V`. Only cyclic modules are tested for isometry.
pub fn crosscheck(d: &KnotDiagram, v: &SeifertMatrix) -> Result<Crosscheck, SeifertError> {
    let rat = Field::rationals();
    let f = ArcRepresentation::abelian(d, &rat);
    let td = twisted_delta(d, &f)?;
    let ds = delta_from_seifert(v);
    let ds_poly = ds.body().monic();
    if td.polynomial != ds_poly {
        return Ok(Crosscheck::fail(vec![format!("Δ mismatch: diagram {} vs Seifert {}", td.polynomial, ds_poly)]));
    }
    if ds_poly.degree() == Some(0) {
        let mut c = Crosscheck::fail(vec!["trivial Alexander module".into()]);
        c.passed = true;
        return Ok(c);
    }
    let ring = QuotRing::from_poly(&td.polynomial)?;
    let module = solve_colorings(d, &f, &ring)?;
    let forms = blanchfield_in(v, &ring)?;
    let mut diag = Vec::new();
    let d_rank = module.rank();
    let h_rank = forms.homology_rank()?;
    let c_rank = forms.cohomology_basis.len();
    diag.push(format!("ranks: diagram {d_rank:?}, homology {h_rank}, cohomology {c_rank}"));
    if d_rank != Some(h_rank) || h_rank != c_rank {
        diag.push("module ranks differ".into());
        return Ok(Crosscheck::fail(diag));
    }
    if h_rank != 1 {
        diag.push("isometry search is limited to cyclic modules".into());
        return Ok(Crosscheck::fail(diag));
    }
    if !forms.is_hermitian()? {
        diag.push("a Seifert presentation is not hermitian".into());
        return Ok(Crosscheck::fail(diag));
    }
    let bl = blanchfield(d, &f, module.basis())?;
    let dv = bl.matrix.get(0, 0).clone();
    let cv = forms.cohomology_gram.get(0, 0).clone();
    let Some(hi) = (0..forms.homology.rows()).find(|&i| forms.homology.get(i, i).inv().is_ok()) else {
        diag.push("no homology generator with unit self-pairing".into());
        return Ok(Crosscheck::fail(diag));
    };
    let hv = forms.homology.get(hi, hi).clone();
    let ratio = |a: &QuotElem, b: &QuotElem| b.inv().map(|bi| a.mul(&bi));
    let (Ok(rc), Ok(rh)) = (ratio(&dv, &cv), ratio(&dv, &hv)) else {
        diag.push(format!("degenerate values: diagram {dv}, cohomology {cv}, homology {hv}"));
        return Ok(Crosscheck::fail(diag));
    };
    let witness = find_norm(&rc, NORM_BOUND, NORM_SCALES);
    let homology_witness = find_norm(&rh, NORM_BOUND, NORM_SCALES);
    let verified = |c: &Option<QuotElem>, s: &QuotElem| match c {
        Some(c) => c.bar().map(|cb| cb.mul(c).mul(s) == dv).unwrap_or(false),
        None => false,
    };
    let passed = verified(&witness, &cv) && verified(&homology_witness, &hv);
    diag.push(format!("Bl_D(g,g) = {dv}; cohomology {cv}; homology e{hi}: {hv}"));
    if witness.is_none() {
        diag.push(format!("no norm witness for {rc} (cohomology)"));
    }
    if homology_witness.is_none() {
        diag.push(format!("no norm witness for {rh} (homology)"));
    }
    Ok(Crosscheck { passed, diagnostics: diag, witness, homology_witness, diagram_value: Some(dv), seifert_value: Some(cv) })
}

/// `Δ` normalized monic with nonzero constant term.
pub fn monic_delta(v: &SeifertMatrix) -> Poly {
    let d = delta_from_seifert(v);
    let body = d.body().clone();
    body.unshift(body.valuation().unwrap_or(0)).monic()
}
