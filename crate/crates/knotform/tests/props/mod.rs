//! Randomized and exhaustive property checks, shared by the `properties`
//! test target and the acceptance runner.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

use knotform::builtins;
use knotform::coloring::{solve_colorings, torus_generator, Coloring};
use knotform::exact_algebra::{parse_laurent, q, Fe, Field, Poly, QuotElem, QuotRing, QuotRingRef};
use knotform::knot_diagram::{parse_pd, parse_xrl, KnotDiagram};
use knotform::pairing_engine::{blanchfield, find_norm, q_value, scale_coloring, PsiKind};
use knotform::quandle_cocycle::{
    cocycle_violation, double_delta_weight, phi_from_psi, printed_form_violation, sample_premise_pair, AlexanderQuandle, Cocycle,
};
use knotform::representation::ArcRepresentation;
use knotform::signature_lab::HermitianSpace;
use knotform::twisted_alexander::twisted_delta;

pub const CASES: u32 = 1000;

pub fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn finish<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// A diagram, a representation, its coloring ring and reduced basis.
pub struct Setup {
    pub name: &'static str,
    pub d: KnotDiagram,
    pub rep: ArcRepresentation,
    pub ring: QuotRingRef,
    pub basis: Vec<Coloring>,
    pub psi: PsiKind,
}

fn setup(name: &'static str, d: KnotDiagram, rep: ArcRepresentation, psi: PsiKind) -> Setup {
    let td = twisted_delta(&d, &rep).expect("nonzero Δ");
    let ring = QuotRing::from_poly(&td.polynomial).expect("ring");
    let basis = solve_colorings(&d, &rep, &ring).expect("colorings").basis().to_vec();
    Setup { name, d, rep, ring, basis, psi }
}

pub fn fig8_abelian() -> Setup {
    let d = parse_xrl(builtins::FIG8_XRL).unwrap();
    let rep = ArcRepresentation::abelian(&d, &Field::rationals());
    setup("fig8/abelian", d, rep, PsiKind::Psi0)
}

pub fn torus25_abelian() -> Setup {
    let t = torus_generator(2, 5).unwrap();
    let rep = ArcRepresentation::abelian(&t.diagram, t.ring.field());
    Setup { name: "T(2,5)/abelian", d: t.diagram, rep, ring: t.ring, basis: vec![t.generator], psi: PsiKind::Psi0 }
}

pub fn fig8_adjoint() -> Setup {
    let d = parse_xrl(builtins::FIG8_XRL).unwrap();
    let rep = builtins::representation("fig8-adjoint", &d).unwrap();
    setup("fig8/adjoint", d, rep, PsiKind::Killing)
}

pub fn k12a169() -> Setup {
    let d = parse_xrl(builtins::K12A169_XRL).unwrap();
    let rep = builtins::representation("chi5", &d).unwrap();
    setup("12a169/chi", d, rep, PsiKind::HermitianI)
}

/// A ring element from small integer coordinates.
pub fn elem(ring: &QuotRingRef, coords: &[i64]) -> QuotElem {
    let f = ring.field().clone();
    let fd = f.degree();
    let coeffs: Vec<Fe> = coords
        .chunks(fd)
        .take(ring.degree())
        .map(|c| Fe::from_coords(&f, c.iter().map(|&x| q(x)).collect()))
        .collect();
    QuotElem::from_poly(ring, &Poly::new(&f, coeffs))
}

fn coords(ring: &QuotRingRef) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, ring.degree() * ring.field().degree())
}

fn combo(s: &Setup, cs: &[Vec<i64>]) -> Coloring {
    let mut out: Option<Coloring> = None;
    for (g, c) in s.basis.iter().zip(cs) {
        let term = scale_coloring(g, &elem(&s.ring, c));
        out = Some(match out {
            None => term,
            Some(acc) => acc.iter().zip(&term).map(|(x, y)| x.iter().zip(y).map(|(a, b)| a.add(b)).collect()).collect(),
        });
    }
    out.expect("nonempty basis")
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

/// `Q(xa, yb) = ā Q(x,y) b`, or `a Q(x,y) b̄` for the form conjugate-linear
/// in its second slot.
pub fn sesquilinearity(s: &Setup) -> Result<(), String> {
    let k = s.basis.len();
    let v = || prop::collection::vec(coords(&s.ring), k);
    let strat = (v(), v(), coords(&s.ring), coords(&s.ring));
    finish(runner().run(&strat, |(xc, yc, ac, bc)| {
        let (x, y) = (combo(s, &xc), combo(s, &yc));
        let (a, b) = (elem(&s.ring, &ac), elem(&s.ring, &bc));
        let q = |u: &Coloring, w: &Coloring| q_value(&s.d, &s.rep, s.psi, u, w).unwrap();
        let lhs = q(&scale_coloring(&x, &a), &scale_coloring(&y, &b));
        let base = q(&x, &y);
        let rhs = if s.psi == PsiKind::HermitianI {
            a.mul(&base).mul(&b.bar().unwrap())
        } else {
            a.bar().unwrap().mul(&base).mul(&b)
        };
        check(lhs == rhs, || format!("{}: {lhs} != {rhs}", s.name))
    }))
}

/// `Q(x, y) = −bar(Q(y, x))` for ψ₀.
pub fn skew_hermitian(s: &Setup) -> Result<(), String> {
    let k = s.basis.len();
    let v = || prop::collection::vec(coords(&s.ring), k);
    finish(runner().run(&(v(), v()), |(xc, yc)| {
        let (x, y) = (combo(s, &xc), combo(s, &yc));
        let q = |u: &Coloring, w: &Coloring| q_value(&s.d, &s.rep, PsiKind::Psi0, u, w).unwrap();
        let (xy, yx) = (q(&x, &y), q(&y, &x));
        check(xy == yx.bar().unwrap().neg(), || format!("{}: Q(x,y) = {xy}, Q(y,x) = {yx}", s.name))
    }))
}

/// `Tr(x̄) = −conj(Tr x)`; for a trivial involution this reads `Tr∘bar = −Tr`.
pub fn trace_bar(ring: &QuotRingRef) -> Result<(), String> {
    finish(runner().run(&coords(ring), |c| {
        let x = elem(ring, &c);
        let lhs = x.bar().unwrap().trace();
        let rhs = -&x.trace().conj();
        check(lhs == rhs, || format!("Tr(bar {x}) = {lhs}, -conj Tr = {rhs}"))
    }))
}

pub fn trace_rings() -> Vec<QuotRingRef> {
    let q = Field::rationals();
    let z3 = Field::cyclotomic_fixed(3);
    let z5 = Field::cyclotomic(5);
    let chi = parse_laurent(&z5, "4*t^2 + (z^3+z^2+5)*t + 4").unwrap();
    vec![
        QuotRing::from_poly(&Poly::from_ints(&q, &[1, -1, 1])).unwrap(),
        QuotRing::from_poly(&Poly::from_ints(&q, &[1, -3, 1])).unwrap(),
        QuotRing::from_poly(&Poly::from_ints(&z3, &[1, -5, 1])).unwrap(),
        QuotRing::new(&chi).unwrap(),
    ]
}

// ---------------------------------------------------------------------------
// λ on synthetic hermitian spaces

#[derive(Debug, Clone)]
pub struct Spec {
    /// `(angle, modulus, gram diagonal entry)` per component.
    pub comps: Vec<(f64, f64, f64)>,
}

fn spec_strategy() -> impl Strategy<Value = Spec> {
    // angles are kept apart so components stay well separated
    prop::collection::vec((0usize..12, prop::bool::ANY, 0.3f64..3.0, prop::bool::ANY), 1..5).prop_map(|v| {
        let mut seen = std::collections::BTreeSet::new();
        let mut comps = Vec::new();
        for (slot, on_circle, mag, pos) in v {
            if !seen.insert(slot) {
                continue;
            }
            let angle = (slot as f64 + 0.37) * std::f64::consts::TAU / 12.0;
            let modulus = if on_circle { 1.0 } else { 1.0 + 0.5 * mag };
            comps.push((angle, modulus, if pos { mag } else { -mag }));
        }
        Spec { comps }
    })
}

pub fn space(spec: &Spec) -> HermitianSpace {
    let n = spec.comps.len();
    let roots: Vec<Complex64> = spec.comps.iter().map(|(a, m, _)| Complex64::from_polar(*m, *a)).collect();
    let z = Complex64::new(0.0, 0.0);
    HermitianSpace {
        gram: DMatrix::from_fn(n, n, |i, j| if i == j { Complex64::new(spec.comps[i].2, 0.0) } else { z }),
        t_action: DMatrix::from_fn(n, n, |i, j| if i == j { roots[i] } else { z }),
        roots,
        conj_second: false,
    }
}

fn direct_sum(a: &HermitianSpace, b: &HermitianSpace) -> HermitianSpace {
    let (n, m) = (a.dim(), b.dim());
    let z = Complex64::new(0.0, 0.0);
    let block = |x: &DMatrix<Complex64>, y: &DMatrix<Complex64>| {
        DMatrix::from_fn(n + m, n + m, |i, j| match (i < n, j < n) {
            (true, true) => x[(i, j)],
            (false, false) => y[(i - n, j - n)],
            _ => z,
        })
    };
    HermitianSpace {
        gram: block(&a.gram, &b.gram),
        t_action: block(&a.t_action, &b.t_action),
        roots: a.roots.iter().chain(&b.roots).cloned().collect(),
        conj_second: false,
    }
}

fn unitary(n: usize, entries: &[(f64, f64)]) -> DMatrix<Complex64> {
    let m = DMatrix::from_fn(n, n, |i, j| {
        let (re, im) = entries[(i * n + j) % entries.len()];
        Complex64::new(re + if i == j { 2.0 } else { 0.0 }, im)
    });
    m.qr().q()
}

/// `λ(H₁ ⊕ H₂) = λ(H₁) + λ(H₂)`, and the per-component values summed in a
/// shuffled order give `λ(H)`.
pub fn lambda_additivity() -> Result<(), String> {
    let strat = (spec_strategy(), spec_strategy(), any::<u64>());
    finish(runner().run(&strat, |(s1, s2, seed)| {
        let (h1, h2) = (space(&s1), space(&s2));
        // shifting the second spec's angles keeps the components apart
        let h2 = h2.twist(Complex64::from_polar(1.0, std::f64::consts::TAU / 24.0));
        let sum = direct_sum(&h1, &h2);
        let (l1, l2, l) = (h1.lambda().unwrap(), h2.lambda().unwrap(), sum.lambda().unwrap());
        check((l - l1 - l2).abs() < 1e-9, || format!("{l} != {l1} + {l2}"))?;
        let mut parts = sum.lambda_components().unwrap();
        let len = parts.len();
        for i in 0..len {
            parts.swap(i, (seed as usize).wrapping_mul(i + 7) % len);
        }
        let shuffled: f64 = parts.iter().map(|x| x.1).sum();
        check((shuffled - l).abs() < 1e-9, || format!("shuffled sum {shuffled} != {l}"))
    }))
}

/// `λ(U*GU, U⁻¹TU) = λ(G, T)` for unitary `U`.
pub fn lambda_unitary_invariance() -> Result<(), String> {
    let strat = (spec_strategy(), prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 16));
    finish(runner().run(&strat, |(spec, entries)| {
        let h = space(&spec);
        let u = unitary(h.dim(), &entries);
        let moved = h.transform(&u).unwrap();
        let (a, b) = (h.lambda().unwrap(), moved.lambda().unwrap());
        check((a - b).abs() < 1e-9, || format!("{a} != {b}"))
    }))
}

// ---------------------------------------------------------------------------
// diagram independence

/// The trefoil from `T(2,3)` and from its PD code: with `c` found once so
/// that `g_pd ↦ c·g_T` is an isometry, `Bl_pd(r·g_pd, s·g_pd)` equals
/// `Bl_T(rc·g_T, sc·g_T)` for random `r, s`.
pub fn diagram_independence() -> Result<(), String> {
    let t = torus_generator(2, 3).unwrap();
    let rep_t = ArcRepresentation::abelian(&t.diagram, t.ring.field());
    let pd = parse_pd(builtins::TREFOIL_PD).unwrap();
    let rep_pd = ArcRepresentation::abelian(&pd, t.ring.field());
    let m = solve_colorings(&pd, &rep_pd, &t.ring).unwrap();
    if m.rank() != Some(1) {
        return Err(format!("PD trefoil has rank {:?}", m.rank()));
    }
    let g_pd = m.basis()[0].clone();
    let bl = |d: &KnotDiagram, rep: &ArcRepresentation, x: &Coloring, y: &Coloring| {
        blanchfield(d, rep, &[x.clone(), y.clone()]).unwrap().matrix.get(0, 1).clone()
    };
    let v_pd = bl(&pd, &rep_pd, &g_pd, &g_pd);
    let v_t = bl(&t.diagram, &rep_t, &t.generator, &t.generator);
    let ratio = v_pd.mul(&v_t.inv().map_err(|e| e.to_string())?);
    let c = find_norm(&ratio, 3, 12).ok_or_else(|| format!("ratio {ratio} is not a norm"))?;
    let strat = (coords(&t.ring), coords(&t.ring));
    finish(runner().run(&strat, |(rc, sc)| {
        let (r, s) = (elem(&t.ring, &rc), elem(&t.ring, &sc));
        let lhs = bl(&pd, &rep_pd, &scale_coloring(&g_pd, &r), &scale_coloring(&g_pd, &s));
        let rhs = bl(&t.diagram, &rep_t, &scale_coloring(&t.generator, &r.mul(&c)), &scale_coloring(&t.generator, &s.mul(&c)));
        check(lhs == rhs, || format!("{lhs} != {rhs}"))
    }))
}

// ---------------------------------------------------------------------------
// exhaustive quandle checks

/// The 2-cocycle condition for `φ_ψ` on all triples of the sample quandle.
/// Returns the number of triples checked and the number violating the
/// printed form of the identity.
pub fn cocycle_exhaustive() -> Result<(u128, usize), String> {
    let (q, psi) = sample_premise_pair();
    let phi = phi_from_psi(&q, &psi).map_err(|e| e.to_string())?;
    if let Some(w) = cocycle_violation(&q, &phi) {
        return Err(format!("cocycle condition fails at {w:?}"));
    }
    let printed = printed_violations(&q, &phi);
    Ok((q.size().pow(3), printed))
}

fn printed_violations(q: &AlexanderQuandle, phi: &Cocycle) -> usize {
    if printed_form_violation(q, phi).is_none() {
        return 0;
    }
    let els: Vec<Vec<u64>> = q.elements().collect();
    let mut bad = 0;
    let p = q.p();
    for x in &els {
        for y in &els {
            for z in &els {
                let v = phi.eval(q, x, z) + phi.eval(q, &q.op(x, z), &q.op(y, z)) + 2 * p - phi.eval(q, y, z) - phi.eval(q, &q.op(x, y), z);
                if v % p != 0 {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// The double-delta weight identity on every `(a, b, c, d)` of the sample
/// quandle; returns the number of quadruples.
pub fn double_delta_exhaustive() -> Result<u128, String> {
    let (q, psi) = sample_premise_pair();
    let els: Vec<Vec<u64>> = q.elements().collect();
    let mut n = 0u128;
    for a in &els {
        for b in &els {
            for c in &els {
                for d in &els {
                    let r = double_delta_weight(&q, &psi, a, b, c, d);
                    if !r.holds() {
                        return Err(format!("fails at a={a:?} b={b:?} c={c:?} d={d:?}: {r:?}"));
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}
