//! Acceptance runner: one PASS/FAIL line per criterion, with sub-checks and
//! timings underneath. Exits nonzero if any criterion fails.

#[path = "../../knotform/tests/props/mod.rs"]
mod props;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use knotform::builtins;
use knotform::coloring::{count_by_rank, enumerate_finite, solve_colorings, torus_generator, FiniteQuandle};
use knotform::exact_algebra::{check_reciprocal, parse_laurent, Field, Laurent, Poly, QuotElem, QuotRing};
use knotform::knot_diagram::{parse_xrl, KnotDiagram};
use knotform::pairing_engine::{blanchfield, find_norm, q_value, PsiKind};
use knotform::representation::ArcRepresentation;
use knotform::seifert_oracle::{crosscheck, signature_shortcut};
use knotform::signature_lab::HermitianSpace;
use knotform::twisted_alexander::twisted_delta;

struct Report {
    checks: Vec<(bool, String)>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks.push((ok, what.into()));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.0)
    }
}

fn poly_of(f: &knotform::exact_algebra::FieldRef, text: &str) -> Poly {
    parse_laurent(f, text).unwrap().to_poly().unwrap()
}

fn elem(ring: &knotform::exact_algebra::QuotRingRef, text: &str) -> QuotElem {
    QuotElem::from_laurent(ring, &parse_laurent(ring.field(), text).unwrap())
}

fn angle(z: Complex64) -> f64 {
    z.arg().rem_euclid(2.0 * PI)
}

/// Every Δ computed by criteria 1–4, collected for criterion 5.
type Deltas = Vec<(String, Laurent)>;

fn c1(r: &mut Report, deltas: &mut Deltas) {
    let start = Instant::now();
    for (m, n) in [(2i64, 3i64), (2, 5), (3, 4)] {
        let td = torus_generator(m, n).unwrap();
        let ring = &td.ring;
        deltas.push((format!("T({m},{n})"), Laurent::from_poly(ring.modulus().clone())));
        let rep = ArcRepresentation::abelian(&td.diagram, ring.field());
        let bl = blanchfield(&td.diagram, &rep, &[td.generator.clone()]).unwrap();
        let value = bl.matrix.get(0, 0).clone();
        let one = QuotElem::one(ring);
        let den = one
            .add(&QuotElem::t_pow(ring, -1))
            .mul(&one.sub(&QuotElem::t_pow(ring, td.b * m)))
            .mul(&one.sub(&QuotElem::t_pow(ring, td.a * n)));
        // y₁ = y₂ = 1 on the generator itself
        let formula = QuotElem::from_int(ring, n * m).mul(&den.inv().unwrap());
        let ok = value == formula;
        let ratio = value.mul(&formula.inv().unwrap());
        r.check(ok, format!("T({m},{n}) a={} b={}: Bl(g,g) = {value}, formula = {formula}, ratio {ratio}", td.a, td.b));
    }
    let t = start.elapsed();
    r.check(t < Duration::from_secs(5), format!("time {:.2}s < 5s", t.as_secs_f64()));
}

fn c2(r: &mut Report) {
    let td = torus_generator(2, 3).unwrap();
    let rep = ArcRepresentation::abelian(&td.diagram, td.ring.field());
    let v = blanchfield(&td.diagram, &rep, &[td.generator.clone()]).unwrap().matrix.get(0, 0).clone();
    let expect_ring = QuotRing::from_poly(&Poly::from_ints(&Field::rationals(), &[1, -1, 1])).unwrap();
    r.check(td.ring.modulus() == expect_ring.modulus(), format!("ring Q[t]/({})", td.ring.modulus()));
    r.check(v.is_one(), format!("Bl(g,g) = {v}"));
}

fn fig8() -> KnotDiagram {
    parse_xrl(builtins::FIG8_XRL).unwrap()
}

fn c3(r: &mut Report, deltas: &mut Deltas) {
    let start = Instant::now();
    let d = fig8();
    let rep = builtins::representation("fig8-adjoint:1,zeta3", &d).unwrap();
    let f = rep.field().clone();
    let td = twisted_delta(&d, &rep).unwrap();
    deltas.push(("fig8 adjoint".into(), td.laurent()));
    r.check(td.polynomial == Poly::from_ints(&f, &[1, -5, 1]), format!("Delta_f = {}", td.polynomial));
    // the paper's form at u + u⁻¹ = −1
    let printed = poly_of(&f, "t^2 + (2*z + 2*z^-1 - 3)*t + 1");
    r.check(td.polynomial == printed, format!("t^2+(2u+2u^-1-3)t+1 = {printed}"));

    let ring = QuotRing::from_poly(&td.polynomial).unwrap();
    let m = solve_colorings(&d, &rep, &ring).unwrap();
    r.check(m.rank() == Some(1), format!("rank {:?}", m.rank()));
    let g = &m.basis()[0];
    let qv = q_value(&d, &rep, PsiKind::Killing, g, g).unwrap();
    let k = "(z+z^-1-1)*(1-z)*(z^3-z^2-2*z-1)";
    let expect = elem(&ring, &format!("2*(t-t^-1)*{k}"));
    let ratio = qv.mul(&expect.inv().unwrap());
    let norm = find_norm(&ratio, 3, 12);
    r.check(
        qv == expect,
        format!(
            "Q(g,g) = {qv}, expected {expect}; ratio {ratio} {}",
            if norm.is_some() { "is a norm" } else { "is not a norm in the search range" }
        ),
    );
    let tr = elem(&ring, "t-t^-1").trace();
    let tr_expect = parse_laurent(&f, "2*(z+z^-1-3)").unwrap().coeff(0);
    r.check(tr == tr_expect, format!("Tr(t-t^-1) = {tr}, expected {tr_expect}"));
    let cup = qv.trace();
    let cup_expect = parse_laurent(&f, &format!("4*(z+z^-1-3)*{k}")).unwrap().coeff(0);
    r.check(cup == cup_expect, format!("cup coefficient Tr Q(g,g) = {cup}, expected {cup_expect}"));
    let t = start.elapsed();
    r.check(t < Duration::from_secs(5), format!("time {:.2}s < 5s", t.as_secs_f64()));
}

fn c4(r: &mut Report, deltas: &mut Deltas) {
    let start = Instant::now();
    let d = parse_xrl(builtins::K12A169_XRL).unwrap();
    let rep = builtins::representation("chi5", &d).unwrap();
    let f = rep.field().clone();
    let td = twisted_delta(&d, &rep).unwrap();
    deltas.push(("12a169 chi".into(), td.laurent()));
    let printed = poly_of(&f, "4*t^2 + (z^3+z^2+5)*t + 4");
    r.check(td.polynomial == printed.monic(), format!("Delta_chi = {} ~ {printed}", td.polynomial));

    let ring = QuotRing::from_poly(&td.polynomial).unwrap();
    let roots = ring.roots();
    let targets = [Complex64::new(-0.42274, 0.90624), Complex64::new(-0.42274, -0.90624)];
    let roots_ok = roots.len() == 2 && targets.iter().all(|t| roots.iter().any(|z| (z - t).norm() < 1e-4));
    r.check(roots_ok, format!("roots {roots:?}"));

    let m = solve_colorings(&d, &rep, &ring).unwrap();
    r.check(m.rank() == Some(1), format!("reduced coloring rank {:?}", m.rank()));
    let g = &m.basis()[0];
    let a2 = d.arc_index("a2").unwrap();
    let x = &g[a2][0];
    let y = elem(&ring, "(8*z^2+z^3+8*z^4-20*z^2*t-20*z^4*t)/(-12-z+z^4)").mul(x);
    let z = elem(&ring, "(-5-24*z+112*z^3+28*z^4-60*z*t+240*z^3*t+60*z^4*t)/(4*(4-13*z+65*z^2+18*z^4))").mul(x);
    r.check(y == g[a2][1], format!("y = {}, printed expression gives {y}", g[a2][1]));
    r.check(z == g[a2][2], format!("z = {}, printed expression gives {z}", g[a2][2]));

    // the component of Q at each root, relative to x·x̄
    let qv = q_value(&d, &rep, PsiKind::HermitianI, g, g).unwrap();
    let mut vals: Vec<f64> = roots.iter().map(|&rho| Complex64::i() * qv.eval(rho) / x.eval(rho).norm_sqr()).map(|c| c.re).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let vals_ok = vals.len() == 2 && (vals[0] + 29.413653381).abs() < 1e-6 && (vals[1] - 29.413653381).abs() < 1e-6;
    r.check(vals_ok, format!("root components {vals:?} x x'"));

    let h = HermitianSpace::from_colorings(&d, &rep, PsiKind::HermitianI, &ring, m.basis()).unwrap();
    let profile = h.sweep(360).unwrap();
    let mut expect_bp: Vec<f64> = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]
        .into_iter()
        .chain(roots.iter().flat_map(|z| [z.conj(), -z.conj()]))
        .map(angle)
        .collect();
    expect_bp.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let bp_ok = profile.breakpoints.len() == 6 && profile.breakpoints.iter().zip(&expect_bp).all(|(a, b)| (a - b).abs() < 1e-9);
    let unknown_at_bp = profile.breakpoints.iter().all(|b| profile.value_at(*b).is_none());
    r.check(bp_ok && unknown_at_bp, format!("six breakpoints with \"?\": {:?}", profile.breakpoints));
    let twos = profile.arcs.iter().filter(|a| a.constant && a.value == 2.0).count();
    let zeros = profile.arcs.iter().filter(|a| a.constant && a.value == 0.0).count();
    let table: Vec<String> = profile.arcs.iter().map(|a| format!("{:.3}{}", a.value, if a.constant { "" } else { "~" })).collect();
    r.check(twos == 1 && zeros + 1 == profile.arcs.len(), format!("step table arcs [{}]", table.join(", ")));
    let t = start.elapsed();
    r.check(t < Duration::from_secs(60), format!("time {:.2}s < 60s", t.as_secs_f64()));
}

fn c5(r: &mut Report, deltas: &Deltas) {
    for (name, delta) in deltas {
        let rec = check_reciprocal(delta);
        r.check(rec.is_some(), format!("{name}: {delta} {}", rec.map(|(a, n)| format!("= ({a})*t^{n}*bar")).unwrap_or("not reciprocal".into())));
    }
}

fn c6(r: &mut Report) {
    let start = Instant::now();
    for (name, text, p, t, expect) in [("trefoil", builtins::TREFOIL_XRL, 7, 3, 49u128), ("fig8", builtins::FIG8_XRL, 5, 4, 25)] {
        let d = parse_xrl(text).unwrap();
        let rep = ArcRepresentation::abelian(&d, &Field::rationals());
        let fq = FiniteQuandle::new(p, t).unwrap();
        let by_rank = count_by_rank(&d, &rep, fq.clone()).unwrap();
        let exhaustive = enumerate_finite(&d, &rep, fq, 1 << 24).unwrap();
        r.check(by_rank == expect && exhaustive == expect, format!("{name} F_{p} t={t}: rank route {by_rank}, exhaustive {exhaustive}, expected {expect}"));
    }
    let t = start.elapsed();
    r.check(t < Duration::from_secs(5), format!("time {:.2}s < 5s", t.as_secs_f64()));
}

fn c7(r: &mut Report) {
    for name in ["trefoil", "fig8"] {
        let (d, _) = builtins::diagram(name).unwrap();
        let v = builtins::seifert(name).unwrap();
        let cc = crosscheck(&d, &v).unwrap();
        let w = cc.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        r.check(cc.passed, format!("{name}: crosscheck {} witness {w} {}", if cc.passed { "passed" } else { "failed" }, cc.diagnostics.join("; ")));
        let s = signature_shortcut(&v);
        r.check(s.matches(), format!("{name}: shortcut signature {} vs classical {}", s.shortcut, s.classical));
    }
    // a mismatched pair must be rejected
    let (d, _) = builtins::diagram("trefoil").unwrap();
    let cc = crosscheck(&d, &builtins::seifert("fig8").unwrap()).unwrap();
    r.check(!cc.passed, "trefoil diagram vs figure-eight Seifert matrix is rejected");
}

fn c8(r: &mut Report) {
    let mut run = |name: &str, f: &dyn Fn() -> Result<String, String>| {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(what) => r.check(true, format!("{name}: {what} ({secs:.1}s)")),
            Err(e) => r.check(false, format!("{name}: {e} ({secs:.1}s)")),
        }
    };
    let cases = || format!("{} cases", props::CASES);
    for s in [props::fig8_abelian(), props::torus25_abelian(), props::fig8_adjoint(), props::k12a169()] {
        run(&format!("sesquilinearity {}", s.name), &|| props::sesquilinearity(&s).map(|_| cases()));
    }
    for s in [props::fig8_abelian(), props::torus25_abelian()] {
        run(&format!("skew-hermitian {}", s.name), &|| props::skew_hermitian(&s).map(|_| cases()));
    }
    for ring in props::trace_rings() {
        let name = format!("Tr(bar x) = -conj Tr x on {}[t]/({})", ring.field().name(), ring.modulus());
        run(&name, &|| props::trace_bar(&ring).map(|_| cases()));
    }
    run("lambda additivity", &|| props::lambda_additivity().map(|_| cases()));
    run("lambda unitary invariance", &|| props::lambda_unitary_invariance().map(|_| cases()));
    run("trefoil diagram independence", &|| props::diagram_independence().map(|_| cases()));
    run("2-cocycle condition", &|| {
        props::cocycle_exhaustive().map(|(n, printed)| format!("all {n} triples of F_7^2 (printed form violated on {printed})"))
    });
    run("double-delta identity", &|| props::double_delta_exhaustive().map(|n| format!("all {n} quadruples of F_7^2")));
}

fn main() {
    let mut deltas = Deltas::new();
    let results = [
        run_one(1, "torus-knot Blanchfield formula", &mut |r| c1(r, &mut deltas)),
        run_one(2, "trefoil generator value", &mut c2),
        run_one(3, "figure-eight adjoint", &mut |r| c3(r, &mut deltas)),
        run_one(4, "12a169 suite", &mut |r| c4(r, &mut deltas)),
        run_one(5, "reciprocality", &mut |r| c5(r, &deltas)),
        run_one(6, "coloring count oracles", &mut c6),
        run_one(7, "diagram and Seifert routes", &mut c7),
        run_one(8, "property suites", &mut c8),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("{passed} of {} criteria passed", results.len());
    if passed < results.len() {
        std::process::exit(1);
    }
}

fn run_one(n: usize, name: &str, f: &mut dyn FnMut(&mut Report)) -> bool {
    let mut r = Report::new();
    let start = Instant::now();
    f(&mut r);
    let secs = start.elapsed().as_secs_f64();
    let ok = r.passed();
    println!("criterion {n} {}: {name} ({secs:.2}s)", if ok { "PASS" } else { "FAIL" });
    for (c, what) in &r.checks {
        println!("    [{}] {what}", if *c { "ok" } else { "FAIL" });
    }
    ok
}
