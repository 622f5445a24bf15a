//! Quotient rings `F[t±1]/(Δ)` and the Laurent-series trace map.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::field::{Fe, FieldRef};
use super::poly::{Laurent, Poly};
use super::AlgebraError;

/// `F[t±1]/(Δ)`, with `Δ` stored monic with nonzero constant term.
#[derive(Debug)]
pub struct QuotRing {
    modulus: Poly,
    /// The input was `unit.0 · t^unit.1 · modulus`.
    unit: (Fe, i64),
    /// `(a, N)` with `Δ = a·t^N·Δ̄` when it exists.
    reciprocal: Option<(Fe, i64)>,
    t_inv: Poly,
}

pub type QuotRingRef = Arc<QuotRing>;

impl PartialEq for QuotRing {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

/// Solve `Δ = a·t^N·Δ̄` coefficientwise.
pub fn check_reciprocal(delta: &Laurent) -> Option<(Fe, i64)> {
    if delta.is_zero() {
        return None;
    }
    let (lo, hi) = (delta.low(), delta.high());
    let n = lo + hi;
    let a = &delta.coeff(hi) * &delta.coeff(lo).conj().inv().ok()?;
    for k in lo..=hi {
        if delta.coeff(k) != &a * &delta.coeff(n - k).conj() {
            return None;
        }
    }
    Some((a, n))
}

impl QuotRing {
    pub fn new(delta: &Laurent) -> Result<QuotRingRef, AlgebraError> {
        if delta.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let field = delta.field().clone();
        let body = delta.body().clone();
        let lead = body.lead().unwrap().clone();
        let modulus = body.monic();
        let reciprocal = check_reciprocal(&Laurent::from_poly(modulus.clone()));
        let t_inv = if modulus.degree() == Some(0) {
            Poly::zero(&field)
        } else {
            // t · (Δ₀ − Δ)/(t·Δ₀) ≡ 1
            let c0 = modulus.coeff(0);
            let num = Poly::constant(c0.clone()).sub(&modulus);
            num.unshift(1).scale(&c0.inv()?)
        };
        Ok(Arc::new(QuotRing { modulus, unit: (lead, delta.low()), reciprocal, t_inv }))
    }

    pub fn from_poly(delta: &Poly) -> Result<QuotRingRef, AlgebraError> {
        Self::new(&Laurent::from_poly(delta.clone()))
    }

    pub fn field(&self) -> &FieldRef {
        self.modulus.field()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn unit(&self) -> &(Fe, i64) {
        &self.unit
    }

    pub fn reciprocal(&self) -> Option<&(Fe, i64)> {
        self.reciprocal.as_ref()
    }

    /// Complex roots of `Δ` at the field's embedding.
    pub fn roots(&self) -> Vec<Complex64> {
        self.modulus.complex_roots()
    }
}

/// A residue class, held by its reduced representative.
#[derive(Clone)]
pub struct QuotElem {
    ring: QuotRingRef,
    rep: Poly,
}

impl PartialEq for QuotElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl fmt::Debug for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Display for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl QuotElem {
    pub fn from_poly(ring: &QuotRingRef, p: &Poly) -> QuotElem {
        QuotElem { ring: ring.clone(), rep: p.rem(&ring.modulus) }
    }

    pub fn from_laurent(ring: &QuotRingRef, x: &Laurent) -> QuotElem {
        let body = QuotElem::from_poly(ring, x.body());
        let k = x.low();
        let step = if k >= 0 { QuotElem::t(ring) } else { QuotElem::from_poly(ring, &ring.t_inv) };
        let mut acc = body;
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&step);
        }
        acc
    }

    pub fn from_fe(ring: &QuotRingRef, c: &Fe) -> QuotElem {
        QuotElem::from_poly(ring, &Poly::constant(c.clone()))
    }

    pub fn from_int(ring: &QuotRingRef, n: i64) -> QuotElem {
        QuotElem::from_fe(ring, &Fe::from_int(ring.field(), n))
    }

    pub fn zero(ring: &QuotRingRef) -> QuotElem {
        QuotElem { ring: ring.clone(), rep: Poly::zero(ring.field()) }
    }

    pub fn one(ring: &QuotRingRef) -> QuotElem {
        QuotElem::from_int(ring, 1)
    }

    pub fn t(ring: &QuotRingRef) -> QuotElem {
        QuotElem::from_poly(ring, &Poly::t(ring.field()))
    }

    pub fn t_pow(ring: &QuotRingRef, k: i64) -> QuotElem {
        QuotElem::from_laurent(ring, &Laurent::monomial(Fe::one(ring.field()), k))
    }

    pub fn ring(&self) -> &QuotRingRef {
        &self.ring
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.degree() == Some(0) && self.rep.coeff(0).is_one()
    }

    pub fn add(&self, o: &QuotElem) -> QuotElem {
        QuotElem { ring: self.ring.clone(), rep: self.rep.add(&o.rep) }
    }

    pub fn sub(&self, o: &QuotElem) -> QuotElem {
        QuotElem { ring: self.ring.clone(), rep: self.rep.sub(&o.rep) }
    }

    pub fn neg(&self) -> QuotElem {
        QuotElem { ring: self.ring.clone(), rep: self.rep.neg() }
    }

    pub fn mul(&self, o: &QuotElem) -> QuotElem {
        QuotElem::from_poly(&self.ring, &self.rep.mul(&o.rep))
    }

    pub fn scale(&self, c: &Fe) -> QuotElem {
        QuotElem { ring: self.ring.clone(), rep: self.rep.scale(c) }
    }

    /// Inverse by extended Euclid; a nontrivial gcd with `Δ` is reported
    /// as [`AlgebraError::ZeroDivisor`].
    pub fn inv(&self) -> Result<QuotElem, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, s, _) = self.rep.ext_gcd(&self.ring.modulus);
        if g.degree() != Some(0) {
            return Err(AlgebraError::ZeroDivisor { factor: g });
        }
        Ok(QuotElem::from_poly(&self.ring, &s))
    }

    pub fn pow(&self, e: i64) -> Result<QuotElem, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QuotElem::one(&self.ring);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// `t ↦ t⁻¹` with conjugated coefficients; defined when `Δ` is reciprocal.
    pub fn bar(&self) -> Result<QuotElem, AlgebraError> {
        if self.ring.reciprocal.is_none() {
            return Err(AlgebraError::NotReciprocal);
        }
        let l = Laurent::from_poly(self.rep.clone()).bar();
        Ok(QuotElem::from_laurent(&self.ring, &l))
    }

    pub fn to_laurent(&self) -> Laurent {
        Laurent::from_poly(self.rep.clone())
    }

    /// Value at a complex root of `Δ`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.rep.eval_complex(z)
    }

    /// `Tr(x) = tr(t^{N/2}·x/Δ)/b` with the symmetric representative of `Δ`.
    ///
    /// `b = 1` when `Δ = t^N Δ̄`, otherwise `b = 1 + ā` (a skew element if
    /// `a = −1`). For odd `N`, or a non-reciprocal `Δ`, the unshifted
    /// `tr(x/Δ)` is returned.
    pub fn trace(&self) -> Fe {
        let (shifted, b) = self.trace_setup();
        let order = trace_order(&shifted, &self.ring.modulus);
        let v = tr_series(&shifted, &self.ring.modulus, order);
        &v * &b.inv().expect("b is a unit")
    }

    /// [`trace`](Self::trace) with an explicit series truncation order.
    pub fn trace_with_order(&self, order: usize) -> Fe {
        let (shifted, b) = self.trace_setup();
        let v = tr_series(&shifted, &self.ring.modulus, order);
        &v * &b.inv().expect("b is a unit")
    }

    fn trace_setup(&self) -> (Laurent, Fe) {
        let f = self.ring.field();
        let x = self.to_laurent();
        match &self.ring.reciprocal {
            Some((a, n)) if n % 2 == 0 => {
                let b = if a.is_one() {
                    Fe::one(f)
                } else {
                    let b = &Fe::one(f) + &a.conj();
                    if b.is_zero() {
                        // a = −1: any nonzero skew element works.
                        let z = Fe::gen(f);
                        let skew = &z - &z.conj();
                        if skew.is_zero() { Fe::one(f) } else { skew }
                    } else {
                        b
                    }
                };
                (x.shift(n / 2), b)
            }
            _ => (x, Fe::one(f)),
        }
    }
}

/// Series order sufficient for the constant terms of `x/Δ`.
pub fn trace_order(x: &Laurent, delta: &Poly) -> usize {
    if x.is_zero() {
        return 1;
    }
    let n = delta.degree().unwrap() as i64;
    (-x.low()).max(x.high() - n).max(0) as usize + 1
}

/// `i₊(x/Δ)|_{t⁰} − i₋(x/Δ)|_{t⁰}` using `order` series terms.
pub fn tr_series(x: &Laurent, delta: &Poly, order: usize) -> Fe {
    let f = delta.field();
    let n = delta.degree().unwrap() as i64;
    let plus = inverse_series(delta.coeffs(), order);
    let rev: Vec<Fe> = delta.coeffs().iter().rev().cloned().collect();
    let minus = inverse_series(&rev, order);
    let mut acc = Fe::zero(f);
    for (j, c) in x.terms() {
        if j <= 0 {
            if let Some(s) = plus.get((-j) as usize) {
                acc = &acc + &(&c * s);
            }
        }
        if j >= n {
            if let Some(r) = minus.get((j - n) as usize) {
                acc = &acc - &(&c * r);
            }
        }
    }
    acc
}

/// First `order` coefficients of `1/p` as a power series; needs `p₀ ≠ 0`.
fn inverse_series(p: &[Fe], order: usize) -> Vec<Fe> {
    let f = p[0].field().clone();
    let c0 = p[0].inv().expect("nonzero constant term");
    let mut s: Vec<Fe> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = if k == 0 { Fe::one(&f) } else { Fe::zero(&f) };
        for j in 1..=k.min(p.len() - 1) {
            acc = &acc - &(&p[j] * &s[k - j]);
        }
        s.push(&acc * &c0);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::field::Field;

    fn ring(f: &FieldRef, c: &[i64]) -> QuotRingRef {
        QuotRing::from_poly(&Poly::from_ints(f, c)).unwrap()
    }

    #[test]
    fn one_minus_t_inverse_mod_trefoil() {
        let f = Field::rationals();
        let r = ring(&f, &[1, -1, 1]);
        let x = QuotElem::one(&r).sub(&QuotElem::t(&r));
        assert_eq!(x.inv().unwrap(), QuotElem::t(&r));
        assert_eq!(QuotElem::one(&r).inv().unwrap(), QuotElem::one(&r));
    }

    #[test]
    fn t_inverse_mod_t2_minus_5t_plus_1() {
        let f = Field::rationals();
        let r = ring(&f, &[1, -5, 1]);
        let inv = QuotElem::t(&r).inv().unwrap();
        assert_eq!(inv, QuotElem::from_poly(&r, &Poly::from_ints(&f, &[5, -1])));
        assert!(inv.mul(&QuotElem::t(&r)).is_one());
    }

    #[test]
    fn zero_divisor_reports_factor() {
        let f = Field::rationals();
        let r = ring(&f, &[-1, 0, 1]);
        let x = QuotElem::from_poly(&r, &Poly::from_ints(&f, &[-1, 1]));
        match x.inv() {
            Err(AlgebraError::ZeroDivisor { factor }) => assert_eq!(factor, Poly::from_ints(&f, &[-1, 1])),
            other => panic!("unexpected {other:?}"),
        }
        assert!(QuotElem::zero(&r).inv().is_err());
    }

    #[test]
    fn plain_tr_of_geometric_series() {
        let f = Field::rationals();
        let one = Laurent::one(&f);
        let v = tr_series(&one, &Poly::from_ints(&f, &[1, -1]), 4);
        assert!(v.is_one());
    }

    #[test]
    fn fig8_trace_of_t_minus_t_inverse() {
        let f = Field::cyclotomic(3);
        let r = ring(&f, &[1, -5, 1]);
        let x = QuotElem::t(&r).sub(&QuotElem::t_pow(&r, -1));
        // residue oracle: −Σ_ρ (ρ − ρ⁻¹)/Δ′(ρ) = −2
        assert_eq!(x.trace(), Fe::from_int(&f, -2));
    }

    #[test]
    fn reciprocity_examples() {
        let f = Field::rationals();
        let (a, n) = check_reciprocal(&Laurent::from_poly(Poly::from_ints(&f, &[1, -1, 1]))).unwrap();
        assert!(a.is_one() && n == 2);
        assert!(check_reciprocal(&Laurent::from_poly(Poly::from_ints(&f, &[2, 1, 1]))).is_none());
    }
}
