//! Dense univariate polynomials and Laurent polynomials over a [`Field`].

use std::fmt;

use num_complex::Complex64;

use super::field::{Fe, FieldRef};
use super::AlgebraError;

/// Polynomial in `t`; coefficients ascending, no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    c: Vec<Fe>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_laurent(&Laurent::from_poly(self.clone())))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_laurent(&Laurent::from_poly(self.clone())))
    }
}

impl Poly {
    pub fn new(field: &FieldRef, coeffs: Vec<Fe>) -> Poly {
        let mut p = Poly { field: field.clone(), c: coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &FieldRef) -> Poly {
        Poly { field: field.clone(), c: vec![] }
    }

    pub fn constant(c: Fe) -> Poly {
        let field = c.field().clone();
        Poly::new(&field, vec![c])
    }

    pub fn one(field: &FieldRef) -> Poly {
        Poly::constant(Fe::one(field))
    }

    /// `c · t^k`.
    pub fn monomial(c: Fe, k: usize) -> Poly {
        let field = c.field().clone();
        let mut v = vec![Fe::zero(&field); k];
        v.push(c);
        Poly::new(&field, v)
    }

    pub fn t(field: &FieldRef) -> Poly {
        Poly::monomial(Fe::one(field), 1)
    }

    pub fn from_ints(field: &FieldRef, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&n| Fe::from_int(field, n)).collect())
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Fe {
        self.c.get(k).cloned().unwrap_or_else(|| Fe::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Fe> {
        self.c.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn scale(&self, k: &Fe) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|x| x * k).collect())
    }

    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Fe::zero(&self.field); k];
        v.extend(self.c.iter().cloned());
        Poly::new(&self.field, v)
    }

    /// Divide by `t^k`; the low coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Poly {
        debug_assert!(self.c.iter().take(k).all(|x| x.is_zero()));
        Poly::new(&self.field, self.c.iter().skip(k).cloned().collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let v = (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect();
        Poly::new(&self.field, v)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let v = (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect();
        Poly::new(&self.field, v)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut v = vec![Fe::zero(&self.field); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        Poly::new(&self.field, v)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let linv = d.lead().unwrap().inv()?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let mut quo = vec![Fe::zero(&self.field); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = top * &linv;
            for (j, dj) in d.c.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dj);
            }
            quo[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(&self.field, quo), Poly::new(&self.field, r)))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).expect("nonzero divisor").1
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly, AlgebraError> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        let v = self.c.iter().enumerate().skip(1).map(|(i, x)| x.scale(&super::field::q(i as i64))).collect();
        Poly::new(&self.field, v)
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        let mut acc = Fe::zero(&self.field);
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.c.iter().rev() {
            acc = acc * x + c.embed();
        }
        acc
    }

    /// Coefficients at the embedding, ascending.
    pub fn embed_coeffs(&self) -> Vec<Complex64> {
        self.c.iter().map(|x| x.embed()).collect()
    }

    /// Complex roots at the designated embedding.
    pub fn complex_roots(&self) -> Vec<Complex64> {
        super::roots::complex_roots(&self.embed_coeffs())
    }

    /// `t^deg · p(1/t)`, coefficients reversed.
    pub fn reversed(&self) -> Poly {
        Poly::new(&self.field, self.c.iter().rev().cloned().collect())
    }

    pub fn conj_coeffs(&self) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|x| x.conj()).collect())
    }
}

/// Squarefree decomposition (Yun): pairs `(factor, multiplicity)` with
/// pairwise coprime monic squarefree factors.
pub fn factor_squarefree(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = p.monic();
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_exact(&a0).unwrap();
    let mut c = dp.div_exact(&a0).unwrap_or_else(|_| dp.divrem(&a0).unwrap().0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).unwrap();
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Laurent polynomial `t^low · p(t)` with `p(0) ≠ 0` (or zero).
#[derive(Clone)]
pub struct Laurent {
    low: i64,
    p: Poly,
}

impl PartialEq for Laurent {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && (self.p.is_zero() || self.low == other.low)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_laurent(self))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_laurent(self))
    }
}

impl Laurent {
    pub fn new(low: i64, p: Poly) -> Laurent {
        let mut l = Laurent { low, p };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        if self.p.is_zero() {
            self.low = 0;
            return;
        }
        let v = self.p.valuation().unwrap();
        if v > 0 {
            self.p = self.p.unshift(v);
            self.low += v as i64;
        }
    }

    pub fn from_poly(p: Poly) -> Laurent {
        Laurent::new(0, p)
    }

    pub fn zero(field: &FieldRef) -> Laurent {
        Laurent { low: 0, p: Poly::zero(field) }
    }

    pub fn one(field: &FieldRef) -> Laurent {
        Laurent::from_poly(Poly::one(field))
    }

    pub fn constant(c: Fe) -> Laurent {
        Laurent::from_poly(Poly::constant(c))
    }

    pub fn from_int(field: &FieldRef, n: i64) -> Laurent {
        Laurent::constant(Fe::from_int(field, n))
    }

    /// `c · t^k`.
    pub fn monomial(c: Fe, k: i64) -> Laurent {
        Laurent::new(k, Poly::constant(c))
    }

    pub fn t(field: &FieldRef) -> Laurent {
        Laurent::monomial(Fe::one(field), 1)
    }

    pub fn field(&self) -> &FieldRef {
        self.p.field()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent present (for nonzero values).
    pub fn high(&self) -> i64 {
        self.low + self.p.degree().map(|d| d as i64).unwrap_or(0)
    }

    /// The polynomial part after factoring out `t^low`.
    pub fn body(&self) -> &Poly {
        &self.p
    }

    pub fn coeff(&self, k: i64) -> Fe {
        if k < self.low {
            return Fe::zero(self.field());
        }
        self.p.coeff((k - self.low) as usize)
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> Vec<(i64, Fe)> {
        self.p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c.clone()))
            .collect()
    }

    /// As an ordinary polynomial if no negative exponents occur.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.p.clone());
        }
        if self.low < 0 {
            return None;
        }
        Some(self.p.shift(self.low as usize))
    }

    /// `t^s · self` written as a polynomial, where `s ≥ 0` is minimal.
    pub fn clear_denominator(&self) -> (i64, Poly) {
        if self.low >= 0 {
            (0, self.to_poly().unwrap())
        } else {
            (-self.low, self.p.clone())
        }
    }

    fn aligned(&self, o: &Laurent) -> (i64, Poly, Poly) {
        if self.is_zero() {
            return (o.low, Poly::zero(self.field()), o.p.clone());
        }
        if o.is_zero() {
            return (self.low, self.p.clone(), Poly::zero(self.field()));
        }
        let m = self.low.min(o.low);
        (m, self.p.shift((self.low - m) as usize), o.p.shift((o.low - m) as usize))
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let (m, a, b) = self.aligned(o);
        Laurent::new(m, a.add(&b))
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        let (m, a, b) = self.aligned(o);
        Laurent::new(m, a.sub(&b))
    }

    pub fn neg(&self) -> Laurent {
        Laurent { low: self.low, p: self.p.neg() }
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        Laurent::new(self.low + o.low, self.p.mul(&o.p))
    }

    pub fn scale(&self, k: &Fe) -> Laurent {
        Laurent::new(self.low, self.p.scale(k))
    }

    pub fn shift(&self, k: i64) -> Laurent {
        Laurent::new(self.low + k, self.p.clone())
    }

    /// Inverse of a unit `c·t^k`.
    pub fn inv_unit(&self) -> Result<Laurent, AlgebraError> {
        if self.p.degree() != Some(0) {
            return Err(AlgebraError::NotAUnit);
        }
        Ok(Laurent::monomial(self.p.coeff(0).inv()?, -self.low))
    }

    pub fn is_unit(&self) -> bool {
        self.p.degree() == Some(0)
    }

    /// Exact division in `F[t^{±1}]`.
    pub fn div_exact(&self, o: &Laurent) -> Result<Laurent, AlgebraError> {
        let q = self.p.div_exact(&o.p)?;
        Ok(Laurent::new(self.low - o.low, q))
    }

    /// The involution `t ↦ t⁻¹` combined with the coefficient involution.
    pub fn bar(&self) -> Laurent {
        if self.is_zero() {
            return self.clone();
        }
        let deg = self.p.degree().unwrap() as i64;
        Laurent::new(-self.low - deg, self.p.reversed().conj_coeffs())
    }

    pub fn eval(&self, x: &Fe) -> Result<Fe, AlgebraError> {
        let v = self.p.eval(x);
        Ok(&v * &x.pow(self.low)?)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.p.eval_complex(x) * x.powi(self.low as i32)
    }

    pub fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::one(self.field());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}
