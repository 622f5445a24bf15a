//! Number fields `Q[z]/(m(z))` with an involution and a complex embedding.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// How the field involution acts on the generator.
#[derive(Clone, Debug, PartialEq)]
pub enum Involution {
    Identity,
    /// Image of `z^k` for `k < deg`, as coordinate vectors.
    Table(Vec<Vec<Q>>),
}

#[derive(Debug)]
pub struct Field {
    name: String,
    /// Monic minimal polynomial, ascending coefficients, length `deg + 1`.
    modulus: Vec<Q>,
    involution: Involution,
    embedding: Complex64,
    cyclotomic_order: Option<u32>,
}

pub type FieldRef = Arc<Field>;

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.involution == other.involution
    }
}

impl Field {
    /// The rational numbers, as the degree one field `Q[z]/(z)`.
    pub fn rationals() -> FieldRef {
        Arc::new(Field {
            name: "Q".into(),
            modulus: vec![q(0), q(1)],
            involution: Involution::Identity,
            embedding: Complex64::new(0.0, 0.0),
            cyclotomic_order: Some(1),
        })
    }

    /// `Q(ζ_d)` with `ζ ↦ ζ⁻¹` and `ζ = exp(2πi/d)`.
    pub fn cyclotomic(d: u32) -> FieldRef {
        assert!(d >= 1);
        if d <= 2 {
            return Arc::new(Field {
                name: "Q".into(),
                modulus: vec![q(0), q(1)],
                involution: Involution::Identity,
                embedding: Complex64::new(0.0, 0.0),
                cyclotomic_order: Some(d),
            });
        }
        let modulus = cyclotomic_poly(d);
        let deg = modulus.len() - 1;
        let mut table = Vec::with_capacity(deg);
        for k in 0..deg {
            let e = ((d as usize) - k) % d as usize;
            table.push(reduce_power(&modulus, e));
        }
        let ang = 2.0 * std::f64::consts::PI / d as f64;
        Arc::new(Field {
            name: format!("Q(zeta_{d})"),
            modulus,
            involution: Involution::Table(table),
            embedding: Complex64::new(ang.cos(), ang.sin()),
            cyclotomic_order: Some(d),
        })
    }

    /// `Q(ζ_d)` carrying the trivial involution.
    pub fn cyclotomic_fixed(d: u32) -> FieldRef {
        let base = Self::cyclotomic(d);
        Arc::new(Field {
            name: format!("Q(zeta_{d}) (trivial involution)"),
            modulus: base.modulus.clone(),
            involution: Involution::Identity,
            embedding: base.embedding,
            cyclotomic_order: None,
        })
    }

    /// A field from an explicit monic minimal polynomial.
    ///
    /// The embedding is the root of largest imaginary part (ties broken by
    /// real part); the caller is responsible for irreducibility.
    pub fn from_modulus(name: &str, modulus: Vec<Q>, involution: Involution) -> Result<FieldRef, AlgebraError> {
        if modulus.len() < 2 || !modulus.last().unwrap().is_one() {
            return Err(AlgebraError::InvalidField("minimal polynomial must be monic of degree >= 1".into()));
        }
        let deg = modulus.len() - 1;
        if let Involution::Table(t) = &involution {
            if t.len() != deg || t.iter().any(|r| r.len() != deg) {
                return Err(AlgebraError::InvalidField("involution table has the wrong shape".into()));
            }
        }
        let coeffs: Vec<Complex64> = modulus.iter().map(|c| Complex64::new(c.to_f64().unwrap_or(0.0), 0.0)).collect();
        let mut roots = super::roots::complex_roots(&coeffs);
        roots.sort_by(|a, b| (b.im, b.re).partial_cmp(&(a.im, a.re)).unwrap());
        let embedding = roots.first().copied().unwrap_or_default();
        let f = Field { name: name.into(), modulus, involution, embedding, cyclotomic_order: None };
        let f = Arc::new(f);
        if let Involution::Table(_) = &f.involution {
            let z = Fe::gen(&f);
            let zz = z.conj().conj();
            if zz != z {
                return Err(AlgebraError::InvalidField("involution is not of order two".into()));
            }
            if !eval_q(&f.modulus, &z.conj()).is_zero() {
                return Err(AlgebraError::InvalidField("involution is not a field automorphism".into()));
            }
        }
        Ok(f)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Q] {
        &self.modulus
    }

    pub fn embedding(&self) -> Complex64 {
        self.embedding
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn cyclotomic_order(&self) -> Option<u32> {
        self.cyclotomic_order
    }
}

fn eval_q(poly: &[Q], x: &Fe) -> Fe {
    let mut acc = Fe::zero(&x.field);
    for c in poly.iter().rev() {
        acc = &(&acc * x) + &Fe::from_q(&x.field, c.clone());
    }
    acc
}

/// Coefficients of the `d`-th cyclotomic polynomial, ascending.
pub fn cyclotomic_poly(d: u32) -> Vec<Q> {
    // x^d - 1 divided by Φ_e for every proper divisor e of d.
    let mut num = vec![q(0); d as usize + 1];
    num[0] = q(-1);
    num[d as usize] = q(1);
    for e in 1..d {
        if d % e == 0 {
            let den = cyclotomic_poly(e);
            num = div_exact_q(&num, &den);
        }
    }
    num
}

fn div_exact_q(num: &[Q], den: &[Q]) -> Vec<Q> {
    let mut rem: Vec<Q> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut out = vec![q(0); num.len() - dd];
    for i in (0..out.len()).rev() {
        let c = &rem[i + dd] / &lead;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] = &rem[i + j] - &c * dj;
        }
        out[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    out
}

fn reduce_power(modulus: &[Q], e: usize) -> Vec<Q> {
    let deg = modulus.len() - 1;
    let mut v = vec![q(0); deg.max(e + 1)];
    v[e] = q(1);
    reduce_coords(modulus, v)
}

fn reduce_coords(modulus: &[Q], mut v: Vec<Q>) -> Vec<Q> {
    let deg = modulus.len() - 1;
    while v.len() > deg {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - deg;
        for (j, mj) in modulus.iter().enumerate().take(deg) {
            v[shift + j] = &v[shift + j] - &top * mj;
        }
    }
    v.resize(deg, q(0));
    v
}

/// An element of a [`Field`], stored by coordinates in the power basis.
#[derive(Clone)]
pub struct Fe {
    field: FieldRef,
    c: Vec<Q>,
}

impl PartialEq for Fe {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_fe(self))
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_fe(self))
    }
}

impl Fe {
    pub fn zero(field: &FieldRef) -> Fe {
        Fe { field: field.clone(), c: vec![q(0); field.degree()] }
    }

    pub fn one(field: &FieldRef) -> Fe {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &FieldRef, n: i64) -> Fe {
        Self::from_q(field, q(n))
    }

    pub fn from_q(field: &FieldRef, v: Q) -> Fe {
        let mut c = vec![q(0); field.degree()];
        c[0] = v;
        Fe { field: field.clone(), c }
    }

    /// The generator `z`.
    pub fn gen(field: &FieldRef) -> Fe {
        Fe { field: field.clone(), c: reduce_power(&field.modulus, 1) }
    }

    /// The designated primitive root of unity of a cyclotomic field.
    pub fn zeta(field: &FieldRef) -> Option<Fe> {
        match field.cyclotomic_order? {
            1 => Some(Fe::one(field)),
            2 => Some(Fe::from_int(field, -1)),
            _ => Some(Fe::gen(field)),
        }
    }

    pub fn from_coords(field: &FieldRef, coords: Vec<Q>) -> Fe {
        Fe { field: field.clone(), c: reduce_coords(&field.modulus, coords) }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[Q] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, e: i64) -> Result<Fe, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Fe::one(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative inverse by extended Euclid against the minimal polynomial.
    pub fn inv(&self) -> Result<Fe, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let a = trim(self.c.clone());
        let m = self.field.modulus.clone();
        let (g, s, _) = ext_gcd_q(&a, &m);
        if g.len() != 1 {
            return Err(AlgebraError::InvalidField("minimal polynomial is reducible".into()));
        }
        let ginv = Q::one() / &g[0];
        let s: Vec<Q> = s.into_iter().map(|x| x * &ginv).collect();
        Ok(Fe::from_coords(&self.field, s))
    }

    /// Image under the field involution.
    pub fn conj(&self) -> Fe {
        match &self.field.involution {
            Involution::Identity => self.clone(),
            Involution::Table(t) => {
                let deg = self.field.degree();
                let mut out = vec![q(0); deg];
                for (k, ck) in self.c.iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    for j in 0..deg {
                        if !t[k][j].is_zero() {
                            out[j] = &out[j] + ck * &t[k][j];
                        }
                    }
                }
                Fe { field: self.field.clone(), c: out }
            }
        }
    }

    /// Value at the designated complex embedding.
    pub fn embed(&self) -> Complex64 {
        let z = self.field.embedding;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.c.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    pub fn scale(&self, k: &Q) -> Fe {
        Fe { field: self.field.clone(), c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Sign of a rational element; `None` when not rational.
    pub fn rational_sign(&self) -> Option<i32> {
        self.as_rational().map(|r| if r.is_zero() { 0 } else if r.is_positive() { 1 } else { -1 })
    }
}

fn trim(mut v: Vec<Q>) -> Vec<Q> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    if v.is_empty() {
        v.push(q(0));
    }
    v
}

fn poly_divrem_q(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![q(0)], r);
    }
    let mut quo = vec![q(0); r.len() - db];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &c * bj;
        }
        quo[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(quo), r)
}

fn poly_mul_q(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![q(0); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + ai * bj;
        }
    }
    trim(out)
}

fn poly_sub_q(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out = vec![q(0); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, x) in b.iter().enumerate() {
        out[i] = &out[i] - x;
    }
    trim(out)
}

/// Returns `(g, s, t)` with `s·a + t·b = g`.
fn ext_gcd_q(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>, Vec<Q>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![q(1)], vec![q(0)]);
    let (mut t0, mut t1) = (vec![q(0)], vec![q(1)]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (quo, rem) = poly_divrem_q(&r0, &r1);
        let s2 = poly_sub_q(&s0, &poly_mul_q(&quo, &s1));
        let t2 = poly_sub_q(&t0, &poly_mul_q(&quo, &t1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

impl<'a> std::ops::Add<&'a Fe> for &'a Fe {
    type Output = Fe;
    fn add(self, o: &Fe) -> Fe {
        Fe { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> std::ops::Sub<&'a Fe> for &'a Fe {
    type Output = Fe;
    fn sub(self, o: &Fe) -> Fe {
        Fe { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> std::ops::Mul<&'a Fe> for &'a Fe {
    type Output = Fe;
    fn mul(self, o: &Fe) -> Fe {
        let deg = self.field.degree();
        if deg == 1 {
            return Fe { field: self.field.clone(), c: vec![&self.c[0] * &o.c[0]] };
        }
        let mut prod = vec![q(0); 2 * deg - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + a * b;
                }
            }
        }
        Fe { field: self.field.clone(), c: reduce_coords(&self.field.modulus, prod) }
    }
}

impl std::ops::Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe { field: self.field.clone(), c: self.c.iter().map(|a| -a).collect() }
    }
}

impl std::ops::Add for Fe {
    type Output = Fe;
    fn add(self, o: Fe) -> Fe {
        &self + &o
    }
}

impl std::ops::Sub for Fe {
    type Output = Fe;
    fn sub(self, o: Fe) -> Fe {
        &self - &o
    }
}

impl std::ops::Mul for Fe {
    type Output = Fe;
    fn mul(self, o: Fe) -> Fe {
        &self * &o
    }
}

impl std::ops::Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}
