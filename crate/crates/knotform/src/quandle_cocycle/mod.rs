//! Alexander quandle 2-cocycles over `X = F_pⁿ`, the cocycle invariant and
//! the double-delta weight identity.
//!
//! `t` acts on column vectors by an invertible matrix `T`, the quandle
//! operation is `x ⊳ y = T(x − y) + y`, and a bilinear form is
//! `ψ(x, y) = xᵀ·B·y` with values in `F_p`.
//!
//! Signs follow [`crate::pairing_engine`]: a crossing contributes
//! `−ε·φ(C(α), C(β))`, so that `I_{φ_ψ}(C) = Q_ψ(C, C)`.

use std::collections::BTreeMap;

use crate::knot_diagram::KnotDiagram;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CocycleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("t is not invertible mod {0}")]
    NotInvertible(u64),
    #[error("matrix shape does not match dimension {0}")]
    Shape(usize),
    #[error("ψ(x, y) ≠ ψ(ty, x) at x = {x:?}, y = {y:?}")]
    Premise { x: Vec<u64>, y: Vec<u64> },
    #[error("search space {0} exceeds the guard {1}")]
    TooLarge(u128, u128),
    #[error("cannot parse quandle spec {0:?}")]
    Spec(String),
}

pub type Mat = Vec<Vec<u64>>;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

/// The Alexander quandle `F_pⁿ` with `t ↦ T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderQuandle {
    p: u64,
    t: Mat,
    t_inv: Mat,
}

impl AlexanderQuandle {
    pub fn new(p: u64, t: Mat) -> Result<Self, CocycleError> {
        if !is_prime(p) {
            return Err(CocycleError::NotPrime(p));
        }
        let n = t.len();
        if n == 0 || t.iter().any(|r| r.len() != n) {
            return Err(CocycleError::Shape(n));
        }
        let t: Mat = t.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
        let t_inv = mat_inv(&t, p).ok_or(CocycleError::NotInvertible(p))?;
        Ok(AlexanderQuandle { p, t, t_inv })
    }

    pub fn scalar(p: u64, t: u64) -> Result<Self, CocycleError> {
        Self::new(p, vec![vec![t]])
    }

    /// `"F_p,t=k"` for the scalar quandle, or `"F_p,T=a,b;c,d"` with the rows
    /// of `T` separated by `;`.
    pub fn parse(spec: &str) -> Result<Self, CocycleError> {
        let bad = || CocycleError::Spec(spec.to_string());
        let s = spec.replace(' ', "");
        if let Some((field, rows)) = s.split_once(",T=") {
            let p = field.strip_prefix("F_").or_else(|| field.strip_prefix('F')).ok_or_else(bad)?;
            let p: u64 = p.parse().map_err(|_| bad())?;
            let t = parse_mod_matrix(rows, p).ok_or_else(bad)?;
            return Self::new(p, t);
        }
        let (field, t) = s.split_once(",t=").ok_or_else(bad)?;
        let p = field.strip_prefix("F_").or_else(|| field.strip_prefix('F')).ok_or_else(bad)?;
        let p: u64 = p.parse().map_err(|_| bad())?;
        let t: i64 = t.parse().map_err(|_| bad())?;
        Self::scalar(p, t.rem_euclid(p as i64) as u64)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.t.len()
    }

    pub fn t(&self) -> &Mat {
        &self.t
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.dim() as u32)
    }

    pub fn element(&self, mut k: u128) -> Vec<u64> {
        (0..self.dim())
            .map(|_| {
                let d = (k % self.p as u128) as u64;
                k /= self.p as u128;
                d
            })
            .collect()
    }

    pub fn index(&self, x: &[u64]) -> u128 {
        x.iter().rev().fold(0u128, |acc, &d| acc * self.p as u128 + d as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.size()).map(|k| self.element(k))
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| (a + b) % self.p).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| (a + self.p - b) % self.p).collect()
    }

    pub fn act(&self, x: &[u64]) -> Vec<u64> {
        mat_vec(&self.t, x, self.p)
    }

    pub fn act_inv(&self, x: &[u64]) -> Vec<u64> {
        mat_vec(&self.t_inv, x, self.p)
    }

    /// `x ⊳ y = t·x + (1 − t)·y`.
    pub fn op(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.add(&self.act(&self.sub(x, y)), y)
    }

    /// `(1 − t)·x`.
    pub fn one_minus_t(&self, x: &[u64]) -> Vec<u64> {
        self.sub(x, &self.act(x))
    }
}

fn mat_vec(m: &Mat, x: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|r| r.iter().zip(x).fold(0, |acc, (a, b)| (acc + a * b) % p)).collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mat_inv(m: &Mat, p: u64) -> Option<Mat> {
    let n = m.len();
    let mut a: Mat = m.iter().enumerate().map(|(i, r)| {
        let mut row = r.clone();
        row.extend((0..n).map(|j| u64::from(i == j)));
        row
    }).collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| a[r][c] != 0)?;
        a.swap(piv, c);
        let inv = pow_mod(a[c][c], p - 2, p);
        for x in a[c].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..n {
            if r != c && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..2 * n {
                    a[r][k] = (a[r][k] + p * p - f * a[c][k] % p) % p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rows separated by `;`, entries by `,`, reduced mod `p`.
pub fn parse_mod_matrix(text: &str, p: u64) -> Option<Mat> {
    let m: Option<Mat> = text
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse::<i64>().ok().map(|v| v.rem_euclid(p as i64) as u64)).collect())
        .collect();
    let m = m?;
    (!m.is_empty() && m.iter().all(|r| r.len() == m.len())).then_some(m)
}

/// `ψ(x, y) = xᵀ·B·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bilinear {
    pub b: Mat,
}

impl Bilinear {
    /// `ψ(x, y) = x·y` on `F_p`.
    pub fn product() -> Self {
        Bilinear { b: vec![vec![1]] }
    }

    pub fn eval(&self, x: &[u64], y: &[u64], p: u64) -> u64 {
        let by = mat_vec(&self.b, y, p);
        x.iter().zip(&by).fold(0, |acc, (a, b)| (acc + a * b) % p)
    }

    /// Exhaustive check of `ψ(x, y) = ψ(ty, x)`.
    pub fn check_premise(&self, x: &AlexanderQuandle) -> Result<(), CocycleError> {
        if self.b.len() != x.dim() || self.b.iter().any(|r| r.len() != x.dim()) {
            return Err(CocycleError::Shape(x.dim()));
        }
        for a in x.elements() {
            for b in x.elements() {
                if self.eval(&a, &b, x.p) != self.eval(&x.act(&b), &a, x.p) {
                    return Err(CocycleError::Premise { x: a, y: b });
                }
            }
        }
        Ok(())
    }
}

/// A map `φ: X² → F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cocycle {
    /// `φ_ψ(x, y) = ψ(x − y, y − t⁻¹y)`.
    Psi(Bilinear),
    /// Values indexed by `index(x)·|X| + index(y)`.
    Table(Vec<u64>),
}

impl Cocycle {
    pub fn eval(&self, q: &AlexanderQuandle, x: &[u64], y: &[u64]) -> u64 {
        match self {
            Cocycle::Psi(psi) => psi.eval(&q.sub(x, y), &q.sub(y, &q.act_inv(y)), q.p),
            Cocycle::Table(t) => t[(q.index(x) * q.size() + q.index(y)) as usize],
        }
    }

    pub fn from_fn(q: &AlexanderQuandle, f: impl Fn(&[u64], &[u64]) -> u64) -> Self {
        let mut t = Vec::new();
        for x in q.elements() {
            for y in q.elements() {
                t.push(f(&x, &y) % q.p);
            }
        }
        Cocycle::Table(t)
    }
}

/// `φ_ψ`, after checking that `ψ(x, y) = ψ(ty, x)`.
pub fn phi_from_psi(q: &AlexanderQuandle, psi: &Bilinear) -> Result<Cocycle, CocycleError> {
    psi.check_premise(q)?;
    Ok(Cocycle::Psi(psi.clone()))
}

/// The first triple violating the quandle 2-cocycle condition
/// `φ(x,y) − φ(x,z) + φ(x⊳y, z) − φ(x⊳z, y⊳z) = 0`, if any.
pub fn cocycle_violation(q: &AlexanderQuandle, phi: &Cocycle) -> Option<(Vec<u64>, Vec<u64>, Vec<u64>)> {
    find_triple(q, |x, y, z, xy| {
        phi.eval(q, x, y) + phi.eval(q, xy, z) + 2 * q.p - phi.eval(q, x, z) - phi.eval(q, &q.op(x, z), &q.op(y, z))
    })
}

/// The same search for the identity written with `φ(y, z)` in place of
/// `φ(x, y)` and the opposite signs on the last two terms:
/// `φ(x,z) − φ(y,z) − φ(x⊳y, z) + φ(x⊳z, y⊳z) = 0`.
pub fn printed_form_violation(q: &AlexanderQuandle, phi: &Cocycle) -> Option<(Vec<u64>, Vec<u64>, Vec<u64>)> {
    find_triple(q, |x, y, z, xy| {
        phi.eval(q, x, z) + phi.eval(q, &q.op(x, z), &q.op(y, z)) + 2 * q.p - phi.eval(q, y, z) - phi.eval(q, xy, z)
    })
}

fn find_triple(
    q: &AlexanderQuandle,
    f: impl Fn(&[u64], &[u64], &[u64], &[u64]) -> u64,
) -> Option<(Vec<u64>, Vec<u64>, Vec<u64>)> {
    for x in q.elements() {
        for y in q.elements() {
            let xy = q.op(&x, &y);
            for z in q.elements() {
                if f(&x, &y, &z, &xy) % q.p != 0 {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// All `X`-colorings of `D`, as one vector per arc.
pub fn colorings(d: &KnotDiagram, q: &AlexanderQuandle, guard: u128) -> Result<Vec<Vec<Vec<u64>>>, CocycleError> {
    let (n, p) = (q.dim(), q.p);
    let cols = d.num_arcs() * n;
    // C(γ) − T·C(α) + (T − 1)·C(β) = 0
    let mut rows: Mat = Vec::new();
    for c in d.crossings() {
        for i in 0..n {
            let mut r = vec![0u64; cols];
            r[c.gamma * n + i] = (r[c.gamma * n + i] + 1) % p;
            for j in 0..n {
                let tij = q.t[i][j];
                r[c.alpha * n + j] = (r[c.alpha * n + j] + p - tij) % p;
                let d_ij = (tij + p - u64::from(i == j)) % p;
                r[c.beta * n + j] = (r[c.beta * n + j] + d_ij) % p;
            }
            rows.push(r);
        }
    }
    let basis = nullspace(rows, cols, p);
    let count = (p as u128).checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
    if count > guard {
        return Err(CocycleError::TooLarge(count, guard));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut coef = vec![0u64; basis.len()];
    loop {
        let mut v = vec![0u64; cols];
        for (c, b) in coef.iter().zip(&basis) {
            for k in 0..cols {
                v[k] = (v[k] + c * b[k]) % p;
            }
        }
        out.push(v.chunks(n).map(|s| s.to_vec()).collect());
        let mut k = 0;
        loop {
            if k == coef.len() {
                return Ok(out);
            }
            coef[k] += 1;
            if coef[k] < p {
                break;
            }
            coef[k] = 0;
            k += 1;
        }
    }
}

fn nullspace(mut a: Mat, cols: usize, p: u64) -> Mat {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(r, rank);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] + p * p - f * a[rank][k] % p) % p;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

/// `I_Φ(C) = −Σ_τ ε_τ·φ(C(α_τ), C(β_τ))`.
pub fn invariant_value(d: &KnotDiagram, q: &AlexanderQuandle, phi: &Cocycle, c: &[Vec<u64>]) -> u64 {
    let p = q.p;
    d.crossings().iter().fold(0, |acc, x| {
        let v = phi.eval(q, &c[x.alpha], &c[x.beta]);
        if x.sign > 0 {
            (acc + p - v) % p
        } else {
            (acc + v) % p
        }
    })
}

/// `Q_ψ(C, C′) = −Σ_τ ε_τ·ψ(C(α) − C(β), C′(β) − t⁻¹C′(β))`.
pub fn q_finite(d: &KnotDiagram, q: &AlexanderQuandle, psi: &Bilinear, c: &[Vec<u64>], c2: &[Vec<u64>]) -> u64 {
    let p = q.p;
    d.crossings().iter().fold(0, |acc, x| {
        let y = &c2[x.beta];
        let v = psi.eval(&q.sub(&c[x.alpha], &c[x.beta]), &q.sub(y, &q.act_inv(y)), p);
        if x.sign > 0 {
            (acc + p - v) % p
        } else {
            (acc + v) % p
        }
    })
}

/// The multiset `{I_Φ(C)}` over all colorings, as value → count.
pub fn cocycle_invariant(d: &KnotDiagram, q: &AlexanderQuandle, phi: &Cocycle, guard: u128) -> Result<BTreeMap<u64, u128>, CocycleError> {
    let mut out = BTreeMap::new();
    for c in colorings(d, q, guard)? {
        *out.entry(invariant_value(d, q, phi, &c)).or_insert(0) += 1;
    }
    Ok(out)
}

/// The four-crossing tangle of the double-delta move.
///
/// Over-strands colored `c` and `d` run antiparallel. Under-strands enter
/// with colors `b` and `a`, pass under `c` then `d`, and leave as `u` and `v`.
/// The `b`-strand is oriented with `c`, the `a`-strand against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleDelta {
    pub u: Vec<u64>,
    pub v: Vec<u64>,
    pub weight: u64,
    /// `ψ((1 − t)(a − b), c − d)`.
    pub first: u64,
    /// `ψ((1 − t)(u − v), d − c)`.
    pub second: u64,
}

impl DoubleDelta {
    pub fn holds(&self) -> bool {
        self.weight == self.first && self.weight == self.second
    }
}

pub fn double_delta_weight(q: &AlexanderQuandle, psi: &Bilinear, a: &[u64], b: &[u64], c: &[u64], d: &[u64]) -> DoubleDelta {
    let p = q.p;
    let phi = Cocycle::Psi(psi.clone());
    let mut weight = 0u64;
    let mut strand = |start: &[u64], o: i64| -> Vec<u64> {
        // under c (oriented +): positive when o = +1, α is the left arc
        let mid = q.op(start, c);
        let eps = o;
        let w1 = phi.eval(q, start, c);
        // under d (oriented −): the right arc is α and left = right ⊳ d
        let out = q.add(&q.act_inv(&q.sub(&mid, d)), d);
        let w2 = phi.eval(q, &out, d);
        for (e, w) in [(eps, w1), (-eps, w2)] {
            // crossing weight −ε·φ
            weight = if e > 0 { (weight + p - w) % p } else { (weight + w) % p };
        }
        out
    };
    let u = strand(b, 1);
    let v = strand(a, -1);
    let first = psi.eval(&q.one_minus_t(&q.sub(a, b)), &q.sub(c, d), p);
    let second = psi.eval(&q.one_minus_t(&q.sub(&u, &v)), &q.sub(d, c), p);
    DoubleDelta { u, v, weight, first, second }
}

/// A form on `F_7²` satisfying the premise with `T = [[0, 1], [−1, 0]]`.
pub fn sample_premise_pair() -> (AlexanderQuandle, Bilinear) {
    let q = AlexanderQuandle::new(7, vec![vec![0, 1], vec![6, 0]]).expect("invertible");
    (q, Bilinear { b: vec![vec![1, 1], vec![6, 1]] })
}
