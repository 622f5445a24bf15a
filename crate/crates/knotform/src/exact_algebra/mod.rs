//! Exact arithmetic: number fields with involution, Laurent polynomials,
//! quotient rings `F[t±1]/(Δ)` and the trace map.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod quot;
pub mod roots;
pub mod smith;
pub mod text;

use std::fmt;

pub use field::{cyclotomic_poly, q, qf, Fe, Field, FieldRef, Involution, Q};
pub use matrix::Matrix;
pub use poly::{factor_squarefree, Laurent, Poly};
pub use quot::{check_reciprocal, QuotElem, QuotRing, QuotRingRef};
pub use text::{format_fe, format_laurent, parse_fe, parse_laurent};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("zero divisor: shares the factor {factor} with the modulus")]
    ZeroDivisor { factor: Poly },
    #[error("modulus is not reciprocal up to a unit")]
    NotReciprocal,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("division is not exact")]
    NotDivisible,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Commutative ring operations used by the generic [`Matrix`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_neg(&self) -> Self;
    fn r_inv(&self) -> Result<Self, AlgebraError>;
}

impl Ring for Fe {
    fn zero_like(&self) -> Self {
        Fe::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Fe::one(self.field())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn r_inv(&self) -> Result<Self, AlgebraError> {
        self.inv()
    }
}

impl Ring for QuotElem {
    fn zero_like(&self) -> Self {
        QuotElem::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        QuotElem::one(self.ring())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_inv(&self) -> Result<Self, AlgebraError> {
        self.inv()
    }
}

impl Ring for Laurent {
    fn zero_like(&self) -> Self {
        Laurent::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Laurent::one(self.field())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_inv(&self) -> Result<Self, AlgebraError> {
        self.inv_unit()
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.field())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_inv(&self) -> Result<Self, AlgebraError> {
        if self.degree() == Some(0) {
            Ok(Poly::constant(self.coeff(0).inv()?))
        } else {
            Err(AlgebraError::NotAUnit)
        }
    }
}
