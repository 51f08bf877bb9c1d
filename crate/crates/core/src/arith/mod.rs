//! Exact arithmetic: rationals, Q[t], Q(t), Z/p, and dense matrices over
//! any of them.

mod fp;
mod matrix;
mod poly;
mod rat;
mod ratfunc;
mod zpoly;

use std::fmt::Debug;

use thiserror::Error;

pub use fp::{is_prime, rat_to_fp, FpElem, Prime};
pub use matrix::Matrix;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use zpoly::ZPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("lcm with a zero polynomial is undefined")]
    LcmOfZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid prime choice: {p} divides the denominator of {value}")]
    PrimeDividesDenominator { p: u64, value: String },
    #[error("{0} not invertible")]
    Singular(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// The operations dense linear algebra needs from a coefficient field.
///
/// Constants are produced from an existing element so that contexts such as
/// the modulus of Z/p carry over.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
}
