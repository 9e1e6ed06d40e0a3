//! Exact arithmetic and bounded verification for Catalan's equation
//! `x^m − y^n = 1`.
//!
//! The ring types are generic over the [`Int`] scalar; the aliases below fix
//! the scalar to [`BigInt`] so that no result depends on machine word size.

pub mod arith;
pub mod cassels;
pub mod criteria;
pub mod cyclotomic;
pub mod elementary;
pub mod error;
pub mod gaussian;
pub mod group_ring;
pub mod padic;
pub mod pell;
pub mod scalar;
pub mod ufd;

pub use error::{Error, Result};
pub use padic::PadicOrder;
pub use scalar::Int;

pub use num_bigint::BigInt;

/// Unbounded exact integer.
pub type Integer = BigInt;
/// Exact rational in lowest terms with positive denominator.
pub type Rational = num_rational::Ratio<BigInt>;
pub type GaussianInt = gaussian::Gaussian<BigInt>;
pub type QuadInt = gaussian::Quadratic<BigInt>;
pub type CyclotomicInt = cyclotomic::Cyclotomic<BigInt>;
pub type GroupRingElement = group_ring::GroupRingElem<BigInt>;
pub type PellSolution = pell::PellSolution<BigInt>;
pub type Factorization<R> = ufd::Factorization<R>;
