//! Exact arithmetic substrate: arbitrary-precision rationals, cyclotomic
//! polynomials, and the cyclotomic fields Q(zeta_k).
//!
//! All values are immutable and all operations are pure, so everything here
//! is safe to share across threads. No operation ever rounds; failures that
//! would require rounding (inverting zero, extracting a non-integer) surface
//! as [`ExactArithError`].

mod cyclotomic;
mod poly;

pub use cyclotomic::{four_sin_sq, root_power, CyclotomicNumber};
pub use poly::{cyclotomic_polynomial, euler_phi};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

/// Failure modes of the exact arithmetic layer.
///
/// `OrderMismatch` signals a caller bug: there is deliberately no implicit
/// embedding between cyclotomic fields of different orders, so every
/// computation must fix one ambient order up front.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactArithError {
    #[error("cyclotomic order mismatch: {0} vs {1} (no implicit embedding)")]
    OrderMismatch(u32, u32),
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("zero factor: 4 sin^2(pi a / {0}) with a = {1} = 0 mod {0}")]
    ZeroSineFactor(u32, i64),
    #[error("element of Q(zeta_{0}) is not a rational integer")]
    NotAnInteger(u32),
}
