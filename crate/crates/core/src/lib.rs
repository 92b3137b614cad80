//! Exact-arithmetic evaluation of Verlinde numbers for the special linear and
//! spin groups, together with the surrounding numerology: representation
//! heights, theta-function dimension counts on principally polarized abelian
//! varieties, and the rational Clifford algebra of the standard quadratic
//! form.
//!
//! Everything numeric is computed over arbitrary-precision rationals; the
//! trigonometric sums behind the Verlinde numbers are evaluated in cyclotomic
//! fields so that the final integrality of each count is *checked*, never
//! assumed. The [`identities`] module packages the cross-checks between the
//! independent computation routes (cyclotomic sums, big-integer closed forms,
//! theta counts) as a reportable verification suite.

pub mod clifford;
pub mod exact_arith;
pub mod heights;
pub mod identities;
pub mod prym;
pub mod verlinde;

pub use exact_arith::{BigInt, BigRational, CyclotomicNumber};
pub use verlinde::{GroupId, VerlindeQuery};
