//! Dimension counts for theta functions on principally polarized abelian
//! varieties, and their aggregates over all Prym varieties of a curve.
//!
//! Everything here is a count, not a geometric object: the level-m theta
//! functions of a g-dimensional variety split into even and odd eigenspaces
//! of dimensions (m^g +- 2^g)/2 for even m and (m^g +- 1)/2 for odd m. The
//! Prym aggregate over the 2^(2g) half-periods of a genus-g curve combines
//! the Jacobian (dimension g) with the 2^(2g) - 1 Pryms (dimension g - 1).

use crate::exact_arith::BigInt;
use crate::verlinde::GroupId;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrymError {
    #[error("invalid theta query: {0}")]
    InvalidQuery(String),
}

/// Eigenspace selector under the canonical involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Total,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Total => "total",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            "total" => Ok(Parity::Total),
            other => Err(format!("unknown parity {other:?}")),
        }
    }
}

/// Identifies one theta eigenspace dimension: h^0_(parity)(A, level * Xi)
/// for a principally polarized abelian variety A of dimension `genus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaQuery {
    pub genus: u32,
    pub level: u32,
    pub parity: Parity,
}

impl ThetaQuery {
    pub fn new(genus: u32, level: u32, parity: Parity) -> Result<Self, PrymError> {
        if genus < 1 {
            return Err(PrymError::InvalidQuery("genus must be >= 1".into()));
        }
        if level < 1 {
            return Err(PrymError::InvalidQuery("level must be >= 1".into()));
        }
        Ok(ThetaQuery { genus, level, parity })
    }
}

/// Dimension of the even/odd/total space of level-m theta functions on a
/// g-dimensional principally polarized abelian variety:
/// (m^g +- 2^g)/2 for even m, (m^g +- 1)/2 for odd m, m^g in total.
pub fn theta_dim(q: &ThetaQuery) -> BigInt {
    let m = q.level;
    let g = q.genus;
    let total = BigInt::from(m).pow(g);
    let correction = if m.is_multiple_of(2) {
        BigInt::from(2).pow(g)
    } else {
        BigInt::from(1)
    };
    match q.parity {
        Parity::Total => total,
        Parity::Even => (total + correction) / 2,
        Parity::Odd => (total - correction) / 2,
    }
}

/// The direct sum of the level-m theta eigenspaces over all 2^(2g)
/// half-periods of a genus-g curve: the Jacobian contributes at abelian
/// dimension g, the remaining 2^(2g) - 1 Pryms at dimension g - 1.
pub fn prym_sum(genus: u32, level: u32, parity: Parity) -> Result<BigInt, PrymError> {
    if genus < 2 {
        return Err(PrymError::InvalidQuery(
            "prym aggregate needs base-curve genus >= 2".into(),
        ));
    }
    let jacobian = theta_dim(&ThetaQuery::new(genus, level, parity)?);
    let prym = theta_dim(&ThetaQuery::new(genus - 1, level, parity)?);
    let half_periods = BigInt::from(2).pow(2 * genus) - 1;
    Ok(jacobian + half_periods * prym)
}

/// Dimension of the moduli space of semistable G-bundles over a genus-g
/// curve: (g - 1) dim G for the simple groups in scope (whose centers are
/// finite).
pub fn moduli_dimension(group: GroupId, genus: u32) -> Result<BigInt, PrymError> {
    if genus < 2 {
        return Err(PrymError::InvalidQuery("genus must be >= 2".into()));
    }
    Ok(BigInt::from(genus - 1) * group.dimension())
}
