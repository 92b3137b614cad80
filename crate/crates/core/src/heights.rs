//! Root-system data and the height of a representation.
//!
//! The height m_V of a representation V converts V into a level for the
//! Verlinde formula: dim H^0(M(G), Theta(V)^k) = N_(k m_V)(G). It is
//! computed from the formal character as
//!
//!   m_V = (1/2) sum_lambda n_lambda <lambda, theta_vee>^2,
//!
//! where theta_vee is the highest coroot and < , > the normalized Killing
//! form. Only the three representation families that feed the dimension
//! identities are implemented: the standard orthogonal representation of
//! Spin_m, the second exterior power for SL_r, and the adjoint of SL_2
//! (= Spin_3). There is deliberately no general character formula here.
//!
//! Type A weights live in the ambient (n+1)-space; the trace relation
//! L_1 + ... + L_(n+1) = 0 is absorbed by the pairing, which is invariant
//! under shifting a weight by multiples of (1, ..., 1). Types B and D use an
//! orthonormal basis of the dual Cartan.

use crate::exact_arith::{BigInt, BigRational};
use crate::verlinde::{self, GroupId, VerlindeError, VerlindeQuery};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightsError {
    #[error("weight has {got} coordinates, expected {expected} for {group}")]
    DimensionMismatch { group: GroupId, expected: usize, got: usize },
    #[error("representation {rep} is not available for {group}")]
    UnsupportedRepresentation { group: GroupId, rep: RepId },
    #[error("height of ({group}, {rep}) is not a positive integer level")]
    NonIntegralLevel { group: GroupId, rep: RepId },
    #[error(transparent)]
    Verlinde(#[from] VerlindeError),
}

/// A weight in coordinates with respect to the standard dual basis
/// L_1, ..., L_N of the relevant Cartan dual.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<BigRational>,
}

impl Weight {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Weight { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight::new(
            coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    /// The basis weight L_i (1-indexed) in an n-dimensional ambient space.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut coords = vec![BigRational::zero(); n];
        coords[i - 1] = BigRational::one();
        Weight::new(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight::new(vec![BigRational::zero(); n])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    fn negated(&self) -> Self {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }

    fn plus(&self, other: &Weight) -> Self {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Multiset of weights with multiplicities: the formal character of a
/// representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    entries: BTreeMap<Weight, u32>,
}

impl FormalCharacter {
    fn from_weights(weights: impl IntoIterator<Item = Weight>) -> Self {
        let mut entries = BTreeMap::new();
        for w in weights {
            *entries.entry(w).or_insert(0) += 1;
        }
        FormalCharacter { entries }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, u32)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Total mass, which equals dim V.
    pub fn mass(&self) -> u64 {
        self.entries.values().map(|&m| m as u64).sum()
    }
}

/// The implemented representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepId {
    /// The standard orthogonal representation C^m of Spin_m, m >= 4.
    Vector,
    /// The second exterior power of the standard representation of SL_r,
    /// r >= 3.
    Ext2,
    /// The adjoint representation of SL_2 = Spin_3.
    Adjoint,
}

impl std::fmt::Display for RepId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RepId::Vector => "vector",
            RepId::Ext2 => "ext2",
            RepId::Adjoint => "adjoint",
        })
    }
}

impl FromStr for RepId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "vector" => Ok(RepId::Vector),
            "ext2" => Ok(RepId::Ext2),
            "adjoint" => Ok(RepId::Adjoint),
            other => Err(format!("unknown representation {other:?}")),
        }
    }
}

/// Ambient coordinate dimension for the group's weights. Spin_3 goes through
/// the SL_2 conventions everywhere.
fn ambient_dim(group: GroupId) -> usize {
    match group {
        GroupId::Sl(r) => r as usize,
        GroupId::SpinOdd(3) => 2,
        GroupId::SpinOdd(m) => ((m - 1) / 2) as usize,
        GroupId::SpinEven(m) => (m / 2) as usize,
    }
}

fn is_type_a(group: GroupId) -> bool {
    matches!(group, GroupId::Sl(_) | GroupId::SpinOdd(3))
}

/// The normalized Killing pairing of two weights.
///
/// Type A (SL_(n+1)): <L_i, L_j> is n/(n+1) on the diagonal and -1/(n+1) off
/// it, which collapses to sum(a_i b_i) - sum(a) sum(b) / (n+1). Types B and
/// D: the L_i are orthonormal.
pub fn killing_pairing(
    group: GroupId,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BigRational, HeightsError> {
    let dim = ambient_dim(group);
    for w in [lambda, mu] {
        if w.coords.len() != dim {
            return Err(HeightsError::DimensionMismatch {
                group,
                expected: dim,
                got: w.coords.len(),
            });
        }
    }
    let dot: BigRational = lambda
        .coords
        .iter()
        .zip(&mu.coords)
        .map(|(a, b)| a * b)
        .sum();
    if is_type_a(group) {
        let sum_l: BigRational = lambda.coords.iter().sum();
        let sum_m: BigRational = mu.coords.iter().sum();
        let r = BigRational::from(BigInt::from(dim as i64));
        Ok(dot - sum_l * sum_m / r)
    } else {
        Ok(dot)
    }
}

/// The highest coroot theta_vee: L_1 - L_r for SL_r, L_1 + L_2 for the spin
/// groups of rank >= 2 (Spin_3 uses the SL_2 value).
pub fn highest_coroot(group: GroupId) -> Result<Weight, HeightsError> {
    let n = ambient_dim(group);
    if is_type_a(group) {
        let mut coords = vec![BigRational::zero(); n];
        coords[0] = BigRational::one();
        coords[n - 1] = -BigRational::one();
        Ok(Weight::new(coords))
    } else if n >= 2 {
        let mut coords = vec![BigRational::zero(); n];
        coords[0] = BigRational::one();
        coords[1] = BigRational::one();
        Ok(Weight::new(coords))
    } else {
        Err(HeightsError::UnsupportedRepresentation {
            group,
            rep: RepId::Vector,
        })
    }
}

/// The formal character of the given representation.
pub fn formal_character(group: GroupId, rep: RepId) -> Result<FormalCharacter, HeightsError> {
    let n = ambient_dim(group);
    let unsupported = || HeightsError::UnsupportedRepresentation { group, rep };
    match (group, rep) {
        (GroupId::Sl(r), RepId::Ext2) if r >= 3 => {
            let mut weights = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    weights.push(Weight::basis(n, i).plus(&Weight::basis(n, j)));
                }
            }
            Ok(FormalCharacter::from_weights(weights))
        }
        (GroupId::Sl(2), RepId::Adjoint) | (GroupId::SpinOdd(3), RepId::Adjoint) => {
            let alpha = Weight::from_integers(&[1, -1]);
            Ok(FormalCharacter::from_weights([
                alpha.clone(),
                Weight::zero(2),
                alpha.negated(),
            ]))
        }
        (GroupId::SpinOdd(m), RepId::Vector) if m >= 5 => {
            let mut weights = vec![Weight::zero(n)];
            for i in 1..=n {
                weights.push(Weight::basis(n, i));
                weights.push(Weight::basis(n, i).negated());
            }
            Ok(FormalCharacter::from_weights(weights))
        }
        (GroupId::SpinEven(m), RepId::Vector) if m >= 4 => {
            let mut weights = Vec::new();
            for i in 1..=n {
                weights.push(Weight::basis(n, i));
                weights.push(Weight::basis(n, i).negated());
            }
            Ok(FormalCharacter::from_weights(weights))
        }
        _ => Err(unsupported()),
    }
}

/// The height m_V = (1/2) sum_lambda n_lambda <lambda, theta_vee>^2.
///
/// Returned as an exact rational; for every implemented representation the
/// value is a positive integer, but that is asserted by callers rather than
/// promised by the formula.
pub fn height(group: GroupId, rep: RepId) -> Result<BigRational, HeightsError> {
    let coroot = highest_coroot(group)?;
    let character = formal_character(group, rep)?;
    let mut acc = BigRational::zero();
    for (lambda, mult) in character.entries() {
        let pairing = killing_pairing(group, lambda, &coroot)?;
        acc += BigRational::from(BigInt::from(mult)) * (&pairing * &pairing);
    }
    Ok(acc / BigRational::from(BigInt::from(2)))
}

/// dim H^0(M(G), Theta(V)^k) at genus g: the Verlinde number at level
/// k * m_V.
pub fn level_dimension(
    group: GroupId,
    rep: RepId,
    k: u32,
    genus: u32,
) -> Result<BigInt, HeightsError> {
    let h = height(group, rep)?;
    if !h.is_integer() || h <= BigRational::zero() {
        return Err(HeightsError::NonIntegralLevel { group, rep });
    }
    let level: u32 = (BigInt::from(k) * h.to_integer())
        .try_into()
        .map_err(|_| HeightsError::NonIntegralLevel { group, rep })?;
    let q = VerlindeQuery::new(group, level, genus)?;
    Ok(verlinde::verlinde_number(&q)?)
}
