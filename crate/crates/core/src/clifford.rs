//! The Clifford algebra of the standard quadratic form Q = sum x_i^2 on an
//! m-dimensional rational vector space.
//!
//! Basis elements e_S are indexed by subsets S of {1, ..., m} (stored as bit
//! masks), with e_S the ordered product of the e_i for i in S. The defining
//! relations are e_i^2 = 1 and e_i e_j = -e_j e_i for i != j, so a product
//! e_S e_T is +-e_(S xor T) with the sign counting the transpositions needed
//! to interleave the two index sequences.
//!
//! The form is taken over Q rather than C: every structural identity in
//! scope has rational coefficients, and exactness requires a computable
//! field. One caveat is inherited from that choice: Q is anisotropic over
//! the rationals, so group-membership tests exercise anisotropic vectors
//! only (which is all the structure theory here needs).

use crate::exact_arith::BigRational;

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// Dimension cap: invertibility falls back to a dense linear solve on the
/// 2^m-dimensional regular representation, which is kept to desk scale.
pub const MAX_DIM: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(u32, u32),
    #[error("dimension {0} exceeds the supported bound {MAX_DIM}")]
    DimensionTooLarge(u32),
    #[error("vector index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: u32, dim: u32 },
    #[error("element is not in the Clifford group")]
    NotInCliffordGroup,
}

/// An element of the rational Clifford algebra in dimension m.
///
/// Coefficients are stored sparsely on subset masks; absent masks are zero
/// and stored coefficients are nonzero, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    dim: u32,
    coeffs: BTreeMap<u32, BigRational>,
}

impl CliffordElement {
    pub fn zero(dim: u32) -> Result<Self, CliffordError> {
        if dim == 0 || dim > MAX_DIM {
            return Err(CliffordError::DimensionTooLarge(dim));
        }
        Ok(CliffordElement {
            dim,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(dim: u32) -> Result<Self, CliffordError> {
        Self::scalar(dim, BigRational::one())
    }

    pub fn scalar(dim: u32, value: BigRational) -> Result<Self, CliffordError> {
        let mut out = Self::zero(dim)?;
        if !value.is_zero() {
            out.coeffs.insert(0, value);
        }
        Ok(out)
    }

    /// The basis vector e_i, 1-indexed.
    pub fn basis_vector(dim: u32, i: u32) -> Result<Self, CliffordError> {
        if i < 1 || i > dim {
            return Err(CliffordError::IndexOutOfRange { index: i, dim });
        }
        Self::basis_element(dim, 1 << (i - 1))
    }

    /// The basis element e_S for a subset mask S.
    pub fn basis_element(dim: u32, mask: u32) -> Result<Self, CliffordError> {
        let mut out = Self::zero(dim)?;
        if mask >= (1 << dim) {
            return Err(CliffordError::IndexOutOfRange {
                index: mask,
                dim,
            });
        }
        out.coeffs.insert(mask, BigRational::one());
        Ok(out)
    }

    /// The vector with the given coordinates in the basis e_1, ..., e_m.
    pub fn vector(dim: u32, coords: &[BigRational]) -> Result<Self, CliffordError> {
        if coords.len() != dim as usize {
            return Err(CliffordError::DimMismatch(coords.len() as u32, dim));
        }
        let mut out = Self::zero(dim)?;
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs.insert(1 << i, c.clone());
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of e_S (zero if absent).
    pub fn coeff(&self, mask: u32) -> BigRational {
        self.coeffs.get(&mask).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    /// The scalar value, if the element is supported on e_() only.
    pub fn to_scalar(&self) -> Option<BigRational> {
        if self.coeffs.keys().all(|&m| m == 0) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// Coordinates in V, if the element is a vector (grade 1).
    pub fn vector_coords(&self) -> Option<Vec<BigRational>> {
        if self.coeffs.keys().all(|m| m.count_ones() == 1) {
            Some(
                (0..self.dim)
                    .map(|i| self.coeff(1 << i))
                    .collect(),
            )
        } else {
            None
        }
    }

    /// True if supported on even-cardinality subsets only (the even part
    /// A+ of the algebra).
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.keys().all(|m| m.count_ones() % 2 == 1)
    }

    fn check_dim(&self, rhs: &Self) -> Result<(), CliffordError> {
        if self.dim == rhs.dim {
            Ok(())
        } else {
            Err(CliffordError::DimMismatch(self.dim, rhs.dim))
        }
    }

    fn insert(&mut self, mask: u32, value: BigRational) {
        if !value.is_zero() {
            self.coeffs.insert(mask, value);
        }
    }

    fn accumulate(&mut self, mask: u32, value: BigRational) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(mask) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.check_dim(rhs)?;
        let mut out = self.clone();
        for (&mask, c) in &rhs.coeffs {
            out.accumulate(mask, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_signs(|_| -1)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = CliffordElement {
            dim: self.dim,
            coeffs: BTreeMap::new(),
        };
        for (&mask, c) in &self.coeffs {
            out.insert(mask, c * q);
        }
        out
    }

    /// The bilinear product, with e_S e_T = sign(S, T) e_(S xor T).
    pub fn mul(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.check_dim(rhs)?;
        let mut out = CliffordElement {
            dim: self.dim,
            coeffs: BTreeMap::new(),
        };
        for (&s, cs) in &self.coeffs {
            for (&t, ct) in &rhs.coeffs {
                let mut value = cs * ct;
                if reorder_sign(s, t) < 0 {
                    value = -value;
                }
                out.accumulate(s ^ t, value);
            }
        }
        Ok(out)
    }

    fn map_signs(&self, sign: impl Fn(u32) -> i32) -> Self {
        let mut out = CliffordElement {
            dim: self.dim,
            coeffs: BTreeMap::new(),
        };
        for (&mask, c) in &self.coeffs {
            let v = if sign(mask) < 0 { -c.clone() } else { c.clone() };
            out.insert(mask, v);
        }
        out
    }

    /// The principal involution: -1 on V, i.e. the sign (-1)^|S| on e_S.
    /// It is an algebra automorphism.
    pub fn alpha(&self) -> Self {
        self.map_signs(|m| if m.count_ones() % 2 == 0 { 1 } else { -1 })
    }

    /// The principal anti-involution, reversing products: e_S picks up the
    /// sign (-1)^(|S|(|S|-1)/2) of the full reversal.
    pub fn beta(&self) -> Self {
        self.map_signs(|m| {
            let r = m.count_ones();
            if (r * (r.saturating_sub(1)) / 2) % 2 == 0 {
                1
            } else {
                -1
            }
        })
    }

    /// Conjugation x* = beta(alpha(x)), an anti-automorphism negating V.
    pub fn conjugate(&self) -> Self {
        self.alpha().beta()
    }

    /// The inverse, if the element is a unit.
    ///
    /// Fast path: when the spinor norm beta(s)s is a nonzero scalar c, the
    /// inverse is beta(s)/c. Otherwise the question is settled by solving
    /// the linear system of left-multiplication on the full 2^m-dimensional
    /// algebra (left-invertible implies invertible in finite dimension).
    pub fn inverse(&self) -> Option<CliffordElement> {
        if self.is_zero() {
            return None;
        }
        let norm = self.beta().mul(self).expect("same dimension");
        if let Some(c) = norm.to_scalar() {
            if !c.is_zero() {
                return Some(self.beta().scale(&c.recip()));
            }
            // A zero scalar norm does not rule out invertibility a priori;
            // fall through to the solve.
        }
        self.inverse_by_regular_representation()
    }

    fn inverse_by_regular_representation(&self) -> Option<CliffordElement> {
        let n = 1usize << self.dim;
        // Column t of the matrix is s * e_t, expressed on the e_u basis.
        let mut matrix = vec![vec![BigRational::zero(); n + 1]; n];
        for t in 0..n as u32 {
            for (&s, c) in &self.coeffs {
                let mut v = c.clone();
                if reorder_sign(s, t) < 0 {
                    v = -v;
                }
                matrix[(s ^ t) as usize][t as usize] = v;
            }
        }
        // Augment with the unit element and eliminate.
        matrix[0][n] = BigRational::one();
        solve(matrix).map(|solution| {
            let mut out = CliffordElement {
                dim: self.dim,
                coeffs: BTreeMap::new(),
            };
            for (mask, value) in solution.into_iter().enumerate() {
                out.insert(mask as u32, value);
            }
            out
        })
    }
}

/// Sign of reordering e_S e_T into e_(S xor T): counts, for each index in T,
/// how many larger indices of S it must move past.
fn reorder_sign(s: u32, t: u32) -> i32 {
    let mut swaps = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (s >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Gaussian elimination over Q on an augmented n x (n+1) system; returns the
/// solution vector if the system is uniquely solvable.
fn solve(mut m: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col][col..].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// The spinor norm Nm(s) = beta(s) s. On a product of vectors x_1 ... x_r
/// this is the scalar Q(x_1) ... Q(x_r); scalar-valuedness in general is a
/// property of the Clifford group, not of arbitrary elements.
pub fn spinor_norm(s: &CliffordElement) -> CliffordElement {
    s.beta().mul(s).expect("same dimension")
}

/// Membership in the Clifford group C(Q) = units s with s V s* inside V.
pub fn is_in_clifford_group(s: &CliffordElement) -> bool {
    if s.inverse().is_none() {
        return false;
    }
    let conj = s.conjugate();
    for i in 1..=s.dim {
        let e = CliffordElement::basis_vector(s.dim, i).expect("valid index");
        let image = s.mul(&e).and_then(|m| m.mul(&conj)).expect("same dimension");
        if image.vector_coords().is_none() {
            return false;
        }
    }
    true
}

/// Membership in the special Clifford group SC(Q) = C(Q) intersected with
/// the even part.
pub fn is_in_special_clifford(s: &CliffordElement) -> bool {
    s.is_even() && is_in_clifford_group(s)
}

/// Membership in Spin(Q) = SC(Q) intersected with the kernel of the spinor
/// norm.
pub fn is_in_spin(s: &CliffordElement) -> bool {
    is_in_special_clifford(s)
        && spinor_norm(s)
            .to_scalar()
            .map(|c| c.is_one())
            .unwrap_or(false)
}

/// The twisted action of s on a vector x: the orthogonal transformation
/// x -> s x s* / Nm(s).
///
/// Dividing by the (scalar) spinor norm makes the assignment trivial on
/// scalars and lands the image of a vector product on the corresponding
/// product of genuine reflections.
pub fn twisted_action(
    s: &CliffordElement,
    x: &[BigRational],
) -> Result<Vec<BigRational>, CliffordError> {
    let norm = spinor_norm(s)
        .to_scalar()
        .filter(|c| !c.is_zero())
        .ok_or(CliffordError::NotInCliffordGroup)?;
    let v = CliffordElement::vector(s.dim, x)?;
    let image = s.mul(&v)?.mul(&s.conjugate())?;
    let coords = image
        .vector_coords()
        .ok_or(CliffordError::NotInCliffordGroup)?;
    let inv = norm.recip();
    Ok(coords.into_iter().map(|c| c * &inv).collect())
}

/// The m x m matrix of the twisted action in the basis e_1, ..., e_m.
/// Requires s to be in the Clifford group (a nonzero scalar spinor norm and
/// images of basis vectors staying in V, both checked here); the result is
/// orthogonal, with determinant +1 for even s and -1 for odd s.
pub fn orthogonal_matrix_of(
    s: &CliffordElement,
) -> Result<Vec<Vec<BigRational>>, CliffordError> {
    let norm = spinor_norm(s)
        .to_scalar()
        .filter(|c| !c.is_zero())
        .ok_or(CliffordError::NotInCliffordGroup)?;
    let inv = norm.recip();
    let conj = s.conjugate();
    let m = s.dim as usize;
    let mut columns = Vec::with_capacity(m);
    for j in 1..=s.dim {
        let e = CliffordElement::basis_vector(s.dim, j)?;
        let image = s.mul(&e)?.mul(&conj)?;
        let coords = image
            .vector_coords()
            .ok_or(CliffordError::NotInCliffordGroup)?;
        columns.push(coords.into_iter().map(|c| c * &inv).collect::<Vec<_>>());
    }
    // Transpose columns into rows: entry (i, j) is the i-th coordinate of
    // the image of e_j.
    Ok((0..m)
        .map(|i| (0..m).map(|j| columns[j][i].clone()).collect())
        .collect())
}

/// Basis of the center of the even part A+, i.e. of the elements commuting
/// with every generator e_i e_j of A+.
///
/// The commutator of basis elements is diagonal in the subset basis
/// ([e_S, e_T] is 0 or +-2 e_(S xor T), and S -> S xor T is injective), so
/// the exact linear system decouples: the center is spanned by the even e_S
/// commuting with every generator. The expected answer is {1} for odd m and
/// {1, e_1...e_m} for even m.
pub fn even_center_basis(m: u32) -> Result<Vec<CliffordElement>, CliffordError> {
    if m == 0 || m > MAX_DIM {
        return Err(CliffordError::DimensionTooLarge(m));
    }
    let mut basis = Vec::new();
    for mask in 0..(1u32 << m) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let central = pair_masks(m).all(|gen| reorder_sign(mask, gen) == reorder_sign(gen, mask));
        if central {
            basis.push(CliffordElement::basis_element(m, mask)?);
        }
    }
    Ok(basis)
}

fn pair_masks(m: u32) -> impl Iterator<Item = u32> {
    (0..m).flat_map(move |i| ((i + 1)..m).map(move |j| (1 << i) | (1 << j)))
}

impl std::fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&mask, c) in &self.coeffs {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let abs = c.abs();
            if mask == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "e")?;
                for i in 0..self.dim {
                    if mask & (1 << i) != 0 {
                        write!(f, "{}", i + 1)?;
                    }
                }
            }
        }
        Ok(())
    }
}
