//! Exact elements of the cyclotomic field Q(zeta_k).
//!
//! An element is a polynomial in zeta_k with rational coefficients, reduced
//! modulo the k-th cyclotomic polynomial Phi_k. Working modulo Phi_k (rather
//! than x^k - 1) makes the quotient a *field*, so inversion by the extended
//! Euclidean algorithm is always defined away from zero. The coefficient
//! vector always has length phi(k) exactly, so equality of values is equality
//! of representations.

use super::poly;
use super::{BigInt, BigRational, ExactArithError};
use num_traits::{One, Signed, Zero};

/// An element of Q(zeta_k), where zeta_k = e^(2 pi i / k).
///
/// `coeffs[i]` is the coefficient of zeta_k^i, for `i < phi(k)`. There is no
/// implicit coercion between different orders: mixed-order arithmetic is an
/// error, and callers fix one ambient order per computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    /// The zero element of Q(zeta_k).
    pub fn zero(k: u32) -> Self {
        let deg = poly::euler_phi(k) as usize;
        CyclotomicNumber {
            order: k,
            coeffs: vec![BigRational::zero(); deg],
        }
    }

    /// The unit element of Q(zeta_k).
    pub fn one(k: u32) -> Self {
        Self::from_rational(k, BigRational::one())
    }

    /// The rational number `q` viewed in Q(zeta_k).
    pub fn from_rational(k: u32, q: BigRational) -> Self {
        let mut out = Self::zero(k);
        out.coeffs[0] = q;
        out
    }

    /// The integer `n` viewed in Q(zeta_k).
    pub fn from_integer(k: u32, n: i64) -> Self {
        Self::from_rational(k, BigRational::from(BigInt::from(n)))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients with respect to 1, zeta, ..., zeta^(phi(k)-1).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True if the element lies in Q, i.e. all non-constant coefficients
    /// vanish.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The element as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Extract a rational integer. This is the trusted integrality assertion
    /// at the end of a Verlinde evaluation: it aborts rather than rounds.
    pub fn to_integer(&self) -> Result<BigInt, ExactArithError> {
        match self.to_rational() {
            Some(q) if q.is_integer() => Ok(q.to_integer()),
            _ => Err(ExactArithError::NotAnInteger(self.order)),
        }
    }

    fn check_order(&self, rhs: &Self) -> Result<(), ExactArithError> {
        if self.order == rhs.order {
            Ok(())
        } else {
            Err(ExactArithError::OrderMismatch(self.order, rhs.order))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactArithError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicNumber {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ExactArithError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CyclotomicNumber {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product, reduced modulo Phi_k.
    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactArithError> {
        self.check_order(rhs)?;
        Ok(self.mul_same_order(rhs))
    }

    fn mul_same_order(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len();
        let mut conv = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let modulus = poly::cyclotomic_polynomial_cached(self.order);
        CyclotomicNumber {
            order: self.order,
            coeffs: poly::rem_monic(conv, &modulus),
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm on the
    /// coefficient polynomial and Phi_k over Q.
    pub fn inverse(&self) -> Result<Self, ExactArithError> {
        if self.is_zero() {
            return Err(ExactArithError::DivisionByZero(self.order));
        }
        let modulus: Vec<BigRational> = poly::cyclotomic_polynomial_cached(self.order)
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let (gcd, cofactor) = poly::ext_gcd_mod(&self.coeffs, &modulus);
        // Phi_k is irreducible over Q, so the gcd with a nonzero element of
        // smaller degree is a nonzero constant.
        assert_eq!(gcd.len(), 1, "cyclotomic polynomial not coprime to element");
        let scale = gcd[0].recip();
        let scaled: Vec<BigRational> = cofactor.iter().map(|c| c * &scale).collect();
        let int_modulus = poly::cyclotomic_polynomial_cached(self.order);
        Ok(CyclotomicNumber {
            order: self.order,
            coeffs: poly::rem_monic(scaled, &int_modulus),
        })
    }

    /// Raise to a nonnegative power by binary exponentiation.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::one(self.order);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul_same_order(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_same_order(&base);
            }
        }
        result
    }

    /// The image under complex conjugation, zeta |-> zeta^(-1).
    pub fn conjugate(&self) -> Self {
        let k = self.order;
        let mut out = Self::zero(k);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = root_power(k, -(i as i64)).scale(c);
                out = out.add(&term).expect("same order");
            }
        }
        out
    }
}

/// zeta_k^(a mod k), reduced modulo Phi_k.
pub fn root_power(k: u32, a: i64) -> CyclotomicNumber {
    let e = a.rem_euclid(k as i64) as usize;
    let deg = poly::euler_phi(k) as usize;
    if e < deg {
        let mut out = CyclotomicNumber::zero(k);
        out.coeffs[e] = BigRational::one();
        return out;
    }
    let mut mono = vec![BigRational::zero(); e + 1];
    mono[e] = BigRational::one();
    let modulus = poly::cyclotomic_polynomial_cached(k);
    CyclotomicNumber {
        order: k,
        coeffs: poly::rem_monic(mono, &modulus),
    }
}

/// The exact value 4 sin^2(pi a / k) = (1 - zeta_k^a)(1 - zeta_k^(-a)).
///
/// The result is fixed by complex conjugation. `a = 0 mod k` is rejected:
/// the value would be zero, and these factors only ever enter inverted
/// products.
pub fn four_sin_sq(k: u32, a: i64) -> Result<CyclotomicNumber, ExactArithError> {
    if a.rem_euclid(k as i64) == 0 {
        return Err(ExactArithError::ZeroSineFactor(k, a));
    }
    let one = CyclotomicNumber::one(k);
    let left = one.sub(&root_power(k, a)).expect("same order");
    let right = one.sub(&root_power(k, -a)).expect("same order");
    left.mul(&right)
}

impl std::fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs.is_one() {
                        write!(f, "z^{i}")?;
                    } else {
                        write!(f, "{abs}*z^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " (order {})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn root_power_order_4_is_imaginary_unit() {
        let i = root_power(4, 1);
        assert_eq!(i.coeffs(), &[rat(0, 1), rat(1, 1)]);
        // zeta_4^2 = -1
        let sq = i.mul(&i).unwrap();
        assert_eq!(sq, CyclotomicNumber::from_integer(4, -1));
    }

    #[test]
    fn root_power_wraps_modulo_k() {
        assert_eq!(root_power(3, 3), CyclotomicNumber::one(3));
        assert_eq!(root_power(6, -1), root_power(6, 5));
    }

    #[test]
    fn mul_is_identity_with_one() {
        let x = root_power(12, 7)
            .add(&CyclotomicNumber::from_rational(12, rat(3, 5)))
            .unwrap();
        assert_eq!(x.mul(&CyclotomicNumber::one(12)).unwrap(), x);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = CyclotomicNumber::one(3);
        let b = CyclotomicNumber::one(4);
        assert_eq!(a.mul(&b), Err(ExactArithError::OrderMismatch(3, 4)));
    }

    #[test]
    fn product_of_conjugate_cube_root_factors_is_three() {
        // (1 - zeta_3)(1 - zeta_3^2) = 3, by expanding with 1 + z + z^2 = 0.
        let one = CyclotomicNumber::one(3);
        let a = one.sub(&root_power(3, 1)).unwrap();
        let b = one.sub(&root_power(3, 2)).unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.to_integer().unwrap(), BigInt::from(3));
    }

    #[test]
    fn inverse_of_one_minus_cube_root() {
        // From (1 - zeta_3)(1 - zeta_3^2) = 3: the inverse is (1 - zeta_3^2)/3.
        let one = CyclotomicNumber::one(3);
        let a = one.sub(&root_power(3, 1)).unwrap();
        let inv = a.inverse().unwrap();
        let expect = one.sub(&root_power(3, 2)).unwrap().scale(&rat(1, 3));
        assert_eq!(inv, expect);
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn inverse_of_root_is_opposite_power() {
        for k in [5u32, 8, 12] {
            let z = root_power(k, 1);
            assert_eq!(z.inverse().unwrap(), root_power(k, k as i64 - 1));
        }
        assert!(CyclotomicNumber::one(9).inverse().unwrap().is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(
            CyclotomicNumber::zero(5).inverse(),
            Err(ExactArithError::DivisionByZero(5))
        );
    }

    #[test]
    fn four_sin_sq_small_values() {
        // 4 sin^2(pi/6) = 1, 4 sin^2(pi/2) = 4, 4 sin^2(pi/4) = 2.
        assert_eq!(
            four_sin_sq(6, 1).unwrap().to_integer().unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            four_sin_sq(6, 3).unwrap().to_integer().unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            four_sin_sq(4, 1).unwrap().to_integer().unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn four_sin_sq_rejects_zero_argument() {
        assert!(four_sin_sq(6, 0).is_err());
        assert!(four_sin_sq(6, 12).is_err());
        assert!(four_sin_sq(6, -6).is_err());
    }

    #[test]
    fn four_sin_sq_symmetry_and_conjugation() {
        for k in [5u32, 9, 16] {
            for a in 1..k {
                let v = four_sin_sq(k, a as i64).unwrap();
                assert_eq!(v, four_sin_sq(k, (k - a) as i64).unwrap());
                assert_eq!(v, v.conjugate());
            }
        }
    }

    #[test]
    fn to_integer_accepts_constants_and_rejects_roots() {
        assert_eq!(
            CyclotomicNumber::from_integer(8, 35).to_integer().unwrap(),
            BigInt::from(35)
        );
        assert_eq!(
            root_power(4, 1).to_integer(),
            Err(ExactArithError::NotAnInteger(4))
        );
        assert_eq!(
            CyclotomicNumber::from_rational(4, rat(1, 2)).to_integer(),
            Err(ExactArithError::NotAnInteger(4))
        );
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = root_power(7, 2)
            .add(&CyclotomicNumber::from_integer(7, 2))
            .unwrap();
        let mut acc = CyclotomicNumber::one(7);
        for e in 0..6u64 {
            assert_eq!(x.pow(e), acc);
            acc = acc.mul(&x).unwrap();
        }
    }

    #[test]
    fn vanishing_sums_of_roots() {
        // 1 + zeta + ... + zeta^(k-1) = 0 for k > 1.
        for k in [2u32, 3, 6, 12, 30] {
            let mut acc = CyclotomicNumber::zero(k);
            for i in 0..k {
                acc = acc.add(&root_power(k, i as i64)).unwrap();
            }
            assert!(acc.is_zero(), "k = {k}");
        }
    }

    fn arb_order() -> impl Strategy<Value = u32> {
        proptest::sample::select(vec![3u32, 4, 5, 6, 8, 9, 12, 15, 16, 20])
    }

    fn arb_element(k: u32) -> impl Strategy<Value = CyclotomicNumber> {
        proptest::collection::vec((-8i64..=8, 1i64..=4), 1..=3).prop_map(move |terms| {
            let mut out = CyclotomicNumber::zero(k);
            for (i, (numer, denom)) in terms.into_iter().enumerate() {
                let term = root_power(k, i as i64).scale(&rat(numer, denom));
                out = out.add(&term).unwrap();
            }
            out
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)>
    {
        arb_order().prop_flat_map(|k| (arb_element(k), arb_element(k), arb_element(k)))
    }

    proptest! {
        #[test]
        fn field_axioms_hold((a, b, c) in arb_triple()) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(&ab, &b.mul(&a).unwrap());
            prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn nonzero_elements_invert((a, _, _) in arb_triple()) {
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_one());
            }
        }
    }
}
