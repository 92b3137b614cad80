//! Dense univariate polynomial helpers and the cyclotomic polynomials.
//!
//! Coefficient vectors are stored in ascending degree order. The rational
//! helpers keep the canonical invariant that the last coefficient is nonzero
//! (the zero polynomial is the empty vector).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Euler totient of `k`, by trial division.
pub fn euler_phi(k: u32) -> u32 {
    assert!(k >= 1, "euler_phi requires k >= 1");
    let mut remaining = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= remaining {
        if remaining.is_multiple_of(p) {
            while remaining.is_multiple_of(p) {
                remaining /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if remaining > 1 {
        result = result / remaining * (remaining - 1);
    }
    result
}

/// The k-th cyclotomic polynomial, monic with integer coefficients, in
/// ascending degree order.
///
/// Computed by exact division of x^k - 1 by Phi_d over all proper divisors
/// d of k. Results are memoized process-wide since every operation in
/// Q(zeta_k) reduces modulo Phi_k.
pub fn cyclotomic_polynomial(k: u32) -> Vec<BigInt> {
    cyclotomic_polynomial_cached(k).as_ref().clone()
}

static PHI_CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub(crate) fn cyclotomic_polynomial_cached(k: u32) -> Arc<Vec<BigInt>> {
    assert!(k >= 1, "cyclotomic polynomial requires k >= 1");
    if let Some(hit) = PHI_CACHE.lock().unwrap().get(&k) {
        return Arc::clone(hit);
    }
    // x^k - 1
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = BigInt::from(-1);
    num[k as usize] = BigInt::one();
    // Do not hold the cache lock across the recursion.
    for d in 1..k {
        if k.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial_cached(d);
            num = div_exact_monic(&num, &phi_d);
        }
    }
    debug_assert_eq!(num.len() as u32 - 1, euler_phi(k));
    let arc = Arc::new(num);
    PHI_CACHE
        .lock()
        .unwrap()
        .entry(k)
        .or_insert_with(|| Arc::clone(&arc));
    arc
}

/// Exact division of integer polynomials by a monic divisor. Panics if the
/// division leaves a remainder; the cyclotomic recursion never does.
fn div_exact_monic(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    assert!(div.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = div.len() - 1;
    assert!(rem.len() > dd);
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let lead = std::mem::replace(&mut rem[i + dd], BigInt::zero());
        if !lead.is_zero() {
            for (j, c) in div.iter().take(dd).enumerate() {
                let sub = &lead * c;
                rem[i + j] -= sub;
            }
        }
        quot[i] = lead;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

// ---- Rational polynomial helpers (used by the cyclotomic field ops) ----

pub(crate) fn trim(coeffs: &mut Vec<BigRational>) {
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

/// Remainder of `a` modulo the monic integer polynomial `modulus`, returned
/// padded with zeros to length `deg(modulus)`.
pub(crate) fn rem_monic(mut a: Vec<BigRational>, modulus: &[BigInt]) -> Vec<BigRational> {
    let dd = modulus.len() - 1;
    while a.len() > dd {
        let lead = a.pop().unwrap();
        if !lead.is_zero() {
            let at = a.len() - dd;
            for (j, c) in modulus.iter().take(dd).enumerate() {
                let sub = &lead * BigRational::from(c.clone());
                a[at + j] -= sub;
            }
        }
    }
    a.resize(dd, BigRational::zero());
    a
}

/// Quotient and remainder of rational polynomials; `b` must be nonzero.
fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let lead_inv = b.last().expect("division by zero polynomial").recip();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let dq = rem.len() - 1 - db;
    let mut quot = vec![BigRational::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let factor = &rem[i + db] * &lead_inv;
        if !factor.is_zero() {
            for (j, c) in b.iter().enumerate() {
                let sub = &factor * c;
                rem[i + j] -= sub;
            }
        }
        quot[i] = factor;
    }
    trim(&mut rem);
    (quot, rem)
}

fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, c) in out.iter_mut().zip(b.iter()) {
        *o -= c;
    }
    trim(&mut out);
    out
}

/// Extended Euclidean algorithm over Q[x]: returns `(gcd, u)` with
/// `u * a = gcd mod b`. The gcd is whatever nonzero scalar multiple the
/// remainder sequence ends in; callers normalize.
pub(crate) fn ext_gcd_mod(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    trim(&mut r0);
    let mut r1 = b.to_vec();
    trim(&mut r1);
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
        let next_s = sub(&s0, &mul(&q, &s1));
        s0 = std::mem::replace(&mut s1, next_s);
    }
    (r0, s0)
}
