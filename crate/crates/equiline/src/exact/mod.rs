//! Exact scalar arithmetic: arbitrary-precision rationals, quadratic surds,
//! integer square roots, square-free normalization, and binomial coefficients.
//!
//! Every comparison in this module is exact; floating point appears only in
//! the explicit `to_f64` conversions used by the numeric verifier.

mod parse;
mod surd;

pub use parse::{parse_rational, parse_scalar, parse_u64};
pub use surd::Surd;

use crate::error::{Error, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

/// Exact rational scalar. Arbitrary precision, always in lowest terms.
pub type Rational = BigRational;

/// Shorthand constructor for small rationals.
///
/// # Panics
/// Panics if `den == 0`; intended for constants, not untrusted input.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Serde helper: rationals serialize as their display form ("1/5", "304"),
/// the same convention [`Surd`] uses.
pub fn serialize_rational<S: serde::Serializer>(
    value: &Rational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// Floor of the square root together with an exactness flag:
/// `integer_sqrt(x) = (r, e)` where `r = floor(sqrt(x))` and `e` iff `r*r == x`.
pub fn integer_sqrt(x: &BigUint) -> (BigUint, bool) {
    let r = x.sqrt();
    let exact = &r * &r == *x;
    (r, exact)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Largest radicand accepted by [`square_free_split`]. Trial division up to
/// the cube root of a 64-bit integer is cheap and provably complete; beyond
/// that certifying square-freeness would need real factoring.
pub const MAX_RADICAND: u64 = u64::MAX;

/// Writes `x = s^2 * d` with `d` square-free and returns `(s, d)`.
///
/// Perfect squares of any size are handled exactly. Non-squares must fit in
/// `u64` (else [`Error::RadicandTooLarge`]): trial division by every prime
/// `p` with `p^3 <= m` leaves a cofactor with at most two prime factors,
/// which is square-free unless it is a perfect square, and that case is
/// decided by one integer square root.
pub fn square_free_split(x: &BigUint) -> Result<(BigUint, BigUint)> {
    if x.is_zero() || x.is_one() {
        return Ok((BigUint::one(), x.clone()));
    }
    let (root, exact) = integer_sqrt(x);
    if exact {
        return Ok((root, BigUint::one()));
    }
    let mut m: u64 = x
        .try_into()
        .map_err(|_| Error::RadicandTooLarge(x.clone()))?;

    let mut square: u64 = 1;
    let mut free: u64 = 1;
    let divide_out = |m: &mut u64, p: u64, square: &mut u64, free: &mut u64| {
        let mut e = 0u32;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            *square *= p;
        }
        if e % 2 == 1 {
            *free *= p;
        }
    };

    divide_out(&mut m, 2, &mut square, &mut free);
    divide_out(&mut m, 3, &mut square, &mut free);
    let mut p: u64 = 5;
    while (p as u128) * (p as u128) * (p as u128) <= m as u128 {
        divide_out(&mut m, p, &mut square, &mut free);
        divide_out(&mut m, p + 2, &mut square, &mut free);
        p += 6;
    }
    // Cofactor is 1, a prime, a product of two distinct primes, or a prime
    // square; only the last contributes to the square part.
    if m > 1 {
        let r = (m as f64).sqrt() as u64;
        let root = [r.saturating_sub(1), r, r + 1]
            .into_iter()
            .find(|c| c * c == m);
        match root {
            Some(c) => square *= c,
            None => free *= m,
        }
    }
    Ok((BigUint::from(square), BigUint::from(free)))
}

/// Exact square root of a nonnegative rational, normalized so the radicand
/// is square-free: `sqrt(p/q) = (s/q) * sqrt(d)` where `p*q = s^2 * d`.
pub fn sqrt_rational(x: &Rational) -> Result<Surd> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if x.is_zero() {
        return Ok(Surd::zero());
    }
    let p = x.numer().magnitude();
    let q = x.denom().magnitude();
    let (s, d) = square_free_split(&(p * q))?;
    let coeff = Rational::new(BigInt::from(s), x.denom().clone());
    Surd::new(Rational::zero(), coeff, d)
}

/// True iff `x` is an integer (denominator 1 after reduction).
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Converts an integer-valued rational to `u64` if it fits.
pub fn to_u64(x: &Rational) -> Option<u64> {
    if !is_integer(x) || x.is_negative() {
        return None;
    }
    x.numer().magnitude().try_into().ok()
}

/// Exact conversion helpers between `u64` parameters and big rationals.
pub fn rat_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn sign_of(x: &Rational) -> std::cmp::Ordering {
    match x.numer().sign() {
        Sign::Minus => std::cmp::Ordering::Less,
        Sign::NoSign => std::cmp::Ordering::Equal,
        Sign::Plus => std::cmp::Ordering::Greater,
    }
}
