//! Quadratic surds `a + b*sqrt(d)` over the rationals, with a single
//! square-free radicand per value and exact comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigUint, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;

use crate::error::{Error, Result};
use crate::exact::{sign_of, square_free_split, Rational};

/// Exact value `rational + coeff * sqrt(radicand)`.
///
/// Invariants enforced by every constructor:
/// - `radicand` is zero (value is rational, `coeff` is zero) or square-free
///   and at least 2;
/// - two surds combine arithmetically only when their radicands agree or one
///   side is rational ([`Error::IncompatibleRadicands`] otherwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    rational: Rational,
    coeff: Rational,
    radicand: BigUint,
}

impl Surd {
    /// Builds `rational + coeff*sqrt(radicand)`, normalizing the radicand to
    /// square-free form and folding perfect squares into the rational part.
    pub fn new(rational: Rational, coeff: Rational, radicand: BigUint) -> Result<Self> {
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(Self::from_rational(rational));
        }
        let (square, free) = square_free_split(&radicand)?;
        let coeff = coeff * Rational::from_integer(square.into());
        if free.is_one() {
            return Ok(Self::from_rational(rational + coeff));
        }
        Ok(Surd {
            rational,
            coeff,
            radicand: free,
        })
    }

    /// Internal constructor for radicands already known square-free.
    fn assemble(rational: Rational, coeff: Rational, radicand: BigUint) -> Self {
        if coeff.is_zero() || radicand.is_zero() {
            return Self::from_rational(rational);
        }
        debug_assert!(radicand >= BigUint::from(2u32));
        Surd {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn from_rational(rational: Rational) -> Self {
        Surd {
            rational,
            coeff: Rational::zero(),
            radicand: BigUint::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.rational.is_zero()
    }

    /// The exact rational value, when there is no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rational.clone())
    }

    fn compatible_radicand(&self, other: &Self) -> Result<BigUint> {
        if self.is_rational() {
            return Ok(other.radicand.clone());
        }
        if other.is_rational() || self.radicand == other.radicand {
            return Ok(self.radicand.clone());
        }
        Err(Error::IncompatibleRadicands(
            self.radicand.clone(),
            other.radicand.clone(),
        ))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.compatible_radicand(other)?;
        Ok(Self::assemble(
            &self.rational + &other.rational,
            &self.coeff + &other.coeff,
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.compatible_radicand(other)?;
        Ok(Self::assemble(
            &self.rational - &other.rational,
            &self.coeff - &other.coeff,
            d,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.compatible_radicand(other)?;
        let d_rat = Rational::from_integer(d.clone().into());
        let rational = &self.rational * &other.rational + &self.coeff * &other.coeff * d_rat;
        let coeff = &self.rational * &other.coeff + &self.coeff * &other.rational;
        Ok(Self::assemble(rational, coeff, d))
    }

    /// Division via the conjugate; exact because `a^2 - b^2 d` cannot vanish
    /// for a nonzero value with square-free `d >= 2`.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.compatible_radicand(other)?;
        if other.is_rational() {
            return Ok(Self::assemble(
                &self.rational / &other.rational,
                &self.coeff / &other.rational,
                d,
            ));
        }
        let d_rat = Rational::from_integer(other.radicand.clone().into());
        let norm = &other.rational * &other.rational - &other.coeff * &other.coeff * &d_rat;
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conjugate = Self::assemble(
            &other.rational / &norm,
            -(&other.coeff / &norm),
            other.radicand.clone(),
        );
        self.checked_mul(&conjugate)
    }

    pub fn square(&self) -> Self {
        self.checked_mul(self)
            .expect("a surd is radicand-compatible with itself")
    }

    pub fn neg(&self) -> Self {
        Self::assemble(-self.rational.clone(), -self.coeff.clone(), self.radicand.clone())
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Self::assemble(&self.rational + r, self.coeff.clone(), self.radicand.clone())
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        Self::assemble(&self.rational * r, &self.coeff * r, self.radicand.clone())
    }

    /// Exact sign of the value, decided by squaring when the rational part
    /// and the surd part have opposite signs.
    pub fn sign(&self) -> Ordering {
        if self.coeff.is_zero() {
            return sign_of(&self.rational);
        }
        let surd_sign = sign_of(&self.coeff);
        if self.rational.is_zero() {
            return surd_sign;
        }
        let rat_sign = sign_of(&self.rational);
        if rat_sign == surd_sign {
            return rat_sign;
        }
        let d = Rational::from_integer(self.radicand.clone().into());
        let square_cmp =
            (&self.rational * &self.rational).cmp(&(&self.coeff * &self.coeff * d));
        // |a| > |b|sqrt(d) means the rational part wins, otherwise the surd
        // part does; equality is impossible with a square-free d >= 2.
        match square_cmp {
            Ordering::Greater => rat_sign,
            Ordering::Less => surd_sign,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Exact comparison; errors when radicands are incompatible.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.sign())
    }

    /// Exact comparison against a rational (always compatible).
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.add_rational(&-r.clone()).sign()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.coeff.is_zero() {
            return a;
        }
        let b = self.coeff.to_f64().unwrap_or(f64::NAN);
        let d = self.radicand.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

impl From<Rational> for Surd {
    fn from(r: Rational) -> Self {
        Surd::from_rational(r)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

fn fmt_surd_part(f: &mut fmt::Formatter<'_>, coeff: &Rational, radicand: &BigUint) -> fmt::Result {
    if !coeff.is_one() {
        write!(f, "{coeff}*")?;
    }
    write!(f, "sqrt({radicand})")
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            if self.coeff.is_negative() {
                write!(f, "-")?;
                return fmt_surd_part(f, &-self.coeff.clone(), &self.radicand);
            }
            return fmt_surd_part(f, &self.coeff, &self.radicand);
        }
        write!(f, "{}", self.rational)?;
        if self.coeff.is_negative() {
            write!(f, " - ")?;
            fmt_surd_part(f, &-self.coeff.clone(), &self.radicand)
        } else {
            write!(f, " + ")?;
            fmt_surd_part(f, &self.coeff, &self.radicand)
        }
    }
}

impl FromStr for Surd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::exact::parse_scalar(s)
    }
}

impl serde::Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Surd {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(|e: Error| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, sqrt_rational};

    fn surd(a: (i64, i64), b: (i64, i64), d: u64) -> Surd {
        Surd::new(rat(a.0, a.1), rat(b.0, b.1), BigUint::from(d)).unwrap()
    }

    #[test]
    fn normalization_folds_squares() {
        let s = Surd::new(rat(0, 1), rat(1, 1), BigUint::from(18u32)).unwrap();
        assert_eq!(s.coeff(), &rat(3, 1));
        assert_eq!(s.radicand(), &BigUint::from(2u32));
        let s = Surd::new(rat(1, 2), rat(2, 3), BigUint::from(9u32)).unwrap();
        assert_eq!(s.as_rational(), Some(rat(5, 2)));
    }

    #[test]
    fn arithmetic_same_radicand() {
        let x = surd((1, 2), (1, 3), 5);
        let y = surd((1, 4), (-1, 3), 5);
        let sum = x.checked_add(&y).unwrap();
        assert_eq!(sum.as_rational(), Some(rat(3, 4)));
        let prod = x.checked_mul(&y).unwrap();
        // (1/2 + 1/3 s)(1/4 - 1/3 s) = 1/8 - 5/9 + (1/12 - 1/6) s, s = sqrt(5)
        assert_eq!(prod.rational_part(), &rat(-31, 72));
        assert_eq!(prod.coeff(), &rat(-1, 12));
    }

    #[test]
    fn incompatible_radicands_error() {
        let x = surd((0, 1), (1, 1), 2);
        let y = surd((0, 1), (1, 1), 3);
        assert!(matches!(
            x.checked_add(&y),
            Err(Error::IncompatibleRadicands(_, _))
        ));
        assert_eq!(x.partial_cmp(&y), None);
    }

    #[test]
    fn division_by_conjugate() {
        let one = Surd::from_int(1);
        let x = surd((1, 1), (1, 1), 2);
        let inv = one.checked_div(&x).unwrap();
        // 1/(1 + sqrt(2)) = sqrt(2) - 1
        assert_eq!(inv.rational_part(), &rat(-1, 1));
        assert_eq!(inv.coeff(), &rat(1, 1));
        assert!(matches!(
            x.checked_div(&Surd::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn exact_sign_with_opposite_parts() {
        // 7/5 - sqrt(2) > 0 iff 49/25 > 2: false, so negative.
        let s = surd((7, 5), (-1, 1), 2);
        assert_eq!(s.sign(), Ordering::Less);
        // 3/2 - sqrt(2) > 0 iff 9/4 > 2: true.
        let s = surd((3, 2), (-1, 1), 2);
        assert_eq!(s.sign(), Ordering::Greater);
        // Near-tie from the other side: sqrt(2) - 141/100 < 0 iff 2 < 19881/10000.
        let s = surd((-141, 100), (1, 1), 2);
        assert_eq!(s.sign(), Ordering::Greater);
    }

    #[test]
    fn ordering_against_rationals() {
        let w = sqrt_rational(&rat(1, 2)).unwrap();
        assert_eq!(w.cmp_rational(&rat(7, 10)), Ordering::Greater);
        assert_eq!(w.cmp_rational(&rat(71, 100)), Ordering::Less);
    }

    #[test]
    fn display_forms() {
        assert_eq!(surd((0, 1), (1, 1), 5).to_string(), "sqrt(5)");
        assert_eq!(surd((0, 1), (-1, 3), 5).to_string(), "-1/3*sqrt(5)");
        assert_eq!(surd((-1, 4), (1, 4), 5).to_string(), "-1/4 + 1/4*sqrt(5)");
        assert_eq!(surd((1, 2), (-3, 35), 5).to_string(), "1/2 - 3/35*sqrt(5)");
        assert_eq!(Surd::from_int(-7).to_string(), "-7");
        assert_eq!(Surd::from_rational(rat(19, 56)).to_string(), "19/56");
    }

    #[test]
    fn display_parse_round_trip() {
        let samples = [
            surd((0, 1), (1, 1), 5),
            surd((-1, 4), (1, 4), 5),
            surd((1, 2), (-3, 35), 7),
            surd((22, 7), (0, 1), 0),
            Surd::from_int(0),
            Surd::from_int(-12),
        ];
        for s in samples {
            let text = s.to_string();
            let back: Surd = text.parse().unwrap();
            assert_eq!(back, s, "round trip failed for {text}");
        }
    }

    #[test]
    fn serde_as_string() {
        let s = surd((-1, 4), (1, 4), 5);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"-1/4 + 1/4*sqrt(5)\"");
        let back: Surd = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
