//! Equiangular tight frames: Welch angle, frame potential, tightness
//! detection, and complementation.

use std::cmp::Ordering;

use num::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::exact::{rat_u64, sqrt_rational, Rational, Surd};

/// An equiangular tight frame ETF(n, M, c): `count` unit vectors in
/// dimension `dimension` attaining the Welch bound.
///
/// The angle is always the Welch angle of `(dimension, count)`; constructors
/// recompute it and reject a disagreeing claim, so a stored `EtfSpec` can
/// never contradict itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtfSpec {
    dimension: u64,
    count: u64,
    angle: Surd,
}

impl EtfSpec {
    pub fn new(dimension: u64, count: u64) -> Result<Self> {
        let angle = welch_angle(dimension, count)?;
        Ok(EtfSpec {
            dimension,
            count,
            angle,
        })
    }

    /// Like [`EtfSpec::new`], but validates a caller-supplied angle against
    /// the Welch angle instead of trusting it.
    pub fn with_claimed_angle(dimension: u64, count: u64, claimed: &Surd) -> Result<Self> {
        let spec = Self::new(dimension, count)?;
        if &spec.angle != claimed {
            return Err(Error::AngleMismatch {
                claimed: claimed.to_string(),
                expected: spec.angle.to_string(),
            });
        }
        Ok(spec)
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn angle(&self) -> &Surd {
        &self.angle
    }
}

impl std::fmt::Display for EtfSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ETF({}, {}, {})", self.dimension, self.count, self.angle)
    }
}

/// A feasibility question: `count` equiangular lines in `R^dimension`,
/// optionally at a prescribed common angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSystemQuery {
    pub dimension: u64,
    pub count: u64,
    pub angle: Option<Surd>,
}

impl LineSystemQuery {
    pub fn new(dimension: u64, count: u64, angle: Option<Surd>) -> Result<Self> {
        if let Some(a) = &angle {
            let in_range = a.cmp_rational(&Rational::from_integer(0.into())) == Ordering::Greater
                && a.cmp_rational(&Rational::from_integer(1.into())) == Ordering::Less;
            if !in_range {
                return Err(Error::InvalidParameters(format!(
                    "angle {a} is not in the open interval (0, 1)"
                )));
            }
        }
        Ok(LineSystemQuery {
            dimension,
            count,
            angle,
        })
    }
}

/// The Welch angle `sqrt((M-n)/(n(M-1)))`, the smallest possible coherence of
/// `M` unit vectors in `R^n`.
pub fn welch_angle(n: u64, count: u64) -> Result<Surd> {
    if n == 0 || count <= n {
        return Err(Error::InvalidParameters(format!(
            "welch angle requires count > dimension >= 1, got dimension {n}, count {count}"
        )));
    }
    let numer = BigUint::from(count - n);
    let denom = BigUint::from(n) * BigUint::from(count - 1);
    sqrt_rational(&Rational::new(
        BigInt::from(numer),
        BigInt::from(denom),
    ))
}

/// Frame potential of a unit-norm equiangular system, compared exactly
/// against the tight-frame minimum `M^2/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramePotential {
    /// `M + M(M-1)c^2`.
    pub value: Surd,
    /// `M^2/n`.
    pub minimum: Rational,
    /// `value = minimum`: the system, if it exists, is a tight frame.
    pub tight: bool,
    /// `value < minimum`: no such system exists.
    pub violated: bool,
}

/// Frame potential `M + M(M-1)c^2` of any unit-norm equiangular system of
/// `M` vectors at angle `c` in `R^n`. The potential of every `M`-vector
/// system is at least `M^2/n`, so `value < minimum` refutes existence, and
/// `value = minimum` forces tightness.
pub fn frame_potential_equiangular(n: u64, count: u64, c: &Surd) -> Result<FramePotential> {
    if n == 0 || count <= n {
        return Err(Error::InvalidParameters(format!(
            "frame potential comparison requires count > dimension >= 1, got {n}, {count}"
        )));
    }
    let in_range = c.cmp_rational(&Rational::from_integer(0.into())) != Ordering::Less
        && c.cmp_rational(&Rational::from_integer(1.into())) == Ordering::Less;
    if !in_range {
        return Err(Error::InvalidParameters(format!(
            "angle {c} is not in [0, 1)"
        )));
    }
    let m = rat_u64(count);
    let pair_count = &m * rat_u64(count - 1);
    let value = c.square().mul_rational(&pair_count).add_rational(&m);
    let minimum = &m * &m / rat_u64(n);
    let cmp = value.cmp_rational(&minimum);
    Ok(FramePotential {
        value,
        minimum,
        tight: cmp == Ordering::Equal,
        violated: cmp == Ordering::Less,
    })
}

/// The complementary frame: ETF(n, M) exists iff ETF(M-n, M) exists. The
/// operation is an involution.
pub fn complementary_etf(e: &EtfSpec) -> Result<EtfSpec> {
    EtfSpec::new(e.count - e.dimension, e.count)
}

/// Outcome of testing whether a line-system query forces a tight frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinesToEtf {
    /// Frame potential meets the minimum exactly: the lines, if they exist,
    /// form this ETF.
    Etf(EtfSpec),
    /// Frame potential below the minimum: no such line system exists.
    Refuted(FramePotential),
    /// Nothing follows from the frame potential alone (strictly above the
    /// minimum, or no angle supplied).
    Indeterminate(Option<FramePotential>),
}

/// Applies the frame-potential argument to a line-system query.
pub fn etf_from_lines(q: &LineSystemQuery) -> Result<LinesToEtf> {
    let Some(angle) = &q.angle else {
        return Ok(LinesToEtf::Indeterminate(None));
    };
    let fp = frame_potential_equiangular(q.dimension, q.count, angle)?;
    if fp.violated {
        return Ok(LinesToEtf::Refuted(fp));
    }
    if fp.tight {
        let spec = EtfSpec::with_claimed_angle(q.dimension, q.count, angle)?;
        return Ok(LinesToEtf::Etf(spec));
    }
    Ok(LinesToEtf::Indeterminate(Some(fp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn surd_rat(p: i64, q: i64) -> Surd {
        Surd::from_rational(rat(p, q))
    }

    #[test]
    fn welch_angles() {
        assert_eq!(welch_angle(19, 76).unwrap(), surd_rat(1, 5));
        assert_eq!(welch_angle(57, 76).unwrap(), surd_rat(1, 15));
        assert_eq!(welch_angle(47, 1128).unwrap(), surd_rat(1, 7));
        assert_eq!(welch_angle(3, 6).unwrap().to_string(), "1/5*sqrt(5)");
        assert!(welch_angle(19, 19).is_err());
        assert!(welch_angle(0, 5).is_err());
    }

    #[test]
    fn frame_potential_cases() {
        let fp = frame_potential_equiangular(19, 76, &surd_rat(1, 5)).unwrap();
        assert_eq!(fp.value.as_rational(), Some(rat(304, 1)));
        assert_eq!(fp.minimum, rat(304, 1));
        assert!(fp.tight && !fp.violated);

        let fp = frame_potential_equiangular(20, 96, &surd_rat(1, 5)).unwrap();
        assert_eq!(fp.value.as_rational(), Some(rat(2304, 5)));
        assert!(fp.tight);

        let fp = frame_potential_equiangular(19, 76, &surd_rat(1, 7)).unwrap();
        assert_eq!(fp.value.as_rational(), Some(rat(9424, 49)));
        assert!(!fp.tight && fp.violated);

        let fp = frame_potential_equiangular(19, 75, &surd_rat(1, 5)).unwrap();
        assert_eq!(fp.value.as_rational(), Some(rat(297, 1)));
        assert!(!fp.tight && !fp.violated);
    }

    #[test]
    fn etf_spec_angle_validation() {
        let spec = EtfSpec::new(19, 76).unwrap();
        assert_eq!(spec.angle(), &surd_rat(1, 5));
        assert!(EtfSpec::with_claimed_angle(19, 76, &surd_rat(1, 5)).is_ok());
        assert!(matches!(
            EtfSpec::with_claimed_angle(19, 76, &surd_rat(1, 3)),
            Err(Error::AngleMismatch { .. })
        ));
    }

    #[test]
    fn complement_involution() {
        let e = EtfSpec::new(19, 76).unwrap();
        let c = complementary_etf(&e).unwrap();
        assert_eq!((c.dimension(), c.count()), (57, 76));
        assert_eq!(c.angle(), &surd_rat(1, 15));
        assert_eq!(complementary_etf(&c).unwrap(), e);

        let self_c = EtfSpec::new(3, 6).unwrap();
        assert_eq!(complementary_etf(&self_c).unwrap(), self_c);
    }

    #[test]
    fn lines_to_etf_outcomes() {
        let q = LineSystemQuery::new(19, 76, Some(surd_rat(1, 5))).unwrap();
        assert!(matches!(etf_from_lines(&q).unwrap(), LinesToEtf::Etf(_)));

        let q = LineSystemQuery::new(19, 76, Some(surd_rat(1, 3))).unwrap();
        assert!(matches!(
            etf_from_lines(&q).unwrap(),
            LinesToEtf::Indeterminate(Some(_))
        ));

        let q = LineSystemQuery::new(19, 76, Some(surd_rat(1, 7))).unwrap();
        assert!(matches!(etf_from_lines(&q).unwrap(), LinesToEtf::Refuted(_)));

        let q = LineSystemQuery::new(20, 96, Some(surd_rat(1, 5))).unwrap();
        let LinesToEtf::Etf(spec) = etf_from_lines(&q).unwrap() else {
            panic!("expected tight outcome");
        };
        assert_eq!(spec.count(), 96);

        let q = LineSystemQuery::new(19, 76, None).unwrap();
        assert!(matches!(
            etf_from_lines(&q).unwrap(),
            LinesToEtf::Indeterminate(None)
        ));
    }

    #[test]
    fn query_angle_range() {
        assert!(LineSystemQuery::new(19, 76, Some(surd_rat(1, 1))).is_err());
        assert!(LineSystemQuery::new(19, 76, Some(surd_rat(0, 1))).is_err());
        assert!(LineSystemQuery::new(19, 76, Some(surd_rat(-1, 5))).is_err());
    }

    #[test]
    fn welch_tightness_sweep() {
        for n in 2..40u64 {
            for m in (n + 1)..80 {
                let c = welch_angle(n, m).unwrap();
                let fp = frame_potential_equiangular(n, m, &c).unwrap();
                assert!(fp.tight, "welch angle not tight at ({n}, {m})");
            }
        }
    }
}
