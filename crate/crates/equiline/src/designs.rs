//! Spherical two-distance sets derived from SRGs: eigenspace projection,
//! the shifted 2-design lift, and tight 4/5-design parameter families.

use num::{BigInt, One};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat_u64, sqrt_rational, Rational, Surd};
use crate::frames::{frame_potential_equiangular, EtfSpec};
use crate::srg::{fjg_ascend, spectrum, waldron_srg_of_etf, SrgParams, WaldronOutcome};

/// Choice of nontrivial eigenspace of an SRG: R carries the positive
/// eigenvalue r (multiplicity f), S the negative eigenvalue s
/// (multiplicity g).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Eigenspace {
    R,
    S,
}

impl std::fmt::Display for Eigenspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenspace::R => write!(f, "r"),
            Eigenspace::S => write!(f, "s"),
        }
    }
}

/// A spherical two-distance set: `size` unit vectors in `R^dimension` whose
/// pairwise inner products take exactly the two values
/// `inner_a > inner_b`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoDistanceSpec {
    pub dimension: u64,
    pub size: u64,
    pub inner_a: Surd,
    pub inner_b: Surd,
    /// Largest design strength known for the set; 0 when unknown.
    pub design_strength: u32,
    pub tight_frame: bool,
}

impl TwoDistanceSpec {
    /// The common angle when the set is equiangular (inner_a = -inner_b).
    pub fn equiangular_angle(&self) -> Option<Surd> {
        if self.inner_a == self.inner_b.neg() {
            Some(self.inner_a.clone())
        } else {
            None
        }
    }
}

/// Projects the vertex set of srg(v, k, lambda, mu) onto a nontrivial
/// eigenspace and rescales to the unit sphere.
///
/// With theta the chosen eigenvalue and theta' the other one, the projected
/// inner products are (v - k + theta')/(theta'(1 - v) - k) for adjacent
/// pairs and (k - theta')/(theta'(v - 1) + k) for non-adjacent pairs; the
/// image spans a space of dimension equal to the multiplicity of theta and
/// is always a spherical 2-design, hence a tight frame.
pub fn project_srg(p: &SrgParams, which: Eigenspace) -> Result<TwoDistanceSpec> {
    let spec = spectrum(p)?;
    let (other, dimension) = match which {
        Eigenspace::R => (spec.s, spec.f),
        Eigenspace::S => (spec.r, spec.g),
    };
    let v_rat = rat_u64(p.v);
    let k_rat = rat_u64(p.k);
    let one = Rational::one();

    let adj_num = other.add_rational(&(&v_rat - &k_rat));
    let adj_den = other
        .mul_rational(&(&one - &v_rat))
        .add_rational(&(-k_rat.clone()));
    let adjacent = adj_num.checked_div(&adj_den)?;

    let non_num = other.neg().add_rational(&k_rat);
    let non_den = other.mul_rational(&(&v_rat - &one)).add_rational(&k_rat);
    let non_adjacent = non_num.checked_div(&non_den)?;

    let (inner_a, inner_b) = match adjacent.try_cmp(&non_adjacent)? {
        std::cmp::Ordering::Less => (non_adjacent, adjacent),
        _ => (adjacent, non_adjacent),
    };
    Ok(TwoDistanceSpec {
        dimension,
        size: p.v,
        inner_a,
        inner_b,
        design_strength: 2,
        tight_frame: true,
    })
}

/// Result of appending a constant coordinate to a spherical 2-design so the
/// two inner products become symmetric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftedLift {
    pub lifted: TwoDistanceSpec,
    /// Squared rescaling factor applied to the original coordinates.
    pub scale_sq: Surd,
    /// Squared value of the appended constant coordinate.
    pub height_sq: Surd,
}

/// Lifts a two-distance 2-design into one higher dimension, producing an
/// equiangular set: with scale s^2 = 2/(2 - (a+b)) and height
/// h^2 = -(a+b)/(2 - (a+b)), the lifted inner products are
/// +-(a - b)/(2 - (a+b)).
///
/// The lifted set is marked as a tight frame exactly when its angle attains
/// the frame-potential minimum in dimension `t.dimension + 1`.
pub fn shifted_lift(t: &TwoDistanceSpec) -> Result<ShiftedLift> {
    if t.design_strength < 2 {
        return Err(Error::InvalidParameters(
            "shifted lift requires a spherical 2-design".to_string(),
        ));
    }
    let sum = t.inner_a.checked_add(&t.inner_b)?;
    let two = Rational::from_integer(BigInt::from(2));
    let denom = sum.neg().add_rational(&two);
    if denom.sign() != std::cmp::Ordering::Greater {
        return Err(Error::InvalidParameters(
            "inner products sum to 2 or more; no unit-sphere lift".to_string(),
        ));
    }
    if sum.sign() == std::cmp::Ordering::Greater {
        return Err(Error::InvalidParameters(
            "inner products sum to a positive value; lift height is imaginary".to_string(),
        ));
    }
    let scale_sq = Surd::from_rational(two).checked_div(&denom)?;
    let height_sq = sum.neg().checked_div(&denom)?;
    let angle = t.inner_a.checked_sub(&t.inner_b)?.checked_div(&denom)?;

    let dimension = t.dimension + 1;
    let tight_frame = match angle.cmp_rational(&Rational::one()) {
        std::cmp::Ordering::Less => {
            frame_potential_equiangular(dimension, t.size, &angle)?.tight
        }
        _ => false,
    };
    Ok(ShiftedLift {
        lifted: TwoDistanceSpec {
            dimension,
            size: t.size,
            inner_a: angle.clone(),
            inner_b: angle.neg(),
            design_strength: 0,
            tight_frame,
        },
        scale_sq,
        height_sq,
    })
}

/// Parameters of a putative tight spherical 5-design: dimension
/// n = (2m+1)^2 - 2, line count n(n+1)/2 (half the design size), and
/// common angle 1/(2m+1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tight5Params {
    pub m: u64,
    pub dimension: u64,
    pub line_count: u64,
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub angle: Rational,
}

pub fn tight5_params(m: u64) -> Result<Tight5Params> {
    if m == 0 {
        return Err(Error::InvalidParameters(
            "tight 5-design family index m must be positive".to_string(),
        ));
    }
    let odd = 2 * m + 1;
    let dimension = odd * odd - 2;
    let line_count = dimension * (dimension + 1) / 2;
    Ok(Tight5Params {
        m,
        dimension,
        line_count,
        angle: Rational::new(BigInt::one(), BigInt::from(odd)),
    })
}

/// The exact zeros +-1/sqrt(n+2) of the degree-2 Gegenbauer-type polynomial
/// 1 + (n+2)(nx^2 - 1)/2 that governs two-distance 2-designs.
pub fn c2_zeros(n: u64) -> Result<(Surd, Surd)> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "dimension must be positive".to_string(),
        ));
    }
    let positive = sqrt_rational(&Rational::new(BigInt::one(), BigInt::from(n + 2)))?;
    let negative = positive.neg();
    Ok((positive, negative))
}

/// Parameters of a putative tight spherical 4-design: dimension
/// n = (2m+1)^2 - 3, size n(n+3)/2, inner products (-1 +- sqrt(n+3))/(n+2)
/// (rational since n+3 is an odd square).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tight4Params {
    pub m: u64,
    pub dimension: u64,
    pub size: u64,
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub inner_a: Rational,
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub inner_b: Rational,
}

pub fn tight4_params(m: u64) -> Result<Tight4Params> {
    if m == 0 {
        return Err(Error::InvalidParameters(
            "tight 4-design family index m must be positive".to_string(),
        ));
    }
    let odd = 2 * m + 1;
    let dimension = odd * odd - 3;
    let size = dimension * (dimension + 3) / 2;
    let denom = BigInt::from(dimension + 2);
    let root = BigInt::from(odd);
    let inner_a = Rational::new(&root - BigInt::one(), denom.clone());
    let inner_b = Rational::new(-(&root + BigInt::one()), denom);
    Ok(Tight4Params {
        m,
        dimension,
        size,
        inner_a,
        inner_b,
    })
}

/// The complement-closed SRG family attached to the tight 5-design with
/// index m: both orientations of the graph on n(n+1)/2 - 1 vertices given by
/// the ETF correspondence, plus every ascent of each on n(n+1)/2 vertices.
/// Sorted by (v, k).
pub fn tight5_srg_family(m: u64) -> Result<Vec<SrgParams>> {
    let params = tight5_params(m)?;
    let etf = EtfSpec::new(params.dimension, params.line_count)?;
    let outcome = waldron_srg_of_etf(&etf)?;
    let WaldronOutcome::Graphs {
        primary,
        complementary,
    } = outcome
    else {
        return Err(Error::Internal(format!(
            "tight 5-design ETF({}, {}) must map to integral graph parameters",
            params.dimension, params.line_count
        )));
    };
    let mut family = vec![primary, complementary];
    family.extend(fjg_ascend(&primary));
    family.extend(fjg_ascend(&complementary));
    family.sort_by_key(|p| (p.v, p.k));
    family.dedup();
    Ok(family)
}
