//! Closed-form bounds and angle constraints for equiangular line systems and
//! spherical designs.

use num::{BigInt, BigUint, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{rat, rat_u64, sqrt_rational, Rational, Surd};

/// Which cardinality hypothesis gates the Larman–Rogers–Seidel angle list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LrsThreshold {
    /// `M > 2n + 3`, the theorem's original hypothesis.
    Strict2n3,
    /// `M > 2n + 1`, Neumaier's refinement (explicit opt-in).
    Neumaier2n1,
}

impl LrsThreshold {
    /// Whether `count` lines in dimension `n` exceed this threshold, making
    /// the angle list applicable.
    pub fn applies(self, n: u64, count: u64) -> bool {
        let slack = match self {
            LrsThreshold::Strict2n3 => 3,
            LrsThreshold::Neumaier2n1 => 1,
        };
        u128::from(count) > 2 * u128::from(n) + slack
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AngleRule {
    Neumann,
    #[serde(rename = "LRS")]
    Lrs,
    Unconstrained,
}

/// The admissible common angles for `count` equiangular lines in dimension
/// `dimension`, as constrained by the rule that fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleCandidateSet {
    pub dimension: u64,
    pub count: u64,
    pub candidates: Vec<Rational>,
    pub rule: AngleRule,
}

impl AngleCandidateSet {
    pub fn contains(&self, angle: &Rational) -> bool {
        self.candidates.iter().any(|c| c == angle)
    }
}

/// True iff `c = 1/(2k-1)` for some integer `k >= 2`, the only angles large
/// equiangular systems can have.
pub fn is_neumann_angle(c: &Rational) -> bool {
    c.numer().is_one()
        && *c.denom() >= BigInt::from(3)
        && c.denom() % BigInt::from(2) == BigInt::one()
}

/// Neumann's constraint: with `M > 2n` lines the angle is an odd unit
/// fraction. The family is unbounded, so `candidates` holds only the first
/// `cutoff` members; membership testing belongs to [`is_neumann_angle`].
pub fn neumann_angles(n: u64, count: u64, cutoff: usize) -> AngleCandidateSet {
    if u128::from(count) <= 2 * u128::from(n) {
        return AngleCandidateSet {
            dimension: n,
            count,
            candidates: Vec::new(),
            rule: AngleRule::Unconstrained,
        };
    }
    let candidates = (2..)
        .take(cutoff)
        .map(|k: i64| rat(1, 2 * k - 1))
        .collect();
    AngleCandidateSet {
        dimension: n,
        count,
        candidates,
        rule: AngleRule::Neumann,
    }
}

/// Larman–Rogers–Seidel: with `M` past the threshold, the angle is `1/(2k-1)`
/// for an integer `k` with `2 <= k <= (1 + sqrt(2n))/2`. The upper limit is
/// decided exactly as `(2k-1)^2 <= 2n`, so the boundary case is included.
pub fn lrs_angles(n: u64, count: u64, threshold: LrsThreshold) -> AngleCandidateSet {
    if !threshold.applies(n, count) {
        return AngleCandidateSet {
            dimension: n,
            count,
            candidates: Vec::new(),
            rule: AngleRule::Unconstrained,
        };
    }
    let two_n = 2 * u128::from(n);
    let mut candidates = Vec::new();
    let mut k: u128 = 2;
    while (2 * k - 1) * (2 * k - 1) <= two_n {
        candidates.push(rat(1, (2 * k - 1) as i64));
        k += 1;
    }
    AngleCandidateSet {
        dimension: n,
        count,
        candidates,
        rule: AngleRule::Lrs,
    }
}

/// The 1/3-angle cap: for `n >= 15` at most `2n - 2` equiangular lines with
/// common angle exactly 1/3 fit in `R^n`. Below `n = 15` the cited statement
/// does not apply and `None` is returned.
pub fn lemmens_seidel_third(n: u64) -> Option<u64> {
    (n >= 15).then(|| 2 * n - 2)
}

/// Relative bound `M <= n(1-c^2)/(1-nc^2)`, valid while `nc^2 < 1`; `None`
/// when inapplicable (including degenerate `c` outside `(0, 1)`).
pub fn relative_bound(n: u64, c: &Rational) -> Option<Rational> {
    if c <= &Rational::zero() || c >= &Rational::one() {
        return None;
    }
    let c2 = c * c;
    let n_rat = rat_u64(n);
    let nc2 = &n_rat * &c2;
    if nc2 >= Rational::one() {
        return None;
    }
    Some(n_rat * (Rational::one() - &c2) / (Rational::one() - nc2))
}

/// Gerzon's bound `M <= n(n+1)/2`, with the angle `1/sqrt(n+2)` any system
/// attaining it must have.
pub fn gerzon_bound(n: u64) -> Result<(BigUint, Surd)> {
    let bound = BigUint::from(n) * BigUint::from(n + 1) / BigUint::from(2u32);
    let angle = sqrt_rational(&Rational::new(1.into(), (BigUint::from(n) + 2u32).into()))?;
    Ok((bound, angle))
}

fn binom(n: u128, k: u128) -> BigUint {
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

/// Delsarte–Goethals–Seidel cardinality bound for spherical t-designs in
/// `R^n`: `C(n+e-1, n-1) + C(n+e-2, n-1)` for `t = 2e`, and
/// `2*C(n+e-1, n-1)` for `t = 2e+1`.
pub fn dgs_design_bound(n: u64, t: u64) -> BigUint {
    let n = u128::from(n);
    let e = u128::from(t / 2);
    if t.is_multiple_of(2) {
        binom(n + e - 1, n - 1) + binom(n + e - 2, n - 1)
    } else {
        BigUint::from(2u32) * binom(n + e - 1, n - 1)
    }
}
