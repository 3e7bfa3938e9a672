//! Strongly regular graph parameter algebra: spectrum, feasibility,
//! complementation, the ETF correspondence, two-graph descent and ascent,
//! and the known-status database.

pub mod database;

use num::{BigInt, BigUint, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{integer_sqrt, is_integer, rat_u64, sqrt_rational, to_u64, Rational, Surd};
use crate::frames::EtfSpec;

/// Parameter set srg(v, k, lambda, mu): a k-regular graph on v vertices in
/// which adjacent pairs share `lambda` common neighbors and non-adjacent
/// pairs share `mu`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// Basic range constraints every parameter set must satisfy; one message
    /// per violation.
    pub fn range_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.v < 2 {
            out.push(format!("vertex count {} is below 2", self.v));
        }
        if self.k + 1 > self.v {
            out.push(format!("degree {} exceeds v - 1 = {}", self.k, self.v - 1));
        }
        if self.k == 0 {
            if self.lambda != 0 || self.mu != 0 {
                out.push("edgeless graph requires lambda = mu = 0".to_string());
            }
        } else if self.lambda + 1 > self.k {
            out.push(format!(
                "lambda {} exceeds k - 1 = {}",
                self.lambda,
                self.k - 1
            ));
        }
        if self.mu > self.k {
            out.push(format!("mu {} exceeds k = {}", self.mu, self.k));
        }
        out
    }

    /// The counting identity k(k - lambda - 1) = (v - k - 1)mu, which holds
    /// in every strongly regular graph by double counting edges between a
    /// vertex's neighborhood and its complement.
    pub fn counting_identity_holds(&self) -> bool {
        let k = BigInt::from(self.k);
        let lhs = &k * (&k - BigInt::from(self.lambda) - BigInt::one());
        let rhs = (BigInt::from(self.v) - &k - BigInt::one()) * BigInt::from(self.mu);
        lhs == rhs
    }

    /// The regular two-graph condition v = 4k - 2*lambda - 2*mu, the
    /// hypothesis of [`fjg_descent`].
    pub fn regular_two_graph(&self) -> bool {
        let rhs = 4 * i128::from(self.k) - 2 * i128::from(self.lambda) - 2 * i128::from(self.mu);
        i128::from(self.v) == rhs
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "srg({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Nontrivial eigenvalues r > s of an SRG together with their multiplicities
/// f and g (the trivial eigenvalue k has multiplicity 1; f + g = v - 1).
#[derive(Debug, Clone, PartialEq)]
pub struct SrgSpectrum {
    pub r: Surd,
    pub s: Surd,
    pub f: u64,
    pub g: u64,
    /// (lambda - mu)^2 + 4(k - mu), the discriminant of x^2 - (lambda-mu)x - (k-mu).
    pub discriminant: BigUint,
}

/// Nontrivial eigenvalues and multiplicities of srg(v, k, lambda, mu).
///
/// Requires a connected, non-complete-multipartite parameter set
/// (0 < mu < k). In the conference case 2k + (v-1)(lambda-mu) = 0 the
/// eigenvalues may be irrational and the multiplicities are both (v-1)/2;
/// otherwise integral multiplicities are enforced.
pub fn spectrum(p: &SrgParams) -> Result<SrgSpectrum> {
    let violations = p.range_violations();
    if !violations.is_empty() {
        return Err(Error::InvalidParameters(violations.join("; ")));
    }
    if p.mu >= p.k {
        return Err(Error::CompleteMultipartite {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        });
    }
    if p.mu == 0 {
        return Err(Error::InvalidParameters(format!(
            "{p} is disconnected (mu = 0)"
        )));
    }
    let lm = BigInt::from(p.lambda) - BigInt::from(p.mu);
    let disc = &lm * &lm + BigInt::from(4) * (BigInt::from(p.k) - BigInt::from(p.mu));
    let disc_uint = disc
        .to_biguint()
        .expect("k > mu makes the discriminant positive");
    let trace_term = BigInt::from(2) * BigInt::from(p.k) + BigInt::from(p.v - 1) * &lm;

    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let lm_rat = Rational::from_integer(lm.clone());

    let (f, g);
    if trace_term.is_zero() {
        if p.v.is_multiple_of(2) {
            return Err(Error::NonIntegralMultiplicities {
                v: p.v,
                k: p.k,
                lambda: p.lambda,
                mu: p.mu,
            });
        }
        f = (p.v - 1) / 2;
        g = f;
    } else {
        let (root, exact) = integer_sqrt(&disc_uint);
        if !exact {
            return Err(Error::NonIntegralMultiplicities {
                v: p.v,
                k: p.k,
                lambda: p.lambda,
                mu: p.mu,
            });
        }
        let root = BigInt::from(root);
        let ratio = &trace_term / &root;
        let integral = &ratio * &root == trace_term;
        let f2 = BigInt::from(p.v - 1) - &ratio;
        let g2 = BigInt::from(p.v - 1) + &ratio;
        let even = (&f2 % BigInt::from(2)).is_zero();
        if !integral || !even || f2.is_negative() || g2.is_negative() {
            return Err(Error::NonIntegralMultiplicities {
                v: p.v,
                k: p.k,
                lambda: p.lambda,
                mu: p.mu,
            });
        }
        f = to_u64(&Rational::new(f2, BigInt::from(2))).ok_or_else(|| {
            Error::InvalidParameters(format!("multiplicity of {p} overflows u64"))
        })?;
        g = to_u64(&Rational::new(g2, BigInt::from(2))).ok_or_else(|| {
            Error::InvalidParameters(format!("multiplicity of {p} overflows u64"))
        })?;
    }
    if f == 0 || g == 0 {
        return Err(Error::InvalidParameters(format!(
            "{p} has a non-positive eigenvalue multiplicity"
        )));
    }

    let root_surd = sqrt_rational(&Rational::from_integer(BigInt::from(disc_uint.clone())))?;
    let r = root_surd
        .mul_rational(&half)
        .add_rational(&(&lm_rat * &half));
    let s = root_surd
        .mul_rational(&(-half.clone()))
        .add_rational(&(&lm_rat * &half));
    Ok(SrgSpectrum {
        r,
        s,
        f,
        g,
        discriminant: disc_uint,
    })
}

/// A named necessary condition violated by a parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityFailure {
    Range(String),
    CountingIdentity,
    MultiplicityIntegrality,
    KreinFirst,
    KreinSecond,
    AbsoluteBoundR,
    AbsoluteBoundS,
}

impl std::fmt::Display for FeasibilityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FeasibilityFailure::Range(msg) => write!(f, "parameter range ({msg})"),
            FeasibilityFailure::CountingIdentity => write!(f, "counting identity"),
            FeasibilityFailure::MultiplicityIntegrality => write!(f, "multiplicity integrality"),
            FeasibilityFailure::KreinFirst => write!(f, "Krein condition (first)"),
            FeasibilityFailure::KreinSecond => write!(f, "Krein condition (second)"),
            FeasibilityFailure::AbsoluteBoundR => write!(f, "absolute bound (r eigenspace)"),
            FeasibilityFailure::AbsoluteBoundS => write!(f, "absolute bound (s eigenspace)"),
        }
    }
}

/// Outcome of the necessary-condition battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub ok: bool,
    pub failures: Vec<FeasibilityFailure>,
}

impl Feasibility {
    fn pass() -> Self {
        Feasibility {
            ok: true,
            failures: Vec::new(),
        }
    }

    fn fail(failures: Vec<FeasibilityFailure>) -> Self {
        Feasibility { ok: false, failures }
    }

    pub fn failure_names(&self) -> Vec<String> {
        self.failures.iter().map(|f| f.to_string()).collect()
    }
}

/// Runs the staged necessary-condition battery: range, counting identity,
/// multiplicity integrality, Krein conditions, absolute bounds.
///
/// Later stages presuppose earlier ones (the spectrum of a set violating the
/// counting identity is meaningless), so the first failing stage
/// short-circuits. Imprimitive sets (mu = 0 or mu = k) stop after the
/// counting identity; the eigenvalue conditions only apply to primitive
/// graphs.
pub fn feasible(p: &SrgParams) -> Feasibility {
    let range = p.range_violations();
    if !range.is_empty() {
        return Feasibility::fail(range.into_iter().map(FeasibilityFailure::Range).collect());
    }
    if !p.counting_identity_holds() {
        return Feasibility::fail(vec![FeasibilityFailure::CountingIdentity]);
    }
    if p.k == 0 || p.mu == 0 || p.mu >= p.k {
        return Feasibility::pass();
    }
    let spec = match spectrum(p) {
        Ok(spec) => spec,
        Err(Error::NonIntegralMultiplicities { .. }) => {
            return Feasibility::fail(vec![FeasibilityFailure::MultiplicityIntegrality]);
        }
        Err(e) => {
            return Feasibility::fail(vec![FeasibilityFailure::Range(e.to_string())]);
        }
    };

    let mut failures = Vec::new();
    let one = Rational::one();
    let k_rat = rat_u64(p.k);
    let rs2 = Rational::from_integer(
        BigInt::from(2) * (BigInt::from(p.mu) - BigInt::from(p.k)),
    );
    let krein_holds = |a: &Surd, b: &Surd| -> bool {
        let lhs = a
            .add_rational(&one)
            .checked_mul(&a.add_rational(&(&k_rat + &rs2)))
            .expect("same discriminant radicand");
        let rhs = a
            .add_rational(&k_rat)
            .checked_mul(&b.add_rational(&one).square())
            .expect("same discriminant radicand");
        lhs.try_cmp(&rhs).expect("same discriminant radicand") != std::cmp::Ordering::Greater
    };
    if !krein_holds(&spec.r, &spec.s) {
        failures.push(FeasibilityFailure::KreinFirst);
    }
    if !krein_holds(&spec.s, &spec.r) {
        failures.push(FeasibilityFailure::KreinSecond);
    }

    let absolute_holds = |m: u64| -> bool {
        BigUint::from(2u8) * BigUint::from(p.v) <= BigUint::from(m) * BigUint::from(m + 3)
    };
    if !absolute_holds(spec.f) {
        failures.push(FeasibilityFailure::AbsoluteBoundR);
    }
    if !absolute_holds(spec.g) {
        failures.push(FeasibilityFailure::AbsoluteBoundS);
    }

    if failures.is_empty() {
        Feasibility::pass()
    } else {
        Feasibility::fail(failures)
    }
}

/// Parameters of the complement graph: (v, v-k-1, v-2-2k+mu, v-2k+lambda).
/// The operation is an involution, and existence transfers both ways.
pub fn complement(p: &SrgParams) -> Result<SrgParams> {
    let v = i128::from(p.v);
    let k = i128::from(p.k);
    let kc = v - k - 1;
    let lc = v - 2 - 2 * k + i128::from(p.mu);
    let mc = v - 2 * k + i128::from(p.lambda);
    if kc < 0 || lc < 0 || mc < 0 {
        return Err(Error::InvalidParameters(format!(
            "complement of {p} has negative parameters"
        )));
    }
    Ok(SrgParams::new(p.v, kc as u64, lc as u64, mc as u64))
}

/// Result of the ETF-to-SRG correspondence.
#[derive(Debug, Clone, PartialEq)]
pub enum WaldronOutcome {
    /// Both orientations of the graph on M-1 vertices associated with the
    /// frame: the one produced by the degree formula and its complement.
    Graphs {
        primary: SrgParams,
        complementary: SrgParams,
    },
    /// The degree formula does not produce integral parameters; since the
    /// correspondence is an equivalence, this certifies that no ETF with
    /// these (dimension, count) exists.
    NonIntegral { degree: Surd },
}

/// Maps ETF(n, M) with M > n+1 to srg(M-1, k, (3k-M)/2, k/2) where
/// k = M/2 - 1 + (1 - M/(2n))*sqrt(n(M-1)/(M-n)), or reports that k fails
/// integrality. The correspondence is an equivalence, so a `NonIntegral`
/// outcome refutes the frame.
pub fn waldron_srg_of_etf(e: &EtfSpec) -> Result<WaldronOutcome> {
    let n = e.dimension();
    let m = e.count();
    if m <= n + 1 {
        return Err(Error::InvalidParameters(format!(
            "the frame-graph correspondence requires count > dimension + 1, got {n}, {m}"
        )));
    }
    let base = Rational::new(BigInt::from(m), BigInt::from(2)) - Rational::one();
    let factor = Rational::one() - Rational::new(BigInt::from(m), BigInt::from(2) * BigInt::from(n));
    let radical = Rational::new(
        BigInt::from(n) * BigInt::from(m - 1),
        BigInt::from(m - n),
    );
    let degree = sqrt_rational(&radical)?
        .mul_rational(&factor)
        .add_rational(&base);

    let non_integral = Ok(WaldronOutcome::NonIntegral {
        degree: degree.clone(),
    });
    let Some(k_rat) = degree.as_rational() else {
        return non_integral;
    };
    if !is_integer(&k_rat) || k_rat.is_negative() {
        return non_integral;
    }
    let Some(k) = to_u64(&k_rat) else {
        return non_integral;
    };
    let lambda2 = 3 * i128::from(k) - i128::from(m);
    if lambda2 < 0 || lambda2 % 2 != 0 || k % 2 != 0 {
        return non_integral;
    }
    let primary = SrgParams::new(m - 1, k, (lambda2 / 2) as u64, k / 2);
    let complementary = complement(&primary)?;
    Ok(WaldronOutcome::Graphs {
        primary,
        complementary,
    })
}

/// Two-graph descent: for srg(v, k, lambda, mu) with v = 4k - 2*lambda - 2*mu,
/// the one-point-deleted parameter set
/// (v-1, k(v-2k)/(v-2k-1), (3k-v)/2 + 3k/(2(v-2k-1)), (k/2)(v-2k)/(v-2k-1)).
/// Existence of the source graph implies existence of the descended one.
pub fn fjg_descent(p: &SrgParams) -> Result<SrgParams> {
    let hypothesis_err = Err(Error::DescentHypothesis {
        v: p.v,
        k: p.k,
        lambda: p.lambda,
        mu: p.mu,
    });
    if !p.regular_two_graph() {
        return hypothesis_err;
    }
    let d = i128::from(p.v) - 2 * i128::from(p.k);
    if d == 1 {
        return hypothesis_err;
    }
    let non_integral = Err(Error::NonIntegralDescent {
        v: p.v,
        k: p.k,
        lambda: p.lambda,
        mu: p.mu,
    });

    let big = |x: i128| Rational::from_integer(BigInt::from(x));
    let ratio = big(d) / big(d - 1);
    let k2 = rat_u64(p.k) * &ratio;
    let l2 = big(3 * i128::from(p.k) - i128::from(p.v)) / big(2)
        + big(3 * i128::from(p.k)) / big(2 * (d - 1));
    let m2 = rat_u64(p.k) / big(2) * &ratio;

    let as_param = |x: &Rational| -> Option<u64> {
        if is_integer(x) && !x.is_negative() {
            to_u64(x)
        } else {
            None
        }
    };
    let (Some(k2), Some(l2), Some(m2)) = (as_param(&k2), as_param(&l2), as_param(&m2)) else {
        return non_integral;
    };
    let out = SrgParams::new(p.v - 1, k2, l2, m2);
    if !out.range_violations().is_empty() {
        return non_integral;
    }
    Ok(out)
}

/// Inverse of [`fjg_descent`]: all parameter sets on `target.v + 1` vertices
/// satisfying the regular two-graph condition whose descent equals `target`.
/// Solves d^2 - (v - 2k')d - 2k' = 0 for d = v - 2k; the list may be empty
/// and is sorted by degree.
pub fn fjg_ascend(target: &SrgParams) -> Vec<SrgParams> {
    let v = i128::from(target.v) + 1;
    let kp = i128::from(target.k);
    let b = v - 2 * kp;
    let disc = b * b + 8 * kp;
    let (root, exact) = integer_sqrt(&BigUint::from(disc as u128));
    if !exact {
        return Vec::new();
    }
    let root = i128::try_from(u128::try_from(root).expect("disc fits u128"))
        .expect("root of an i128 value fits i128");

    let mut out = Vec::new();
    for d in [(b + root) / 2, (b - root) / 2] {
        if (v - d) % 2 != 0 || d == 1 {
            continue;
        }
        let k = (v - d) / 2;
        if k < 0 || k > v - 1 {
            continue;
        }
        let mu_num = k * (d - 2);
        let mu_den = 2 * (d - 1);
        if mu_den == 0 || mu_num % mu_den != 0 {
            continue;
        }
        let mu = mu_num / mu_den;
        if v % 2 != 0 {
            continue;
        }
        let lambda = 2 * k - v / 2 - mu;
        if mu < 0 || lambda < 0 {
            continue;
        }
        let candidate = SrgParams::new(v as u64, k as u64, lambda as u64, mu as u64);
        if !candidate.range_violations().is_empty() {
            continue;
        }
        if fjg_descent(&candidate).as_ref() == Ok(target) && !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out.sort_by_key(|p| p.k);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn srg(v: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams::new(v, k, lambda, mu)
    }

    fn int_surd(n: i64) -> Surd {
        Surd::from_int(n)
    }

    #[test]
    fn spectrum_integral_cases() {
        let sp = spectrum(&srg(76, 35, 18, 14)).unwrap();
        assert_eq!((sp.r, sp.s, sp.f, sp.g), (int_surd(7), int_surd(-3), 19, 56));
        assert_eq!(sp.discriminant, 100u32.into());

        let sp = spectrum(&srg(75, 32, 10, 16)).unwrap();
        assert_eq!((sp.r, sp.s, sp.f, sp.g), (int_surd(2), int_surd(-8), 56, 18));

        let sp = spectrum(&srg(76, 30, 8, 14)).unwrap();
        assert_eq!((sp.r, sp.s, sp.f, sp.g), (int_surd(2), int_surd(-8), 57, 18));

        let sp = spectrum(&srg(10, 3, 0, 1)).unwrap();
        assert_eq!((sp.r, sp.s, sp.f, sp.g), (int_surd(1), int_surd(-2), 5, 4));
    }

    #[test]
    fn spectrum_conference_cases() {
        let sp = spectrum(&srg(5, 2, 0, 1)).unwrap();
        assert_eq!((sp.f, sp.g), (2, 2));
        assert_eq!(sp.r.to_string(), "-1/2 + 1/2*sqrt(5)");
        assert_eq!(sp.s.to_string(), "-1/2 - 1/2*sqrt(5)");

        let sp = spectrum(&srg(9, 4, 1, 2)).unwrap();
        assert_eq!((sp.r, sp.s, sp.f, sp.g), (int_surd(1), int_surd(-2), 4, 4));
    }

    #[test]
    fn spectrum_trace_identity() {
        for p in [
            srg(76, 35, 18, 14),
            srg(75, 32, 10, 16),
            srg(10, 3, 0, 1),
            srg(5, 2, 0, 1),
            srg(287, 126, 45, 63),
            srg(539, 234, 81, 117),
        ] {
            let sp = spectrum(&p).unwrap();
            let total = sp
                .r
                .mul_rational(&rat_u64(sp.f))
                .checked_add(&sp.s.mul_rational(&rat_u64(sp.g)))
                .unwrap()
                .add_rational(&rat_u64(p.k));
            assert!(total.is_zero(), "trace identity fails for {p}");
        }
    }

    #[test]
    fn spectrum_rejections() {
        assert!(matches!(
            spectrum(&srg(6, 4, 2, 4)),
            Err(Error::CompleteMultipartite { .. })
        ));
        assert!(matches!(
            spectrum(&srg(6, 1, 0, 0)),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            spectrum(&srg(8, 3, 0, 1)),
            Err(Error::NonIntegralMultiplicities { .. })
        ));
        assert!(matches!(
            spectrum(&srg(10, 12, 0, 1)),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn feasibility_passes() {
        assert!(feasible(&srg(75, 32, 10, 16)).ok);
        assert!(feasible(&srg(76, 35, 18, 14)).ok);
        assert!(feasible(&srg(5, 2, 0, 1)).ok);
        assert!(feasible(&srg(3159, 1408, 532, 704)).ok);
    }

    #[test]
    fn feasibility_counting_short_circuit() {
        let res = feasible(&srg(3159, 1408, 1064, 702));
        assert!(!res.ok);
        assert_eq!(res.failures, vec![FeasibilityFailure::CountingIdentity]);
        assert_eq!(res.failure_names(), vec!["counting identity".to_string()]);
    }

    #[test]
    fn feasibility_krein_violation() {
        let res = feasible(&srg(28, 9, 0, 4));
        assert!(!res.ok);
        assert_eq!(
            res.failures,
            vec![
                FeasibilityFailure::KreinSecond,
                FeasibilityFailure::AbsoluteBoundS
            ]
        );
        assert!(feasible(&srg(1127, 486, 165, 243)).ok);
        let res = feasible(&srg(1128, 483, 162, 240));
        assert_eq!(
            res.failures,
            vec![
                FeasibilityFailure::KreinSecond,
                FeasibilityFailure::AbsoluteBoundS
            ]
        );
    }

    #[test]
    fn feasibility_multiplicity_violation() {
        let res = feasible(&srg(16, 5, 2, 1));
        assert!(!res.ok);
        assert_eq!(
            res.failures,
            vec![FeasibilityFailure::MultiplicityIntegrality]
        );
    }

    #[test]
    fn feasibility_range_violation() {
        let res = feasible(&srg(10, 12, 0, 1));
        assert!(!res.ok);
        assert!(matches!(res.failures[0], FeasibilityFailure::Range(_)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement(&srg(76, 35, 18, 14)).unwrap(),
            srg(76, 40, 18, 24)
        );
        assert_eq!(complement(&srg(76, 30, 8, 14)).unwrap(), srg(76, 45, 28, 24));
        assert_eq!(
            complement(&srg(75, 32, 10, 16)).unwrap(),
            srg(75, 42, 25, 21)
        );
        assert_eq!(complement(&srg(5, 2, 0, 1)).unwrap(), srg(5, 2, 0, 1));
    }

    #[test]
    fn complement_involution_sweep() {
        for p in [
            srg(76, 35, 18, 14),
            srg(287, 126, 45, 63),
            srg(1127, 486, 165, 243),
            srg(10, 3, 0, 1),
        ] {
            assert_eq!(complement(&complement(&p).unwrap()).unwrap(), p);
        }
    }

    fn graphs_of(n: u64, m: u64) -> (SrgParams, SrgParams) {
        let e = EtfSpec::new(n, m).unwrap();
        match waldron_srg_of_etf(&e).unwrap() {
            WaldronOutcome::Graphs {
                primary,
                complementary,
            } => (primary, complementary),
            WaldronOutcome::NonIntegral { degree } => {
                panic!("expected graphs for ({n}, {m}), got non-integral degree {degree}")
            }
        }
    }

    #[test]
    fn waldron_examples() {
        assert_eq!(
            graphs_of(19, 76),
            (srg(75, 32, 10, 16), srg(75, 42, 25, 21))
        );
        assert_eq!(graphs_of(20, 96).0, srg(95, 40, 12, 20));
        assert_eq!(graphs_of(42, 288).0, srg(287, 126, 45, 63));
        assert_eq!(
            graphs_of(47, 1128),
            (srg(1127, 486, 165, 243), srg(1127, 640, 396, 320))
        );
        assert_eq!(graphs_of(23, 276).0, srg(275, 112, 30, 56));
        assert_eq!(graphs_of(7, 28).0, srg(27, 10, 1, 5));
        assert_eq!(graphs_of(57, 76).0, srg(75, 42, 25, 21));
        assert_eq!(graphs_of(5, 10).0, srg(9, 4, 1, 2));
        assert_eq!(graphs_of(3, 6), (srg(5, 2, 0, 1), srg(5, 2, 0, 1)));
    }

    #[test]
    fn waldron_non_integral() {
        let e = EtfSpec::new(4, 8).unwrap();
        let WaldronOutcome::NonIntegral { degree } = waldron_srg_of_etf(&e).unwrap() else {
            panic!("expected non-integral outcome for (4, 8)");
        };
        assert_eq!(degree.as_rational(), Some(rat(3, 1)));

        let e = EtfSpec::new(5, 12).unwrap();
        let WaldronOutcome::NonIntegral { degree } = waldron_srg_of_etf(&e).unwrap() else {
            panic!("expected non-integral outcome for (5, 12)");
        };
        assert!(!degree.is_rational());

        let e = EtfSpec::new(19, 20).unwrap();
        assert!(waldron_srg_of_etf(&e).is_err());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(fjg_descent(&srg(76, 30, 8, 14)).unwrap(), srg(75, 32, 10, 16));
        assert_eq!(
            fjg_descent(&srg(76, 40, 18, 24)).unwrap(),
            srg(75, 32, 10, 16)
        );
        assert_eq!(
            fjg_descent(&srg(76, 35, 18, 14)).unwrap(),
            srg(75, 42, 25, 21)
        );
        assert_eq!(fjg_descent(&srg(10, 3, 0, 1)).unwrap(), srg(9, 4, 1, 2));
        assert_eq!(
            fjg_descent(&srg(540, 266, 148, 114)).unwrap(),
            srg(539, 304, 186, 152)
        );
    }

    #[test]
    fn descent_rejections() {
        assert!(matches!(
            fjg_descent(&srg(75, 32, 10, 16)),
            Err(Error::DescentHypothesis { .. })
        ));
        assert!(matches!(
            fjg_descent(&srg(20, 8, 2, 4)),
            Err(Error::NonIntegralDescent { .. })
        ));
    }

    #[test]
    fn ascend_examples() {
        assert_eq!(
            fjg_ascend(&srg(75, 32, 10, 16)),
            vec![srg(76, 30, 8, 14), srg(76, 40, 18, 24)]
        );
        assert_eq!(
            fjg_ascend(&srg(1127, 640, 396, 320)),
            vec![srg(1128, 560, 316, 240), srg(1128, 644, 400, 324)]
        );
        assert_eq!(
            fjg_ascend(&srg(539, 304, 186, 152)),
            vec![srg(540, 266, 148, 114), srg(540, 308, 190, 156)]
        );
        assert_eq!(
            fjg_ascend(&srg(539, 234, 81, 117)),
            vec![srg(540, 231, 78, 114), srg(540, 273, 120, 156)]
        );
        assert_eq!(
            fjg_ascend(&srg(9, 4, 1, 2)),
            vec![srg(10, 3, 0, 1), srg(10, 6, 3, 4)]
        );
        assert!(fjg_ascend(&srg(10, 3, 0, 1)).is_empty());
    }

    #[test]
    fn ascend_descend_round_trip() {
        for target in [
            srg(75, 32, 10, 16),
            srg(75, 42, 25, 21),
            srg(9, 4, 1, 2),
            srg(287, 160, 89, 96),
            srg(3159, 1750, 1045, 875),
        ] {
            for source in fjg_ascend(&target) {
                assert_eq!(fjg_descent(&source).unwrap(), target);
            }
        }
    }
}
