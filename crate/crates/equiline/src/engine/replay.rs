//! Certificate replay: every recorded step is re-derived from its inputs and
//! the reproduced outputs must match the recorded ones exactly.

use num::BigUint;
use serde_json::Value;

use crate::bounds::{
    gerzon_bound, is_neumann_angle, lemmens_seidel_third, lrs_angles, relative_bound, LrsThreshold,
};
use crate::designs::{
    project_srg, shifted_lift, tight4_params, tight5_params, tight5_srg_family, Eigenspace,
    TwoDistanceSpec,
};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, parse_scalar, rat, Rational, Surd};
use crate::frames::{complementary_etf, frame_potential_equiangular, EtfSpec};
use crate::srg::{complement, feasible, fjg_ascend, fjg_descent, waldron_srg_of_etf, SrgParams, WaldronOutcome};

use super::{Rule, Step, Verdict};
use crate::srg::database::SrgDatabase;

fn mismatch(rule: Rule, what: impl Into<String>) -> Error {
    Error::Internal(format!("replay of {rule:?} failed: {}", what.into()))
}

fn field<'a>(rule: Rule, value: &'a Value, key: &str) -> Result<&'a Value> {
    value
        .get(key)
        .ok_or_else(|| mismatch(rule, format!("missing field '{key}'")))
}

fn u64_field(rule: Rule, value: &Value, key: &str) -> Result<u64> {
    field(rule, value, key)?
        .as_u64()
        .ok_or_else(|| mismatch(rule, format!("field '{key}' is not an integer")))
}

fn str_field<'a>(rule: Rule, value: &'a Value, key: &str) -> Result<&'a str> {
    field(rule, value, key)?
        .as_str()
        .ok_or_else(|| mismatch(rule, format!("field '{key}' is not a string")))
}

fn bool_field(rule: Rule, value: &Value, key: &str) -> Result<bool> {
    field(rule, value, key)?
        .as_bool()
        .ok_or_else(|| mismatch(rule, format!("field '{key}' is not a boolean")))
}

fn surd_field(rule: Rule, value: &Value, key: &str) -> Result<Surd> {
    parse_scalar(str_field(rule, value, key)?)
}

fn rational_field(rule: Rule, value: &Value, key: &str) -> Result<Rational> {
    parse_rational(str_field(rule, value, key)?)
}

fn params_field(rule: Rule, value: &Value, key: &str) -> Result<SrgParams> {
    serde_json::from_value(field(rule, value, key)?.clone())
        .map_err(|e| mismatch(rule, format!("field '{key}' is not a parameter set: {e}")))
}

fn threshold_field(rule: Rule, value: &Value, key: &str) -> Result<LrsThreshold> {
    serde_json::from_value(field(rule, value, key)?.clone())
        .map_err(|e| mismatch(rule, format!("field '{key}' is not a threshold: {e}")))
}

fn expect_str(rule: Rule, outputs: &Value, key: &str, want: &str) -> Result<()> {
    let got = str_field(rule, outputs, key)?;
    if got == want {
        Ok(())
    } else {
        Err(mismatch(rule, format!("'{key}': recorded {got}, derived {want}")))
    }
}

fn expect_bool(rule: Rule, outputs: &Value, key: &str, want: bool) -> Result<()> {
    let got = bool_field(rule, outputs, key)?;
    if got == want {
        Ok(())
    } else {
        Err(mismatch(rule, format!("'{key}': recorded {got}, derived {want}")))
    }
}

fn expect_u64(rule: Rule, outputs: &Value, key: &str, want: u64) -> Result<()> {
    let got = u64_field(rule, outputs, key)?;
    if got == want {
        Ok(())
    } else {
        Err(mismatch(rule, format!("'{key}': recorded {got}, derived {want}")))
    }
}

fn expect_params(rule: Rule, outputs: &Value, key: &str, want: &SrgParams) -> Result<()> {
    let got = params_field(rule, outputs, key)?;
    if got == *want {
        Ok(())
    } else {
        Err(mismatch(rule, format!("'{key}': recorded {got}, derived {want}")))
    }
}

fn expect_string_list(rule: Rule, outputs: &Value, key: &str, want: &[String]) -> Result<()> {
    let got: Vec<String> = serde_json::from_value(field(rule, outputs, key)?.clone())
        .map_err(|e| mismatch(rule, format!("field '{key}' is not a string list: {e}")))?;
    if got == want {
        Ok(())
    } else {
        Err(mismatch(
            rule,
            format!("'{key}': recorded {got:?}, derived {want:?}"),
        ))
    }
}

fn expect_params_list(rule: Rule, outputs: &Value, key: &str, want: &[SrgParams]) -> Result<()> {
    let got: Vec<SrgParams> = serde_json::from_value(field(rule, outputs, key)?.clone())
        .map_err(|e| mismatch(rule, format!("field '{key}' is not a parameter list: {e}")))?;
    if got == want {
        Ok(())
    } else {
        Err(mismatch(
            rule,
            format!("'{key}': recorded {got:?}, derived {want:?}"),
        ))
    }
}

/// Re-derive one step against the given database and compare outputs.
pub fn replay_step(db: &SrgDatabase, step: &Step) -> Result<()> {
    let rule = step.rule;
    let inputs = &step.inputs;
    let outputs = &step.outputs;
    match rule {
        Rule::GerzonBound => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let (bound, _) = gerzon_bound(n)?;
            expect_str(rule, outputs, "bound", &bound.to_string())?;
            expect_bool(rule, outputs, "exceeded", BigUint::from(m) > bound)?;
        }
        Rule::NeumannAngles => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let angle = surd_field(rule, inputs, "angle")?;
            if u128::from(m) <= 2 * u128::from(n) {
                return Err(mismatch(rule, "count does not exceed 2n"));
            }
            let neumann = angle.as_rational().is_some_and(|q| is_neumann_angle(&q));
            expect_bool(rule, outputs, "neumann_form", neumann)?;
        }
        Rule::LrsAngles => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let threshold = threshold_field(rule, inputs, "threshold")?;
            let set = lrs_angles(n, m, threshold);
            if outputs.get("candidates").is_some() {
                let derived: Vec<String> =
                    set.candidates.iter().map(ToString::to_string).collect();
                expect_string_list(rule, outputs, "candidates", &derived)?;
            } else {
                let angle = rational_field(rule, inputs, "angle")?;
                expect_bool(rule, outputs, "admissible", set.contains(&angle))?;
            }
        }
        Rule::LemmensSeidelThird => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let angle = surd_field(rule, inputs, "angle")?;
            if angle.cmp_rational(&rat(1, 3)) != std::cmp::Ordering::Equal {
                return Err(mismatch(rule, "angle is not 1/3"));
            }
            let bound = lemmens_seidel_third(n)
                .ok_or_else(|| mismatch(rule, "dimension below the rule's range"))?;
            expect_u64(rule, outputs, "max_count", bound)?;
            if m <= bound {
                return Err(mismatch(rule, "count does not exceed the cap"));
            }
        }
        Rule::RelativeBound => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let angle = surd_field(rule, inputs, "angle")?;
            let fp = frame_potential_equiangular(n, m, &angle)?;
            if !fp.violated {
                return Err(mismatch(rule, "frame potential is not below the minimum"));
            }
            expect_str(rule, outputs, "frame_potential", &fp.value.to_string())?;
            expect_str(rule, outputs, "minimum", &fp.minimum.to_string())?;
            expect_bool(rule, outputs, "violated", true)?;
            if outputs.get("relative_bound").is_some() {
                let q = angle
                    .as_rational()
                    .ok_or_else(|| mismatch(rule, "bound recorded for an irrational angle"))?;
                let bound = relative_bound(n, &q)
                    .ok_or_else(|| mismatch(rule, "bound recorded but nc^2 >= 1"))?;
                expect_str(rule, outputs, "relative_bound", &bound.to_string())?;
            }
        }
        Rule::WelchTightness => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let angle = surd_field(rule, inputs, "angle")?;
            let fp = frame_potential_equiangular(n, m, &angle)?;
            expect_str(rule, outputs, "frame_potential", &fp.value.to_string())?;
            expect_str(rule, outputs, "minimum", &fp.minimum.to_string())?;
            expect_bool(rule, outputs, "tight", fp.tight)?;
            expect_bool(rule, outputs, "violated", fp.violated)?;
        }
        Rule::WaldronCorrespondence => {
            let (primary, complementary) = waldron_pair(rule, inputs)?;
            expect_params(rule, outputs, "primary", &primary)?;
            expect_params(rule, outputs, "complementary", &complementary)?;
        }
        Rule::WaldronIntegrality => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let angle = surd_field(rule, inputs, "angle")?;
            let etf = EtfSpec::with_claimed_angle(n, m, &angle)?;
            match waldron_srg_of_etf(&etf)? {
                WaldronOutcome::NonIntegral { degree } => {
                    expect_str(rule, outputs, "degree", &degree.to_string())?;
                    expect_bool(rule, outputs, "integral", false)?;
                }
                WaldronOutcome::Graphs { .. } => {
                    return Err(mismatch(rule, "parameters are integral"));
                }
            }
        }
        Rule::SrgDatabase => {
            let params = params_field(rule, inputs, "params")?;
            let hit = db.lookup(&params);
            if hit.via_complement || hit.record.source.is_empty() {
                return Err(mismatch(rule, format!("no direct record for {params}")));
            }
            expect_str(rule, outputs, "status", &hit.record.status.to_string())?;
            expect_str(rule, outputs, "source", &hit.record.source)?;
        }
        Rule::SrgFeasibility => {
            let params = params_field(rule, inputs, "params")?;
            let feas = feasible(&params);
            expect_bool(rule, outputs, "feasible", feas.ok)?;
            expect_string_list(rule, outputs, "failures", &feas.failure_names())?;
        }
        Rule::Complement => {
            let params = params_field(rule, inputs, "params")?;
            expect_params(rule, outputs, "params", &complement(&params)?)?;
        }
        Rule::FjgDescent => {
            let params = params_field(rule, inputs, "params")?;
            expect_params(rule, outputs, "params", &fjg_descent(&params)?)?;
        }
        Rule::FjgAscend => {
            let params = params_field(rule, inputs, "params")?;
            expect_params_list(rule, outputs, "ascended", &fjg_ascend(&params))?;
        }
        Rule::Projection => {
            let params = params_field(rule, inputs, "params")?;
            let which = eigenspace_field(rule, inputs, "eigenspace")?;
            let spec = project_srg(&params, which)?;
            expect_u64(rule, outputs, "dimension", spec.dimension)?;
            expect_u64(rule, outputs, "size", spec.size)?;
            expect_str(rule, outputs, "inner_a", &spec.inner_a.to_string())?;
            expect_str(rule, outputs, "inner_b", &spec.inner_b.to_string())?;
        }
        Rule::ShiftedLift => {
            let spec = TwoDistanceSpec {
                dimension: u64_field(rule, inputs, "dimension")?,
                size: u64_field(rule, inputs, "size")?,
                inner_a: surd_field(rule, inputs, "inner_a")?,
                inner_b: surd_field(rule, inputs, "inner_b")?,
                design_strength: 2,
                tight_frame: false,
            };
            let lift = shifted_lift(&spec)?;
            expect_u64(rule, outputs, "dimension", lift.lifted.dimension)?;
            expect_u64(rule, outputs, "size", lift.lifted.size)?;
            expect_str(rule, outputs, "angle", &lift.lifted.inner_a.to_string())?;
            expect_str(rule, outputs, "scale_sq", &lift.scale_sq.to_string())?;
            expect_str(rule, outputs, "height_sq", &lift.height_sq.to_string())?;
            expect_bool(rule, outputs, "tight", lift.lifted.tight_frame)?;
        }
        Rule::ComplementaryEtf => {
            let n = u64_field(rule, inputs, "dimension")?;
            let m = u64_field(rule, inputs, "count")?;
            let comp = complementary_etf(&EtfSpec::new(n, m)?)?;
            expect_u64(rule, outputs, "dimension", comp.dimension())?;
            expect_u64(rule, outputs, "count", comp.count())?;
            expect_str(rule, outputs, "angle", &comp.angle().to_string())?;
        }
        Rule::Tight5Family => {
            let m = u64_field(rule, inputs, "m")?;
            let params = tight5_params(m)?;
            expect_u64(rule, outputs, "dimension", params.dimension)?;
            expect_u64(rule, outputs, "line_count", params.line_count)?;
            expect_str(rule, outputs, "angle", &params.angle.to_string())?;
            expect_params_list(rule, outputs, "family", &tight5_srg_family(m)?)?;
        }
        Rule::Tight4Params => {
            let m = u64_field(rule, inputs, "m")?;
            let params = tight4_params(m)?;
            expect_u64(rule, outputs, "dimension", params.dimension)?;
            expect_u64(rule, outputs, "size", params.size)?;
            expect_str(rule, outputs, "inner_a", &params.inner_a.to_string())?;
            expect_str(rule, outputs, "inner_b", &params.inner_b.to_string())?;
        }
    }
    Ok(())
}

fn waldron_pair(rule: Rule, inputs: &Value) -> Result<(SrgParams, SrgParams)> {
    let n = u64_field(rule, inputs, "dimension")?;
    let m = u64_field(rule, inputs, "count")?;
    let angle = surd_field(rule, inputs, "angle")?;
    let etf = EtfSpec::with_claimed_angle(n, m, &angle)?;
    match waldron_srg_of_etf(&etf)? {
        WaldronOutcome::Graphs {
            primary,
            complementary,
        } => Ok((primary, complementary)),
        WaldronOutcome::NonIntegral { .. } => {
            Err(mismatch(rule, "parameters are not integral"))
        }
    }
}

fn eigenspace_field(rule: Rule, inputs: &Value, key: &str) -> Result<Eigenspace> {
    match str_field(rule, inputs, key)? {
        "r" => Ok(Eigenspace::R),
        "s" => Ok(Eigenspace::S),
        other => Err(mismatch(rule, format!("unknown eigenspace '{other}'"))),
    }
}

/// Replay every step of a verdict's certificate in order.
pub fn replay_verdict(db: &SrgDatabase, verdict: &Verdict) -> Result<()> {
    replay_steps(db, &verdict.certificate)
}

/// Replay a bare step list, reporting the index of the first failure.
pub fn replay_steps(db: &SrgDatabase, steps: &[Step]) -> Result<()> {
    for (idx, step) in steps.iter().enumerate() {
        replay_step(db, step).map_err(|e| {
            Error::Internal(format!("certificate step {} failed replay: {e}", idx + 1))
        })?;
    }
    Ok(())
}
