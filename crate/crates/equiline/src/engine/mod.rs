//! Deduction engine: chains the bound, frame, and graph rules into verdicts
//! carrying replayable, citation-annotated certificates.

pub mod replay;
pub mod reports;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use num::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{
    gerzon_bound, is_neumann_angle, lemmens_seidel_third, lrs_angles, relative_bound, LrsThreshold,
};
use crate::designs::{project_srg, shifted_lift, Eigenspace};
use crate::error::{Error, Result};
use crate::exact::{rat, Surd};
use crate::frames::{frame_potential_equiangular, EtfSpec, LineSystemQuery};
use crate::srg::database::{DbHit, SrgDatabase, SrgStatus};
use crate::srg::{feasible, fjg_descent, waldron_srg_of_etf, SrgParams, WaldronOutcome};

/// Deduction rules a certificate step can invoke. Each carries a default
/// literature citation; database steps replace it with the record's source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    NeumannAngles,
    LrsAngles,
    LemmensSeidelThird,
    RelativeBound,
    GerzonBound,
    WelchTightness,
    WaldronCorrespondence,
    WaldronIntegrality,
    SrgDatabase,
    SrgFeasibility,
    Complement,
    FjgDescent,
    FjgAscend,
    Projection,
    ShiftedLift,
    ComplementaryEtf,
    Tight5Family,
    Tight4Params,
}

impl Rule {
    pub fn citation(&self) -> &'static str {
        match self {
            Rule::NeumannAngles => {
                "Neumann's theorem (Lemmens-Seidel 1973): more than 2n lines force 1/c to be an odd integer"
            }
            Rule::LrsAngles => {
                "Larman-Rogers-Seidel 1977: past the count threshold, c = 1/(2k-1) with (2k-1)^2 <= 2n"
            }
            Rule::LemmensSeidelThird => {
                "Lemmens-Seidel 1973: at angle 1/3 at most 2n-2 lines fit in R^n for n >= 15"
            }
            Rule::RelativeBound => {
                "relative bound (van Lint-Seidel 1966): M <= n(1-c^2)/(1-nc^2) whenever nc^2 < 1"
            }
            Rule::GerzonBound => "Gerzon's bound: at most n(n+1)/2 equiangular lines in R^n",
            Rule::WelchTightness => {
                "Welch 1974 bound; Benedetto-Fickus 2003: frame potential >= M^2/n, equality iff tight"
            }
            Rule::WaldronCorrespondence => {
                "Waldron 2009: ETF(n,M) with M > n+1 exists iff srg(M-1,k,(3k-M)/2,k/2) exists"
            }
            Rule::WaldronIntegrality => {
                "Waldron 2009: non-integral associated graph parameters refute the ETF"
            }
            Rule::SrgDatabase => "strongly regular graph status database",
            Rule::SrgFeasibility => {
                "standard srg feasibility: parameter ranges, counting identity, multiplicity integrality, Krein conditions, absolute bound"
            }
            Rule::Complement => {
                "the complement of srg(v,k,l,m) is srg(v,v-k-1,v-2k+m-2,v-2k+l)"
            }
            Rule::FjgDescent => {
                "regular two-graph descent [fjg15, Cor. 4.5]: v = 4k-2l-2m determines the descended parameters"
            }
            Rule::FjgAscend => "inverse of the regular two-graph descent [fjg15, Cor. 4.5]",
            Rule::Projection => {
                "projecting an srg vertex set onto a nontrivial eigenspace yields a two-distance spherical 2-design [del77b]"
            }
            Rule::ShiftedLift => {
                "a two-distance 2-design shifts and lifts to equiangular lines one dimension up [bgoy15]"
            }
            Rule::ComplementaryEtf => "an ETF(n,M) exists iff an ETF(M-n,M) exists [cas13]",
            Rule::Tight5Family => {
                "tight spherical 5-designs: dimension (2m+1)^2-2, n(n+1)/2 lines at angle 1/(2m+1) [del77b]"
            }
            Rule::Tight4Params => {
                "tight spherical 4-designs: dimension (2m+1)^2-3 with n(n+3)/2 points [del77b]"
            }
        }
    }
}

/// One certificate entry: the rule applied, the exact inputs it consumed,
/// the exact outputs it produced, and the citation backing it. Steps replay:
/// re-running the rule on `inputs` must reproduce `outputs` verbatim.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Step {
    pub rule: Rule,
    pub inputs: Value,
    pub outputs: Value,
    pub citation: String,
}

impl Step {
    pub(crate) fn new(rule: Rule, inputs: Value, outputs: Value) -> Self {
        Step {
            rule,
            inputs,
            outputs,
            citation: rule.citation().to_string(),
        }
    }

    pub(crate) fn with_citation(
        rule: Rule,
        inputs: Value,
        outputs: Value,
        citation: String,
    ) -> Self {
        Step {
            rule,
            inputs,
            outputs,
            citation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    NonexistenceCertified,
    ExistenceKnown,
    Open,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Conclusion::NonexistenceCertified => "NonexistenceCertified",
            Conclusion::ExistenceKnown => "ExistenceKnown",
            Conclusion::Open => "Open",
        };
        f.write_str(name)
    }
}

/// What the verdict is about, echoed back verbatim in reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Query {
    Lines {
        dimension: u64,
        count: u64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        angle: Option<Surd>,
    },
    Srg {
        params: SrgParams,
    },
    Etf {
        dimension: u64,
        count: u64,
    },
}

impl Query {
    /// One-line human-readable form used in renderings and error messages.
    pub fn describe(&self) -> String {
        match self {
            Query::Lines {
                dimension,
                count,
                angle,
            } => match angle {
                Some(c) => format!("lines(dimension {dimension}, count {count}, angle {c})"),
                None => format!("lines(dimension {dimension}, count {count})"),
            },
            Query::Srg { params } => params.to_string(),
            Query::Etf { dimension, count } => format!("etf(dimension {dimension}, count {count})"),
        }
    }
}

/// A conclusion together with the step-by-step certificate that produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub query: Query,
    pub conclusion: Conclusion,
    #[serde(rename = "steps")]
    pub certificate: Vec<Step>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct EngineOptions {
    pub lrs_threshold: LrsThreshold,
    /// When set, a line-system verdict may be replaced by a certificate for
    /// the smallest refuted count at or below the queried one, recorded in a
    /// subsumption note.
    pub monotone: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            lrs_threshold: LrsThreshold::Strict2n3,
            monotone: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BranchOutcome {
    Refuted,
    Confirmed,
    Open,
}

const MAX_DERIVATION_DEPTH: u32 = 2;
const MONOTONE_SCAN_CAP: u64 = 10_000;

pub(crate) fn params_value(p: &SrgParams) -> Value {
    serde_json::to_value(p).expect("srg parameters serialize")
}

fn threshold_value(t: LrsThreshold) -> Value {
    serde_json::to_value(t).expect("threshold serializes")
}

/// Decide whether `count` equiangular lines can exist in `R^dimension`,
/// optionally at a prescribed common angle.
pub fn lines_verdict(
    db: &SrgDatabase,
    query: &LineSystemQuery,
    opts: &EngineOptions,
) -> Result<Verdict> {
    if query.dimension < 2 || query.count == 0 {
        return Err(Error::InvalidParameters(format!(
            "line-system queries need dimension >= 2 and count >= 1, got dimension {} and count {}",
            query.dimension, query.count
        )));
    }
    let mut steps = Vec::new();
    let mut notes = Vec::new();
    let mut conclusion = lines_core(
        db,
        query.dimension,
        query.count,
        query.angle.as_ref(),
        opts,
        &mut steps,
        &mut notes,
    )?;

    if opts.monotone {
        if let Some((base, base_steps, base_notes)) = monotone_base(db, query, opts)? {
            steps = base_steps;
            notes = base_notes;
            notes.push(format!(
                "monotone subsumption: {} lines are certified nonexistent in dimension {}, and any {} lines would contain {} of them",
                base, query.dimension, query.count, base
            ));
            conclusion = Conclusion::NonexistenceCertified;
        }
    }

    Ok(Verdict {
        query: Query::Lines {
            dimension: query.dimension,
            count: query.count,
            angle: query.angle.clone(),
        },
        conclusion,
        certificate: steps,
        notes,
    })
}

/// Smallest refuted count together with the derivation that refutes it.
type RefutedBase = (u64, Vec<Step>, Vec<String>);

/// Scan upward from `dimension + 1` for the smallest refuted count strictly
/// below the queried one. The scan stops at the first refutation; a cap keeps
/// pathological inputs from looping, and capped scans simply return nothing.
fn monotone_base(
    db: &SrgDatabase,
    query: &LineSystemQuery,
    opts: &EngineOptions,
) -> Result<Option<RefutedBase>> {
    let start = query.dimension + 1;
    let stop = query.count.min(start.saturating_add(MONOTONE_SCAN_CAP));
    for base in start..stop {
        let mut steps = Vec::new();
        let mut notes = Vec::new();
        let sub = lines_core(
            db,
            query.dimension,
            base,
            query.angle.as_ref(),
            opts,
            &mut steps,
            &mut notes,
        )?;
        if sub == Conclusion::NonexistenceCertified {
            return Ok(Some((base, steps, notes)));
        }
    }
    Ok(None)
}

fn lines_core(
    db: &SrgDatabase,
    n: u64,
    m: u64,
    angle: Option<&Surd>,
    opts: &EngineOptions,
    steps: &mut Vec<Step>,
    notes: &mut Vec<String>,
) -> Result<Conclusion> {
    let (gerzon, _) = gerzon_bound(n)?;
    if BigUint::from(m) > gerzon {
        steps.push(Step::new(
            Rule::GerzonBound,
            json!({"dimension": n, "count": m}),
            json!({"bound": gerzon.to_string(), "exceeded": true}),
        ));
        return Ok(Conclusion::NonexistenceCertified);
    }

    match angle {
        Some(c) => {
            if m <= n {
                notes.push(format!(
                    "count {m} does not exceed dimension {n}; no applicable rule"
                ));
                return Ok(Conclusion::Open);
            }
            if u128::from(m) > 2 * u128::from(n) {
                let rational_angle = c.as_rational();
                match rational_angle {
                    Some(q) if is_neumann_angle(&q) => {
                        if opts.lrs_threshold.applies(n, m) {
                            let set = lrs_angles(n, m, opts.lrs_threshold);
                            if !set.contains(&q) {
                                steps.push(Step::new(
                                    Rule::LrsAngles,
                                    json!({
                                        "dimension": n,
                                        "count": m,
                                        "angle": q.to_string(),
                                        "threshold": threshold_value(opts.lrs_threshold),
                                    }),
                                    json!({"admissible": false}),
                                ));
                                return Ok(Conclusion::NonexistenceCertified);
                            }
                        }
                    }
                    _ => {
                        steps.push(Step::new(
                            Rule::NeumannAngles,
                            json!({"dimension": n, "count": m, "angle": c.to_string()}),
                            json!({"neumann_form": false}),
                        ));
                        return Ok(Conclusion::NonexistenceCertified);
                    }
                }
            }
            let outcome = branch_verdict(db, n, m, c, steps, notes)?;
            Ok(match outcome {
                BranchOutcome::Refuted => Conclusion::NonexistenceCertified,
                BranchOutcome::Confirmed => Conclusion::ExistenceKnown,
                BranchOutcome::Open => Conclusion::Open,
            })
        }
        None => {
            if !opts.lrs_threshold.applies(n, m) {
                notes.push(format!(
                    "count {m} does not exceed the angle-restriction threshold in dimension {n}; candidate angles are unconstrained"
                ));
                return Ok(Conclusion::Open);
            }
            let set = lrs_angles(n, m, opts.lrs_threshold);
            steps.push(Step::new(
                Rule::LrsAngles,
                json!({
                    "dimension": n,
                    "count": m,
                    "threshold": threshold_value(opts.lrs_threshold),
                }),
                json!({
                    "candidates": set
                        .candidates
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>(),
                }),
            ));
            let mut refuted = 0usize;
            let mut confirmed = false;
            for q in &set.candidates {
                let c = Surd::from_rational(q.clone());
                match branch_verdict(db, n, m, &c, steps, notes)? {
                    BranchOutcome::Refuted => refuted += 1,
                    BranchOutcome::Confirmed => confirmed = true,
                    BranchOutcome::Open => {}
                }
            }
            Ok(if confirmed {
                Conclusion::ExistenceKnown
            } else if refuted == set.candidates.len() {
                Conclusion::NonexistenceCertified
            } else {
                Conclusion::Open
            })
        }
    }
}

/// Evaluate a single fixed-angle branch: the 1/3 cap, then the frame
/// potential, then the graph correspondence and the database.
fn branch_verdict(
    db: &SrgDatabase,
    n: u64,
    m: u64,
    c: &Surd,
    steps: &mut Vec<Step>,
    notes: &mut Vec<String>,
) -> Result<BranchOutcome> {
    let angle_str = c.to_string();
    if c.cmp_rational(&rat(1, 3)) == Ordering::Equal
        && n >= 15
        && u128::from(m) > 2 * u128::from(n) - 2
    {
        let bound = lemmens_seidel_third(n).expect("n >= 15");
        steps.push(Step::new(
            Rule::LemmensSeidelThird,
            json!({"dimension": n, "count": m, "angle": angle_str}),
            json!({"max_count": bound}),
        ));
        return Ok(BranchOutcome::Refuted);
    }

    let fp = frame_potential_equiangular(n, m, c)?;
    let fp_inputs = json!({"dimension": n, "count": m, "angle": angle_str});
    if fp.violated {
        let mut outputs = json!({
            "frame_potential": fp.value.to_string(),
            "minimum": fp.minimum.to_string(),
            "violated": true,
        });
        if let Some(bound) = c.as_rational().and_then(|q| relative_bound(n, &q)) {
            outputs["relative_bound"] = Value::String(bound.to_string());
        }
        steps.push(Step::new(Rule::RelativeBound, fp_inputs, outputs));
        return Ok(BranchOutcome::Refuted);
    }
    steps.push(Step::new(
        Rule::WelchTightness,
        fp_inputs.clone(),
        json!({
            "frame_potential": fp.value.to_string(),
            "minimum": fp.minimum.to_string(),
            "tight": fp.tight,
            "violated": false,
        }),
    ));
    if !fp.tight {
        notes.push(format!(
            "angle {angle_str}: frame potential stays strictly above the minimum, so the branch remains open"
        ));
        return Ok(BranchOutcome::Open);
    }

    let etf = EtfSpec::with_claimed_angle(n, m, c)?;
    let outcome = match waldron_srg_of_etf(&etf) {
        Ok(outcome) => outcome,
        Err(Error::InvalidParameters(_)) => {
            notes.push(format!(
                "angle {angle_str}: count {m} is a degenerate simplex configuration outside the graph correspondence; the branch remains open"
            ));
            return Ok(BranchOutcome::Open);
        }
        Err(e) => return Err(e),
    };
    match outcome {
        WaldronOutcome::NonIntegral { degree } => {
            steps.push(Step::new(
                Rule::WaldronIntegrality,
                fp_inputs,
                json!({"degree": degree.to_string(), "integral": false}),
            ));
            Ok(BranchOutcome::Refuted)
        }
        WaldronOutcome::Graphs {
            primary,
            complementary,
        } => {
            steps.push(Step::new(
                Rule::WaldronCorrespondence,
                fp_inputs,
                json!({
                    "primary": params_value(&primary),
                    "complementary": params_value(&complementary),
                }),
            ));
            for p in [&primary, &complementary] {
                let feas = feasible(p);
                if !feas.ok {
                    steps.push(Step::new(
                        Rule::SrgFeasibility,
                        json!({"params": params_value(p)}),
                        json!({"feasible": false, "failures": feas.failure_names()}),
                    ));
                    return Ok(BranchOutcome::Refuted);
                }
            }
            let hit = db.lookup(&primary);
            match hit.record.status {
                SrgStatus::NotExists => {
                    push_db_steps(steps, &primary, &hit);
                    Ok(BranchOutcome::Refuted)
                }
                SrgStatus::Exists => {
                    push_db_steps(steps, &primary, &hit);
                    Ok(BranchOutcome::Confirmed)
                }
                SrgStatus::Open => {
                    notes.push(format!(
                        "angle {angle_str}: no database record decides {primary}; the branch remains open"
                    ));
                    Ok(BranchOutcome::Open)
                }
            }
        }
    }
}

fn push_db_steps(steps: &mut Vec<Step>, queried: &SrgParams, hit: &DbHit) {
    if hit.via_complement {
        steps.push(Step::new(
            Rule::Complement,
            json!({"params": params_value(queried)}),
            json!({"params": params_value(&hit.record.params)}),
        ));
    }
    steps.push(Step::with_citation(
        Rule::SrgDatabase,
        json!({"params": params_value(&hit.record.params)}),
        json!({
            "status": hit.record.status.to_string(),
            "source": hit.record.source,
        }),
        format!("database record [{}]", hit.record.source),
    ));
}

/// Decide whether a strongly regular graph with the given parameters can
/// exist, chaining feasibility, the database, two-graph descent, and
/// eigenspace projections back into line-system verdicts.
pub fn srg_verdict(db: &SrgDatabase, params: &SrgParams, opts: &EngineOptions) -> Result<Verdict> {
    let mut steps = Vec::new();
    let mut notes = Vec::new();
    let mut seen = BTreeSet::new();
    let conclusion = srg_core(db, params, 0, &mut seen, opts, &mut steps, &mut notes)?;
    if *params == SrgParams::new(76, 30, 8, 14)
        && conclusion == Conclusion::NonexistenceCertified
    {
        notes.push(
            "nonexistence of srg(76,30,8,14) was also proved directly by Bondarenko, Prymak and Radchenko".to_string(),
        );
    }
    Ok(Verdict {
        query: Query::Srg { params: *params },
        conclusion,
        certificate: steps,
        notes,
    })
}

fn srg_core(
    db: &SrgDatabase,
    p: &SrgParams,
    depth: u32,
    seen: &mut BTreeSet<SrgParams>,
    opts: &EngineOptions,
    steps: &mut Vec<Step>,
    notes: &mut Vec<String>,
) -> Result<Conclusion> {
    seen.insert(*p);

    let feas = feasible(p);
    if !feas.ok {
        steps.push(Step::new(
            Rule::SrgFeasibility,
            json!({"params": params_value(p)}),
            json!({"feasible": false, "failures": feas.failure_names()}),
        ));
        return Ok(Conclusion::NonexistenceCertified);
    }

    let hit = db.lookup(p);
    match hit.record.status {
        SrgStatus::NotExists => {
            push_db_steps(steps, p, &hit);
            return Ok(Conclusion::NonexistenceCertified);
        }
        SrgStatus::Exists => {
            push_db_steps(steps, p, &hit);
            return Ok(Conclusion::ExistenceKnown);
        }
        SrgStatus::Open => {}
    }

    if depth >= MAX_DERIVATION_DEPTH {
        notes.push(format!("derivation from {p} stopped: depth cap reached"));
        return Ok(Conclusion::Open);
    }

    if let Some(conclusion) = projection_route(db, p, Eigenspace::R, opts, steps, notes)? {
        return Ok(conclusion);
    }

    if p.regular_two_graph() {
        if let Ok(target) = fjg_descent(p) {
            if !seen.contains(&target) {
                let mut scratch = vec![Step::new(
                    Rule::FjgDescent,
                    json!({"params": params_value(p)}),
                    json!({"params": params_value(&target)}),
                )];
                let mut sub_notes = Vec::new();
                let sub = srg_core(db, &target, depth + 1, seen, opts, &mut scratch, &mut sub_notes)?;
                if sub == Conclusion::NonexistenceCertified {
                    steps.append(&mut scratch);
                    notes.append(&mut sub_notes);
                    notes.push(format!("{p} would descend to {target}, which does not exist"));
                    return Ok(Conclusion::NonexistenceCertified);
                }
            }
        }
    }

    if let Some(conclusion) = projection_route(db, p, Eigenspace::S, opts, steps, notes)? {
        return Ok(conclusion);
    }

    notes.push(format!(
        "no refutation of {p} found via feasibility, database, descent, or projection"
    ));
    Ok(Conclusion::Open)
}

/// Project onto one eigenspace and, unless the projection is already
/// equiangular, lift it; then decide the implied line system. Only a
/// refutation commits the scratch steps; anything weaker is discarded so
/// failed probes never clutter the certificate.
fn projection_route(
    db: &SrgDatabase,
    p: &SrgParams,
    which: Eigenspace,
    opts: &EngineOptions,
    steps: &mut Vec<Step>,
    notes: &mut Vec<String>,
) -> Result<Option<Conclusion>> {
    let spec = match project_srg(p, which) {
        Ok(spec) => spec,
        Err(_) => return Ok(None),
    };
    let mut scratch = vec![Step::new(
        Rule::Projection,
        json!({"params": params_value(p), "eigenspace": which.to_string()}),
        json!({
            "dimension": spec.dimension,
            "size": spec.size,
            "inner_a": spec.inner_a.to_string(),
            "inner_b": spec.inner_b.to_string(),
        }),
    )];
    let (dim, size) = if spec.equiangular_angle().is_some() {
        (spec.dimension, spec.size)
    } else {
        let lift = match shifted_lift(&spec) {
            Ok(lift) => lift,
            Err(_) => return Ok(None),
        };
        scratch.push(Step::new(
            Rule::ShiftedLift,
            json!({
                "dimension": spec.dimension,
                "size": spec.size,
                "inner_a": spec.inner_a.to_string(),
                "inner_b": spec.inner_b.to_string(),
            }),
            json!({
                "dimension": lift.lifted.dimension,
                "size": lift.lifted.size,
                "angle": lift.lifted.inner_a.to_string(),
                "scale_sq": lift.scale_sq.to_string(),
                "height_sq": lift.height_sq.to_string(),
                "tight": lift.lifted.tight_frame,
            }),
        ));
        (lift.lifted.dimension, lift.lifted.size)
    };
    if dim < 2 {
        return Ok(None);
    }
    let mut sub_notes = Vec::new();
    let sub = lines_core(db, dim, size, None, opts, &mut scratch, &mut sub_notes)?;
    if sub == Conclusion::NonexistenceCertified {
        steps.append(&mut scratch);
        notes.append(&mut sub_notes);
        notes.push(format!(
            "{p} would yield {size} equiangular lines in dimension {dim}, which cannot exist"
        ));
        Ok(Some(Conclusion::NonexistenceCertified))
    } else {
        Ok(None)
    }
}

/// Text rendering of a verdict, mirroring the JSON field for field.
pub fn render_verdict(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "query: {}", v.query.describe());
    let _ = writeln!(out, "conclusion: {}", v.conclusion);
    out.push_str(&render_steps(&v.certificate, ""));
    out.push_str(&render_notes(&v.notes, ""));
    out
}

pub(crate) fn render_steps(steps: &[Step], indent: &str) -> String {
    let mut out = String::new();
    if steps.is_empty() {
        let _ = writeln!(out, "{indent}steps: (none)");
        return out;
    }
    let _ = writeln!(out, "{indent}steps:");
    for (i, step) in steps.iter().enumerate() {
        let _ = writeln!(out, "{indent}  {}. {:?}", i + 1, step.rule);
        let _ = writeln!(out, "{indent}     inputs:   {}", step.inputs);
        let _ = writeln!(out, "{indent}     outputs:  {}", step.outputs);
        let _ = writeln!(out, "{indent}     citation: {}", step.citation);
    }
    out
}

pub(crate) fn render_notes(notes: &[String], indent: &str) -> String {
    let mut out = String::new();
    if notes.is_empty() {
        return out;
    }
    let _ = writeln!(out, "{indent}notes:");
    for note in notes {
        let _ = writeln!(out, "{indent}  - {note}");
    }
    out
}
