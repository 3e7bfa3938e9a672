//! Multi-object reports: the three-row correspondence table, tight 5-design
//! families, and single-frame summaries. Each report carries derivation
//! steps that replay like any other certificate.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::designs::{tight4_params, tight5_params, tight5_srg_family};
use crate::error::{Error, Result};
use crate::frames::{complementary_etf, welch_angle, EtfSpec};
use crate::srg::database::SrgDatabase;
use crate::srg::{fjg_ascend, waldron_srg_of_etf, SrgParams, WaldronOutcome};

use super::{
    params_value, render_notes, render_steps, srg_verdict, Conclusion, EngineOptions, Rule, Step,
};

fn flag(conclusion: Conclusion) -> String {
    match conclusion {
        Conclusion::NonexistenceCertified => "N",
        Conclusion::ExistenceKnown => "E",
        Conclusion::Open => "O",
    }
    .to_string()
}

/// One parameter set in a report, with the engine's verdict condensed to a
/// database-style flag.
#[derive(Debug, Clone, Serialize)]
pub struct TableEntry {
    pub params: SrgParams,
    pub flag: String,
    pub conclusion: Conclusion,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub dimension: u64,
    pub count: u64,
    pub angle: String,
    pub entries: Vec<TableEntry>,
    pub steps: Vec<Step>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
}

/// The three tight-frame candidates whose graph-side families the engine
/// tabulates: ETF(42,288), ETF(45,540) and ETF(46,736), all at angle 1/7.
pub const TABLE1_FRAMES: [(u64, u64); 3] = [(42, 288), (45, 540), (46, 736)];

pub fn table1_report(db: &SrgDatabase, opts: &EngineOptions) -> Result<Table1Report> {
    let mut rows = Vec::new();
    for (n, m) in TABLE1_FRAMES {
        rows.push(table1_row(db, n, m, opts)?);
    }
    Ok(Table1Report { rows })
}

fn table1_row(db: &SrgDatabase, n: u64, m: u64, opts: &EngineOptions) -> Result<Table1Row> {
    let angle = welch_angle(n, m)?;
    let angle_str = angle.to_string();
    let etf = EtfSpec::new(n, m)?;
    let WaldronOutcome::Graphs {
        primary,
        complementary,
    } = waldron_srg_of_etf(&etf)?
    else {
        return Err(Error::Internal(format!(
            "table row ({n}, {m}) must have integral graph parameters"
        )));
    };

    let mut steps = Vec::new();
    steps.push(Step::new(
        Rule::WaldronCorrespondence,
        json!({"dimension": n, "count": m, "angle": angle_str}),
        json!({
            "primary": params_value(&primary),
            "complementary": params_value(&complementary),
        }),
    ));
    steps.push(Step::new(
        Rule::Complement,
        json!({"params": params_value(&primary)}),
        json!({"params": params_value(&complementary)}),
    ));
    let ascended = fjg_ascend(&complementary);
    steps.push(Step::new(
        Rule::FjgAscend,
        json!({"params": params_value(&complementary)}),
        json!({
            "ascended": ascended.iter().map(params_value).collect::<Vec<_>>(),
        }),
    ));

    let mut sets = vec![primary];
    sets.extend(ascended);
    let mut entries = Vec::new();
    for p in &sets {
        let verdict = srg_verdict(db, p, opts)?;
        entries.push(TableEntry {
            params: *p,
            flag: flag(verdict.conclusion),
            conclusion: verdict.conclusion,
        });
    }

    let mut notes = Vec::new();
    let primary_refuted = entries[0].conclusion == Conclusion::NonexistenceCertified;
    let ascended_refuted = entries[1..]
        .iter()
        .any(|e| e.conclusion == Conclusion::NonexistenceCertified);
    if ascended_refuted && !primary_refuted {
        notes.push(format!(
            "this is not sufficient to show the nonexistence of ETF({n}, {m}, {angle_str})"
        ));
    }

    Ok(Table1Row {
        dimension: n,
        count: m,
        angle: angle_str,
        entries,
        steps,
        notes,
    })
}

pub fn render_table1(report: &Table1Report) -> String {
    let mut out = String::new();
    for row in &report.rows {
        let _ = writeln!(
            out,
            "ETF({}, {}, {})",
            row.dimension, row.count, row.angle
        );
        for entry in &row.entries {
            let _ = writeln!(out, "  {}  {}", entry.params, entry.flag);
        }
        out.push_str(&render_steps(&row.steps, "  "));
        out.push_str(&render_notes(&row.notes, "  "));
    }
    out
}

/// Family indices whose tight spherical 5-design is known not to exist, so
/// every graph in the corresponding family inherits an implied N [ban04,
/// neb12].
pub const TIGHT5_NONEXISTENT_M: [u64; 11] = [3, 4, 6, 10, 12, 22, 30, 34, 38, 42, 46];

#[derive(Debug, Clone, Serialize)]
pub struct FamilyEntry {
    pub params: SrgParams,
    pub flag: String,
    pub conclusion: Conclusion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implied_flag: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Tight5Report {
    pub m: u64,
    pub dimension: u64,
    pub line_count: u64,
    pub angle: String,
    pub design_nonexistent: bool,
    pub family: Vec<FamilyEntry>,
    pub steps: Vec<Step>,
    pub notes: Vec<String>,
}

pub fn tight5_report(db: &SrgDatabase, m: u64, opts: &EngineOptions) -> Result<Tight5Report> {
    let params = tight5_params(m)?;
    let family_sets = tight5_srg_family(m)?;
    let angle_str = params.angle.to_string();

    let mut steps = Vec::new();
    steps.push(Step::new(
        Rule::Tight5Family,
        json!({"m": m}),
        json!({
            "dimension": params.dimension,
            "line_count": params.line_count,
            "angle": angle_str,
            "family": family_sets.iter().map(params_value).collect::<Vec<_>>(),
        }),
    ));
    let t4 = tight4_params(m)?;
    steps.push(Step::new(
        Rule::Tight4Params,
        json!({"m": m}),
        json!({
            "dimension": t4.dimension,
            "size": t4.size,
            "inner_a": t4.inner_a.to_string(),
            "inner_b": t4.inner_b.to_string(),
        }),
    ));

    let design_nonexistent = TIGHT5_NONEXISTENT_M.contains(&m);
    let mut family = Vec::new();
    for p in &family_sets {
        let verdict = srg_verdict(db, p, opts)?;
        family.push(FamilyEntry {
            params: *p,
            flag: flag(verdict.conclusion),
            conclusion: verdict.conclusion,
            implied_flag: design_nonexistent.then(|| "N".to_string()),
        });
    }

    let mut notes = Vec::new();
    if design_nonexistent {
        notes.push(format!(
            "no tight spherical 5-design exists in dimension {} [ban04, neb12]; every parameter set in this family is therefore flagged N",
            params.dimension
        ));
    }
    if m == 4 {
        let printed = SrgParams::new(3159, 1408, 1064, 702);
        if !printed.counting_identity_holds() {
            let lhs = printed.k * (printed.k - printed.lambda - 1);
            let rhs = (printed.v - printed.k - 1) * printed.mu;
            notes.push(format!(
                "misprint: {printed} fails the counting identity k(k-lambda-1) = (v-k-1)mu ({lhs} != {rhs}); the corrected parameter set is {}",
                SrgParams::new(3159, 1408, 532, 704)
            ));
        }
    }

    Ok(Tight5Report {
        m,
        dimension: params.dimension,
        line_count: params.line_count,
        angle: angle_str,
        design_nonexistent,
        family,
        steps,
        notes,
    })
}

pub fn render_tight5(report: &Tight5Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "tight 5-design family m = {}: {} lines in dimension {} at angle {}",
        report.m, report.line_count, report.dimension, report.angle
    );
    let _ = writeln!(out, "design nonexistent: {}", report.design_nonexistent);
    for entry in &report.family {
        match &entry.implied_flag {
            Some(implied) => {
                let _ = writeln!(
                    out,
                    "  {}  {} (implied {})",
                    entry.params, entry.flag, implied
                );
            }
            None => {
                let _ = writeln!(out, "  {}  {}", entry.params, entry.flag);
            }
        }
    }
    out.push_str(&render_steps(&report.steps, "  "));
    out.push_str(&render_notes(&report.notes, "  "));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementaryFrame {
    pub dimension: u64,
    pub count: u64,
    pub angle: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EtfReport {
    pub dimension: u64,
    pub count: u64,
    pub angle: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primary: Option<SrgParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complementary_graph: Option<SrgParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_integral_degree: Option<String>,
    pub complementary_frame: ComplementaryFrame,
    pub steps: Vec<Step>,
}

pub fn etf_report(n: u64, m: u64) -> Result<EtfReport> {
    if m <= n + 1 {
        return Err(Error::InvalidParameters(format!(
            "the graph correspondence needs count > dimension + 1, got dimension {n} and count {m}"
        )));
    }
    let etf = EtfSpec::new(n, m)?;
    let angle_str = etf.angle().to_string();
    let waldron_inputs = json!({"dimension": n, "count": m, "angle": angle_str});

    let mut steps = Vec::new();
    let (primary, complementary_graph, non_integral_degree) = match waldron_srg_of_etf(&etf)? {
        WaldronOutcome::Graphs {
            primary,
            complementary,
        } => {
            steps.push(Step::new(
                Rule::WaldronCorrespondence,
                waldron_inputs,
                json!({
                    "primary": params_value(&primary),
                    "complementary": params_value(&complementary),
                }),
            ));
            (Some(primary), Some(complementary), None)
        }
        WaldronOutcome::NonIntegral { degree } => {
            steps.push(Step::new(
                Rule::WaldronIntegrality,
                waldron_inputs,
                json!({"degree": degree.to_string(), "integral": false}),
            ));
            (None, None, Some(degree.to_string()))
        }
    };

    let comp = complementary_etf(&etf)?;
    steps.push(Step::new(
        Rule::ComplementaryEtf,
        json!({"dimension": n, "count": m}),
        json!({
            "dimension": comp.dimension(),
            "count": comp.count(),
            "angle": comp.angle().to_string(),
        }),
    ));

    Ok(EtfReport {
        dimension: n,
        count: m,
        angle: angle_str,
        primary,
        complementary_graph,
        non_integral_degree,
        complementary_frame: ComplementaryFrame {
            dimension: comp.dimension(),
            count: comp.count(),
            angle: comp.angle().to_string(),
        },
        steps,
    })
}

pub fn render_etf(report: &EtfReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "ETF({}, {}, {})",
        report.dimension, report.count, report.angle
    );
    match (&report.primary, &report.complementary_graph) {
        (Some(p), Some(c)) => {
            let _ = writeln!(out, "  primary graph:       {p}");
            let _ = writeln!(out, "  complementary graph: {c}");
        }
        _ => {
            if let Some(degree) = &report.non_integral_degree {
                let _ = writeln!(
                    out,
                    "  no graph correspondence: degree {degree} is not an even integer"
                );
            }
        }
    }
    let _ = writeln!(
        out,
        "  complementary frame: ETF({}, {}, {})",
        report.complementary_frame.dimension,
        report.complementary_frame.count,
        report.complementary_frame.angle
    );
    out.push_str(&render_steps(&report.steps, "  "));
    out
}
