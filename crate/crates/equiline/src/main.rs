use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use equiline::designs::{project_srg, shifted_lift, Eigenspace, ShiftedLift, TwoDistanceSpec};
use equiline::engine::reports::{
    etf_report, render_etf, render_table1, render_tight5, table1_report, tight5_report,
};
use equiline::engine::{lines_verdict, render_verdict, srg_verdict, EngineOptions};
use equiline::exact::parse_scalar;
use equiline::frames::LineSystemQuery;
use equiline::srg::database::SrgDatabase;
use equiline::srg::SrgParams;
use equiline::verify::{adjacency_from_path, gram_by_projection, gram_by_seidel, GramReport};
use equiline::{Error, Result};

#[derive(Parser)]
#[command(
    name = "equiline",
    version,
    about = "Exact deduction engine for equiangular line systems and their graphs"
)]
struct Cli {
    /// Status database file; the built-in seed records are used when omitted.
    #[arg(long, global = true, value_name = "FILE")]
    db: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether `count` equiangular lines can exist in dimension `dim`.
    Lines {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        count: u64,
        /// Common angle as an exact scalar, e.g. "1/5" or "1/7*sqrt(7)".
        #[arg(long)]
        angle: Option<String>,
        #[arg(long)]
        json: bool,
        /// Certify via the smallest refuted count at or below `count`.
        #[arg(long)]
        monotone: bool,
    },
    /// Decide whether a strongly regular graph srg(v,k,lambda,mu) can exist.
    Srg {
        v: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        #[arg(long)]
        json: bool,
    },
    /// Summarize an equiangular tight frame and its associated graphs.
    Etf {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        json: bool,
    },
    /// Project a strongly regular graph onto one eigenspace.
    Project {
        v: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        /// Eigenspace to project onto: "r" or "s".
        #[arg(long)]
        eigenspace: String,
        #[arg(long)]
        json: bool,
    },
    /// Shift and lift a two-distance 2-design to equiangular lines.
    Lift {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        size: u64,
        /// Larger inner product, e.g. "7/45".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Smaller inner product, e.g. "-4/15".
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit the three-frame graph correspondence table.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Emit the tight 5-design family for index m.
    Tight5 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// Parse an adjacency matrix and analyze a Gram matrix built from it.
    Verify {
        /// Adjacency matrix file: an order header, then 0/1 rows.
        #[arg(long, value_name = "FILE")]
        adjacency: PathBuf,
        /// Build the Gram matrix of the projection onto eigenspace "r" or "s".
        #[arg(long)]
        projection: Option<String>,
        /// Build the Seidel Gram matrix of the one-point augmentation at this
        /// angle, e.g. "1/5" or "1/5*sqrt(5)".
        #[arg(long)]
        seidel_angle: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}

fn load_db(path: Option<&Path>) -> Result<SrgDatabase> {
    match path {
        Some(p) => SrgDatabase::from_path(p),
        None => Ok(SrgDatabase::seed()),
    }
}

fn parse_eigenspace(token: &str) -> Result<Eigenspace> {
    match token {
        "r" => Ok(Eigenspace::R),
        "s" => Ok(Eigenspace::S),
        other => Err(Error::InvalidParameters(format!(
            "eigenspace must be \"r\" or \"s\", got \"{other}\""
        ))),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: String) -> Result<()> {
    if json {
        let rendered =
            serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
        println!("{rendered}");
    } else {
        print!("{text}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let db = load_db(cli.db.as_deref())?;
    match cli.command {
        Command::Lines {
            dim,
            count,
            angle,
            json,
            monotone,
        } => {
            let angle = angle.map(|s| parse_scalar(&s)).transpose()?;
            let query = LineSystemQuery::new(dim, count, angle)?;
            let options = EngineOptions {
                monotone,
                ..EngineOptions::default()
            };
            let verdict = lines_verdict(&db, &query, &options)?;
            emit(json, &verdict, render_verdict(&verdict))
        }
        Command::Srg {
            v,
            k,
            lambda,
            mu,
            json,
        } => {
            let params = SrgParams::new(v, k, lambda, mu);
            let verdict = srg_verdict(&db, &params, &EngineOptions::default())?;
            emit(json, &verdict, render_verdict(&verdict))
        }
        Command::Etf { dim, count, json } => {
            let report = etf_report(dim, count)?;
            emit(json, &report, render_etf(&report))
        }
        Command::Project {
            v,
            k,
            lambda,
            mu,
            eigenspace,
            json,
        } => {
            let which = parse_eigenspace(&eigenspace)?;
            let params = SrgParams::new(v, k, lambda, mu);
            let spec = project_srg(&params, which)?;
            let text = render_projection(&params, which, &spec);
            emit(json, &spec, text)
        }
        Command::Lift {
            dim,
            size,
            a,
            b,
            json,
        } => {
            let spec = TwoDistanceSpec {
                dimension: dim,
                size,
                inner_a: parse_scalar(&a)?,
                inner_b: parse_scalar(&b)?,
                design_strength: 2,
                tight_frame: false,
            };
            let lift = shifted_lift(&spec)?;
            let text = render_lift(&spec, &lift);
            emit(json, &lift, text)
        }
        Command::Table1 { json } => {
            let report = table1_report(&db, &EngineOptions::default())?;
            emit(json, &report, render_table1(&report))
        }
        Command::Tight5 { m, json } => {
            let report = tight5_report(&db, m, &EngineOptions::default())?;
            emit(json, &report, render_tight5(&report))
        }
        Command::Verify {
            adjacency,
            projection,
            seidel_angle,
            json,
        } => {
            let graph = adjacency_from_path(&adjacency)?;
            let report = match (projection, seidel_angle) {
                (Some(which), None) => gram_by_projection(&graph, parse_eigenspace(&which)?)?,
                (None, Some(angle)) => {
                    let c = parse_scalar(&angle)?;
                    gram_by_seidel(&graph, c.to_f64())?
                }
                _ => {
                    return Err(Error::InvalidParameters(
                        "pass exactly one of --projection and --seidel-angle".to_string(),
                    ))
                }
            };
            emit(json, &report, render_gram(&report))
        }
    }
}

fn render_projection(params: &SrgParams, which: Eigenspace, spec: &TwoDistanceSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "projection of {params} onto eigenspace {which}");
    let _ = writeln!(
        out,
        "  {} unit vectors in dimension {}",
        spec.size, spec.dimension
    );
    let _ = writeln!(
        out,
        "  inner products: {} and {}",
        spec.inner_a, spec.inner_b
    );
    let _ = writeln!(
        out,
        "  design strength {}, tight frame: {}",
        spec.design_strength, spec.tight_frame
    );
    out
}

fn render_lift(input: &TwoDistanceSpec, lift: &ShiftedLift) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "shifted lift of {} points in dimension {} with inner products {} and {}",
        input.size, input.dimension, input.inner_a, input.inner_b
    );
    let _ = writeln!(
        out,
        "  scale^2 = {}, height^2 = {}",
        lift.scale_sq, lift.height_sq
    );
    let _ = writeln!(
        out,
        "  {} equiangular lines in dimension {} at angle {} (tight frame: {})",
        lift.lifted.size, lift.lifted.dimension, lift.lifted.inner_a, lift.lifted.tight_frame
    );
    out
}

fn render_gram(report: &GramReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "gram matrix: {} vectors, ambient dimension {}, numeric rank {}",
        report.size, report.ambient, report.numeric_rank
    );
    let _ = writeln!(out, "  min eigenvalue: {:.3e}", report.min_eigenvalue);
    let classes: Vec<String> = report
        .distinct_offdiag
        .iter()
        .map(|(value, count)| format!("{value:.6} (x{count})"))
        .collect();
    let _ = writeln!(out, "  off-diagonal classes: {}", classes.join(", "));
    let _ = writeln!(
        out,
        "  frame potential: {:.6} (minimum M^2/rank = {:.6})",
        report.frame_potential,
        if report.numeric_rank > 0 {
            (report.size * report.size) as f64 / report.numeric_rank as f64
        } else {
            f64::NAN
        }
    );
    let _ = writeln!(out, "  centroid norm: {:.3e}", report.centroid_norm);
    let v = &report.verdicts;
    let _ = writeln!(
        out,
        "  psd: {}, two-distance: {}, equiangular: {}, tight frame: {}, 2-design: {}",
        v.psd, v.two_distance, v.equiangular, v.tight_frame, v.two_design
    );
    out
}
