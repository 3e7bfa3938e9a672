//! Floating-point Gram matrix reports. Everything here is numerical and is
//! kept strictly separate from the exact layer; reports carry tolerances,
//! not proofs.

use nalgebra::{DMatrix, Dyn, SymmetricEigen};
use serde::Serialize;

use super::{infer_srg, AdjacencyMatrix, InferOutcome};
use crate::designs::Eigenspace;
use crate::error::{Error, Result};
use crate::srg::spectrum;

/// Eigenvalues below this fraction of the largest magnitude count as zero
/// for the numeric rank.
pub const RANK_REL_TOL: f64 = 1e-8;
/// Off-diagonal values closer than this are merged into one value class.
pub const CLUSTER_GAP: f64 = 1e-6;
/// Positive semidefinite means min eigenvalue >= -(this) * max eigenvalue.
pub const PSD_REL_TOL: f64 = 1e-8;
/// Relative tolerance on the frame potential for the tight-frame verdict.
pub const TIGHT_REL_TOL: f64 = 1e-9;
/// Centroid squared-norm threshold for the 2-design verdict.
pub const CENTROID_TOL: f64 = 1e-9;

/// Tolerance for matching a numeric eigenvalue to its exact target; the
/// target spectra have gaps well above this.
const EIGENVALUE_MATCH_TOL: f64 = 1e-6;

/// Boolean verdicts derived from the numeric fields of a [`GramReport`]
/// under the module tolerances, never set independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GramVerdicts {
    pub psd: bool,
    pub two_distance: bool,
    pub equiangular: bool,
    pub tight_frame: bool,
    pub two_design: bool,
}

/// Numeric summary of a unit-diagonal Gram matrix.
#[derive(Debug, Clone, Serialize)]
pub struct GramReport {
    /// Number of points M.
    pub size: usize,
    /// Dimension the construction targets: the exact eigenspace multiplicity
    /// for projections, the numeric rank for Seidel constructions.
    pub ambient: usize,
    pub numeric_rank: usize,
    pub min_eigenvalue: f64,
    /// Off-diagonal value classes as (class mean, unordered pair count),
    /// ascending.
    pub distinct_offdiag: Vec<(f64, usize)>,
    /// Sum of squared entries of G, diagonal included.
    pub frame_potential: f64,
    /// (1ᵀ G 1) / M², the squared norm of the centroid.
    pub centroid_norm: f64,
    pub verdicts: GramVerdicts,
}

fn symmetric_eigen(m: DMatrix<f64>) -> Result<SymmetricEigen<f64, Dyn>> {
    SymmetricEigen::try_new(m, 1e-13, 100_000)
        .ok_or_else(|| Error::Eigen("symmetric eigensolver did not converge".to_string()))
}

fn to_dense(a: &AdjacencyMatrix) -> DMatrix<f64> {
    let v = a.order();
    DMatrix::from_fn(v, v, |i, j| if a.entry(i, j) { 1.0 } else { 0.0 })
}

/// Groups an ascending slice into classes split at gaps larger than `gap`,
/// returning (class mean, class size) pairs.
fn cluster_sorted(vals: &[f64], gap: f64) -> Vec<(f64, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=vals.len() {
        if i == vals.len() || vals[i] - vals[i - 1] > gap {
            let class = &vals[start..i];
            let mean = class.iter().sum::<f64>() / class.len() as f64;
            out.push((mean, class.len()));
            start = i;
        }
    }
    out
}

pub(crate) fn report_from_gram(g: DMatrix<f64>, ambient: Option<usize>) -> Result<GramReport> {
    let m = g.nrows();
    let g = (&g + &g.transpose()) * 0.5;

    let eigen = symmetric_eigen(g.clone())?;
    let max_abs = eigen
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &l| acc.max(l.abs()));
    let min_eigenvalue = eigen.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    let numeric_rank = eigen
        .eigenvalues
        .iter()
        .filter(|l| l.abs() > RANK_REL_TOL * max_abs)
        .count();

    let mut offdiag = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            offdiag.push(g[(i, j)]);
        }
    }
    offdiag.sort_by(f64::total_cmp);
    let distinct_offdiag = cluster_sorted(&offdiag, CLUSTER_GAP);
    let mut magnitudes: Vec<f64> = offdiag.iter().map(|x| x.abs()).collect();
    magnitudes.sort_by(f64::total_cmp);
    let magnitude_classes = cluster_sorted(&magnitudes, CLUSTER_GAP).len();

    let frame_potential: f64 = g.iter().map(|x| x * x).sum();
    let centroid_norm = g.iter().sum::<f64>() / (m * m) as f64;

    let psd = min_eigenvalue >= -PSD_REL_TOL * max_abs;
    let tight_frame = numeric_rank > 0 && {
        let target = (m * m) as f64 / numeric_rank as f64;
        (frame_potential - target).abs() <= TIGHT_REL_TOL * target
    };
    let verdicts = GramVerdicts {
        psd,
        two_distance: distinct_offdiag.len() == 2,
        equiangular: m >= 2 && magnitude_classes == 1,
        tight_frame,
        two_design: tight_frame && centroid_norm <= CENTROID_TOL,
    };
    Ok(GramReport {
        size: m,
        ambient: ambient.unwrap_or(numeric_rank),
        numeric_rank,
        min_eigenvalue,
        distinct_offdiag,
        frame_potential,
        centroid_norm,
        verdicts,
    })
}

/// Projects the vertex set of a strongly regular graph onto the chosen
/// nontrivial eigenspace and reports the Gram matrix of the rescaled images.
///
/// The spectral idempotent is formed numerically from a dense symmetric
/// eigendecomposition; the eigenvalue cluster is validated against the exact
/// multiplicity before the diagonal is normalized to 1.
pub fn gram_by_projection(a: &AdjacencyMatrix, which: Eigenspace) -> Result<GramReport> {
    let params = match infer_srg(a) {
        InferOutcome::Srg(p) => p,
        InferOutcome::NotStronglyRegular { witness, reason } => {
            return Err(Error::InvalidParameters(format!(
                "input graph is not strongly regular (witness {witness:?}: {reason})"
            )))
        }
    };
    let spec = spectrum(&params)?;
    let (theta, multiplicity) = match which {
        Eigenspace::R => (spec.r.to_f64(), spec.f),
        Eigenspace::S => (spec.s.to_f64(), spec.g),
    };

    let v = a.order();
    let eigen = symmetric_eigen(to_dense(a))?;
    let chosen: Vec<usize> = (0..v)
        .filter(|&i| (eigen.eigenvalues[i] - theta).abs() < EIGENVALUE_MATCH_TOL)
        .collect();
    if chosen.len() as u64 != multiplicity {
        return Err(Error::Eigen(format!(
            "eigenvalue cluster near {theta} has size {}, expected multiplicity {multiplicity}",
            chosen.len()
        )));
    }

    let mut idempotent = DMatrix::<f64>::zeros(v, v);
    for &i in &chosen {
        let u = eigen.eigenvectors.column(i).into_owned();
        idempotent += &u * u.transpose();
    }
    let diag: Vec<f64> = (0..v).map(|i| idempotent[(i, i)]).collect();
    if diag.iter().any(|&d| d <= 1e-12) {
        return Err(Error::Eigen(
            "a projected vertex image has numerically zero norm".to_string(),
        ));
    }
    let g = DMatrix::from_fn(v, v, |i, j| idempotent[(i, j)] / (diag[i] * diag[j]).sqrt());
    report_from_gram(g, Some(multiplicity as usize))
}

/// Builds the Gram matrix G = I + cS from the Seidel matrix S = J - I - 2A
/// of the input graph extended by one isolated vertex, so a graph on v
/// vertices describes a system of v + 1 lines at angle c. The extension
/// matches the ETF correspondence, which attaches a graph on M - 1 vertices
/// to a system of M lines.
pub fn gram_by_seidel(a: &AdjacencyMatrix, c: f64) -> Result<GramReport> {
    if !c.is_finite() || c <= 0.0 || c >= 1.0 {
        return Err(Error::InvalidParameters(format!(
            "Seidel angle must lie strictly between 0 and 1, got {c}"
        )));
    }
    let v = a.order();
    let m = v + 1;
    let mut g = DMatrix::from_element(m, m, c);
    for i in 0..m {
        g[(i, i)] = 1.0;
    }
    for i in 0..v {
        for j in 0..v {
            if i != j && a.entry(i, j) {
                g[(i, j)] = -c;
            }
        }
    }
    report_from_gram(g, None)
}

/// True iff the report's tight-frame verdict holds and the centroid norm is
/// within [`CENTROID_TOL`]: a unit-norm point set is a spherical 2-design
/// exactly when it is a tight frame with centroid at the origin.
pub fn check_two_design(g: &GramReport) -> bool {
    g.verdicts.tight_frame && g.centroid_norm <= CENTROID_TOL
}
