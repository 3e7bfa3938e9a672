//! Numerical verification of explicit constructions: adjacency-matrix
//! ingestion, builtin graph generators, SRG parameter inference, and Gram
//! matrix reports built by eigenspace projection or Seidel construction.

pub mod gram;

pub use gram::{
    check_two_design, gram_by_projection, gram_by_seidel, GramReport, GramVerdicts,
};

use std::path::Path;

use crate::error::{Error, Result};
use crate::exact::parse_u64;
use crate::srg::SrgParams;

/// Largest adjacency matrix the verifier accepts. All target constructions
/// are far smaller; the cap bounds memory on hostile input.
pub const MAX_ORDER: usize = 4096;

/// A validated simple-graph adjacency matrix: symmetric 0/1 with zero
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    order: usize,
    bits: Vec<bool>,
}

impl AdjacencyMatrix {
    fn from_bits(order: usize, bits: Vec<bool>) -> Result<Self> {
        assert_eq!(bits.len(), order * order);
        for i in 0..order {
            if bits[i * order + i] {
                return Err(Error::NonZeroDiagonal { index: i });
            }
            for j in (i + 1)..order {
                if bits[i * order + j] != bits[j * order + i] {
                    return Err(Error::AsymmetricEntry { row: j, col: i });
                }
            }
        }
        Ok(AdjacencyMatrix { order, bits })
    }

    /// Builds a matrix from an edge predicate, symmetrizing implicitly. The
    /// predicate is only consulted for i < j.
    fn from_edge_fn(order: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = vec![false; order * order];
        for i in 0..order {
            for j in (i + 1)..order {
                if edge(i, j) {
                    bits[i * order + j] = true;
                    bits[j * order + i] = true;
                }
            }
        }
        AdjacencyMatrix { order, bits }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.order + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.order).filter(|&j| self.entry(i, j)).count()
    }

    fn common_neighbors(&self, i: usize, j: usize) -> usize {
        (0..self.order)
            .filter(|&t| self.entry(i, t) && self.entry(j, t))
            .count()
    }

    /// Complement graph (off-diagonal bits flipped).
    pub fn complement(&self) -> Self {
        AdjacencyMatrix::from_edge_fn(self.order, |i, j| !self.entry(i, j))
    }
}

/// Parses the adjacency text format: first significant line is the order v,
/// followed by v lines of v whitespace-separated 0/1 tokens. `#` starts a
/// comment; blank lines are ignored.
pub fn parse_adjacency(text: &str) -> Result<AdjacencyMatrix> {
    let parse_err = |reason: String| Error::Parse {
        kind: "adjacency matrix",
        reason,
    };
    let mut lines = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| parse_err("empty input; expected the matrix order".to_string()))?;
    let order = parse_u64(header, "adjacency order")?;
    if order == 0 {
        return Err(parse_err("matrix order must be positive".to_string()));
    }
    if order > MAX_ORDER as u64 {
        return Err(parse_err(format!(
            "matrix order {order} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    let order = order as usize;

    let mut bits = Vec::with_capacity(order * order);
    for row in 0..order {
        let line = lines
            .next()
            .ok_or_else(|| parse_err(format!("missing matrix row {row} (of {order})")))?;
        let mut col = 0;
        for token in line.split_whitespace() {
            if col >= order {
                return Err(parse_err(format!(
                    "row {row} has more than {order} entries"
                )));
            }
            match token {
                "0" => bits.push(false),
                "1" => bits.push(true),
                _ => return Err(Error::NonBinaryEntry { row, col }),
            }
            col += 1;
        }
        if col != order {
            return Err(parse_err(format!(
                "row {row} has {col} entries, expected {order}"
            )));
        }
    }
    if let Some(extra) = lines.next() {
        return Err(parse_err(format!(
            "unexpected trailing content after the matrix: {extra:?}"
        )));
    }
    AdjacencyMatrix::from_bits(order, bits)
}

/// Byte-stream entry point used by the CLI and fuzzing: UTF-8 decode, then
/// [`parse_adjacency`].
pub fn ingest_adjacency(source: &[u8]) -> Result<AdjacencyMatrix> {
    let text = std::str::from_utf8(source).map_err(|e| Error::Parse {
        kind: "adjacency matrix",
        reason: format!("input is not UTF-8: {e}"),
    })?;
    parse_adjacency(text)
}

pub fn adjacency_from_path(path: &Path) -> Result<AdjacencyMatrix> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    ingest_adjacency(&bytes)
}

/// Test-fixture generators for small graphs with known parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinGraph {
    Cycle5,
    Petersen,
    /// Paley graph on q vertices; q must be a prime or the square of a
    /// prime, with q = 1 mod 4.
    Paley(u64),
    /// Johnson-style triangular graph T(m) on the 2-subsets of an m-set.
    Triangular(u64),
    /// Rook's graph on an m-by-m grid.
    Lattice(u64),
    Complement(Box<BuiltinGraph>),
}

pub fn builtin_graph(which: &BuiltinGraph) -> Result<AdjacencyMatrix> {
    match which {
        BuiltinGraph::Cycle5 => Ok(AdjacencyMatrix::from_edge_fn(5, |i, j| {
            j == i + 1 || (i == 0 && j == 4)
        })),
        BuiltinGraph::Petersen => {
            // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
            Ok(AdjacencyMatrix::from_edge_fn(10, |i, j| {
                if j < 5 {
                    j == i + 1 || (i == 0 && j == 4)
                } else if i < 5 {
                    j == i + 5
                } else {
                    let (a, b) = (i - 5, j - 5);
                    (a + 2) % 5 == b || (b + 2) % 5 == a
                }
            }))
        }
        BuiltinGraph::Paley(q) => paley(*q),
        BuiltinGraph::Triangular(m) => {
            let m = *m;
            if m < 4 {
                return Err(Error::InvalidParameters(format!(
                    "triangular graph needs m >= 4, got {m}"
                )));
            }
            check_order(m * (m.saturating_sub(1)) / 2)?;
            let m = m as usize;
            let pairs: Vec<(usize, usize)> = (0..m)
                .flat_map(|a| ((a + 1)..m).map(move |b| (a, b)))
                .collect();
            Ok(AdjacencyMatrix::from_edge_fn(pairs.len(), |i, j| {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                a == c || a == d || b == c || b == d
            }))
        }
        BuiltinGraph::Lattice(m) => {
            let m = *m;
            if m < 2 {
                return Err(Error::InvalidParameters(format!(
                    "lattice graph needs m >= 2, got {m}"
                )));
            }
            check_order(m * m)?;
            let m = m as usize;
            Ok(AdjacencyMatrix::from_edge_fn(m * m, |i, j| {
                (i / m == j / m) != (i % m == j % m)
            }))
        }
        BuiltinGraph::Complement(inner) => Ok(builtin_graph(inner)?.complement()),
    }
}

fn check_order(v: u64) -> Result<()> {
    if v > MAX_ORDER as u64 {
        return Err(Error::InvalidParameters(format!(
            "graph order {v} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    Ok(())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Paley graph on GF(q): vertices are field elements, adjacent when their
/// difference is a nonzero square. Supported q: an odd prime, or the square
/// of an odd prime (built as GF(p)[x]/(x^2 - t) for a non-residue t).
fn paley(q: u64) -> Result<AdjacencyMatrix> {
    if q % 4 != 1 {
        return Err(Error::InvalidParameters(format!(
            "Paley graph needs q = 1 mod 4, got {q}"
        )));
    }
    check_order(q)?;
    if is_prime(q) {
        let q = q as usize;
        let mut square = vec![false; q];
        for x in 1..q {
            square[(x * x) % q] = true;
        }
        return Ok(AdjacencyMatrix::from_edge_fn(q, |i, j| {
            square[(q + i - j) % q]
        }));
    }
    let p = (q as f64).sqrt().round() as u64;
    if p * p != q || !is_prime(p) {
        return Err(Error::InvalidParameters(format!(
            "Paley graph supports prime or prime-square orders, got {q}"
        )));
    }
    // Non-residue t mod p: t^((p-1)/2) = p - 1.
    let pow_mod = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc = 1u64;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let t = (2..p)
        .find(|&c| pow_mod(c, (p - 1) / 2) == p - 1)
        .expect("every odd prime has a quadratic non-residue");

    // Elements of GF(p^2) are a + b*x with x^2 = t, indexed as a*p + b.
    let p = p as usize;
    let t = t as usize;
    let mut square = vec![false; p * p];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            let re = (a * a + t * b * b) % p;
            let im = (2 * a * b) % p;
            square[re * p + im] = true;
        }
    }
    Ok(AdjacencyMatrix::from_edge_fn(p * p, |i, j| {
        let (a, b) = (i / p, i % p);
        let (c, d) = (j / p, j % p);
        let re = (p + a - c) % p;
        let im = (p + b - d) % p;
        square[re * p + im]
    }))
}

/// Result of checking whether a graph is strongly regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InferOutcome {
    Srg(SrgParams),
    /// The graph is not strongly regular; `witness` names the offending
    /// vertex pair and `reason` explains the inconsistency.
    NotStronglyRegular {
        witness: (usize, usize),
        reason: String,
    },
}

/// Checks k-regularity and constant common-neighbor counts over all vertex
/// pairs, returning the parameters or a witness pair.
pub fn infer_srg(a: &AdjacencyMatrix) -> InferOutcome {
    let v = a.order();
    let k = a.degree(0);
    for i in 1..v {
        let d = a.degree(i);
        if d != k {
            return InferOutcome::NotStronglyRegular {
                witness: (0, i),
                reason: format!("vertex 0 has degree {k} but vertex {i} has degree {d}"),
            };
        }
    }
    let mut lambda: Option<(usize, (usize, usize))> = None;
    let mut mu: Option<(usize, (usize, usize))> = None;
    for i in 0..v {
        for j in (i + 1)..v {
            let common = a.common_neighbors(i, j);
            let slot = if a.entry(i, j) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some((common, (i, j))),
                Some((expected, first_pair)) => {
                    if common != *expected {
                        let relation = if a.entry(i, j) {
                            "adjacent"
                        } else {
                            "non-adjacent"
                        };
                        return InferOutcome::NotStronglyRegular {
                            witness: (i, j),
                            reason: format!(
                                "{relation} pair ({i}, {j}) shares {common} neighbors but \
                                 ({}, {}) shares {expected}",
                                first_pair.0, first_pair.1
                            ),
                        };
                    }
                }
            }
        }
    }
    InferOutcome::Srg(SrgParams::new(
        v as u64,
        k as u64,
        lambda.map_or(0, |(l, _)| l) as u64,
        mu.map_or(0, |(m, _)| m) as u64,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn infer_params(g: &BuiltinGraph) -> SrgParams {
        match infer_srg(&builtin_graph(g).unwrap()) {
            InferOutcome::Srg(p) => p,
            InferOutcome::NotStronglyRegular { witness, reason } => {
                panic!("{g:?} unexpectedly irregular at {witness:?}: {reason}")
            }
        }
    }

    #[test]
    fn builtin_parameters() {
        assert_eq!(infer_params(&BuiltinGraph::Cycle5), SrgParams::new(5, 2, 0, 1));
        assert_eq!(
            infer_params(&BuiltinGraph::Petersen),
            SrgParams::new(10, 3, 0, 1)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Paley(5)),
            SrgParams::new(5, 2, 0, 1)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Paley(9)),
            SrgParams::new(9, 4, 1, 2)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Paley(13)),
            SrgParams::new(13, 6, 2, 3)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Paley(17)),
            SrgParams::new(17, 8, 3, 4)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Paley(25)),
            SrgParams::new(25, 12, 5, 6)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Triangular(5)),
            SrgParams::new(10, 6, 3, 4)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Lattice(3)),
            SrgParams::new(9, 4, 1, 2)
        );
        assert_eq!(
            infer_params(&BuiltinGraph::Complement(Box::new(BuiltinGraph::Petersen))),
            SrgParams::new(10, 6, 3, 4)
        );
    }

    #[test]
    fn builtin_rejections() {
        assert!(builtin_graph(&BuiltinGraph::Paley(7)).is_err());
        assert!(builtin_graph(&BuiltinGraph::Paley(8)).is_err());
        assert!(builtin_graph(&BuiltinGraph::Paley(27)).is_err());
        assert!(builtin_graph(&BuiltinGraph::Triangular(3)).is_err());
        assert!(builtin_graph(&BuiltinGraph::Lattice(1)).is_err());
    }

    #[test]
    fn six_cycle_witness() {
        let c6 = parse_adjacency(
            "6\n0 1 0 0 0 1\n1 0 1 0 0 0\n0 1 0 1 0 0\n0 0 1 0 1 0\n0 0 0 1 0 1\n1 0 0 0 1 0\n",
        )
        .unwrap();
        let InferOutcome::NotStronglyRegular { witness, .. } = infer_srg(&c6) else {
            panic!("C6 is not strongly regular");
        };
        assert_eq!(witness, (0, 3));
    }

    #[test]
    fn parse_round_trip() {
        let pentagon = builtin_graph(&BuiltinGraph::Cycle5).unwrap();
        let text = "# pentagon\n5\n0 1 0 0 1\n1 0 1 0 0\n0 1 0 1 0\n0 0 1 0 1\n1 0 0 1 0\n";
        assert_eq!(parse_adjacency(text).unwrap(), pentagon);
        assert_eq!(ingest_adjacency(text.as_bytes()).unwrap(), pentagon);
    }

    #[test]
    fn parse_rejections() {
        assert!(matches!(
            parse_adjacency("2\n0 2\n2 0\n"),
            Err(Error::NonBinaryEntry { row: 0, col: 1 })
        ));
        assert!(matches!(
            parse_adjacency("2\n0 1\n0 0\n"),
            Err(Error::AsymmetricEntry { .. })
        ));
        assert!(matches!(
            parse_adjacency("2\n1 1\n1 1\n"),
            Err(Error::NonZeroDiagonal { index: 0 })
        ));
        assert!(parse_adjacency("").is_err());
        assert!(parse_adjacency("2\n0 1\n").is_err());
        assert!(parse_adjacency("2\n0 1 0\n1 0\n").is_err());
        assert!(parse_adjacency("2\n0 1\n1 0\n0\n").is_err());
        assert!(parse_adjacency("0\n").is_err());
        assert!(parse_adjacency("1000000\n").is_err());
        assert!(parse_adjacency("-3\n").is_err());
        assert!(ingest_adjacency(&[0xff, 0xfe, 0x31]).is_err());
    }

    #[test]
    fn edgeless_and_complete() {
        let edgeless = parse_adjacency("2\n0 0\n0 0\n").unwrap();
        assert_eq!(
            infer_srg(&edgeless),
            InferOutcome::Srg(SrgParams::new(2, 0, 0, 0))
        );
        let complete = parse_adjacency("3\n0 1 1\n1 0 1\n1 1 0\n").unwrap();
        assert_eq!(
            infer_srg(&complete),
            InferOutcome::Srg(SrgParams::new(3, 2, 1, 0))
        );
    }
}
