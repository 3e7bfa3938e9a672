//! Exact deduction engine for equiangular line systems.
//!
//! The central question: can `M` lines through the origin of `R^n` pairwise
//! meet at one common angle? The engine decides instances of this question by
//! chaining exact-arithmetic deduction rules
//!
//! > angle constraints -> frame-potential tightness -> equiangular tight
//! > frame -> strongly regular graph -> known (non)existence facts
//!
//! and emits replayable certificates listing every rule application with its
//! inputs, outputs, and a literature citation. A small numerical module
//! independently verifies explicit constructions from adjacency matrices.
//!
//! Module map:
//! - [`exact`]: arbitrary-precision rationals and quadratic surds; every
//!   symbolic comparison in the engine is exact.
//! - [`bounds`]: closed-form bounds (Neumann and Larman–Rogers–Seidel angle
//!   constraints, relative bound, Gerzon bound, design cardinality bounds).
//! - [`frames`]: Welch angle, frame potential, tightness detection, and
//!   complementation of equiangular tight frames.
//! - [`srg`]: strongly regular graph parameter algebra (spectrum,
//!   feasibility, complement, the ETF correspondence, two-graph descent) and
//!   the known-status database.
//! - [`designs`]: eigenspace projections, the shifted lift, and the tight
//!   4/5-design parameter families.
//! - [`verify`]: floating-point verification of explicit adjacency-matrix
//!   constructions (Gram matrices, ranks, frame potentials).
//! - [`engine`]: the rule chainer producing [`engine::Verdict`]s, report
//!   generators, and certificate replay.
//!
//! The `equiline` binary exposes all of this on the command line; see the
//! crate README for examples.

pub mod bounds;
pub mod designs;
pub mod engine;
pub mod error;
pub mod exact;
pub mod frames;
pub mod srg;
pub mod verify;

pub use error::{Error, Result};
