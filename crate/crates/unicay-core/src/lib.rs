//! Unitary Cayley graphs of finite semirings.
//!
//! A finite semiring is stored as a pair of dense operation tables over
//! indexed elements ([`SemiringTable`]). From a table the crate derives the
//! group of units, the matrix semiring `M_k(S)`, and the unitary Cayley
//! graph: vertices are the elements, and `x ~ y` is an edge whenever
//! `x + u = y` or `y + u = x` for some unit `u`.
//!
//! The main entry points are:
//!
//! - [`builtins`]: ready-made tables (Boolean semiring, truncated addition,
//!   residues mod n, direct products, ...), addressable by a small spec
//!   grammar shared with the CLI.
//! - [`dsl`]: a line-oriented text format (`.sr` files) for defining
//!   arbitrary finite semirings by tables.
//! - [`matrix`]: matrix arithmetic over a table and exact enumeration of the
//!   invertible matrices, either by structure (diagonal times a sum of
//!   weighted permutation matrices, valid over commutative zero-sum-free
//!   semirings) or by a guarded brute-force scan.
//! - [`graph`]: Cayley graph construction and exact invariants (diameter,
//!   girth, clique number, independence number) with DOT/CSV/JSON exports.
//! - [`theorems`]: machine checks of the diameter, girth, clique and
//!   independence bounds, each with constructive, re-verified witnesses.

pub mod builtins;
pub mod dsl;
pub mod graph;
pub mod matrix;
pub mod semiring;
pub mod solver;
pub mod theorems;

pub use graph::{CayleyGraph, InvariantReport, Solved};
pub use matrix::{Matrix, MatrixSemiring, MatrixUnitSet, OrthDecomposition, Permutation};
pub use semiring::{AxiomViolation, SemiringProfile, SemiringTable, StructuralError, UnitSet};
pub use theorems::{CheckReport, HypothesisStatus, Verdict, WitnessSet};

use std::fmt;

/// A natural number extended with infinity.
///
/// Distances, diameters and girths of finite graphs are either exact
/// naturals or infinite (disconnected graph, acyclic graph). Infinity is a
/// tagged value, never a sentinel integer, and serializes as `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    /// JSON value: a number, or the string `"inf"`.
    pub fn to_json(self) -> serde_json::Value {
        match self {
            ExtNat::Fin(v) => serde_json::Value::from(v),
            ExtNat::Inf => serde_json::Value::from("inf"),
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Fin(v)
    }
}

/// Size guards for the exponential-cost operations.
///
/// Every guard is overridable; exceeding one yields an explicit error or an
/// explicit skipped result, never a silent approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest vertex count for which a Cayley graph is materialized.
    pub max_vertices: usize,
    /// Largest vertex count for the exact clique solver.
    pub max_clique_vertices: usize,
    /// Largest vertex count for the exact independence solver.
    pub max_alpha_vertices: usize,
    /// Largest matrix count `|S|^(k*k)` for the brute-force unit scan.
    pub max_bruteforce: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_vertices: 1 << 14,
            max_clique_vertices: 1 << 14,
            max_alpha_vertices: 1 << 10,
            max_bruteforce: 1 << 16,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extnat_order_and_display() {
        assert!(ExtNat::Fin(7) < ExtNat::Inf);
        assert!(ExtNat::Fin(3) < ExtNat::Fin(4));
        assert_eq!(ExtNat::Inf.to_string(), "inf");
        assert_eq!(ExtNat::Fin(12).to_string(), "12");
        assert_eq!(ExtNat::Inf.to_json(), serde_json::json!("inf"));
        assert_eq!(ExtNat::Fin(0).to_json(), serde_json::json!(0));
    }
}
