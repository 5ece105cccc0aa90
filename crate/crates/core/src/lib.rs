//! Exact-arithmetic toolkit for additive structures on toric Fano varieties.
//!
//! Three subsystems share one crate:
//!
//! * [`lattice`] — an exact polytope kernel (facets, edges, duality,
//!   smoothness, reflexivity) generic over the integer scalar;
//! * [`additivity`] — the inscribed-in-a-rectangle criterion with
//!   machine-checkable witness/refutation certificates, plus anticanonical
//!   boundary coefficients;
//! * [`algebra`] — finite local algebras over Q(i), truncated exponentials
//!   and symbolic verification of unipotent representation families;
//! * [`engine`] — a provenance-tracked fact graph over Fano threefold
//!   families with blow-down/product propagation rules;
//! * [`db`] — the built-in polytope dataset and ".poly" ingestion.
//!
//! The lattice kernel is generic over [`num::LatticeInt`]; the aliases below
//! fix the default arbitrary-precision instantiation used by the dataset,
//! the engine and the CLI.

pub mod additivity;
pub mod algebra;
pub mod db;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod num;

pub use error::{Error, Result};

/// Default integer scalar: arbitrary precision.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rat = num_rational::Ratio<Int>;

pub type Vector = lattice::LatticeVector<Int>;
pub type Polytope = lattice::LatticePolytope<Int>;
pub type Facet = lattice::Facet<Int>;
pub type VertexFigure = lattice::VertexFigure<Int>;
pub type NormalFan = lattice::NormalFan<Int>;
pub type InscribedVerdict = additivity::InscribedVerdict<Int>;
pub type BoundaryProfile = additivity::BoundaryProfile<Int>;
