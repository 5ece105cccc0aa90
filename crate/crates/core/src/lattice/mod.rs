//! Exact integer/rational polytope kernel: vertices, facets, edges,
//! duality, smoothness and reflexivity checks.
//!
//! All values are immutable and all operations are pure; nothing here uses
//! floating point.

pub mod format;
pub mod hull;
pub mod matrix;
pub mod polytope;
pub mod vector;

pub use format::{parse_poly, parse_single, write_poly, write_poly_multi, PolyRecord};
pub use hull::facet_enumeration_reference;
pub use polytope::{
    Facet, LatticePolytope, NormalFan, RationalPolytope, Reduction, SmoothnessReport,
    VertexFigure, VertexSmoothness,
};
pub use vector::LatticeVector;
