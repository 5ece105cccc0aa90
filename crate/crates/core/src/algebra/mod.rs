//! Local algebras over Q(i), truncated exponentials and symbolic
//! verification of the stored unipotent representation families.

pub mod gmatrix;
pub mod local;
pub mod poly;
pub mod rep;
pub mod scalar;

pub use gmatrix::GMatrix;
pub use local::{make_algebra, AlgebraScalar, LocalAlgebra, ALGEBRA_NAMES};
pub use poly::{Mono, MultiPoly};
pub use rep::{
    algebra_for_rep, generated_for_rep, match_paper, paper_rep, registered_quadric, FixedLocus,
    HomomorphismReport, MatchReport, PolyMatrixFamily, REP_NAMES,
};
pub use scalar::Gaussian;
