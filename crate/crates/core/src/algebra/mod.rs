//! Exact arithmetic: F_p, sparse polynomials, finite matrix groups and the skew group algebra.

pub mod field;
pub mod group;
pub mod lin;
pub mod linalg;
pub mod poly;
pub mod skew;
pub mod wedge;

pub use field::Fp;
pub use group::{FiniteMatrixGroup, GroupIdx, Matrix};
pub use lin::Lin;
pub use poly::{Monomial, Poly};
pub use skew::{SkewElem, SkewRing};
pub use wedge::Wedge;
