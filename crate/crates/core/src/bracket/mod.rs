//! Hochschild cochains on the twisted product resolution and the operations on them.

pub mod cochain;
pub mod ops;
pub mod pbw;
pub mod solve;

pub use cochain::Cochain;
pub use ops::{bracket, circle, coboundary, cup, eval, eval_chain, is_cocycle, unit_cochain};
pub use pbw::{pbw_check, ClassReport};
pub use solve::{class_equal, solve_any, solve_coboundary, unknowns, ClassComparison, CoboundarySolution};
