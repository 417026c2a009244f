//! The two ingredient resolutions: reduced bar `C` of `kG` and Koszul `D` of `S(V)`.

pub mod bar;
pub mod koszul;

pub use bar::{BarTensor, ChainC};
pub use koszul::{ChainD, ContractionOrder, KoszulHomotopy, KoszulTensor};
