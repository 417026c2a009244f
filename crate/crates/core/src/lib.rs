pub mod algebra;
pub mod bracket;
pub mod checks;
pub mod commands;
pub mod demo;
pub mod error;
pub mod resolutions;
pub mod session;
pub mod twisted;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::algebra::{FiniteMatrixGroup, Fp, Matrix, SkewRing};

    pub fn transvection(p: u64) -> SkewRing {
        let fp = Fp::new(p).unwrap();
        let g = Matrix::from_rows(&[vec![1, 1], vec![0, 1]], &fp).unwrap();
        let group = FiniteMatrixGroup::generate(fp, 2, vec![g], 1000).unwrap();
        SkewRing::new(fp, vec!["v".into(), "w".into()], group)
    }
}
