use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("generator {0} is not invertible mod p")]
    NonInvertibleGenerator(usize),
    #[error("group closure exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("matrix has wrong shape: expected {expected}x{expected}")]
    BadShape { expected: usize },
    #[error("chain has homological degree {0}, too low for a differential")]
    DegreeTooLow(usize),
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("cochain is not homogeneous of internal degree {0}")]
    InhomogeneousInput(i64),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid session: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
