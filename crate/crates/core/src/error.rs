use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("radius exponent must be positive, got {0}")]
    InvalidRadius(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {0}")]
    Io(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("antisymmetry violated at (i={i}, j={j}, k={k})")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },
    #[error("Jacobi identity violated at ({i},{j},{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("structure constant c[{i}][{j}][{k}] = {value} is not an integer")]
    NonIntegralConstant { i: usize, j: usize, k: usize, value: String },
    #[error("unknown preset {0:?} (expected abelian(d), heisenberg, sl2, borel2)")]
    UnknownPreset(String),
    #[error("module action is not compatible with the bracket at ({i},{j})")]
    BracketCompatibilityViolation { i: usize, j: usize },

    #[error("principal part of the zero element")]
    ZeroElement,
    #[error("augmentation needs a pure degree-0 chain, found a term of degree {0}")]
    NonZeroDegreeInput(usize),
    #[error("chain is on the wrong side of the PBW isomorphism")]
    WrongSide,
    #[error("homotopy iteration not stationary after {0} steps")]
    NonStationary(usize),
}

impl Error {
    /// Malformed or unreadable input, as opposed to a well-formed input
    /// that fails a mathematical check.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::AntisymmetryViolation { .. }
                | Error::JacobiViolation { .. }
                | Error::NonIntegralConstant { .. }
                | Error::BracketCompatibilityViolation { .. }
                | Error::NonStationary(_)
        )
    }
}
