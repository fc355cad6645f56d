use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong constructing states, matrices, channels
/// or sweep configurations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |A[{row},{col}] - conj(A[{col},{row}])| = {deviation:.3e} exceeds {tolerance:.1e}")]
    NonHermitian {
        row: usize,
        col: usize,
        deviation: f64,
        tolerance: f64,
    },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} below -{clamp:.1e}")]
    NotPositiveSemidefinite { eigenvalue: f64, clamp: f64 },

    #[error("trace is {trace:.17} instead of 1")]
    TraceNotOne { trace: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix dimension {dim} is not a power of two")]
    NotQubitSized { dim: usize },

    #[error("qubit index {index} out of range for {qubits} qubits")]
    QubitIndexOutOfRange { index: usize, qubits: usize },

    #[error("qubit index {index} listed more than once")]
    DuplicateQubitIndex { index: usize },

    #[error("{name} = {value} outside [{min}, {max}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("{0}")]
    UnsupportedClosedForm(String),

    #[error("input Bloch vector has norm {norm:.12}, expected a unit vector")]
    NotUnitVector { norm: f64 },

    #[error("channel is invalid: {0}")]
    InvalidChannel(String),

    #[error("measure `{measure}` is incompatible with target `{target}`")]
    IncompatibleMeasure { measure: String, target: String },

    #[error("sweep range is degenerate: {0}")]
    DegenerateSweep(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
