//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("state vector norm is {norm:.12}, expected 1 within {tol:e}")]
    NotNormalized { norm: f64, tol: f64 },

    #[error("matrix is not Hermitian: max |A - A†| entry is {max_dev:e}")]
    NotHermitian { max_dev: f64 },

    #[error("trace is {trace:.12}, expected 1 within {tol:e}")]
    NonUnitTrace { trace: f64, tol: f64 },

    #[error("matrix is not positive semidefinite: smallest eigenvalue {min_eigenvalue:e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("matrix is not unitary: max |U†U - I| entry is {max_dev:e}")]
    NotUnitary { max_dev: f64 },

    #[error("Kraus operators violate completeness: max |ΣM†M - I| entry is {max_dev:e}")]
    IncompleteKraus { max_dev: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: usize },

    #[error("register of {qubits} qubits exceeds the supported cap of {max}")]
    RegisterTooLarge { qubits: usize, max: usize },

    #[error("qubit index {index} out of range for a {qubits}-qubit register")]
    QubitIndexOutOfRange { index: usize, qubits: usize },

    #[error("noise parameter {value} outside [0, 1]")]
    NoiseParameterOutOfRange { value: f64 },

    #[error("noise parameter {value} exceeds the 3/4 depolarization point; enable the unphysical override to accept it")]
    UnphysicalNoiseParameter { value: f64 },

    #[error("secret bitstring is empty")]
    EmptySecret,

    #[error("secret bitstring contains invalid character {found:?}; expected '0' or '1'")]
    InvalidSecret { found: char },

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("expectation value has imaginary residue {imag:e}, above tolerance {tol:e}")]
    ExpectationNotReal { imag: f64, tol: f64 },

    #[error("probability {value:e} at outcome {index} is below the negativity tolerance")]
    NegativeProbability { index: usize, value: f64 },

    #[error("distribution entries sum to {sum:.12}, expected 1 within {tol:e}")]
    NotADistribution { sum: f64, tol: f64 },

    #[error("distributions have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("parameter {name} = {value} rejected: {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("sample {value} at position {index} outside the required range {range}")]
    SampleOutOfRange {
        index: usize,
        value: f64,
        range: &'static str,
    },

    #[error("samples have zero variance; no spread to fit")]
    ZeroVariance,

    #[error("sample moments infeasible for a beta fit (common factor {kappa:.6} must be positive)")]
    InfeasibleMoments { kappa: f64 },

    #[error("quadrature did not converge: error estimate {error_estimate:e} after {subdivisions} subdivisions")]
    QuadratureDidNotConverge {
        error_estimate: f64,
        subdivisions: usize,
    },

    #[error("integrand evaluated to a non-finite value at {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("error-parameter rate is non-positive at t = {time}: rate {rate}")]
    NonPositiveRate { time: f64, rate: f64 },

    #[error("sampled expectations require a physical channel; pass-through draws need shots = 0")]
    PassThroughNeedsExactExpectations,

    #[error("calibration document: {detail}")]
    CalibrationParse { detail: String },

    #[error("calibration {record}: missing required field `{field}`")]
    CalibrationMissingField { record: String, field: &'static str },

    #[error("calibration {record}: field `{field}` invalid: {reason}")]
    CalibrationInvalidField {
        record: String,
        field: &'static str,
        reason: String,
    },

    #[error("no record for qubit {qubit} in snapshot")]
    QubitNotFound { qubit: usize },

    #[error("joint counts are all zero")]
    AllZeroCounts,

    #[error("snapshot has no qubit records")]
    EmptySnapshot,

    #[error("window carries no fitted model: {reason}")]
    MissingFit { reason: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
