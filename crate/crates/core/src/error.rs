//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by encoding, evolution and experiment operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The number cannot be encoded as a factorization instance.
    #[error("invalid instance N={number}: {reason}")]
    InvalidInstance { number: u64, reason: &'static str },

    /// A basis index fell outside the register of the instance.
    #[error("basis index {index} out of range for {qubits} qubits")]
    IndexOutOfRange { index: usize, qubits: usize },

    /// State and diagonal sizes disagree.
    #[error("dimension mismatch: state has {state} amplitudes, diagonal has {diagonal}")]
    DimensionMismatch { state: usize, diagonal: usize },

    /// Requested register size is outside the supported range.
    #[error("qubit count {qubits} outside supported range 1..={max}")]
    QubitCountUnsupported { qubits: usize, max: usize },

    /// A cost value does not fit the 64-bit cost type.
    #[error("cost value overflows the 64-bit cost type for N={number}")]
    CostOverflow { number: u64 },

    /// The integrator let the state norm drift beyond tolerance.
    #[error("norm drift {drift:.3e} exceeds tolerance {tolerance:.3e}; reduce the step-size factor")]
    NormDrift { drift: f64, tolerance: f64 },

    /// Dense diagonalization was requested above its size cap.
    #[error("{qubits} qubits is too large for dense diagonalization (max {max})")]
    TooLargeForDense { qubits: usize, max: usize },

    /// The implicit-shift eigenvalue iteration did not converge.
    #[error("eigenvalue iteration failed to converge")]
    EigenNonConvergence,

    /// No odd semiprime exists at the requested register size.
    #[error("no odd semiprime exists for qubit budget {budget}")]
    NoInstanceExists { budget: usize },

    /// The target probability window could not be reached.
    #[error("probability window [{lo}, {hi}] unreachable: {reason} ({} probes)", probes.len())]
    WindowUnreachable {
        lo: f64,
        hi: f64,
        reason: String,
        /// Every `(time, probability)` pair evaluated before giving up.
        probes: Vec<(f64, f64)>,
    },

    /// Too few distinct abscissas for a quadratic fit.
    #[error("quadratic fit needs at least 3 distinct abscissas, got {distinct}")]
    RankDeficientFit { distinct: usize },

    /// A schedule or evolution parameter failed validation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
