use crate::numerics::SpectralOrder;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("length {0} is not a power of two (at least 2)")]
    InvalidLength(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("vector has zero norm")]
    ZeroNorm,

    #[error("non-finite value at index {0}")]
    NonFinite(usize),

    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("qubit {qubit} out of range for a {qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, qubits: usize },

    #[error("invalid control pattern: {0}")]
    InvalidControls(&'static str),

    #[error("operator is not unitary (max deviation {0:e})")]
    NotUnitary(f64),

    #[error("index array is not a permutation")]
    NotAPermutation,

    #[error("ordering {order:?} is not defined for length {len}")]
    UnsupportedOrdering { order: SpectralOrder, len: usize },

    #[error("expected {expected:?} ordering, found {found:?}")]
    OrderingMismatch {
        expected: SpectralOrder,
        found: SpectralOrder,
    },

    #[error("post-selected outcome is impossible (probability {0:e})")]
    ImpossibleOutcome(f64),

    #[error("operator annihilates the state (norm {0:e})")]
    Annihilation(f64),

    #[error("phase of H[{0}] is undefined because its magnitude is zero")]
    UndefinedPhase(usize),

    #[error("frequency response is not conjugate-symmetric")]
    NotConjugateSymmetric,

    #[error("no constant offset separates the frequency response from zero")]
    NoWorkaroundConstant,

    #[error("expected a strictly positive value, got {0}")]
    NonPositive(f64),

    #[error("impulse response is identically zero")]
    ZeroImpulse,

    #[error("register needs at least {required} qubits, has {found}")]
    TooFewQubits { required: usize, found: usize },
}
