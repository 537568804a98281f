use thiserror::Error;

/// Errors produced by chain construction, diagonalization, and the
/// topology/state analyses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("ambiguous gap label: |C| = q/2 = {half_q} is not unique for even q = {q}")]
    AmbiguousLabel { q: i64, half_q: i64 },

    #[error("gap {gap} is closed at this parameter point (separation {separation:.3e} below {tolerance:.3e})")]
    ClosedGap {
        gap: usize,
        separation: f64,
        tolerance: f64,
    },

    #[error("Chern number of gap {gap} is not grid-stable: {coarse} at {n}x{n} vs {fine} at {n2}x{n2}", n2 = 2 * n)]
    GridUnstable {
        gap: usize,
        coarse: i64,
        fine: i64,
        n: usize,
    },

    #[error("state is not in the localized-doublet regime: top-2 weight {weight:.4} < {required:.4}")]
    NotLocalizedDoublet { weight: f64, required: f64 },

    #[error("pairing bracket for gap {gap} is ambiguous at this phase (cut falls at a singleton or between pairs); try the complementary symmetric phase")]
    BracketingAmbiguous { gap: usize },

    #[error("phase phi = {phi} does not give exact potential degeneracies (2*q*phi must be an integer to {tolerance:.1e}); use phi = k/(2q)")]
    PhiAsymmetric { phi: f64, tolerance: f64 },

    #[error("matrix is not Hermitian: max |H - H^+| = {deviation:.3e}")]
    NonHermitian { deviation: f64 },

    #[error("eigendecomposition failed for {fingerprint}")]
    EigenFailed { fingerprint: String },

    #[error("trial wave vanishes on the state's support (zero norm)")]
    ZeroNormTrial,
}

pub type Result<T> = std::result::Result<T, Error>;
