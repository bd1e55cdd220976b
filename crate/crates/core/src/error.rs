use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// [`Error::code`] gives a stable token for each variant; the CLI prints it
/// on standard error so scripts can match on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("determinant must be +1 or -1, got {0}")]
    InvalidDeterminant(String),

    #[error("matrix must lie in SL(2,Z), determinant is {0}")]
    NotSpecialLinear(String),

    #[error("matrix is not hyperbolic (trace {0})")]
    NotHyperbolic(String),

    #[error("trace {0} is negative; factor the negated matrix instead")]
    NegativeTrace(String),

    #[error("peeling reached a power of a single generator: {0}")]
    PowerOfOneGenerator(String),

    #[error("power {power} has no isolated fixed points (det(A^n - I) = 0)")]
    NotHyperbolicPower { power: u32 },

    #[error("word {0} must contain both letters R and L")]
    NotMixed(String),

    #[error("word RL is already minimal (trace 3)")]
    AlreadyMinimal,

    #[error("parallelogram for word {0} has M = N; operation needs a generic embedding")]
    DegenerateEmbedding(String),

    #[error("periodic point {point} of period {period} lies on a side of the parallelogram")]
    AmbiguousCrossing { point: String, period: u32 },

    #[error("boundary classes have incoherent orientations: {0}")]
    IncoherentOrientation(String),

    #[error("surface data is inconsistent: {0}")]
    InconsistentSurface(String),

    #[error("certificate check failed: {0}")]
    CertificateFailure(String),

    #[error("unsupported orbifold: {0}")]
    UnsupportedOrbifold(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("ball of radius {radius} is too small for margin {margin}")]
    BallTooSmall { radius: u32, margin: u32 },

    #[error("{0} is too large to enumerate")]
    TooLarge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("cache i/o: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable token.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::InvalidDeterminant(_) => "InvalidDeterminant",
            Error::NotSpecialLinear(_) => "NotSpecialLinear",
            Error::NotHyperbolic(_) => "NotHyperbolic",
            Error::NegativeTrace(_) => "NegativeTrace",
            Error::PowerOfOneGenerator(_) => "PowerOfOneGenerator",
            Error::NotHyperbolicPower { .. } => "NotHyperbolicPower",
            Error::NotMixed(_) => "NotMixed",
            Error::AlreadyMinimal => "AlreadyMinimal",
            Error::DegenerateEmbedding(_) => "DegenerateEmbedding",
            Error::AmbiguousCrossing { .. } => "AmbiguousCrossing",
            Error::IncoherentOrientation(_) => "IncoherentOrientation",
            Error::InconsistentSurface(_) => "InconsistentSurface",
            Error::CertificateFailure(_) => "CertificateFailure",
            Error::UnsupportedOrbifold(_) => "UnsupportedOrbifold",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::BallTooSmall { .. } => "BallTooSmall",
            Error::TooLarge(_) => "TooLarge",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Internal(_) => "InternalError",
            Error::Io(_) => "IoError",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
