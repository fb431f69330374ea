use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple Lie algebra type {family}{rank}")]
    InvalidType { family: String, rank: usize },

    #[error("unknown Lie type {0:?}, expected one of A B C D E F G")]
    UnknownFamily(String),

    #[error("weight has {got} labels, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("Weyl group of {algebra} has order {order}, above the cap {cap}")]
    WeylCapExceeded { algebra: String, order: u128, cap: usize },

    #[error("{count} simple objects requested, above the cap {cap}")]
    SimplesCapExceeded { count: usize, cap: usize },

    #[error("{0} requires a simply-laced root system")]
    NotSimplyLaced(String),

    #[error("invalid level: {0}")]
    InvalidLevel(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),

    #[error("Galois exponent {t} is not coprime to the field order {order}")]
    GaloisNotCoprime { t: i64, order: u64 },

    #[error("zero denominator while normalizing {0}")]
    ZeroDenominator(String),

    #[error("fusion coefficient for {0} is not a nonnegative integer")]
    NonIntegerFusion(String),

    #[error("singular matrix")]
    Singular,

    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache format: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by a computational cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::WeylCapExceeded { .. } | Error::SimplesCapExceeded { .. }
        )
    }
}
