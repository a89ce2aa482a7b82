use thiserror::Error;

/// Errors produced by the coding, compression and embedding routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("rank {rank} is out of range for {n} symbols (must be below {n}!)")]
    RankOutOfRange { n: usize, rank: String },

    #[error("corrupt payload: {0}")]
    CorruptPayload(String),

    #[error("corrupt code stream: {0}")]
    CorruptStream(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("cover too small: {required} eligible characters required, {available} available")]
    CoverTooSmall { required: usize, available: usize },

    #[error("corrupt stego text: {0}")]
    CorruptStego(String),

    #[error("bit length required: {0}")]
    MissingBitLength(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    /// Short stable identifier, used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::RankOutOfRange { .. } => "rank_out_of_range",
            Error::CorruptPayload(_) => "corrupt_payload",
            Error::CorruptStream(_) => "corrupt_stream",
            Error::Capacity(_) => "capacity",
            Error::CoverTooSmall { .. } => "cover_too_small",
            Error::CorruptStego(_) => "corrupt_stego",
            Error::MissingBitLength(_) => "missing_bit_length",
            Error::Parse { .. } => "parse",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
