use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: q={left} vs q={right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("symbol {symbol} out of range for alphabet size {q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} needs {required} but the enumeration cap is {cap}")]
    CapExceeded {
        what: &'static str,
        required: String,
        cap: u64,
    },

    #[error("exact constant-weight value for A(n={n}, d={d}, w={w}) is outside the search limits; use upper mode")]
    NeedsUpperMode { n: usize, d: usize, w: usize },

    #[error("search budget of {budget} nodes exhausted before the maximum was certified")]
    BudgetExceeded { budget: u64 },

    #[error("alphabet too small: construction needs q >= {required}, got q={got}")]
    AlphabetTooSmall { required: u64, got: u32 },

    #[error("word {word} is not within {s} insertions and {t} deletions of the center")]
    NotInBall { word: String, s: usize, t: usize },

    #[error("two list members map to the same support {support}; minimum distance must exceed 2s")]
    EncodingCollision { support: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
