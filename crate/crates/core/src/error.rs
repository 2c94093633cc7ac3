use thiserror::Error;

use crate::roots::PositiveRoot;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty Dyck word")]
    EmptyWord,

    #[error("illegal character {found:?} at position {position}")]
    IllegalChar { position: usize, found: char },

    #[error("negative prefix at position {position}")]
    NegativePrefix { position: usize },

    #[error("unbalanced word: {ups} up steps and {downs} down steps (ends at position {position})")]
    Unbalanced {
        position: usize,
        ups: usize,
        downs: usize,
    },

    #[error("peak {requested} requested but the path has {available} peaks of maximal height")]
    PeakOutOfRange { requested: usize, available: usize },

    #[error("peak insertion count must be positive")]
    ZeroInsertion,

    #[error("rank {rank} exceeds the supported bound {max}")]
    RankOutOfBounds { rank: usize, max: usize },

    #[error("expected a Dyck path of half-length {expected}, got {found}")]
    HalfLengthMismatch { expected: usize, found: usize },

    #[error("invalid {l}-partition {parts:?}: {reason}")]
    InvalidPartition {
        l: usize,
        parts: Vec<usize>,
        reason: String,
    },

    #[error("cannot parse token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("root [{start},{end}] is not a positive root of rank {rank}")]
    InvalidRoot { start: usize, end: usize, rank: usize },

    #[error("roots {first} and {second} are comparable, not an antichain")]
    NotAnAntichain {
        first: PositiveRoot,
        second: PositiveRoot,
    },

    #[error("root set is not upward closed: {missing} lies above {present} but is missing")]
    NotUpwardClosed {
        present: PositiveRoot,
        missing: PositiveRoot,
    },

    #[error("simple root index {index} is outside 1..={rank}")]
    InvalidSimpleRoot { index: usize, rank: usize },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
}
