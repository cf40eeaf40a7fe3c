use thiserror::Error;

/// Errors raised by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("relator {0} has odd length; no parity homomorphism exists")]
    OddRelator(String),
    #[error("relator {0} is not of alternating form")]
    NotAlternating(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("invalid argument: {0}")]
    InvalidArg(String),
    #[error("line {line}: slot already used ({detail})")]
    DuplicateSlot { line: usize, detail: String },
    #[error("line {line}: edge label {label} is unmatched")]
    UnmatchedEdge { line: usize, label: String },
    #[error("line {line}: bad over flag {flag:?}")]
    BadOverFlag { line: usize, flag: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown crossing {0}")]
    UnknownCrossing(String),
    #[error("unknown region {0}")]
    UnknownRegion(String),
    #[error("unknown arc {0}")]
    UnknownArc(String),
    #[error("component containing crossing {0} has positive genus; classical regions are undefined")]
    NotClassical(String),
    #[error("diagram is not checkerboard colorable")]
    NotColorable,
    #[error("diagram has a component without an orientation seed")]
    MissingOrientation,
    #[error("illegal move site: {0}")]
    IllegalSite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
