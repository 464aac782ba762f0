use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet must have {expected} labels, got {found}")]
    AlphabetSize { expected: usize, found: usize },
    #[error("duplicate alphabet label {0:?}")]
    DuplicateLabel(String),
    #[error("symbol {symbol} at position {position} is outside an alphabet of {size} labels")]
    SymbolOutOfRange {
        position: usize,
        symbol: u8,
        size: usize,
    },
    #[error("cannot parse word: unknown label at position {0}")]
    UnknownLabel(usize),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("point {0:?} is not in the graph")]
    UnknownPoint(Vec<i64>),
    #[error("word index {index} for slot {slot} is negative; increase the offset")]
    NegativeIndex { slot: usize, index: i64 },
    #[error("word index {index} for slot {slot} exceeds the generated window of {window}")]
    IndexBeyondWindow {
        slot: usize,
        index: i64,
        window: usize,
    },
    #[error("point {0:?} is outside the chosen tensor component")]
    OutsideComponent(Vec<i64>),
    #[error("window of {len} symbols is too small, need at least {needed}")]
    WindowTooSmall { len: usize, needed: usize },
    #[error("colored graph carries no vertex type metadata")]
    MissingTypes,
    #[error("coloring does not match the graph: {0}")]
    ColoringMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
