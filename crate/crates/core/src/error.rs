use thiserror::Error;

use crate::invariants::Induced2K2Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range 63..=126")]
    BadCharacter { byte: u8, offset: usize },
    #[error("malformed graph6 size prefix")]
    BadSizePrefix,
    #[error("graph6 body has {found} bytes, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("expected a single graph, found several lines")]
    MultipleGraphs,
    #[error("graph6 size {0} is too large to materialize")]
    TooLarge(u64),
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("DIMACS input has no `p edge` problem line")]
    MissingProblemLine,
    #[error("read error: {0}")]
    Io(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has color {color} outside the palette of size {palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
    #[error("coloring is improper on edge ({0}, {1})")]
    Improper(usize, usize),
    #[error("vertex {0} is already colored")]
    AlreadyColored(usize),
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    #[error("vertex {vertex} has color {color}, not one of the chain colors {i} and {j}")]
    NotInChainColors {
        vertex: usize,
        color: usize,
        i: usize,
        j: usize,
    },
    #[error("chain colors must differ (both are {0})")]
    EqualChainColors(usize),
    #[error("chain is stale: vertex {0} no longer matches the coloring")]
    StaleChain(usize),
    #[error("graph is not {0}-colorable")]
    NotColorable(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2K2-free: {0:?}")]
    Not2K2Free(Induced2K2Witness),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} is outside the supported range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
}
