use thiserror::Error;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("board {p}x{q} is not supported (sides must be in 1..=63)")]
    BoardSize { p: u32, q: u32 },

    #[error("{n} pieces exceed the supported maximum of {max}")]
    TooManyPieces { n: usize, max: usize },

    #[error("piece at ({col},{row}) does not fit on a {p}x{q} board")]
    PieceOffBoard { col: u8, row: u8, p: u8, q: u8 },

    #[error("arrangement is not a cell of X: pieces {0} and {1} overlap")]
    Overlap(usize, usize),

    #[error("apex corners are not pairwise distinct")]
    RepeatedCorner,

    #[error("bit pattern is not an independent set of the apex graph")]
    NotIndependent,

    #[error("string has consecutive ones")]
    ConsecutiveOnes,

    #[error("restriction to {p}x{q} needs p, q <= {n}")]
    RestrictionTooLarge { n: usize, p: usize, q: usize },

    #[error("cell count {cells} exceeds the cap of {cap}")]
    CellCap { cells: u64, cap: u64 },

    #[error("gradient flow exceeded its budget of {budget} steps")]
    FlowBudget { budget: u64 },

    #[error("integer overflow in boundary coefficients")]
    Overflow,

    #[error("boundary matrices do not compose to zero in degree {0}")]
    BoundarySquare(usize),

    #[error("matrix shape {rows}x{cols} does not match the chain groups")]
    Shape { rows: usize, cols: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),
}

pub type Result<T> = core::result::Result<T, Error>;
