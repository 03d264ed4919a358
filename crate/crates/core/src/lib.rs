//! Homology of spaces of non-overlapping labeled unit squares on a rectangular
//! board.
//!
//! The configuration space of `n` labeled unit squares in a `p` by `q`
//! rectangle deformation retracts onto a cubical complex `X(n;p,q)` whose
//! cells are arrangements of non-overlapping board rectangles ("pieces").
//! This crate builds that complex, runs a discrete Morse matching organised
//! around the *apex* of each cell (every piece replaced by its upper-right
//! corner), and reduces the resulting Morse complex over GF(2), GF(p) or the
//! rationals.
//!
//! * [`grid`] - pieces, arrangements, cubical boundary, enumeration, f-vectors.
//! * [`apex`] - apex graphs, their path decomposition, the cell/independent-set
//!   bijection and the half-square allocation.
//! * [`morse`] - the string matching, critical cells, gradient flow and
//!   restriction of Morse complexes.
//! * [`homology`] - sparse integer chain complexes, exact ranks, Betti numbers
//!   and audits.
//! * [`oracle`] - independent cross-checks: direct cubical homology, the
//!   planar configuration space and regime labels.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod apex;
pub mod error;
pub mod grid;
pub mod homology;
pub mod morse;
pub mod oracle;

pub use apex::{ApexGraph, ApexVertex, HalfSquare, IndependentSet, VertexKind};
pub use error::{Error, Result};
pub use grid::{Apex, Arrangement, Board, FVector, Piece, MAX_PIECES};
pub use homology::{BettiVector, ChainComplex, Field, SparseMatrix};
pub use morse::{GradientStatus, MorseComplex, MorseConfig};
pub use grid::{enumerate_cells, f_vector};
pub use morse::critical_cells;
pub use oracle::{classify_regime, conf_plane_betti, direct_betti, Regime};
