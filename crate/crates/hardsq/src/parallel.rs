//! Thread-parallel Morse builds. Each critical cell's flow is an independent
//! job; results are re-sorted by cell, so output does not depend on the
//! number of workers.

use std::fmt;
use std::str::FromStr;

use hardsq_core::morse::morse_boundary;
use hardsq_core::{critical_cells, oracle, BettiVector, Board, Field, MorseComplex, MorseConfig};
use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};

/// How a Betti vector is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Morse complex of the instance itself.
    #[default]
    Morse,
    /// Full cubical complex, no matching.
    Direct,
    /// Morse complex on the `m x m` board, `m = max(n, p, q)`, restricted.
    Restrict,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "morse" => Ok(Method::Morse),
            "direct" => Ok(Method::Direct),
            "restrict" => Ok(Method::Restrict),
            _ => Err(Error::Invalid(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Morse => "morse",
            Method::Direct => "direct",
            Method::Restrict => "restrict",
        })
    }
}

/// Morse complex built on the current rayon pool.
pub fn morse_complex(n: usize, board: Board, cfg: &MorseConfig) -> Result<MorseComplex> {
    let critical = critical_cells(n, board);
    let boundaries = critical
        .par_iter()
        .map(|c| morse_boundary(c, cfg))
        .collect::<hardsq_core::Result<Vec<_>>>()?;
    Ok(MorseComplex::assemble(n, board, critical, boundaries)?)
}

/// Morse complex of `(n; p, q)` cut out of the complex on a square board.
pub fn restricted_morse(n: usize, board: Board, cfg: &MorseConfig) -> Result<MorseComplex> {
    let side = n.max(board.p()).max(board.q()).max(1);
    let big = morse_complex(n, Board::new(side, side)?, cfg)?;
    Ok(big.restrict(board.p(), board.q())?)
}

/// Betti vector by the chosen method, on `config`'s thread pool.
pub fn betti(n: usize, board: Board, field: Field, method: Method, config: &Config) -> Result<BettiVector> {
    let pool = config.thread_pool()?;
    pool.install(|| match method {
        Method::Morse => Ok(morse_complex(n, board, &config.morse())?.chain_complex().betti(field)),
        Method::Restrict => Ok(restricted_morse(n, board, &config.morse())?.chain_complex().betti(field)),
        Method::Direct => Ok(oracle::direct_betti(n, board, field, config.cell_cap)?),
    })
}
