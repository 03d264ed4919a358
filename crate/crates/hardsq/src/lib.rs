//! Files, configuration and parallel drivers around [`hardsq_core`].
//!
//! The core crate is `no_std` and single-threaded; this crate adds the thread
//! pool, TOML/environment configuration, JSON and CSV formats and the
//! invariant suites behind the `hardsq` binary.

pub mod config;
pub mod error;
pub mod export;
pub mod json;
pub mod parallel;
pub mod report;
pub mod table;
pub mod verify;

pub use config::Config;
pub use error::{Error, Result};
pub use parallel::Method;

use hardsq_core::{Board, Field};

/// Parses `gf2`, `gf<prime>` or `rational`.
pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim().to_ascii_lowercase();
    match s.as_str() {
        "gf2" => Ok(Field::Gf2),
        "rational" | "q" => Ok(Field::Rational),
        _ => {
            let p = s
                .strip_prefix("gf")
                .and_then(|d| d.parse::<u64>().ok())
                .ok_or_else(|| Error::Invalid(format!("unknown field {s:?}")))?;
            Ok(Field::prime(p)?)
        }
    }
}

/// Validates an instance the way every command does.
pub fn instance(n: usize, p: usize, q: usize) -> Result<Board> {
    if n > hardsq_core::MAX_PIECES {
        return Err(hardsq_core::Error::TooManyPieces {
            n,
            max: hardsq_core::MAX_PIECES,
        }
        .into());
    }
    Ok(Board::new(p, q)?)
}

/// Space-separated integers.
pub fn join<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
