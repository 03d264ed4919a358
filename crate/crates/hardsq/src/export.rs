//! Plain-text vertex export.
//!
//! The 0-cells of `X(n;p,q)` are exactly the integer configurations: `n`
//! distinct board squares, one per label. The vertex list writes one per
//! line as `x1 y1 x2 y2 ... xn yn`, in lexicographic order of that integer
//! tuple, so the file is the characteristic function of the complex's vertex
//! set inside the integer grid `([1,p] x [1,q])^n`. A cell belongs to the
//! complex iff all of its vertices do, so this is enough to rebuild it.

use std::io::Write;

use hardsq_core::grid::{f0_closed_form, Apexes};
use hardsq_core::Board;

use crate::error::Result;

/// Writes every integer configuration; refuses (exit 3) if there are more
/// than `cap`. Returns the number of lines written.
pub fn write_vertex_list<W: Write>(n: usize, board: Board, cap: u64, mut out: W) -> Result<u64> {
    let f0 = f0_closed_form(n, board);
    if f0 > cap as u128 {
        return Err(hardsq_core::Error::CellCap {
            cells: u64::try_from(f0).unwrap_or(u64::MAX),
            cap,
        }
        .into());
    }
    let mut lines = 0;
    let mut line = String::new();
    for apex in Apexes::new(n, board) {
        line.clear();
        for (i, (c, r)) in apex.corners().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&c.to_string());
            line.push(' ');
            line.push_str(&r.to_string());
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
        lines += 1;
    }
    out.flush()?;
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(n: usize, p: usize, q: usize) -> String {
        let mut buf = Vec::new();
        write_vertex_list(n, Board::new(p, q).unwrap(), 1000, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn single_square() {
        assert_eq!(list(1, 2, 2), "1 1\n1 2\n2 1\n2 2\n");
    }

    #[test]
    fn pairs_are_sorted() {
        let text = list(2, 2, 2);
        let rows: Vec<Vec<u32>> = text
            .lines()
            .map(|l| l.split(' ').map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), 12);
        assert!(rows.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cap() {
        let err = write_vertex_list(3, Board::new(3, 3).unwrap(), 503, std::io::sink()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
