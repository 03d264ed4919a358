//! JSON formats: complex dumps, Morse complexes, apex graphs and critical-cell
//! dumps. Pieces are written as `[col, row, extend_left, extend_down]` with the
//! flags as 0/1.

use hardsq_core::apex::encode_cell;
use hardsq_core::morse::critical_apex_test;
use hardsq_core::{critical_cells, enumerate_cells, f_vector, Apex, ApexGraph, Arrangement, Board, MorseComplex, Piece, VertexKind};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn piece_row(piece: Piece) -> [u8; 4] {
    [
        piece.col(),
        piece.row(),
        piece.extends_left() as u8,
        piece.extends_down() as u8,
    ]
}

pub fn piece_from_row(row: [u8; 4]) -> Result<Piece> {
    let [c, r, l, d] = row;
    if c > 63 || r > 63 || l > 1 || d > 1 {
        return Err(Error::Dump(format!("malformed piece {row:?}")));
    }
    Ok(Piece::new(c, r, l == 1, d == 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub id: usize,
    pub pieces: Vec<[u8; 4]>,
    pub dim: usize,
}

impl CellJson {
    pub fn new(id: usize, cell: &Arrangement) -> Self {
        CellJson {
            id,
            pieces: cell.pieces().iter().map(|&p| piece_row(p)).collect(),
            dim: cell.dim(),
        }
    }

    /// The cell on `board`, rejecting overlaps, off-board pieces and a wrong
    /// `dim`.
    pub fn to_cell(&self, board: Board) -> Result<Arrangement> {
        let pieces = self.pieces.iter().map(|&r| piece_from_row(r)).collect::<Result<Vec<_>>>()?;
        let cell = Arrangement::cell(board, &pieces)?;
        if cell.dim() != self.dim {
            return Err(Error::Dump(format!("cell {} has dimension {}, not {}", self.id, cell.dim(), self.dim)));
        }
        Ok(cell)
    }
}

/// Every cell of `X(n;p,q)`, grouped by dimension, enumeration order within a
/// dimension; ids count from 0 in that order.
pub fn complex_cells(n: usize, board: Board, cell_cap: u64) -> Result<Vec<CellJson>> {
    let total = f_vector(n, board).total();
    if total > cell_cap {
        return Err(hardsq_core::Error::CellCap { cells: total, cap: cell_cap }.into());
    }
    let mut cells: Vec<Arrangement> = enumerate_cells(n, board).collect();
    cells.sort_by_key(|c| c.dim());
    Ok(cells.iter().enumerate().map(|(i, c)| CellJson::new(i, c)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseJson {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// Critical cells per dimension.
    pub dims: Vec<usize>,
    /// Critical cells; `id` is the row/column index within its dimension.
    pub cells: Vec<CellJson>,
    /// `boundaries[d]` lists `[row, col, coeff]` of `∂_d`.
    pub boundaries: Vec<Vec<(u32, u32, i64)>>,
}

impl MorseJson {
    pub fn new(m: &MorseComplex) -> Self {
        let dims = m.counts();
        let cells = (0..dims.len())
            .flat_map(|d| m.cells(d).iter().enumerate().map(|(i, c)| CellJson::new(i, c)))
            .collect();
        let boundaries = (0..dims.len())
            .map(|d| m.boundary(d).map(|b| b.entries().to_vec()).unwrap_or_default())
            .collect();
        MorseJson {
            n: m.n(),
            p: m.board().p(),
            q: m.board().q(),
            dims,
            cells,
            boundaries,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub kind: String,
    pub col: u8,
    pub row: u8,
    pub owner: u8,
    /// Position with both coordinates doubled.
    pub position: [u16; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexGraphJson {
    pub corners: Vec<[u8; 2]>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub paths: Vec<Vec<usize>>,
    pub independent_sets: u64,
    /// Per-path bit strings of the critical cell, if the apex has one.
    pub critical: Option<Vec<String>>,
}

impl ApexGraphJson {
    pub fn new(apex: &Apex) -> Self {
        let g = ApexGraph::new(apex);
        let vertices = g
            .vertices()
            .iter()
            .map(|v| {
                let (x, y) = v.doubled_position();
                VertexJson {
                    kind: match v.kind {
                        VertexKind::Left => "left",
                        VertexKind::Down => "down",
                    }
                    .into(),
                    col: v.col,
                    row: v.row,
                    owner: v.owner,
                    position: [x, y],
                }
            })
            .collect();
        let critical = critical_apex_test(apex).map(|cell| {
            let set = g.encode(&cell).expect("critical cell has this apex");
            g.path_bits(set)
        });
        ApexGraphJson {
            corners: apex.corners().map(|(c, r)| [c, r]).collect(),
            vertices,
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            paths: g.paths().map(|r| r.collect()).collect(),
            independent_sets: g.independent_set_count(),
            critical,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalCellJson {
    #[serde(flatten)]
    pub cell: CellJson,
    pub apex: Vec<[u8; 2]>,
    /// The independent set, one bit string per apex-graph path.
    pub bits: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalDump {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub counts: Vec<usize>,
    pub cells: Vec<CriticalCellJson>,
}

impl CriticalDump {
    /// Critical cells of `X(n;p,q)` in sorted order.
    pub fn new(n: usize, board: Board) -> Self {
        let cells = critical_cells(n, board);
        let mut counts = Vec::new();
        let cells = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if counts.len() <= c.dim() {
                    counts.resize(c.dim() + 1, 0);
                }
                counts[c.dim()] += 1;
                let (apex, g, set) = encode_cell(c).expect("enumerated cells encode");
                CriticalCellJson {
                    cell: CellJson::new(i, c),
                    apex: apex.corners().map(|(c, r)| [c, r]).collect(),
                    bits: g.path_bits(set),
                }
            })
            .collect();
        CriticalDump {
            n,
            p: board.p(),
            q: board.q(),
            counts,
            cells,
        }
    }

    /// Re-derives every claim in the dump: each cell is the critical cell of
    /// its apex, apex and bit strings match the cell, counts are right and
    /// the list is complete.
    pub fn verify(&self) -> Result<()> {
        let board = crate::instance(self.n, self.p, self.q)?;
        let mut counts = Vec::new();
        let mut seen = Vec::with_capacity(self.cells.len());
        for entry in &self.cells {
            let cell = entry.cell.to_cell(board)?;
            if cell.n() != self.n {
                return Err(Error::Dump(format!("cell {} has {} pieces", entry.cell.id, cell.n())));
            }
            let apex = cell.apex();
            if critical_apex_test(&apex) != Some(cell) {
                return Err(Error::Dump(format!("cell {} is not critical", entry.cell.id)));
            }
            let corners: Vec<[u8; 2]> = apex.corners().map(|(c, r)| [c, r]).collect();
            let g = ApexGraph::new(&apex);
            if corners != entry.apex || g.path_bits(g.encode(&cell)?) != entry.bits {
                return Err(Error::Dump(format!("cell {} has a wrong apex or bits", entry.cell.id)));
            }
            if counts.len() <= cell.dim() {
                counts.resize(cell.dim() + 1, 0);
            }
            counts[cell.dim()] += 1;
            seen.push(cell);
        }
        if counts != self.counts {
            return Err(Error::Dump(format!("counts {:?} do not match cells {:?}", self.counts, counts)));
        }
        seen.sort();
        seen.dedup();
        if seen.len() != self.cells.len() {
            return Err(Error::Dump("duplicate cells".into()));
        }
        if seen != critical_cells(self.n, board) {
            return Err(Error::Dump("critical cells missing".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_rows_round_trip() {
        let p = Piece::new(3, 2, true, false);
        assert_eq!(piece_row(p), [3, 2, 1, 0]);
        assert_eq!(piece_from_row([3, 2, 1, 0]).unwrap(), p);
        assert!(piece_from_row([3, 2, 2, 0]).is_err());
    }

    #[test]
    fn complex_dump_is_grouped_by_dimension() {
        let b = Board::new(2, 2).unwrap();
        let cells = complex_cells(2, b, 100).unwrap();
        assert_eq!(cells.len(), 32);
        assert!(cells.windows(2).all(|w| w[0].dim <= w[1].dim));
        assert!(cells.iter().enumerate().all(|(i, c)| c.id == i));
        assert!(complex_cells(2, b, 31).is_err());
    }

    #[test]
    fn critical_dump_round_trip() {
        let dump = CriticalDump::new(2, Board::new(2, 2).unwrap());
        assert_eq!(dump.counts, [4, 4]);
        let text = serde_json::to_string(&dump).unwrap();
        let back: CriticalDump = serde_json::from_str(&text).unwrap();
        back.verify().unwrap();

        let mut forged = back.clone();
        forged.cells.pop();
        assert!(forged.verify().is_err());
        let mut forged = back;
        forged.cells[0].cell.pieces[0][2] ^= 1;
        assert!(forged.verify().is_err());
    }

    #[test]
    fn apex_graph_dump() {
        let apex = Apex::new(Board::new(2, 2).unwrap(), &[(1, 2), (2, 1)]).unwrap();
        let j = ApexGraphJson::new(&apex);
        assert_eq!(j.vertices.len(), 2);
        assert_eq!(j.edges, [[0, 1]]);
        assert_eq!(j.paths, [vec![0, 1]]);
        assert_eq!(j.independent_sets, 3);
        assert_eq!(j.critical, Some(vec!["01".to_string()]));
    }
}
