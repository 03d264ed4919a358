//! Independent cross-checks for the Morse route.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::grid::{enumerate_cells, f_vector, Arrangement, Board};
use crate::homology::{BettiVector, ChainComplex, Field, SparseMatrix};

/// Default cap on the total cell count of a direct computation.
pub const DEFAULT_CELL_CAP: u64 = 2_000_000;

/// The full cubical chain complex of `X(n;p,q)`; cells in each dimension are
/// numbered in enumeration order.
pub fn direct_chain_complex(n: usize, board: Board, cell_cap: u64) -> Result<ChainComplex> {
    let fv = f_vector(n, board);
    if fv.total() > cell_cap {
        return Err(Error::CellCap {
            cells: fv.total(),
            cap: cell_cap,
        });
    }
    let top = fv.counts().len();
    let mut cells: Vec<Vec<Arrangement>> = (0..top).map(|d| Vec::with_capacity(fv.get(d) as usize)).collect();
    for c in enumerate_cells(n, board) {
        cells[c.dim()].push(c);
    }
    let mut boundaries = Vec::with_capacity(top);
    if top > 0 {
        boundaries.push(SparseMatrix::zero(0, cells[0].len()));
    }
    for d in 1..top {
        let index: HashMap<Arrangement, u32> = cells[d - 1].iter().enumerate().map(|(i, c)| (*c, i as u32)).collect();
        let mut triplets = Vec::with_capacity(cells[d].len() * 2 * d);
        for (j, c) in cells[d].iter().enumerate() {
            for (face, sign) in c.facets() {
                triplets.push((index[&face], j as u32, sign as i64));
            }
        }
        boundaries.push(SparseMatrix::from_triplets(cells[d - 1].len(), cells[d].len(), triplets));
    }
    ChainComplex::new(cells.iter().map(|c| c.len()).collect(), boundaries)
}

/// Betti numbers of `X(n;p,q)` computed without the discrete gradient.
pub fn direct_betti(n: usize, board: Board, field: Field, cell_cap: u64) -> Result<BettiVector> {
    Ok(direct_chain_complex(n, board, cell_cap)?.betti(field))
}

/// Connected components of `X(n;p,q)`, by union-find on its 1-skeleton.
pub fn components(n: usize, board: Board) -> u64 {
    let mut index: HashMap<Arrangement, u32> = HashMap::new();
    let mut edges = Vec::new();
    for c in enumerate_cells(n, board) {
        match c.dim() {
            0 => {
                let k = index.len() as u32;
                index.insert(c, k);
            }
            1 => edges.push(c),
            _ => {}
        }
    }
    let mut parent: Vec<u32> = (0..index.len() as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut count = index.len() as u64;
    for e in edges {
        let ends: Vec<u32> = e.facets().map(|(f, _)| index[&f]).collect();
        let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
        if a != b {
            parent[a as usize] = b;
            count -= 1;
        }
    }
    count
}

/// Betti numbers of the configuration space of `n` labeled points in the
/// plane: coefficients of `(1 + t)(1 + 2t)...(1 + (n-1)t)`.
pub fn conf_plane_betti(n: usize) -> Vec<u64> {
    let mut poly = alloc::vec![1u64];
    for k in 1..n as u64 {
        let mut next = alloc::vec![0u64; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * k;
        }
        poly = next;
    }
    poly
}

/// Homological regime of one Betti number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `β_j = 0`.
    Solid,
    /// Nonzero and different from the planar configuration space.
    Liquid,
    /// Equal to the planar value. Only a necessary condition for the gas
    /// regime, which is about the induced map.
    GasConsistent,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Solid => "solid",
            Regime::Liquid => "liquid",
            Regime::GasConsistent => "gas-consistent",
        })
    }
}

/// Regime of each degree `0..=max(top degree of betti, n - 1)`.
pub fn classify_regime(n: usize, betti: &BettiVector) -> Vec<Regime> {
    let planar = conf_plane_betti(n);
    let len = betti.values().len().max(planar.len());
    (0..len)
        .map(|j| {
            let b = betti.get(j);
            if b == 0 {
                Regime::Solid
            } else if b == planar.get(j).copied().unwrap_or(0) {
                Regime::GasConsistent
            } else {
                Regime::Liquid
            }
        })
        .collect()
}

/// A nonzero Betti number placed in the `(n/pq, j/pq)` plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPoint {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub j: usize,
    pub betti: u64,
    /// `j/pq <= min(1 - n/pq, n/pq, 1/3)`, checked in integers.
    pub inside_region: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessReport {
    pub points: Vec<WitnessPoint>,
    pub failures: Vec<String>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Requires `β_1 != 0` for `(2;2,2)` and `(3;2,2)` and places every nonzero
/// Betti number of the table against the vanishing region.
pub fn nonvanishing_witness_check(table: &[(usize, Board, BettiVector)]) -> WitnessReport {
    let mut report = WitnessReport::default();
    for (n, p, q) in [(2, 2, 2), (3, 2, 2)] {
        match table.iter().find(|(tn, b, _)| (*tn, b.p(), b.q()) == (n, p, q)) {
            Some((_, _, bv)) if bv.get(1) != 0 => {}
            Some(_) => report.failures.push(format!("beta_1({n};{p},{q}) vanishes")),
            None => report.failures.push(format!("({n};{p},{q}) missing from table")),
        }
    }
    for (n, board, bv) in table {
        let area = board.area();
        for (j, &b) in bv.values().iter().enumerate() {
            if b == 0 {
                continue;
            }
            let inside = j + n <= area && j <= *n && 3 * j <= area;
            if !inside {
                report
                    .failures
                    .push(format!("beta_{j}({n};{},{}) = {b} outside the region", board.p(), board.q()));
            }
            report.points.push(WitnessPoint {
                n: *n,
                p: board.p(),
                q: board.q(),
                j,
                betti: b,
                inside_region: inside,
            });
        }
    }
    report
}
