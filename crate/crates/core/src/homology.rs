//! Exact linear algebra on sparse integer chain complexes.
//!
//! Ranks are computed by column reduction: each column is reduced against
//! earlier pivots until its lowest nonzero row is new or the column vanishes.
//! Over GF(2) columns are sorted row lists combined by symmetric difference,
//! over GF(p) they carry residues, and over the rationals they stay integral
//! (fraction-free combination followed by division by the content).
//!
//! Betti numbers reduce the boundary maps from the top degree down. A `j`-cell
//! that is the pivot row of a reduced column of `∂_{j+1}` is the lowest row of
//! a boundary, so its own column in `∂_j` reduces to zero and is skipped.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::grid::{Board, FVector};

/// Coefficient field for ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    /// An odd prime.
    Prime(u64),
    Rational,
}

impl Field {
    /// GF(p) for a prime `p`; `2` gives [`Field::Gf2`].
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(if p == 2 { Field::Gf2 } else { Field::Prime(p) })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => write!(f, "gf2"),
            Field::Prime(p) => write!(f, "gf{p}"),
            Field::Rational => write!(f, "rational"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse integer matrix as `(row, col, value)` triplets sorted by row then
/// column, without zeros or duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(u32, u32, i64)>,
}

impl SparseMatrix {
    /// Duplicate positions are summed; entries outside the shape panic.
    pub fn from_triplets(rows: usize, cols: usize, mut entries: Vec<(u32, u32, i64)>) -> Self {
        for &(r, c, _) in &entries {
            assert!((r as usize) < rows && (c as usize) < cols, "entry ({r},{c}) outside {rows}x{cols}");
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        entries.dedup_by(|b, a| {
            if (a.0, a.1) == (b.0, b.1) {
                a.2 += b.2;
                true
            } else {
                false
            }
        });
        entries.retain(|e| e.2 != 0);
        SparseMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_triplets(k, k, (0..k as u32).map(|i| (i, i, 1)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(u32, u32, i64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Columns as row-sorted `(row, value)` lists.
    pub fn columns(&self) -> Vec<Vec<(u32, i64)>> {
        let mut cols = alloc::vec![Vec::new(); self.cols];
        for &(r, c, v) in &self.entries {
            cols[c as usize].push((r, v));
        }
        cols
    }

    /// `self * other` with overflow detection.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                rows: other.rows,
                cols: self.cols,
            });
        }
        // rows of `other` indexed by row
        let mut other_rows: Vec<Vec<(u32, i64)>> = alloc::vec![Vec::new(); other.rows];
        for &(r, c, v) in &other.entries {
            other_rows[r as usize].push((c, v));
        }
        let mut out = Vec::new();
        let mut acc: hashbrown::HashMap<u32, i64> = hashbrown::HashMap::new();
        let mut i = 0;
        while i < self.entries.len() {
            let row = self.entries[i].0;
            acc.clear();
            while i < self.entries.len() && self.entries[i].0 == row {
                let (_, k, a) = self.entries[i];
                for &(c, b) in &other_rows[k as usize] {
                    let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                    let slot = acc.entry(c).or_insert(0);
                    *slot = slot.checked_add(prod).ok_or(Error::Overflow)?;
                }
                i += 1;
            }
            out.extend(acc.iter().filter(|e| *e.1 != 0).map(|(&c, &v)| (row, c, v)));
        }
        Ok(SparseMatrix::from_triplets(self.rows, other.cols, out))
    }
}

/// Rank of an integer matrix over `field`.
pub fn rank(matrix: &SparseMatrix, field: Field) -> usize {
    let skip = alloc::vec![false; matrix.cols()];
    reduce(matrix, &skip, field).len()
}

// Reduces the non-skipped columns and returns the pivot row of every column
// that survives.
fn reduce(matrix: &SparseMatrix, skip: &[bool], field: Field) -> Vec<u32> {
    let columns = matrix.columns();
    match field {
        Field::Gf2 => reduce_gf2(matrix.rows(), columns, skip),
        Field::Prime(p) => reduce_mod_p(matrix.rows(), columns, skip, p),
        Field::Rational => reduce_rational(matrix.rows(), columns, skip),
    }
}

fn reduce_gf2(rows: usize, columns: Vec<Vec<(u32, i64)>>, skip: &[bool]) -> Vec<u32> {
    let mut pivot_of_row: Vec<u32> = alloc::vec![u32::MAX; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    let mut lows = Vec::new();
    let mut scratch = Vec::new();
    for (j, col) in columns.into_iter().enumerate() {
        if skip[j] {
            continue;
        }
        let mut col: Vec<u32> = col.into_iter().filter(|&(_, v)| v % 2 != 0).map(|(r, _)| r).collect();
        while let Some(&low) = col.last() {
            let k = pivot_of_row[low as usize];
            if k == u32::MAX {
                pivot_of_row[low as usize] = reduced.len() as u32;
                lows.push(low);
                break;
            }
            symmetric_difference(&col, &reduced[k as usize], &mut scratch);
            core::mem::swap(&mut col, &mut scratch);
        }
        if !col.is_empty() {
            reduced.push(col);
        }
    }
    lows
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn reduce_mod_p(rows: usize, columns: Vec<Vec<(u32, i64)>>, skip: &[bool], p: u64) -> Vec<u32> {
    let mut pivot_of_row: Vec<u32> = alloc::vec![u32::MAX; rows];
    // pivot columns are scaled so their lowest entry is 1
    let mut reduced: Vec<Vec<(u32, u64)>> = Vec::new();
    let mut lows = Vec::new();
    let mut scratch = Vec::new();
    for (j, col) in columns.into_iter().enumerate() {
        if skip[j] {
            continue;
        }
        let mut col: Vec<(u32, u64)> = col
            .into_iter()
            .map(|(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, lv)) = col.last() {
            let k = pivot_of_row[low as usize];
            if k == u32::MAX {
                let inv = inverse_mod(lv, p);
                for e in &mut col {
                    e.1 = e.1 * inv % p;
                }
                pivot_of_row[low as usize] = reduced.len() as u32;
                lows.push(low);
                break;
            }
            // col -= lv * pivot
            let piv = &reduced[k as usize];
            scratch.clear();
            let (mut a, mut b) = (0, 0);
            while a < col.len() || b < piv.len() {
                let take_a = b >= piv.len() || (a < col.len() && col[a].0 < piv[b].0);
                let take_b = a >= col.len() || (b < piv.len() && piv[b].0 < col[a].0);
                if take_a {
                    scratch.push(col[a]);
                    a += 1;
                } else if take_b {
                    scratch.push((piv[b].0, (p - lv * piv[b].1 % p) % p));
                    b += 1;
                } else {
                    let v = (col[a].1 + p - lv * piv[b].1 % p) % p;
                    if v != 0 {
                        scratch.push((col[a].0, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            scratch.retain(|e| e.1 != 0);
            core::mem::swap(&mut col, &mut scratch);
        }
        if !col.is_empty() {
            reduced.push(col);
        }
    }
    lows
}

fn reduce_rational(rows: usize, columns: Vec<Vec<(u32, i64)>>, skip: &[bool]) -> Vec<u32> {
    let mut pivot_of_row: Vec<u32> = alloc::vec![u32::MAX; rows];
    let mut reduced: Vec<Vec<(u32, BigInt)>> = Vec::new();
    let mut lows = Vec::new();
    for (j, col) in columns.into_iter().enumerate() {
        if skip[j] {
            continue;
        }
        let mut col: Vec<(u32, BigInt)> = col.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect();
        while let Some((low, lv)) = col.last().cloned() {
            let k = pivot_of_row[low as usize];
            if k == u32::MAX {
                pivot_of_row[low as usize] = reduced.len() as u32;
                lows.push(low);
                break;
            }
            // col <- pv * col - lv * pivot, then divide out the content
            let piv = &reduced[k as usize];
            let pv = &piv.last().unwrap().1;
            let mut next: Vec<(u32, BigInt)> = Vec::with_capacity(col.len() + piv.len());
            let (mut a, mut b) = (0, 0);
            while a < col.len() || b < piv.len() {
                let ra = col.get(a).map(|e| e.0).unwrap_or(u32::MAX);
                let rb = piv.get(b).map(|e| e.0).unwrap_or(u32::MAX);
                let (row, v) = if ra < rb {
                    a += 1;
                    (ra, pv * &col[a - 1].1)
                } else if rb < ra {
                    b += 1;
                    (rb, -(&lv * &piv[b - 1].1))
                } else {
                    a += 1;
                    b += 1;
                    (ra, pv * &col[a - 1].1 - &lv * &piv[b - 1].1)
                };
                if !v.is_zero() {
                    next.push((row, v));
                }
            }
            let content = next.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.1));
            if !content.is_zero() && content.abs() != BigInt::from(1) {
                for e in &mut next {
                    e.1 /= &content;
                }
            }
            col = next;
        }
        if !col.is_empty() {
            reduced.push(col);
        }
    }
    lows
}

/// Graded cell counts with boundary maps `∂_j : C_j -> C_{j-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    // boundaries[0] is the zero map out of C_0
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.len() != dims.len() {
            return Err(Error::Shape {
                rows: boundaries.len(),
                cols: dims.len(),
            });
        }
        for (d, m) in boundaries.iter().enumerate() {
            let rows = if d == 0 { 0 } else { dims[d - 1] };
            if m.rows() != rows || m.cols() != dims[d] {
                return Err(Error::Shape {
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundary(&self, d: usize) -> Option<&SparseMatrix> {
        self.boundaries.get(d)
    }

    pub fn euler_characteristic(&self) -> i64 {
        let v: Vec<u64> = self.dims.iter().map(|&d| d as u64).collect();
        crate::grid::alternating_sum(&v)
    }

    /// Verifies `∂_{j} ∘ ∂_{j+1} = 0` over the integers.
    pub fn check_square_zero(&self) -> Result<()> {
        for d in 2..self.boundaries.len() {
            if !self.boundaries[d - 1].checked_mul(&self.boundaries[d])?.is_zero() {
                return Err(Error::BoundarySquare(d));
            }
        }
        Ok(())
    }

    /// Ranks of every `∂_j` (index 0 is always 0).
    pub fn ranks(&self, field: Field) -> Vec<usize> {
        let top = self.dims.len();
        let mut ranks = alloc::vec![0usize; top];
        let mut cleared: Vec<bool> = Vec::new();
        for d in (1..top).rev() {
            let skip = if cleared.len() == self.dims[d] {
                core::mem::take(&mut cleared)
            } else {
                alloc::vec![false; self.dims[d]]
            };
            let lows = reduce(&self.boundaries[d], &skip, field);
            ranks[d] = lows.len();
            cleared = alloc::vec![false; self.dims[d - 1]];
            for low in lows {
                cleared[low as usize] = true;
            }
        }
        ranks
    }

    pub fn betti(&self, field: Field) -> BettiVector {
        let ranks = self.ranks(field);
        let values = (0..self.dims.len())
            .map(|d| {
                let next = ranks.get(d + 1).copied().unwrap_or(0);
                (self.dims[d] - ranks[d] - next) as u64
            })
            .collect();
        BettiVector::new(values, field)
    }
}

/// Betti numbers over a field, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector {
    values: Vec<u64>,
    field: Field,
}

impl BettiVector {
    pub fn new(mut values: Vec<u64>, field: Field) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        BettiVector { values, field }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, j: usize) -> u64 {
        self.values.get(j).copied().unwrap_or(0)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn euler_characteristic(&self) -> i64 {
        crate::grid::alternating_sum(&self.values)
    }
}

/// Largest degree in which homology of `C(n;p,q)` can be nonzero:
/// `min(pq - n, n, floor(pq / 3))`, or `None` for an empty space.
pub fn vanishing_bound(n: usize, board: Board) -> Option<usize> {
    let area = board.area();
    if n > area {
        return None;
    }
    Some((area - n).min(n).min(area / 3))
}

/// One line of an [`AuditReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: alloc::string::String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: alloc::string::String) {
        self.checks.push(AuditCheck { name, passed, detail });
    }
}

/// Checks Betti numbers of `(n, p, q)` against the vanishing bounds, the Euler
/// characteristic of the f-vector and, when given, the Morse inequalities.
pub fn audit(n: usize, board: Board, betti: &BettiVector, fvector: &FVector, morse_counts: Option<&[usize]>) -> AuditReport {
    use alloc::format;
    let mut report = AuditReport::default();
    let area = board.area();
    let bound = vanishing_bound(n, board);
    let high: Vec<usize> = (0..betti.values().len())
        .filter(|&j| betti.get(j) != 0 && bound.is_none_or(|b| j > b))
        .collect();
    report.push(
        "vanishing",
        high.is_empty(),
        match bound {
            Some(b) => format!("nonzero above min(pq-n, n, pq/3) = min({}, {}, {}) = {b}: {:?}", area - n, n, area / 3, high),
            None => format!("n > pq, homology must vanish: {:?}", high),
        },
    );
    let chi_f = fvector.euler_characteristic();
    let chi_b = betti.euler_characteristic();
    report.push("euler", chi_f == chi_b, format!("f-vector {chi_f}, betti {chi_b}"));
    report.push(
        "top dimension",
        fvector.counts().len() <= bound.map_or(0, |_| (area - n).min(2 * n) + 1),
        format!("f-vector length {}", fvector.counts().len()),
    );
    if let Some(m) = morse_counts {
        let bad: Vec<usize> = (0..betti.values().len().max(m.len()))
            .filter(|&j| (m.get(j).copied().unwrap_or(0) as u64) < betti.get(j))
            .collect();
        report.push("morse inequalities", bad.is_empty(), format!("m = {m:?}, violated at {bad:?}"));
        let chi_m = crate::grid::alternating_sum(&m.iter().map(|&x| x as u64).collect::<Vec<_>>());
        report.push("morse euler", chi_m == chi_b, format!("critical cells {chi_m}, betti {chi_b}"));
    }
    report
}
