//! Cells of the ambient grid complex `G(n;p,q)` and of the hard-squares
//! subcomplex `X(n;p,q)`.
//!
//! A cell of `G(n;p,q)` is a list of `n` pieces, one per labeled square. Each
//! piece is a 1x1, 2x1, 1x2 or 2x2 rectangle of board squares, recorded by its
//! upper-right square (the *corner*) and whether it extends one column to the
//! left and/or one row down. A cell lies in `X(n;p,q)` exactly when no two of
//! its pieces share a board square.

use alloc::vec::Vec;
use core::fmt;

use crate::apex::ApexGraph;
use crate::error::{Error, Result};

/// Largest number of labeled squares an [`Arrangement`] can hold.
pub const MAX_PIECES: usize = 10;

/// Largest supported board side.
pub const MAX_SIDE: usize = 63;

/// Returns `x` when it is an integer and the midpoint of the unit interval
/// containing it otherwise.
pub fn snap(x: f64) -> f64 {
    let t = x as i64 as f64;
    if t == x {
        return x;
    }
    let floor = if x < 0.0 { t - 1.0 } else { t };
    floor + 0.5
}

/// A `p` by `q` board: `p` columns numbered left to right, `q` rows numbered
/// bottom to top, both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Board {
    p: u8,
    q: u8,
}

impl Board {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 || p > MAX_SIDE || q > MAX_SIDE {
            return Err(Error::BoardSize {
                p: p as u32,
                q: q as u32,
            });
        }
        Ok(Board {
            p: p as u8,
            q: q as u8,
        })
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    pub fn area(self) -> usize {
        self.p() * self.q()
    }

    pub fn contains(self, col: u8, row: u8) -> bool {
        col >= 1 && row >= 1 && col <= self.p && row <= self.q
    }

    /// Board squares in lexicographic `(col, row)` order.
    pub fn squares(self) -> impl Iterator<Item = (u8, u8)> {
        let q = self.q;
        (1..=self.p).flat_map(move |c| (1..=q).map(move |r| (c, r)))
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.p, self.q)
    }
}

/// One labeled square's rectangle of board squares.
///
/// Packed as `col << 8 | row << 2 | left << 1 | down`, so the derived order is
/// lexicographic in `(corner_col, corner_row, extend_left, extend_down)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Piece(u16);

impl Piece {
    pub const fn new(col: u8, row: u8, extend_left: bool, extend_down: bool) -> Self {
        Piece(((col as u16) << 8) | ((row as u16) << 2) | ((extend_left as u16) << 1) | extend_down as u16)
    }

    /// A 1x1 piece.
    pub const fn unit(col: u8, row: u8) -> Self {
        Piece::new(col, row, false, false)
    }

    pub const fn col(self) -> u8 {
        (self.0 >> 8) as u8
    }

    pub const fn row(self) -> u8 {
        ((self.0 >> 2) & 0x3f) as u8
    }

    pub const fn corner(self) -> (u8, u8) {
        (self.col(), self.row())
    }

    pub const fn extends_left(self) -> bool {
        self.0 & 2 != 0
    }

    pub const fn extends_down(self) -> bool {
        self.0 & 1 != 0
    }

    /// Number of extended axes: 0 for 1x1, 1 for dominoes, 2 for 2x2.
    pub const fn dim(self) -> usize {
        self.extends_left() as usize + self.extends_down() as usize
    }

    pub const fn min_col(self) -> u8 {
        self.col() - self.extends_left() as u8
    }

    pub const fn min_row(self) -> u8 {
        self.row() - self.extends_down() as u8
    }

    pub fn fits(self, board: Board) -> bool {
        board.contains(self.col(), self.row()) && self.min_col() >= 1 && self.min_row() >= 1
    }

    pub fn occupies(self, col: u8, row: u8) -> bool {
        (self.min_col()..=self.col()).contains(&col) && (self.min_row()..=self.row()).contains(&row)
    }

    /// Occupied board squares in `(col, row)` order.
    pub fn squares(self) -> impl Iterator<Item = (u8, u8)> {
        let (lo_r, hi_r) = (self.min_row(), self.row());
        (self.min_col()..=self.col()).flat_map(move |c| (lo_r..=hi_r).map(move |r| (c, r)))
    }

    pub const fn with_extensions(self, extend_left: bool, extend_down: bool) -> Self {
        Piece::new(self.col(), self.row(), extend_left, extend_down)
    }

    /// The 1x1 piece at this piece's corner.
    pub const fn apex(self) -> Self {
        Piece(self.0 & !3)
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}{}{})",
            self.col(),
            self.row(),
            if self.extends_left() { ",L" } else { "" },
            if self.extends_down() { ",D" } else { "" }
        )
    }
}

/// True iff the occupied squares of `a` and `b` intersect.
pub fn pieces_overlap(a: Piece, b: Piece) -> bool {
    a.min_col() <= b.col() && b.min_col() <= a.col() && a.min_row() <= b.row() && b.min_row() <= a.row()
}

/// A cell of `G(n;p,q)`: one piece per label, on a fixed board.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrangement {
    board: Board,
    len: u8,
    pieces: [Piece; MAX_PIECES],
}

impl Arrangement {
    /// Checks the piece count and that every piece lies on the board. Overlap
    /// is allowed; use [`Arrangement::is_cell_of_x`] to test membership in X.
    pub fn new(board: Board, pieces: &[Piece]) -> Result<Self> {
        if pieces.len() > MAX_PIECES {
            return Err(Error::TooManyPieces {
                n: pieces.len(),
                max: MAX_PIECES,
            });
        }
        for &pc in pieces {
            if !pc.fits(board) {
                return Err(Error::PieceOffBoard {
                    col: pc.col(),
                    row: pc.row(),
                    p: board.p,
                    q: board.q,
                });
            }
        }
        Ok(Self::from_parts(board, pieces))
    }

    /// Like [`Arrangement::new`] but additionally requires membership in X.
    pub fn cell(board: Board, pieces: &[Piece]) -> Result<Self> {
        let arr = Self::new(board, pieces)?;
        match arr.first_overlap() {
            Some((a, b)) => Err(Error::Overlap(a, b)),
            None => Ok(arr),
        }
    }

    pub(crate) fn from_parts(board: Board, pieces: &[Piece]) -> Self {
        let mut buf = [Piece::default(); MAX_PIECES];
        buf[..pieces.len()].copy_from_slice(pieces);
        Arrangement {
            board,
            len: pieces.len() as u8,
            pieces: buf,
        }
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn n(&self) -> usize {
        self.len as usize
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces[..self.len as usize]
    }

    pub fn piece(&self, label: usize) -> Piece {
        self.pieces()[label]
    }

    pub fn dim(&self) -> usize {
        self.pieces().iter().map(|p| p.dim()).sum()
    }

    pub(crate) fn set_piece(&mut self, label: usize, piece: Piece) {
        self.pieces[label] = piece;
    }

    fn first_overlap(&self) -> Option<(usize, usize)> {
        let ps = self.pieces();
        for a in 0..ps.len() {
            for b in a + 1..ps.len() {
                if pieces_overlap(ps[a], ps[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Membership in `X(n;p,q)`: no two pieces share a board square.
    pub fn is_cell_of_x(&self) -> bool {
        self.first_overlap().is_none()
    }

    /// The 0-cell obtained by shrinking every piece to its corner square.
    pub fn apex(&self) -> Apex {
        let mut out = *self;
        for pc in &mut out.pieces[..self.len as usize] {
            *pc = pc.apex();
        }
        Apex(out)
    }

    /// Sum of all corner coordinates. Strictly decreases along every face
    /// relation that changes the apex.
    pub fn apex_height(&self) -> u32 {
        self.pieces().iter().map(|p| p.col() as u32 + p.row() as u32).sum()
    }

    /// The same cell moved to another board. Returns `None` if some piece
    /// falls off.
    pub fn on_board(&self, board: Board) -> Option<Self> {
        if self.pieces().iter().all(|p| p.fits(board)) {
            let mut out = *self;
            out.board = board;
            Some(out)
        } else {
            None
        }
    }

    /// Relabels so that the piece with label `k` gets label `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n());
        let mut out = *self;
        for (k, &to) in perm.iter().enumerate() {
            out.pieces[to] = self.pieces[k];
        }
        out
    }

    /// The `2·dim` codimension-one faces with their incidence signs.
    ///
    /// Coordinates are ordered `x1, y1, x2, y2, ...`; the `t`-th extended
    /// coordinate (from 0) contributes `(-1)^t` times the face at its upper
    /// endpoint (extension dropped, corner kept) and `-(-1)^t` times the face
    /// at its lower endpoint (extension dropped, corner moved left or down).
    pub fn facets(&self) -> Facets {
        Facets {
            cell: *self,
            coord: 0,
            lower: false,
            parity: 0,
        }
    }

    /// Formal sum of facets, merged and sorted by cell.
    pub fn boundary(&self) -> Vec<(Arrangement, i32)> {
        let mut out: Vec<(Arrangement, i32)> = self.facets().collect();
        out.sort_unstable_by_key(|a| a.0);
        out.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        out.retain(|e| e.1 != 0);
        out
    }

    /// All 0-dimensional faces, in no particular order.
    pub fn vertices(&self) -> Vec<Arrangement> {
        let mut out = alloc::vec![*self];
        for label in 0..self.n() {
            let mut next = Vec::with_capacity(out.len() * 4);
            for cell in &out {
                let pc = cell.piece(label);
                let cols: &[u8] = if pc.extends_left() { &[0, 1] } else { &[0] };
                let rows: &[u8] = if pc.extends_down() { &[0, 1] } else { &[0] };
                for &dc in cols {
                    for &dr in rows {
                        let mut c = *cell;
                        c.set_piece(label, Piece::unit(pc.col() - dc, pc.row() - dr));
                        next.push(c);
                    }
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.board)?;
        f.debug_list().entries(self.pieces()).finish()
    }
}

/// Iterator over the signed facets of a cell; see [`Arrangement::facets`].
#[derive(Clone, Debug)]
pub struct Facets {
    cell: Arrangement,
    // label * 2 + axis, axis 0 = x, 1 = y
    coord: usize,
    lower: bool,
    parity: u32,
}

impl Iterator for Facets {
    type Item = (Arrangement, i32);

    fn next(&mut self) -> Option<Self::Item> {
        while self.coord < 2 * self.cell.n() {
            let label = self.coord / 2;
            let horizontal = self.coord.is_multiple_of(2);
            let pc = self.cell.piece(label);
            let extended = if horizontal { pc.extends_left() } else { pc.extends_down() };
            if !extended {
                self.coord += 1;
                continue;
            }
            let sign = if self.parity.is_multiple_of(2) { 1 } else { -1 };
            let (face, coeff) = match (self.lower, horizontal) {
                (false, true) => (pc.with_extensions(false, pc.extends_down()), sign),
                (false, false) => (pc.with_extensions(pc.extends_left(), false), sign),
                (true, true) => (Piece::new(pc.col() - 1, pc.row(), false, pc.extends_down()), -sign),
                (true, false) => (Piece::new(pc.col(), pc.row() - 1, pc.extends_left(), false), -sign),
            };
            if self.lower {
                self.parity += 1;
                self.coord += 1;
            }
            self.lower = !self.lower;
            let mut out = self.cell;
            out.set_piece(label, face);
            return Some((out, coeff));
        }
        None
    }
}

/// The apex of a cell: a 0-cell whose pieces are the corners of the cell's
/// pieces, in label order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Apex(Arrangement);

impl Apex {
    /// Corners must be distinct and on the board.
    pub fn new(board: Board, corners: &[(u8, u8)]) -> Result<Self> {
        let pieces: Vec<Piece> = corners.iter().map(|&(c, r)| Piece::unit(c, r)).collect();
        let arr = Arrangement::new(board, &pieces)?;
        if !arr.is_cell_of_x() {
            return Err(Error::RepeatedCorner);
        }
        Ok(Apex(arr))
    }

    pub fn board(&self) -> Board {
        self.0.board
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn corner(&self, label: usize) -> (u8, u8) {
        self.0.piece(label).corner()
    }

    pub fn corners(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.0.pieces().iter().map(|p| p.corner())
    }

    pub fn has_corner(&self, col: u8, row: u8) -> bool {
        self.0.pieces().iter().any(|p| p.corner() == (col, row))
    }

    /// The apex viewed as a 0-cell.
    pub fn as_cell(&self) -> &Arrangement {
        &self.0
    }

    pub fn fits(&self, board: Board) -> bool {
        self.corners().all(|(c, r)| board.contains(c, r))
    }
}

impl fmt::Debug for Apex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Apex")?;
        self.0.fmt(f)
    }
}

/// Ordered `n`-tuples of distinct board squares in lexicographic order of the
/// corner lists. Every tuple is the apex of at least one cell of X.
pub struct Apexes {
    board: Board,
    squares: Vec<(u8, u8)>,
    idx: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl Apexes {
    pub fn new(n: usize, board: Board) -> Self {
        let squares: Vec<(u8, u8)> = board.squares().collect();
        let done = n > squares.len() || n > MAX_PIECES;
        Apexes {
            board,
            used: alloc::vec![false; squares.len()],
            squares,
            idx: alloc::vec![0; n],
            started: false,
            done,
        }
    }

    // Smallest unused index >= from, if any.
    fn next_free(&self, from: usize) -> Option<usize> {
        (from..self.squares.len()).find(|&i| !self.used[i])
    }

    fn fill_from(&mut self, pos: usize) -> bool {
        for k in pos..self.idx.len() {
            match self.next_free(0) {
                Some(i) => {
                    self.idx[k] = i;
                    self.used[i] = true;
                }
                None => return false,
            }
        }
        true
    }

    fn current(&self) -> Apex {
        let pieces: Vec<Piece> = self
            .idx
            .iter()
            .map(|&i| Piece::unit(self.squares[i].0, self.squares[i].1))
            .collect();
        Apex(Arrangement::from_parts(self.board, &pieces))
    }
}

impl Iterator for Apexes {
    type Item = Apex;

    fn next(&mut self) -> Option<Apex> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill_from(0) {
                self.done = true;
                return None;
            }
            return Some(self.current());
        }
        let mut k = self.idx.len();
        while k > 0 {
            k -= 1;
            let cur = self.idx[k];
            self.used[cur] = false;
            if let Some(nxt) = self.next_free(cur + 1) {
                self.idx[k] = nxt;
                self.used[nxt] = true;
                if self.fill_from(k + 1) {
                    return Some(self.current());
                }
            }
        }
        self.done = true;
        None
    }
}

/// Strictly increasing `n`-subsets of board squares (unlabeled apexes), in
/// [`Board::squares`] order; `visit` receives the corners.
pub fn square_subsets(n: usize, board: Board, mut visit: impl FnMut(&[(u8, u8)])) {
    let squares: Vec<(u8, u8)> = board.squares().collect();
    let total = squares.len();
    if n > total {
        return;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut buf: Vec<(u8, u8)> = idx.iter().map(|&i| squares[i]).collect();
    loop {
        visit(&buf);
        // advance the rightmost index that can still move
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if idx[k] < total - n + k {
                break;
            }
            if k == 0 {
                return;
            }
        }
        idx[k] += 1;
        for j in k + 1..n {
            idx[j] = idx[j - 1] + 1;
        }
        for j in k..n {
            buf[j] = squares[idx[j]];
        }
    }
}

/// Every cell of `X(n;p,q)` exactly once, grouped by apex with apexes in
/// lexicographic order; within an apex, cells follow the numeric order of
/// their independent-set masks.
pub fn enumerate_cells(n: usize, board: Board) -> impl Iterator<Item = Arrangement> {
    Apexes::new(n, board).flat_map(|apex| {
        let graph = ApexGraph::new(&apex);
        graph
            .independent_sets()
            .into_iter()
            .map(move |set| graph.decode_unchecked(&apex, set))
            .collect::<Vec<_>>()
    })
}

/// Cell counts of a complex by dimension, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        FVector { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, dim: usize) -> u64 {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.counts)
    }
}

pub(crate) fn alternating_sum(values: &[u64]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// The f-vector of `X(n;p,q)`.
///
/// Cells with a common apex are counted through the independence polynomial
/// of its apex graph. The apex graph does not depend on labels, so each
/// unlabeled apex stands for `n!` labeled ones.
pub fn f_vector(n: usize, board: Board) -> FVector {
    if n > board.area() || n > MAX_PIECES {
        return FVector::default();
    }
    if n == 0 {
        return FVector::new(alloc::vec![1]);
    }
    let mut counts = alloc::vec![0u64; 2 * n + 1];
    square_subsets(n, board, |corners| {
        let pieces: Vec<Piece> = corners.iter().map(|&(c, r)| Piece::unit(c, r)).collect();
        let apex = Apex(Arrangement::from_parts(board, &pieces));
        let poly = ApexGraph::new(&apex).independence_polynomial();
        for (d, c) in poly.iter().enumerate() {
            counts[d] += c;
        }
    });
    let labelings = factorial(n as u64) as u64;
    for c in &mut counts {
        *c *= labelings;
    }
    FVector::new(counts)
}

pub(crate) fn factorial(k: u64) -> u128 {
    (1..=k as u128).product()
}

/// `m (m-1) ... (m-k+1)`; zero when `k > m`.
pub fn falling_factorial(m: u64, k: u64) -> u128 {
    if k > m {
        return 0;
    }
    (m - k + 1..=m).map(|v| v as u128).product()
}

/// Closed-form vertex count: labeled placements of `n` distinct squares.
pub fn f0_closed_form(n: usize, board: Board) -> u128 {
    falling_factorial(board.area() as u64, n as u64)
}

/// Closed-form edge count: choose a domino position, the label that slides
/// along it, and place the remaining labels on the remaining squares.
pub fn f1_closed_form(n: usize, board: Board) -> u128 {
    if n == 0 {
        return 0;
    }
    let (p, q) = (board.p() as u128, board.q() as u128);
    let dominoes = p * (q - 1) + q * (p - 1);
    let area = board.area() as u64;
    if area < 2 {
        return 0;
    }
    dominoes * n as u128 * falling_factorial(area - 2, n as u64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn b(p: usize, q: usize) -> Board {
        Board::new(p, q).unwrap()
    }

    #[test]
    fn snap_values() {
        assert_eq!(snap(3.0), 3.0);
        assert_eq!(snap(2.3), 2.5);
        assert_eq!(snap(4.999), 4.5);
        assert_eq!(snap(snap(2.3)), 2.5);
        assert_eq!(snap(-0.25), -0.5);
    }

    #[test]
    fn overlap_examples() {
        assert!(pieces_overlap(Piece::unit(1, 1), Piece::unit(1, 1)));
        assert!(!pieces_overlap(Piece::unit(1, 1), Piece::unit(2, 1)));
        assert!(pieces_overlap(Piece::new(2, 2, true, true), Piece::unit(1, 1)));
    }

    #[test]
    fn overlap_matches_square_sets() {
        let board = b(3, 3);
        let mut all = Vec::new();
        for (c, r) in board.squares() {
            for l in [false, true] {
                for d in [false, true] {
                    let pc = Piece::new(c, r, l, d);
                    if pc.fits(board) {
                        all.push(pc);
                    }
                }
            }
        }
        for &a in &all {
            for &bb in &all {
                let sa: BTreeSet<_> = a.squares().collect();
                let hit = bb.squares().any(|s| sa.contains(&s));
                assert_eq!(pieces_overlap(a, bb), hit, "{a:?} {bb:?}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        let board = b(2, 2);
        let two = Arrangement::new(board, &[Piece::unit(1, 1), Piece::unit(2, 2)]).unwrap();
        assert!(two.is_cell_of_x());
        let clash = Arrangement::new(board, &[Piece::new(2, 2, false, true), Piece::unit(2, 1)]).unwrap();
        assert!(!clash.is_cell_of_x());
        let ok = Arrangement::new(board, &[Piece::new(2, 2, false, true), Piece::unit(1, 1)]).unwrap();
        assert!(ok.is_cell_of_x());
        assert_eq!(Arrangement::cell(board, clash.pieces()), Err(Error::Overlap(0, 1)));
    }

    #[test]
    fn off_board_rejected() {
        let board = b(2, 2);
        assert!(Arrangement::new(board, &[Piece::new(1, 2, true, false)]).is_err());
        assert!(Arrangement::new(board, &[Piece::unit(3, 1)]).is_err());
        assert!(Board::new(0, 3).is_err());
    }

    #[test]
    fn apex_examples() {
        let board = b(2, 2);
        let zero = Arrangement::new(board, &[Piece::unit(1, 1), Piece::unit(2, 2)]).unwrap();
        assert_eq!(zero.apex().as_cell(), &zero);
        let dom = Arrangement::new(board, &[Piece::new(2, 2, false, true), Piece::unit(1, 1)]).unwrap();
        assert_eq!(dom.apex().corners().collect::<Vec<_>>(), [(2, 2), (1, 1)]);
        let big = Arrangement::new(board, &[Piece::new(2, 2, true, true)]).unwrap();
        assert_eq!(big.apex().corners().collect::<Vec<_>>(), [(2, 2)]);
    }

    #[test]
    fn domino_boundary() {
        let board = b(2, 1);
        let dom = Arrangement::new(board, &[Piece::new(2, 1, true, false)]).unwrap();
        let bd = dom.boundary();
        let right = Arrangement::new(board, &[Piece::unit(2, 1)]).unwrap();
        let left = Arrangement::new(board, &[Piece::unit(1, 1)]).unwrap();
        assert_eq!(bd.len(), 2);
        assert!(bd.contains(&(right, 1)));
        assert!(bd.contains(&(left, -1)));
        assert!(left.boundary().is_empty());
    }

    #[test]
    fn facet_signs_follow_coordinate_order() {
        let board = b(3, 3);
        // x1 and y2 extended: t = 0 for x1, t = 1 for y2
        let c = Arrangement::new(board, &[Piece::new(2, 1, true, false), Piece::new(3, 3, false, true)]).unwrap();
        let f: Vec<_> = c.facets().collect();
        assert_eq!(f.len(), 4);
        assert_eq!(f[0].1, 1);
        assert_eq!(f[0].0.pieces(), &[Piece::unit(2, 1), Piece::new(3, 3, false, true)]);
        assert_eq!(f[1].1, -1);
        assert_eq!(f[1].0.pieces(), &[Piece::unit(1, 1), Piece::new(3, 3, false, true)]);
        assert_eq!(f[2].1, -1);
        assert_eq!(f[2].0.pieces(), &[Piece::new(2, 1, true, false), Piece::unit(3, 3)]);
        assert_eq!(f[3].1, 1);
        assert_eq!(f[3].0.pieces(), &[Piece::new(2, 1, true, false), Piece::unit(3, 2)]);
    }

    #[test]
    fn boundary_squares_to_zero_on_small_complexes() {
        for (n, p, q) in [(2, 2, 2), (1, 3, 3), (2, 3, 3), (3, 2, 3)] {
            for cell in enumerate_cells(n, b(p, q)) {
                let mut acc: alloc::collections::BTreeMap<Arrangement, i32> = Default::default();
                for (f, s) in cell.facets() {
                    assert!(f.is_cell_of_x());
                    for (g, t) in f.facets() {
                        *acc.entry(g).or_default() += s * t;
                    }
                }
                assert!(acc.values().all(|&v| v == 0), "{cell:?}");
            }
        }
    }

    #[test]
    fn apexes_are_lexicographic_and_complete() {
        let all: Vec<Apex> = Apexes::new(2, b(2, 2)).collect();
        assert_eq!(all.len(), 12);
        let lists: Vec<Vec<(u8, u8)>> = all.iter().map(|a| a.corners().collect()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(lists, sorted);
        assert_eq!(Apexes::new(5, b(2, 2)).count(), 0);
        assert_eq!(Apexes::new(0, b(2, 2)).count(), 1);
    }

    #[test]
    fn subsets_count() {
        let mut k = 0;
        square_subsets(3, b(3, 3), |_| k += 1);
        assert_eq!(k, 84);
        let mut empty = 0;
        square_subsets(0, b(2, 2), |s| {
            assert!(s.is_empty());
            empty += 1
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn f_vectors_small() {
        assert_eq!(f_vector(2, b(2, 2)).counts(), &[12, 16, 4]);
        assert_eq!(f_vector(1, b(2, 2)).counts(), &[4, 4, 1]);
        assert_eq!(f_vector(3, b(2, 2)).counts(), &[24, 24]);
        assert_eq!(f_vector(0, b(5, 7)).counts(), &[1]);
        assert_eq!(f_vector(5, b(2, 2)).counts(), &[] as &[u64]);
    }

    #[test]
    fn enumeration_matches_f_vector() {
        for (n, p, q) in [(2, 2, 2), (2, 2, 3), (3, 2, 3), (1, 3, 4)] {
            let mut counts = alloc::vec![0u64; 2 * n + 1];
            let mut seen = BTreeSet::new();
            for c in enumerate_cells(n, b(p, q)) {
                assert!(c.is_cell_of_x());
                assert!(seen.insert(c));
                counts[c.dim()] += 1;
            }
            assert_eq!(FVector::new(counts), f_vector(n, b(p, q)));
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(f0_closed_form(2, b(2, 2)), 12);
        assert_eq!(f1_closed_form(2, b(2, 2)), 16);
        assert_eq!(f0_closed_form(3, b(2, 2)), 24);
        assert_eq!(f1_closed_form(3, b(2, 2)), 24);
        assert_eq!(f1_closed_form(3, b(3, 3)), 1512);
        assert_eq!(f0_closed_form(5, b(2, 2)), 0);
    }

    #[test]
    fn vertices_of_square_cell() {
        let c = Arrangement::new(b(2, 2), &[Piece::new(2, 2, true, true)]).unwrap();
        let mut v: Vec<_> = c.vertices().iter().map(|a| a.piece(0).corner()).collect();
        v.sort();
        assert_eq!(v, [(1, 1), (1, 2), (2, 1), (2, 2)]);
    }
}
