//! Apex graphs.
//!
//! For an apex (a 0-cell), each piece at `(i, j)` may be widened to the left
//! when `i > 1` and no piece sits at `(i-1, j)`, and heightened downward when
//! `j > 1` and no piece sits at `(i, j-1)`. Each available option is a vertex,
//! drawn at the midpoint of the board edge it would cross: `(i-1/2, j)` or
//! `(i, j-1/2)`. Two options conflict, and are joined by an edge, when
//!
//! * both belong to the piece at `(i, j)` and a piece sits at `(i-1, j-1)`, or
//! * one widens `(i, j)` and the other heightens `(i-1, j+1)`.
//!
//! Both kinds of edge join vertices on a common anti-diagonal at adjacent
//! positions, so the graph is a disjoint union of paths and, in the global
//! order (coordinate sum, then column), every path is a contiguous run. Cells
//! with a given apex correspond exactly to independent sets of its graph; we
//! store those as bit masks over the global order.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::grid::{Apex, Arrangement, MAX_PIECES};

const ABSENT: u8 = u8::MAX;

/// Which extension a vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// Width 2: the vertex sits at `(i - 1/2, j)`, on a vertical board edge.
    Left,
    /// Height 2: the vertex sits at `(i, j - 1/2)`, on a horizontal board edge.
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ApexVertex {
    pub kind: VertexKind,
    /// Corner square of the owning piece.
    pub col: u8,
    pub row: u8,
    /// Label of the owning piece.
    pub owner: u8,
}

impl ApexVertex {
    /// Position with both coordinates doubled, so half-integers become odd
    /// integers.
    pub fn doubled_position(&self) -> (u16, u16) {
        let (c, r) = (self.col as u16, self.row as u16);
        match self.kind {
            VertexKind::Left => (2 * c - 1, 2 * r),
            VertexKind::Down => (2 * c, 2 * r - 1),
        }
    }

    fn order_key(&self) -> (u16, u16) {
        let (x, y) = self.doubled_position();
        (x + y, x)
    }
}

/// A set of apex-graph vertices, as a bit mask over the global vertex order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndependentSet(pub u32);

impl IndependentSet {
    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: IndependentSet) -> bool {
        self.0 & !other.0 == 0
    }
}

/// Half of a board square, cut along the diagonal from its upper-right to its
/// lower-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    LowerRight,
    UpperLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSquare {
    pub col: u8,
    pub row: u8,
    pub half: Half,
}

impl HalfSquare {
    const fn new(col: u8, row: u8, half: Half) -> Self {
        HalfSquare { col, row, half }
    }
}

/// The apex graph of one apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexGraph {
    vertices: Vec<ApexVertex>,
    // bit i set iff vertex i is adjacent to vertex i + 1
    links: u32,
    paths: Vec<(u8, u8)>,
    // per label: global index of the Left and Down vertex, or ABSENT
    slots: [[u8; 2]; MAX_PIECES],
}

impl ApexGraph {
    pub fn new(apex: &Apex) -> Self {
        let n = apex.n();
        let mut vertices = Vec::with_capacity(2 * n);
        for label in 0..n {
            let (c, r) = apex.corner(label);
            if c > 1 && !apex.has_corner(c - 1, r) {
                vertices.push(ApexVertex {
                    kind: VertexKind::Left,
                    col: c,
                    row: r,
                    owner: label as u8,
                });
            }
            if r > 1 && !apex.has_corner(c, r - 1) {
                vertices.push(ApexVertex {
                    kind: VertexKind::Down,
                    col: c,
                    row: r,
                    owner: label as u8,
                });
            }
        }
        vertices.sort_unstable_by_key(|v| v.order_key());

        let mut slots = [[ABSENT; 2]; MAX_PIECES];
        for (i, v) in vertices.iter().enumerate() {
            slots[v.owner as usize][v.kind as usize] = i as u8;
        }

        let mut links = 0u32;
        let mut link = |a: u8, b: u8| {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            assert_eq!(hi, lo + 1, "apex graph edge between non-consecutive vertices");
            links |= 1 << lo;
        };
        for label in 0..n {
            let (c, r) = apex.corner(label);
            let [left, down] = slots[label];
            if left == ABSENT {
                continue;
            }
            if down != ABSENT && apex.has_corner(c - 1, r - 1) {
                link(left, down);
            }
            // widening (c, r) against heightening (c-1, r+1)
            if let Some(up) = (0..n).find(|&k| apex.corner(k) == (c - 1, r + 1)) {
                let other = slots[up][VertexKind::Down as usize];
                if other != ABSENT {
                    link(left, other);
                }
            }
        }

        let mut paths = Vec::new();
        let mut start = 0usize;
        for i in 0..vertices.len() {
            if links >> i & 1 == 0 {
                paths.push((start as u8, (i + 1 - start) as u8));
                start = i + 1;
            }
        }
        ApexGraph {
            vertices,
            links,
            paths,
            slots,
        }
    }

    /// Vertices in the global order: coordinate sum, then column.
    pub fn vertices(&self) -> &[ApexVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len())
            .filter(|&i| self.adjacent_to_next(i))
            .map(|i| (i, i + 1))
            .collect()
    }

    pub fn adjacent_to_next(&self, i: usize) -> bool {
        self.links >> i & 1 == 1
    }

    /// Paths as ranges of the global order, in order of their first vertex.
    pub fn paths(&self) -> impl ExactSizeIterator<Item = Range<usize>> + '_ {
        self.paths
            .iter()
            .map(|&(s, l)| s as usize..s as usize + l as usize)
    }

    pub fn path_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().map(|&(_, l)| l as usize)
    }

    /// Global index of the vertex for extending `label` in direction `kind`.
    pub fn slot(&self, label: usize, kind: VertexKind) -> Option<usize> {
        match self.slots[label][kind as usize] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    pub fn is_independent(&self, set: IndependentSet) -> bool {
        set.0 >> self.vertices.len() == 0 && set.0 & (set.0 >> 1) & self.links == 0
    }

    /// All independent sets, in increasing mask order.
    pub fn independent_sets(&self) -> Vec<IndependentSet> {
        let mut out = alloc::vec![IndependentSet(0)];
        for (s, l) in self.paths.iter().map(|&(s, l)| (s as u32, l as u32)) {
            let strings = path_strings(l);
            let mut next = Vec::with_capacity(out.len() * strings.len());
            for &base in &out {
                for &w in &strings {
                    next.push(IndependentSet(base.0 | w << s));
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    /// Product over paths of `F(k + 2)`.
    pub fn independent_set_count(&self) -> u64 {
        self.path_lengths().map(|k| fibonacci(k + 2)).product()
    }

    /// Number of independent sets of each size.
    pub fn independence_polynomial(&self) -> Vec<u64> {
        let mut poly = alloc::vec![1u64];
        for k in self.path_lengths() {
            let path: Vec<u64> = (0..=k.div_ceil(2)).map(|j| binomial(k + 1 - j, j)).collect();
            let mut prod = alloc::vec![0u64; poly.len() + path.len() - 1];
            for (a, &x) in poly.iter().enumerate() {
                for (b, &y) in path.iter().enumerate() {
                    prod[a + b] += x * y;
                }
            }
            poly = prod;
        }
        poly
    }

    /// The independent set of a cell whose apex this graph was built from.
    pub fn encode(&self, cell: &Arrangement) -> Result<IndependentSet> {
        let mut mask = 0u32;
        for (label, pc) in cell.pieces().iter().enumerate() {
            for (on, kind) in [(pc.extends_left(), VertexKind::Left), (pc.extends_down(), VertexKind::Down)] {
                if on {
                    let v = self.slot(label, kind).ok_or(Error::NotIndependent)?;
                    mask |= 1 << v;
                }
            }
        }
        let set = IndependentSet(mask);
        if self.is_independent(set) {
            Ok(set)
        } else {
            Err(Error::NotIndependent)
        }
    }

    pub fn decode(&self, apex: &Apex, set: IndependentSet) -> Result<Arrangement> {
        if !self.is_independent(set) {
            return Err(Error::NotIndependent);
        }
        Ok(self.decode_unchecked(apex, set))
    }

    pub(crate) fn decode_unchecked(&self, apex: &Apex, set: IndependentSet) -> Arrangement {
        let mut cell = *apex.as_cell();
        let mut bits = set.0;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let v = self.vertices[i];
            let pc = cell.piece(v.owner as usize);
            let pc = match v.kind {
                VertexKind::Left => pc.with_extensions(true, pc.extends_down()),
                VertexKind::Down => pc.with_extensions(pc.extends_left(), true),
            };
            cell.set_piece(v.owner as usize, pc);
        }
        cell
    }

    /// One `0`/`1` string per path, in path order.
    pub fn path_bits(&self, set: IndependentSet) -> Vec<String> {
        self.paths()
            .map(|r| r.map(|i| if set.contains(i) { '1' } else { '0' }).collect())
            .collect()
    }

    /// Parses one `0`/`1` string per path.
    pub fn set_from_path_bits(&self, bits: &[&str]) -> Result<IndependentSet> {
        if bits.len() != self.paths.len() {
            return Err(Error::NotIndependent);
        }
        let mut mask = 0u32;
        for (range, s) in self.paths().zip(bits) {
            if s.len() != range.len() {
                return Err(Error::NotIndependent);
            }
            for (i, ch) in range.zip(s.chars()) {
                match ch {
                    '1' => mask |= 1 << i,
                    '0' => {}
                    _ => return Err(Error::NotIndependent),
                }
            }
        }
        let set = IndependentSet(mask);
        if self.is_independent(set) {
            Ok(set)
        } else {
            Err(Error::NotIndependent)
        }
    }

    /// Assigns disjoint half-squares to the vertices: four to an isolated
    /// vertex, three to each end of a longer path and two to interior
    /// vertices. Indexed like [`ApexGraph::vertices`].
    pub fn half_square_allocation(&self) -> Vec<Vec<HalfSquare>> {
        use Half::*;
        let mut out = Vec::with_capacity(self.vertices.len());
        for range in self.paths() {
            for i in range.clone() {
                let v = self.vertices[i];
                let (c, r) = (v.col, v.row);
                let first = i == range.start;
                let last = i + 1 == range.end;
                let mut halves = Vec::with_capacity(4);
                match v.kind {
                    VertexKind::Left => {
                        // the two halves touching the left edge of (c, r)
                        halves.push(HalfSquare::new(c, r, UpperLeft));
                        halves.push(HalfSquare::new(c - 1, r, LowerRight));
                        if first {
                            halves.push(HalfSquare::new(c - 1, r, UpperLeft));
                        }
                        if last {
                            if self.slot(v.owner as usize, VertexKind::Down).is_none() {
                                halves.push(HalfSquare::new(c, r, LowerRight));
                            } else {
                                halves.push(HalfSquare::new(c - 1, r - 1, UpperLeft));
                            }
                        }
                    }
                    VertexKind::Down => {
                        // the two halves touching the lower edge of (c, r)
                        halves.push(HalfSquare::new(c, r, LowerRight));
                        halves.push(HalfSquare::new(c, r - 1, UpperLeft));
                        if first {
                            if self.slot(v.owner as usize, VertexKind::Left).is_none() {
                                halves.push(HalfSquare::new(c, r, UpperLeft));
                            } else {
                                halves.push(HalfSquare::new(c - 1, r - 1, LowerRight));
                            }
                        }
                        if last {
                            halves.push(HalfSquare::new(c, r - 1, LowerRight));
                        }
                    }
                }
                out.push(halves);
            }
        }
        out
    }
}

/// Apex, apex graph and independent set of a cell.
pub fn encode_cell(cell: &Arrangement) -> Result<(Apex, ApexGraph, IndependentSet)> {
    let apex = cell.apex();
    let graph = ApexGraph::new(&apex);
    let set = graph.encode(cell)?;
    Ok((apex, graph, set))
}

// Bit i of each word is position i along a path of length k.
fn path_strings(k: u32) -> Vec<u32> {
    (0u32..1 << k).filter(|w| w & (w >> 1) == 0).collect()
}

/// `F(1) = F(2) = 1`.
pub fn fibonacci(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        let t = a + b;
        a = b;
        b = t;
    }
    a
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{enumerate_cells, Apexes, Board, Piece};
    use alloc::collections::{BTreeMap, BTreeSet};
    use alloc::vec;

    fn apex(p: usize, q: usize, corners: &[(u8, u8)]) -> Apex {
        Apex::new(Board::new(p, q).unwrap(), corners).unwrap()
    }

    #[test]
    fn single_corner_piece_has_empty_graph() {
        let g = ApexGraph::new(&apex(2, 2, &[(1, 1)]));
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.paths().len(), 0);
        assert_eq!(g.independent_set_count(), 1);
        assert!(g.half_square_allocation().is_empty());
    }

    #[test]
    fn anti_diagonal_pair_forms_one_path() {
        let a = apex(2, 2, &[(1, 2), (2, 1)]);
        let g = ApexGraph::new(&a);
        let pos: Vec<_> = g.vertices().iter().map(|v| v.doubled_position()).collect();
        assert_eq!(pos, [(2, 3), (3, 2)]);
        assert_eq!(g.edges(), [(0, 1)]);
        assert_eq!(g.paths().map(|r| (r.start, r.end)).collect::<Vec<_>>(), [(0, 2)]);
        assert_eq!(g.independent_set_count(), 3);
        let set = g.set_from_path_bits(&["10"]).unwrap();
        let cell = g.decode(&a, set).unwrap();
        assert_eq!(cell.piece(0), Piece::new(1, 2, false, true));
        assert_eq!(cell.piece(1), Piece::unit(2, 1));
        assert!(g.set_from_path_bits(&["11"]).is_err());
    }

    #[test]
    fn stacked_pair_gives_two_isolated_vertices() {
        let g = ApexGraph::new(&apex(2, 2, &[(2, 1), (2, 2)]));
        let pos: Vec<_> = g.vertices().iter().map(|v| v.doubled_position()).collect();
        assert_eq!(pos, [(3, 2), (3, 4)]);
        assert!(g.edges().is_empty());
        assert_eq!(g.paths().len(), 2);
        assert_eq!(g.independent_set_count(), 4);
    }

    #[test]
    fn zero_cell_encodes_to_empty_set() {
        let a = apex(3, 3, &[(1, 1), (2, 3), (3, 2)]);
        let (ap, g, set) = encode_cell(a.as_cell()).unwrap();
        assert_eq!(ap, a);
        assert!(set.is_empty());
        assert!(g.path_bits(set).iter().all(|s| s.chars().all(|c| c == '0')));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!([1, 2, 3, 4, 5, 6].map(fibonacci), [1, 1, 2, 3, 5, 8]);
    }

    #[test]
    fn rule_based_edges_match_brute_force_conflicts() {
        // two options conflict iff selecting both forces an overlap
        for n in 1..=3 {
            for a in Apexes::new(n, Board::new(3, 3).unwrap()) {
                let g = ApexGraph::new(&a);
                for i in 0..g.vertex_count() {
                    for j in i + 1..g.vertex_count() {
                        let set = IndependentSet(1 << i | 1 << j);
                        let cell = g.decode_unchecked(&a, set);
                        let both_ok = cell.is_cell_of_x();
                        let edge = j == i + 1 && g.adjacent_to_next(i);
                        assert_eq!(edge, !both_ok, "{a:?} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn half_squares_for_lone_corner() {
        let g = ApexGraph::new(&apex(2, 2, &[(2, 2)]));
        let alloc = g.half_square_allocation();
        assert_eq!(alloc.len(), 2);
        assert!(alloc.iter().all(|r| r.len() == 4));
        let all: BTreeSet<_> = alloc.iter().flatten().copied().collect();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn bijection_is_exact_on_small_boards() {
        for (n, p, q) in [(2, 2, 2), (2, 3, 3), (3, 3, 3)] {
            let board = Board::new(p, q).unwrap();
            let mut per_apex: BTreeMap<Apex, u64> = BTreeMap::new();
            for cell in enumerate_cells(n, board) {
                let (a, g, set) = encode_cell(&cell).unwrap();
                assert_eq!(set.len(), cell.dim());
                assert_eq!(g.decode(&a, set).unwrap(), cell);
                *per_apex.entry(a).or_default() += 1;
            }
            for (a, count) in per_apex {
                assert_eq!(ApexGraph::new(&a).independent_set_count(), count);
            }
        }
    }

    #[test]
    fn independence_polynomial_matches_sets() {
        let a = apex(3, 3, &[(1, 2), (2, 1), (3, 3), (2, 3)]);
        let g = ApexGraph::new(&a);
        let mut counts = vec![0u64; g.vertex_count() + 1];
        for s in g.independent_sets() {
            counts[s.len()] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        assert_eq!(g.independence_polynomial(), counts);
    }
}
