//! Invariant suites for one instance.
//!
//! Exhaustive checks walk every cell and are skipped (not failed) above the
//! cell cap. `deep` adds the acyclicity certificate and the direct-homology
//! comparison.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use hardsq_core::apex::encode_cell;
use hardsq_core::homology::audit;
use hardsq_core::morse::{has_square_piece, match_cell, verify_acyclic};
use hardsq_core::oracle::{components, direct_chain_complex};
use hardsq_core::{
    critical_cells, enumerate_cells, f_vector, ApexGraph, Arrangement, Board, Field, GradientStatus, MorseComplex,
};
use serde::Serialize;

use crate::config::Config;
use crate::error::Result;
use crate::parallel::morse_complex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub deep: bool,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "verify ({};{},{}){}", self.n, self.p, self.q, if self.deep { " deep" } else { "" }).unwrap();
        for c in &self.checks {
            let tag = match (c.skipped, c.passed) {
                (true, _) => "skip",
                (false, true) => "pass",
                (false, false) => "FAIL",
            };
            if c.detail.is_empty() {
                writeln!(s, "  {tag} {}", c.name).unwrap();
            } else {
                writeln!(s, "  {tag} {}: {}", c.name, c.detail).unwrap();
            }
        }
        for note in &self.notes {
            writeln!(s, "  note: {note}").unwrap();
        }
        writeln!(s, "{}", if self.passed() { "ok" } else { "FAILED" }).unwrap();
        s
    }
}

fn check(name: &str, outcome: std::result::Result<(), String>) -> Check {
    Check {
        name: name.into(),
        passed: outcome.is_ok(),
        skipped: false,
        detail: outcome.err().unwrap_or_default(),
    }
}

fn skipped(name: &str, why: String) -> Check {
    Check {
        name: name.into(),
        passed: true,
        skipped: true,
        detail: why,
    }
}

/// Pairing is an involution between facets with the same apex.
pub fn check_pairing(cells: &[Arrangement]) -> std::result::Result<(), String> {
    for cell in cells {
        let status = match_cell(cell).map_err(|e| e.to_string())?;
        let Some(partner) = status.partner() else { continue };
        if partner.apex() != cell.apex() {
            return Err(format!("{cell:?} and {partner:?} have different apexes"));
        }
        let back = match_cell(partner).map_err(|e| e.to_string())?;
        let expected_dim = match status {
            GradientStatus::PairedUp(_) => cell.dim() + 1,
            _ => cell.dim().wrapping_sub(1),
        };
        if partner.dim() != expected_dim || back.partner() != Some(cell) {
            return Err(format!("{cell:?} and {partner:?} are not a matched pair"));
        }
        if !partner.facets().any(|(f, _)| f == *cell) && !cell.facets().any(|(f, _)| f == *partner) {
            return Err(format!("{cell:?} and {partner:?} are not incident"));
        }
    }
    Ok(())
}

/// Critical cells: at most one per apex, no 2x2 piece, dimension at most
/// `min(n, pq/3)`, and exactly the cells the matching leaves unpaired.
pub fn check_critical(n: usize, board: Board, cells: &[Arrangement]) -> std::result::Result<(), String> {
    let critical = critical_cells(n, board);
    let bound = n.min(board.area() / 3);
    let mut apexes = BTreeSet::new();
    for c in &critical {
        if !apexes.insert(c.apex()) {
            return Err(format!("two critical cells share the apex of {c:?}"));
        }
        if has_square_piece(c) {
            return Err(format!("{c:?} contains a 2x2 piece"));
        }
        if c.dim() > bound {
            return Err(format!("{c:?} has dimension above {bound}"));
        }
    }
    let mut unmatched = Vec::new();
    for cell in cells {
        if match_cell(cell).map_err(|e| e.to_string())?.is_critical() {
            unmatched.push(*cell);
        }
    }
    unmatched.sort();
    if unmatched != critical {
        return Err(format!("{} unmatched cells, {} listed critical", unmatched.len(), critical.len()));
    }
    Ok(())
}

/// The matching commutes with swapping adjacent labels (which generate S_n).
pub fn check_equivariance(n: usize, cells: &[Arrangement]) -> std::result::Result<(), String> {
    for k in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(k, k + 1);
        for cell in cells {
            let moved = match_cell(&cell.relabel(&perm)).map_err(|e| e.to_string())?;
            let expected = match match_cell(cell).map_err(|e| e.to_string())? {
                GradientStatus::Critical => GradientStatus::Critical,
                GradientStatus::PairedUp(c) => GradientStatus::PairedUp(c.relabel(&perm)),
                GradientStatus::PairedDown(c) => GradientStatus::PairedDown(c.relabel(&perm)),
            };
            if moved != expected {
                return Err(format!("swapping labels {k},{} breaks the matching at {cell:?}", k + 1));
            }
        }
    }
    Ok(())
}

/// Apex graphs are paths in vertex order, each apex carries exactly its
/// Fibonacci-product many cells, and the bijection round-trips.
pub fn check_apex_graphs(cells: &[Arrangement]) -> std::result::Result<(), String> {
    let mut i = 0;
    while i < cells.len() {
        let apex = cells[i].apex();
        let g = ApexGraph::new(&apex);
        if g.edges().iter().any(|&(a, b)| b != a + 1) {
            return Err(format!("apex graph of {apex:?} is not a union of ordered paths"));
        }
        let mut j = i;
        while j < cells.len() && cells[j].apex() == apex {
            let (a, g2, set) = encode_cell(&cells[j]).map_err(|e| e.to_string())?;
            if g2.decode(&a, set).map_err(|e| e.to_string())? != cells[j] || set.len() != cells[j].dim() {
                return Err(format!("bijection fails at {:?}", cells[j]));
            }
            j += 1;
        }
        if (j - i) as u64 != g.independent_set_count() {
            return Err(format!("apex {apex:?}: {} cells, {} independent sets", j - i, g.independent_set_count()));
        }
        i = j;
    }
    Ok(())
}

/// Half-square allocations are disjoint, on the board, and sized 4/3/2.
pub fn check_half_squares(cells: &[Arrangement]) -> std::result::Result<(), String> {
    let mut last = None;
    for cell in cells {
        let apex = cell.apex();
        if last.as_ref() == Some(&apex) {
            continue;
        }
        let g = ApexGraph::new(&apex);
        let alloc = g.half_square_allocation();
        let board = apex.board();
        let mut seen = BTreeSet::new();
        for range in g.paths() {
            for v in range.clone() {
                let want = if range.len() == 1 {
                    4
                } else if v == range.start || v + 1 == range.end {
                    3
                } else {
                    2
                };
                if alloc[v].len() != want {
                    return Err(format!("apex {apex:?}: vertex {v} gets {} half-squares", alloc[v].len()));
                }
                for h in &alloc[v] {
                    if !board.contains(h.col, h.row) || !seen.insert(*h) {
                        return Err(format!("apex {apex:?}: half-square {h:?} reused or off the board"));
                    }
                }
            }
        }
        last = Some(apex);
    }
    Ok(())
}

fn square_zero(m: &MorseComplex) -> std::result::Result<(), String> {
    m.chain_complex().check_square_zero().map_err(|e| e.to_string())
}

/// Runs every suite on `(n; p, q)`.
pub fn verify(n: usize, board: Board, deep: bool, config: &Config) -> Result<VerifyReport> {
    let pool = config.thread_pool()?;
    let morse = pool.install(|| morse_complex(n, board, &config.morse()))?;
    let fv = f_vector(n, board);
    let betti = morse.chain_complex().betti(Field::Gf2);
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    if board.area() == n {
        notes.push("pq - n = 0 forces a 0-dimensional complex".to_string());
    }
    if n > board.area() {
        notes.push("n > pq: the complex is empty".to_string());
    }

    checks.push(check("morse boundary squares to zero", square_zero(&morse)));
    let counts: Vec<usize> = morse.counts();
    let audit = audit(n, board, &betti, &fv, Some(&counts));
    for c in audit.checks {
        checks.push(Check {
            name: c.name.to_string(),
            passed: c.passed,
            skipped: false,
            detail: c.detail,
        });
    }
    let total = fv.total();
    let exhaustive = [
        "cubical boundary squares to zero",
        "apex graphs and cell counts",
        "pairing",
        "critical cells",
        "label equivariance",
        "half-square allocation",
    ];
    if total > config.cell_cap {
        let why = format!("{total} cells exceed the cap {}", config.cell_cap);
        checks.extend(exhaustive.iter().map(|name| skipped(name, why.clone())));
    } else {
        let cells: Vec<Arrangement> = enumerate_cells(n, board).collect();
        let direct = direct_chain_complex(n, board, config.cell_cap)?;
        checks.push(check(exhaustive[0], direct.check_square_zero().map_err(|e| e.to_string())));
        checks.push(check(exhaustive[1], check_apex_graphs(&cells)));
        checks.push(check(exhaustive[2], check_pairing(&cells)));
        checks.push(check(exhaustive[3], check_critical(n, board, &cells)));
        checks.push(check(exhaustive[4], check_equivariance(n, &cells)));
        checks.push(check(exhaustive[5], check_half_squares(&cells)));
        if deep {
            checks.push(check(
                "gradient is acyclic",
                match verify_acyclic(n, board) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err("closed V-path found".into()),
                    Err(e) => Err(e.to_string()),
                },
            ));
            for field in [Field::Gf2, Field::Rational] {
                let d = direct.betti(field);
                let m = morse.chain_complex().betti(field);
                checks.push(check(
                    &format!("direct homology agrees over {field}"),
                    if d == m {
                        Ok(())
                    } else {
                        Err(format!("direct {:?}, morse {:?}", d.values(), m.values()))
                    },
                ));
            }
            let comps = components(n, board);
            checks.push(check(
                "components equal b0",
                if comps == betti.get(0) {
                    Ok(())
                } else {
                    Err(format!("{comps} components, b0 = {}", betti.get(0)))
                },
            ));
        }
    }
    if deep && total > config.cell_cap {
        let why = format!("{total} cells exceed the cap {}", config.cell_cap);
        checks.push(skipped("gradient is acyclic", why.clone()));
        checks.push(skipped("direct homology agrees", why));
    }
    Ok(VerifyReport {
        n,
        p: board.p(),
        q: board.q(),
        deep,
        checks,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        for (n, p, q, deep) in [(2, 2, 2, true), (3, 3, 3, false), (4, 2, 2, false), (5, 2, 2, true)] {
            let r = verify(n, Board::new(p, q).unwrap(), deep, &Config::default()).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn full_board_note() {
        let r = verify(4, Board::new(2, 2).unwrap(), false, &Config::default()).unwrap();
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn cap_skips_exhaustive_suites() {
        let cfg = Config {
            cell_cap: 10,
            ..Config::default()
        };
        let r = verify(3, Board::new(3, 3).unwrap(), true, &cfg).unwrap();
        assert!(r.passed());
        assert!(r.checks.iter().any(|c| c.skipped));
    }
}
