//! Oracle report: Morse-route Betti numbers next to every independent check
//! that fits under the cell cap.

use std::fmt::Write as _;

use hardsq_core::homology::audit;
use hardsq_core::oracle::{components, direct_betti};
use hardsq_core::{classify_regime, conf_plane_betti, f_vector, Board, Field};
use serde::Serialize;

use crate::config::Config;
use crate::error::Result;
use crate::parallel::morse_complex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub field: String,
    pub f_vector: Vec<u64>,
    pub critical_counts: Vec<usize>,
    pub morse: Vec<u64>,
    /// `None` when the full complex is over the cell cap.
    pub direct: Option<Vec<u64>>,
    pub components: Option<u64>,
    pub planar: Vec<u64>,
    pub regimes: Vec<String>,
    pub audit: Vec<AuditLine>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.audit.iter().all(|a| a.passed)
            && self.direct.as_ref().is_none_or(|d| *d == self.morse)
            && self.components.is_none_or(|c| self.morse.first().copied().unwrap_or(0) == c)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let line = |v: &[u64]| crate::join(v);
        writeln!(s, "instance   ({};{},{}) over {}", self.n, self.p, self.q, self.field).unwrap();
        writeln!(s, "f-vector   {}", line(&self.f_vector)).unwrap();
        writeln!(s, "critical   {}", crate::join(&self.critical_counts)).unwrap();
        writeln!(s, "morse      {}", line(&self.morse)).unwrap();
        match &self.direct {
            Some(d) => writeln!(s, "direct     {}", line(d)).unwrap(),
            None => writeln!(s, "direct     skipped (cell cap)").unwrap(),
        }
        if let Some(c) = self.components {
            writeln!(s, "components {c}").unwrap();
        }
        writeln!(s, "planar     {}", line(&self.planar)).unwrap();
        writeln!(s, "regimes    {}", self.regimes.join(" ")).unwrap();
        for a in &self.audit {
            writeln!(s, "{} {}: {}", if a.passed { "pass" } else { "FAIL" }, a.name, a.detail).unwrap();
        }
        writeln!(s, "{}", if self.passed() { "ok" } else { "FAILED" }).unwrap();
        s
    }
}

pub fn oracle_report(n: usize, board: Board, field: Field, config: &Config) -> Result<OracleReport> {
    let pool = config.thread_pool()?;
    let morse = pool.install(|| morse_complex(n, board, &config.morse()))?;
    let betti = morse.chain_complex().betti(field);
    let fv = f_vector(n, board);
    let under_cap = fv.total() <= config.cell_cap;
    let direct = if under_cap {
        Some(direct_betti(n, board, field, config.cell_cap)?.values().to_vec())
    } else {
        None
    };
    let counts = morse.counts();
    let audit = audit(n, board, &betti, &fv, Some(&counts))
        .checks
        .into_iter()
        .map(|c| AuditLine {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail,
        })
        .collect();
    Ok(OracleReport {
        n,
        p: board.p(),
        q: board.q(),
        field: field.to_string(),
        f_vector: fv.counts().to_vec(),
        critical_counts: counts,
        morse: betti.values().to_vec(),
        direct,
        components: under_cap.then(|| components(n, board)),
        planar: conf_plane_betti(n),
        regimes: classify_regime(n, &betti).iter().map(|r| r.to_string()).collect(),
        audit,
    })
}
