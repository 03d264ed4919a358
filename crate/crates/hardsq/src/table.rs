//! The Betti table: every `(n; p, q)` with `2 <= p <= q <= n` and `pq >= n`,
//! up to a maximum `n`, as CSV.

use std::io::Write;

use hardsq_core::{classify_regime, BettiVector, Board, Field, Regime};
use rayon::prelude::*;

use crate::config::Config;
use crate::error::Result;
use crate::parallel::morse_complex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub betti: BettiVector,
    pub regimes: Vec<Regime>,
}

impl TableRow {
    /// Regime labels up to the top nonzero degree.
    pub fn regime_labels(&self) -> String {
        crate::join(self.regimes.iter().take(self.betti.values().len()))
    }
}

/// Instances of the table with `n <= max_n`, in row order.
pub fn instances(max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for p in 2..=n {
            for q in p..=n {
                if p * q >= n {
                    out.push((n, p, q));
                }
            }
        }
    }
    out
}

/// Rows for `max_n`, one per instance and field (fields vary fastest). Each
/// `n` builds one Morse complex on the `n x n` board and restricts it.
pub fn compute(max_n: usize, fields: &[Field], config: &Config) -> Result<Vec<TableRow>> {
    let pool = config.thread_pool()?;
    pool.install(|| {
        let mut rows = Vec::new();
        for n in 2..=max_n {
            let full = morse_complex(n, Board::new(n, n)?, &config.morse())?;
            let jobs: Vec<(usize, usize, Field)> = instances(max_n)
                .into_iter()
                .filter(|&(m, _, _)| m == n)
                .flat_map(|(_, p, q)| fields.iter().map(move |&f| (p, q, f)))
                .collect();
            let mut part = jobs
                .par_iter()
                .map(|&(p, q, field)| {
                    let betti = full.restrict(p, q)?.chain_complex().betti(field);
                    let regimes = classify_regime(n, &betti);
                    Ok(TableRow { n, p, q, betti, regimes })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.append(&mut part);
        }
        Ok(rows)
    })
}

/// Instances where two fields gave different Betti vectors (torsion).
pub fn field_disagreements(rows: &[TableRow]) -> Vec<(usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize)> = rows
        .windows(2)
        .filter(|w| (w[0].n, w[0].p, w[0].q) == (w[1].n, w[1].p, w[1].q) && w[0].betti.values() != w[1].betti.values())
        .map(|w| (w[0].n, w[0].p, w[0].q))
        .collect();
    out.dedup();
    out
}

/// CSV with columns `n,p,q[,field],b0..b{k},regime`; the field column only
/// appears when more than one field was computed.
pub fn write_csv<W: Write>(rows: &[TableRow], with_field: bool, out: W) -> Result<()> {
    let width = rows.iter().map(|r| r.betti.values().len()).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        return Ok(());
    }
    let mut header = vec!["n".to_string(), "p".into(), "q".into()];
    if with_field {
        header.push("field".into());
    }
    header.extend((0..width).map(|j| format!("b{j}")));
    header.push("regime".into());
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![r.n.to_string(), r.p.to_string(), r.q.to_string()];
        if with_field {
            rec.push(r.betti.field().to_string());
        }
        rec.extend((0..width).map(|j| r.betti.get(j).to_string()));
        rec.push(r.regime_labels());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_sets() {
        assert!(instances(1).is_empty());
        assert_eq!(instances(2), [(2, 2, 2)]);
        assert_eq!(instances(4).len(), 10);
        assert_eq!(instances(5).len(), 19);
        assert!(instances(6).contains(&(6, 2, 3)));
        assert!(!instances(6).contains(&(6, 2, 2)));
    }

    #[test]
    fn csv_layout() {
        let rows = compute(3, &[Field::Gf2], &Config::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, false, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "n,p,q,b0,b1,b2,regime\n\
             2,2,2,1,1,0,gas-consistent gas-consistent\n\
             3,2,2,2,2,0,liquid liquid\n\
             3,2,3,1,7,0,gas-consistent liquid\n\
             3,3,3,1,3,2,gas-consistent gas-consistent gas-consistent\n"
        );
    }
}
