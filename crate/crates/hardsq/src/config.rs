//! Caps, budgets and thread count.
//!
//! Precedence, lowest first: built-in defaults, a TOML file, the
//! `HARDSQ_THREADS` / `HARDSQ_CELL_CAP` environment variables, command-line
//! flags (applied by the binary).
//!
//! ```toml
//! threads = 4          # 0 = machine parallelism
//! cell-cap = 2000000
//! flow-budget = 10000000
//! ```

use std::path::Path;

use hardsq_core::oracle::DEFAULT_CELL_CAP;
use hardsq_core::MorseConfig;
use serde::Deserialize;

use crate::error::{Error, Result};

pub const THREADS_VAR: &str = "HARDSQ_THREADS";
pub const CELL_CAP_VAR: &str = "HARDSQ_CELL_CAP";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Worker threads; `None` means machine parallelism.
    pub threads: Option<usize>,
    /// Largest complex (total cells) built or exported cell by cell.
    pub cell_cap: u64,
    /// Step budget of a single gradient-flow expansion.
    pub flow_budget: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            threads: None,
            cell_cap: DEFAULT_CELL_CAP,
            flow_budget: MorseConfig::default().flow_budget,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    threads: Option<usize>,
    cell_cap: Option<u64>,
    flow_budget: Option<u64>,
}

impl Config {
    /// Defaults overlaid with a TOML document.
    pub fn from_toml(text: &str) -> Result<Self> {
        let file: FileConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let mut cfg = Config::default();
        if let Some(t) = file.threads {
            cfg.threads = (t > 0).then_some(t);
        }
        if let Some(c) = file.cell_cap {
            cfg.cell_cap = c;
        }
        if let Some(b) = file.flow_budget {
            cfg.flow_budget = b;
        }
        Ok(cfg)
    }

    /// Applies environment overrides read through `get`.
    pub fn with_env(mut self, get: impl Fn(&str) -> Option<String>) -> Result<Self> {
        if let Some(v) = get(THREADS_VAR) {
            let t: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{THREADS_VAR}={v:?} is not a count")))?;
            self.threads = (t > 0).then_some(t);
        }
        if let Some(v) = get(CELL_CAP_VAR) {
            self.cell_cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{CELL_CAP_VAR}={v:?} is not a count")))?;
        }
        Ok(self)
    }

    /// Defaults, then `path` if given, then the process environment.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let base = match path {
            Some(p) => Config::from_toml(&std::fs::read_to_string(p)?)?,
            None => Config::default(),
        };
        base.with_env(|k| std::env::var(k).ok())
    }

    pub fn morse(&self) -> MorseConfig {
        MorseConfig {
            flow_budget: self.flow_budget,
        }
    }

    pub fn thread_pool(&self) -> Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads.unwrap_or(0))
            .build()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layering() {
        let cfg = Config::from_toml("threads = 3\ncell-cap = 10\n").unwrap();
        assert_eq!(cfg.threads, Some(3));
        assert_eq!(cfg.cell_cap, 10);
        assert_eq!(cfg.flow_budget, 10_000_000);
        let env = cfg
            .with_env(|k| match k {
                THREADS_VAR => Some("0".into()),
                CELL_CAP_VAR => Some("77".into()),
                _ => None,
            })
            .unwrap();
        assert_eq!(env.threads, None);
        assert_eq!(env.cell_cap, 77);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Config::from_toml("cap = 1").is_err());
        let bad = Config::default().with_env(|k| (k == CELL_CAP_VAR).then(|| "lots".into()));
        assert_eq!(bad.unwrap_err().exit_code(), 2);
    }
}
