//! Optional TOML defaults and parsing of the shared parameter flags.

use std::path::Path;

use aci_core::{DegreeVector, OrderKind, TermOrder};
use serde::Deserialize;

use crate::CliError;

/// Keys accepted in a `--config` file. Command-line flags win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<usize>,
    pub m: Option<String>,
    pub k: Option<u32>,
    pub ranking: Option<String>,
    pub order: Option<String>,
    pub format: Option<String>,
    pub out: Option<String>,
    pub p: Option<u64>,
    pub routes: Option<String>,
    pub max_n: Option<usize>,
    pub max_m: Option<u32>,
    pub max_k: Option<u32>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Input(format!("bad config {}: {}", path.display(), e.message())))
    }
}

/// The flag if given, else the config value, else an error naming the flag.
pub fn pick<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T, CliError> {
    flag.or(file).ok_or_else(|| CliError::Input(format!("missing --{name}")))
}

/// `3,2,2,3` or `eq:m:n`. A given `n` must match the length.
pub fn parse_m(s: &str, n: Option<usize>) -> Result<DegreeVector, CliError> {
    let s = s.trim();
    let dv = if let Some(rest) = s.strip_prefix("eq:") {
        let (m, len) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Input(format!("expected eq:m:n, got {s:?}")))?;
        let m = parse_num(m, "m")?;
        let len = parse_num(len, "n")?;
        DegreeVector::equigenerated(m, len as usize)?
    } else {
        DegreeVector::new(parse_list(s, "m")?)?
    };
    if let Some(n) = n {
        if n != dv.n() {
            return Err(CliError::Input(format!("--n {n} but m has {} entries", dv.n())));
        }
    }
    Ok(dv)
}

pub fn parse_list(s: &str, what: &str) -> Result<Vec<u32>, CliError> {
    s.split(',').map(|t| parse_num(t, what)).collect()
}

fn parse_num(t: &str, what: &str) -> Result<u32, CliError> {
    t.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("bad {what} entry {t:?}")))
}

pub fn parse_order(kind: Option<&str>, ranking: Option<&str>, n: usize) -> Result<TermOrder, CliError> {
    let kind: OrderKind = kind.unwrap_or("grevlex").parse()?;
    match ranking {
        None => Ok(TermOrder::identity(kind, n)),
        Some(r) => {
            let r = TermOrder::parse_ranking(r)?;
            if r.len() != n {
                return Err(CliError::Input(format!("ranking has {} entries, m has {n}", r.len())));
            }
            Ok(TermOrder::new(kind, r)?)
        }
    }
}
