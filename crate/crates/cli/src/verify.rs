//! Closed forms against the oracles over a grid of `(m, k)`.

use std::fmt::Write;

use aci_core::closed_form::{build_gs_divisor_form, build_gs_tail_form, distinct_gb_census, reduced_gb};
use aci_core::hilbert::{hs_complete_intersection, truncate_lefschetz};
use aci_core::initial::{crit_sets, crit_sets_by_definition, hs_quotient};
use aci_core::oracle::{aci_generators, buchberger, OracleConfig};
use aci_core::{DegreeVector, OrderKind, Rationals, TermOrder};
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

pub struct Grid {
    pub max_n: usize,
    pub max_m: u32,
    pub max_k: u32,
}

impl Grid {
    /// All `m` with `1 ≤ n ≤ max_n` entries in `2..=max_m`, then `k`, in lexicographic order.
    fn points(&self) -> Vec<(Vec<u32>, u32)> {
        let mut ms: Vec<Vec<u32>> = Vec::new();
        let mut layer: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..self.max_n {
            layer = layer
                .iter()
                .flat_map(|p| (2..=self.max_m).map(move |v| [p.as_slice(), &[v]].concat()))
                .collect();
            ms.extend(layer.iter().cloned());
        }
        ms.into_iter()
            .flat_map(|m| (1..=self.max_k).map(move |k| (m.clone(), k)))
            .collect()
    }
}

#[derive(Serialize)]
pub struct Row {
    pub m: Vec<u32>,
    pub k: u32,
    /// Closed form equals Buchberger under both graded orders.
    pub oracle: bool,
    /// Path count, Lefschetz truncation and oracle initial ideal give one series.
    pub hilbert: bool,
    /// Recursive critical sets equal the definition.
    pub crit: bool,
    /// Divisor and tail forms of every generator coincide.
    pub forms: bool,
}

impl Row {
    fn ok(&self) -> bool {
        self.oracle && self.hilbert && self.crit && self.forms
    }
}

#[derive(Serialize)]
pub struct Census {
    pub m: Vec<u32>,
    pub k: u32,
    pub count: usize,
    pub expected: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub rows: Vec<Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Census>,
    pub passed: bool,
}

fn check(m: &[u32], k: u32) -> aci_core::Result<Row> {
    let dv = DegreeVector::new(m.to_vec())?;
    let n = dv.n();
    let gens = aci_generators(&dv, k, &Rationals);
    let mut oracle = true;
    let mut oracle_series = Vec::new();
    for kind in [OrderKind::GradedRevLex, OrderKind::GradedLex] {
        let order = TermOrder::identity(kind, n);
        let bb = buchberger(&gens, &OracleConfig::new(order.clone(), Rationals))?;
        oracle &= reduced_gb(&dv, k, &order)?.same_as(&bb);
        if kind == OrderKind::GradedRevLex {
            oracle_series = bb.initial_ideal().hs_within(&dv);
        }
    }
    let mut paths: Vec<i64> = hs_quotient(n, &dv, k)?.into_iter().map(|x| x as i64).collect();
    while paths.last() == Some(&0) {
        paths.pop();
    }
    let trunc = truncate_lefschetz(&hs_complete_intersection(&dv), k).coeffs().to_vec();
    let oracle_series: Vec<i64> = oracle_series.into_iter().map(|x| x as i64).collect();
    let crit = crit_sets(n, &dv, k)?;
    let mut forms = true;
    for s in crit.all() {
        forms &= build_gs_divisor_form(s, s.max_index(), &dv, k)? == build_gs_tail_form(s, &dv, k)?;
    }
    Ok(Row {
        m: m.to_vec(),
        k,
        oracle,
        hilbert: paths == trunc && trunc == oracle_series,
        crit: crit == crit_sets_by_definition(n, &dv, k)?,
        forms,
    })
}

pub fn run(grid: &Grid) -> Result<Report, CliError> {
    let rows: Vec<Row> = grid
        .points()
        .par_iter()
        .map(|(m, k)| check(m, *k))
        .collect::<aci_core::Result<_>>()?;
    let census = if grid.max_n >= 3 && grid.max_m >= 4 && grid.max_k >= 2 {
        let m = vec![2, 3, 4];
        let count = distinct_gb_census(&DegreeVector::new(m.clone())?, 2)?;
        Some(Census {
            m,
            k: 2,
            count,
            expected: 5,
        })
    } else {
        None
    };
    let passed = rows.iter().all(Row::ok) && census.as_ref().is_none_or(|c| c.count == c.expected);
    Ok(Report { rows, census, passed })
}

fn mark(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn m_label(m: &[u32]) -> String {
    m.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl Report {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.ok()).count()
            + self.census.as_ref().map_or(0, |c| usize::from(c.count != c.expected))
    }

    pub fn text(&self) -> String {
        let mut s = format!("{:<10} {:>2}  {:<6} {:<7} {:<4} {}\n", "m", "k", "oracle", "hilbert", "crit", "forms");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<10} {:>2}  {:<6} {:<7} {:<4} {}",
                m_label(&r.m),
                r.k,
                mark(r.oracle),
                mark(r.hilbert),
                mark(r.crit),
                mark(r.forms)
            );
        }
        if let Some(c) = &self.census {
            let _ = writeln!(
                s,
                "census m={} k={}: {} bases (expected {}) {}",
                m_label(&c.m),
                c.k,
                c.count,
                c.expected,
                mark(c.count == c.expected)
            );
        }
        let _ = writeln!(
            s,
            "{} rows, {} failures: {}",
            self.rows.len(),
            self.failures(),
            if self.passed { "PASS" } else { "FAIL" }
        );
        s
    }

    pub fn csv(&self) -> String {
        let mut s = String::from("m,k,oracle,hilbert,crit,forms\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "\"{}\",{},{},{},{},{}",
                m_label(&r.m),
                r.k,
                r.oracle,
                r.hilbert,
                r.crit,
                r.forms
            );
        }
        s
    }
}
