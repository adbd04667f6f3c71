//! Sweep verification: runs every `(s, N, n)` cell in a requested range
//! through the oracle, the series engine, and the bijection, and collects
//! the outcome into a report that renders as structured text or JSON.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use glaisher_core::{
    count, enumerate, forward_map, gf_d_direct, gf_d_simplified, gf_o, inverse_map, ClassParams,
    EnumSpec,
};

/// Inclusive upper limits of a verification sweep; every combination of
/// `s in 1..=s_max`, `N in 1..=n_limit_max`, `n in 0..=n_max` is one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRanges {
    pub s_max: u64,
    #[serde(rename = "N_max")]
    pub n_limit_max: u64,
    pub n_max: u64,
}

impl Default for SweepRanges {
    fn default() -> Self {
        SweepRanges {
            s_max: 5,
            n_limit_max: 5,
            n_max: 40,
        }
    }
}

/// Outcome of one `(s, N, n)` cell. Counts are decimal strings so the JSON
/// form is safe for arbitrarily large values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub s: u64,
    #[serde(rename = "N")]
    pub n_limit: u64,
    pub n: u64,
    pub o_count: String,
    pub d_count: String,
    pub equal: bool,
    pub roundtrip_ok: bool,
    pub gf_match: bool,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.equal && self.roundtrip_ok && self.gf_match
    }
}

/// One failed cell with the checks it failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellFailure {
    pub s: u64,
    #[serde(rename = "N")]
    pub n_limit: u64,
    pub n: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cells: usize,
    pub failures: usize,
    pub pass: bool,
}

/// Full sweep outcome: every cell in the range exactly once, the failing
/// cells separately, and the summary. `summary.pass` holds exactly when
/// the failure list is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ranges: SweepRanges,
    pub cells: Vec<CellReport>,
    pub failures: Vec<CellFailure>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.summary.pass
    }
}

/// Runs the full sweep. Cells are visited in ascending `(s, N, n)` order;
/// the three series for a given `(s, N)` are built once and reused for all
/// weights.
pub fn run_sweep(ranges: &SweepRanges) -> VerifyReport {
    let bound = ranges.n_max as usize;
    let mut cells = Vec::new();
    let mut failures = Vec::new();
    for s in 1..=ranges.s_max {
        for n_limit in 1..=ranges.n_limit_max {
            let params = ClassParams::new(s, n_limit)
                .expect("sweep ranges stay far below the bound overflow");
            let o_series = gf_o(&params, bound);
            let d_direct = gf_d_direct(&params, bound);
            let d_simplified = gf_d_simplified(&params, bound);
            for n in 0..=ranges.n_max {
                let o_count = count(&EnumSpec::class_o(n, params));
                let d_count = count(&EnumSpec::class_d(n, params));
                let equal = o_count == d_count;

                let o_big = BigInt::from(o_count.clone());
                let d_big = BigInt::from(d_count.clone());
                let gf_match = o_series.coeff(n as usize) == Some(&o_big)
                    && d_direct.coeff(n as usize) == Some(&d_big)
                    && d_simplified.coeff(n as usize) == Some(&d_big);

                let roundtrip_ok = cell_roundtrips(&params, n);

                let cell = CellReport {
                    s,
                    n_limit,
                    n,
                    o_count: o_count.to_string(),
                    d_count: d_count.to_string(),
                    equal,
                    roundtrip_ok,
                    gf_match,
                };
                if !cell.passed() {
                    let mut reasons = Vec::new();
                    if !cell.equal {
                        reasons.push("counts unequal");
                    }
                    if !cell.roundtrip_ok {
                        reasons.push("bijection roundtrip failed");
                    }
                    if !cell.gf_match {
                        reasons.push("series coefficient mismatch");
                    }
                    failures.push(CellFailure {
                        s,
                        n_limit,
                        n,
                        reason: reasons.join("; "),
                    });
                }
                cells.push(cell);
            }
        }
    }
    let summary = Summary {
        cells: cells.len(),
        failures: failures.len(),
        pass: failures.is_empty(),
    };
    VerifyReport {
        ranges: *ranges,
        cells,
        failures,
        summary,
    }
}

/// Maps every enumerated member of one class to the other and back, in
/// both directions, checking weights and set-level bijectivity.
fn cell_roundtrips(params: &ClassParams, n: u64) -> bool {
    let sources = enumerate(&EnumSpec::class_o(n, *params));
    let targets = enumerate(&EnumSpec::class_d(n, *params));
    let mut images = BTreeSet::new();
    for lambda in &sources {
        let Ok((image, _)) = forward_map(lambda, params) else {
            return false;
        };
        if image.weight() != lambda.weight() {
            return false;
        }
        if inverse_map(&image, params).as_ref() != Ok(lambda) {
            return false;
        }
        images.insert(image);
    }
    if images.len() != sources.len() {
        return false;
    }
    let target_set: BTreeSet<_> = targets.iter().cloned().collect();
    if images != target_set {
        return false;
    }
    targets.iter().all(|mu| {
        inverse_map(mu, params)
            .and_then(|preimage| forward_map(&preimage, params))
            .map(|(back, _)| &back == mu)
            .unwrap_or(false)
    })
}

/// Renders the report as stable plain text: one rollup line per `(s, N)`
/// pair, every failing cell, then the summary.
pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    let r = &report.ranges;
    writeln!(
        out,
        "sweep: s <= {}, N <= {}, n <= {}",
        r.s_max, r.n_limit_max, r.n_max
    )
    .unwrap();
    for s in 1..=r.s_max {
        for n_limit in 1..=r.n_limit_max {
            let group = report
                .cells
                .iter()
                .filter(|c| c.s == s && c.n_limit == n_limit);
            let (mut total, mut failed) = (0usize, 0usize);
            for cell in group {
                total += 1;
                if !cell.passed() {
                    failed += 1;
                }
            }
            writeln!(out, "s={s} N={n_limit}: {total} cells, {failed} failures").unwrap();
        }
    }
    for f in &report.failures {
        writeln!(
            out,
            "FAIL s={} N={} n={}: {}",
            f.s, f.n_limit, f.n, f.reason
        )
        .unwrap();
    }
    writeln!(out, "cells checked: {}", report.summary.cells).unwrap();
    writeln!(out, "failures: {}", report.summary.failures).unwrap();
    writeln!(
        out,
        "result: {}",
        if report.summary.pass { "PASS" } else { "FAIL" }
    )
    .unwrap();
    out
}
