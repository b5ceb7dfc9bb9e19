//! Named bundles of checks with a canonical, sorted report.

use std::time::Instant;

use serde::Serialize;

use crate::assocmod::{gamma_basis, projector, trace_check};
use crate::error::{invalid, Result};
use crate::principal::{
    almost_free_evidence, can_inverse_check, cleft_omega, hg_preimage_search, identity_lemma,
    noncleft_unit_probe, verify_cleaving_map, verify_strong_connection, StrongConnection,
};
use crate::report::{Check, Report};
use crate::reps::residual_suite;
use crate::Sign;

pub const SUITE_NAMES: [&str; 6] = ["thm-hg", "thm-main", "positive-trivial", "chern", "almost-free", "reps"];

/// JSON schema of [`SuiteReport`].
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub l: Option<u32>,
    pub nmax: Option<i64>,
    pub bound: Option<u32>,
    pub pairs: Vec<(i64, i64)>,
    pub dim: usize,
    pub q: Vec<f64>,
    pub seed: u64,
    /// Record wall time per check; off by default so output is reproducible.
    pub timings: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            l: None,
            nmax: None,
            bound: None,
            pairs: Vec::new(),
            dim: 40,
            q: vec![0.3, 0.5, 0.9],
            seed: 0,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub log: Vec<String>,
}

impl SuiteReport {
    pub fn render(&self) -> String {
        let mut r = Report::new(format!("suite {}", self.suite));
        r.passed = self.passed;
        r.checks = self.checks.clone();
        r.log = self.log.clone();
        r.render()
    }
}

struct Collector {
    report: Report,
    timings: bool,
}

impl Collector {
    fn run(&mut self, prefix: &str, f: impl FnOnce() -> Result<Report>) {
        let start = Instant::now();
        let sub = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let mut sub = sub.unwrap_or_else(|e| {
            let mut r = Report::new(prefix);
            r.check("error", false, e.to_string());
            r
        });
        if self.timings {
            for c in &mut sub.checks {
                c.wall_ms = Some(ms);
            }
        }
        self.report.absorb(prefix, sub);
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let mut col = Collector {
        report: Report::new(name),
        timings: params.timings,
    };
    match name {
        "thm-hg" => {
            let bound = params.bound.unwrap_or(6);
            col.run("(1,1) ", || {
                let s = hg_preimage_search(1, 1, 1, 2)?;
                let mut r = s.report();
                r.check("witness", s.found(), s.verdict());
                Ok(r)
            });
            let pairs = if params.pairs.is_empty() {
                vec![(1, 2), (1, 3), (2, 1), (2, 3)]
            } else {
                params.pairs.clone()
            };
            for (k, l) in pairs {
                if (k, l) == (1, 1) {
                    continue;
                }
                col.run(&format!("({k},{l}) "), || {
                    let s = hg_preimage_search(k, l, 1, bound)?;
                    let mut r = s.report();
                    r.check("exhausted", s.exhausted(), s.verdict());
                    Ok(r)
                });
            }
        }
        "thm-main" => {
            let l = params.l.unwrap_or(2);
            let nmax = params.nmax.unwrap_or(4);
            let conn = StrongConnection::new(l);
            col.run("", || Ok(verify_strong_connection(&conn, nmax)));
            col.run("", || Ok(can_inverse_check(&conn, nmax)));
            col.run("", || Ok(identity_lemma(l)));
            if l >= 2 {
                col.run("units ", || noncleft_unit_probe(l, 2, params.bound.unwrap_or(4)));
            }
        }
        "positive-trivial" => {
            let l = params.l.unwrap_or(3);
            let nmax = params.nmax.unwrap_or(6);
            col.run("cleaving ", || verify_cleaving_map(l, "z'*", nmax));
            col.run("cleft ", || Ok(verify_strong_connection(&cleft_omega(l)?, nmax)));
            let bound = params.bound.unwrap_or(4);
            for n in -2..=2 {
                col.run(&format!("gamma n={n} "), || {
                    gamma_basis(l, Sign::Pos, n, bound).map(|(_, r)| r)
                });
            }
        }
        "chern" => {
            let l = params.l.unwrap_or(2);
            let nmax = params.nmax.unwrap_or(2);
            for n in -nmax..=nmax {
                col.run(&format!("n={n} "), || {
                    let mut r = projector(l, n)?.verify();
                    r.absorb("", trace_check(l, n)?);
                    Ok(r)
                });
            }
        }
        "almost-free" => {
            let pairs = if params.pairs.is_empty() {
                vec![(1, 2), (1, 3), (2, 3), (2, 5)]
            } else {
                params.pairs.clone()
            };
            for (k, l) in pairs {
                let l = u32::try_from(l).map_err(|_| invalid(format!("l must be positive, got {l}")))?;
                col.run(&format!("({k},{l}) "), || almost_free_evidence(k, l));
            }
        }
        "reps" => {
            let ls: Vec<u32> = params.l.map_or_else(|| vec![1, 2, 3], |l| vec![l]);
            for sign in [Sign::Neg, Sign::Pos] {
                for &l in &ls {
                    for &q in &params.q {
                        col.run(&format!("{sign} l={l} q={q} "), || {
                            residual_suite(sign, l, params.dim, q, params.seed)
                        });
                    }
                }
            }
        }
        _ => {
            return Err(invalid(format!(
                "unknown suite `{name}`, expected one of {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }
    let mut rep = col.report;
    rep.checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport {
        suite: name.to_string(),
        passed: rep.passed,
        checks: rep.checks,
        log: rep.log,
    })
}
