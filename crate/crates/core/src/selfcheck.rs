//! Cross-check suites run by `indel-bounds verify`: bound identities,
//! soundness against exhaustive search, tightness, the averaging identity,
//! and the asymptotic identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{elias_rate_bound, entropy_slope_check, lp_objective, lp_rate_bound, OptimizerConfig};
use crate::bounds::{
    constant_weight_elias_bound, constant_weight_list_bound, elias_type_bound, johnson_substituted_list_bound,
    johnson_type_list_bound, shortened_sphere_packing_bound, singleton_bound, sphere_packing_bound, BoundValue,
    CodeParams, CwMode, ListParams,
};
use crate::config::Limits;
use crate::constant_weight::CwSolver;
use crate::constructions::{build_tightness_instance, verify_tightness_instance, Check};
use crate::oracle::{max_indel_code_exact, shortening_experiment, verify_list_bound_everywhere};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub level: Level,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Tally {
    name: &'static str,
    cases: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn finish(self) -> Check {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} cases", self.cases)
        } else {
            let shown: Vec<&str> = self.failures.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
            format!("{} of {} cases failed: {}", self.failures.len(), self.cases, shown.join("; "))
        };
        Check { name: self.name.into(), passed, detail }
    }
}

fn params(q: u32, n: usize, d: usize) -> CodeParams {
    CodeParams::new(q, n, d).expect("suite parameters are valid")
}

fn johnson_recovery(n_max: usize) -> Check {
    let mut tally = Tally::new("johnson_list_recovery");
    for n in 1..=n_max {
        for d in 1..=2 * n {
            let p = params(2, n, d);
            for s in 0..=p.max_insertions() {
                for t in 0..=n {
                    let lp = ListParams::new(s, t);
                    let closed = johnson_type_list_bound(p, lp).expect("s <= n").value;
                    let substituted = johnson_substituted_list_bound(p, lp);
                    tally.record(closed == substituted, || format!("n={n} d={d} s={s} t={t}"));
                }
            }
        }
    }
    tally.finish()
}

fn classical_recoveries(n_max: usize) -> Check {
    let mut tally = Tally::new("singleton_sphere_recovery");
    for q in 2..=5 {
        for n in 1..=n_max {
            for d in 1..=2 * n {
                let p = params(q, n, d);
                let r = p.max_insertions();
                let singleton = shortened_sphere_packing_bound(p, ListParams::new(r, 0)).value;
                let sphere = shortened_sphere_packing_bound(p, ListParams::new(0, r)).value;
                tally.record(
                    singleton == Some(singleton_bound(p)) && sphere == Some(sphere_packing_bound(p)),
                    || format!("q={q} n={n} d={d}"),
                );
            }
        }
    }
    tally.finish()
}

fn list_dominance(n_max: usize, solver: &mut CwSolver) -> Check {
    let mut tally = Tally::new("list_bound_dominance");
    for n in 1..=n_max {
        for d in 1..=2 * n {
            let p = params(2, n, d);
            for s in 0..=p.max_insertions() {
                for t in 0..=n {
                    let lp = ListParams::new(s, t);
                    let closed = johnson_type_list_bound(p, lp).expect("s <= n");
                    let Some(closed) = closed.value else { continue };
                    let exact = constant_weight_list_bound(p, lp, CwMode::Exact, solver)
                        .or_else(|_| constant_weight_list_bound(p, lp, CwMode::Upper, solver))
                        .expect("valid list parameters");
                    let ok = exact.value.as_ref().is_some_and(|v| v <= &closed);
                    tally.record(ok, || format!("n={n} d={d} s={s} t={t}"));
                }
            }
        }
    }
    tally.finish()
}

/// Every applicable code-size bound at `p`, with `t` up to `n`.
pub fn code_size_bounds(p: CodeParams, solver: &mut CwSolver) -> Vec<BoundValue> {
    let mut out = Vec::new();
    let r = p.max_insertions();
    for t in 0..=p.n {
        out.push(elias_type_bound(p, t));
    }
    for s in 0..=r.min(p.n) {
        for t in 0..=p.n {
            let lp = ListParams::new(s, t);
            let cw = constant_weight_elias_bound(p, lp, CwMode::Exact, solver)
                .or_else(|_| constant_weight_elias_bound(p, lp, CwMode::Upper, solver));
            if let Ok(b) = cw {
                out.push(b);
            }
            out.push(shortened_sphere_packing_bound(p, lp));
        }
    }
    out.retain(|b| b.applicable);
    out
}

fn oracle_soundness(cases: &[(u32, usize)], limits: &Limits, solver: &mut CwSolver) -> Check {
    let mut tally = Tally::new("oracle_soundness");
    for &(q, n) in cases {
        for d in 2..=2 * n {
            let p = params(q, n, d);
            let oracle = match max_indel_code_exact(p, limits) {
                Ok(r) if r.exact => r,
                other => {
                    tally.record(false, || format!("q={q} n={n} d={d}: oracle unavailable ({other:?})"));
                    continue;
                }
            };
            let value = BigRational::from_integer(BigInt::from(oracle.value));
            for b in code_size_bounds(p, solver) {
                let v = b.value.as_ref().expect("applicable bounds carry a value");
                tally.record(v >= &value, || format!("{b} below A={} at q={q} n={n} d={d}", oracle.value));
            }
            // the list of the optimal code never exceeds the closed-form or
            // constant-weight list bound
            let r = p.max_insertions();
            for s in 0..=r.min(n) {
                for t in 0..=1 {
                    let lp = ListParams::new(s, t);
                    let Ok(scan) = verify_list_bound_everywhere(&oracle.witness, lp, limits) else { continue };
                    let cw = constant_weight_list_bound(p, lp, CwMode::Exact, solver).expect("valid list parameters");
                    let scan_v = BigRational::from_integer(BigInt::from(scan.max_list));
                    tally.record(cw.value.as_ref().is_some_and(|v| v >= &scan_v), || {
                        format!("list {} exceeds {cw} at q={q} n={n} d={d}", scan.max_list)
                    });
                }
            }
        }
    }
    tally.finish()
}

/// Parameters `(q, n, d, s, t)` of the tightness instances every level runs.
pub const TIGHTNESS_INSTANCES: [(u32, usize, usize, usize, usize); 3] = [(5, 3, 4, 0, 2), (8, 4, 4, 1, 1), (6, 4, 6, 0, 2)];

fn tightness(full: bool, limits: &Limits, solver: &mut CwSolver) -> Check {
    let mut tally = Tally::new("tightness_construction");
    let mut cases: Vec<(u32, usize, usize, usize, usize)> = TIGHTNESS_INSTANCES.to_vec();
    if full {
        for n in 1..=5 {
            for d in 1..=2 * n {
                for s in 0..=(d - 1) / 2 {
                    for t in 0..=2 {
                        cases.push((64, n, d, s, t));
                    }
                }
            }
        }
    }
    for (q, n, d, s, t) in cases {
        let p = params(q, n, d);
        let lp = ListParams::new(s, t);
        let ok = match build_tightness_instance(p, lp, solver) {
            Ok(inst) => {
                let report = verify_tightness_instance(&inst, solver);
                // scan every center as well when the space is small
                let scan_ok = match verify_list_bound_everywhere(&inst.code, lp, limits) {
                    Ok(scan) => scan.max_list == inst.code.len(),
                    Err(_) => true,
                };
                report.passed() && scan_ok
            }
            Err(_) => false,
        };
        tally.record(ok, || format!("q={q} n={n} d={d} s={s} t={t}"));
    }
    tally.finish()
}

fn averaging(cases: &[(u32, usize, usize)], limits: &Limits) -> Check {
    let mut tally = Tally::new("averaging_identity");
    for &(q, n, d) in cases {
        let code = match max_indel_code_exact(params(q, n, d), limits) {
            Ok(r) => r.witness,
            Err(e) => {
                tally.record(false, || format!("q={q} n={n} d={d}: {e}"));
                continue;
            }
        };
        for s in 0..=(d - 1) / 2 {
            for t in 0..=2 {
                let ok = shortening_experiment(&code, s, t, 0, 0, limits)
                    .is_ok_and(|r| r.exact_matches == Some(true));
                tally.record(ok, || format!("q={q} n={n} d={d} s={s} t={t}"));
            }
        }
    }
    tally.finish()
}

fn asymptotic_identities(full: bool) -> Vec<Check> {
    let mut recovery = Tally::new("asymptotic_recovery");
    let mut slope = Tally::new("entropy_slope");
    for q in [2u32, 3, 4, 8] {
        for i in 1..100 {
            let delta = i as f64 / 100.0;
            let diff = (lp_objective(q, delta, 0.0, delta) - elias_rate_bound(q, delta)).abs();
            recovery.record(diff <= 1e-12, || format!("q={q} delta={delta}"));
        }
        let edge = 1.0 - 1.0 / q as f64;
        for i in 1..20 {
            let delta = edge * i as f64 / 20.0;
            let ok = entropy_slope_check(q, delta).is_ok_and(|(a, n)| a < 0.0 && (a - n).abs() < 1e-6);
            slope.record(ok, || format!("q={q} delta={delta}"));
        }
    }
    let mut improve = Tally::new("lp_strict_improvement");
    let cfg = if full { OptimizerConfig::default() } else { OptimizerConfig { grid: 50, ..OptimizerConfig::default() } };
    for q in [2u32, 4] {
        let edge = 1.0 - 1.0 / q as f64;
        let mut k = 1;
        while 0.05 * k as f64 <= edge - 0.02 {
            let delta = 0.05 * k as f64;
            let ok = lp_rate_bound(q, delta, &cfg).is_ok_and(|p| p.value < elias_rate_bound(q, delta) - cfg.value_tol);
            improve.record(ok, || format!("q={q} delta={delta}"));
            k += 1;
        }
    }
    vec![recovery.finish(), slope.finish(), improve.finish()]
}

pub fn run_suite(level: Level, limits: &Limits) -> SuiteReport {
    let full = level == Level::Full;
    let mut solver = CwSolver::new(*limits);
    let mut checks = vec![
        johnson_recovery(if full { 20 } else { 10 }),
        classical_recoveries(if full { 10 } else { 6 }),
        list_dominance(if full { 7 } else { 5 }, &mut solver),
    ];
    let soundness: &[(u32, usize)] = if full {
        &[(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (3, 4)]
    } else {
        &[(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]
    };
    checks.push(oracle_soundness(soundness, limits, &mut solver));
    checks.push(tightness(full, limits, &mut solver));
    let averaging_cases: &[(u32, usize, usize)] = if full {
        &[(2, 3, 2), (2, 4, 4), (2, 5, 4), (2, 5, 6), (3, 3, 4), (3, 4, 6), (4, 3, 4)]
    } else {
        &[(2, 4, 4), (3, 3, 4)]
    };
    checks.push(averaging(averaging_cases, limits));
    checks.extend(asymptotic_identities(full));
    SuiteReport { level, checks }
}
