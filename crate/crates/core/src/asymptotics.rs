//! Asymptotic rate bounds as functions of the normalized half-distance
//! `delta` (`d = floor(2 delta n)`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// q-ary entropy, with the plateau value 1 past `1 - 1/q`.
pub fn q_ary_entropy(q: u32, x: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::InvalidParams(format!("alphabet size {q} must be at least 2")));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParams(format!("entropy argument {x} outside [0, 1]")));
    }
    Ok(entropy(q, x))
}

fn entropy(q: u32, x: f64) -> f64 {
    let qf = q as f64;
    if x > 1.0 - 1.0 / qf {
        return 1.0;
    }
    let xlogx = |v: f64| if v <= 0.0 { 0.0 } else { v * v.ln() };
    let h = (x * (qf - 1.0).ln() - xlogx(x) - xlogx(1.0 - x)) / qf.ln();
    h.clamp(0.0, 1.0)
}

/// Linear-programming rate bound for binary constant-weight codes of
/// relative weight `omega` and relative distance `delta`.
pub fn rlp(delta: f64, omega: f64) -> f64 {
    let spread = 2.0 * omega * (1.0 - omega);
    if delta >= spread {
        return 0.0;
    }
    let radicand = (4.0 * omega * (1.0 - omega) - delta * (2.0 - delta)).max(0.0);
    let inner = radicand.sqrt() - delta;
    let b = (1.0 - inner * inner).clamp(0.0, 1.0);
    entropy(2, (0.5 * (1.0 - b.sqrt())).clamp(0.0, 0.5))
}

/// `(1 - H_q(delta)) / (1 - delta)`, clamped at 0.
pub fn elias_rate_bound(q: u32, delta: f64) -> f64 {
    if delta >= 1.0 {
        return 0.0;
    }
    ((1.0 - entropy(q, delta.max(0.0))) / (1.0 - delta)).max(0.0)
}

/// Rate bound obtained from shortening `sigma n` positions and a list of
/// relative radius `omega`, with the constant-weight factor bounded by
/// [`rlp`]. Equals [`elias_rate_bound`] at `sigma = 0, omega = delta`.
pub fn lp_objective(q: u32, delta: f64, sigma: f64, omega: f64) -> f64 {
    let rel_dist = 2.0 * (delta - sigma) * (1.0 - omega) / (1.0 - sigma);
    let inner = 1.0 - entropy(q, omega) + rlp(rel_dist, omega) / (q as f64).log2();
    ((1.0 - sigma) / (1.0 - omega) * inner).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Grid points per axis.
    pub grid: usize,
    pub arg_tol: f64,
    pub value_tol: f64,
    /// Distance kept from the open ends `sigma = delta` and `omega = 1`.
    pub boundary_eps: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig { grid: 200, arg_tol: 1e-9, value_tol: 1e-10, boundary_eps: 1e-9 }
    }
}

impl OptimizerConfig {
    // negated comparisons so NaN is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        if self.grid < 2 || !(self.arg_tol > 0.0) || !(self.value_tol > 0.0) || !(self.boundary_eps > 0.0) {
            return Err(Error::InvalidParams("optimizer needs grid >= 2 and positive tolerances".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatePoint {
    pub delta: f64,
    pub q: u32,
    pub value: f64,
    pub sigma_opt: f64,
    pub omega_opt: f64,
}

struct Tracker {
    q: u32,
    delta: f64,
    best: (f64, f64, f64),
}

impl Tracker {
    fn eval(&mut self, sigma: f64, omega: f64) -> f64 {
        let v = lp_objective(self.q, self.delta, sigma, omega);
        if v < self.best.0 {
            self.best = (v, sigma, omega);
        }
        v
    }
}

/// Minimizes `f` on `[lo, hi]` by golden-section search.
fn golden(mut lo: f64, mut hi: f64, tol: f64, mut f: impl FnMut(f64) -> f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - r * (hi - lo);
    let mut b = lo + r * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - r * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + r * (hi - lo);
            fb = f(b);
        }
    }
}

/// Best evaluated value of [`lp_objective`] over `0 <= sigma < delta`,
/// `0 <= omega < 1`: a grid pass, then coordinate-wise golden-section
/// refinement from the grid minimum and from `(0, delta)`.
pub fn lp_rate_bound(q: u32, delta: f64, cfg: &OptimizerConfig) -> Result<RatePoint> {
    cfg.validate()?;
    if q < 2 || !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParams(format!("need q >= 2 and 0 < delta < 1, got q={q}, delta={delta}")));
    }
    let sigma_max = (delta - cfg.boundary_eps).max(0.0);
    let omega_max = 1.0 - cfg.boundary_eps;
    let mut tr = Tracker { q, delta, best: (f64::INFINITY, 0.0, delta) };
    tr.eval(0.0, delta);
    let seed = tr.best;

    let steps = cfg.grid - 1;
    for i in 0..=steps {
        let sigma = sigma_max * i as f64 / steps as f64;
        for j in 0..=steps {
            tr.eval(sigma, omega_max * j as f64 / steps as f64);
        }
    }
    let grid_best = tr.best;
    let cell = (sigma_max / steps as f64, omega_max / steps as f64);

    for start in [grid_best, seed] {
        let (mut sigma, mut omega) = (start.1, start.2);
        let mut value = start.0;
        // first pass searches one grid cell around the start, later passes
        // shrink the window to the last move
        let mut width = (cell.0.max(cfg.arg_tol), cell.1.max(cfg.arg_tol));
        for _ in 0..200 {
            let (lo, hi) = ((sigma - width.0).max(0.0), (sigma + width.0).min(sigma_max));
            let mut s_best = (value, sigma);
            golden(lo, hi, cfg.arg_tol, |s| {
                let v = tr.eval(s, omega);
                if v < s_best.0 {
                    s_best = (v, s);
                }
                v
            });
            let (lo, hi) = ((omega - width.1).max(0.0), (omega + width.1).min(omega_max));
            let mut o_best = (s_best.0, omega);
            let s = s_best.1;
            golden(lo, hi, cfg.arg_tol, |o| {
                let v = tr.eval(s, o);
                if v < o_best.0 {
                    o_best = (v, o);
                }
                v
            });
            let moved = ((s - sigma).abs(), (o_best.1 - omega).abs());
            let gain = value - o_best.0;
            sigma = s;
            omega = o_best.1;
            value = o_best.0;
            if gain <= cfg.value_tol && moved.0 <= cfg.arg_tol && moved.1 <= cfg.arg_tol {
                break;
            }
            width = ((2.0 * moved.0).max(cfg.arg_tol * 4.0), (2.0 * moved.1).max(cfg.arg_tol * 4.0));
        }
    }

    let (value, sigma_opt, omega_opt) = tr.best;
    Ok(RatePoint { delta, q, value: value.clamp(0.0, 1.0), sigma_opt, omega_opt })
}

/// Slope of `(1 - H_q(w)) / (1 - w)` at `w = delta`: the closed form and a
/// central finite difference.
pub fn entropy_slope_check(q: u32, delta: f64) -> Result<(f64, f64)> {
    let edge = 1.0 - 1.0 / q as f64;
    if q < 2 || !(delta > 0.0 && delta < edge) {
        return Err(Error::InvalidParams(format!("need 0 < delta < 1 - 1/q, got q={q}, delta={delta}")));
    }
    let qf = q as f64;
    let analytic = (qf * delta / (qf - 1.0)).ln() / qf.ln() / ((1.0 - delta) * (1.0 - delta));
    let h = 1e-5f64.min(delta / 2.0).min((edge - delta) / 2.0);
    let f = |w: f64| (1.0 - entropy(q, w)) / (1.0 - w);
    let numeric = (f(delta + h) - f(delta - h)) / (2.0 * h);
    Ok((analytic, numeric))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateRow {
    pub elias: f64,
    pub lp: RatePoint,
}

/// Both rate bounds at each `delta`, rows sorted by `delta`.
pub fn rate_curve(q: u32, deltas: &[f64], cfg: &OptimizerConfig) -> Result<Vec<RateRow>> {
    let mut sorted = deltas.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted
        .into_iter()
        .map(|delta| Ok(RateRow { elias: elias_rate_bound(q, delta), lp: lp_rate_bound(q, delta, cfg)? }))
        .collect()
}

/// `steps` evenly spaced values from `lo` to `hi` inclusive.
pub fn delta_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..steps).map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64).collect(),
    }
}

pub const CSV_HEADER: &str = "delta,elias,lp,sigma_opt,omega_opt";

/// `x` with 12 significant digits, trailing zeros removed.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{:.11e}", x);
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            fixed
        }
    } else {
        let mant = if mant.contains('.') { mant.trim_end_matches('0').trim_end_matches('.') } else { mant };
        format!("{mant}e{exp}")
    }
}

pub fn rate_curve_csv(rows: &[RateRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let cols = [r.lp.delta, r.elias, r.lp.value, r.lp.sigma_opt, r.lp.omega_opt];
        let cols: Vec<String> = cols.iter().map(|&v| format_sig12(v)).collect();
        out.push_str(&cols.join(","));
        out.push('\n');
    }
    out
}
