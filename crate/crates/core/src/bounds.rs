//! Upper bounds on list sizes and cardinalities of insertion/deletion codes.
//!
//! Every bound is an exact rational. Hypotheses that fail are reported as an
//! inapplicable [`BoundValue`] rather than an error, so sweeps can skip them.
//!
//! | function | bounds |
//! |---|---|
//! | [`johnson_type_list_bound`] | list size, closed form in `(n, d, s, t)` |
//! | [`constant_weight_list_bound`] | list size, `A(n-s+t, d-2s, t)` |
//! | [`elias_type_bound`] | code size, closed form with the `t`-insertion ball |
//! | [`constant_weight_elias_bound`] | code size, `A(n-s+t, d-2s, t) q^(n-s+t) / I_q(n-s, t)` |
//! | [`shortened_sphere_packing_bound`] | code size when `s + t <= floor((d-1)/2)` |

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::constant_weight::{CwAnswer, CwQuery, CwSolver, Exactness};
use crate::error::{Error, Result};
use crate::levenshtein::insertion_ball_size;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u32,
    pub n: usize,
    pub d: usize,
}

impl CodeParams {
    pub fn new(q: u32, n: usize, d: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParams(format!("alphabet size q={q} must be at least 2")));
        }
        if n < 1 {
            return Err(Error::InvalidParams("length n must be at least 1".into()));
        }
        if d < 1 || d > 2 * n {
            return Err(Error::InvalidParams(format!("distance d={d} must lie in 1..={}", 2 * n)));
        }
        Ok(CodeParams { q, n, d })
    }

    /// `floor((d-1)/2)`, the largest insertion count the constant-weight
    /// bounds accept.
    pub fn max_insertions(&self) -> usize {
        (self.d - 1) / 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ListParams {
    /// Insertions.
    pub s: usize,
    /// Deletions.
    pub t: usize,
}

impl ListParams {
    pub fn new(s: usize, t: usize) -> Self {
        ListParams { s, t }
    }
}

/// How the `A(n, d, w)` factor is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CwMode {
    /// Certified maximum from exhaustive search; fails outside the search limits.
    Exact,
    /// Best available upper bound.
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    JohnsonTypeList,
    ConstantWeightList,
    EliasType,
    ConstantWeightElias,
    ShortenedSpherePacking,
    Trivial,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::JohnsonTypeList => "johnson_type_list",
            BoundKind::ConstantWeightList => "constant_weight_list",
            BoundKind::EliasType => "elias_type",
            BoundKind::ConstantWeightElias => "constant_weight_elias",
            BoundKind::ShortenedSpherePacking => "shortened_sphere_packing",
            BoundKind::Trivial => "trivial",
        }
    }

    /// Whether the bound caps a list `|B(z, s, t) ∩ C|` rather than `|C|`.
    pub fn is_list_bound(&self) -> bool {
        matches!(self, BoundKind::JohnsonTypeList | BoundKind::ConstantWeightList)
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            BoundKind::JohnsonTypeList,
            BoundKind::ConstantWeightList,
            BoundKind::EliasType,
            BoundKind::ConstantWeightElias,
            BoundKind::ShortenedSpherePacking,
            BoundKind::Trivial,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub source: BoundKind,
    pub params: CodeParams,
    pub list: Option<ListParams>,
    pub applicable: bool,
    /// Present iff `applicable`.
    pub value: Option<BigRational>,
    pub exactness: Exactness,
}

impl BoundValue {
    fn applicable(source: BoundKind, params: CodeParams, list: Option<ListParams>, value: BigRational, exactness: Exactness) -> Self {
        BoundValue { source, params, list, applicable: true, value: Some(value), exactness }
    }

    fn inapplicable(source: BoundKind, params: CodeParams, list: Option<ListParams>) -> Self {
        BoundValue { source, params, list, applicable: false, value: None, exactness: Exactness::Exact }
    }

    /// Largest integer cardinality the bound permits.
    pub fn floor(&self) -> Option<BigInt> {
        self.value.as_ref().map(|v| v.floor().to_integer())
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.value.as_ref().and_then(|v| v.to_f64())
    }

    pub fn to_record(&self) -> BoundRecord {
        BoundRecord {
            bound: self.source.name().to_string(),
            applicable: self.applicable,
            value_num: self.value.as_ref().map(|v| v.numer().to_string()),
            value_den: self.value.as_ref().map(|v| v.denom().to_string()),
            value_decimal: self.to_f64(),
            exactness: self.exactness,
            params: ParamsRecord {
                q: self.params.q,
                n: self.params.n,
                d: self.params.d,
                s: self.list.map(|l| l.s),
                t: self.list.map(|l| l.t),
            },
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Some(v) => write!(f, "{}: {} (~{:.6}, {})", self.source, v, v.to_f64().unwrap_or(f64::NAN), self.exactness),
            None => write!(f, "{}: not applicable", self.source),
        }
    }
}

/// Serialized shape of a [`BoundValue`]. Numerator and denominator are
/// decimal strings so arbitrarily large values survive JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub bound: String,
    pub applicable: bool,
    pub value_num: Option<String>,
    pub value_den: Option<String>,
    pub value_decimal: Option<f64>,
    pub exactness: Exactness,
    pub params: ParamsRecord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub q: u32,
    pub n: usize,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<usize>,
}

impl TryFrom<&BoundRecord> for BoundValue {
    type Error = Error;

    fn try_from(r: &BoundRecord) -> Result<Self> {
        let source = BoundKind::from_name(&r.bound).ok_or_else(|| Error::Parse(format!("unknown bound {:?}", r.bound)))?;
        let params = CodeParams::new(r.params.q, r.params.n, r.params.d)?;
        let list = match (r.params.s, r.params.t) {
            (Some(s), Some(t)) => Some(ListParams { s, t }),
            (None, Some(t)) => Some(ListParams { s: 0, t }),
            _ => None,
        };
        let parse = |s: &Option<String>| -> Result<Option<BigInt>> {
            s.as_deref()
                .map(|v| v.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {v:?}"))))
                .transpose()
        };
        let value = match (parse(&r.value_num)?, parse(&r.value_den)?) {
            (Some(num), Some(den)) if !den.is_zero() => Some(BigRational::new(num, den)),
            (None, None) => None,
            _ => return Err(Error::Parse("value_num and value_den must both be present".into())),
        };
        if value.is_some() != r.applicable {
            return Err(Error::Parse("value must be present exactly when applicable".into()));
        }
        Ok(BoundValue { source, params, list, applicable: r.applicable, value, exactness: r.exactness })
    }
}

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

fn power(q: u32, m: usize) -> BigInt {
    Pow::pow(BigInt::from(q), m)
}

fn ball(q: u32, n: usize, t: usize) -> BigInt {
    BigInt::from(insertion_ball_size(q, n, t))
}

fn check_insertions(p: &CodeParams, lp: &ListParams) -> Result<()> {
    if lp.s > p.max_insertions() {
        return Err(Error::InvalidParams(format!(
            "s={} exceeds floor((d-1)/2)={} for d={}",
            lp.s,
            p.max_insertions(),
            p.d
        )));
    }
    Ok(())
}

/// The constant-weight query `A(n-s+t, d-2s, t)` that caps every list.
pub fn list_query(p: &CodeParams, lp: &ListParams) -> Result<CwQuery> {
    check_insertions(p, lp)?;
    CwQuery::new(p.n - lp.s + lp.t, p.d - 2 * lp.s, lp.t)
}

fn cw_factor(query: CwQuery, mode: CwMode, solver: &mut CwSolver) -> Result<CwAnswer> {
    match mode {
        CwMode::Exact => solver.exact(query),
        CwMode::Upper => Ok(solver.upper(query)),
    }
}

/// Closed-form list bound `(n-s+t)(d-2s) / ((n-s+t)(d-2s) - 2t(n-s))`,
/// applicable iff `d > 2s + 2t(n-s)/(n-s+t)`.
pub fn johnson_type_list_bound(p: CodeParams, lp: ListParams) -> Result<BoundValue> {
    if lp.s > p.n {
        return Err(Error::InvalidParams(format!("s={} exceeds n={}", lp.s, p.n)));
    }
    let list = Some(lp);
    let len = int(p.n - lp.s + lp.t);
    let numer = &len * (int(p.d) - int(2 * lp.s));
    // the hypothesis, multiplied through by n - s + t > 0, is positivity of
    // the denominator
    let denom = &numer - int(2 * lp.t) * int(p.n - lp.s);
    if !len.is_positive() || !denom.is_positive() {
        return Ok(BoundValue::inapplicable(BoundKind::JohnsonTypeList, p, list));
    }
    Ok(BoundValue::applicable(
        BoundKind::JohnsonTypeList,
        p,
        list,
        BigRational::new(numer, denom),
        Exactness::Exact,
    ))
}

/// List bound `A(n-s+t, d-2s, t)`, for `s <= floor((d-1)/2)`.
pub fn constant_weight_list_bound(p: CodeParams, lp: ListParams, mode: CwMode, solver: &mut CwSolver) -> Result<BoundValue> {
    let query = list_query(&p, &lp)?;
    let a = cw_factor(query, mode, solver)?;
    Ok(BoundValue::applicable(
        BoundKind::ConstantWeightList,
        p,
        Some(lp),
        BigRational::from_integer(a.value.into()),
        a.exactness,
    ))
}

/// Code-size bound `((n+t)d / ((n+t)d - 2nt)) q^(n+t) / I_q(n, t)`, applicable
/// iff `d < 2n` and `t < nd / (2n - d)`.
pub fn elias_type_bound(p: CodeParams, t: usize) -> BoundValue {
    let list = Some(ListParams { s: 0, t });
    if p.d >= 2 * p.n {
        return BoundValue::inapplicable(BoundKind::EliasType, p, list);
    }
    // t (2n - d) < n d, in integers
    if int(t) * int(2 * p.n - p.d) >= int(p.n) * int(p.d) {
        return BoundValue::inapplicable(BoundKind::EliasType, p, list);
    }
    let numer = int(p.n + t) * int(p.d);
    let denom = &numer - int(2 * p.n * t);
    debug_assert!(denom.is_positive());
    let value = BigRational::new(numer, denom) * BigRational::new(power(p.q, p.n + t), ball(p.q, p.n, t));
    BoundValue::applicable(BoundKind::EliasType, p, list, value, Exactness::Exact)
}

/// Code-size bound `A(n-s+t, d-2s, t) q^(n-s+t) / I_q(n-s, t)`.
pub fn constant_weight_elias_bound(p: CodeParams, lp: ListParams, mode: CwMode, solver: &mut CwSolver) -> Result<BoundValue> {
    let query = list_query(&p, &lp)?;
    let a = cw_factor(query, mode, solver)?;
    let m = p.n - lp.s + lp.t;
    let value = BigRational::from_integer(a.value.into()) * BigRational::new(power(p.q, m), ball(p.q, p.n - lp.s, lp.t));
    Ok(BoundValue::applicable(BoundKind::ConstantWeightElias, p, Some(lp), value, a.exactness))
}

/// `q^(n-s+t) / I_q(n-s, t)`, applicable iff `s + t <= floor((d-1)/2)`.
pub fn shortened_sphere_packing_bound(p: CodeParams, lp: ListParams) -> BoundValue {
    let list = Some(lp);
    if lp.s + lp.t > p.max_insertions() {
        return BoundValue::inapplicable(BoundKind::ShortenedSpherePacking, p, list);
    }
    let value = BigRational::new(power(p.q, p.n - lp.s + lp.t), ball(p.q, p.n - lp.s, lp.t));
    BoundValue::applicable(BoundKind::ShortenedSpherePacking, p, list, value, Exactness::Exact)
}

/// Singleton bound `q^(n - ceil(d/2) + 1)`.
pub fn singleton_bound(p: CodeParams) -> BigRational {
    BigRational::from_integer(power(p.q, p.n + 1 - p.d.div_ceil(2)))
}

/// Sphere-packing bound `q^(n+r) / I_q(n, r)` with `r = floor((d-1)/2)`.
pub fn sphere_packing_bound(p: CodeParams) -> BigRational {
    let r = p.max_insertions();
    BigRational::new(power(p.q, p.n + r), ball(p.q, p.n, r))
}

/// The trivial bound `q^n`.
pub fn trivial_bound(p: CodeParams) -> BoundValue {
    BoundValue::applicable(BoundKind::Trivial, p, None, BigRational::from_integer(power(p.q, p.n)), Exactness::Exact)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestBound {
    pub bound: BoundValue,
    /// Every applicable candidate, in evaluation order.
    pub candidates: Vec<BoundValue>,
    pub trivial: bool,
}

/// Minimum over the code-size bounds for `s <= s_max`, `t <= t_max`.
///
/// In exact mode, `(s, t)` pairs whose `A(n, d, w)` cannot be certified fall
/// back to the upper-bound value and the result is marked accordingly. Ties
/// go to the lexicographically smallest `(s, t)`, then to the order
/// constant-weight Elias, Elias-type, shortened sphere-packing.
pub fn best_bound(p: CodeParams, s_max: usize, t_max: usize, mode: CwMode, solver: &mut CwSolver) -> BestBound {
    let mut candidates = Vec::new();
    for s in 0..=s_max.min(p.max_insertions()) {
        for t in 0..=t_max {
            let lp = ListParams { s, t };
            let cw = match constant_weight_elias_bound(p, lp, mode, solver) {
                Ok(b) => b,
                Err(_) => constant_weight_elias_bound(p, lp, CwMode::Upper, solver).expect("s within range"),
            };
            candidates.push(cw);
            if s == 0 {
                candidates.push(elias_type_bound(p, t));
            }
            candidates.push(shortened_sphere_packing_bound(p, lp));
        }
    }
    candidates.retain(|b| b.applicable);
    let mut best: Option<&BoundValue> = None;
    for c in &candidates {
        if best.is_none_or(|b| c.value < b.value) {
            best = Some(c);
        }
    }
    match best {
        Some(b) => BestBound { bound: b.clone(), candidates: candidates.clone(), trivial: false },
        None => BestBound { bound: trivial_bound(p), candidates, trivial: true },
    }
}

/// The rational `A(n-s+t, d-2s, t)` bound with the Johnson ratio
/// `dn / (dn - 2w(n-w))` substituted for `A`, or `None` when the ratio's
/// hypothesis fails. Agrees exactly with [`johnson_type_list_bound`].
pub fn johnson_substituted_list_bound(p: CodeParams, lp: ListParams) -> Option<BigRational> {
    if lp.s > p.n || 2 * lp.s > p.d {
        return None;
    }
    crate::constant_weight::johnson_ratio(CwQuery { n: p.n - lp.s + lp.t, d: p.d - 2 * lp.s, w: lp.t })
}
