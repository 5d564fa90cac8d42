//! Binary constant-weight codes, stored as families of supports.
//!
//! A weight-`w` word of length `n` is identified with its support, a
//! `w`-subset of `{1, ..., n}`. Two supports `E`, `F` are at Hamming distance
//! `2w - 2|E ∩ F|`, so every distance inside a family is even.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::clique::{max_clique_within, CompatibilityGraph, SearchOptions};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::levenshtein::parse_header;

/// A `w`-subset of `{1, ..., n}` kept as sorted 1-based indices.
pub type Support = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFamily {
    n: usize,
    w: usize,
    supports: Vec<Support>,
}

impl SupportFamily {
    pub fn new(n: usize, w: usize, supports: Vec<Support>) -> Result<Self> {
        if w > n {
            return Err(Error::InvalidParams(format!("weight {w} exceeds length {n}")));
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(supports.len());
        for mut s in supports {
            s.sort_unstable();
            s.dedup();
            if s.len() != w {
                return Err(Error::InvalidParams(format!("support {s:?} does not have weight {w}")));
            }
            if s.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::InvalidParams(format!("support {s:?} leaves 1..={n}")));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::InvalidParams(format!("duplicate support {s:?}")));
            }
            normalized.push(s);
        }
        Ok(SupportFamily { n, w, supports: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn supports(&self) -> &[Support] {
        &self.supports
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    /// The family of complements `[n] \ F`, which has weight `n - w` and the
    /// same pairwise distances.
    pub fn complement(&self) -> SupportFamily {
        let supports = self
            .supports
            .iter()
            .map(|s| (1..=self.n).filter(|i| s.binary_search(i).is_err()).collect())
            .collect();
        SupportFamily { n: self.n, w: self.n - self.w, supports }
    }

    /// Sorts supports lexicographically.
    pub fn sorted(mut self) -> SupportFamily {
        self.supports.sort();
        self
    }

    /// Header `n=<int> w=<int>` then one support per line, as sorted
    /// space-separated 1-based indices.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} w={}\n", self.n, self.w);
        for s in &self.supports {
            let line: Vec<String> = s.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().skip_while(|l| l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing family header".into()))?;
        let (n, w) = parse_header(header, "n", "w")?;
        let mut supports = Vec::new();
        for line in lines {
            if line.trim().is_empty() && w != 0 {
                continue;
            }
            let s = line
                .split_whitespace()
                .map(|tok| tok.parse::<usize>().map_err(|_| Error::Parse(format!("bad index {tok:?}"))))
                .collect::<Result<Vec<_>>>()?;
            supports.push(s);
        }
        SupportFamily::new(n, w, supports)
    }
}

impl fmt::Display for SupportFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    k
}

/// Hamming distance `2w - 2|E ∩ F|` between the indicator vectors of two
/// supports of equal size.
pub fn hamming_distance_supports(e: &[usize], f: &[usize]) -> Result<usize> {
    if e.len() != f.len() {
        return Err(Error::InvalidParams(format!(
            "supports have different weights {} and {}",
            e.len(),
            f.len()
        )));
    }
    let mut e = e.to_vec();
    let mut f = f.to_vec();
    e.sort_unstable();
    f.sort_unstable();
    Ok(2 * e.len() - 2 * intersection_size(&e, &f))
}

/// Minimum pairwise distance; `None` for families with fewer than two
/// members.
pub fn min_distance(fam: &SupportFamily) -> Option<usize> {
    let s = &fam.supports;
    let mut best: Option<usize> = None;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let d = 2 * fam.w - 2 * intersection_size(&s[i], &s[j]);
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CwQuery {
    pub n: usize,
    pub d: usize,
    pub w: usize,
}

impl CwQuery {
    pub fn new(n: usize, d: usize, w: usize) -> Result<Self> {
        if w > n {
            return Err(Error::InvalidParams(format!("weight {w} exceeds length {n}")));
        }
        Ok(CwQuery { n, d, w })
    }

    /// Odd distances rounded up: constant-weight distances are even.
    pub fn normalized(self) -> CwQuery {
        CwQuery { d: self.d + self.d % 2, ..self }
    }

    pub fn complement(self) -> CwQuery {
        CwQuery { w: self.n - self.w, ..self }
    }
}

impl fmt::Display for CwQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A(n={}, d={}, w={})", self.n, self.d, self.w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    UpperBound,
    LowerBound,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::UpperBound => "upper_bound",
            Exactness::LowerBound => "lower_bound",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CwMethod {
    Search,
    Johnson,
    Trivial,
    Complement,
}

impl fmt::Display for CwMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CwMethod::Search => "search",
            CwMethod::Johnson => "johnson",
            CwMethod::Trivial => "trivial",
            CwMethod::Complement => "complement",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwAnswer {
    /// The query as answered, with `d` normalized to an even value.
    pub query: CwQuery,
    pub value: BigUint,
    pub exactness: Exactness,
    pub method: CwMethod,
    /// Family attaining `value`; present for exact and lower-bound answers.
    pub witness: Option<SupportFamily>,
}

/// Result of an exact search: either a certified maximum, or the best family
/// found together with an independent upper bound when the node budget ran
/// out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CwSearch {
    Exact(CwAnswer),
    BudgetExceeded { lower: CwAnswer, upper: CwAnswer },
}

impl CwSearch {
    pub fn exact(self) -> Option<CwAnswer> {
        match self {
            CwSearch::Exact(a) => Some(a),
            CwSearch::BudgetExceeded { .. } => None,
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All `w`-subsets of `{1, ..., n}` in lexicographic order.
pub fn all_supports(n: usize, w: usize) -> Vec<Support> {
    let mut out = Vec::new();
    if w > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=w).collect();
    loop {
        out.push(cur.clone());
        let mut i = w;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (w - 1 - i) {
                cur[i] += 1;
                for k in i + 1..w {
                    cur[k] = cur[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Whether the query fits the exact-search limits.
pub fn within_search_limits(query: CwQuery, limits: &Limits) -> bool {
    query.w <= query.n
        && query.n <= limits.cw_max_n
        && binomial(query.n, query.w) <= BigUint::from(limits.cw_max_vertices)
}

/// Exact `A(n, d, w)` with a witness family, by maximum clique search over
/// the Johnson graph.
///
/// Vertices are the `w`-subsets in lexicographic order, adjacent when their
/// intersection is at most `w - d/2`. The symmetric group acts transitively
/// on the vertices, so the first codeword is fixed to `{1, ..., w}`; its
/// stabilizer acts transitively on the supports meeting it in `i` places,
/// so the second codeword is fixed to one representative per `i`. The
/// search stops early once it meets [`johnson_ceiling`].
pub fn max_constant_weight_exact(query: CwQuery, limits: &Limits) -> Result<CwSearch> {
    if query.w > query.n {
        return Err(Error::InvalidParams(format!("weight {} exceeds length {}", query.w, query.n)));
    }
    if !within_search_limits(query, limits) {
        return Err(Error::NeedsUpperMode { n: query.n, d: query.d, w: query.w });
    }
    let query = query.normalized();
    let (n, w) = (query.n, query.w);
    let supports = all_supports(n, w);
    let answer = |family: Vec<Support>, exactness| CwAnswer {
        query,
        value: BigUint::from(family.len()),
        exactness,
        method: CwMethod::Search,
        witness: Some(SupportFamily { n, w, supports: family }),
    };
    let half = query.d / 2;
    if w == 0 || half > w || half > n - w {
        return Ok(CwSearch::Exact(answer(vec![supports[0].clone()], Exactness::Exact)));
    }
    let max_common = w - half;
    let g = CompatibilityGraph::from_fn(supports.len(), |i, j| {
        intersection_size(&supports[i], &supports[j]) <= max_common
    });
    let ceiling = johnson_ceiling(query).to_usize().unwrap_or(usize::MAX);

    let first: Vec<usize> = (1..supports.len()).filter(|&v| g.has_edge(0, v)).collect();
    let mut best = vec![0];
    let mut exact = true;
    let mut budget = limits.search_budget;
    for common in (0..=max_common.min(w - 1)).rev() {
        if best.len() >= ceiling {
            break;
        }
        if w - common > n - w {
            continue;
        }
        let rep: Support = (1..=common).chain(w + 1..=w + (w - common)).collect();
        let second = supports.binary_search(&rep).expect("representative is a w-subset");
        let candidates: Vec<usize> = first.iter().copied().filter(|&v| v != second && g.has_edge(second, v)).collect();
        let opts = SearchOptions { budget, floor: best.len(), target: Some(ceiling) };
        let out = max_clique_within(&g, &[0, second], &candidates, &opts);
        budget = budget.saturating_sub(out.nodes);
        if !out.clique.is_empty() {
            best = out.clique;
        }
        if !out.exact {
            exact = false;
            break;
        }
    }

    let family: Vec<Support> = best.iter().map(|&v| supports[v].clone()).collect();
    if exact {
        Ok(CwSearch::Exact(answer(family, Exactness::Exact)))
    } else {
        Ok(CwSearch::BudgetExceeded {
            lower: answer(family, Exactness::LowerBound),
            upper: analytic_upper_bound(query),
        })
    }
}

/// Johnson's bound iterated through `A(n, d, w) <= floor(n A(n-1, d, w-1) / w)`
/// and `A(n, d, w) <= floor(n A(n-1, d, w) / (n-w))`, seeded by the
/// trivial values and the ratio bound at every level.
pub fn johnson_ceiling(query: CwQuery) -> BigUint {
    let d = query.normalized().d;
    let mut memo = HashMap::new();
    ceiling_rec(query.n, query.w, d, &mut memo)
}

fn ceiling_rec(n: usize, w: usize, d: usize, memo: &mut HashMap<(usize, usize), BigUint>) -> BigUint {
    if let Some(v) = memo.get(&(n, w)) {
        return v.clone();
    }
    let light = w.min(n - w);
    let value = if light == 0 || d > 2 * light {
        BigUint::one()
    } else if d <= 2 {
        binomial(n, w)
    } else {
        let mut best = binomial(n, w);
        if let Some(j) = johnson_bound_cw(CwQuery { n, d, w }) {
            best = best.min(j.value);
        }
        let shorter_lighter = ceiling_rec(n - 1, w - 1, d, memo);
        best = best.min(BigUint::from(n) * shorter_lighter / BigUint::from(w));
        let shorter = ceiling_rec(n - 1, w, d, memo);
        best = best.min(BigUint::from(n) * shorter / BigUint::from(n - w));
        best
    };
    memo.insert((n, w), value.clone());
    value
}

/// The rational Johnson quantity `dn / (dn - 2w(n - w))`, or `None` when
/// `dn <= 2w(n - w)`.
pub fn johnson_ratio(query: CwQuery) -> Option<BigRational> {
    let n = BigInt::from(query.n);
    let d = BigInt::from(query.d);
    let w = BigInt::from(query.w);
    let dn = &d * &n;
    let denom = &dn - BigInt::from(2) * &w * (&n - &w);
    if !denom.is_positive() {
        return None;
    }
    Some(BigRational::new(dn, denom))
}

/// Johnson bound `floor(dn / (dn - 2w(n - w)))`, applied to `d` exactly as
/// given. `None` means not applicable.
pub fn johnson_bound_cw(query: CwQuery) -> Option<CwAnswer> {
    let ratio = johnson_ratio(query)?;
    let value = ratio.floor().to_integer().to_biguint().expect("ratio is positive");
    Some(CwAnswer {
        query,
        value,
        exactness: Exactness::UpperBound,
        method: CwMethod::Johnson,
        witness: None,
    })
}

/// Best closed-form bound, without search: trivial cases, the Johnson bound,
/// and `C(n, w)`.
fn analytic_upper_bound(query: CwQuery) -> CwAnswer {
    let query = query.normalized();
    let light = query.w.min(query.n - query.w);
    let complemented = light != query.w;
    let mut best = CwAnswer {
        query,
        value: binomial(query.n, query.w),
        exactness: Exactness::UpperBound,
        method: CwMethod::Trivial,
        witness: None,
    };
    if query.d <= 2 || light == 0 {
        best.exactness = Exactness::Exact;
        return best;
    }
    if query.d > 2 * light {
        best.value = BigUint::one();
        best.exactness = Exactness::Exact;
        best.method = if complemented { CwMethod::Complement } else { CwMethod::Trivial };
        return best;
    }
    let ceiling = johnson_ceiling(query);
    if ceiling < best.value {
        best.value = ceiling;
        best.method = CwMethod::Johnson;
    }
    best
}

/// Best available upper bound on `A(n, d, w)`: an exact search when the
/// query is within limits and finishes within budget, otherwise the best
/// closed-form bound.
pub fn cw_upper_bound(query: CwQuery, limits: &Limits) -> CwAnswer {
    let analytic = analytic_upper_bound(query);
    if analytic.exactness == Exactness::Exact {
        return analytic;
    }
    if within_search_limits(query, limits) {
        if let Ok(CwSearch::Exact(found)) = max_constant_weight_exact(query, limits) {
            return found;
        }
    }
    analytic
}

/// Memoizing front end for repeated constant-weight queries, owned by the
/// caller so sweeps do not repeat expensive searches.
#[derive(Debug, Clone)]
pub struct CwSolver {
    limits: Limits,
    exact: HashMap<CwQuery, Result<CwSearch>>,
    upper: HashMap<CwQuery, CwAnswer>,
}

impl CwSolver {
    pub fn new(limits: Limits) -> Self {
        CwSolver { limits, exact: HashMap::new(), upper: HashMap::new() }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Exact value, or `NeedsUpperMode` / `BudgetExceeded` when it cannot be
    /// certified.
    pub fn exact(&mut self, query: CwQuery) -> Result<CwAnswer> {
        let limits = self.limits;
        let entry = self
            .exact
            .entry(query)
            .or_insert_with(|| max_constant_weight_exact(query, &limits));
        match entry {
            Ok(CwSearch::Exact(a)) => Ok(a.clone()),
            Ok(CwSearch::BudgetExceeded { .. }) => Err(Error::BudgetExceeded { budget: limits.search_budget }),
            Err(e) => Err(e.clone()),
        }
    }

    /// Same as [`cw_upper_bound`], sharing the exact-search memo.
    pub fn upper(&mut self, query: CwQuery) -> CwAnswer {
        if let Some(a) = self.upper.get(&query) {
            return a.clone();
        }
        let analytic = analytic_upper_bound(query);
        let answer = if analytic.exactness == Exactness::Exact || !within_search_limits(query, &self.limits) {
            analytic
        } else {
            self.exact(query).unwrap_or(analytic)
        };
        self.upper.insert(query, answer.clone());
        answer
    }
}

impl Default for CwSolver {
    fn default() -> Self {
        CwSolver::new(Limits::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, d: usize, w: usize) -> CwQuery {
        CwQuery::new(n, d, w).unwrap()
    }

    fn exact(n: usize, d: usize, w: usize) -> CwAnswer {
        max_constant_weight_exact(q(n, d, w), &Limits::default())
            .unwrap()
            .exact()
            .expect("within budget")
    }

    /// Largest family of pairwise-far supports, trying every subset of the
    /// `C(n, w)` supports. Only usable when `C(n, w) <= 20`.
    fn brute_force(n: usize, d: usize, w: usize) -> usize {
        let all = all_supports(n, w);
        assert!(all.len() <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << all.len()) {
            let pick: Vec<&Support> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| &all[i]).collect();
            if pick.len() <= best {
                continue;
            }
            let ok = pick.iter().enumerate().all(|(a, e)| {
                pick[a + 1..].iter().all(|f| hamming_distance_supports(e, f).unwrap() >= d)
            });
            if ok {
                best = pick.len();
            }
        }
        best
    }

    #[test]
    fn hamming_distance_examples() {
        assert_eq!(hamming_distance_supports(&[1, 2], &[1, 2]).unwrap(), 0);
        assert_eq!(hamming_distance_supports(&[1, 2], &[3, 4]).unwrap(), 4);
        assert_eq!(hamming_distance_supports(&[1, 2], &[2, 3]).unwrap(), 2);
        assert!(hamming_distance_supports(&[1, 2], &[2]).is_err());
    }

    #[test]
    fn indicator_distance_agrees() {
        let n = 6;
        for e in all_supports(n, 3) {
            for f in all_supports(n, 3) {
                let ind = |s: &Support| (1..=n).map(|i| s.contains(&i)).collect::<Vec<_>>();
                let (a, b) = (ind(&e), ind(&f));
                let direct = a.iter().zip(&b).filter(|(x, y)| x != y).count();
                assert_eq!(hamming_distance_supports(&e, &f).unwrap(), direct);
            }
        }
    }

    #[test]
    fn min_distance_examples() {
        let single = SupportFamily::new(4, 2, vec![vec![1, 2]]).unwrap();
        assert_eq!(min_distance(&single), None);
        let pair = SupportFamily::new(4, 2, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(min_distance(&pair), Some(4));
    }

    #[test]
    fn family_validation() {
        assert!(SupportFamily::new(4, 2, vec![vec![1, 2, 3]]).is_err());
        assert!(SupportFamily::new(4, 2, vec![vec![1, 5]]).is_err());
        assert!(SupportFamily::new(4, 2, vec![vec![0, 1]]).is_err());
        assert!(SupportFamily::new(4, 2, vec![vec![1, 2], vec![2, 1]]).is_err());
    }

    #[test]
    fn family_text_round_trip() {
        let fam = SupportFamily::new(5, 2, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(fam.to_text(), "n=5 w=2\n1 2\n3 4\n");
        assert_eq!(SupportFamily::from_text(&fam.to_text()).unwrap(), fam);
        let c = fam.complement();
        assert_eq!(c.w(), 3);
        assert_eq!(c.supports(), &[vec![3, 4, 5], vec![1, 2, 5]]);
    }

    #[test]
    fn exact_search_examples() {
        for (n, w) in [(5, 2), (6, 3), (7, 1), (4, 0)] {
            let a = exact(n, 2, w);
            assert_eq!(a.value, binomial(n, w));
        }
        assert_eq!(brute_force(4, 4, 2), 2);
        assert_eq!(exact(4, 4, 2).value, BigUint::from(2u32));
        assert_eq!(brute_force(5, 4, 2), 2);
        assert_eq!(exact(5, 4, 2).value, BigUint::from(2u32));
        for (n, d, w) in [(6, 8, 3), (7, 5, 2), (9, 10, 4)] {
            assert_eq!(exact(n, d, w).value, BigUint::one());
        }
    }

    #[test]
    fn exact_search_matches_brute_force() {
        for n in 1..=6 {
            for w in 0..=n {
                if binomial(n, w) > BigUint::from(20u32) {
                    continue;
                }
                for d in 0..=2 * n {
                    let a = exact(n, d, w);
                    assert_eq!(a.value, BigUint::from(brute_force(n, d, w)), "n={n} d={d} w={w}");
                }
            }
        }
    }

    #[test]
    fn witness_attains_value_and_distance() {
        for n in 1..=8 {
            for w in 0..=n {
                for d in (2..=2 * n).step_by(2) {
                    let a = exact(n, d, w);
                    let fam = a.witness.as_ref().unwrap();
                    assert_eq!(BigUint::from(fam.len()), a.value);
                    assert_eq!(fam.w(), w);
                    if let Some(md) = min_distance(fam) {
                        assert!(md >= d);
                        assert_eq!(md % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn odd_distance_is_normalized() {
        let a = exact(7, 5, 3);
        assert_eq!(a.query.d, 6);
        assert_eq!(a.value, exact(7, 6, 3).value);
    }

    #[test]
    fn search_limits_are_enforced() {
        let limits = Limits::default();
        assert!(matches!(
            max_constant_weight_exact(q(15, 4, 2), &limits),
            Err(Error::NeedsUpperMode { .. })
        ));
        // C(14, 7) = 3432 fits; C(14, 6) = 3003 fits; vertex cap lowered
        let tight = Limits { cw_max_vertices: 100, ..limits };
        assert!(matches!(
            max_constant_weight_exact(q(10, 4, 3), &tight),
            Err(Error::NeedsUpperMode { .. })
        ));
    }

    #[test]
    fn budget_exceeded_gives_bracket() {
        let limits = Limits { search_budget: 2, ..Limits::default() };
        match max_constant_weight_exact(q(9, 4, 3), &limits).unwrap() {
            CwSearch::BudgetExceeded { lower, upper } => {
                assert_eq!(lower.exactness, Exactness::LowerBound);
                assert_eq!(upper.exactness, Exactness::UpperBound);
                assert!(lower.value <= upper.value);
                let fam = lower.witness.unwrap();
                assert!(min_distance(&fam).unwrap() >= 4);
            }
            CwSearch::Exact(_) => panic!("budget of 2 nodes cannot certify A(9,4,3)"),
        }
    }

    #[test]
    fn johnson_examples() {
        assert_eq!(johnson_bound_cw(q(4, 4, 2)).unwrap().value, BigUint::from(2u32));
        assert_eq!(johnson_ratio(q(4, 4, 2)).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(johnson_bound_cw(q(8, 4, 1)).unwrap().value, BigUint::one());
        assert_eq!(
            johnson_ratio(q(8, 4, 1)).unwrap(),
            BigRational::new(32.into(), 18.into())
        );
        // dn = 2w(n-w): not applicable
        assert!(johnson_bound_cw(q(4, 2, 2)).is_none());
        // d > 2w only forces the floor to 1 while dn > 4w(n - w); for large n
        // the ratio tends to d / (d - 2w)
        for n in 3..40 {
            let qq = q(n, 5, 2);
            if let Some(a) = johnson_bound_cw(qq) {
                let one = 5 * n > 4 * 2 * (n - 2);
                assert_eq!(a.value == BigUint::one(), one, "n={n}");
            }
        }
        assert_eq!(johnson_bound_cw(q(39, 5, 2)).unwrap().value, BigUint::from(4u32));
    }

    #[test]
    fn johnson_dominates_exact_on_small_grid() {
        for n in 1..=10 {
            for w in 0..=n {
                for d in (2..=2 * n).step_by(2) {
                    if let Some(j) = johnson_bound_cw(q(n, d, w)) {
                        assert!(j.value >= exact(n, d, w).value, "n={n} d={d} w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn complement_symmetry_of_exact_values() {
        for n in 1..=10 {
            for w in 0..=n / 2 {
                for d in (2..=2 * n).step_by(2) {
                    assert_eq!(exact(n, d, w).value, exact(n, d, n - w).value, "n={n} d={d} w={w}");
                }
            }
        }
    }

    #[test]
    fn upper_bound_examples() {
        let limits = Limits::default();
        let a = cw_upper_bound(q(6, 4, 5), &limits);
        let b = cw_upper_bound(q(6, 4, 1), &limits);
        assert_eq!(a.value, BigUint::one());
        assert_eq!(a.value, b.value);
        assert_eq!(a.method, CwMethod::Complement);

        let u = cw_upper_bound(q(10, 6, 3), &limits);
        assert!(u.value >= exact(10, 6, 3).value);

        // beyond search limits the closed forms are used
        let big = cw_upper_bound(q(30, 12, 8), &limits);
        assert_eq!(big.exactness, Exactness::UpperBound);
        assert_eq!(big.method, CwMethod::Johnson);
        assert_eq!(big.value, johnson_ceiling(q(30, 12, 8)));
        assert!(big.value <= johnson_bound_cw(q(30, 12, 8)).unwrap().value);
        assert_eq!(johnson_bound_cw(q(30, 12, 8)).unwrap().value, BigUint::from(45u32));
    }

    #[test]
    fn upper_bound_matches_complement() {
        let limits = Limits::default();
        for n in 1..=10 {
            for w in 0..=n {
                for d in 0..=2 * n {
                    let a = cw_upper_bound(q(n, d, w), &limits);
                    let b = cw_upper_bound(q(n, d, n - w), &limits);
                    assert_eq!(a.value, b.value, "n={n} d={d} w={w}");
                }
            }
        }
    }

    #[test]
    fn ceiling_certifies_known_values() {
        // values the search reaches and the ceiling proves
        for (n, d, w, v) in [(8, 4, 3, 8u32), (9, 4, 4, 18), (10, 4, 4, 30), (10, 4, 5, 36), (9, 6, 4, 3)] {
            assert!(johnson_ceiling(q(n, d, w)) >= BigUint::from(v));
            assert_eq!(exact(n, d, w).value, BigUint::from(v), "n={n} d={d} w={w}");
        }
        assert_eq!(johnson_ceiling(q(10, 4, 5)), BigUint::from(36u32));
    }

    #[test]
    fn ceiling_never_below_exact() {
        for n in 1..=9 {
            for w in 0..=n {
                for d in (2..=2 * n).step_by(2) {
                    assert!(johnson_ceiling(q(n, d, w)) >= exact(n, d, w).value, "n={n} d={d} w={w}");
                }
            }
        }
    }

    #[test]
    fn all_supports_counts() {
        for n in 0..=8 {
            for w in 0..=n {
                let s = all_supports(n, w);
                assert_eq!(BigUint::from(s.len()), binomial(n, w));
                assert!(s.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }
}
