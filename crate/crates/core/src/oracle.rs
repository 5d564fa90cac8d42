//! Exhaustive ground truth at small parameters: the largest code with a
//! given minimum Levenshtein distance, list sizes over every center, and the
//! prefix-shortening average.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{CodeParams, ListParams};
use crate::clique::{max_clique, CompatibilityGraph};
use crate::config::{space_size, Limits};
use crate::error::{Error, Result};
use crate::levenshtein::{
    all_words, in_ball_symbols, insertion_ball_size, is_subsequence, lcs_symbols, min_levenshtein_distance, Code, Word,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub params: CodeParams,
    pub value: usize,
    pub witness: Code,
    pub search_space_size: BigUint,
    pub elapsed: Duration,
    /// False when the node budget ran out; `value` is then only a lower bound.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub q: u32,
    pub n: usize,
    pub d: usize,
    pub value: usize,
    pub exact: bool,
    pub search_space_size: String,
    pub elapsed_ms: f64,
    /// Witness in code text form.
    pub witness: String,
}

impl OracleResult {
    pub fn to_record(&self) -> OracleRecord {
        OracleRecord {
            q: self.params.q,
            n: self.params.n,
            d: self.params.d,
            value: self.value,
            exact: self.exact,
            search_space_size: self.search_space_size.to_string(),
            elapsed_ms: self.elapsed.as_secs_f64() * 1e3,
            witness: self.witness.to_text(),
        }
    }
}

fn check_cap(what: &'static str, q: u32, m: usize, limits: &Limits) -> Result<u64> {
    let size = space_size(q, m);
    if size > limits.max_enum {
        return Err(Error::CapExceeded {
            what,
            required: BigUint::from(q).pow(m as u32).to_string(),
            cap: limits.max_enum,
        });
    }
    Ok(size)
}

/// Largest code in `[q]^n` with minimum Levenshtein distance `>= d`, by
/// maximum clique over all words in lexicographic order.
pub fn max_indel_code_exact(p: CodeParams, limits: &Limits) -> Result<OracleResult> {
    let start = Instant::now();
    check_cap("word space q^n", p.q, p.n, limits)?;
    let words: Vec<Word> = all_words(p.q, p.n).collect();
    let n = p.n;
    let g = CompatibilityGraph::from_fn(words.len(), |i, j| {
        2 * (n - lcs_symbols(words[i].symbols(), words[j].symbols())) >= p.d
    });
    let out = max_clique(&g, limits.search_budget);
    let witness = Code::new(p.q, p.n, out.clique.iter().map(|&i| words[i].clone()).collect())?;
    Ok(OracleResult {
        params: p,
        value: witness.len(),
        witness,
        search_space_size: BigUint::from(words.len()),
        elapsed: start.elapsed(),
        exact: out.exact,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListScan {
    pub max_list: usize,
    /// First center (lexicographically) attaining `max_list`.
    pub argmax: Vec<u32>,
    pub centers: u64,
}

/// Largest `|B(z, s, t) ∩ C|` over every center `z` of length `n - s + t`.
pub fn verify_list_bound_everywhere(code: &Code, lp: ListParams, limits: &Limits) -> Result<ListScan> {
    let n = code.n();
    if lp.s > n {
        return Err(Error::InvalidParams(format!("s={} exceeds n={n}", lp.s)));
    }
    let m = n - lp.s + lp.t;
    let centers = check_cap("center space q^(n-s+t)", code.q(), m, limits)?;
    let mut best: Option<(usize, Vec<u32>)> = None;
    for z in all_words(code.q(), m) {
        let size = code
            .words()
            .iter()
            .filter(|c| in_ball_symbols(z.symbols(), c.symbols(), lp.s, lp.t))
            .count();
        if best.as_ref().is_none_or(|(b, _)| size > *b) {
            best = Some((size, z.symbols().to_vec()));
        }
    }
    let (max_list, argmax) = best.expect("at least one center");
    Ok(ListScan { max_list, argmax, centers })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShorteningReport {
    pub code_size: usize,
    pub s: usize,
    pub t: usize,
    /// `|C| I_q(n-s, t) / q^(n-s+t)` as `num/den`.
    pub predicted: String,
    /// Mean over every `y`, when the space is within the cap.
    pub exact_mean: Option<String>,
    pub exact_matches: Option<bool>,
    pub sample_mean: f64,
    pub standard_error: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Prefixes of length `n - s`; distinct whenever the minimum distance
/// exceeds `2s`.
pub fn shorten_prefixes(code: &Code, s: usize) -> Result<Vec<Vec<u32>>> {
    let n = code.n();
    if s > n {
        return Err(Error::InvalidParams(format!("s={s} exceeds n={n}")));
    }
    if let Some(md) = min_levenshtein_distance(code) {
        if md <= 2 * s {
            return Err(Error::InvalidParams(format!("minimum distance {md} must exceed 2s={}", 2 * s)));
        }
    }
    let prefixes: Vec<Vec<u32>> = code.words().iter().map(|c| c.symbols()[..n - s].to_vec()).collect();
    let mut sorted = prefixes.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != prefixes.len() {
        return Err(Error::EncodingCollision { support: "prefix map".into() });
    }
    Ok(prefixes)
}

fn list_in_supersequence(prefixes: &[Vec<u32>], y: &[u32]) -> usize {
    prefixes.iter().filter(|p| is_subsequence(p, y)).count()
}

/// Average of `|D_t(y) ∩ π(C)|` over `y ∈ [q]^(n-s+t)`, where `π` keeps
/// the first `n - s` symbols: exactly over all `y` when within the cap,
/// and by seeded uniform sampling.
pub fn shortening_experiment(code: &Code, s: usize, t: usize, trials: u64, seed: u64, limits: &Limits) -> Result<ShorteningReport> {
    let q = code.q();
    let prefixes = shorten_prefixes(code, s)?;
    let m = code.n() - s + t;
    let denom = BigUint::from(q).pow(m as u32);
    let predicted = BigRational::new(
        (BigUint::from(code.len()) * insertion_ball_size(q, code.n() - s, t)).into(),
        denom.clone().into(),
    );

    let (exact_mean, exact_matches) = if space_size(q, m) <= limits.max_enum {
        let total: usize = all_words(q, m).map(|y| list_in_supersequence(&prefixes, y.symbols())).sum();
        let mean = BigRational::new(BigUint::from(total).into(), denom.into());
        (Some(mean.to_string()), Some(mean == predicted))
    } else {
        (None, None)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sum_sq) = (0f64, 0f64);
    let mut y = vec![0u32; m];
    for _ in 0..trials {
        for v in y.iter_mut() {
            *v = rng.random_range(0..q);
        }
        let k = list_in_supersequence(&prefixes, &y) as f64;
        sum += k;
        sum_sq += k * k;
    }
    let (sample_mean, standard_error) = if trials == 0 {
        (0.0, 0.0)
    } else {
        let n = trials as f64;
        let mean = sum / n;
        let var = if trials > 1 { ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0) } else { 0.0 };
        (mean, (var / n).sqrt())
    };

    Ok(ShorteningReport {
        code_size: code.len(),
        s,
        t,
        predicted: predicted.to_string(),
        exact_mean,
        exact_matches,
        sample_mean,
        standard_error,
        trials,
        seed,
    })
}

/// `predicted` as a float, for comparing against a sample mean.
pub fn predicted_mean(code_size: usize, q: u32, n: usize, s: usize, t: usize) -> f64 {
    let num = BigUint::from(code_size) * insertion_ball_size(q, n - s, t);
    let den = BigUint::from(q).pow((n - s + t) as u32);
    if den.is_zero() {
        return 0.0;
    }
    let r = BigRational::new(num.into(), den.into());
    num_traits::ToPrimitive::to_f64(&r).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levenshtein::levenshtein_distance;

    fn params(q: u32, n: usize, d: usize) -> CodeParams {
        CodeParams::new(q, n, d).unwrap()
    }

    /// Largest subset of `[q]^n` with pairwise distance >= d, over all
    /// subsets (only for q^n <= 16).
    fn brute_force(q: u32, n: usize, d: usize) -> usize {
        let words: Vec<Word> = all_words(q, n).collect();
        let k = words.len();
        let mut best = 0;
        for mask in 1u32..(1 << k) {
            let chosen: Vec<&Word> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &words[i]).collect();
            if chosen.len() <= best {
                continue;
            }
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i + 1..].iter().all(|b| levenshtein_distance(a, b).unwrap() >= d));
            if ok {
                best = chosen.len();
            }
        }
        best
    }

    #[test]
    fn matches_subset_enumeration() {
        for (q, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 2)] {
            for d in 1..=2 * n {
                let r = max_indel_code_exact(params(q, n, d), &Limits::default()).unwrap();
                assert!(r.exact);
                assert_eq!(r.value, brute_force(q, n, d), "q={q} n={n} d={d}");
                assert!(min_levenshtein_distance(&r.witness).is_none_or(|m| m >= d));
            }
        }
    }

    #[test]
    fn known_small_values() {
        let l = Limits::default();
        assert_eq!(max_indel_code_exact(params(3, 2, 1), &l).unwrap().value, 9);
        assert_eq!(max_indel_code_exact(params(3, 2, 4), &l).unwrap().value, 3);
        assert_eq!(max_indel_code_exact(params(2, 3, 4), &l).unwrap().value, 2);
        for n in 1..=4 {
            assert_eq!(max_indel_code_exact(params(3, n, 2 * n), &l).unwrap().value, 3);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let l = Limits::default().with_max_enum(100);
        let err = max_indel_code_exact(params(3, 5, 2), &l).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 100, .. }));
        assert!(err.to_string().contains("243"));
    }

    #[test]
    fn relabeling_invariance() {
        let l = Limits::default();
        for d in 2..=6 {
            let r = max_indel_code_exact(params(3, 3, d), &l).unwrap();
            let perm = [2u32, 0, 1];
            let relabeled: Vec<Word> = r
                .witness
                .words()
                .iter()
                .map(|w| Word::new(w.symbols().iter().map(|&a| perm[a as usize]).collect(), 3).unwrap())
                .collect();
            let code = Code::new(3, 3, relabeled).unwrap();
            assert!(min_levenshtein_distance(&code).is_none_or(|m| m >= d));
            // the reverse map is also a symmetry, so the maximum cannot grow either
            assert_eq!(code.len(), r.value);
        }
    }

    #[test]
    fn list_scan() {
        let l = Limits::default();
        let x = Word::new(vec![0, 1, 0], 2).unwrap();
        let single = Code::new(2, 3, vec![x]).unwrap();
        let scan = verify_list_bound_everywhere(&single, ListParams::new(1, 1), &l).unwrap();
        assert_eq!(scan.max_list, 1);
        assert_eq!(scan.centers, 8);

        let all = Code::new(2, 2, all_words(2, 2).collect()).unwrap();
        let scan = verify_list_bound_everywhere(&all, ListParams::new(0, 1), &l).unwrap();
        // 000 contains only 00; 010 contains 00, 01, 10
        assert_eq!(scan.max_list, 3);
        assert_eq!(scan.argmax, vec![0, 1, 0]);
    }

    #[test]
    fn averaging_identity() {
        let l = Limits::default();
        for (q, n, d) in [(2, 4, 4), (2, 5, 4), (3, 3, 4), (3, 4, 6), (2, 3, 2)] {
            let code = max_indel_code_exact(params(q, n, d), &l).unwrap().witness;
            for s in 0..=(d - 1) / 2 {
                for t in 0..=2 {
                    let rep = shortening_experiment(&code, s, t, 4000, 7, &l).unwrap();
                    assert_eq!(rep.exact_matches, Some(true), "q={q} n={n} d={d} s={s} t={t}: {rep:?}");
                    let p = predicted_mean(code.len(), q, n, s, t);
                    assert!((rep.sample_mean - p).abs() <= 4.0 * rep.standard_error + 1e-12, "{rep:?}");
                }
            }
        }
        let rep = shortening_experiment(
            &Code::new(2, 2, vec![Word::new(vec![0, 1], 2).unwrap()]).unwrap(),
            0,
            0,
            10,
            1,
            &l,
        )
        .unwrap();
        assert_eq!(rep.exact_mean.as_deref(), Some("1/4"));
    }

    #[test]
    fn shortening_rejects_small_distance() {
        let code = Code::new(2, 2, vec![Word::new(vec![0, 1], 2).unwrap(), Word::new(vec![1, 0], 2).unwrap()]).unwrap();
        assert!(shortening_experiment(&code, 1, 0, 10, 1, &Limits::default()).is_err());
        assert!(shortening_experiment(&code, 0, 1, 10, 1, &Limits::default()).is_ok());
    }

    #[test]
    fn sampling_is_seeded() {
        let l = Limits::default();
        let code = max_indel_code_exact(params(2, 4, 4), &l).unwrap().witness;
        let a = shortening_experiment(&code, 1, 2, 500, 42, &l).unwrap();
        let b = shortening_experiment(&code, 1, 2, 500, 42, &l).unwrap();
        assert_eq!(a, b);
    }
}
