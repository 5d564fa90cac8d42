//! Words, codes, and the insertion/deletion metric on them.
//!
//! A [`Word`] is a sequence over `{0, ..., q-1}`. The Levenshtein distance
//! used throughout counts insertions and deletions only, so for words of
//! lengths `m` and `k` it equals `m + k - 2 * LCS`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::config::Limits;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u32>,
    q: u32,
}

impl Word {
    pub fn new(symbols: Vec<u32>, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParams("alphabet size must be at least 1".into()));
        }
        if let Some(&bad) = symbols.iter().find(|&&a| a >= q) {
            return Err(Error::SymbolOutOfRange { symbol: bad, q });
        }
        Ok(Word { symbols, q })
    }

    pub fn empty(q: u32) -> Self {
        Word { symbols: Vec::new(), q }
    }

    pub(crate) fn from_raw(symbols: Vec<u32>, q: u32) -> Self {
        debug_assert!(symbols.iter().all(|&a| a < q));
        Word { symbols, q }
    }

    /// Parses the line format: space-separated decimal symbols.
    pub fn parse_line(line: &str, q: u32) -> Result<Self> {
        let symbols = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(symbols, q)
    }

    /// Parses a command-line word: comma- or space-separated symbols, or a
    /// contiguous digit string when `q <= 10`.
    pub fn parse_flexible(text: &str, q: u32) -> Result<Self> {
        let text = text.trim();
        if text.contains(',') {
            let symbols = text
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Word::new(symbols, q);
        }
        if text.contains(char::is_whitespace) {
            return Word::parse_line(text, q);
        }
        if text.is_empty() || text == "-" {
            return Ok(Word::empty(q));
        }
        if q > 10 {
            return Err(Error::Parse(format!(
                "contiguous word {text:?} is ambiguous for q={q}; separate symbols with commas"
            )));
        }
        let symbols = text
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(symbols, q)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Renders the word as contiguous digits when `q <= 10`, otherwise
    /// comma-separated.
    pub fn to_compact(&self) -> String {
        if self.q <= 10 {
            self.symbols.iter().map(|a| char::from_digit(*a, 10).unwrap()).collect()
        } else {
            self.symbols.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// All words of length `len` over `[q]`, in lexicographic order.
pub fn all_words(q: u32, len: usize) -> impl Iterator<Item = Word> {
    let mut next = if q == 0 && len > 0 { None } else { Some(vec![0u32; len]) };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut pos = len;
        while pos > 0 {
            pos -= 1;
            if succ[pos] + 1 < q {
                succ[pos] += 1;
                next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(Word::from_raw(current, q))
    })
}

/// A block code: distinct words sharing one length and one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    q: u32,
    n: usize,
    words: Vec<Word>,
}

impl Code {
    pub fn new(q: u32, n: usize, words: Vec<Word>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for w in &words {
            if w.alphabet_size() != q {
                return Err(Error::AlphabetMismatch { left: q, right: w.alphabet_size() });
            }
            if w.len() != n {
                return Err(Error::InvalidParams(format!(
                    "codeword {w} has length {} but the code has length {n}",
                    w.len()
                )));
            }
            if !seen.insert(w) {
                return Err(Error::InvalidParams(format!("duplicate codeword {w}")));
            }
        }
        Ok(Code { q, n, words })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Header line `q=<int> n=<int>` followed by one word per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("q={} n={}\n", self.q, self.n);
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().skip_while(|l| l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing code header".into()))?;
        let (q, n) = parse_header(header, "q", "n")?;
        let q = u32::try_from(q).map_err(|_| Error::Parse("q too large".into()))?;
        let mut words = Vec::new();
        for line in lines {
            // with n = 0 the only codeword is the empty word, written as an empty line
            if line.trim().is_empty() && n != 0 {
                continue;
            }
            words.push(Word::parse_line(line, q)?);
        }
        Code::new(q, n, words)
    }
}

pub(crate) fn parse_header(line: &str, a: &str, b: &str) -> Result<(usize, usize)> {
    let mut first = None;
    let mut second = None;
    for tok in line.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header token {tok:?}")))?;
        let val: usize = val
            .parse()
            .map_err(|_| Error::Parse(format!("bad header value {val:?}")))?;
        if key == a {
            first = Some(val);
        } else if key == b {
            second = Some(val);
        } else {
            return Err(Error::Parse(format!("unknown header key {key:?}")));
        }
    }
    match (first, second) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::Parse(format!("header must be `{a}=<int> {b}=<int>`, got {line:?}"))),
    }
}

fn same_alphabet(x: &Word, y: &Word) -> Result<()> {
    if x.q != y.q {
        return Err(Error::AlphabetMismatch { left: x.q, right: y.q });
    }
    Ok(())
}

/// LCS length of two raw symbol slices, using two rolling rows.
pub fn lcs_symbols(x: &[u32], y: &[u32]) -> usize {
    let (long, short) = if x.len() >= y.len() { (x, y) } else { (y, x) };
    let mut prev = vec![0usize; short.len() + 1];
    let mut cur = vec![0usize; short.len() + 1];
    for &a in long {
        for (j, &b) in short.iter().enumerate() {
            cur[j + 1] = if a == b {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[short.len()]
}

/// Whether `needle` occurs in `hay` as a (not necessarily contiguous)
/// subsequence.
pub fn is_subsequence(needle: &[u32], hay: &[u32]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|a| it.any(|b| b == a))
}

pub fn lcs(x: &Word, y: &Word) -> Result<usize> {
    same_alphabet(x, y)?;
    Ok(lcs_symbols(&x.symbols, &y.symbols))
}

pub fn levenshtein_distance(x: &Word, y: &Word) -> Result<usize> {
    same_alphabet(x, y)?;
    Ok(x.len() + y.len() - 2 * lcs_symbols(&x.symbols, &y.symbols))
}

/// Every word of length `|x| + t` that contains `x` as a subsequence.
///
/// Each such word has a unique leftmost embedding of `x`; the generator walks
/// that embedding, so nothing is produced twice and no set is needed for
/// deduplication. Output is in lexicographic order.
pub fn insertion_ball(x: &Word, t: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(x.len() + t);
    extend_leftmost(&x.symbols, x.q, t, &mut buf, &mut out);
    out
}

fn extend_leftmost(rest: &[u32], q: u32, budget: usize, buf: &mut Vec<u32>, out: &mut Vec<Word>) {
    match rest.split_first() {
        None => {
            if budget == 0 {
                out.push(Word::from_raw(buf.clone(), q));
                return;
            }
            for a in 0..q {
                buf.push(a);
                extend_leftmost(rest, q, budget - 1, buf, out);
                buf.pop();
            }
        }
        Some((&head, tail)) => {
            for a in 0..q {
                if a == head {
                    buf.push(a);
                    extend_leftmost(tail, q, budget, buf, out);
                    buf.pop();
                } else if budget > 0 {
                    // a free symbol before `head` must differ from it, or the
                    // embedding would not be leftmost
                    buf.push(a);
                    extend_leftmost(rest, q, budget - 1, buf, out);
                    buf.pop();
                }
            }
        }
    }
}

/// All distinct words obtained from `y` by deleting exactly `t` symbols.
pub fn deletion_ball(y: &Word, t: usize) -> Result<BTreeSet<Word>> {
    if t > y.len() {
        return Err(Error::InvalidParams(format!(
            "cannot delete {t} symbols from a word of length {}",
            y.len()
        )));
    }
    let keep = y.len() - t;
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(keep);
    choose_kept(&y.symbols, 0, keep, &mut buf, &mut |w| {
        out.insert(Word::from_raw(w.to_vec(), y.q));
    });
    Ok(out)
}

fn choose_kept(src: &[u32], from: usize, keep: usize, buf: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if buf.len() == keep {
        emit(buf);
        return;
    }
    let need = keep - buf.len();
    for i in from..=src.len() - need {
        buf.push(src[i]);
        choose_kept(src, i + 1, keep, buf, emit);
        buf.pop();
    }
}

/// Membership in the list-decoding ball: `w` is reachable from `z` with at
/// most `s` insertions and at most `t` deletions iff
/// `|z| - LCS(z, w) <= t` and `|w| - LCS(z, w) <= s`.
pub fn in_fixed_radius_ball(z: &Word, w: &Word, s: usize, t: usize) -> Result<bool> {
    same_alphabet(z, w)?;
    Ok(in_ball_symbols(&z.symbols, &w.symbols, s, t))
}

pub(crate) fn in_ball_symbols(z: &[u32], w: &[u32], s: usize, t: usize) -> bool {
    if w.len() + t < z.len() || w.len() > z.len() + s {
        return false;
    }
    let l = lcs_symbols(z, w);
    z.len() - l <= t && w.len() - l <= s
}

/// Enumerates the ball of words reachable from `z` by at most `s` insertions
/// and at most `t` deletions, under the default enumeration caps.
pub fn fixed_radius_ball(z: &Word, s: usize, t: usize) -> Result<BTreeSet<Word>> {
    fixed_radius_ball_with_limits(z, s, t, &Limits::default())
}

pub fn fixed_radius_ball_with_limits(
    z: &Word,
    s: usize,
    t: usize,
    limits: &Limits,
) -> Result<BTreeSet<Word>> {
    if z.len() > limits.ball_max_len {
        return Err(Error::CapExceeded {
            what: "ball enumeration",
            required: format!("center length {}", z.len()),
            cap: limits.ball_max_len as u64,
        });
    }
    if t.min(z.len()) > limits.ball_max_deletions {
        return Err(Error::CapExceeded {
            what: "ball enumeration",
            required: format!("{t} deletions"),
            cap: limits.ball_max_deletions as u64,
        });
    }
    let mut out = BTreeSet::new();
    for del in 0..=t.min(z.len()) {
        for shorter in deletion_ball(z, del)? {
            for ins in 0..=s {
                out.extend(insertion_ball(&shorter, ins));
            }
        }
    }
    Ok(out)
}

/// `I_q(n, t) = sum_{i=0}^{t} C(n+t, i) (q-1)^i`, the size of every
/// insertion ball of radius `t` around a length-`n` word.
pub fn insertion_ball_size(q: u32, n: usize, t: usize) -> BigUint {
    let m = (n + t) as u64;
    let q1 = BigUint::from(q.saturating_sub(1));
    let mut binom = BigUint::one();
    let mut power = BigUint::one();
    let mut total = BigUint::one();
    for i in 1..=t as u64 {
        binom = binom * BigUint::from(m - i + 1) / BigUint::from(i);
        power *= &q1;
        total += &binom * &power;
    }
    total
}

/// Minimum pairwise Levenshtein distance, `None` when the code has fewer
/// than two words (the infinite sentinel).
pub fn min_levenshtein_distance(code: &Code) -> Option<usize> {
    let words = code.words();
    let mut best: Option<usize> = None;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            let d = x.len() + y.len() - 2 * lcs_symbols(&x.symbols, &y.symbols);
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn w(s: &str, q: u32) -> Word {
        Word::parse_flexible(s, q).unwrap()
    }

    /// Longest common subsequence by enumerating every subsequence of `x`.
    fn lcs_by_enumeration(x: &[u32], y: &[u32]) -> usize {
        let mut best = 0;
        for mask in 0u32..(1 << x.len()) {
            let sub: Vec<u32> = (0..x.len()).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).collect();
            if sub.len() > best && is_subsequence(&sub, y) {
                best = sub.len();
            }
        }
        best
    }

    /// Edit distance by breadth-first search over single insertions and
    /// deletions, never growing past the longer of the two words.
    fn distance_by_bfs(x: &[u32], y: &[u32], q: u32) -> usize {
        let max_len = x.len().max(y.len());
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(x.to_vec());
        queue.push_back((x.to_vec(), 0usize));
        while let Some((cur, dist)) = queue.pop_front() {
            if cur == y {
                return dist;
            }
            let mut next = Vec::new();
            for i in 0..cur.len() {
                let mut v = cur.clone();
                v.remove(i);
                next.push(v);
            }
            if cur.len() < max_len {
                for i in 0..=cur.len() {
                    for a in 0..q {
                        let mut v = cur.clone();
                        v.insert(i, a);
                        next.push(v);
                    }
                }
            }
            for v in next {
                if seen.insert(v.clone()) {
                    queue.push_back((v, dist + 1));
                }
            }
        }
        unreachable!("y is always reachable")
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs(&w("012", 3), &w("012", 3)).unwrap(), 3);
        assert_eq!(lcs(&w("012", 3), &Word::empty(3)).unwrap(), 0);
        let (x, y) = (w("0102", 3), w("1201", 3));
        assert_eq!(lcs_by_enumeration(x.symbols(), y.symbols()), 2);
        assert_eq!(lcs(&x, &y).unwrap(), 2);
        assert_eq!(lcs(&y, &x).unwrap(), 2);
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        assert!(matches!(
            lcs(&w("01", 2), &w("01", 3)),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(levenshtein_distance(&w("01", 2), &w("01", 3)).is_err());
    }

    #[test]
    fn distance_examples() {
        let x = w("0102", 3);
        assert_eq!(levenshtein_distance(&x, &x).unwrap(), 0);
        assert_eq!(levenshtein_distance(&w("012", 3), &Word::empty(3)).unwrap(), 3);
        let y = w("1201", 3);
        assert_eq!(distance_by_bfs(x.symbols(), y.symbols(), 3), 4);
        assert_eq!(levenshtein_distance(&x, &y).unwrap(), 4);
    }

    #[test]
    fn distance_matches_bfs_on_all_short_pairs() {
        for lx in 0..=3 {
            for ly in 0..=3 {
                for x in all_words(2, lx) {
                    for y in all_words(2, ly) {
                        assert_eq!(
                            levenshtein_distance(&x, &y).unwrap(),
                            distance_by_bfs(x.symbols(), y.symbols(), 2),
                            "{x} vs {y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn insertion_ball_examples() {
        let x = w("000", 2);
        assert_eq!(insertion_ball(&x, 0), vec![x.clone()]);
        let ball = insertion_ball(&x, 1);
        let oracle: Vec<Word> = all_words(2, 4).filter(|y| is_subsequence(x.symbols(), y.symbols())).collect();
        assert_eq!(oracle.len(), 5);
        assert_eq!(ball, oracle);
        assert_eq!(insertion_ball_size(2, 3, 1), BigUint::from(5u32));
        assert_eq!(insertion_ball_size(4, 3, 1), BigUint::from(13u32));
        assert_eq!(insertion_ball(&w("012", 4), 1).len(), 13);
        assert_eq!(insertion_ball_size(7, 5, 0), BigUint::one());
    }

    #[test]
    fn insertion_ball_matches_filter_oracle() {
        for q in 1..=3u32 {
            for n in 0..=3 {
                for t in 0..=2 {
                    for x in all_words(q, n) {
                        let ball = insertion_ball(&x, t);
                        let oracle: Vec<Word> = all_words(q, n + t)
                            .filter(|y| is_subsequence(x.symbols(), y.symbols()))
                            .collect();
                        assert_eq!(ball, oracle, "q={q} x={x} t={t}");
                        assert_eq!(BigUint::from(ball.len()), insertion_ball_size(q, n, t));
                    }
                }
            }
        }
    }

    #[test]
    fn deletion_ball_examples() {
        let y = w("0011", 2);
        assert_eq!(deletion_ball(&y, 0).unwrap().into_iter().collect::<Vec<_>>(), vec![y.clone()]);
        let got: Vec<String> = deletion_ball(&y, 2).unwrap().iter().map(Word::to_compact).collect();
        assert_eq!(got, vec!["00", "01", "11"]);
        assert!(deletion_ball(&y, 5).is_err());
    }

    #[test]
    fn deletion_ball_of_distinct_symbols_hits_binomial() {
        let y = w("012345", 6);
        for t in 0..=6 {
            let expected = (0..t).fold(1usize, |acc, i| acc * (6 - i) / (i + 1));
            assert_eq!(deletion_ball(&y, t).unwrap().len(), expected);
        }
    }

    #[test]
    fn fixed_radius_ball_examples() {
        let z = w("0120", 3);
        let ball = fixed_radius_ball(&z, 0, 0).unwrap();
        assert_eq!(ball.into_iter().collect::<Vec<_>>(), vec![z.clone()]);

        let big = fixed_radius_ball(&z, 1, 1).unwrap();
        assert!(fixed_radius_ball(&z, 0, 1).unwrap().is_subset(&big));
        assert!(fixed_radius_ball(&z, 1, 0).unwrap().is_subset(&big));
    }

    #[test]
    fn fixed_radius_ball_cap() {
        let z = Word::new(vec![0; 17], 2).unwrap();
        assert!(matches!(fixed_radius_ball(&z, 0, 1), Err(Error::CapExceeded { .. })));
        let z = Word::new(vec![0; 8], 2).unwrap();
        assert!(matches!(fixed_radius_ball(&z, 0, 5), Err(Error::CapExceeded { .. })));
    }

    /// Every word reachable by applying up to `s` insertions and `t`
    /// deletions in any interleaving.
    fn ball_by_edit_sequences(z: &[u32], q: u32, s: usize, t: usize) -> HashSet<Vec<u32>> {
        let mut seen = HashSet::new();
        let mut stack = vec![(z.to_vec(), 0usize, 0usize)];
        let mut visited = HashSet::new();
        while let Some((cur, si, ti)) = stack.pop() {
            if !visited.insert((cur.clone(), si, ti)) {
                continue;
            }
            seen.insert(cur.clone());
            if ti < t {
                for i in 0..cur.len() {
                    let mut v = cur.clone();
                    v.remove(i);
                    stack.push((v, si, ti + 1));
                }
            }
            if si < s {
                for i in 0..=cur.len() {
                    for a in 0..q {
                        let mut v = cur.clone();
                        v.insert(i, a);
                        stack.push((v, si + 1, ti));
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn ball_membership_and_enumeration_agree_with_edit_sequences() {
        for q in 2..=3u32 {
            for len in 0..=4usize {
                if q == 3 && len > 3 {
                    continue;
                }
                for z in all_words(q, len) {
                    for s in 0..=2 {
                        for t in 0..=2 {
                            let oracle = ball_by_edit_sequences(z.symbols(), q, s, t);
                            let enumerated = fixed_radius_ball(&z, s, t).unwrap();
                            let as_vecs: HashSet<Vec<u32>> =
                                enumerated.iter().map(|w| w.symbols().to_vec()).collect();
                            assert_eq!(as_vecs, oracle, "z={z} s={s} t={t}");
                            for m in len.saturating_sub(t + 1)..=len + s + 1 {
                                for cand in all_words(q, m) {
                                    assert_eq!(
                                        in_fixed_radius_ball(&z, &cand, s, t).unwrap(),
                                        oracle.contains(cand.symbols()),
                                        "z={z} w={cand} s={s} t={t}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn min_distance_examples() {
        let x = w("0120", 3);
        let single = Code::new(3, 4, vec![x.clone()]).unwrap();
        assert_eq!(min_levenshtein_distance(&single), None);
        let y = w("0121", 3);
        let pair = Code::new(3, 4, vec![x, y]).unwrap();
        assert_eq!(min_levenshtein_distance(&pair), Some(2));
    }

    #[test]
    fn code_text_round_trip() {
        let code = Code::new(12, 3, vec![w("0,11,3", 12), w("10,2,2", 12)]).unwrap();
        let text = code.to_text();
        assert_eq!(text, "q=12 n=3\n0 11 3\n10 2 2\n");
        assert_eq!(Code::from_text(&text).unwrap(), code);
    }

    #[test]
    fn code_rejects_bad_members() {
        assert!(Code::new(2, 2, vec![w("01", 2), w("01", 2)]).is_err());
        assert!(Code::new(2, 2, vec![w("011", 2)]).is_err());
        assert!(Code::new(2, 2, vec![w("01", 3)]).is_err());
        assert!(Word::new(vec![0, 3], 3).is_err());
    }

    #[test]
    fn parse_flexible_forms() {
        assert_eq!(w("0,1,2", 3), w("012", 3));
        assert_eq!(w("0 1 2", 3), w("012", 3));
        assert!(Word::parse_flexible("012", 11).is_err());
        assert_eq!(Word::parse_flexible("10,0", 11).unwrap().symbols(), &[10, 0]);
    }

    #[test]
    fn all_words_is_lexicographic() {
        let v: Vec<String> = all_words(2, 2).map(|w| w.to_compact()).collect();
        assert_eq!(v, vec!["00", "01", "10", "11"]);
        assert_eq!(all_words(3, 0).count(), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word(q: u32, max_len: usize) -> impl Strategy<Value = Word> {
            prop::collection::vec(0..q, 0..=max_len).prop_map(move |v| Word::new(v, q).unwrap())
        }

        proptest! {
            #[test]
            fn distance_is_lcs_identity_and_matches_bfs(x in word(3, 5), y in word(3, 5)) {
                let d = levenshtein_distance(&x, &y).unwrap();
                prop_assert_eq!(d, x.len() + y.len() - 2 * lcs(&x, &y).unwrap());
                prop_assert_eq!(d, distance_by_bfs(x.symbols(), y.symbols(), 3));
            }

            #[test]
            fn triangle_inequality(x in word(3, 8), y in word(3, 8), z in word(3, 8)) {
                let dxz = levenshtein_distance(&x, &z).unwrap();
                let dxy = levenshtein_distance(&x, &y).unwrap();
                let dyz = levenshtein_distance(&y, &z).unwrap();
                prop_assert!(dxz <= dxy + dyz);
            }

            #[test]
            fn deletion_ball_matches_subset_enumeration(y in word(3, 8), t in 0usize..4) {
                prop_assume!(t <= y.len());
                let got = deletion_ball(&y, t).unwrap();
                let keep = y.len() - t;
                let mut oracle = BTreeSet::new();
                for mask in 0u32..(1 << y.len()) {
                    if mask.count_ones() as usize == keep {
                        let sub: Vec<u32> = (0..y.len()).filter(|i| mask >> i & 1 == 1).map(|i| y.symbols()[i]).collect();
                        oracle.insert(Word::new(sub, 3).unwrap());
                    }
                }
                let binom = (0..t).fold(1usize, |acc, i| acc * (y.len() - i) / (i + 1));
                prop_assert!(got.len() <= binom);
                prop_assert_eq!(got, oracle);
            }

            #[test]
            fn min_distance_matches_pairwise(words in prop::collection::btree_set(prop::collection::vec(0u32..3, 5), 0..=6)) {
                let words: Vec<Word> = words.into_iter().map(|v| Word::new(v, 3).unwrap()).collect();
                let code = Code::new(3, 5, words.clone()).unwrap();
                let mut brute: Option<usize> = None;
                for i in 0..words.len() {
                    for j in 0..words.len() {
                        if i != j {
                            let d = distance_by_bfs(words[i].symbols(), words[j].symbols(), 3);
                            brute = Some(brute.map_or(d, |b| b.min(d)));
                        }
                    }
                }
                prop_assert_eq!(min_levenshtein_distance(&code), brute);
            }
        }
    }
}
