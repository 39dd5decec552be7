//! Pattern containment, the {213, 231}-avoiders and their signed
//! generating function by longest increasing subsequence.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{parse_int_list, Permutation};
use crate::poly::IntPolynomial;
use crate::rsk::{insertion_tableau, lis};

/// A short permutation used as a pattern, written `"213"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(word: Permutation) -> Self {
        Pattern(word)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Digits run together (`"213"`), or separated like one-line notation
    /// for patterns of length ten or more.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(|c: char| c.is_whitespace()) {
            parse_int_list(s)?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(i + 1, format!("`{c}` is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Pattern(Permutation::new(word)?))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() < 10 {
            write!(f, "{}", self.0.as_slice().iter().join(""))
        } else {
            self.0.fmt(f)
        }
    }
}

/// Parses a comma-separated pattern list such as `"213,231"`.
pub fn parse_pattern_set(s: &str) -> Result<Vec<Pattern>> {
    s.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<Pattern>().map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(i + 1, message),
                other => other,
            })
        })
        .collect()
}

fn same_relative_order(values: &[usize], pattern: &[usize]) -> bool {
    (0..pattern.len()).all(|a| {
        (a + 1..pattern.len()).all(|b| (values[a] < values[b]) == (pattern[a] < pattern[b]))
    })
}

/// Whether some subsequence of `pi` is order-isomorphic to `tau`.
pub fn contains_pattern(pi: &Permutation, tau: &Pattern) -> bool {
    let word = pi.as_slice();
    let pat = tau.0.as_slice();
    (0..word.len()).combinations(pat.len()).any(|idx| {
        let values: Vec<usize> = idx.iter().map(|&i| word[i]).collect();
        same_relative_order(&values, pat)
    })
}

pub fn avoids_all(pi: &Permutation, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|tau| !contains_pattern(pi, tau))
}

/// Whether `prefix` has a subsequence that, followed by `v`, is
/// order-isomorphic to `pat`. Letters are matched left to right and a
/// partial match is dropped as soon as its relative order breaks.
fn occurrence_ending_with(
    prefix: &[usize],
    v: usize,
    pat: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    let last = pat.len() - 1;
    if j == last {
        return true;
    }
    // leave room for the pattern letters still unmatched
    for pos in start..(prefix.len() + j + 1).saturating_sub(last) {
        let x = prefix[pos];
        let fits = (x < v) == (pat[j] < pat[last])
            && chosen
                .iter()
                .zip(pat)
                .all(|(&y, &p)| (y < x) == (p < pat[j]));
        if fits {
            chosen.push(x);
            if occurrence_ending_with(prefix, v, pat, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Lexicographic walk over `S_n` that yields the permutations avoiding every
/// pattern. A prefix containing a pattern is abandoned, since every
/// extension of it contains the pattern too.
#[derive(Debug, Clone)]
pub struct AvoiderIter {
    n: usize,
    patterns: Vec<Pattern>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl AvoiderIter {
    /// Whether appending `v` keeps the prefix free of every pattern.
    fn extends_cleanly(&self, v: usize) -> bool {
        let mut chosen = Vec::new();
        self.patterns.iter().all(|tau| {
            let pat = tau.0.as_slice();
            !pat.is_empty() && {
                chosen.clear();
                !occurrence_ending_with(&self.prefix, v, pat, 0, &mut chosen)
            }
        })
    }

    fn pop(&mut self) -> Option<usize> {
        let v = self.prefix.pop()?;
        self.used[v] = false;
        Some(v)
    }
}

impl Iterator for AvoiderIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut from = 1;
        if self.started {
            match self.pop() {
                Some(v) => from = v + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        loop {
            if self.prefix.len() == self.n {
                return Some(Permutation::from_word_unchecked(self.prefix.clone()));
            }
            let candidate = (from..=self.n).find(|&v| !self.used[v] && self.extends_cleanly(v));
            match candidate {
                Some(v) => {
                    self.prefix.push(v);
                    self.used[v] = true;
                    from = 1;
                }
                None => match self.pop() {
                    Some(v) => from = v + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

/// Permutations of `S_n` avoiding all of `patterns`, in lexicographic order.
pub fn enumerate_avoiders(n: usize, patterns: &[Pattern]) -> AvoiderIter {
    AvoiderIter {
        n,
        patterns: patterns.to_vec(),
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        started: false,
        // every permutation contains the empty pattern
        done: patterns.iter().any(Pattern::is_empty),
    }
}

/// The patterns 213 and 231.
pub fn hook_patterns() -> Vec<Pattern> {
    parse_pattern_set("213,231").expect("literal patterns")
}

/// `Some(k)` when the insertion tableau of `pi` has hook shape
/// `(k, 1^(n-k))` and its row word is `1 2 ... n`.
pub fn is_hook_identity_form(pi: &Permutation) -> Option<usize> {
    let p = insertion_tableau(pi);
    let k = p.shape().hook_arm()?;
    (p.row_word() == Permutation::identity(pi.len())).then_some(k)
}

/// Whether `pi` has exactly `n - k` descents, its descent tops read
/// `n, n-1, ..., k+1` and the remaining letters read `1, 2, ..., k`.
pub fn descent_structure_check(pi: &Permutation, k: usize) -> bool {
    let n = pi.len();
    if k == 0 || k > n {
        return false;
    }
    let descents = pi.descent_set();
    if descents.len() != n - k {
        return false;
    }
    let mut is_descent = vec![false; n + 1];
    for &i in &descents {
        is_descent[i] = true;
    }
    let (tops, rest): (Vec<usize>, Vec<usize>) = (1..=n).partition(|&i| is_descent[i]);
    let tops: Vec<usize> = tops.into_iter().map(|i| pi.at(i)).collect();
    let rest: Vec<usize> = rest.into_iter().map(|i| pi.at(i)).collect();
    tops.iter().copied().eq((k + 1..=n).rev()) && rest.iter().copied().eq(1..=k)
}

/// `Σ sign(π) q^lis(π)` over the given permutations.
pub fn signed_lis_polynomial<I>(perms: I) -> Result<IntPolynomial>
where
    I: IntoIterator<Item = Permutation>,
{
    let mut poly = IntPolynomial::zero();
    for pi in perms {
        poly.add_term(lis(&pi), pi.sign().to_i64())?;
    }
    Ok(poly)
}

/// `q (q+1)^⌊(n-1)/2⌋ (q-1)^⌊n/2⌋`, the signed lis-generating function of
/// the {213, 231}-avoiders of length `n >= 1`.
pub fn avoider_sign_lis_closed_form(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let exp = |x: usize| u32::try_from(x).map_err(|_| Error::Overflow("exponent"));
    let q = IntPolynomial::monomial(1, 1);
    let plus = IntPolynomial::new(vec![1, 1]).checked_pow(exp((n - 1) / 2)?)?;
    let minus = IntPolynomial::new(vec![-1, 1]).checked_pow(exp(n / 2)?)?;
    q.checked_mul(&plus)?.checked_mul(&minus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(!contains_pattern(&perm("1 2 3"), &pat("21")));
        assert!(!contains_pattern(&perm("2 5 1 6 8 3 9 4 7"), &pat("321")));
        assert!(contains_pattern(&perm("2 1 3"), &pat("213")));
        assert!(contains_pattern(&perm("2 9 1 5 6 4 8 3 7"), &pat("321")));
        assert!(contains_pattern(
            &perm("1 2"),
            &Pattern::new(Permutation::identity(0))
        ));
        assert!(!contains_pattern(&perm("1 2"), &pat("123")));
    }

    #[test]
    fn pattern_text() {
        assert_eq!(pat("213").to_string(), "213");
        assert_eq!(
            parse_pattern_set("213,231").unwrap(),
            vec![pat("213"), pat("231")]
        );
        assert!(matches!(
            parse_pattern_set("213,2x1"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!("113".parse::<Pattern>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn avoider_examples() {
        let a3: Vec<String> = enumerate_avoiders(3, &hook_patterns())
            .map(|p| p.to_string())
            .collect();
        assert_eq!(a3, ["1 2 3", "1 3 2", "3 1 2", "3 2 1"]);
        let a1: Vec<Permutation> = enumerate_avoiders(1, &[pat("21")]).collect();
        assert_eq!(a1, vec![perm("1")]);
        for n in 1..=8 {
            assert_eq!(
                enumerate_avoiders(n, &hook_patterns()).count(),
                1 << (n - 1)
            );
        }
        assert_eq!(enumerate_avoiders(0, &hook_patterns()).count(), 1);
        assert_eq!(enumerate_avoiders(4, &[]).count(), 24);
    }

    #[test]
    fn avoiders_match_a_plain_filter() {
        let sets = [
            hook_patterns(),
            vec![pat("321")],
            vec![pat("132"), pat("4231")],
        ];
        for patterns in &sets {
            for n in 0..=7 {
                let filtered: Vec<Permutation> = Permutation::all(n)
                    .filter(|p| avoids_all(p, patterns))
                    .collect();
                let walked: Vec<Permutation> = enumerate_avoiders(n, patterns).collect();
                assert_eq!(walked, filtered, "n={n} patterns={patterns:?}");
            }
        }
    }

    #[test]
    fn hook_identity_examples() {
        assert_eq!(is_hook_identity_form(&perm("1 2 3")), Some(3));
        assert_eq!(is_hook_identity_form(&perm("3 2 1")), Some(1));
        assert_eq!(is_hook_identity_form(&perm("2 1 3")), None);
    }

    #[test]
    fn descent_structure_examples() {
        assert!(descent_structure_check(&perm("1 2 3"), 3));
        assert!(descent_structure_check(&perm("3 2 1"), 1));
        for k in 0..=4 {
            assert!(!descent_structure_check(&perm("2 1 3"), k));
        }
        assert!(descent_structure_check(&perm("4 1 3 2"), 2));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            avoider_sign_lis_closed_form(3).unwrap().to_string(),
            "0 -1 0 1"
        );
        assert_eq!(avoider_sign_lis_closed_form(1).unwrap().to_string(), "0 1");
        for n in 2..=12 {
            assert_eq!(avoider_sign_lis_closed_form(n).unwrap().eval(1).unwrap(), 0);
        }
        assert!(avoider_sign_lis_closed_form(0).is_err());
        let brute = signed_lis_polynomial(enumerate_avoiders(3, &hook_patterns())).unwrap();
        assert_eq!(brute.to_string(), "0 -1 0 1");
    }
}
