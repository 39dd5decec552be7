//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::Sign;

/// A permutation of `{1, ..., n}` written as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=n`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::parse(i + 1, format!("value {v} is outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::parse(i + 1, format!("value {v} appears twice")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|word| Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    /// The value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Number of pairs `i < j` with `word[i] > word[j]`.
    pub fn inversions(&self) -> usize {
        inversion_count(&self.word)
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.inversions())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| self.word[v - 1] == i + 1)
    }

    /// 1-based positions `i` with `word[i] > word[i + 1]`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }
}

pub(crate) fn inversion_count(word: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in word.iter().enumerate() {
        count += word[i + 1..].iter().filter(|&&b| b < a).count();
    }
    count
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

/// Splits on whitespace and commas; reports the 1-based index of a bad token.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(i + 1, format!("`{tok}` is not a positive integer")))
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space- or comma-separated one-line notation, e.g. `"2 9 1 5"`.
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_int_list(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.iter().join(" "))
    }
}
