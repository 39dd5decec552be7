//! Integer partitions, which double as Young-diagram shapes.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::parse_int_list;

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `(k, 1^(n-k))`; requires `1 <= k <= n`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidPartition(format!(
                "hook arm {k} must lie in 1..={n}"
            )));
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of squares.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sum of the even-indexed parts `λ_2 + λ_4 + ...`.
    pub fn even_row_total(&self) -> usize {
        self.parts.iter().skip(1).step_by(2).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `Some(k)` when the shape is the hook `(k, 1^(n-k))` with `n >= 1`.
    pub fn hook_arm(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((&k, rest)) if rest.iter().all(|&p| p == 1) => Some(k),
            _ => None,
        }
    }

    /// Number of columns whose length is odd.
    pub fn odd_columns(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .filter(|&&c| c % 2 == 1)
            .count()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"4,3,1,1"`, `"4 3 1 1"` or `"(4,3,1,1)"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        Partition::new(parse_int_list(inner)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}
