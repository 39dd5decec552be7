//! Beissinger's direct construction of the tableau of an involution.
//!
//! Cycles are processed in increasing order of their largest element. A
//! fixed point `(a)` is appended to the first row. For a 2-cycle `(a, b)`,
//! `a` is row-inserted and `b` is appended to the row just below the one in
//! which the insertion stopped. The result equals the RSK insertion tableau
//! of the involution.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rsk::insert_in_place;
use crate::sign::Sign;
use crate::tableau::{StandardTableau, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cycle {
    Fixed(usize),
    /// `(a, b)` with `a < b`.
    Pair(usize, usize),
}

impl Cycle {
    pub fn max(self) -> usize {
        match self {
            Cycle::Fixed(a) => a,
            Cycle::Pair(_, b) => b,
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cycle::Fixed(a) => write!(f, "({a})"),
            Cycle::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Disjoint cycles of an involution, sorted by their largest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleDecomposition {
    cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn fixed_points(&self) -> usize {
        self.cycles
            .iter()
            .filter(|c| matches!(c, Cycle::Fixed(_)))
            .count()
    }

    pub fn two_cycles(&self) -> usize {
        self.cycles.len() - self.fixed_points()
    }

    pub fn to_permutation(&self) -> Permutation {
        let n = self.cycles.iter().map(|c| c.max()).max().unwrap_or(0);
        let mut word: Vec<usize> = (1..=n).collect();
        for c in &self.cycles {
            if let Cycle::Pair(a, b) = *c {
                word[a - 1] = b;
                word[b - 1] = a;
            }
        }
        Permutation::from_word_unchecked(word)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycles.iter().try_for_each(|c| c.fmt(f))
    }
}

impl FromStr for CycleDecomposition {
    type Err = Error;

    /// Parses `"(1,4)(6)(3,7)(2,8)(5,9)"`. The cycles may be listed in any
    /// order; the result is normalized.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        let mut group = 0;
        while !rest.is_empty() {
            group += 1;
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])));
            let Some((body, tail)) = body else {
                return Err(Error::parse(group, "expected a parenthesized cycle"));
            };
            let nums: Vec<usize> = body
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(group, format!("bad cycle `({body})`")))?;
            let cycle = match nums[..] {
                [a] if a > 0 => Cycle::Fixed(a),
                [a, b] if a > 0 && b > 0 && a != b => Cycle::Pair(a.min(b), a.max(b)),
                _ => {
                    return Err(Error::parse(
                        group,
                        format!("`({body})` is not a fixed point or a 2-cycle"),
                    ))
                }
            };
            cycles.push(cycle);
            rest = tail.trim_start();
        }
        let n = cycles.iter().map(|c| c.max()).max().unwrap_or(0);
        let mut seen = vec![false; n + 1];
        for (i, c) in cycles.iter().enumerate() {
            let elems = match *c {
                Cycle::Fixed(a) => vec![a],
                Cycle::Pair(a, b) => vec![a, b],
            };
            for e in elems {
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::parse(i + 1, format!("element {e} appears twice")));
                }
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::parse(
                cycles.len(),
                format!("element {missing} is missing"),
            ));
        }
        cycles.sort_by_key(|c| c.max());
        Ok(CycleDecomposition { cycles })
    }
}

fn require_involution(pi: &Permutation) -> Result<()> {
    if pi.is_involution() {
        Ok(())
    } else {
        Err(Error::NotInvolution(pi.to_string()))
    }
}

pub fn cycle_decomposition(pi: &Permutation) -> Result<CycleDecomposition> {
    require_involution(pi)?;
    // the largest element of every cycle is visited in increasing order
    let cycles = (1..=pi.len())
        .filter_map(|b| {
            let a = pi.at(b);
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => Some(Cycle::Fixed(b)),
                std::cmp::Ordering::Less => Some(Cycle::Pair(a, b)),
                std::cmp::Ordering::Greater => None,
            }
        })
        .collect();
    Ok(CycleDecomposition { cycles })
}

/// The tableau after each cycle has been processed; the last one is the
/// tableau of the involution.
pub fn beissinger_trace(pi: &Permutation) -> Result<Vec<Tableau>> {
    let decomposition = cycle_decomposition(pi)?;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut snapshots = Vec::with_capacity(decomposition.cycles.len());
    for &cycle in &decomposition.cycles {
        match cycle {
            Cycle::Fixed(a) => {
                if rows.is_empty() {
                    rows.push(Vec::new());
                }
                // a exceeds every entry placed so far
                rows[0].push(a);
            }
            Cycle::Pair(a, b) => {
                // 1-based stop row, so rows[stop] is the row below it
                let stop = insert_in_place(&mut rows, a).stop_row();
                if rows.len() == stop {
                    rows.push(Vec::new());
                }
                let col = rows[stop].len();
                match rows[stop - 1].get(col) {
                    Some(&above) if above < b => rows[stop].push(b),
                    _ => {
                        return Err(Error::Invariant(format!(
                            "appending {b} to row {} breaks column strictness",
                            stop + 1
                        )))
                    }
                }
            }
        }
        snapshots.push(Tableau::from_rows_unchecked(rows.clone()));
    }
    Ok(snapshots)
}

/// Beissinger's tableau for an involution.
pub fn beissinger_build(pi: &Permutation) -> Result<StandardTableau> {
    let last = beissinger_trace(pi)?.pop().unwrap_or_default();
    StandardTableau::from_tableau(last)
        .map_err(|e| Error::Invariant(format!("result is not standard: {e}")))
}

/// Every involution of `S_n`, generated as matchings of `1..=n`.
pub fn all_involutions(n: usize) -> Vec<Permutation> {
    fn go(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some(a) = word.iter().position(|&v| v == 0) else {
            out.push(Permutation::from_word_unchecked(word.clone()));
            return;
        };
        word[a] = a + 1;
        go(word, out);
        for b in a + 1..word.len() {
            if word[b] == 0 {
                word[a] = b + 1;
                word[b] = a + 1;
                go(word, out);
                word[b] = 0;
            }
        }
        word[a] = 0;
    }
    let mut out = Vec::new();
    go(&mut vec![0; n], &mut out);
    out
}

/// `(-1)^e` for the total length `e` of the even-indexed rows of `shape`.
pub fn involution_sign_via_shape(shape: &Partition) -> Sign {
    Sign::from_parity(shape.even_row_total())
}
