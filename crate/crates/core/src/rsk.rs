//! Schensted row insertion and the Robinson–Schensted–Knuth correspondence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{StandardTableau, Tableau, TableauPair};

/// Squares touched by one row insertion, as 1-based `(row, column)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionTrace {
    /// One square per row visited, top to bottom. The last one is the new
    /// square.
    pub bump_path: Vec<(usize, usize)>,
    pub final_square: (usize, usize),
}

impl InsertionTrace {
    /// 1-based row in which the insertion stopped.
    pub fn stop_row(&self) -> usize {
        self.final_square.0
    }
}

/// Inserts `x` in place. The caller guarantees `x` is not already present.
pub(crate) fn insert_in_place(rows: &mut Vec<Vec<usize>>, mut x: usize) -> InsertionTrace {
    let mut bump_path = Vec::new();
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        // first entry larger than x
        let c = row.partition_point(|&v| v < x);
        bump_path.push((r + 1, c + 1));
        if c == row.len() {
            row.push(x);
            return InsertionTrace {
                final_square: (r + 1, c + 1),
                bump_path,
            };
        }
        x = std::mem::replace(&mut row[c], x);
        r += 1;
    }
}

/// Removes the last entry of row `row` (0-based) and reverse-bumps it
/// upward, returning the value ejected from the first row.
pub(crate) fn reverse_bump(rows: &mut Vec<Vec<usize>>, row: usize) -> usize {
    let mut y = rows[row].pop().expect("reverse bump from an empty row");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        let above = &mut rows[r];
        // largest entry smaller than y
        let c = above.partition_point(|&v| v < y) - 1;
        y = std::mem::replace(&mut above[c], y);
    }
    y
}

/// Schensted row insertion of `x` into `t`.
pub fn row_insert(t: &Tableau, x: usize) -> Result<(Tableau, InsertionTrace)> {
    if x == 0 {
        return Err(Error::InvalidTableau("entries must be positive".into()));
    }
    if t.contains(x) {
        return Err(Error::DuplicateEntry(x));
    }
    let mut rows = t.rows().to_vec();
    let trace = insert_in_place(&mut rows, x);
    Ok((Tableau::from_rows_unchecked(rows), trace))
}

/// State after inserting the `step`-th letter of the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RskStep {
    /// 1-based index of the letter just inserted.
    pub step: usize,
    pub value: usize,
    pub p: Tableau,
    pub q: StandardTableau,
    pub trace: InsertionTrace,
}

/// Yields the intermediate pairs `(P_i, Q_i)` one insertion at a time.
#[derive(Debug, Clone)]
pub struct RskStepper<'a> {
    word: &'a [usize],
    next: usize,
    p: Vec<Vec<usize>>,
    q: Vec<Vec<usize>>,
}

impl<'a> RskStepper<'a> {
    pub fn new(pi: &'a Permutation) -> Self {
        RskStepper {
            word: pi.as_slice(),
            next: 0,
            p: Vec::new(),
            q: Vec::new(),
        }
    }
}

impl Iterator for RskStepper<'_> {
    type Item = RskStep;

    fn next(&mut self) -> Option<RskStep> {
        let &value = self.word.get(self.next)?;
        self.next += 1;
        let trace = insert_in_place(&mut self.p, value);
        let (r, _) = trace.final_square;
        if self.q.len() < r {
            self.q.push(Vec::new());
        }
        self.q[r - 1].push(self.next);
        Some(RskStep {
            step: self.next,
            value,
            p: Tableau::from_rows_unchecked(self.p.clone()),
            q: StandardTableau::from_rows_unchecked(self.q.clone()),
            trace,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.word.len() - self.next;
        (left, Some(left))
    }
}

/// The insertion/recording pair of `pi`.
pub fn rsk(pi: &Permutation) -> TableauPair {
    let mut p = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in pi.as_slice().iter().enumerate() {
        let (r, _) = insert_in_place(&mut p, x).final_square;
        if q.len() < r {
            q.push(Vec::new());
        }
        q[r - 1].push(i + 1);
    }
    TableauPair::new(
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
    .expect("insertion and recording tableaux share a shape")
}

/// Insertion tableau only.
pub fn insertion_tableau(pi: &Permutation) -> StandardTableau {
    let mut p = Vec::new();
    for &x in pi.as_slice() {
        insert_in_place(&mut p, x);
    }
    StandardTableau::from_rows_unchecked(p)
}

/// The permutation whose RSK image is `pair`.
///
/// Entries `n, n-1, ..., 1` are located in `Q`; the square they occupy is
/// removed from `P` by reverse bumping, which yields `π_n, π_(n-1), ...`.
pub fn rsk_inverse(pair: &TableauPair) -> Permutation {
    let n = pair.size();
    let mut p = pair.p().rows().to_vec();
    let mut q = pair.q().rows().to_vec();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&k))
            .expect("largest entry of a standard tableau sits at a row end");
        q[r].pop();
        if q[r].is_empty() {
            q.pop();
        }
        word[k - 1] = reverse_bump(&mut p, r);
    }
    Permutation::from_word_unchecked(word)
}

/// Length of the longest increasing subsequence, read off the first row.
pub fn lis(pi: &Permutation) -> usize {
    insertion_tableau(pi).shape().row_len(0)
}

/// Length of the longest decreasing subsequence, read off the first column.
pub fn lds(pi: &Permutation) -> usize {
    insertion_tableau(pi).num_rows()
}
