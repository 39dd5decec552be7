//! Young tableaux and pairs of tableaux.
//!
//! [`Tableau`] is any filling of a Young diagram with distinct positive
//! integers whose rows and columns increase; the intermediate insertion
//! tableaux of RSK are of this kind. [`StandardTableau`] further requires the
//! entries to be exactly `1..=n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawTableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(raw.rows)
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("rows must be non-empty".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not strictly increasing",
                    r + 1
                )));
            }
        }
        for r in 1..rows.len() {
            for (c, &v) in rows[r].iter().enumerate() {
                if rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        let mut entries: Vec<usize> = rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        if let Some(w) = entries.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEntry(w[0]));
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok(), "{rows:?}");
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position_of(v).is_some()
    }

    /// 0-based `(row, column)` of entry `v`.
    pub fn position_of(&self, v: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == v).map(|c| (r, c)))
    }

    /// Entries read row by row, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .max()
            .map_or(1, |m| m.to_string().len());
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
        }
        Ok(())
    }
}

/// A tableau filled with exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Tableau", into = "Tableau")]
pub struct StandardTableau(Tableau);

impl TryFrom<Tableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<Self> {
        StandardTableau::from_tableau(t)
    }
}

impl From<StandardTableau> for Tableau {
    fn from(t: StandardTableau) -> Tableau {
        t.0
    }
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::from_tableau(Tableau::new(rows)?)
    }

    pub fn from_tableau(t: Tableau) -> Result<Self> {
        let n = t.size();
        if let Some(&v) = t.rows.iter().flatten().find(|&&v| v > n) {
            return Err(Error::InvalidTableau(format!(
                "entry {v} exceeds the number of squares {n}"
            )));
        }
        Ok(StandardTableau(t))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let t = Tableau::from_rows_unchecked(rows);
        debug_assert!(t.rows.iter().flatten().all(|&v| v <= t.size()));
        StandardTableau(t)
    }

    pub fn empty() -> Self {
        StandardTableau(Tableau::empty())
    }

    /// The zero-inversion tableau of `shape`: rows filled with consecutive
    /// integers, left to right and top to bottom.
    pub fn superstandard(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau(Tableau { rows })
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.0.rows
    }

    pub fn shape(&self) -> Partition {
        self.0.shape()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn num_rows(&self) -> usize {
        self.0.num_rows()
    }

    pub fn position_of(&self, v: usize) -> Option<(usize, usize)> {
        self.0.position_of(v)
    }

    /// 0-based row index of every entry, indexed by `entry - 1`.
    pub fn row_index(&self) -> Vec<usize> {
        let mut rows = vec![0; self.size()];
        for (r, row) in self.0.rows.iter().enumerate() {
            for &v in row {
                rows[v - 1] = r;
            }
        }
        rows
    }

    pub fn row_word(&self) -> Permutation {
        Permutation::from_word_unchecked(self.0.reading_word())
    }

    /// Pairs `(i, j)` with `j < i` and `j` in a row strictly below the row of `i`.
    pub fn inversions(&self) -> usize {
        let row = self.row_index();
        let n = row.len();
        let mut count = 0;
        for i in 1..=n {
            for j in 1..i {
                if row[j - 1] > row[i - 1] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.inversions())
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        let row = self.row_index();
        (1..row.len()).filter(|&i| row[i] > row[i - 1]).collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An insertion tableau `P` and a recording tableau `Q` of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct TableauPair {
    #[serde(rename = "P")]
    p: StandardTableau,
    #[serde(rename = "Q")]
    q: StandardTableau,
}

#[derive(Deserialize)]
struct RawPair {
    #[serde(rename = "P")]
    p: StandardTableau,
    #[serde(rename = "Q")]
    q: StandardTableau,
}

impl TryFrom<RawPair> for TableauPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        TableauPair::new(raw.p, raw.q)
    }
}

impl TableauPair {
    pub fn new(p: StandardTableau, q: StandardTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch {
                p: p.shape().to_string(),
                q: q.shape().to_string(),
            });
        }
        Ok(TableauPair { p, q })
    }

    pub fn p(&self) -> &StandardTableau {
        &self.p
    }

    pub fn q(&self) -> &StandardTableau {
        &self.q
    }

    pub fn into_parts(self) -> (StandardTableau, StandardTableau) {
        (self.p, self.q)
    }

    pub fn shape(&self) -> Partition {
        self.p.shape()
    }

    pub fn size(&self) -> usize {
        self.p.size()
    }

    /// `sign(P) * sign(Q) * (-1)^e` with `e` the total length of the
    /// even-indexed rows; equals the sign of the permutation with this pair.
    pub fn sign_from_tableaux(&self) -> Sign {
        self.p.sign() * self.q.sign() * Sign::from_parity(self.shape().even_row_total())
    }

    /// Sum of the second-row entries of `P` and of `Q`.
    ///
    /// Only defined for tableaux with at most two rows.
    pub fn second_row_sum(&self) -> Result<usize> {
        let rows = self.p.num_rows();
        if rows > 2 {
            return Err(Error::TooManyRows { rows });
        }
        let second = |t: &StandardTableau| t.rows().get(1).map_or(0, |r| r.iter().sum::<usize>());
        Ok(second(&self.p) + second(&self.q))
    }

    /// Whether `second_row_sum ≡ inv(P) + inv(Q) (mod 2)`.
    pub fn second_row_parity_matches(&self) -> Result<bool> {
        let s = self.second_row_sum()?;
        Ok(s % 2 == (self.p.inversions() + self.q.inversions()) % 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_pair() -> TableauPair {
        TableauPair::new(
            syt(&[&[1, 3, 6, 7], &[2, 4, 8], &[5], &[9]]),
            syt(&[&[1, 2, 5, 7], &[3, 4, 9], &[6], &[8]]),
        )
        .unwrap()
    }

    #[test]
    fn row_word_examples() {
        assert_eq!(syt(&[&[1, 2, 3]]).row_word().to_string(), "1 2 3");
        assert_eq!(syt(&[&[1], &[2], &[3]]).row_word().to_string(), "1 2 3");
        let p = example_pair();
        assert_eq!(p.p().row_word().to_string(), "1 3 6 7 2 4 8 5 9");
    }

    #[test]
    fn inversions_and_signs() {
        let pair = example_pair();
        assert_eq!(pair.p().inversions(), 8);
        assert_eq!(pair.q().inversions(), 7);
        assert_eq!(pair.p().sign(), Sign::Plus);
        assert_eq!(pair.q().sign(), Sign::Minus);
        assert_eq!(syt(&[&[1, 2, 3, 4, 5]]).inversions(), 0);
        assert_eq!(syt(&[&[1], &[2]]).sign(), Sign::Plus);
    }

    #[test]
    fn sign_from_tableaux_examples() {
        assert_eq!(example_pair().sign_from_tableaux(), Sign::Minus);
        let row = syt(&[&[1, 2, 3]]);
        assert_eq!(
            TableauPair::new(row.clone(), row)
                .unwrap()
                .sign_from_tableaux(),
            Sign::Plus
        );
        let p = syt(&[&[1, 2, 5], &[3, 6, 9], &[4], &[7], &[8]]);
        assert_eq!(
            TableauPair::new(p.clone(), p).unwrap().sign_from_tableaux(),
            Sign::Plus
        );
        let empty = TableauPair::new(StandardTableau::empty(), StandardTableau::empty()).unwrap();
        assert_eq!(empty.sign_from_tableaux(), Sign::Plus);
    }

    #[test]
    fn second_row_statistic() {
        let pair = TableauPair::new(
            syt(&[&[1, 3, 4, 7, 9], &[2, 5, 6, 8]]),
            syt(&[&[1, 2, 4, 5, 7], &[3, 6, 8, 9]]),
        )
        .unwrap();
        assert_eq!(pair.second_row_sum().unwrap(), 47);
        assert_eq!(pair.p().inversions(), 9);
        assert_eq!(pair.q().inversions(), 4);
        assert!(pair.second_row_parity_matches().unwrap());

        let row = syt(&[&[1, 2, 3]]);
        let flat = TableauPair::new(row.clone(), row).unwrap();
        assert_eq!(flat.second_row_sum().unwrap(), 0);

        assert_eq!(
            example_pair().second_row_sum(),
            Err(Error::TooManyRows { rows: 4 })
        );
    }

    #[test]
    fn validation() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![5, 6]]).is_ok());
        assert!(matches!(
            StandardTableau::new(vec![vec![2, 1]]),
            Err(Error::InvalidTableau(_))
        ));
        assert!(matches!(
            StandardTableau::new(vec![vec![1, 2], vec![3, 4, 5]]),
            Err(Error::InvalidTableau(_))
        ));
        assert!(matches!(
            StandardTableau::new(vec![vec![1, 3], vec![4, 2]]),
            Err(Error::InvalidTableau(_))
        ));
        assert!(matches!(
            StandardTableau::new(vec![vec![1, 4]]),
            Err(Error::InvalidTableau(_))
        ));
        assert!(matches!(
            StandardTableau::new(vec![vec![1, 2], vec![2]]),
            Err(Error::DuplicateEntry(2))
        ));
        assert!(matches!(
            TableauPair::new(syt(&[&[1, 2]]), syt(&[&[1], &[2]])),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn superstandard_filling() {
        let shape: Partition = "4,3,1,1".parse().unwrap();
        let t = StandardTableau::superstandard(&shape);
        assert_eq!(
            t.rows(),
            &[vec![1, 2, 3, 4], vec![5, 6, 7], vec![8], vec![9]]
        );
        assert_eq!(t.inversions(), 0);
    }

    #[test]
    fn descents_of_a_tableau() {
        // 2 is below 1, 4 below 3
        let t = syt(&[&[1, 3], &[2, 4]]);
        assert_eq!(t.descents(), vec![1, 3]);
    }

    #[test]
    fn json_round_trip() {
        let pair = example_pair();
        let json = serde_json::to_string(&pair).unwrap();
        assert_eq!(
            json,
            r#"{"P":{"rows":[[1,3,6,7],[2,4,8],[5],[9]]},"Q":{"rows":[[1,2,5,7],[3,4,9],[6],[8]]}}"#
        );
        let back: TableauPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pair);
        assert!(serde_json::from_str::<StandardTableau>(r#"{"rows":[[2,1]]}"#).is_err());
        assert!(serde_json::from_str::<TableauPair>(
            r#"{"P":{"rows":[[1,2]]},"Q":{"rows":[[1],[2]]}}"#
        )
        .is_err());
    }

    #[test]
    fn display_aligns_columns() {
        let t = syt(&[&[1, 3, 6, 7, 10], &[2, 4, 8], &[5], &[9]]);
        assert_eq!(t.to_string(), " 1  3  6  7 10\n 2  4  8\n 5\n 9");
    }
}
