//! Enumeration of partitions and standard Young tableaux, and the
//! inversion generating function `I_λ(q) = Σ_T q^inv(T)` of a shape.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::sign::Sign;
use crate::tableau::StandardTableau;

/// All partitions of `n` in reverse-lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Lazily yields every standard Young tableau of a shape.
///
/// Entries `1, 2, ...` are placed one at a time at the end of some row; a
/// row accepts the next entry while it is shorter than both its target
/// length and the row above. Tableaux come out in lexicographic order of
/// the row sequence of `1, 2, ..., n`.
#[derive(Debug, Clone)]
pub struct SytIter {
    shape: Vec<usize>,
    n: usize,
    /// row of entry `k + 1`
    placed: Vec<usize>,
    lens: Vec<usize>,
    started: bool,
    done: bool,
}

impl SytIter {
    pub fn new(shape: &Partition) -> Self {
        SytIter {
            shape: shape.parts().to_vec(),
            n: shape.size(),
            placed: Vec::with_capacity(shape.size()),
            lens: vec![0; shape.num_rows()],
            started: false,
            done: false,
        }
    }

    fn addable(&self, row: usize) -> bool {
        self.lens[row] < self.shape[row] && (row == 0 || self.lens[row - 1] > self.lens[row])
    }

    fn place(&mut self, row: usize) {
        self.placed.push(row);
        self.lens[row] += 1;
    }

    fn build(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = self.shape.iter().map(|&l| Vec::with_capacity(l)).collect();
        for (k, &r) in self.placed.iter().enumerate() {
            rows[r].push(k + 1);
        }
        StandardTableau::from_rows_unchecked(rows)
    }
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        if self.started {
            // move the deepest entry that can go to a later row
            loop {
                let Some(r) = self.placed.pop() else {
                    self.done = true;
                    return None;
                };
                self.lens[r] -= 1;
                if let Some(next) = (r + 1..self.shape.len()).find(|&j| self.addable(j)) {
                    self.place(next);
                    break;
                }
            }
        }
        self.started = true;
        // any partial filling of a valid shape extends to a full one
        while self.placed.len() < self.n {
            let row = (0..self.shape.len())
                .find(|&j| self.addable(j))
                .expect("a partial tableau always has an addable square");
            self.place(row);
        }
        Some(self.build())
    }
}

pub fn enumerate_syt(shape: &Partition) -> SytIter {
    SytIter::new(shape)
}

/// `I_λ(q)` together with its values at `q = -1` and `q = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImbalanceRecord {
    pub shape: Partition,
    /// `λ_2 + λ_4 + ...`
    pub e: usize,
    pub polynomial: IntPolynomial,
    pub imbalance: i64,
    pub tableau_count: i64,
}

impl ImbalanceRecord {
    /// `shape=(4,3,1,1) e=4 I=... count=... poly=...`
    pub fn table_line(&self) -> String {
        format!(
            "shape={} e={} I={} count={} poly={}",
            self.shape, self.e, self.imbalance, self.tableau_count, self.polynomial
        )
    }
}

pub fn imbalance_polynomial(shape: &Partition) -> Result<ImbalanceRecord> {
    let mut polynomial = IntPolynomial::zero();
    for t in enumerate_syt(shape) {
        polynomial.add_term(t.inversions(), 1)?;
    }
    Ok(ImbalanceRecord {
        shape: shape.clone(),
        e: shape.even_row_total(),
        imbalance: polynomial.eval(-1)?,
        tableau_count: polynomial.eval(1)?,
        polynomial,
    })
}

/// Records for every partition of `n`, in [`partitions_of`] order.
pub fn imbalance_table(n: usize) -> Result<Vec<ImbalanceRecord>> {
    partitions_of(n).iter().map(imbalance_polynomial).collect()
}

/// Writes `shape,e,imbalance,tableau_count` rows with a header.
pub fn write_csv<W: Write>(records: &[ImbalanceRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Invariant(format!("csv output failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["shape", "e", "imbalance", "tableau_count"])
        .map_err(io)?;
    for r in records {
        w.write_record([
            r.shape.to_string(),
            r.e.to_string(),
            r.imbalance.to_string(),
            r.tableau_count.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Invariant(format!("csv output failed: {e}")))
}

fn binomial(n: u64, k: u64) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    i64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

/// Closed form for the imbalance of the hook `(k, 1^(n-k))`: zero when `n`
/// is odd and `k` even, otherwise `C(h(n), h(k))` with `h(x) = ⌊(x-1)/2⌋`.
pub fn hook_imbalance(n: usize, k: usize) -> Result<i64> {
    if k == 0 || k > n {
        return Err(Error::InvalidPartition(format!(
            "hook arm {k} must lie in 1..={n}"
        )));
    }
    if n % 2 == 1 && k.is_multiple_of(2) {
        return Ok(0);
    }
    let h = |x: usize| ((x - 1) / 2) as u64;
    binomial(h(n), h(k))
}

/// `Σ_{λ ⊢ n} (-1)^e(λ) I_λ²`, computed from the enumerated imbalances.
pub fn signed_square_sum(n: usize) -> Result<i64> {
    let mut total: i64 = 0;
    for record in imbalance_table(n)? {
        let square = record
            .imbalance
            .checked_mul(record.imbalance)
            .ok_or(Error::Overflow("imbalance square"))?;
        let term = Sign::from_parity(record.e).to_i64() * square;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("signed square sum"))?;
    }
    Ok(total)
}

/// `Σ_{λ ⊢ n} Σ_{(P,Q)} (-1)^e(λ) sign(P) sign(Q)` over all pairs of
/// tableaux of equal shape, without going through `I_λ`.
pub fn signed_pair_sum(n: usize) -> i64 {
    partitions_of(n)
        .iter()
        .map(|shape| {
            let tableaux: Vec<StandardTableau> = enumerate_syt(shape).collect();
            let e = Sign::from_parity(shape.even_row_total());
            let mut sum = 0i64;
            for p in &tableaux {
                for q in &tableaux {
                    sum += (e * p.sign() * q.sign()).to_i64();
                }
            }
            sum
        })
        .sum()
}
