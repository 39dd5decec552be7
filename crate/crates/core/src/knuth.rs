//! Elementary Knuth transformations and Knuth-equivalence classes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rsk::{insertion_tableau, rsk_inverse};
use crate::tableau::{StandardTableau, TableauPair};

/// The four rewrites of three consecutive letters, with `a < b < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// `acb -> cab`
    AcbToCab,
    /// `cab -> acb`
    CabToAcb,
    /// `bac -> bca`
    BacToBca,
    /// `bca -> bac`
    BcaToBac,
}

impl MoveKind {
    pub const ALL: [MoveKind; 4] = [
        MoveKind::AcbToCab,
        MoveKind::CabToAcb,
        MoveKind::BacToBca,
        MoveKind::BcaToBac,
    ];

    /// The kind matching the relative order of `(x, y, z)`, if any.
    pub fn classify(x: usize, y: usize, z: usize) -> Option<MoveKind> {
        if x < z && z < y {
            Some(MoveKind::AcbToCab)
        } else if y < z && z < x {
            Some(MoveKind::CabToAcb)
        } else if y < x && x < z {
            Some(MoveKind::BacToBca)
        } else if z < x && x < y {
            Some(MoveKind::BcaToBac)
        } else {
            None
        }
    }

    /// The kind that undoes this one at the same position.
    pub fn inverse(self) -> MoveKind {
        match self {
            MoveKind::AcbToCab => MoveKind::CabToAcb,
            MoveKind::CabToAcb => MoveKind::AcbToCab,
            MoveKind::BacToBca => MoveKind::BcaToBac,
            MoveKind::BcaToBac => MoveKind::BacToBca,
        }
    }

    /// Offset (within the window) of the first of the two swapped letters.
    fn swap_offset(self) -> usize {
        match self {
            MoveKind::AcbToCab | MoveKind::CabToAcb => 0,
            MoveKind::BacToBca | MoveKind::BcaToBac => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::AcbToCab => "acb>cab",
            MoveKind::CabToAcb => "cab>acb",
            MoveKind::BacToBca => "bac>bca",
            MoveKind::BcaToBac => "bca>bac",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::parse(1, format!("unknown move kind `{s}`")))
    }
}

/// A rewrite of the window starting at 1-based `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KnuthMove {
    pub position: usize,
    pub kind: MoveKind,
}

impl KnuthMove {
    pub fn inverse(self) -> KnuthMove {
        KnuthMove {
            position: self.position,
            kind: self.kind.inverse(),
        }
    }
}

impl fmt::Display for KnuthMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pos={} kind={}", self.position, self.kind)
    }
}

impl FromStr for KnuthMove {
    type Err = Error;

    /// Parses `"pos=3 kind=bac>bca"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut position = None;
        let mut kind = None;
        for (i, tok) in s.split_whitespace().enumerate() {
            if let Some(v) = tok.strip_prefix("pos=") {
                position = Some(
                    v.parse::<usize>()
                        .ok()
                        .filter(|&p| p >= 1)
                        .ok_or_else(|| Error::parse(i + 1, format!("bad position `{v}`")))?,
                );
            } else if let Some(v) = tok.strip_prefix("kind=") {
                kind = Some(
                    v.parse::<MoveKind>()
                        .map_err(|_| Error::parse(i + 1, format!("unknown move kind `{v}`")))?,
                );
            } else {
                return Err(Error::parse(i + 1, format!("unexpected token `{tok}`")));
            }
        }
        match (position, kind) {
            (Some(position), Some(kind)) => Ok(KnuthMove { position, kind }),
            _ => Err(Error::parse(1, "expected `pos=<n> kind=<kind>`")),
        }
    }
}

/// Every move that matches somewhere in `pi`, by increasing position.
pub fn applicable_moves(pi: &Permutation) -> Vec<KnuthMove> {
    pi.as_slice()
        .windows(3)
        .enumerate()
        .filter_map(|(i, w)| {
            MoveKind::classify(w[0], w[1], w[2]).map(|kind| KnuthMove {
                position: i + 1,
                kind,
            })
        })
        .collect()
}

pub fn apply_move(pi: &Permutation, m: KnuthMove) -> Result<Permutation> {
    let word = pi.as_slice();
    let mismatch = || Error::MoveMismatch {
        mv: m.to_string(),
        word: pi.to_string(),
    };
    if m.position == 0 || m.position + 2 > word.len() {
        return Err(mismatch());
    }
    let i = m.position - 1;
    if MoveKind::classify(word[i], word[i + 1], word[i + 2]) != Some(m.kind) {
        return Err(mismatch());
    }
    let mut out = word.to_vec();
    let s = i + m.kind.swap_offset();
    out.swap(s, s + 1);
    Ok(Permutation::from_word_unchecked(out))
}

/// Closure of `{pi}` under elementary Knuth transformations, sorted.
pub fn knuth_class(pi: &Permutation) -> BTreeSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::from([pi.clone()]);
    let mut queue = VecDeque::from([pi.clone()]);
    while let Some(sigma) = queue.pop_front() {
        for m in applicable_moves(&sigma) {
            let next = apply_move(&sigma, m).expect("applicable move applies");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// The involution in the Knuth class of `pi`.
pub fn canonical_involution(pi: &Permutation) -> Permutation {
    let p = insertion_tableau(pi);
    rsk_inverse(&TableauPair::new(p.clone(), p).expect("equal shapes"))
}

/// The member of the Knuth class of `pi` whose recording tableau has no
/// inversions.
pub fn canonical_tau(pi: &Permutation) -> Permutation {
    let p = insertion_tableau(pi);
    let zero = StandardTableau::superstandard(&p.shape());
    rsk_inverse(&TableauPair::new(p, zero).expect("equal shapes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::rsk;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn mv(position: usize, kind: MoveKind) -> KnuthMove {
        KnuthMove { position, kind }
    }

    #[test]
    fn applicable_examples() {
        assert!(applicable_moves(&perm("1 2 3")).is_empty());
        assert!(applicable_moves(&perm("3 2 1")).is_empty());
        assert_eq!(
            applicable_moves(&perm("1 3 2")),
            vec![mv(1, MoveKind::AcbToCab)]
        );
        assert_eq!(
            applicable_moves(&perm("2 1 3")),
            vec![mv(1, MoveKind::BacToBca)]
        );
        assert_eq!(
            applicable_moves(&perm("3 1 2")),
            vec![mv(1, MoveKind::CabToAcb)]
        );
        assert_eq!(
            applicable_moves(&perm("2 3 1")),
            vec![mv(1, MoveKind::BcaToBac)]
        );
        assert!(applicable_moves(&perm("2 1")).is_empty());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            apply_move(&perm("1 3 2"), mv(1, MoveKind::AcbToCab)).unwrap(),
            perm("3 1 2")
        );
        assert_eq!(
            apply_move(&perm("2 1 3"), mv(1, MoveKind::BacToBca)).unwrap(),
            perm("2 3 1")
        );
        assert!(matches!(
            apply_move(&perm("1 2 3"), mv(1, MoveKind::AcbToCab)),
            Err(Error::MoveMismatch { .. })
        ));
        assert!(apply_move(&perm("1 3 2"), mv(2, MoveKind::AcbToCab)).is_err());
        assert!(apply_move(&perm("1 3 2"), mv(0, MoveKind::AcbToCab)).is_err());
    }

    #[test]
    fn moves_undo_exactly() {
        for n in 3..=6 {
            for pi in Permutation::all(n) {
                for m in applicable_moves(&pi) {
                    let sigma = apply_move(&pi, m).unwrap();
                    assert_eq!(apply_move(&sigma, m.inverse()).unwrap(), pi);
                }
            }
        }
    }

    #[test]
    fn move_text_format() {
        let m = mv(3, MoveKind::BacToBca);
        assert_eq!(m.to_string(), "pos=3 kind=bac>bca");
        assert_eq!("pos=3 kind=bac>bca".parse::<KnuthMove>().unwrap(), m);
        assert!("pos=0 kind=bac>bca".parse::<KnuthMove>().is_err());
        assert!("pos=3 kind=abc>bca".parse::<KnuthMove>().is_err());
        assert!("pos=3".parse::<KnuthMove>().is_err());
    }

    #[test]
    fn class_examples() {
        assert_eq!(knuth_class(&perm("1 2 3")).len(), 1);
        let class: Vec<String> = knuth_class(&perm("2 1 3"))
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(class, ["2 1 3", "2 3 1"]);
        let mut tableaux = BTreeSet::new();
        let mut total = 0;
        for pi in Permutation::all(4) {
            if tableaux.insert(insertion_tableau(&pi)) {
                total += knuth_class(&pi).len();
            }
        }
        assert_eq!(total, 24);
    }

    #[test]
    fn canonical_representatives() {
        let pi = perm("2 9 1 5 6 4 8 3 7");
        let sigma = canonical_involution(&pi);
        assert!(sigma.is_involution());
        assert_eq!(insertion_tableau(&sigma), insertion_tableau(&pi));

        let inv = perm("4 8 7 1 9 6 3 2 5");
        assert_eq!(canonical_involution(&inv), inv);
        assert_eq!(
            canonical_involution(&Permutation::identity(5)),
            Permutation::identity(5)
        );

        let tau = canonical_tau(&pi);
        let pair = rsk(&tau);
        assert_eq!(pair.p(), &insertion_tableau(&pi));
        assert_eq!(
            pair.q().rows(),
            &[vec![1, 2, 3, 4], vec![5, 6, 7], vec![8], vec![9]]
        );
        assert_eq!(
            canonical_tau(&Permutation::identity(4)),
            Permutation::identity(4)
        );
    }
}
