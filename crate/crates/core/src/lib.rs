//! Robinson–Schensted–Knuth correspondence and signs of tableaux.
//!
//! The sign of a permutation can be read off its RSK pair `(P, Q)`:
//! `sign(π) = sign(P) · sign(Q) · (-1)^e`, where `sign(T)` is the parity of
//! the inversions of the row word of `T` and `e` is the total length of the
//! even-indexed rows of the common shape. The crate provides the
//! correspondence itself, Beissinger's construction for involutions,
//! elementary Knuth moves, inversion generating functions of shapes and the
//! {213, 231}-avoiding permutations, plus exhaustive verification suites
//! for all of these identities.
//!
//! ```
//! use rsk_sign::{rsk, Permutation};
//!
//! let pi: Permutation = "2 9 1 5 6 4 8 3 7".parse().unwrap();
//! let pair = rsk(&pi);
//! assert_eq!(pair.p().inversions(), 8);
//! assert_eq!(pair.q().inversions(), 7);
//! assert_eq!(pair.sign_from_tableaux(), pi.sign());
//! ```

pub mod cli;
pub mod error;
pub mod imbalance;
pub mod involutions;
pub mod knuth;
pub mod partition;
pub mod patterns;
pub mod perm;
pub mod poly;
pub mod rsk;
pub mod sign;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::Permutation;
pub use poly::IntPolynomial;
pub use rsk::{rsk, rsk_inverse};
pub use sign::Sign;
pub use tableau::{StandardTableau, Tableau, TableauPair};
