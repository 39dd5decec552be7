//! Exhaustive verification suites behind the `verify` command.
//!
//! Every suite sweeps all relevant objects for each `n` up to a requested
//! bound and records counterexamples. Suites over all of `S_n` can also
//! spot-check random permutations above their exhaustive ceiling when a
//! seed is supplied.

use std::fmt;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imbalance::{enumerate_syt, partitions_of, signed_square_sum};
use crate::involutions::{
    all_involutions, beissinger_build, cycle_decomposition, involution_sign_via_shape,
};
use crate::knuth::{applicable_moves, apply_move};
use crate::patterns::{
    avoider_sign_lis_closed_form, contains_pattern, descent_structure_check, enumerate_avoiders,
    hook_patterns, is_hook_identity_form, signed_lis_polynomial, Pattern,
};
use crate::perm::Permutation;
use crate::rsk::{rsk, rsk_inverse};
use crate::tableau::TableauPair;

/// Random permutations checked per `n` above the exhaustive ceiling.
pub const SAMPLES_PER_N: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    #[serde(rename = "theorem-3-1")]
    InvolutionSign,
    #[serde(rename = "lemma-4-2")]
    KnuthMoveFlip,
    #[serde(rename = "theorem-4-4")]
    TableauSign,
    #[serde(rename = "remark-4-6")]
    SecondRowParity,
    #[serde(rename = "theorem-5-1")]
    SignedSquareSum,
    #[serde(rename = "prop-5-3")]
    HookAvoiders,
    #[serde(rename = "cor-5-4")]
    AvoiderSignLis,
    RskRoundtrip,
    RskSymmetry,
    Schensted,
    Descents,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::InvolutionSign,
        Suite::KnuthMoveFlip,
        Suite::TableauSign,
        Suite::SecondRowParity,
        Suite::SignedSquareSum,
        Suite::HookAvoiders,
        Suite::AvoiderSignLis,
        Suite::RskRoundtrip,
        Suite::RskSymmetry,
        Suite::Schensted,
        Suite::Descents,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::InvolutionSign => "theorem-3-1",
            Suite::KnuthMoveFlip => "lemma-4-2",
            Suite::TableauSign => "theorem-4-4",
            Suite::SecondRowParity => "remark-4-6",
            Suite::SignedSquareSum => "theorem-5-1",
            Suite::HookAvoiders => "prop-5-3",
            Suite::AvoiderSignLis => "cor-5-4",
            Suite::RskRoundtrip => "rsk-roundtrip",
            Suite::RskSymmetry => "rsk-symmetry",
            Suite::Schensted => "schensted",
            Suite::Descents => "descents",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::InvolutionSign => {
                "involutions: sign = (-1)^e, Beissinger tableau = RSK insertion tableau"
            }
            Suite::KnuthMoveFlip => {
                "every elementary Knuth move keeps P and changes inv(Q) by exactly 1"
            }
            Suite::TableauSign => "sign(pi) = sign(P) sign(Q) (-1)^e",
            Suite::SecondRowParity => "321-avoiders: second-row entry sum = inv(P) + inv(Q) mod 2",
            Suite::SignedSquareSum => "sum over shapes of (-1)^e I^2 = 0 for n >= 2",
            Suite::HookAvoiders => {
                "{213,231}-avoidance = hook shape with identity row word = descent structure"
            }
            Suite::AvoiderSignLis => {
                "{213,231}-avoiders: sum sign q^lis = q (q+1)^floor((n-1)/2) (q-1)^floor(n/2)"
            }
            Suite::RskRoundtrip => "RSK followed by its inverse is the identity, both ways",
            Suite::RskSymmetry => "Q(pi) = P(pi^-1) and P(pi) = Q(pi^-1)",
            Suite::Schensted => "first row = lis, first column = lds",
            Suite::Descents => "descents of pi = descents of Q(pi)",
        }
    }

    /// Largest `n` swept exhaustively.
    pub fn ceiling(self) -> usize {
        match self {
            Suite::InvolutionSign => 10,
            Suite::KnuthMoveFlip => 7,
            Suite::TableauSign => 8,
            Suite::SecondRowParity => 10,
            Suite::SignedSquareSum => 10,
            Suite::HookAvoiders => 8,
            Suite::AvoiderSignLis => 14,
            Suite::RskRoundtrip => 8,
            Suite::RskSymmetry => 8,
            Suite::Schensted => 8,
            Suite::Descents => 8,
        }
    }

    /// Largest `n` reachable by random sampling, if the suite supports it.
    pub fn sample_ceiling(self) -> Option<usize> {
        match self {
            Suite::TableauSign
            | Suite::KnuthMoveFlip
            | Suite::HookAvoiders
            | Suite::RskRoundtrip
            | Suite::RskSymmetry
            | Suite::Schensted
            | Suite::Descents => Some(30),
            _ => None,
        }
    }

    fn n_min(self) -> usize {
        match self {
            Suite::InvolutionSign
            | Suite::SecondRowParity
            | Suite::AvoiderSignLis
            | Suite::HookAvoiders => 1,
            Suite::SignedSquareSum => 2,
            _ => 0,
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    /// Largest `n` covered exhaustively; larger `n` were sampled.
    pub exhaustive_max: usize,
    pub seed: Option<u64>,
    pub cases_checked: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "suite={} n={}..={} cases={} violations={} result={}",
            self.suite,
            self.n_min,
            self.n_max,
            self.cases_checked,
            self.violations.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Default)]
struct Checker {
    cases: u64,
    violations: Vec<Violation>,
}

impl Checker {
    fn check<T: PartialEq + fmt::Debug>(
        &mut self,
        input: &dyn fmt::Display,
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.violations.push(Violation {
                input: input.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    /// Several conditions on one object count as a single case.
    fn check_all(&mut self, input: &dyn fmt::Display, conditions: &[(&str, bool)]) {
        self.cases += 1;
        for (what, ok) in conditions {
            if !ok {
                self.violations.push(Violation {
                    input: input.to_string(),
                    expected: (*what).to_string(),
                    actual: "violated".into(),
                });
            }
        }
    }
}

/// Runs `suite` for every `n` from the suite's minimum up to `n_max`.
///
/// `n_max` above the exhaustive ceiling requires a `seed` and a suite that
/// supports sampling.
pub fn run_suite(suite: Suite, n_max: usize, seed: Option<u64>) -> Result<VerificationReport> {
    let n_min = suite.n_min();
    if n_max < n_min {
        return Err(Error::InvalidArgument(format!(
            "suite `{suite}` starts at n = {n_min}"
        )));
    }
    let ceiling = suite.ceiling();
    if n_max > ceiling {
        let limit = match (seed, suite.sample_ceiling()) {
            (Some(_), Some(limit)) => limit,
            _ => ceiling,
        };
        if n_max > limit {
            return Err(Error::Budget {
                suite: suite.name().into(),
                requested: n_max,
                ceiling: limit,
            });
        }
    }

    let mut checker = Checker::default();
    let mut notes = Vec::new();
    let exhaustive_max = n_max.min(ceiling);
    for n in n_min..=exhaustive_max {
        match suite {
            Suite::InvolutionSign => {
                for pi in all_involutions(n) {
                    check_involution(&mut checker, &pi)?;
                }
            }
            Suite::SecondRowParity => {
                let avoid_321: [Pattern; 1] = ["321".parse()?];
                for pi in enumerate_avoiders(n, &avoid_321) {
                    let pair = rsk(&pi);
                    checker.check(&pi, true, pair.second_row_parity_matches()?);
                }
            }
            Suite::SignedSquareSum => {
                checker.check(&format_args!("n={n}"), 0, signed_square_sum(n)?);
            }
            Suite::AvoiderSignLis => {
                let brute = signed_lis_polynomial(enumerate_avoiders(n, &hook_patterns()))?;
                let closed = avoider_sign_lis_closed_form(n)?;
                checker.check(
                    &format_args!("n={n}"),
                    closed.to_string(),
                    brute.to_string(),
                );
            }
            Suite::RskRoundtrip => {
                for pi in Permutation::all(n) {
                    check_permutation(suite, &mut checker, &pi)?;
                }
                for shape in partitions_of(n) {
                    let tableaux: Vec<_> = enumerate_syt(&shape).collect();
                    for p in &tableaux {
                        for q in &tableaux {
                            let pair = TableauPair::new(p.clone(), q.clone())?;
                            let back = rsk(&rsk_inverse(&pair));
                            checker.check(&PairLabel(&pair), &pair, &back);
                        }
                    }
                }
            }
            _ => {
                for pi in Permutation::all(n) {
                    check_permutation(suite, &mut checker, &pi)?;
                }
            }
        }
    }
    if suite == Suite::SignedSquareSum {
        notes.push(format!(
            "n=1 is excluded: its raw sum is {} since S_1 has no odd permutation",
            signed_square_sum(1)?
        ));
    }

    if n_max > exhaustive_max {
        let seed = seed.expect("budget check guarantees a seed");
        let mut rng = StdRng::seed_from_u64(seed);
        for n in exhaustive_max + 1..=n_max {
            let mut word: Vec<usize> = (1..=n).collect();
            for _ in 0..SAMPLES_PER_N {
                word.shuffle(&mut rng);
                let pi = Permutation::from_word_unchecked(word.clone());
                check_permutation(suite, &mut checker, &pi)?;
            }
        }
        notes.push(format!(
            "n={}..={} sampled: {} random permutations per n",
            exhaustive_max + 1,
            n_max,
            SAMPLES_PER_N
        ));
    }

    Ok(VerificationReport {
        suite: suite.name().into(),
        n_min,
        n_max,
        exhaustive_max,
        seed: if n_max > exhaustive_max { seed } else { None },
        cases_checked: checker.cases,
        violations: checker.violations,
        notes,
    })
}

struct PairLabel<'a>(&'a TableauPair);

impl fmt::Display for PairLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P={:?} Q={:?}", self.0.p().rows(), self.0.q().rows())
    }
}

fn check_involution(checker: &mut Checker, pi: &Permutation) -> Result<()> {
    let built = beissinger_build(pi)?;
    let pair = rsk(pi);
    let shape = built.shape();
    let cycles = cycle_decomposition(pi)?;
    checker.check_all(
        pi,
        &[
            (
                "sign = (-1)^e",
                pi.sign() == involution_sign_via_shape(&shape),
            ),
            ("Beissinger tableau = P", &built == pair.p()),
            ("P = Q", pair.p() == pair.q()),
            (
                "#2-cycles = e",
                cycles.two_cycles() == shape.even_row_total(),
            ),
            (
                "#fixed points = #odd columns",
                cycles.fixed_points() == shape.odd_columns(),
            ),
        ],
    );
    Ok(())
}

fn check_permutation(suite: Suite, checker: &mut Checker, pi: &Permutation) -> Result<()> {
    match suite {
        Suite::TableauSign => {
            checker.check(pi, pi.sign(), rsk(pi).sign_from_tableaux());
        }
        Suite::KnuthMoveFlip => {
            let pair = rsk(pi);
            for m in applicable_moves(pi) {
                let sigma = apply_move(pi, m)?;
                let moved = rsk(&sigma);
                let label = format!("{pi} {m}");
                checker.check_all(
                    &label,
                    &[
                        ("P unchanged", moved.p() == pair.p()),
                        (
                            "|inv(Q') - inv(Q)| = 1",
                            moved.q().inversions().abs_diff(pair.q().inversions()) == 1,
                        ),
                        (
                            "|inv(pi') - inv(pi)| = 1",
                            sigma.inversions().abs_diff(pi.inversions()) == 1,
                        ),
                    ],
                );
            }
        }
        Suite::HookAvoiders => {
            let avoids = hook_patterns().iter().all(|tau| !contains_pattern(pi, tau));
            let hook = is_hook_identity_form(pi);
            let by_descents = (1..=pi.len()).find(|&k| descent_structure_check(pi, k));
            checker.check(pi, (avoids, hook), (hook.is_some(), by_descents));
        }
        Suite::RskRoundtrip => {
            checker.check(pi, pi.clone(), rsk_inverse(&rsk(pi)));
        }
        Suite::RskSymmetry => {
            let pair = rsk(pi);
            let inv = rsk(&pi.inverse());
            checker.check(pi, (pair.p(), pair.q()), (inv.q(), inv.p()));
        }
        Suite::Schensted => {
            let shape = rsk(pi).shape();
            let conj = shape.conjugate();
            checker.check(
                pi,
                (
                    longest_run(pi.as_slice(), |a, b| a < b),
                    longest_run(pi.as_slice(), |a, b| a > b),
                ),
                (shape.row_len(0), conj.row_len(0)),
            );
        }
        Suite::Descents => {
            checker.check(pi, pi.descent_set(), rsk(pi).q().descents());
        }
        _ => unreachable!("suite {suite} is not a per-permutation suite"),
    }
    Ok(())
}

/// Longest subsequence in which consecutive terms satisfy `before`,
/// by the quadratic dynamic program.
fn longest_run(word: &[usize], before: impl Fn(usize, usize) -> bool) -> usize {
    let mut best = vec![1usize; word.len()];
    for j in 0..word.len() {
        for i in 0..j {
            if before(word[i], word[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
            assert_eq!(
                serde_json::to_string(&suite).unwrap(),
                format!("\"{}\"", suite.name())
            );
        }
        assert_eq!(
            "theorem-9-9".parse::<Suite>(),
            Err(Error::UnknownSuite("theorem-9-9".into()))
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            run_suite(Suite::TableauSign, 9, None),
            Err(Error::Budget { ceiling: 8, .. })
        ));
        assert!(matches!(
            run_suite(Suite::SignedSquareSum, 11, Some(1)),
            Err(Error::Budget { ceiling: 10, .. })
        ));
        assert!(matches!(
            run_suite(Suite::TableauSign, 31, Some(1)),
            Err(Error::Budget { ceiling: 30, .. })
        ));
        assert!(run_suite(Suite::SignedSquareSum, 1, None).is_err());
    }

    #[test]
    fn small_runs_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 5, None).unwrap();
            assert!(report.passed(), "{report:?}");
            assert!(report.cases_checked > 0);
        }
    }

    #[test]
    fn sign_suite_case_count() {
        let report = run_suite(Suite::TableauSign, 6, None).unwrap();
        assert_eq!(report.cases_checked, 1 + 1 + 2 + 6 + 24 + 120 + 720);
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = run_suite(Suite::TableauSign, 10, Some(7)).unwrap();
        let b = run_suite(Suite::TableauSign, 10, Some(7)).unwrap();
        assert_eq!(a, b);
        assert!(a.passed());
        assert_eq!(a.exhaustive_max, 8);
        assert_eq!(a.seed, Some(7));
    }

    #[test]
    fn longest_run_oracle() {
        assert_eq!(longest_run(&[2, 9, 1, 5, 6, 4, 8, 3, 7], |a, b| a < b), 4);
        assert_eq!(longest_run(&[], |a, b| a < b), 0);
    }

    #[test]
    fn violations_are_recorded() {
        let mut c = Checker::default();
        c.check(&"x", 1, 2);
        c.check_all(&"y", &[("ok", true), ("bad", false)]);
        assert_eq!(c.cases, 2);
        assert_eq!(c.violations.len(), 2);
        assert_eq!(c.violations[0].expected, "1");
    }
}
