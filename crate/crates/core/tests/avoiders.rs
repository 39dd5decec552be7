mod common;

use common::contains_length_three;
use rsk_sign::imbalance::{enumerate_syt, hook_imbalance, imbalance_polynomial};
use rsk_sign::patterns::{
    avoider_sign_lis_closed_form, contains_pattern, descent_structure_check, enumerate_avoiders,
    hook_patterns, is_hook_identity_form, parse_pattern_set, signed_lis_polynomial,
};
use rsk_sign::{IntPolynomial, Partition, Permutation};

fn in_a_n(pi: &Permutation) -> bool {
    let w = pi.as_slice();
    !contains_length_three(w, [2, 1, 3]) && !contains_length_three(w, [2, 3, 1])
}

#[test]
fn containment_matches_triple_loops() {
    let patterns = parse_pattern_set("123,132,213,231,312,321").unwrap();
    for n in 0..=6 {
        for pi in Permutation::all(n) {
            for tau in &patterns {
                let digits: Vec<usize> = tau.as_permutation().as_slice().to_vec();
                let expected =
                    contains_length_three(pi.as_slice(), [digits[0], digits[1], digits[2]]);
                assert_eq!(contains_pattern(&pi, tau), expected, "{pi} {tau}");
            }
        }
    }
}

#[test]
fn three_characterizations_agree() {
    for n in 1..=7 {
        for pi in Permutation::all(n) {
            let avoids = in_a_n(&pi);
            let hook = is_hook_identity_form(&pi);
            assert_eq!(avoids, hook.is_some(), "{pi}");
            for k in 1..=n {
                assert_eq!(
                    hook == Some(k),
                    descent_structure_check(&pi, k),
                    "{pi} k={k}"
                );
            }
        }
    }
}

#[test]
fn avoiders_biject_with_hook_tableaux() {
    for n in 1..=10 {
        let avoiders = enumerate_avoiders(n, &hook_patterns()).count();
        let hook_tableaux: usize = (1..=n)
            .map(|k| enumerate_syt(&Partition::hook(n, k).unwrap()).count())
            .sum();
        assert_eq!(avoiders, 1 << (n - 1));
        assert_eq!(hook_tableaux, avoiders);
    }
}

/// Brute-force signed lis polynomial over A_n, with lis from the DP oracle.
fn brute_polynomial(n: usize) -> IntPolynomial {
    let mut coeffs = vec![0i64; n + 1];
    for pi in Permutation::all(n).filter(in_a_n) {
        coeffs[common::lis_dp(pi.as_slice())] += common::sign_by_cycles(pi.as_slice());
    }
    IntPolynomial::new(coeffs)
}

#[test]
fn signed_lis_closed_form() {
    for n in 1..=9 {
        assert_eq!(
            avoider_sign_lis_closed_form(n).unwrap(),
            brute_polynomial(n),
            "n={n}"
        );
    }
    assert_eq!(avoider_sign_lis_closed_form(3).unwrap().pretty(), "q^3 - q");
    assert_eq!(avoider_sign_lis_closed_form(1).unwrap().pretty(), "q");
}

#[test]
fn replacing_231_by_312_inverts_the_class() {
    let other = parse_pattern_set("213,312").unwrap();
    for n in 1..=8 {
        let mut inverted: Vec<Permutation> = enumerate_avoiders(n, &hook_patterns())
            .map(|pi| pi.inverse())
            .collect();
        inverted.sort();
        let direct: Vec<Permutation> = enumerate_avoiders(n, &other).collect();
        assert_eq!(direct, inverted, "n={n}");
        assert_eq!(
            signed_lis_polynomial(direct).unwrap(),
            avoider_sign_lis_closed_form(n).unwrap()
        );
    }
}

#[test]
fn hook_imbalance_closed_form() {
    for n in 1..=10 {
        for k in 1..=n {
            let enumerated = imbalance_polynomial(&Partition::hook(n, k).unwrap())
                .unwrap()
                .imbalance;
            assert_eq!(hook_imbalance(n, k).unwrap(), enumerated, "n={n} k={k}");
            if n % 2 == 1 && k % 2 == 0 {
                assert_eq!(enumerated, 0);
            }
        }
    }
}
