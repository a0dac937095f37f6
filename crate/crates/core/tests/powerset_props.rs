//! Determinization properties on random NFAs: language preservation, the
//! width-parameterized size bounds, and equivalence-relation sanity.

mod common;

use colex::order::brute_force_nfa_width;
use colex::powerset::{
    check_powerset_bounds, nfa_equivalent, nfa_membership, powerset_construct, DEFAULT_POWERSET_CAP,
};
use colex::random::random_trim_nfa;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = DEFAULT_POWERSET_CAP;

#[test]
fn determinization_preserves_the_language() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let a = random_trim_nfa(&mut rng, 6, 3);
        let result = powerset_construct(&a, CAP).unwrap();
        assert!(result.dfa.is_trim());
        for w in common::words_up_to(a.alphabet(), 8) {
            assert_eq!(
                nfa_membership(&a, &w),
                result.dfa.accepts(&w),
                "word disagreement on:\n{}",
                a.to_text()
            );
        }
    }
}

#[test]
fn bounds_hold_with_exact_width_from_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..40 {
        let a = random_trim_nfa(&mut rng, 5, 3);
        let p = brute_force_nfa_width(&a, 5).unwrap();
        let report = check_powerset_bounds(&a, p, CAP).unwrap();
        assert!(
            report.ok(),
            "bound violated (q*={}, bound={}, width={}, width bound={}) on:\n{}",
            report.q_star,
            report.state_bound,
            report.width_pow,
            report.width_bound,
            a.to_text()
        );
    }
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let pool: Vec<_> = (0..6).map(|_| random_trim_nfa(&mut rng, 5, 2)).collect();
    for a in &pool {
        assert!(nfa_equivalent(a, a, CAP).unwrap(), "reflexive");
    }
    for a in &pool {
        for b in &pool {
            let ab = nfa_equivalent(a, b, CAP).unwrap();
            let ba = nfa_equivalent(b, a, CAP).unwrap();
            assert_eq!(ab, ba, "symmetric");
            for c in &pool {
                if ab && nfa_equivalent(b, c, CAP).unwrap() {
                    assert!(nfa_equivalent(a, c, CAP).unwrap(), "transitive");
                }
            }
        }
    }
    // Every NFA is equivalent to its own determinization.
    for a in &pool {
        let pow = powerset_construct(a, CAP).unwrap();
        assert!(nfa_equivalent(a, &pow.dfa, CAP).unwrap());
    }
}

#[test]
fn cap_aborts_cleanly() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let a = random_trim_nfa(&mut rng, 8, 3);
    match powerset_construct(&a, 1) {
        Err(colex::powerset::PowersetError::CapExceeded { cap: 1 }) => {}
        Ok(r) => assert_eq!(r.stats.q_star, 1, "tiny automata may fit the cap"),
        Err(e) => panic!("unexpected error {e}"),
    }
}
