//! Language-level properties of parsing, trimming, and minimization on
//! randomized automata.

mod common;

use colex::random::{random_trim_dfa, random_trim_nfa, random_word};
use colex::{Automaton, Dfa};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn parse_serialize_round_trip_on_random_automata() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let a = random_trim_nfa(&mut rng, 12, 4);
        let text = a.to_text();
        let reparsed = Automaton::parse(&text).unwrap();
        assert_eq!(reparsed, a);
        assert_eq!(reparsed.to_text(), text, "serialization is bit-stable");
    }
}

#[test]
fn trim_is_idempotent_and_preserves_acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        // Start from a raw random automaton that may have junk states.
        let a = random_trim_nfa(&mut rng, 10, 3);
        let trimmed = a.trim().unwrap();
        assert_eq!(trimmed.trim().unwrap(), trimmed, "idempotent");
        for _ in 0..200 {
            let w = random_word(&mut rng, a.alphabet(), 8);
            assert_eq!(a.accepts_nfa(&w), trimmed.accepts_nfa(&w));
        }
    }
}

#[test]
fn minimize_yields_distinguishable_states_and_same_language() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for round in 0..30 {
        let d = random_trim_dfa(&mut rng, 8, 2);
        let m = d.minimize();
        assert!(m.state_count() <= d.state_count());

        // Exhaustive language agreement up to 2n.
        let words = common::words_up_to(d.alphabet(), 2 * d.state_count().min(5));
        for w in &words {
            assert_eq!(d.accepts(w), m.accepts(w), "round {round}");
        }

        // No two states of the quotient are Nerode-equivalent: exhibit a
        // distinguishing word for every pair by residual search.
        let n = m.state_count();
        let probes = common::words_up_to(m.alphabet(), n + 2);
        for u in 1..=n {
            for v in u + 1..=n {
                let distinguishable = probes.iter().any(|w| {
                    let from_u = run_from(&m, u, w).is_some_and(|q| m.is_final(q));
                    let from_v = run_from(&m, v, w).is_some_and(|q| m.is_final(q));
                    from_u != from_v
                });
                assert!(distinguishable, "states {u} and {v} are equivalent");
            }
        }
    }
}

fn run_from(d: &Dfa, mut q: usize, w: &[colex::Symbol]) -> Option<usize> {
    for &a in w {
        q = d.step(q, a)?;
    }
    Some(q)
}

proptest::proptest! {
    /// Parsing is total: arbitrary text is accepted or rejected, never a
    /// panic, and anything accepted re-serializes losslessly.
    #[test]
    fn parser_is_total(text in "\\PC*") {
        if let Ok(a) = Automaton::parse(&text) {
            proptest::prop_assert_eq!(Automaton::parse(&a.to_text()).unwrap(), a);
        }
    }

    /// Same for inputs that look much more like real automaton files.
    #[test]
    fn parser_is_total_on_plausible_inputs(
        lines in proptest::collection::vec("(alphabet|states|source|finals|edge|#x)( [a-c0-9]{1,3}){0,4}", 0..12),
    ) {
        let text = lines.join("\n");
        if let Ok(a) = Automaton::parse(&text) {
            proptest::prop_assert_eq!(Automaton::parse(&a.to_text()).unwrap(), a);
        }
    }
}

#[test]
fn minimize_is_a_fixpoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..20 {
        let m = random_trim_dfa(&mut rng, 10, 3).minimize();
        assert!(m.minimize().isomorphic(&m));
    }
}
