//! Transform properties on random automata: the DFA round trip, language
//! preservation on NFAs through the index, and byte determinism.

mod common;

use colex::abwt::{invert_abwt_dfa, reconstruct_nfa_exhaustive, Abwt};
use colex::random::{random_trim_dfa, random_trim_nfa};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn dfa_round_trip_small_campaign() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for round in 0..40 {
        let d = random_trim_dfa(&mut rng, 20, 4);
        let (t, _, _) = common::indexed_dfa(&d);
        let back = invert_abwt_dfa(&t).unwrap();
        assert!(back.isomorphic(&d), "round {round}:\n{}", d.to_text());
    }
}

#[test]
fn nfa_language_is_preserved_through_the_transform() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    for _ in 0..15 {
        let a = random_trim_nfa(&mut rng, 6, 2);
        let (_, ix, _, _) = common::indexed_nfa(&a);
        for w in common::words_up_to(a.alphabet(), 6) {
            let (_, member) = ix.accepts_from_source(&w);
            assert_eq!(
                member,
                common::oracle_member(&a, &w),
                "on:\n{}",
                a.to_text()
            );
        }
    }
}

#[test]
fn serialized_builds_are_byte_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..10 {
        let d = random_trim_dfa(&mut rng, 15, 3);
        let (t1, _, _) = common::indexed_dfa(&d);
        let (t2, _, _) = common::indexed_dfa(&d);
        assert_eq!(t1.to_bytes(), t2.to_bytes());
    }
}

#[test]
fn serialization_round_trips_and_validates() {
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    for _ in 0..20 {
        let d = random_trim_dfa(&mut rng, 15, 3);
        let (t, _, _) = common::indexed_dfa(&d);
        let bytes = t.to_bytes();
        let back = Abwt::from_bytes(&bytes).unwrap();
        assert_eq!(back, t);
    }
}

/// Decoding must be total: random corruption of a valid stream may be
/// rejected or may happen to decode, but it never panics, and whatever
/// decodes also builds an index without panicking.
#[test]
fn corrupted_streams_never_panic() {
    use colex::index::Index;
    use rand::Rng;

    let d = colex::testdata::width_two();
    let (t, _, _) = common::indexed_dfa(&d);
    let valid = t.to_bytes();
    let mut rng = ChaCha8Rng::seed_from_u64(56);
    for _ in 0..4000 {
        let mut bytes = valid.clone();
        match rng.random_range(0..3) {
            0 => {
                let i = rng.random_range(0..bytes.len());
                bytes[i] ^= 1 << rng.random_range(0..8);
            }
            1 => {
                bytes.truncate(rng.random_range(0..bytes.len()));
            }
            _ => {
                let i = rng.random_range(0..bytes.len());
                bytes[i] = rng.random();
                let j = rng.random_range(0..bytes.len());
                bytes[j] = rng.random();
            }
        }
        if let Ok(parsed) = Abwt::from_bytes(&bytes) {
            let _ = Index::build(&parsed);
        }
    }
}

/// Path-distinguished NFAs (here: DFAs fed through the exhaustive list
/// procedure) reconstruct exactly.
#[test]
fn exhaustive_reconstruction_agrees_on_dfas() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..10 {
        let d = random_trim_dfa(&mut rng, 8, 3);
        let (t, _, _) = common::indexed_dfa(&d);
        let via_list = reconstruct_nfa_exhaustive(&t).unwrap();
        let via_bfs = invert_abwt_dfa(&t).unwrap().into_automaton();
        let mut edges_list = via_list.edges().to_vec();
        let mut edges_bfs = via_bfs.edges().to_vec();
        edges_list.sort_unstable();
        edges_bfs.sort_unstable();
        assert_eq!(edges_list, edges_bfs);
        assert_eq!(via_list.finals(), via_bfs.finals());
    }
}
