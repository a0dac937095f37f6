//! Shared input generation for the criterion benches: fixed-seed automata
//! at a few characteristic sizes, so runs are comparable across machines.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use colex::random::{random_trim_dfa, random_word};
use colex::{Dfa, Word};

/// A random trim DFA with at least two thirds of the requested states.
pub fn sized_dfa(seed: u64, target_n: usize, sigma: usize) -> Dfa {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let d = random_trim_dfa(&mut rng, target_n, sigma);
        if d.state_count() * 3 >= target_n * 2 {
            return d;
        }
    }
}

/// Deterministic query workload over the automaton's alphabet.
pub fn patterns(seed: u64, d: &Dfa, count: usize, max_len: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_word(&mut rng, d.alphabet(), max_len))
        .collect()
}
