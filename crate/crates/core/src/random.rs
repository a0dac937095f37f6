//! Seeded random automata and patterns for property campaigns and benches.

use rand::Rng;

use crate::automaton::{Alphabet, Automaton, Dfa, Edge, Symbol, Word};

fn letters(sigma: usize) -> Alphabet {
    assert!((1..=26).contains(&sigma));
    Alphabet::new((0..sigma).map(|i| ((b'a' + i as u8) as char).to_string()))
        .expect("letter alphabet is valid")
}

/// A random trim DFA with at most `max_n` states over `sigma` letters.
pub fn random_trim_dfa<R: Rng>(rng: &mut R, max_n: usize, sigma: usize) -> Dfa {
    loop {
        let n = rng.random_range(1..=max_n);
        let alphabet = letters(sigma);
        let mut edges = Vec::new();
        for from in 1..=n {
            for s in 0..sigma {
                if rng.random_bool(0.55) {
                    edges.push(Edge {
                        from,
                        to: rng.random_range(1..=n),
                        label: Symbol(s as u32),
                    });
                }
            }
        }
        let finals: Vec<usize> = (1..=n).filter(|_| rng.random_bool(0.3)).collect();
        let finals = if finals.is_empty() {
            vec![rng.random_range(1..=n)]
        } else {
            finals
        };
        let Ok(a) = Automaton::new(n, 1, finals, edges, alphabet) else {
            continue;
        };
        if let Ok(trimmed) = a.trim() {
            return Dfa::try_from(trimmed).expect("per-symbol edges are deterministic");
        }
    }
}

/// A random trim NFA with at most `max_n` states over `sigma` letters.
/// Nondeterminism comes from duplicated (state, label) slots.
pub fn random_trim_nfa<R: Rng>(rng: &mut R, max_n: usize, sigma: usize) -> Automaton {
    loop {
        let n = rng.random_range(1..=max_n);
        let alphabet = letters(sigma);
        let mut edges = Vec::new();
        for from in 1..=n {
            for s in 0..sigma {
                let fanout = if rng.random_bool(0.45) {
                    0
                } else if rng.random_bool(0.7) {
                    1
                } else {
                    2
                };
                let mut targets = Vec::new();
                for _ in 0..fanout {
                    let to = rng.random_range(1..=n);
                    if !targets.contains(&to) {
                        targets.push(to);
                    }
                }
                for to in targets {
                    edges.push(Edge {
                        from,
                        to,
                        label: Symbol(s as u32),
                    });
                }
            }
        }
        let finals: Vec<usize> = (1..=n).filter(|_| rng.random_bool(0.3)).collect();
        let finals = if finals.is_empty() {
            vec![rng.random_range(1..=n)]
        } else {
            finals
        };
        let Ok(a) = Automaton::new(n, 1, finals, edges, alphabet) else {
            continue;
        };
        if let Ok(trimmed) = a.trim() {
            return trimmed;
        }
    }
}

/// A uniformly random word over `alphabet` of length up to `max_len`.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| Symbol(rng.random_range(0..alphabet.len()) as u32))
        .collect()
}
