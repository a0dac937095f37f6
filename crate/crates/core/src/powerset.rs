//! Width-aware determinization: the reachable-subset construction, the
//! width-parameterized size bounds it obeys, NFA equivalence through
//! minimization, and direct NFA membership.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::automaton::{Automaton, AutomatonError, Dfa, Edge, StateId, Word};
use crate::order;

/// Default ceiling on the number of subset states materialized.
pub const DEFAULT_POWERSET_CAP: usize = 1 << 20;

#[derive(Debug, Error)]
pub enum PowersetError {
    #[error("powerset construction exceeded the cap of {cap} states")]
    CapExceeded { cap: usize },
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("width bound {p} is outside 1..={n}")]
    BadWidthBound { p: usize, n: usize },
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

#[derive(Clone, Debug, Serialize)]
pub struct PowersetStats {
    /// NFA state count.
    pub n: usize,
    /// Width parameter used by a bound check, when one ran.
    pub p_used: Option<usize>,
    /// Number of subset states.
    pub q_star: usize,
    /// `2^p (n - p + 1) - 1`, when `p_used` is set.
    pub bound: Option<u128>,
}

/// The subset DFA together with the subset each of its states stands for.
#[derive(Clone, Debug)]
pub struct PowersetResult {
    pub dfa: Dfa,
    /// For each subset state (1-based), the NFA states it contains, sorted.
    pub state_sets: Vec<Vec<StateId>>,
    pub stats: PowersetStats,
}

/// Reachable-subset construction with FIFO worklist order, so the state
/// numbering is deterministic. Requires a trim input; the result is trim.
pub fn powerset_construct(a: &Automaton, cap: usize) -> Result<PowersetResult, PowersetError> {
    let start = vec![a.source()];
    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut sets: Vec<Vec<StateId>> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();

    ids.insert(start.clone(), 1);
    sets.push(start);
    let mut head = 0;
    while head < sets.len() {
        let set = sets[head].clone();
        let from = head + 1;
        head += 1;
        for sym in a.alphabet().symbols() {
            let next = a.subset_step(&set, sym);
            if next.is_empty() {
                continue;
            }
            let to = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    if sets.len() >= cap {
                        return Err(PowersetError::CapExceeded { cap });
                    }
                    sets.push(next.clone());
                    let id = sets.len();
                    ids.insert(next, id);
                    id
                }
            };
            edges.push(Edge {
                from,
                to,
                label: sym,
            });
        }
    }

    let finals = (1..=sets.len()).filter(|&q| sets[q - 1].iter().any(|&u| a.is_final(u)));
    let inner = Automaton::new(sets.len(), 1, finals, edges, a.alphabet().clone())?;
    let dfa = Dfa::try_from(inner)?;
    let stats = PowersetStats {
        n: a.state_count(),
        p_used: None,
        q_star: sets.len(),
        bound: None,
    };
    Ok(PowersetResult {
        dfa,
        state_sets: sets,
        stats,
    })
}

/// Outcome of checking the two determinization bounds for a width bound `p`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub p: usize,
    pub q_star: usize,
    /// `2^p (n - p + 1) - 1`
    pub state_bound: u128,
    pub width_pow: usize,
    /// `2^p - 1`
    pub width_bound: u128,
    pub states_ok: bool,
    pub width_ok: bool,
}

impl BoundReport {
    pub fn ok(&self) -> bool {
        self.states_ok && self.width_ok
    }
}

/// Verify `|Q*| <= 2^p (n - p + 1) - 1` and `width(Pow) <= 2^p - 1` for a
/// width bound `p >= width(a)`. The bounds are monotone in `p` for `p <= n`,
/// so any upper bound on the true width is a sound argument.
pub fn check_powerset_bounds(
    a: &Automaton,
    p: usize,
    cap: usize,
) -> Result<BoundReport, PowersetError> {
    let n = a.state_count();
    if p == 0 || p > n {
        return Err(PowersetError::BadWidthBound { p, n });
    }
    let result = powerset_construct(a, cap)?;
    let two_pow_p = 1u128.checked_shl(p as u32).unwrap_or(u128::MAX);
    let state_bound = two_pow_p
        .saturating_mul(n as u128 - p as u128 + 1)
        .saturating_sub(1);
    let width_bound = two_pow_p - 1;
    let (width_pow, _) = order::dfa_width(&result.dfa);
    Ok(BoundReport {
        n,
        p,
        q_star: result.stats.q_star,
        state_bound,
        width_pow,
        width_bound,
        states_ok: result.stats.q_star as u128 <= state_bound,
        width_ok: width_pow as u128 <= width_bound,
    })
}

/// Language equality of two automata over the same alphabet: determinize,
/// minimize, and compare canonical forms.
pub fn nfa_equivalent(a: &Automaton, b: &Automaton, cap: usize) -> Result<bool, PowersetError> {
    if a.alphabet() != b.alphabet() {
        return Err(PowersetError::AlphabetMismatch(
            a.alphabet().tokens().to_vec(),
            b.alphabet().tokens().to_vec(),
        ));
    }
    let da = powerset_construct(a, cap)?.dfa.minimize();
    let db = powerset_construct(b, cap)?.dfa.minimize();
    Ok(da.isomorphic(&db))
}

/// Word membership by on-the-fly subset simulation; no subset automaton is
/// materialized.
pub fn nfa_membership(a: &Automaton, word: &Word) -> bool {
    a.accepts_nfa(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    const CAP: usize = DEFAULT_POWERSET_CAP;

    #[test]
    fn determinizing_a_dfa_is_identity() {
        let d = testdata::width_two();
        let result = powerset_construct(&d, CAP).unwrap();
        assert!(result.dfa.isomorphic(&d));
        assert!(result.state_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn one_state_nfa_with_self_loops() {
        let a = crate::Automaton::parse(
            "alphabet a b\nstates 1\nsource 1\nfinals 1\nedge 1 1 a\nedge 1 1 b\n",
        )
        .unwrap();
        let result = powerset_construct(&a, CAP).unwrap();
        assert_eq!(result.stats.q_star, 1);
    }

    #[test]
    fn wheeler_powerset_preserves_language_short_words() {
        let a = testdata::wheeler_nfa();
        let result = powerset_construct(&a, CAP).unwrap();
        let sigma: Vec<_> = a.alphabet().symbols().collect();
        let mut words = vec![vec![]];
        for _ in 0..8 {
            let mut next = Vec::new();
            for w in &words {
                for &s in &sigma {
                    let mut w2 = w.clone();
                    w2.push(s);
                    next.push(w2);
                }
            }
            for w in &next {
                assert_eq!(a.accepts_nfa(w), result.dfa.accepts(w));
            }
            words = next;
        }
    }

    #[test]
    fn wheeler_bounds_hold_with_exact_width() {
        let a = testdata::wheeler_nfa();
        let p = order::brute_force_nfa_width(&a, 6).unwrap();
        assert_eq!(p, 1);
        let report = check_powerset_bounds(&a, p, CAP).unwrap();
        assert_eq!(report.state_bound, 11);
        assert!(report.q_star <= 11);
        assert!(report.width_ok, "width(Pow) <= 1");
        assert!(report.ok());
    }

    #[test]
    fn trivial_bound_arithmetic() {
        let a = crate::Automaton::parse("alphabet a\nstates 1\nsource 1\nfinals 1\nedge 1 1 a\n")
            .unwrap();
        let report = check_powerset_bounds(&a, 1, CAP).unwrap();
        assert_eq!(report.state_bound, 1);
        assert_eq!(report.q_star, 1);
        assert!(report.ok());
    }

    #[test]
    fn shared_lang_family_is_equivalent() {
        let d1 = testdata::shared_lang_min();
        let d2 = testdata::shared_lang_split_a();
        let d3 = testdata::shared_lang_split_b();
        assert!(nfa_equivalent(&d1, &d2, CAP).unwrap());
        assert!(nfa_equivalent(&d2, &d3, CAP).unwrap());
        assert!(nfa_equivalent(&d1, &d3, CAP).unwrap());
    }

    #[test]
    fn removing_a_final_changes_the_language() {
        let a = testdata::width_two_automaton();
        let text = testdata::WIDTH_TWO_DFA.replace("finals 4 5 6", "finals 4 5");
        let b = crate::Automaton::parse(&text).unwrap();
        assert!(!nfa_equivalent(&a, &b, CAP).unwrap());
    }

    #[test]
    fn nfa_and_its_powerset_are_equivalent() {
        let a = testdata::wheeler_nfa();
        let pow = powerset_construct(&a, CAP).unwrap();
        assert!(nfa_equivalent(&a, &pow.dfa, CAP).unwrap());
    }

    #[test]
    fn membership_examples() {
        let a = testdata::wheeler_nfa();
        let w = |s: &str| a.alphabet().parse_word(s).unwrap();
        assert!(nfa_membership(&a, &w("ab")));
        assert!(!nfa_membership(&a, &w("")));
        let d = testdata::width_two_automaton();
        assert!(nfa_membership(
            &d,
            &d.alphabet().parse_word("abaa").unwrap()
        ));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = testdata::wheeler_nfa();
        let b = testdata::colliding_nfa_a();
        assert!(matches!(
            nfa_equivalent(&a, &b, CAP),
            Err(PowersetError::AlphabetMismatch(..))
        ));
    }
}
