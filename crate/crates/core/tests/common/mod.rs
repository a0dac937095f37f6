//! Independent oracles shared by the integration suites: direct graph
//! walks and word enumeration, kept free of the index/search code paths
//! they are used to check.

#![allow(dead_code)]

use colex::abwt::{build_abwt, Abwt};
use colex::index::Index;
use colex::order::{
    self, brute_force_min_width_order, chain_partition, check_colex_axioms,
    greedy_maximal_colex_order, ChainPartition, PartialOrder,
};
use colex::{Alphabet, Automaton, Dfa, StateId, Symbol, Word};

/// All states reached by a path labeled `pattern`, starting anywhere.
pub fn oracle_subpath_states(a: &Automaton, pattern: &[Symbol]) -> Vec<StateId> {
    let mut current: Vec<StateId> = a.states().collect();
    for &sym in pattern {
        let mut next: Vec<StateId> = a
            .edges()
            .iter()
            .filter(|e| e.label == sym && current.binary_search(&e.from).is_ok())
            .map(|e| e.to)
            .collect();
        next.sort_unstable();
        next.dedup();
        current = next;
        if current.is_empty() {
            break;
        }
    }
    current
}

/// All states reached from the source by a path labeled `pattern`.
pub fn oracle_from_source(a: &Automaton, pattern: &[Symbol]) -> Vec<StateId> {
    let mut current: Vec<StateId> = vec![a.source()];
    for &sym in pattern {
        let mut next: Vec<StateId> = a
            .edges()
            .iter()
            .filter(|e| e.label == sym && current.binary_search(&e.from).is_ok())
            .map(|e| e.to)
            .collect();
        next.sort_unstable();
        next.dedup();
        current = next;
        if current.is_empty() {
            break;
        }
    }
    current
}

pub fn oracle_member(a: &Automaton, word: &[Symbol]) -> bool {
    oracle_from_source(a, word).iter().any(|&q| a.is_final(q))
}

/// Every word over the alphabet with length at most `max_len`, shortest
/// first.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let sigma: Vec<Symbol> = alphabet.symbols().collect();
    let mut all: Vec<Word> = vec![vec![]];
    let mut frontier: Vec<Word> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * sigma.len());
        for w in &frontier {
            for &s in &sigma {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Is `set` convex in the order: no outside state strictly between two
/// members?
pub fn is_convex(po: &PartialOrder, set: &[StateId]) -> bool {
    for &u in set {
        for &z in set {
            for v in 1..=po.state_count() {
                if !set.contains(&v) && po.less(u, v) && po.less(v, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Build the transform and index of a DFA under its maximum co-lex order,
/// returning also the map from total-order positions to state ids.
pub fn indexed_dfa(d: &Dfa) -> (Abwt, Index, Vec<StateId>) {
    let po = order::compute_max_colex_order(d);
    let (_, cp) = order::dfa_width(d);
    let t = build_abwt(d, &po, &cp).expect("max order builds");
    let ix = Index::build(&t).expect("index builds");
    let map: Vec<StateId> = cp.chains.iter().flatten().copied().collect();
    (t, ix, map)
}

/// Build the transform and index of an NFA under a verified co-lex order
/// (exact minimum-width order for tiny inputs, greedy maximal otherwise).
pub fn indexed_nfa(a: &Automaton) -> (Abwt, Index, Vec<StateId>, PartialOrder) {
    let po = if a.state_count() <= 5 {
        brute_force_min_width_order(a, 5)
            .expect("within oracle cap")
            .0
    } else {
        greedy_maximal_colex_order(a)
    };
    assert!(
        check_colex_axioms(a, &po).unwrap().ok(),
        "search produced a non-co-lex order"
    );
    let cp = source_first_partition(a, &po);
    let t = build_abwt(a, &po, &cp).expect("verified order builds");
    let ix = Index::build(&t).expect("index builds");
    let map: Vec<StateId> = cp.chains.iter().flatten().copied().collect();
    (t, ix, map, po)
}

pub fn source_first_partition(a: &Automaton, po: &PartialOrder) -> ChainPartition {
    chain_partition(po)
        .with_source_first(a.source())
        .expect("source heads its chain")
}

/// Translate index positions back to automaton state ids.
pub fn to_state_ids(positions: &[usize], map: &[StateId]) -> Vec<StateId> {
    let mut out: Vec<StateId> = positions.iter().map(|&v| map[v - 1]).collect();
    out.sort_unstable();
    out
}
