//! Small golden automata used by the test suite and the CLI self-test.

use crate::automaton::{Automaton, Dfa};

/// 7-state DFA accepting `ab(aa)*(b(b+c))*`; the running example for the
/// transform and the index. States `v1..v7` are ids 1..7.
pub const WIDTH_TWO_DFA: &str = "\
alphabet a b c
states 7
source 1
finals 4 5 6
edge 1 2 a
edge 2 6 b
edge 6 3 a
edge 6 7 b
edge 3 5 a
edge 5 3 a
edge 5 7 b
edge 7 4 b
edge 7 4 c
edge 4 7 b
";

/// The chain partition used in all the worked examples on [`WIDTH_TWO_DFA`]:
/// `Q1 = {v1,v2,v3,v4}`, `Q2 = {v5,v6,v7}`.
pub const WIDTH_TWO_CHAINS: [&[usize]; 2] = [&[1, 2, 3, 4], &[5, 6, 7]];

/// Covering (Hasse) pairs of the maximum co-lex order of [`WIDTH_TWO_DFA`].
pub const WIDTH_TWO_HASSE: [(usize, usize); 7] =
    [(1, 2), (2, 3), (3, 6), (6, 7), (2, 5), (5, 6), (6, 4)];

/// 6-state NFA admitting a total co-lex order.
pub const WHEELER_NFA: &str = "\
alphabet a b c
states 6
source 1
finals 5 6
edge 1 2 a
edge 1 1 a
edge 1 3 b
edge 1 4 b
edge 2 5 b
edge 3 5 b
edge 4 6 b
edge 4 6 c
";

/// A total co-lex order on [`WHEELER_NFA`] (covering pairs).
pub const WHEELER_TOTAL_ORDER: [(usize, usize); 5] = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)];

/// A second maximal co-lex order on [`WHEELER_NFA`] of width 2 (covering pairs).
pub const WHEELER_SECOND_ORDER: [(usize, usize); 5] = [(1, 2), (2, 4), (4, 3), (3, 6), (3, 5)];

/// Minimum DFA of the three-automata family sharing one language; width 3.
/// All states final.
pub const SHARED_LANG_MIN: &str = "\
alphabet a b c d e f g h k
states 6
source 1
finals 1 2 3 4 5 6
edge 1 2 a
edge 1 3 b
edge 1 4 k
edge 1 4 f
edge 1 5 e
edge 1 5 h
edge 1 6 g
edge 6 4 d
edge 5 4 e
edge 2 4 d
edge 2 2 c
edge 3 3 c
";

/// Covering pairs of the maximum co-lex order of [`SHARED_LANG_MIN`]: 1 below 2 and
/// 3; 2 and 3 incomparable, both below 4, 5, 6; 4, 5, 6 pairwise
/// incomparable.
pub const SHARED_LANG_MIN_HASSE: [(usize, usize); 8] = [
    (1, 2),
    (1, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 4),
    (3, 5),
    (3, 6),
];

/// Same language as [`SHARED_LANG_MIN`], one extra state (splits state 4), width 2.
pub const SHARED_LANG_SPLIT_A: &str = "\
alphabet a b c d e f g h k
states 7
source 1
finals 1 2 3 4 5 6 7
edge 1 2 a
edge 1 3 b
edge 1 5 k
edge 1 4 f
edge 1 6 e
edge 1 6 h
edge 1 7 g
edge 7 4 d
edge 6 4 e
edge 2 4 d
edge 2 2 c
edge 3 3 c
";

/// Same language as [`SHARED_LANG_MIN`], one extra state (splits state 5), width 2.
pub const SHARED_LANG_SPLIT_B: &str = "\
alphabet a b c d e f g h k
states 7
source 1
finals 1 2 3 4 5 6 7
edge 1 2 a
edge 1 3 b
edge 1 4 k
edge 1 4 f
edge 1 5 h
edge 1 6 e
edge 1 7 g
edge 7 4 d
edge 6 4 e
edge 5 4 e
edge 2 4 d
edge 2 2 c
edge 3 3 c
";

/// First of the two non-isomorphic NFAs that share a transform. Ids 1..6.
pub const COLLIDING_NFA_A: &str = "\
alphabet a b c d
states 6
source 1
finals 3 4 6
edge 1 2 a
edge 1 5 a
edge 5 6 d
edge 6 6 b
edge 2 3 c
edge 5 4 c
edge 4 4 d
";

/// Covering pairs of the maximal co-lex order used on [`COLLIDING_NFA_A`].
pub const COLLIDING_A_ORDER: [(usize, usize); 5] = [(1, 2), (2, 5), (5, 3), (5, 6), (3, 4)];

/// Second of the two non-isomorphic NFAs that share a transform.
pub const COLLIDING_NFA_B: &str = "\
alphabet a b c d
states 6
source 1
finals 3 4 6
edge 1 2 a
edge 1 5 a
edge 5 6 d
edge 6 6 b
edge 2 4 c
edge 5 3 c
edge 4 4 d
";

/// Covering pairs of the maximal co-lex order used on [`COLLIDING_NFA_B`].
pub const COLLIDING_B_ORDER: [(usize, usize); 5] = [(1, 5), (5, 2), (2, 3), (2, 6), (3, 4)];

/// Chain partition shared by both six-state NFAs above.
pub const COLLIDING_CHAINS: [&[usize]; 2] = [&[1, 2, 3, 4], &[5, 6]];

pub fn width_two_automaton() -> Automaton {
    Automaton::parse(WIDTH_TWO_DFA).expect("fixture parses")
}

pub fn width_two() -> Dfa {
    Dfa::try_from(width_two_automaton()).expect("fixture is deterministic")
}

pub fn wheeler_nfa() -> Automaton {
    Automaton::parse(WHEELER_NFA).expect("fixture parses")
}

pub fn shared_lang_min() -> Automaton {
    Automaton::parse(SHARED_LANG_MIN).expect("fixture parses")
}

pub fn shared_lang_min_dfa() -> Dfa {
    Dfa::try_from(shared_lang_min()).expect("fixture is deterministic")
}

pub fn shared_lang_split_a() -> Automaton {
    Automaton::parse(SHARED_LANG_SPLIT_A).expect("fixture parses")
}

pub fn shared_lang_split_b() -> Automaton {
    Automaton::parse(SHARED_LANG_SPLIT_B).expect("fixture parses")
}

pub fn colliding_nfa_a() -> Automaton {
    Automaton::parse(COLLIDING_NFA_A).expect("fixture parses")
}

pub fn colliding_nfa_b() -> Automaton {
    Automaton::parse(COLLIDING_NFA_B).expect("fixture parses")
}

/// Star-free family member with `3n` states accepting
/// `sum_j b^j a b^* a^(j+1)`: `n` columns of three states `q_j, r_j, s_j`.
/// The deterministic width of its language is exactly `n` under either
/// symbol order; the width of this DFA itself equals `n` only when `b`
/// precedes `a`, which is the order declared here (see
/// [`starfree_family_ab`] for the other one).
pub fn starfree_family(n: usize) -> Dfa {
    starfree_with_alphabet(n, "b a")
}

/// The same family declared with `a` before `b`. Its language still has
/// deterministic width `n`, but the DFA's own width grows to `2n`.
pub fn starfree_family_ab(n: usize) -> Dfa {
    starfree_with_alphabet(n, "a b")
}

fn starfree_with_alphabet(n: usize, alphabet: &str) -> Dfa {
    assert!(n >= 1);
    let mut text = format!("alphabet {alphabet}\n");
    text.push_str(&format!("states {}\n", 3 * n));
    text.push_str("source 1\n");
    text.push_str(&format!("finals {}\n", 2 * n + 1));
    let q = |j: usize| j;
    let r = |j: usize| n + j;
    let s = |j: usize| 2 * n + j;
    for j in 1..=n {
        text.push_str(&format!("edge {} {} a\n", q(j), r(j)));
        text.push_str(&format!("edge {} {} b\n", r(j), r(j)));
        text.push_str(&format!("edge {} {} a\n", r(j), s(j)));
        if j < n {
            text.push_str(&format!("edge {} {} b\n", q(j), q(j + 1)));
            text.push_str(&format!("edge {} {} a\n", s(j + 1), s(j)));
        }
    }
    Dfa::try_from(Automaton::parse(&text).expect("family text parses"))
        .expect("family is deterministic")
}
