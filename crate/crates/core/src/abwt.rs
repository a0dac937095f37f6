//! The BWT-style transform of an automaton relative to a co-lex order and a
//! chain partition: five sequences that together record chains, finality,
//! degrees, and outgoing labels with destination chains.
//!
//! States are totally re-ordered chain by chain, each chain listed in
//! increasing co-lex order with the source first overall. On DFAs the
//! transform is a one-to-one encoding and can be inverted; on NFAs it
//! preserves exactly the accepted language.

use std::collections::HashMap;
use std::io::{Read, Write};

use thiserror::Error;

use crate::automaton::{Alphabet, Automaton, AutomatonError, Dfa, Edge, StateId};
use crate::index::{Index, IndexError};
use crate::order::{check_colex_axioms, ChainPartition, OrderError, PartialOrder};
use crate::succinct::{BitVector, PairSequence};
use crate::wire::{
    read_magic, read_str, read_varint, write_magic, write_str, write_varint, WireError,
};

const ABWT_MAGIC: &[u8; 4] = b"ABWT";
const ABWT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum AbwtError {
    #[error("the supplied order is not a co-lex order on the automaton ({violations} violations)")]
    AxiomViolation { violations: usize },
    #[error("the source must be the first state of the first chain")]
    SourceNotFirst,
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("malformed transform: {0}")]
    Malformed(String),
    #[error("the transform does not encode a DFA: state set {0:?} is reached together")]
    NotDeterministic(Vec<usize>),
    #[error("the underlying automaton is not distinguished by its paths")]
    NotPathDistinguished,
    #[error("exhaustive reconstruction supports at most {cap} states, got {n}")]
    TooManyStates { n: usize, cap: usize },
    #[error(transparent)]
    Wire(#[from] WireError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// The five-sequence transform. `n` states, `e` edges, `p` chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abwt {
    pub p: usize,
    pub n: usize,
    pub e: usize,
    pub alphabet: Alphabet,
    /// Length `n`; bit set at the first state of each chain.
    pub chain_bits: BitVector,
    /// Length `n`; bit set at final states.
    pub final_bits: BitVector,
    /// Length `e + n`; in-degrees in unary, zeros before each state's one.
    pub in_deg: BitVector,
    /// Length `e + n`; out-degrees in unary.
    pub out_deg: BitVector,
    /// Length `e`; (destination chain, label) per edge, edges sorted by
    /// source state, then label, then destination.
    pub out_seq: PairSequence,
}

impl Abwt {
    /// States of chain `i` (1-based) occupy `chain_start(i)..=chain_end(i)`
    /// in the total order.
    pub fn chain_start(&self, i: usize) -> usize {
        self.chain_bits.select(i, true)
    }

    pub fn chain_len(&self, i: usize) -> usize {
        let start = self.chain_start(i);
        let next = if i == self.p {
            self.n + 1
        } else {
            self.chain_start(i + 1)
        };
        next - start
    }

    /// Chain containing the state at total-order position `v`.
    pub fn chain_of(&self, v: usize) -> usize {
        self.chain_bits.rank(v, true)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_deg.select(v, true) - self.in_deg.select(v - 1, true) - 1
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg.select(v, true) - self.out_deg.select(v - 1, true) - 1
    }

    /// Re-check every structural invariant. Run on every deserialized value.
    pub fn validate(&self) -> Result<(), AbwtError> {
        let (p, n, e) = (self.p, self.n, self.e);
        if p == 0 || n == 0 || p > n {
            return Err(AbwtError::Malformed(format!("p={p}, n={n}")));
        }
        if self.chain_bits.len() != n
            || self.final_bits.len() != n
            || self.in_deg.len() != e + n
            || self.out_deg.len() != e + n
            || self.out_seq.len() != e
        {
            return Err(AbwtError::Malformed("sequence lengths disagree".into()));
        }
        if self.chain_bits.count(true) != p || !self.chain_bits.get(1) {
            return Err(AbwtError::Malformed(
                "chain markers must number p and start at position 1".into(),
            ));
        }
        if self.in_deg.count(true) != n || self.out_deg.count(true) != n {
            return Err(AbwtError::Malformed(
                "degree sequences must contain one marker per state".into(),
            ));
        }
        let sigma = self.alphabet.len() as u32;
        for (chain, label) in self.out_seq.iter() {
            if chain == 0 || chain as usize > p || label >= sigma {
                return Err(AbwtError::Malformed(format!(
                    "edge pair ({chain}, {label}) out of range"
                )));
            }
        }
        // Labels inside one state's block of outgoing edges are sorted, and
        // for equal labels the destination chain cannot decrease.
        let mut pos = 1;
        for v in 1..=n {
            let deg = self.out_degree(v);
            for k in 1..deg {
                let (c0, l0) = self.out_seq.access(pos + k - 1);
                let (c1, l1) = self.out_seq.access(pos + k);
                if l0 > l1 || (l0 == l1 && c0 > c1) {
                    return Err(AbwtError::Malformed(format!(
                        "outgoing edges of state {v} are not sorted"
                    )));
                }
            }
            pos += deg;
        }
        // Each chain receives exactly as many edges as its in-degrees say.
        let mut incoming = vec![0usize; p + 1];
        for (chain, _) in self.out_seq.iter() {
            incoming[chain as usize] += 1;
        }
        for i in 1..=p {
            let start = self.chain_start(i);
            let deg_sum: usize = (start..start + self.chain_len(i))
                .map(|v| self.in_degree(v))
                .sum();
            if deg_sum != incoming[i] {
                return Err(AbwtError::Malformed(format!(
                    "chain {i} receives {} edges but its in-degrees sum to {deg_sum}",
                    incoming[i]
                )));
            }
        }
        // Every state except the source is reachable, so it has an in-edge.
        for v in 2..=n {
            if self.in_degree(v) == 0 {
                return Err(AbwtError::Malformed(format!(
                    "non-source state {v} has in-degree 0"
                )));
            }
        }
        Ok(())
    }

    /// Human-readable dump in the five-line notation.
    pub fn dump(&self) -> String {
        let out: Vec<String> = self
            .out_seq
            .iter()
            .map(|(c, l)| format!("({c},{})", self.alphabet.token(crate::Symbol(l))))
            .collect();
        format!(
            "CHAIN   = {}\nFINAL   = {}\nIN_DEG  = {}\nOUT_DEG = {}\nOUT     = {}\n",
            self.chain_bits.to_bit_string(),
            self.final_bits.to_bit_string(),
            self.in_deg.to_bit_string(),
            self.out_deg.to_bit_string(),
            out.join(" ")
        )
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), WireError> {
        write_magic(w, ABWT_MAGIC, ABWT_VERSION)?;
        write_varint(w, self.p as u64)?;
        write_varint(w, self.n as u64)?;
        write_varint(w, self.e as u64)?;
        write_varint(w, self.alphabet.len() as u64)?;
        for token in self.alphabet.tokens() {
            write_str(w, token)?;
        }
        self.chain_bits.write_to(w)?;
        self.final_bits.write_to(w)?;
        self.in_deg.write_to(w)?;
        self.out_deg.write_to(w)?;
        self.out_seq.write_to(w)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, AbwtError> {
        read_magic(r, ABWT_MAGIC, ABWT_VERSION)?;
        let p = read_varint(r)? as usize;
        let n = read_varint(r)? as usize;
        let e = read_varint(r)? as usize;
        let sigma = read_varint(r)? as usize;
        if sigma > (1 << 20) || n > (1 << 32) || e > (1 << 40) {
            return Err(AbwtError::Malformed("implausible header sizes".into()));
        }
        let mut tokens = Vec::with_capacity(sigma);
        for _ in 0..sigma {
            tokens.push(read_str(r, 1 << 16)?);
        }
        let alphabet = Alphabet::new(tokens)?;
        let abwt = Abwt {
            p,
            n,
            e,
            alphabet,
            chain_bits: BitVector::read_from(r)?,
            final_bits: BitVector::read_from(r)?,
            in_deg: BitVector::read_from(r)?,
            out_deg: BitVector::read_from(r)?,
            out_seq: PairSequence::read_from(r)?,
        };
        abwt.validate()?;
        Ok(abwt)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("in-memory write");
        buf
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, AbwtError> {
        Self::read_from(&mut &bytes[..])
    }
}

/// Total re-ordering of states induced by a chain partition: chain by chain,
/// each chain already sorted. Maps automaton ids to 1-based positions and
/// back.
pub struct StateOrdering {
    /// position (1-based) -> automaton state id
    pub by_position: Vec<StateId>,
    /// automaton state id -> position (1-based), index 0 unused
    pub position_of: Vec<usize>,
}

impl StateOrdering {
    pub fn from_partition(n: usize, cp: &ChainPartition) -> Self {
        let by_position: Vec<StateId> = cp.chains.iter().flatten().copied().collect();
        let mut position_of = vec![0; n + 1];
        for (i, &q) in by_position.iter().enumerate() {
            position_of[q] = i + 1;
        }
        StateOrdering {
            by_position,
            position_of,
        }
    }
}

/// Build the transform of `a` under `po` with chain partition `cp`.
///
/// `po` must pass the co-lex axioms on `a`, `cp` must be a chain partition
/// of `po` with the source heading chain 1. The output is a deterministic
/// function of `(a, cp)`.
pub fn build_abwt(
    a: &Automaton,
    po: &PartialOrder,
    cp: &ChainPartition,
) -> Result<Abwt, AbwtError> {
    let report = check_colex_axioms(a, po)?;
    if !report.ok() {
        return Err(AbwtError::AxiomViolation {
            violations: report.violations.len(),
        });
    }
    cp.validate_for(po)?;
    if cp.chains[0][0] != a.source() {
        return Err(AbwtError::SourceNotFirst);
    }

    let n = a.state_count();
    let e = a.edges().len();
    let p = cp.chains.len();
    let ordering = StateOrdering::from_partition(n, cp);

    let mut chain_bits = vec![false; n];
    let mut offset = 0;
    for chain in &cp.chains {
        chain_bits[offset] = true;
        offset += chain.len();
    }
    let final_bits: Vec<bool> = ordering
        .by_position
        .iter()
        .map(|&q| a.is_final(q))
        .collect();

    let mut in_degrees = vec![0usize; n];
    let mut out_degrees = vec![0usize; n];
    for edge in a.edges() {
        in_degrees[ordering.position_of[edge.to] - 1] += 1;
        out_degrees[ordering.position_of[edge.from] - 1] += 1;
    }

    let chain_of_position = {
        let mut v = vec![0u32; n + 1];
        let mut pos = 1;
        for (i, chain) in cp.chains.iter().enumerate() {
            for _ in chain {
                v[pos] = i as u32 + 1;
                pos += 1;
            }
        }
        v
    };

    // Sort edges by source position, then label, then destination position.
    let mut sorted: Vec<&Edge> = a.edges().iter().collect();
    sorted.sort_by_key(|edge| {
        (
            ordering.position_of[edge.from],
            edge.label,
            ordering.position_of[edge.to],
        )
    });
    let out_pairs: Vec<(u32, u32)> = sorted
        .iter()
        .map(|edge| {
            (
                chain_of_position[ordering.position_of[edge.to]],
                edge.label.0,
            )
        })
        .collect();

    let abwt = Abwt {
        p,
        n,
        e,
        alphabet: a.alphabet().clone(),
        chain_bits: BitVector::from_bits(chain_bits),
        final_bits: BitVector::from_bits(final_bits),
        in_deg: BitVector::from_bits(unary(&in_degrees)),
        out_deg: BitVector::from_bits(unary(&out_degrees)),
        out_seq: PairSequence::new(out_pairs),
    };
    abwt.validate()?;
    Ok(abwt)
}

fn unary(degrees: &[usize]) -> Vec<bool> {
    let total: usize = degrees.iter().sum();
    let mut bits = Vec::with_capacity(total + degrees.len());
    for &d in degrees {
        bits.extend(std::iter::repeat_n(false, d));
        bits.push(true);
    }
    bits
}

/// Invert a transform that encodes a DFA.
///
/// Discovers states one at a time through source-anchored forward search:
/// on a DFA every reachable state set is a singleton, so a breadth-first
/// sweep visits each state once and reads off its outgoing edges. A
/// transform built from a nondeterministic automaton fails cleanly at the
/// first non-singleton set.
pub fn invert_abwt_dfa(t: &Abwt) -> Result<Dfa, AbwtError> {
    let index = Index::build(t)?;
    let mut states = Vec::with_capacity(t.n);
    let mut discovered = vec![false; t.n + 1];
    let mut edges = Vec::new();

    let start = index.start_source();
    states.push((1usize, start));
    discovered[1] = true;
    let mut head = 0;
    while head < states.len() {
        let (v, state) = states[head].clone();
        head += 1;
        for sym in t.alphabet.symbols() {
            let next = index.forward_step(&state, sym);
            let targets = index.locate(&index.t_ranges(&next));
            match targets.len() {
                0 => {}
                1 => {
                    let w = targets[0];
                    edges.push(Edge {
                        from: v,
                        to: w,
                        label: sym,
                    });
                    if !discovered[w] {
                        discovered[w] = true;
                        states.push((w, next));
                    }
                }
                _ => return Err(AbwtError::NotDeterministic(targets)),
            }
        }
    }

    if states.len() != t.n {
        return Err(AbwtError::Malformed(format!(
            "only {} of {} states are reachable in the encoded automaton",
            states.len(),
            t.n
        )));
    }
    if edges.len() != t.e {
        return Err(AbwtError::Malformed(format!(
            "reconstructed {} edges, expected {}",
            edges.len(),
            t.e
        )));
    }
    let finals = (1..=t.n).filter(|&v| t.final_bits.get(v));
    let inner = Automaton::new(t.n, 1, finals, edges, t.alphabet.clone())?;
    Ok(Dfa::try_from(inner)?)
}

/// Hard cap on the exhaustive NFA reconstruction below.
pub const EXHAUSTIVE_CAP: usize = 12;

/// Decide whether the encoded automaton is distinguished by its paths, and
/// if so reconstruct it. Walks the lattice of reachable state sets, which
/// can number `sigma * 2^n`; refuses inputs beyond [`EXHAUSTIVE_CAP`]
/// states.
pub fn reconstruct_nfa_exhaustive(t: &Abwt) -> Result<Automaton, AbwtError> {
    if t.n > EXHAUSTIVE_CAP {
        return Err(AbwtError::TooManyStates {
            n: t.n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let index = Index::build(t)?;
    // BFS over distinct nonempty reachable sets, remembering the search
    // state that produced each set.
    let mut seen: HashMap<Vec<usize>, crate::index::SearchState> = HashMap::new();
    let start = index.start_source();
    let start_set = index.locate(&index.t_ranges(&start));
    let mut queue = VecDeque::from([start_set.clone()]);
    seen.insert(start_set, start);
    while let Some(set) = queue.pop_front() {
        let state = seen[&set].clone();
        for sym in t.alphabet.symbols() {
            let next = index.forward_step(&state, sym);
            let next_set = index.locate(&index.t_ranges(&next));
            if !next_set.is_empty() && !seen.contains_key(&next_set) {
                seen.insert(next_set.clone(), next);
                queue.push_back(next_set);
            }
        }
    }

    // Path-distinguished iff every singleton shows up; edges then come from
    // stepping each singleton's witness state by every symbol.
    let mut edges = Vec::new();
    for v in 1..=t.n {
        let witness = seen
            .get(&vec![v])
            .ok_or(AbwtError::NotPathDistinguished)?
            .clone();
        for sym in t.alphabet.symbols() {
            let next = index.forward_step(&witness, sym);
            for w in index.locate(&index.t_ranges(&next)) {
                edges.push(Edge {
                    from: v,
                    to: w,
                    label: sym,
                });
            }
        }
    }
    if edges.len() != t.e {
        return Err(AbwtError::Malformed(format!(
            "reconstructed {} edges, expected {}",
            edges.len(),
            t.e
        )));
    }
    let finals = (1..=t.n).filter(|&v| t.final_bits.get(v));
    Ok(Automaton::new(t.n, 1, finals, edges, t.alphabet.clone())?)
}

use std::collections::VecDeque;
