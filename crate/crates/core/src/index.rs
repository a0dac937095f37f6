//! Forward-search index over the transform: per-chain ranges answering
//! subpath queries (all states reached by a pattern) and source-anchored
//! reachability and membership.
//!
//! Pattern matching maintains, per chain, three cursors `(l, t, r)`:
//! `Q_i[1..=l]` are the states reached only by words strictly smaller than
//! the processed prefix, `Q_i[l+1..=t]` are those reached by some word
//! suffixed by it, and `Q_i[r..]` are those reached only by strictly larger
//! words. Each character update is a handful of rank/select counts over the
//! stored sequences; those counting primitives are the trickiest code here,
//! so each is named and unit-tested against naive scans.

use std::io::{Read, Write};

use serde::Serialize;
use thiserror::Error;

use crate::abwt::Abwt;
use crate::automaton::{StateId, Symbol};
use crate::succinct::{BitVector, IntDictionary};
use crate::wire::{read_magic, read_varint, write_magic, write_varint, WireError};

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("malformed transform: {0}")]
    Malformed(String),
    #[error("symbol id {0} is outside the alphabet")]
    UnknownSymbol(u32),
    #[error(transparent)]
    Wire(#[from] WireError),
    #[error(transparent)]
    Abwt(#[from] Box<crate::abwt::AbwtError>),
}

const INDEX_MAGIC: &[u8; 4] = b"AIDX";
const INDEX_VERSION: u32 = 1;

/// Write the on-disk index format: the transform followed by the mapping
/// from total-order positions back to the original automaton's state ids.
pub fn write_index_file<W: Write>(
    w: &mut W,
    abwt: &Abwt,
    state_ids: &[StateId],
) -> Result<(), IndexError> {
    if state_ids.len() != abwt.n {
        return Err(IndexError::Malformed(format!(
            "state map has {} entries for {} states",
            state_ids.len(),
            abwt.n
        )));
    }
    write_magic(w, INDEX_MAGIC, INDEX_VERSION)?;
    abwt.write_to(w)?;
    write_varint(w, state_ids.len() as u64)?;
    for &id in state_ids {
        write_varint(w, id as u64)?;
    }
    Ok(())
}

/// Read the on-disk index format back; the auxiliary query structures are
/// rebuilt rather than stored.
pub fn read_index_file<R: Read>(r: &mut R) -> Result<(Index, Vec<StateId>), IndexError> {
    read_magic(r, INDEX_MAGIC, INDEX_VERSION)?;
    let abwt = Abwt::read_from(r).map_err(Box::new)?;
    let count = read_varint(r)? as usize;
    if count != abwt.n {
        return Err(IndexError::Malformed("state map length mismatch".into()));
    }
    let mut state_ids = Vec::with_capacity(count.min(1 << 16));
    for _ in 0..count {
        state_ids.push(read_varint(r)? as StateId);
    }
    let mut seen = vec![false; count + 1];
    for &id in &state_ids {
        if id == 0 || id > count || std::mem::replace(&mut seen[id], true) {
            return Err(IndexError::Malformed(
                "state map is not a permutation".into(),
            ));
        }
    }
    let index = Index::build(&abwt)?;
    Ok((index, state_ids))
}

/// Per-chain cursor triple. `l` counts the strictly-smaller prefix, `t`
/// bounds the reached block, `r` starts the strictly-larger suffix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainCursor {
    pub l: usize,
    pub t: usize,
    pub r: usize,
}

/// Search state across all chains; small and freely copyable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchState {
    pub chains: Vec<ChainCursor>,
}

/// One possibly-empty interval of positions (1-based) within a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainRange {
    pub chain: usize,
    pub lo: usize,
    pub hi: usize,
}

impl ChainRange {
    pub fn len(&self) -> usize {
        (self.hi + 1).saturating_sub(self.lo)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// Per-chain intervals; the result shape of every query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainRanges {
    pub ranges: Vec<ChainRange>,
}

impl ChainRanges {
    pub fn count(&self) -> usize {
        self.ranges.iter().map(ChainRange::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }
}

/// The queryable index: the transform plus the derived incoming-label
/// structures. Immutable after build; queries are pure.
#[derive(Clone, Debug)]
pub struct Index {
    abwt: Abwt,
    chain_start: Vec<usize>,
    chain_len: Vec<usize>,
    /// Incoming-edge block `(s, t)` of each chain in the in-edge ordering;
    /// `s > t` means no incoming edges.
    in_block: Vec<(usize, usize)>,
    /// Marks the first edge of every label run and every chain boundary in
    /// the in-edge ordering.
    in_runs: BitVector,
    /// The full incoming-label string, kept for dumps and cross-checks.
    in_labels: Vec<u32>,
    /// Labels entering each chain, as a rank dictionary over the alphabet.
    sigma_by_chain: Vec<IntDictionary>,
}

impl Index {
    /// Derive the incoming-label structures from the transform alone: the
    /// label multiset of each chain comes from the outgoing pairs, and the
    /// label-separation axiom pins how it distributes over the chain's
    /// states, so sorting per chain reconstructs the in-edge ordering.
    pub fn build(abwt: &Abwt) -> Result<Self, IndexError> {
        abwt.validate()
            .map_err(|e| IndexError::Malformed(e.to_string()))?;
        let p = abwt.p;
        let sigma = abwt.alphabet.len() as u64;

        let mut chain_start = vec![0usize; p + 1];
        let mut chain_len = vec![0usize; p + 1];
        for i in 1..=p {
            chain_start[i] = abwt.chain_start(i);
            chain_len[i] = abwt.chain_len(i);
        }

        let mut labels_per_chain: Vec<Vec<u32>> = vec![Vec::new(); p + 1];
        for (chain, label) in abwt.out_seq.iter() {
            labels_per_chain[chain as usize].push(label);
        }
        for labels in &mut labels_per_chain {
            labels.sort_unstable();
        }

        let mut in_block = vec![(0usize, 0usize); p + 1];
        let mut in_labels = Vec::with_capacity(abwt.e);
        let mut in_runs = Vec::with_capacity(abwt.e);
        for i in 1..=p {
            let l = chain_start[i];
            let r = l + chain_len[i] - 1;
            let s = abwt.in_deg.rank(abwt.in_deg.select(l - 1, true), false) + 1;
            let t = abwt.in_deg.rank(abwt.in_deg.select(r, true), false);
            in_block[i] = (s, t);
            let labels = &labels_per_chain[i];
            if labels.len() != t.saturating_sub(s - 1) {
                return Err(IndexError::Malformed(format!(
                    "chain {i} in-degrees disagree with its incoming labels"
                )));
            }
            for (k, &label) in labels.iter().enumerate() {
                let first_of_run = k == 0 || labels[k - 1] != label;
                in_runs.push(first_of_run);
                in_labels.push(label);
            }
        }
        debug_assert_eq!(in_labels.len(), abwt.e);

        let sigma_by_chain = (0..=p)
            .map(|i| {
                let mut distinct = labels_per_chain[i].clone();
                distinct.dedup();
                IntDictionary::new(sigma, distinct.into_iter().map(u64::from).collect())
            })
            .collect();

        Ok(Index {
            abwt: abwt.clone(),
            chain_start,
            chain_len,
            in_block,
            in_runs: BitVector::from_bits(in_runs),
            in_labels,
            sigma_by_chain,
        })
    }

    pub fn abwt(&self) -> &Abwt {
        &self.abwt
    }

    pub fn chain_count(&self) -> usize {
        self.abwt.p
    }

    pub fn chain_len(&self, i: usize) -> usize {
        self.chain_len[i]
    }

    pub fn chain_start(&self, i: usize) -> usize {
        self.chain_start[i]
    }

    /// The derived incoming-label string, one label per edge in in-edge
    /// order.
    pub fn in_label_string(&self) -> &[u32] {
        &self.in_labels
    }

    /// The derived run/boundary marker bits over the in-edge ordering.
    pub fn in_run_bits(&self) -> &BitVector {
        &self.in_runs
    }

    pub fn chain_labels(&self, i: usize) -> &IntDictionary {
        &self.sigma_by_chain[i]
    }

    /// Number of edges labeled `a` entering chain `i`.
    fn in_count(&self, i: usize, a: u32) -> usize {
        if !self.sigma_by_chain[i].member(a as u64) {
            return 0;
        }
        let (s, t) = self.in_block[i];
        if s > t {
            return 0;
        }
        let f = self.in_runs.rank(s - 1, true);
        let rank_a = self.sigma_by_chain[i].rank(a as u64);
        let g = self.in_runs.select(f + rank_a, true);
        self.in_runs.select(f + rank_a + 1, true) - g
    }

    /// op1: number of edges labeled `a` leaving the first `k` states of
    /// chain `j` and entering chain `i`.
    fn op_out(&self, j: usize, k: usize, i: usize, a: u32) -> usize {
        if k == 0 {
            return 0;
        }
        debug_assert!(k <= self.chain_len[j]);
        let l = self.chain_start[j];
        let r = l + k - 1;
        let out_deg = &self.abwt.out_deg;
        let s = out_deg.rank(out_deg.select(l - 1, true), false) + 1;
        let t = out_deg.rank(out_deg.select(r, true), false);
        if s > t {
            return 0;
        }
        let pair = (i as u32, a);
        self.abwt.out_seq.rank(t, pair) - self.abwt.out_seq.rank(s - 1, pair)
    }

    /// op2: largest `k` in `0..=|Q_i|` with at most `h` edges labeled `a`
    /// entering the first `k` states of chain `i`.
    fn op_in_at_most(&self, i: usize, a: u32, h: usize) -> usize {
        let qlen = self.chain_len[i];
        if !self.sigma_by_chain[i].member(a as u64) {
            return qlen;
        }
        let (s, t) = self.in_block[i];
        if s > t {
            return qlen;
        }
        let f = self.in_runs.rank(s - 1, true);
        let rank_a = self.sigma_by_chain[i].rank(a as u64);
        let g = self.in_runs.select(f + rank_a, true);
        let run = self.in_runs.select(f + rank_a + 1, true) - g;
        let edge = if h == 0 {
            g
        } else {
            if run <= h {
                return qlen;
            }
            g + h
        };
        // Chain position of the state the `edge`-th in-edge points to.
        let target = self
            .abwt
            .in_deg
            .rank(self.abwt.in_deg.select(edge, false), true)
            + 1;
        target - self.chain_start[i]
    }

    /// op3: smallest `k` with at least `z >= 1` edges labeled `a` entering
    /// the first `k` states of chain `i`, when it exists.
    fn op_in_at_least(&self, i: usize, a: u32, z: usize) -> Option<usize> {
        debug_assert!(z >= 1);
        let k = self.op_in_at_most(i, a, z - 1);
        if k == self.chain_len[i] {
            None
        } else {
            Some(k + 1)
        }
    }

    /// op4: largest `k` such that every incoming label of the first `k`
    /// states of chain `i` is at most `a` (the virtual source label counts
    /// as smallest, so the source never blocks this bound).
    fn op_label_ceiling(&self, i: usize, a: u32) -> usize {
        match self.sigma_by_chain[i].succ(a as u64) {
            None => self.chain_len[i],
            Some(b) => self.op_in_at_most(i, b as u32, 0),
        }
    }

    /// Symmetric bound for the strictly-larger suffix: smallest chain
    /// position from which every state's incoming labels are all at least
    /// `a`. The source (position 1 of chain 1) never qualifies because of
    /// its virtual smallest label.
    fn op_label_floor(&self, i: usize, a: u32) -> usize {
        let qlen = self.chain_len[i];
        let (s, t) = self.in_block[i];
        let mut floor = 1;
        if s <= t {
            let f = self.in_runs.rank(s - 1, true);
            let below = self.sigma_by_chain[i].rank_strict(a as u64);
            if below > 0 {
                // End of the last run with a label strictly below `a`.
                let last = self.in_runs.select(f + below + 1, true) - 1;
                let target = self
                    .abwt
                    .in_deg
                    .rank(self.abwt.in_deg.select(last, false), true)
                    + 1;
                floor = target - self.chain_start[i] + 2;
            }
        }
        if i == 1 {
            floor = floor.max(2);
        }
        floor.min(qlen + 1)
    }

    /// Start state for subpath search: every state is reached by the empty
    /// pattern, nothing is strictly smaller or larger.
    pub fn start_all(&self) -> SearchState {
        let chains = (1..=self.abwt.p)
            .map(|i| ChainCursor {
                l: 0,
                t: self.chain_len[i],
                r: self.chain_len[i] + 1,
            })
            .collect();
        SearchState { chains }
    }

    /// Start state for source-anchored search: conceptually the search has
    /// already consumed the virtual smallest label on the lone edge into
    /// the source, so the reached block is exactly the source and every
    /// other state lies in the strictly-larger suffix.
    pub fn start_source(&self) -> SearchState {
        let chains = (1..=self.abwt.p)
            .map(|i| ChainCursor {
                l: 0,
                t: if i == 1 { 1 } else { 0 },
                r: if i == 1 { 2 } else { 1 },
            })
            .collect();
        SearchState { chains }
    }

    /// Advance the search by one character.
    pub fn forward_step(&self, state: &SearchState, a: Symbol) -> SearchState {
        let a = a.0;
        debug_assert!((a as usize) < self.abwt.alphabet.len());
        let p = self.abwt.p;
        let mut chains = Vec::with_capacity(p);
        for i in 1..=p {
            let qlen = self.chain_len[i];
            let mut smaller = 0; // edges from the strictly-smaller prefixes
            let mut reached = 0; // edges from the reached blocks too
            let mut larger = 0; // edges from the strictly-larger suffixes
            for j in 1..=p {
                let cur = state.chains[j - 1];
                let c = self.op_out(j, cur.l, i, a);
                smaller += c;
                reached += self.op_out(j, cur.t, i, a);
                let total = self.op_out(j, self.chain_len[j], i, a);
                larger += total - self.op_out(j, cur.r - 1, i, a);
            }

            let l = self
                .op_in_at_most(i, a, smaller)
                .min(self.op_label_ceiling(i, a));
            let t = if reached == smaller {
                l
            } else {
                self.op_in_at_least(i, a, reached)
                    .expect("a reached edge count is realized by some prefix")
            };
            let total_in = self.in_count(i, a);
            let r_by_count = if total_in <= larger {
                1
            } else {
                self.op_in_at_least(i, a, total_in - larger)
                    .expect("in-counts above the suffix count are realized")
                    + 1
            };
            let r = r_by_count.max(self.op_label_floor(i, a)).min(qlen + 1);

            debug_assert!(l <= t && t <= qlen, "cursor order on chain {i}");
            debug_assert!(
                l < r && r <= qlen + 1,
                "prefix/suffix disjointness on chain {i}"
            );
            chains.push(ChainCursor { l, t, r });
        }
        SearchState { chains }
    }

    /// The reached block per chain: `Q_i[l+1..=t]`.
    pub fn t_ranges(&self, state: &SearchState) -> ChainRanges {
        let ranges = state
            .chains
            .iter()
            .enumerate()
            .map(|(idx, cur)| ChainRange {
                chain: idx + 1,
                lo: cur.l + 1,
                hi: cur.t,
            })
            .collect();
        ChainRanges { ranges }
    }

    /// All states reached by a path labeled `pattern`, anywhere in the
    /// automaton.
    pub fn match_subpaths(&self, pattern: &[Symbol]) -> ChainRanges {
        let mut state = self.start_all();
        for &a in pattern {
            state = self.forward_step(&state, a);
        }
        self.t_ranges(&state)
    }

    pub fn exists(&self, pattern: &[Symbol]) -> bool {
        !self.match_subpaths(pattern).is_empty()
    }

    pub fn count(&self, pattern: &[Symbol]) -> usize {
        self.match_subpaths(pattern).count()
    }

    /// Materialize a range set as total-order state positions, ascending.
    pub fn locate(&self, ranges: &ChainRanges) -> Vec<usize> {
        let mut out = Vec::with_capacity(ranges.count());
        for r in &ranges.ranges {
            let base = self.chain_start[r.chain];
            out.extend((r.lo..=r.hi).map(|pos| base + pos - 1));
        }
        out.sort_unstable();
        out
    }

    /// States reached from the source by `pattern`, and whether the pattern
    /// is in the language (some reached state is final).
    pub fn accepts_from_source(&self, pattern: &[Symbol]) -> (ChainRanges, bool) {
        let mut state = self.start_source();
        for &a in pattern {
            state = self.forward_step(&state, a);
        }
        let ranges = self.t_ranges(&state);
        let mut finals = 0;
        for r in &ranges.ranges {
            if r.is_empty() {
                continue;
            }
            let base = self.chain_start[r.chain];
            finals += self.abwt.final_bits.rank(base + r.hi - 1, true)
                - self.abwt.final_bits.rank(base + r.lo - 2, true);
        }
        (ranges, finals > 0)
    }
}
