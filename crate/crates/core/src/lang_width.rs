//! Deciding whether the deterministic width of a regular language is at
//! most `p`, through the cycle-witness characterization on the minimum DFA:
//! the width is at least `k` exactly when `k` distinct states carry equally
//! labeled cycles that sit strictly above (or strictly below) words reaching
//! all of them.
//!
//! Witness search runs two dynamic programs: per-length co-lex extremal
//! paths from the source to each state, and per-length co-lex extremal
//! strings labeling parallel cycles through a fixed state tuple. Every
//! certificate returned is replayed against the bare DFA before anyone
//! sees it.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::atomic::{AtomicI64, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::automaton::{colex_cmp, is_suffix, Dfa, StateId, Symbol, Word};
use crate::order;

/// Default work/memory budget for the table-driven search, in bytes.
pub const DEFAULT_BUDGET_BYTES: u64 = 256 << 20;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("input DFA has {states} states but its minimum DFA has {minimal}; minimize first")]
    NotMinimal { states: usize, minimal: usize },
    #[error(
        "search needs about {needed} work units but the budget is {available}; \
         use bounded search or raise the budget"
    )]
    Budget { needed: u64, available: u64 },
    #[error(transparent)]
    Automaton(#[from] crate::automaton::AutomatonError),
}

/// Which side of the cycle label the reaching words sit on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSide {
    MusBelowGamma,
    GammaBelowMus,
}

/// A verified witness that the language's deterministic width is >= `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub k: usize,
    /// Distinct states of the minimum DFA, one per reaching word.
    pub states: Vec<StateId>,
    /// Words from the source to each state.
    pub mus: Vec<Word>,
    /// A common cycle label at every listed state.
    pub gamma: Word,
    pub side: WitnessSide,
}

/// Replay a certificate against the DFA: path conditions, cycle conditions,
/// the co-lex separation, and the suffix condition, checked from scratch.
pub fn verify_witness(d: &Dfa, cert: &WitnessCertificate) -> Result<(), String> {
    if cert.k < 2 {
        return Err("k must be at least 2".into());
    }
    if cert.states.len() != cert.k || cert.mus.len() != cert.k {
        return Err("certificate arity mismatch".into());
    }
    let mut sorted = cert.states.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cert.k {
        return Err("witness states are not distinct".into());
    }
    if cert.gamma.is_empty() {
        return Err("cycle label is empty".into());
    }
    for (j, (&u, mu)) in cert.states.iter().zip(&cert.mus).enumerate() {
        if d.run(mu) != Some(u) {
            return Err(format!("word {j} does not reach state {u}"));
        }
        let mut q = u;
        for &a in &cert.gamma {
            q = d
                .step(q, a)
                .ok_or_else(|| format!("cycle leaves state {u}"))?;
        }
        if q != u {
            return Err(format!("cycle label does not loop at state {u}"));
        }
        let ordered = match cert.side {
            WitnessSide::MusBelowGamma => colex_cmp(mu, &cert.gamma) == Ordering::Less,
            WitnessSide::GammaBelowMus => colex_cmp(&cert.gamma, mu) == Ordering::Less,
        };
        if !ordered {
            return Err(format!(
                "word {j} is not on the claimed side of the cycle label"
            ));
        }
        if is_suffix(&cert.gamma, mu) {
            return Err(format!("cycle label is a suffix of word {j}"));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Extremal {
    Smallest,
    Largest,
}

impl Extremal {
    fn prefers(self, candidate: Ordering) -> bool {
        match self {
            Extremal::Smallest => candidate == Ordering::Less,
            Extremal::Largest => candidate == Ordering::Greater,
        }
    }
}

/// Per-length extremal source paths: `steps[len][state-1]` holds the
///0-based predecessor and final symbol of the co-lex smallest (or largest)
/// string of that length labeling a path from the source to the state.
struct PathTable {
    steps: Vec<Vec<Option<(usize, Symbol)>>>,
}

impl PathTable {
    fn build(d: &Dfa, cap: usize, direction: Extremal) -> PathTable {
        let n = d.state_count();
        let radj = d.reverse_adjacency();
        let mut steps: Vec<Vec<Option<(usize, Symbol)>>> = Vec::with_capacity(cap + 1);
        let mut base = vec![None; n];
        base[d.source() - 1] = Some((usize::MAX, Symbol(0))); // the empty path
        steps.push(base);
        for len in 1..=cap {
            let mut row: Vec<Option<(usize, Symbol)>> = vec![None; n];
            for u in 1..=n {
                let mut best: Option<(usize, Symbol)> = None;
                for &(sym, v) in &radj[u - 1] {
                    let v0 = v - 1;
                    if steps[len - 1][v0].is_none() {
                        continue;
                    }
                    best = Some(match best {
                        None => (v0, sym),
                        Some((b0, bsym)) => {
                            let ord = sym
                                .cmp(&bsym)
                                .then_with(|| cmp_strings(&steps, v0, b0, len - 1));
                            if direction.prefers(ord) || (ord == Ordering::Equal && v0 < b0) {
                                (v0, sym)
                            } else {
                                (b0, bsym)
                            }
                        }
                    });
                }
                row[u - 1] = best;
            }
            steps.push(row);
        }
        PathTable { steps }
    }

    fn defined(&self, u: StateId, len: usize) -> bool {
        self.steps[len][u - 1].is_some()
    }

    fn materialize(&self, u: StateId, len: usize) -> Word {
        let mut word = Vec::with_capacity(len);
        let mut state = u - 1;
        for l in (1..=len).rev() {
            let (pred, sym) = self.steps[l][state].expect("entry defined");
            word.push(sym);
            state = pred;
        }
        word.reverse();
        word
    }

    /// For each state and length bound, the length realizing the extremal
    /// word over all strictly shorter path lengths (the empty word counts
    /// for the source). Reaching words of a witness need not share one
    /// length, so candidate tests range over all of them at once.
    fn best_below(&self, d: &Dfa, cap: usize, direction: Extremal) -> Vec<Vec<Option<usize>>> {
        let n = d.state_count();
        let mut table = vec![vec![None; cap + 2]; n];
        for u in 1..=n {
            let mut best: Option<usize> = None;
            for bound in 1..=cap + 1 {
                let len = bound - 1;
                if self.defined(u, len) {
                    best = Some(match best {
                        None => len,
                        Some(b) => {
                            let ord = colex_cmp(&self.materialize(u, len), &self.materialize(u, b));
                            if direction.prefers(ord) {
                                len
                            } else {
                                b
                            }
                        }
                    });
                }
                table[u - 1][bound] = best;
            }
        }
        table
    }
}

/// Compare the stored strings of two equal-length table entries, walking
/// predecessor pointers from the last symbol backwards (co-lex order
/// compares exactly in that direction). Indices are 0-based table slots.
fn cmp_strings(
    steps: &[Vec<Option<(usize, Symbol)>>],
    mut a: usize,
    mut b: usize,
    len: usize,
) -> Ordering {
    for l in (1..=len).rev() {
        let (pa, sa) = steps[l][a].expect("compared entries are defined");
        let (pb, sb) = steps[l][b].expect("compared entries are defined");
        match sa.cmp(&sb) {
            Ordering::Equal => {
                a = pa;
                b = pb;
            }
            other => return other,
        }
    }
    Ordering::Equal
}

/// Per-length extremal strings labeling parallel paths from a fixed base
/// tuple; entry 0 is the base tuple itself, so `steps[len][0]` reconstructs
/// the extremal label of `k` parallel cycles of that length.
struct TupleTable {
    index_of: HashMap<Vec<StateId>, usize>,
    tuples: Vec<Vec<StateId>>,
    steps: Vec<Vec<Option<(usize, Symbol)>>>,
}

impl TupleTable {
    /// Breadth-first closure of the base tuple under common-symbol steps,
    /// then the length-indexed relaxation. `None` when the table would
    /// exceed `cell_budget` cells.
    fn build(
        d: &Dfa,
        base: &[StateId],
        cap: usize,
        direction: Extremal,
        pool: &CellPool,
    ) -> Result<TupleTable, WitnessError> {
        let sigma: Vec<Symbol> = d.alphabet().symbols().collect();
        let advance = |tuple: &[StateId], a: Symbol| -> Option<Vec<StateId>> {
            tuple.iter().map(|&q| d.step(q, a)).collect()
        };

        let mut tuples = vec![base.to_vec()];
        let mut index_of = HashMap::from([(base.to_vec(), 0usize)]);
        let mut head = 0;
        while head < tuples.len() {
            let current = tuples[head].clone();
            head += 1;
            for &a in &sigma {
                if let Some(next) = advance(&current, a) {
                    if !index_of.contains_key(&next) {
                        index_of.insert(next.clone(), tuples.len());
                        tuples.push(next);
                    }
                }
            }
        }

        let cells = (tuples.len() as u64) * (cap as u64 + 1);
        pool.consume(cells)?;

        let mut steps: Vec<Vec<Option<(usize, Symbol)>>> = Vec::with_capacity(cap + 1);
        let mut base_row = vec![None; tuples.len()];
        base_row[0] = Some((usize::MAX, Symbol(0))); // the empty string
        steps.push(base_row);
        for len in 1..=cap {
            let mut row: Vec<Option<(usize, Symbol)>> = vec![None; tuples.len()];
            for ti in 0..tuples.len() {
                if steps[len - 1][ti].is_none() {
                    continue;
                }
                for &a in &sigma {
                    let Some(next) = advance(&tuples[ti], a) else {
                        continue;
                    };
                    let ni = index_of[&next];
                    let candidate = (ti, a);
                    row[ni] = Some(match row[ni] {
                        None => candidate,
                        Some((bi, bsym)) => {
                            let ord = a
                                .cmp(&bsym)
                                .then_with(|| cmp_strings(&steps, ti, bi, len - 1));
                            if direction.prefers(ord) || (ord == Ordering::Equal && ti < bi) {
                                candidate
                            } else {
                                (bi, bsym)
                            }
                        }
                    });
                }
            }
            steps.push(row);
        }
        Ok(TupleTable {
            index_of,
            tuples,
            steps,
        })
    }

    fn cycle_string(&self, len: usize) -> Option<Word> {
        self.steps[len][0]?;
        let mut word = Vec::with_capacity(len);
        let mut ti = 0usize;
        for l in (1..=len).rev() {
            let (pred, sym) = self.steps[l][ti].expect("entry defined");
            word.push(sym);
            ti = pred;
        }
        word.reverse();
        Some(word)
    }

    fn release(self, cap: usize, pool: &CellPool) {
        pool.release((self.tuples.len() as u64) * (cap as u64 + 1));
        drop(self.index_of);
    }
}

struct CellPool {
    remaining: AtomicI64,
}

impl CellPool {
    fn new(cells: u64) -> CellPool {
        CellPool {
            remaining: AtomicI64::new(cells.min(i64::MAX as u64) as i64),
        }
    }

    fn consume(&self, cells: u64) -> Result<(), WitnessError> {
        let taken = self
            .remaining
            .fetch_sub(cells as i64, AtomicOrdering::SeqCst);
        if taken < cells as i64 {
            self.remaining
                .fetch_add(cells as i64, AtomicOrdering::SeqCst);
            return Err(WitnessError::Budget {
                needed: cells,
                available: taken.max(0) as u64,
            });
        }
        Ok(())
    }

    fn release(&self, cells: u64) {
        self.remaining
            .fetch_add(cells as i64, AtomicOrdering::SeqCst);
    }
}

/// Search options shared by the witness-finding entry points.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub budget_bytes: u64,
    /// Restrict candidate reaching words to lengths strictly shorter than
    /// the cycle label, which makes the suffix condition automatic. Exact
    /// mode relies on this discipline; bounded search also tries longer
    /// words and checks the suffix condition explicitly.
    pub strict_lengths: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            budget_bytes: DEFAULT_BUDGET_BYTES,
            strict_lengths: false,
        }
    }
}

/// Look for a width witness with `k` distinct states, bounding both the
/// reaching words and the cycle label by `length_cap` symbols. The input
/// must be the minimum DFA of its language. A returned certificate has
/// already been replay-verified.
pub fn find_width_witness(
    d: &Dfa,
    k: usize,
    length_cap: usize,
    options: SearchBudget,
) -> Result<Option<WitnessCertificate>, WitnessError> {
    assert!(k >= 2, "witnesses require at least two states");
    let minimal = d.minimize();
    if minimal.state_count() != d.state_count() {
        return Err(WitnessError::NotMinimal {
            states: d.state_count(),
            minimal: minimal.state_count(),
        });
    }
    let n = d.state_count();
    if n < k {
        return Ok(None);
    }
    let cap = length_cap;

    // Upfront work estimate: candidate pairs per tuple times the cost of a
    // string comparison. Deliberately coarse; it exists to refuse clearly
    // hopeless exact-mode runs before they allocate.
    let tuple_count = binomial(n as u128, k as u128);
    let scan = tuple_count
        .saturating_mul(cap as u128)
        .saturating_mul(cap as u128)
        .saturating_mul(k as u128)
        .saturating_mul(cap as u128 / 2 + 1);
    if scan > options.budget_bytes as u128 {
        return Err(WitnessError::Budget {
            needed: scan.min(u64::MAX as u128) as u64,
            available: options.budget_bytes,
        });
    }

    let pool = CellPool::new(options.budget_bytes / 16);
    pool.consume(4 * (cap as u64 + 2) * n as u64)?;
    let smallest = PathTable::build(d, cap, Extremal::Smallest);
    let largest = PathTable::build(d, cap, Extremal::Largest);
    let paths = PathCandidates {
        smallest_below: smallest.best_below(d, cap, Extremal::Smallest),
        largest_below: largest.best_below(d, cap, Extremal::Largest),
        smallest,
        largest,
    };

    let tuples = sorted_tuples(n, k);
    let result = tuples
        .par_iter()
        .find_map_first(|tuple| search_tuple(d, tuple, cap, &paths, &pool, &options).transpose())
        .transpose()?;
    if let Some(cert) = &result {
        verify_witness(d, cert).expect("search results replay cleanly");
    }
    Ok(result)
}

struct PathCandidates {
    smallest: PathTable,
    largest: PathTable,
    smallest_below: Vec<Vec<Option<usize>>>,
    largest_below: Vec<Vec<Option<usize>>>,
}

impl PathCandidates {
    /// The reaching word for `u` most likely to sit on the required side of
    /// `gamma`: the extremal word over all lengths shorter than the cycle
    /// label (suffix-safe by length), or, outside the strict-length
    /// discipline, the extremal word of any single longer length that
    /// passes the explicit suffix test.
    fn pick(
        &self,
        u: StateId,
        gamma: &Word,
        side: WitnessSide,
        cap: usize,
        strict_lengths: bool,
    ) -> Option<Word> {
        let (table, below) = match side {
            WitnessSide::MusBelowGamma => (&self.smallest, &self.smallest_below),
            WitnessSide::GammaBelowMus => (&self.largest, &self.largest_below),
        };
        let ordered = |mu: &Word| match side {
            WitnessSide::MusBelowGamma => colex_cmp(mu, gamma) == Ordering::Less,
            WitnessSide::GammaBelowMus => colex_cmp(gamma, mu) == Ordering::Less,
        };
        if let Some(len) = below[u - 1][gamma.len()] {
            let mu = table.materialize(u, len);
            if ordered(&mu) {
                return Some(mu);
            }
        }
        if !strict_lengths {
            for len in gamma.len()..=cap {
                if !table.defined(u, len) {
                    continue;
                }
                let mu = table.materialize(u, len);
                if ordered(&mu) && !is_suffix(gamma, &mu) {
                    return Some(mu);
                }
            }
        }
        None
    }
}

fn search_tuple(
    d: &Dfa,
    tuple: &[StateId],
    cap: usize,
    paths: &PathCandidates,
    pool: &CellPool,
    options: &SearchBudget,
) -> Result<Option<WitnessCertificate>, WitnessError> {
    let max_cycles = TupleTable::build(d, tuple, cap, Extremal::Largest, pool)?;
    let min_cycles = match TupleTable::build(d, tuple, cap, Extremal::Smallest, pool) {
        Ok(t) => t,
        Err(e) => {
            max_cycles.release(cap, pool);
            return Err(e);
        }
    };

    let mut found = None;
    'outer: for gamma_len in 1..=cap {
        for (side, table) in [
            (WitnessSide::MusBelowGamma, &max_cycles),
            (WitnessSide::GammaBelowMus, &min_cycles),
        ] {
            let Some(gamma) = table.cycle_string(gamma_len) else {
                continue;
            };
            let mut mus = Vec::with_capacity(tuple.len());
            for &u in tuple {
                match paths.pick(u, &gamma, side, cap, options.strict_lengths) {
                    Some(mu) => mus.push(mu),
                    None => break,
                }
            }
            if mus.len() != tuple.len() {
                continue;
            }
            let cert = WitnessCertificate {
                k: tuple.len(),
                states: tuple.to_vec(),
                mus,
                gamma,
                side,
            };
            if verify_witness(d, &cert).is_ok() {
                found = Some(cert);
                break 'outer;
            }
        }
    }

    min_cycles.release(cap, pool);
    max_cycles.release(cap, pool);
    Ok(found)
}

fn sorted_tuples(n: usize, k: usize) -> Vec<Vec<StateId>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(
        start: usize,
        n: usize,
        k: usize,
        current: &mut Vec<StateId>,
        out: &mut Vec<Vec<StateId>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for q in start..=n + 1 - remaining {
            current.push(q);
            go(q + 1, n, k, current, out);
            current.pop();
        }
    }
    go(1, n, k, &mut current, &mut out);
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exact,
    BoundedSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthAnswer {
    Leq,
    Gt,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperBoundSource {
    DfaWidth,
    ExactDecision,
}

/// The outcome of a width query, with certified bounds.
#[derive(Clone, Debug, Serialize)]
pub struct WidthDecision {
    pub query_p: usize,
    pub mode: SearchMode,
    pub answer: WidthAnswer,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub upper_bound_source: UpperBoundSource,
    pub certificate: Option<WitnessCertificate>,
}

/// Length bound that makes the bounded witness characterization complete:
/// `2 (2k - 2 + sum_{t=1}^{2k} n^t)`. `None` on overflow (far beyond any
/// workable budget anyway).
pub fn exact_length_cap(n: usize, k: usize) -> Option<u128> {
    let n = n as u128;
    let mut sum: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..2 * k {
        power = power.checked_mul(n)?;
        sum = sum.checked_add(power)?;
    }
    Some(2 * (2 * k as u128 - 2 + sum))
}

/// Decide whether the deterministic width of the language of `d` is at most
/// `p`. Exact mode derives the complete length cap from the witness
/// characterization (feasible only for very small minimum DFAs; anything
/// else is refused with a budget error). Bounded search uses the caller's
/// cap and can answer `gt` (with a certificate) or `unknown`.
pub fn decide_width_leq(
    d: &Dfa,
    p: usize,
    mode: SearchMode,
    cap: Option<usize>,
    budget_bytes: u64,
) -> Result<WidthDecision, WitnessError> {
    assert!(p >= 1);
    let minimal = Dfa::try_from(d.trim()?)
        .expect("trim preserves determinism")
        .minimize();
    let n = minimal.state_count();
    let (dfa_w, _) = order::dfa_width(&minimal);
    let k = p + 1;

    // The minimum DFA's width already bounds the language width, so when it
    // does not exceed p the answer is settled without any search.
    if dfa_w <= p {
        return Ok(WidthDecision {
            query_p: p,
            mode,
            answer: WidthAnswer::Leq,
            lower_bound: 1,
            upper_bound: dfa_w,
            upper_bound_source: UpperBoundSource::DfaWidth,
            certificate: None,
        });
    }

    let (length_cap, strict_lengths) = match mode {
        SearchMode::Exact => {
            let exact = exact_length_cap(n, k).ok_or(WitnessError::Budget {
                needed: u64::MAX,
                available: budget_bytes,
            })?;
            let exact = usize::try_from(exact).map_err(|_| WitnessError::Budget {
                needed: u64::MAX,
                available: budget_bytes,
            })?;
            (exact, true)
        }
        SearchMode::BoundedSearch => (cap.unwrap_or(2 * n), false),
    };
    let options = SearchBudget {
        budget_bytes,
        strict_lengths,
    };

    let witness = find_width_witness(&minimal, k, length_cap, options)?;
    let decision = match witness {
        Some(cert) => {
            debug_assert!(dfa_w >= k, "a verified witness bounds the DFA width too");
            WidthDecision {
                query_p: p,
                mode,
                answer: WidthAnswer::Gt,
                lower_bound: k,
                upper_bound: dfa_w,
                upper_bound_source: UpperBoundSource::DfaWidth,
                certificate: Some(cert),
            }
        }
        None => match mode {
            SearchMode::Exact => WidthDecision {
                query_p: p,
                mode,
                answer: WidthAnswer::Leq,
                lower_bound: best_lower_bound(&minimal, k - 1, length_cap, options)?
                    .map_or(1, |c| c.k),
                upper_bound: dfa_w.min(p),
                upper_bound_source: if p < dfa_w {
                    UpperBoundSource::ExactDecision
                } else {
                    UpperBoundSource::DfaWidth
                },
                certificate: None,
            },
            SearchMode::BoundedSearch => {
                let best = best_lower_bound(&minimal, k - 1, length_cap, options)?;
                WidthDecision {
                    query_p: p,
                    mode,
                    answer: WidthAnswer::Unknown,
                    lower_bound: best.as_ref().map_or(1, |c| c.k),
                    upper_bound: dfa_w,
                    upper_bound_source: UpperBoundSource::DfaWidth,
                    certificate: best,
                }
            }
        },
    };
    debug_assert!(decision.lower_bound <= decision.upper_bound);
    Ok(decision)
}

/// Largest `k' <= k_max` admitting a cap-bounded witness, searched downward
/// (cap-bounded witnesses for `k'` imply witnesses for every smaller arity,
/// so the first hit is the best one).
fn best_lower_bound(
    minimal: &Dfa,
    k_max: usize,
    length_cap: usize,
    options: SearchBudget,
) -> Result<Option<WitnessCertificate>, WitnessError> {
    for k in (2..=k_max).rev() {
        if let Some(cert) = find_width_witness(minimal, k, length_cap, options)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Certified bounds on the deterministic width of the language of `d`.
#[derive(Clone, Debug, Serialize)]
pub struct LanguageWidthBounds {
    pub lower: usize,
    pub upper: usize,
    pub certificate: Option<WitnessCertificate>,
}

/// `lower <= width of the language <= upper`, with `lower` certified by a
/// cap-bounded witness on the minimum DFA and `upper` the width of that
/// minimum DFA.
pub fn language_width_bounds(
    d: &Dfa,
    cap: usize,
    budget_bytes: u64,
) -> Result<LanguageWidthBounds, WitnessError> {
    let minimal = Dfa::try_from(d.trim()?)
        .expect("trim preserves determinism")
        .minimize();
    let (upper, _) = order::dfa_width(&minimal);
    let options = SearchBudget {
        budget_bytes,
        strict_lengths: false,
    };
    let best = best_lower_bound(&minimal, upper, cap, options)?;
    Ok(LanguageWidthBounds {
        lower: best.as_ref().map_or(1, |c| c.k),
        upper,
        certificate: best,
    })
}
