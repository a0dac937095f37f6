//! Co-lex orders on automata.
//!
//! A co-lex order is a strict partial order on the states that respects the
//! incoming-label separation axiom (axiom 1) and propagates backwards along
//! equally labeled edges (axiom 2). This module checks the axioms on
//! arbitrary automata, computes the maximum co-lex order of a DFA by mark
//! propagation over the pair graph, extracts minimum chain partitions via
//! bipartite matching, and provides a brute-force width oracle for tiny
//! NFAs.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::automaton::{Automaton, Dfa, StateId, Symbol};

#[derive(Debug, Error)]
pub enum OrderError {
    #[error("order is over {order} states but the automaton has {automaton}")]
    DimensionMismatch { order: usize, automaton: usize },
    #[error("relation is not a strict partial order: {0}")]
    NotPartialOrder(String),
    #[error("automaton has {n} states, exceeding the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid chain partition: {0}")]
    InvalidPartition(String),
}

/// A strict partial order on states `1..=n`, stored as a full boolean
/// matrix: `less(u, v)` means `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrder {
    n: usize,
    less: Vec<bool>,
}

impl PartialOrder {
    /// The identity order: no two distinct states comparable.
    pub fn identity(n: usize) -> Self {
        PartialOrder {
            n,
            less: vec![false; n * n],
        }
    }

    /// Build from covering (or arbitrary) pairs, closing transitively.
    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (StateId, StateId)>,
    ) -> Result<Self, OrderError> {
        let mut po = PartialOrder::identity(n);
        for (u, v) in pairs {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(OrderError::NotPartialOrder(format!(
                    "pair ({u}, {v}) out of range"
                )));
            }
            po.less[(u - 1) * n + (v - 1)] = true;
        }
        po.close_transitively();
        po.validate()?;
        Ok(po)
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn less(&self, u: StateId, v: StateId) -> bool {
        self.less[(u - 1) * self.n + (v - 1)]
    }

    pub fn comparable(&self, u: StateId, v: StateId) -> bool {
        u == v || self.less(u, v) || self.less(v, u)
    }

    pub(crate) fn set_less(&mut self, u: StateId, v: StateId) {
        self.less[(u - 1) * self.n + (v - 1)] = true;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        (1..=self.n)
            .flat_map(move |u| (1..=self.n).filter_map(move |v| self.less(u, v).then_some((u, v))))
    }

    pub(crate) fn close_transitively(&mut self) {
        let n = self.n;
        for w in 0..n {
            for u in 0..n {
                if self.less[u * n + w] {
                    for v in 0..n {
                        if self.less[w * n + v] {
                            self.less[u * n + v] = true;
                        }
                    }
                }
            }
        }
    }

    /// Check irreflexivity, antisymmetry, and transitivity directly.
    pub fn validate(&self) -> Result<(), OrderError> {
        let n = self.n;
        for u in 1..=n {
            if self.less(u, u) {
                return Err(OrderError::NotPartialOrder(format!("{u} < {u}")));
            }
        }
        for u in 1..=n {
            for v in u + 1..=n {
                if self.less(u, v) && self.less(v, u) {
                    return Err(OrderError::NotPartialOrder(format!(
                        "both {u} < {v} and {v} < {u}"
                    )));
                }
            }
        }
        for u in 1..=n {
            for w in 1..=n {
                if self.less(u, w) {
                    for v in 1..=n {
                        if self.less(w, v) && !self.less(u, v) {
                            return Err(OrderError::NotPartialOrder(format!(
                                "{u} < {w} < {v} but not {u} < {v}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Pairs `u < v` with no `w` strictly between: the Hasse diagram edges.
    pub fn covering_pairs(&self) -> Vec<(StateId, StateId)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            'pair: for v in 1..=self.n {
                if !self.less(u, v) {
                    continue;
                }
                for w in 1..=self.n {
                    if self.less(u, w) && self.less(w, v) {
                        continue 'pair;
                    }
                }
                out.push((u, v));
            }
        }
        out
    }

    /// Render the Hasse diagram in DOT format.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n  rankdir=BT;\n");
        for v in 1..=self.n {
            out.push_str(&format!("  v{v};\n"));
        }
        for (u, v) in self.covering_pairs() {
            out.push_str(&format!("  v{u} -> v{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A decomposition of the states into totally ordered chains, together with
/// a maximum antichain certifying that no smaller decomposition exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainPartition {
    pub chains: Vec<Vec<StateId>>,
    pub antichain: Vec<StateId>,
}

impl ChainPartition {
    pub fn width(&self) -> usize {
        self.chains.len()
    }

    /// Move the chain containing `source` to the front; errors if the source
    /// is not the smallest element of its chain.
    pub fn with_source_first(mut self, source: StateId) -> Result<Self, OrderError> {
        let pos = self
            .chains
            .iter()
            .position(|c| c.contains(&source))
            .ok_or_else(|| {
                OrderError::InvalidPartition(format!("source {source} not in any chain"))
            })?;
        if self.chains[pos][0] != source {
            return Err(OrderError::InvalidPartition(format!(
                "source {source} is not the minimum of its chain"
            )));
        }
        self.chains.swap(0, pos);
        self.chains[1..].sort_by_key(|c| c.iter().copied().min());
        Ok(self)
    }

    /// Check that the chains partition `1..=n`, that every chain is listed in
    /// strictly increasing order of `po`, and that the antichain is one.
    pub fn validate_for(&self, po: &PartialOrder) -> Result<(), OrderError> {
        let n = po.state_count();
        let mut seen = vec![false; n];
        for chain in &self.chains {
            if chain.is_empty() {
                return Err(OrderError::InvalidPartition("empty chain".into()));
            }
            for &q in chain {
                if q == 0 || q > n || std::mem::replace(&mut seen[q - 1], true) {
                    return Err(OrderError::InvalidPartition(format!(
                        "state {q} repeated or out of range"
                    )));
                }
            }
            for w in chain.windows(2) {
                if !po.less(w[0], w[1]) {
                    return Err(OrderError::InvalidPartition(format!(
                        "consecutive chain states {} and {} are not increasing",
                        w[0], w[1]
                    )));
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(OrderError::InvalidPartition(
                "chains do not cover all states".into(),
            ));
        }
        for (i, &u) in self.antichain.iter().enumerate() {
            for &v in &self.antichain[i + 1..] {
                if po.comparable(u, v) {
                    return Err(OrderError::InvalidPartition(format!(
                        "antichain states {u} and {v} are comparable"
                    )));
                }
            }
        }
        if self.antichain.len() != self.chains.len() {
            return Err(OrderError::InvalidPartition(format!(
                "antichain size {} does not certify {} chains",
                self.antichain.len(),
                self.chains.len()
            )));
        }
        Ok(())
    }
}

/// One witnessed failure of the co-lex axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `u < v` but some label entering `u` exceeds some label entering `v`.
    LabelSeparation { u: StateId, v: StateId },
    /// `u < v` via equally labeled edges whose origins are not ordered.
    BackwardPropagation {
        u: StateId,
        v: StateId,
        label: Symbol,
        from_u: StateId,
        from_v: StateId,
    },
}

impl AxiomViolation {
    pub fn axiom(&self) -> u8 {
        match self {
            AxiomViolation::LabelSeparation { .. } => 1,
            AxiomViolation::BackwardPropagation { .. } => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Greatest and least incoming labels per state. The virtual `#` label on
/// the source is smaller than every alphabet symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum LabelBound {
    Hash,
    Sym(Symbol),
}

pub(crate) struct InLabelBounds {
    /// `None` when the state has no incoming labels at all.
    pub min: Vec<Option<LabelBound>>,
    pub max: Vec<Option<LabelBound>>,
}

impl InLabelBounds {
    pub fn compute(a: &Automaton) -> Self {
        let n = a.state_count();
        let mut min: Vec<Option<LabelBound>> = vec![None; n];
        let mut max: Vec<Option<LabelBound>> = vec![None; n];
        min[a.source() - 1] = Some(LabelBound::Hash);
        max[a.source() - 1] = Some(LabelBound::Hash);
        for e in a.edges() {
            let b = LabelBound::Sym(e.label);
            let i = e.to - 1;
            min[i] = Some(min[i].map_or(b, |m| m.min(b)));
            max[i] = Some(max[i].map_or(b, |m| m.max(b)));
        }
        InLabelBounds { min, max }
    }

    /// Does `max(labels(u)) <= min(labels(v))` hold? Vacuously true when
    /// either side has no labels.
    pub fn separated(&self, u: StateId, v: StateId) -> bool {
        match (self.max[u - 1], self.min[v - 1]) {
            (Some(mu), Some(mv)) => mu <= mv,
            _ => true,
        }
    }

    /// Strict form, used by the label order on NFAs.
    pub fn strictly_separated(&self, u: StateId, v: StateId) -> bool {
        match (self.max[u - 1], self.min[v - 1]) {
            (Some(mu), Some(mv)) => mu < mv,
            _ => false,
        }
    }
}

/// Check both co-lex axioms of `po` against `a`, reporting every violation.
pub fn check_colex_axioms(a: &Automaton, po: &PartialOrder) -> Result<AxiomReport, OrderError> {
    if po.state_count() != a.state_count() {
        return Err(OrderError::DimensionMismatch {
            order: po.state_count(),
            automaton: a.state_count(),
        });
    }
    let bounds = InLabelBounds::compute(a);
    let mut violations = Vec::new();
    for (u, v) in po.pairs() {
        if !bounds.separated(u, v) {
            violations.push(AxiomViolation::LabelSeparation { u, v });
        }
    }
    // Axiom 2: group edges by label, compare all same-label pairs.
    let sigma = a.alphabet().len();
    let mut by_label: Vec<Vec<(StateId, StateId)>> = vec![Vec::new(); sigma];
    for e in a.edges() {
        by_label[e.label.index()].push((e.from, e.to));
    }
    for (label, edges) in by_label.iter().enumerate() {
        for &(x, u) in edges {
            for &(y, v) in edges {
                if u != v && po.less(u, v) && x != y && !po.less(x, y) {
                    violations.push(AxiomViolation::BackwardPropagation {
                        u,
                        v,
                        label: Symbol(label as u32),
                        from_u: x,
                        from_v: y,
                    });
                }
            }
        }
    }
    Ok(AxiomReport { violations })
}

/// The maximum co-lex order of a DFA.
///
/// Works on the pair graph: a pair `(u, v)` is initially marked when its
/// incoming labels are not separated, and marks propagate forward along
/// pairs of equally labeled transitions. Unmarked pairs (intersected with
/// their converse's marks) form the strict order; a final partial-order
/// check guards against implementation bugs.
pub fn compute_max_colex_order(d: &Dfa) -> PartialOrder {
    let n = d.state_count();
    let bounds = InLabelBounds::compute(d);
    let idx = |u: StateId, v: StateId| (u - 1) * n + (v - 1);

    let mut marked = vec![false; n * n];
    let mut queue = VecDeque::new();
    for u in 1..=n {
        for v in 1..=n {
            if u != v && !bounds.separated(u, v) {
                marked[idx(u, v)] = true;
                queue.push_back((u, v));
            }
        }
    }
    while let Some((u, v)) = queue.pop_front() {
        for a in d.alphabet().symbols() {
            if let (Some(su), Some(sv)) = (d.step(u, a), d.step(v, a)) {
                if su != sv && !marked[idx(su, sv)] {
                    marked[idx(su, sv)] = true;
                    queue.push_back((su, sv));
                }
            }
        }
    }

    let mut po = PartialOrder::identity(n);
    for u in 1..=n {
        for v in 1..=n {
            if u != v && !marked[idx(u, v)] && marked[idx(v, u)] {
                po.set_less(u, v);
            }
        }
    }
    po.validate()
        .expect("maximum co-lex order of a DFA is a partial order");
    debug_assert!(
        check_colex_axioms(d, &po).map(|r| r.ok()).unwrap_or(false),
        "maximum co-lex order violates its own axioms"
    );
    po
}

/// A minimum chain partition of `po`, via maximum bipartite matching on the
/// transitive comparability graph (minimum path cover), together with a
/// maximum antichain of the same cardinality extracted from the matching.
///
/// Among the maximum matchings the lexicographically smallest successor
/// assignment is chosen, so the partition is a deterministic function of
/// the order.
pub fn chain_partition(po: &PartialOrder) -> ChainPartition {
    let n = po.state_count();
    // Maximum matching size, then re-derive the matching greedily: give each
    // state in turn the smallest successor that keeps a maximum matching
    // reachable, or no successor when none does.
    let target = {
        let mut match_right: Vec<Option<usize>> = vec![None; n + 1];
        let mut match_left: Vec<Option<usize>> = vec![None; n + 1];
        for u in 1..=n {
            let mut visited = vec![false; n + 1];
            augment(
                po,
                u,
                &mut visited,
                &mut match_left,
                &mut match_right,
                &|_, _| true,
            );
        }
        match_left.iter().flatten().count()
    };
    let mut succ: Vec<Option<usize>> = vec![None; n + 1];
    let mut used_right = vec![false; n + 1];
    let mut forced = 0usize;
    for u in 1..=n {
        for v in 1..=n {
            if !po.less(u, v) || used_right[v] {
                continue;
            }
            // Does fixing u -> v still allow `target` matched pairs in
            // total? Free states larger than u get matched from scratch.
            let allowed = |l: usize, r: usize| l > u && !used_right[r] && r != v;
            let mut match_right: Vec<Option<usize>> = vec![None; n + 1];
            let mut match_left: Vec<Option<usize>> = vec![None; n + 1];
            let mut residual = 0;
            for w in u + 1..=n {
                let mut visited = vec![false; n + 1];
                if augment(
                    po,
                    w,
                    &mut visited,
                    &mut match_left,
                    &mut match_right,
                    &allowed,
                ) {
                    residual += 1;
                }
            }
            if forced + 1 + residual == target {
                succ[u] = Some(v);
                used_right[v] = true;
                forced += 1;
                break;
            }
        }
    }
    debug_assert_eq!(forced, target, "greedy reconstruction reaches the optimum");

    let mut match_right: Vec<Option<usize>> = vec![None; n + 1];
    let match_left = succ;
    for u in 1..=n {
        if let Some(v) = match_left[u] {
            match_right[v] = Some(u);
        }
    }

    let mut chains = Vec::new();
    for head in 1..=n {
        if match_right[head].is_some() {
            continue;
        }
        let mut chain = vec![head];
        let mut cur = head;
        while let Some(next) = match_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    chains.sort_by_key(|c| c.iter().copied().min());

    // Maximum antichain from the matching by alternating reachability:
    // states whose left copy is reachable from an unmatched left vertex and
    // whose right copy is not.
    let mut left_reached = vec![false; n + 1];
    let mut right_reached = vec![false; n + 1];
    let mut queue: VecDeque<usize> = (1..=n).filter(|&u| match_left[u].is_none()).collect();
    for &u in &queue {
        left_reached[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for v in 1..=n {
            if po.less(u, v) && !right_reached[v] && match_left[u] != Some(v) {
                right_reached[v] = true;
                if let Some(w) = match_right[v] {
                    if !left_reached[w] {
                        left_reached[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let antichain: Vec<StateId> = (1..=n)
        .filter(|&u| left_reached[u] && !right_reached[u])
        .collect();

    let cp = ChainPartition { chains, antichain };
    debug_assert!(cp.validate_for(po).is_ok(), "chain partition invariants");
    cp
}

fn augment(
    po: &PartialOrder,
    u: usize,
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
    allowed: &dyn Fn(usize, usize) -> bool,
) -> bool {
    for v in 1..=po.state_count() {
        if po.less(u, v) && allowed(u, v) && !visited[v] {
            visited[v] = true;
            if match_right[v].is_none()
                || augment(
                    po,
                    match_right[v].unwrap(),
                    visited,
                    match_left,
                    match_right,
                    allowed,
                )
            {
                match_right[v] = Some(u);
                match_left[u] = Some(v);
                return true;
            }
        }
    }
    false
}

/// Width of a DFA: the width of its maximum co-lex order, with a witnessing
/// minimum chain partition whose first chain starts at the source.
pub fn dfa_width(d: &Dfa) -> (usize, ChainPartition) {
    let po = compute_max_colex_order(d);
    let cp = chain_partition(&po)
        .with_source_first(d.source())
        .expect("source heads its chain in a co-lex order");
    (cp.width(), cp)
}

/// The coarse co-lex order comparing states only by their incoming-label
/// ranges: `u < v` when every label entering `u` is strictly below every
/// label entering `v`. Valid on any automaton; its backward-propagation
/// axiom holds vacuously.
pub fn label_order(a: &Automaton) -> PartialOrder {
    let n = a.state_count();
    let bounds = InLabelBounds::compute(a);
    let mut po = PartialOrder::identity(n);
    for u in 1..=n {
        for v in 1..=n {
            if u != v && bounds.strictly_separated(u, v) {
                po.set_less(u, v);
            }
        }
    }
    debug_assert!(po.validate().is_ok());
    po
}

/// Grow [`label_order`] into a maximal co-lex order by repeatedly adding any
/// comparability that keeps the closure a valid co-lex order. Quadratically
/// many candidate insertions per round; intended for small NFAs where the
/// exact minimum-width search is out of reach.
pub fn greedy_maximal_colex_order(a: &Automaton) -> PartialOrder {
    let n = a.state_count();
    let mut po = label_order(a);
    loop {
        let mut grew = false;
        for u in 1..=n {
            for v in 1..=n {
                if u == v || po.comparable(u, v) {
                    continue;
                }
                let mut candidate = po.clone();
                candidate.set_less(u, v);
                candidate.close_transitively();
                if candidate.validate().is_ok()
                    && check_colex_axioms(a, &candidate)
                        .map(|r| r.ok())
                        .unwrap_or(false)
                {
                    po = candidate;
                    grew = true;
                }
            }
        }
        if !grew {
            return po;
        }
    }
}

/// Exact width of a tiny NFA, and an order realizing it.
///
/// Enumerates assignments of {below, above, incomparable} to every state
/// pair with incremental pruning: label separation restricts which pairs may
/// ever be comparable, transitivity is enforced as soon as a triple is fully
/// assigned, and known backward-propagation consequences are checked against
/// already-assigned pairs. Full axiom verification runs at every leaf.
pub fn brute_force_min_width_order(
    a: &Automaton,
    cap: usize,
) -> Result<(PartialOrder, usize), OrderError> {
    let n = a.state_count();
    if n > cap {
        return Err(OrderError::CapExceeded { n, cap });
    }
    let bounds = InLabelBounds::compute(a);

    // For each ordered pair (u, v): making u < v forces from_u <= from_v for
    // every pair of equally labeled edges entering u and v.
    let mut forced: std::collections::HashMap<(StateId, StateId), Vec<(StateId, StateId)>> =
        std::collections::HashMap::new();
    let mut by_label: Vec<Vec<(StateId, StateId)>> = vec![Vec::new(); a.alphabet().len()];
    for e in a.edges() {
        by_label[e.label.index()].push((e.from, e.to));
    }
    for edges in &by_label {
        for &(x, u) in edges {
            for &(y, v) in edges {
                if u != v && x != y {
                    forced.entry((u, v)).or_default().push((x, y));
                }
            }
        }
    }

    // Pair enumeration order: (i, j) for j in 2..=n, i in 1..j, so that when
    // {i, j} is assigned every pair inside {1..j} \ {j} is already fixed.
    let mut pair_order = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            pair_order.push((i, j));
        }
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Rel {
        Inc,
        Lt, // i < j
        Gt, // j < i
    }

    struct Search<'a> {
        a: &'a Automaton,
        n: usize,
        pair_order: Vec<(usize, usize)>,
        rel: Vec<Vec<Rel>>,
        sep: Vec<Vec<bool>>,
        forced: std::collections::HashMap<(StateId, StateId), Vec<(StateId, StateId)>>,
        best: usize,
        best_order: Option<PartialOrder>,
    }

    impl Search<'_> {
        /// Is `u < v` under the current assignment? Callers only ask about
        /// pairs that are already fixed by the enumeration order.
        fn lt(&self, u: usize, v: usize) -> bool {
            if u < v {
                self.rel[u][v] == Rel::Lt
            } else {
                self.rel[v][u] == Rel::Gt
            }
        }

        fn consistent(&self, i: usize, j: usize, choice: Rel) -> bool {
            let (ij, ji) = match choice {
                Rel::Lt => (true, false),
                Rel::Gt => (false, true),
                Rel::Inc => (false, false),
            };
            // Transitivity over triples {w, i, j} with w < i: every pair in
            // the triple other than {i, j} is already assigned, so checking
            // here enforces full transitivity at the leaves.
            for w in 1..i {
                let wi = self.lt(w, i);
                let iw = self.lt(i, w);
                let wj = self.lt(w, j);
                let jw = self.lt(j, w);
                if (wi && ij && !wj)
                    || (wj && ji && !wi)
                    || (iw && wj && !ij)
                    || (jw && wi && !ji)
                    || (ij && jw && !iw)
                    || (ji && iw && !jw)
                {
                    return false;
                }
            }
            // Backward-propagation consequences against assigned pairs.
            let implied = |u: usize, v: usize| -> bool {
                if let Some(list) = self.forced.get(&(u, v)) {
                    for &(x, y) in list {
                        let fixed = x.max(y) < j || (x.max(y) == j && x.min(y) < i);
                        if fixed && !self.lt(x, y) {
                            return false;
                        }
                    }
                }
                true
            };
            match choice {
                Rel::Lt => implied(i, j),
                Rel::Gt => implied(j, i),
                Rel::Inc => true,
            }
        }

        fn descend(&mut self, depth: usize) {
            if self.best == 1 {
                return;
            }
            if depth == self.pair_order.len() {
                self.leaf();
                return;
            }
            let (i, j) = self.pair_order[depth];
            let mut choices = Vec::with_capacity(3);
            if self.sep[i][j] {
                choices.push(Rel::Lt);
            }
            if self.sep[j][i] {
                choices.push(Rel::Gt);
            }
            choices.push(Rel::Inc);
            for choice in choices {
                if !self.consistent(i, j, choice) {
                    continue;
                }
                self.rel[i][j] = choice;
                self.descend(depth + 1);
                self.rel[i][j] = Rel::Inc;
                if self.best == 1 {
                    return;
                }
            }
        }

        fn leaf(&mut self) {
            let mut po = PartialOrder::identity(self.n);
            for j in 2..=self.n {
                for i in 1..j {
                    match self.rel[i][j] {
                        Rel::Lt => po.set_less(i, j),
                        Rel::Gt => po.set_less(j, i),
                        Rel::Inc => {}
                    }
                }
            }
            debug_assert!(po.validate().is_ok(), "enumeration yields closed orders");
            match check_colex_axioms(self.a, &po) {
                Ok(report) if report.ok() => {}
                _ => return,
            }
            let width = chain_partition(&po).width();
            if width < self.best {
                self.best = width;
                self.best_order = Some(po);
            }
        }
    }

    let mut sep = vec![vec![false; n + 1]; n + 1];
    for u in 1..=n {
        for v in 1..=n {
            sep[u][v] = u != v && bounds.separated(u, v);
        }
    }
    let mut search = Search {
        a,
        n,
        pair_order,
        rel: vec![vec![Rel::Inc; n + 1]; n + 1],
        sep,
        forced,
        best: usize::MAX,
        best_order: None,
    };
    search.descend(0);
    let order = search
        .best_order
        .expect("the identity order is always valid");
    Ok((order, search.best))
}

/// Exact width of a tiny NFA. See [`brute_force_min_width_order`].
pub fn brute_force_nfa_width(a: &Automaton, cap: usize) -> Result<usize, OrderError> {
    brute_force_min_width_order(a, cap).map(|(_, w)| w)
}

/// Default size cap for the brute-force width oracle.
pub const DEFAULT_ORACLE_CAP: usize = 5;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    #[test]
    fn wheeler_total_order_is_colex() {
        let a = testdata::wheeler_nfa();
        let po = PartialOrder::from_pairs(6, testdata::WHEELER_TOTAL_ORDER).unwrap();
        assert!(check_colex_axioms(&a, &po).unwrap().ok());
        let po2 = PartialOrder::from_pairs(6, testdata::WHEELER_SECOND_ORDER).unwrap();
        assert!(check_colex_axioms(&a, &po2).unwrap().ok());
    }

    #[test]
    fn wheeler_bad_total_order_is_rejected() {
        // A total order that swaps two of the middle states while keeping
        // the two finals comparable: 1 < 2 < 4 < 3 < 5 < 6.
        let a = testdata::wheeler_nfa();
        let po = PartialOrder::from_pairs(6, [(1, 2), (2, 4), (4, 3), (3, 5), (5, 6)]).unwrap();
        let report = check_colex_axioms(&a, &po).unwrap();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.axiom() == 2));
    }

    #[test]
    fn identity_order_is_always_colex() {
        for a in [
            testdata::wheeler_nfa(),
            testdata::width_two_automaton(),
            testdata::shared_lang_split_a(),
        ] {
            let po = PartialOrder::identity(a.state_count());
            assert!(check_colex_axioms(&a, &po).unwrap().ok());
        }
    }

    #[test]
    fn width_two_maximum_order_matches_hasse() {
        let d = testdata::width_two();
        let po = compute_max_colex_order(&d);
        let expected = PartialOrder::from_pairs(7, testdata::WIDTH_TWO_HASSE).unwrap();
        assert_eq!(po, expected);
        assert_eq!(
            po.covering_pairs().len(),
            testdata::WIDTH_TWO_HASSE.len(),
            "covering pairs match the golden diagram"
        );
    }

    #[test]
    fn shared_lang_min_maximum_order_matches_hasse() {
        let d = testdata::shared_lang_min_dfa();
        let po = compute_max_colex_order(&d);
        let expected = PartialOrder::from_pairs(6, testdata::SHARED_LANG_MIN_HASSE).unwrap();
        assert_eq!(po, expected);
    }

    #[test]
    fn single_state_dfa_has_empty_order() {
        let a = crate::Automaton::parse("alphabet a\nstates 1\nsource 1\nfinals 1\nedge 1 1 a\n")
            .unwrap();
        let d = crate::Dfa::try_from(a).unwrap();
        let po = compute_max_colex_order(&d);
        assert_eq!(po.pairs().count(), 0);
    }

    #[test]
    fn chain_partition_on_total_order_and_antichain() {
        let total = PartialOrder::from_pairs(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let cp = chain_partition(&total);
        assert_eq!(cp.width(), 1);
        assert_eq!(cp.chains, vec![vec![1, 2, 3, 4]]);

        let anti = PartialOrder::identity(4);
        let cp = chain_partition(&anti);
        assert_eq!(cp.width(), 4);
        assert_eq!(cp.antichain.len(), 4);
    }

    #[test]
    fn shared_lang_min_chain_partition_has_width_3() {
        let po = PartialOrder::from_pairs(6, testdata::SHARED_LANG_MIN_HASSE).unwrap();
        let cp = chain_partition(&po);
        assert_eq!(cp.width(), 3);
        cp.validate_for(&po).unwrap();
        // The maximum antichain is exactly the three top states.
        let mut anti = cp.antichain.clone();
        anti.sort_unstable();
        assert_eq!(anti, vec![4, 5, 6]);
    }

    #[test]
    fn width_two_width_two_with_golden_chains() {
        let (w, cp) = dfa_width(&testdata::width_two());
        assert_eq!(w, 2);
        assert_eq!(cp.chains, vec![vec![1, 2, 3, 4], vec![5, 6, 7]]);
    }

    #[test]
    fn shared_lang_widths() {
        assert_eq!(dfa_width(&testdata::shared_lang_min_dfa()).0, 3);
        let d2 = crate::Dfa::try_from(testdata::shared_lang_split_a()).unwrap();
        let d3 = crate::Dfa::try_from(testdata::shared_lang_split_b()).unwrap();
        assert_eq!(dfa_width(&d2).0, 2);
        assert_eq!(dfa_width(&d3).0, 2);
    }

    #[test]
    fn oracle_on_wheeler_and_trivia() {
        let one = crate::Automaton::parse("alphabet a\nstates 1\nsource 1\nfinals 1\n").unwrap();
        assert_eq!(brute_force_nfa_width(&one, 5).unwrap(), 1);
        assert_eq!(
            brute_force_nfa_width(&testdata::wheeler_nfa(), 6).unwrap(),
            1
        );
        let err = brute_force_nfa_width(&testdata::width_two_automaton(), 5).unwrap_err();
        assert!(matches!(err, OrderError::CapExceeded { n: 7, cap: 5 }));
    }

    #[test]
    fn greedy_order_is_valid_on_fixtures() {
        for a in [
            testdata::wheeler_nfa(),
            testdata::colliding_nfa_a(),
            testdata::colliding_nfa_b(),
        ] {
            let po = greedy_maximal_colex_order(&a);
            assert!(check_colex_axioms(&a, &po).unwrap().ok());
        }
    }

    #[test]
    fn source_first_rejects_non_minimal_source() {
        let po = PartialOrder::from_pairs(2, [(2, 1)]).unwrap();
        let cp = chain_partition(&po);
        assert!(cp.with_source_first(1).is_err());
    }
}
