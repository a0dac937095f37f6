//! Finite automata over a totally ordered alphabet: data model, text format,
//! validation, trimming, Hopcroft minimization, and word execution.
//!
//! States are dense integers `1..=n`; the source is always state 1 after
//! parsing. The alphabet order is explicit in the input and defines the
//! symbol comparison used everywhere else in this crate; it is never
//! inherited from code-point order.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// 1-based state identifier, matching the text format.
pub type StateId = usize;

/// A symbol of the alphabet, identified by its rank in the declared order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word over the alphabet.
pub type Word = Vec<Symbol>;

/// Compare two words co-lexicographically: by their reversals, left to right.
/// A proper suffix is smaller than the word it suffixes.
pub fn colex_cmp(a: &[Symbol], b: &[Symbol]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Does `suffix` occur as a (not necessarily proper) suffix of `word`?
pub fn is_suffix(suffix: &[Symbol], word: &[Symbol]) -> bool {
    suffix.len() <= word.len() && word[word.len() - suffix.len()..] == *suffix
}

/// An ordered alphabet. The declaration order defines the symbol order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    lookup: HashMap<String, u32>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        symbols: impl IntoIterator<Item = S>,
    ) -> Result<Self, AutomatonError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) || s == "#" {
                return Err(AutomatonError::BadSymbol(s.clone()));
            }
            if lookup.insert(s.clone(), i as u32).is_some() {
                return Err(AutomatonError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols, lookup })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn token(&self, sym: Symbol) -> &str {
        &self.symbols[sym.index()]
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.lookup.get(token).copied().map(Symbol)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.symbols.len() as u32).map(Symbol)
    }

    pub fn tokens(&self) -> &[String] {
        &self.symbols
    }

    /// Parse a word. Whitespace-separated tokens are always accepted; when
    /// every symbol is a single character, a plain unseparated string like
    /// `"abaa"` works too.
    pub fn parse_word(&self, text: &str) -> Result<Word, AutomatonError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if text.split_whitespace().nth(1).is_none()
            && !self.lookup.contains_key(text)
            && self.symbols.iter().all(|s| s.chars().count() == 1)
        {
            return text
                .chars()
                .map(|c| {
                    self.symbol(&c.to_string())
                        .ok_or_else(|| AutomatonError::BadSymbol(c.to_string()))
                })
                .collect();
        }
        text.split_whitespace()
            .map(|t| {
                self.symbol(t)
                    .ok_or_else(|| AutomatonError::BadSymbol(t.to_string()))
            })
            .collect()
    }

    pub fn render_word(&self, word: &[Symbol]) -> String {
        word.iter()
            .map(|&s| self.token(s))
            .collect::<Vec<_>>()
            .join(if self.symbols.iter().all(|s| s.chars().count() == 1) {
                ""
            } else {
                " "
            })
    }
}

/// A labeled transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: StateId,
    pub to: StateId,
    pub label: Symbol,
}

#[derive(Debug, Error)]
pub enum AutomatonError {
    #[error("symbol {0:?} is not a valid alphabet token")]
    BadSymbol(String),
    #[error("symbol {0:?} declared twice in the alphabet")]
    DuplicateSymbol(String),
    #[error("state id {0} out of range 1..={1}")]
    StateOutOfRange(StateId, usize),
    #[error("duplicate edge ({0} -> {1})")]
    DuplicateEdge(StateId, StateId),
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("the automaton accepts no word: no final state is reachable from the source")]
    EmptyLanguage,
    #[error("automaton is not deterministic: state {0} has two edges labeled {1:?}")]
    NotDeterministic(StateId, String),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared symbol {symbol:?}")]
    UndeclaredSymbol { line: usize, symbol: String },
    #[error("line {line}: state id {id} out of range 1..={max}")]
    StateOutOfRange { line: usize, id: usize, max: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error(transparent)]
    Invalid(#[from] AutomatonError),
}

/// Diagnostics produced by [`Automaton::validate`]. An automaton is trim iff
/// both `unreachable` and `not_useful` are empty.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub is_deterministic: bool,
    pub unreachable: Vec<StateId>,
    pub not_useful: Vec<StateId>,
    pub errors: Vec<String>,
}

impl ValidationReport {
    pub fn is_trim(&self) -> bool {
        self.unreachable.is_empty() && self.not_useful.is_empty()
    }
}

/// A finite automaton with a single source over an ordered alphabet.
///
/// Values are immutable after construction; all operations are pure
/// functions, so sharing across threads is safe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    state_count: usize,
    source: StateId,
    finals: Vec<StateId>,
    edges: Vec<Edge>,
    alphabet: Alphabet,
}

impl Automaton {
    /// Structural construction: ids and labels in range, no duplicate edges.
    /// Trimness is not required here; see [`Automaton::trim`].
    pub fn new(
        state_count: usize,
        source: StateId,
        finals: impl IntoIterator<Item = StateId>,
        edges: Vec<Edge>,
        alphabet: Alphabet,
    ) -> Result<Self, AutomatonError> {
        if state_count == 0 {
            return Err(AutomatonError::NoStates);
        }
        let check = |id: StateId| -> Result<(), AutomatonError> {
            if id == 0 || id > state_count {
                Err(AutomatonError::StateOutOfRange(id, state_count))
            } else {
                Ok(())
            }
        };
        check(source)?;
        let mut finals: Vec<StateId> = finals.into_iter().collect();
        finals.sort_unstable();
        finals.dedup();
        for &f in &finals {
            check(f)?;
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            check(e.from)?;
            check(e.to)?;
            if e.label.index() >= alphabet.len() {
                return Err(AutomatonError::BadSymbol(format!("<id {}>", e.label.0)));
            }
            if !seen.insert(*e) {
                return Err(AutomatonError::DuplicateEdge(e.from, e.to));
            }
        }
        Ok(Automaton {
            state_count,
            source,
            finals,
            edges,
            alphabet,
        })
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn source(&self) -> StateId {
        self.source
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.binary_search(&q).is_ok()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        1..=self.state_count
    }

    /// Outgoing adjacency, indexed by `state - 1`, each list sorted by
    /// (label, target).
    pub fn adjacency(&self) -> Vec<Vec<(Symbol, StateId)>> {
        let mut adj = vec![Vec::new(); self.state_count];
        for e in &self.edges {
            adj[e.from - 1].push((e.label, e.to));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Incoming adjacency, indexed by `state - 1`.
    pub fn reverse_adjacency(&self) -> Vec<Vec<(Symbol, StateId)>> {
        let mut adj = vec![Vec::new(); self.state_count];
        for e in &self.edges {
            adj[e.to - 1].push((e.label, e.from));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_deterministic(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|e| seen.insert((e.from, e.label)))
    }

    /// One step of subset simulation: all states reachable from `set` by an
    /// edge labeled `a`. Input and output are sorted and deduplicated.
    pub fn subset_step(&self, set: &[StateId], a: Symbol) -> Vec<StateId> {
        let mut out: Vec<StateId> = self
            .edges
            .iter()
            .filter(|e| e.label == a && set.binary_search(&e.from).is_ok())
            .map(|e| e.to)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// NFA membership by on-the-fly subset simulation.
    pub fn accepts_nfa(&self, word: &[Symbol]) -> bool {
        let mut set = vec![self.source];
        for &a in word {
            set = self.subset_step(&set, a);
            if set.is_empty() {
                return false;
            }
        }
        set.iter().any(|&q| self.is_final(q))
    }

    pub fn validate(&self) -> ValidationReport {
        let reach = self.reachable();
        let coreach = self.coreachable();
        let unreachable: Vec<StateId> = self.states().filter(|q| !reach[q - 1]).collect();
        let not_useful: Vec<StateId> = self
            .states()
            .filter(|q| reach[q - 1] && !coreach[q - 1])
            .collect();
        let mut errors = Vec::new();
        if self.finals.is_empty() {
            errors.push("no final states".to_string());
        } else if !coreach[self.source - 1] {
            errors.push("no final state is reachable from the source".to_string());
        }
        ValidationReport {
            is_deterministic: self.is_deterministic(),
            unreachable,
            not_useful,
            errors,
        }
    }

    fn reachable(&self) -> Vec<bool> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::from([self.source]);
        seen[self.source - 1] = true;
        while let Some(q) = queue.pop_front() {
            for &(_, to) in &adj[q - 1] {
                if !seen[to - 1] {
                    seen[to - 1] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    fn coreachable(&self) -> Vec<bool> {
        let radj = self.reverse_adjacency();
        let mut seen = vec![false; self.state_count];
        let mut queue: VecDeque<StateId> = self.finals.iter().copied().collect();
        for &f in &self.finals {
            seen[f - 1] = true;
        }
        while let Some(q) = queue.pop_front() {
            for &(_, from) in &radj[q - 1] {
                if !seen[from - 1] {
                    seen[from - 1] = true;
                    queue.push_back(from);
                }
            }
        }
        seen
    }

    pub fn is_trim(&self) -> bool {
        let reach = self.reachable();
        let coreach = self.coreachable();
        self.states().all(|q| reach[q - 1] && coreach[q - 1])
    }

    /// Remove states that are unreachable from the source or cannot reach a
    /// final state. Kept states are renumbered densely, preserving relative
    /// order (the source stays first). The accepted language is unchanged.
    pub fn trim(&self) -> Result<Automaton, AutomatonError> {
        let reach = self.reachable();
        let coreach = self.coreachable();
        if !coreach[self.source - 1] {
            return Err(AutomatonError::EmptyLanguage);
        }
        let keep: Vec<StateId> = self
            .states()
            .filter(|q| reach[q - 1] && coreach[q - 1])
            .collect();
        let mut renumber = vec![0usize; self.state_count];
        for (new_minus_1, &old) in keep.iter().enumerate() {
            renumber[old - 1] = new_minus_1 + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| renumber[e.from - 1] != 0 && renumber[e.to - 1] != 0)
            .map(|e| Edge {
                from: renumber[e.from - 1],
                to: renumber[e.to - 1],
                label: e.label,
            })
            .collect();
        let finals = self
            .finals
            .iter()
            .filter(|&&f| renumber[f - 1] != 0)
            .map(|&f| renumber[f - 1]);
        Automaton::new(
            keep.len(),
            renumber[self.source - 1],
            finals,
            edges,
            self.alphabet.clone(),
        )
    }

    /// Parse the line-oriented text format. The declared alphabet order is
    /// kept verbatim; the source is renumbered to state 1 when necessary.
    pub fn parse(text: &str) -> Result<Automaton, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let mut expect = |keyword: &str| -> Result<(usize, Vec<String>), ParseError> {
            let (line, content) = lines.next().ok_or(ParseError::Syntax {
                line: 0,
                message: format!("missing `{keyword}` line"),
            })?;
            let mut fields = content.split_whitespace();
            if fields.next() != Some(keyword) {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("expected `{keyword} ...`, found {content:?}"),
                });
            }
            Ok((line, fields.map(str::to_string).collect()))
        };

        let (_, alpha_tokens) = expect("alphabet")?;
        let alphabet = Alphabet::new(alpha_tokens)?;

        let (line, fields) = expect("states")?;
        let state_count: usize = parse_one(line, &fields, "states")?;
        if state_count == 0 {
            return Err(AutomatonError::NoStates.into());
        }

        let (line, fields) = expect("source")?;
        let source: usize = parse_one(line, &fields, "source")?;
        check_id(line, source, state_count)?;

        let (line, fields) = expect("finals")?;
        let mut finals = Vec::with_capacity(fields.len());
        for f in &fields {
            let id = f.parse().map_err(|_| ParseError::Syntax {
                line,
                message: format!("bad state id {f:?}"),
            })?;
            check_id(line, id, state_count)?;
            finals.push(id);
        }

        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (line, content) in lines {
            let fields: Vec<&str> = content.split_whitespace().collect();
            match fields.as_slice() {
                ["edge", from, to, sym] => {
                    let from: usize = from.parse().map_err(|_| ParseError::Syntax {
                        line,
                        message: format!("bad state id {from:?}"),
                    })?;
                    let to: usize = to.parse().map_err(|_| ParseError::Syntax {
                        line,
                        message: format!("bad state id {to:?}"),
                    })?;
                    check_id(line, from, state_count)?;
                    check_id(line, to, state_count)?;
                    let label =
                        alphabet
                            .symbol(sym)
                            .ok_or_else(|| ParseError::UndeclaredSymbol {
                                line,
                                symbol: sym.to_string(),
                            })?;
                    if !seen.insert((from, to, label)) {
                        return Err(ParseError::DuplicateEdge { line });
                    }
                    edges.push(Edge { from, to, label });
                }
                _ => {
                    return Err(ParseError::Syntax {
                        line,
                        message: format!("expected `edge <from> <to> <sym>`, found {content:?}"),
                    })
                }
            }
        }

        // The source becomes state 1 by swapping ids: downstream transforms
        // assume the source heads the first chain.
        if source != 1 {
            let swap = |id: StateId| match id {
                1 => source,
                x if x == source => 1,
                x => x,
            };
            for e in &mut edges {
                e.from = swap(e.from);
                e.to = swap(e.to);
            }
            finals = finals.into_iter().map(swap).collect();
        }
        Ok(Automaton::new(state_count, 1, finals, edges, alphabet)?)
    }

    /// Render in the text format; `parse(to_text(a)) == a` for any value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("alphabet");
        for t in self.alphabet.tokens() {
            out.push(' ');
            out.push_str(t);
        }
        out.push('\n');
        out.push_str(&format!("states {}\n", self.state_count));
        out.push_str(&format!("source {}\n", self.source));
        out.push_str("finals");
        for f in &self.finals {
            out.push_str(&format!(" {f}"));
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                e.from,
                e.to,
                self.alphabet.token(e.label)
            ));
        }
        out
    }
}

impl fmt::Display for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_one(line: usize, fields: &[String], what: &str) -> Result<usize, ParseError> {
    match fields {
        [one] => one.parse().map_err(|_| ParseError::Syntax {
            line,
            message: format!("bad {what} value {one:?}"),
        }),
        _ => Err(ParseError::Syntax {
            line,
            message: format!("`{what}` takes exactly one value"),
        }),
    }
}

fn check_id(line: usize, id: usize, max: usize) -> Result<(), ParseError> {
    if id == 0 || id > max {
        Err(ParseError::StateOutOfRange { line, id, max })
    } else {
        Ok(())
    }
}

/// A deterministic automaton: at most one edge per (state, label).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    inner: Automaton,
    // per-state transition lists sorted by label, for binary-searched steps
    steps: Vec<Vec<(Symbol, StateId)>>,
}

impl TryFrom<Automaton> for Dfa {
    type Error = AutomatonError;

    fn try_from(inner: Automaton) -> Result<Self, AutomatonError> {
        let steps = inner.adjacency();
        for (i, list) in steps.iter().enumerate() {
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(AutomatonError::NotDeterministic(
                        i + 1,
                        inner.alphabet().token(w[0].0).to_string(),
                    ));
                }
            }
        }
        Ok(Dfa { inner, steps })
    }
}

impl std::ops::Deref for Dfa {
    type Target = Automaton;

    fn deref(&self) -> &Automaton {
        &self.inner
    }
}

impl Dfa {
    pub fn into_automaton(self) -> Automaton {
        self.inner
    }

    pub fn as_automaton(&self) -> &Automaton {
        &self.inner
    }

    pub fn step(&self, q: StateId, a: Symbol) -> Option<StateId> {
        let list = &self.steps[q - 1];
        list.binary_search_by_key(&a, |&(s, _)| s)
            .ok()
            .map(|i| list[i].1)
    }

    /// Run the word from the source; `None` when a transition is undefined.
    pub fn run(&self, word: &[Symbol]) -> Option<StateId> {
        let mut q = self.inner.source();
        for &a in word {
            q = self.step(q, a)?;
        }
        Some(q)
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.run(word).is_some_and(|q| self.inner.is_final(q))
    }

    /// Hopcroft minimization. Requires a trim input; the result is the
    /// minimum DFA in canonical numbering (breadth-first from the source,
    /// edges in alphabet order).
    pub fn minimize(&self) -> Dfa {
        let n = self.inner.state_count;
        let sigma = self.inner.alphabet.len();
        // Implicit completion: class index n is the sink every missing
        // transition goes to. Trim inputs guarantee no real state joins it.
        let sink = n; // 0-based position of the sink
        let total = n + 1;
        let delta = |q: usize, a: usize| -> usize {
            if q == sink {
                sink
            } else {
                self.step(q + 1, Symbol(a as u32)).map_or(sink, |t| t - 1)
            }
        };
        // Predecessor lists per symbol.
        let mut preimage: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); total]; sigma];
        for q in 0..total {
            for a in 0..sigma {
                preimage[a][delta(q, a)].push(q as u32);
            }
        }

        let mut block_of = vec![0u32; total];
        for &f in &self.inner.finals {
            block_of[f - 1] = 1;
        }
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(), Vec::new()];
        for q in 0..total {
            blocks[block_of[q] as usize].push(q as u32);
        }
        if blocks[1].is_empty() {
            blocks.pop();
        }
        if blocks[0].is_empty() {
            blocks.swap_remove(0);
            for q in 0..total {
                block_of[q] = 0;
            }
        }

        let mut worklist: VecDeque<(u32, usize)> = VecDeque::new();
        let mut in_worklist: HashSet<(u32, usize)> = HashSet::new();
        for b in 0..blocks.len() as u32 {
            for a in 0..sigma {
                worklist.push_back((b, a));
                in_worklist.insert((b, a));
            }
        }

        while let Some((splitter, a)) = worklist.pop_front() {
            in_worklist.remove(&(splitter, a));
            // States with an a-transition into the splitter block.
            let mut touched: HashMap<u32, Vec<u32>> = HashMap::new();
            for &q in &blocks[splitter as usize] {
                for &p in &preimage[a][q as usize] {
                    touched.entry(block_of[p as usize]).or_default().push(p);
                }
            }
            for (b, movers) in touched {
                let b_size = blocks[b as usize].len();
                if movers.len() == b_size {
                    continue;
                }
                let new_b = blocks.len() as u32;
                for &p in &movers {
                    block_of[p as usize] = new_b;
                }
                blocks[b as usize].retain(|&q| block_of[q as usize] == b);
                blocks.push(movers);
                let (small, large) = if blocks[b as usize].len() <= blocks[new_b as usize].len() {
                    (b, new_b)
                } else {
                    (new_b, b)
                };
                for c in 0..sigma {
                    if in_worklist.contains(&(b, c)) {
                        // b was pending: both halves must be processed.
                        worklist.push_back((new_b, c));
                        in_worklist.insert((new_b, c));
                    } else {
                        worklist.push_back((small, c));
                        in_worklist.insert((small, c));
                        let _ = large;
                    }
                }
            }
        }

        let sink_block = block_of[sink];
        debug_assert_eq!(
            blocks[sink_block as usize].len(),
            1,
            "a useful state merged with the completion sink"
        );

        // Assemble the quotient and renumber canonically by BFS.
        let old_source_block = block_of[self.inner.source - 1];
        let mut canon: HashMap<u32, usize> = HashMap::new();
        canon.insert(old_source_block, 1);
        let mut order = vec![old_source_block];
        let mut edges = Vec::new();
        let mut head = 0;
        while head < order.len() {
            let b = order[head];
            head += 1;
            let rep = blocks[b as usize][0] as usize;
            for a in 0..sigma {
                let t = delta(rep, a);
                let tb = block_of[t];
                if tb == sink_block {
                    continue;
                }
                let to = *canon.entry(tb).or_insert_with(|| {
                    order.push(tb);
                    order.len()
                });
                edges.push(Edge {
                    from: canon[&b],
                    to,
                    label: Symbol(a as u32),
                });
            }
        }
        let finals = order
            .iter()
            .enumerate()
            .filter(|(_, &b)| self.inner.is_final(blocks[b as usize][0] as usize + 1))
            .map(|(i, _)| i + 1);
        let inner = Automaton::new(order.len(), 1, finals, edges, self.inner.alphabet.clone())
            .expect("quotient automaton is structurally valid");
        Dfa::try_from(inner).expect("quotient of a DFA is deterministic")
    }

    /// Relabel states canonically: breadth-first from the source, following
    /// edges in alphabet order. Two trim DFAs are isomorphic iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> Automaton {
        let mut canon = vec![0usize; self.inner.state_count];
        canon[self.inner.source - 1] = 1;
        let mut order = vec![self.inner.source];
        let mut head = 0;
        let mut edges = Vec::new();
        while head < order.len() {
            let q = order[head];
            head += 1;
            for &(a, t) in &self.steps[q - 1] {
                if canon[t - 1] == 0 {
                    order.push(t);
                    canon[t - 1] = order.len();
                }
                edges.push(Edge {
                    from: canon[q - 1],
                    to: canon[t - 1],
                    label: a,
                });
            }
        }
        edges.sort_unstable();
        let finals: Vec<StateId> = self
            .inner
            .finals
            .iter()
            .filter(|&&f| canon[f - 1] != 0)
            .map(|&f| canon[f - 1])
            .collect();
        Automaton::new(order.len(), 1, finals, edges, self.inner.alphabet.clone())
            .expect("canonical relabeling is structurally valid")
    }

    pub fn isomorphic(&self, other: &Dfa) -> bool {
        self.canonical() == other.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    #[test]
    fn parses_width_two() {
        let a = testdata::width_two_automaton();
        assert_eq!(a.state_count(), 7);
        assert_eq!(a.edges().len(), 10);
        assert_eq!(a.finals(), &[4, 5, 6]);
    }

    #[test]
    fn one_state_automaton() {
        let a = Automaton::parse("alphabet a\nstates 1\nsource 1\nfinals 1\n").unwrap();
        assert_eq!(a.state_count(), 1);
        assert!(a.accepts_nfa(&[]));
    }

    #[test]
    fn rejects_undeclared_symbol() {
        let err = Automaton::parse("alphabet a b\nstates 2\nsource 1\nfinals 2\nedge 1 2 c\n")
            .unwrap_err();
        assert!(matches!(err, ParseError::UndeclaredSymbol { symbol, .. } if symbol == "c"));
    }

    #[test]
    fn rejects_duplicate_edge_and_bad_ids() {
        let err =
            Automaton::parse("alphabet a\nstates 2\nsource 1\nfinals 2\nedge 1 2 a\nedge 1 2 a\n")
                .unwrap_err();
        assert!(matches!(err, ParseError::DuplicateEdge { line: 6 }));
        let err = Automaton::parse("alphabet a\nstates 2\nsource 1\nfinals 3\n").unwrap_err();
        assert!(matches!(err, ParseError::StateOutOfRange { id: 3, .. }));
    }

    #[test]
    fn source_is_renumbered_first() {
        let a = Automaton::parse("alphabet a\nstates 2\nsource 2\nfinals 1\nedge 2 1 a\n").unwrap();
        assert_eq!(a.source(), 1);
        assert_eq!(
            a.edges(),
            &[Edge {
                from: 1,
                to: 2,
                label: Symbol(0)
            }]
        );
        assert_eq!(a.finals(), &[2]);
    }

    #[test]
    fn text_round_trip() {
        for a in [
            testdata::width_two_automaton(),
            testdata::wheeler_nfa(),
            testdata::shared_lang_split_a(),
        ] {
            assert_eq!(Automaton::parse(&a.to_text()).unwrap(), a);
        }
    }

    #[test]
    fn validate_width_two() {
        let report = testdata::width_two_automaton().validate();
        assert!(report.is_deterministic);
        assert!(report.is_trim());
        assert!(report.errors.is_empty());
    }

    #[test]
    fn validate_flags_isolated_state() {
        let a = Automaton::parse("alphabet a\nstates 3\nsource 1\nfinals 2\nedge 1 2 a\n").unwrap();
        let report = a.validate();
        assert_eq!(report.unreachable, vec![3]);
    }

    #[test]
    fn wheeler_is_nondeterministic() {
        assert!(!testdata::wheeler_nfa().validate().is_deterministic);
    }

    #[test]
    fn trim_is_identity_on_width_two() {
        let a = testdata::width_two_automaton();
        assert_eq!(a.trim().unwrap(), a);
    }

    #[test]
    fn trim_removes_dead_and_unreachable_states() {
        // The running example with a dead sink appended.
        let mut text = testdata::WIDTH_TWO_DFA.replace("states 7", "states 8");
        text.push_str("edge 1 8 c\n");
        let a = Automaton::parse(&text).unwrap();
        assert_eq!(a.trim().unwrap(), testdata::width_two_automaton());

        // Unreachable final state.
        let a =
            Automaton::parse("alphabet a\nstates 3\nsource 1\nfinals 2 3\nedge 1 2 a\n").unwrap();
        assert_eq!(a.trim().unwrap().state_count(), 2);
    }

    #[test]
    fn trim_rejects_empty_language() {
        let a = Automaton::parse("alphabet a\nstates 2\nsource 1\nfinals\nedge 1 2 a\n").unwrap();
        assert!(matches!(a.trim(), Err(AutomatonError::EmptyLanguage)));
    }

    #[test]
    fn run_and_accept_on_width_two() {
        let d = testdata::width_two();
        let w = |s: &str| d.alphabet().parse_word(s).unwrap();
        assert_eq!(d.run(&w("ab")), Some(6));
        assert!(d.accepts(&w("ab")));
        assert_eq!(d.run(&w("")), Some(1));
        assert!(!d.accepts(&w("")));
        assert_eq!(d.run(&w("ba")), None);
        assert!(!d.accepts(&w("ba")));
        assert!(d.accepts(&w("abaa")));
    }

    #[test]
    fn minimize_merges_shared_lang_variants() {
        let d1 = testdata::shared_lang_min_dfa();
        let d2 = Dfa::try_from(testdata::shared_lang_split_a()).unwrap();
        let d3 = Dfa::try_from(testdata::shared_lang_split_b()).unwrap();
        let m2 = d2.minimize();
        let m3 = d3.minimize();
        assert_eq!(m2.state_count(), 6);
        assert!(m2.isomorphic(&d1));
        assert!(m3.isomorphic(&d1));
        assert!(d1.minimize().isomorphic(&d1));
    }

    #[test]
    fn multi_character_tokens_parse_as_words() {
        let alpha = Alphabet::new(["lo", "hi"]).unwrap();
        assert_eq!(
            alpha.parse_word("lo hi lo").unwrap(),
            vec![Symbol(0), Symbol(1), Symbol(0)]
        );
        assert!(
            alpha.parse_word("lohi").is_err(),
            "no splitting of multi-char tokens"
        );
        assert_eq!(alpha.render_word(&[Symbol(1), Symbol(0)]), "hi lo");

        let single = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(single.parse_word("ab").unwrap(), vec![Symbol(0), Symbol(1)]);
        assert_eq!(single.render_word(&[Symbol(0), Symbol(1)]), "ab");
    }

    #[test]
    fn colex_compare_words() {
        let a = Symbol(0);
        let b = Symbol(1);
        // a suffix is smaller; otherwise the last differing position decides
        assert_eq!(colex_cmp(&[a], &[b, a]), Ordering::Less);
        assert_eq!(colex_cmp(&[b, a], &[a, b]), Ordering::Less);
        assert_eq!(colex_cmp(&[], &[a]), Ordering::Less);
        assert!(is_suffix(&[a], &[b, a]));
        assert!(!is_suffix(&[b], &[b, a]));
    }
}
