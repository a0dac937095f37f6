//! Co-lexicographic orders on finite automata and the data structures built
//! from them: widths and chain partitions of DFAs, width-aware
//! determinization, the deterministic width of a regular language, and a
//! BWT-style transform and index supporting subpath and membership queries.
//!
//! The universal input object is [`Automaton`]: an NFA over a totally
//! ordered alphabet with a single source, validated so that every state is
//! reachable and useful. [`Dfa`] is its deterministic refinement. On top of
//! it, [`order`] computes co-lex orders and widths, [`abwt`] builds the
//! five-sequence transform, and [`index`] turns the transform into a
//! queryable index.

// States, chain positions, and sequence offsets are 1-based throughout;
// plain index loops read better than shifted iterator chains here.
#![allow(clippy::needless_range_loop)]

pub mod abwt;
pub mod automaton;
pub mod index;
pub mod lang_width;
pub mod order;
pub mod powerset;
pub mod random;
pub mod succinct;
pub mod testdata;
mod wire;

pub use automaton::{Alphabet, Automaton, Dfa, Edge, StateId, Symbol, ValidationReport, Word};
pub use order::{AxiomReport, ChainPartition, PartialOrder};
