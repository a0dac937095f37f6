//! `colex`: one binary exposing the library operations as subcommands with
//! stable text/JSON interfaces.
//!
//! Exit codes: 0 success, 1 negative decision (not equivalent, not a
//! member, pattern absent), 2 usage or input error, 3 budget or cap abort.

mod benchrun;
mod selftest;

use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use colex::abwt::{build_abwt, invert_abwt_dfa, reconstruct_nfa_exhaustive, Abwt, AbwtError};
use colex::index::{read_index_file, write_index_file, Index};
use colex::lang_width::{
    decide_width_leq, SearchMode, WitnessCertificate, WitnessError, DEFAULT_BUDGET_BYTES,
};
use colex::order::{compute_max_colex_order, dfa_width};
use colex::powerset::{
    nfa_equivalent, nfa_membership, powerset_construct, PowersetError, DEFAULT_POWERSET_CAP,
};
use colex::{Automaton, Dfa, StateId, Word};

#[derive(Parser)]
#[command(
    name = "colex",
    version,
    about = "Co-lex orders, widths, and BWT-style automaton indexing"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct JsonFlag {
    /// Emit machine-readable JSON (errors included).
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check determinism, reachability, and usefulness of an automaton.
    Validate {
        input: PathBuf,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Minimize a (trim, deterministic) automaton.
    Minimize {
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Width of a DFA with a witnessing chain partition, as JSON.
    Width { input: PathBuf },
    /// Hasse diagram of the maximum co-lex order of a DFA, as DOT.
    Order { input: PathBuf },
    /// Minimum chain partition of the maximum co-lex order, as JSON.
    Chains { input: PathBuf },
    /// Determinize by the subset construction.
    Powerset {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Abort once this many subset states have been materialized.
        #[arg(long, default_value_t = DEFAULT_POWERSET_CAP)]
        cap: usize,
        /// A width bound for the input; when given, the stats block also
        /// reports the size and width bounds it implies.
        #[arg(long)]
        p: Option<usize>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Language equality of two automata (exit 0 yes, 1 no).
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = DEFAULT_POWERSET_CAP)]
        cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Word membership by subset simulation (exit 0 yes, 1 no).
    Member {
        input: PathBuf,
        word: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Bounds and decisions for the deterministic width of the language.
    #[command(name = "lang-width")]
    LangWidth {
        input: PathBuf,
        /// Decide whether the language width is at most this value.
        #[arg(long)]
        p: usize,
        /// `exact` derives the complete length cap; `search` uses --cap.
        #[arg(long, default_value = "search")]
        mode: String,
        /// Length cap on reaching words and cycle labels (search mode).
        #[arg(long)]
        cap: Option<usize>,
        /// Work/memory budget for the table-driven search.
        #[arg(long, default_value_t = DEFAULT_BUDGET_BYTES)]
        budget_bytes: u64,
        /// Accepted for uniformity; the output is always JSON.
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Build, invert, or print the five-sequence transform.
    Abwt {
        #[command(subcommand)]
        command: AbwtCommand,
    },
    /// Build and query the forward-search index.
    Index {
        #[command(subcommand)]
        command: IndexCommand,
    },
    /// Timing runs over seeded random inputs, as CSV.
    Bench {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run the built-in golden-example suite.
    Selftest,
}

#[derive(Subcommand)]
enum AbwtCommand {
    /// Build the transform of an automaton under its maximum co-lex order
    /// (DFAs) and write it to a file or dump it as text.
    Build {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the five sequences textually instead of writing binary.
        #[arg(long)]
        dump: bool,
    },
    /// Reconstruct the automaton encoded by a transform.
    Invert {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Use the exponential set-listing procedure that also handles
        /// path-distinguished NFAs (hard-capped at 12 states).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Print the five sequences of a stored transform.
    Dump { file: PathBuf },
}

#[derive(Subcommand)]
enum IndexCommand {
    /// Build the index of an automaton and store it.
    Build {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Query a stored index. Without --pattern, patterns are read one per
    /// line from standard input and answered as JSON lines.
    Query {
        file: PathBuf,
        #[arg(long)]
        pattern: Option<String>,
        /// exists | count | locate | member
        #[arg(long, default_value = "exists")]
        op: String,
        #[command(flatten)]
        json: JsonFlag,
    },
}

enum Outcome {
    Success,
    Negative,
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Budget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<PowersetError> for CliError {
    fn from(e: PowersetError) -> Self {
        match e {
            PowersetError::CapExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<AbwtError> for CliError {
    fn from(e: AbwtError) -> Self {
        CliError::Usage(e.to_string())
    }
}

macro_rules! usage_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(
    colex::automaton::ParseError,
    colex::automaton::AutomatonError,
    colex::order::OrderError,
    colex::index::IndexError,
    std::io::Error
);

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes instead of panicking on
    // the next print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let json = wants_json(&cli.command);
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            let (kind, message, code) = match &e {
                CliError::Usage(m) => ("usage", m, 2),
                CliError::Budget(m) => ("budget", m, 3),
            };
            if json {
                println!("{}", json!({"error": {"kind": kind, "message": message}}));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}

fn wants_json(command: &Command) -> bool {
    match command {
        Command::Validate { json, .. }
        | Command::Powerset { json, .. }
        | Command::Equiv { json, .. }
        | Command::Member { json, .. } => json.json,
        Command::Index {
            command: IndexCommand::Query { .. },
        } => true,
        Command::Width { .. } | Command::Chains { .. } | Command::LangWidth { .. } => true,
        _ => false,
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { input, json } => {
            let a = load_automaton(&input)?;
            let report = a.validate();
            if json.json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                println!("deterministic: {}", report.is_deterministic);
                println!("trim: {}", report.is_trim());
                if !report.unreachable.is_empty() {
                    println!("unreachable: {:?}", report.unreachable);
                }
                if !report.not_useful.is_empty() {
                    println!("not useful: {:?}", report.not_useful);
                }
                for e in &report.errors {
                    println!("problem: {e}");
                }
            }
            Ok(Outcome::Success)
        }
        Command::Minimize { input, output } => {
            let d = load_trim_dfa(&input)?;
            emit(output.as_deref(), &d.minimize().to_text())?;
            Ok(Outcome::Success)
        }
        Command::Width { input } | Command::Chains { input } => {
            let d = load_trim_dfa(&input)?;
            let (width, cp) = dfa_width(&d);
            println!(
                "{}",
                json!({"width": width, "chains": cp.chains, "antichain": cp.antichain})
            );
            Ok(Outcome::Success)
        }
        Command::Order { input } => {
            let d = load_trim_dfa(&input)?;
            let po = compute_max_colex_order(&d);
            print!("{}", po.to_dot("colex_order"));
            Ok(Outcome::Success)
        }
        Command::Powerset {
            input,
            output,
            cap,
            p,
            json: _,
        } => {
            let a = load_trim(&input)?;
            let mut result = powerset_construct(&a, cap)?;
            emit(output.as_deref(), &result.dfa.to_text())?;
            match p {
                None => {
                    println!(
                        "{}",
                        serde_json::to_string(&result.stats).expect("stats serialize")
                    )
                }
                Some(p) => {
                    let report = colex::powerset::check_powerset_bounds(&a, p, cap)?;
                    result.stats.p_used = Some(p);
                    result.stats.bound = Some(report.state_bound);
                    let mut value = serde_json::to_value(&result.stats).expect("stats serialize");
                    value["bounds"] = serde_json::to_value(&report).expect("report serializes");
                    println!("{value}");
                }
            }
            Ok(Outcome::Success)
        }
        Command::Equiv {
            first,
            second,
            cap,
            json,
        } => {
            let a = load_trim(&first)?;
            let b = load_trim(&second)?;
            let equivalent = nfa_equivalent(&a, &b, cap)?;
            if json.json {
                println!("{}", json!({"equivalent": equivalent}));
            } else {
                println!(
                    "{}",
                    if equivalent {
                        "equivalent"
                    } else {
                        "not equivalent"
                    }
                );
            }
            Ok(if equivalent {
                Outcome::Success
            } else {
                Outcome::Negative
            })
        }
        Command::Member { input, word, json } => {
            let a = load_trim(&input)?;
            let w = a.alphabet().parse_word(&word)?;
            let member = nfa_membership(&a, &w);
            if json.json {
                println!("{}", json!({"member": member}));
            } else {
                println!("{}", if member { "member" } else { "not a member" });
            }
            Ok(if member {
                Outcome::Success
            } else {
                Outcome::Negative
            })
        }
        Command::LangWidth {
            input,
            p,
            mode,
            cap,
            budget_bytes,
            json: _,
        } => {
            let d = load_trim_dfa(&input)?;
            let mode = match mode.as_str() {
                "exact" => SearchMode::Exact,
                "search" | "bounded_search" => SearchMode::BoundedSearch,
                other => return Err(CliError::Usage(format!("unknown mode {other:?}"))),
            };
            if p == 0 {
                return Err(CliError::Usage("--p must be at least 1".into()));
            }
            let decision = decide_width_leq(&d, p, mode, cap, budget_bytes)?;
            let mut value = serde_json::to_value(&decision).expect("decision serializes");
            if let Some(cert) = &decision.certificate {
                value["certificate"] = render_certificate(cert, d.alphabet());
            }
            println!("{value}");
            Ok(Outcome::Success)
        }
        Command::Abwt { command } => run_abwt(command),
        Command::Index { command } => run_index(command),
        Command::Bench { seed } => {
            benchrun::run(seed);
            Ok(Outcome::Success)
        }
        Command::Selftest => {
            if selftest::run() {
                Ok(Outcome::Success)
            } else {
                Ok(Outcome::Negative)
            }
        }
    }
}

fn run_abwt(command: AbwtCommand) -> Result<Outcome, CliError> {
    match command {
        AbwtCommand::Build {
            input,
            output,
            dump,
        } => {
            let a = load_trim(&input)?;
            let (abwt, _) = transform_of(&a)?;
            if dump || output.is_none() {
                print!("{}", abwt.dump());
            }
            if let Some(path) = output {
                let mut bytes = Vec::new();
                abwt.write_to(&mut bytes).map_err(AbwtError::from)?;
                fs::write(path, bytes)?;
            }
            Ok(Outcome::Success)
        }
        AbwtCommand::Invert {
            file,
            output,
            exhaustive,
        } => {
            let abwt = Abwt::from_bytes(&fs::read(&file)?)?;
            let automaton = if exhaustive {
                reconstruct_nfa_exhaustive(&abwt)?
            } else {
                invert_abwt_dfa(&abwt)?.into_automaton()
            };
            emit(output.as_deref(), &automaton.to_text())?;
            Ok(Outcome::Success)
        }
        AbwtCommand::Dump { file } => {
            let abwt = Abwt::from_bytes(&fs::read(&file)?)?;
            print!("{}", abwt.dump());
            Ok(Outcome::Success)
        }
    }
}

fn run_index(command: IndexCommand) -> Result<Outcome, CliError> {
    match command {
        IndexCommand::Build { input, output } => {
            let a = load_trim(&input)?;
            let (abwt, map) = transform_of(&a)?;
            let mut bytes = Vec::new();
            write_index_file(&mut bytes, &abwt, &map)?;
            fs::write(output, bytes)?;
            Ok(Outcome::Success)
        }
        IndexCommand::Query {
            file,
            pattern,
            op,
            json: _,
        } => {
            let (index, map) = read_index_file(&mut fs::read(&file)?.as_slice())?;
            match pattern {
                Some(text) => {
                    let (value, positive) = answer_query(&index, &map, &op, &text)?;
                    print_query(&value);
                    Ok(if positive {
                        Outcome::Success
                    } else {
                        Outcome::Negative
                    })
                }
                None => {
                    // Batch mode: one pattern per line on stdin, one JSON
                    // object per line on stdout; the index is loaded once.
                    let stdin = std::io::stdin();
                    let mut all_positive = true;
                    for line in stdin.lock().lines() {
                        let (value, positive) = answer_query(&index, &map, &op, &line?)?;
                        println!("{value}");
                        all_positive &= positive;
                    }
                    Ok(if all_positive {
                        Outcome::Success
                    } else {
                        Outcome::Negative
                    })
                }
            }
        }
    }
}

fn answer_query(
    index: &Index,
    map: &[StateId],
    op: &str,
    pattern_text: &str,
) -> Result<(serde_json::Value, bool), CliError> {
    let alphabet = &index.abwt().alphabet;
    let pattern: Word = alphabet.parse_word(pattern_text)?;
    let rendered = alphabet.render_word(&pattern);
    let (value, positive) = match op {
        "exists" => {
            let exists = index.exists(&pattern);
            (json!({"pattern": rendered, "exists": exists}), exists)
        }
        "count" => {
            let count = index.count(&pattern);
            (json!({"pattern": rendered, "count": count}), count > 0)
        }
        "locate" => {
            let positions = index.locate(&index.match_subpaths(&pattern));
            let mut states: Vec<StateId> = positions.iter().map(|&v| map[v - 1]).collect();
            states.sort_unstable();
            let positive = !states.is_empty();
            (json!({"pattern": rendered, "states": states}), positive)
        }
        "member" => {
            let (_, member) = index.accepts_from_source(&pattern);
            (json!({"pattern": rendered, "member": member}), member)
        }
        other => return Err(CliError::Usage(format!("unknown query op {other:?}"))),
    };
    Ok((value, positive))
}

fn print_query(value: &serde_json::Value) {
    println!("{value}");
}

/// Transform of an automaton, plus the position-to-state map. DFAs use the
/// maximum co-lex order; NFAs fall back to a searched maximal order
/// (verified against the axioms before use).
fn transform_of(a: &Automaton) -> Result<(Abwt, Vec<StateId>), CliError> {
    let po = if a.is_deterministic() {
        let d = Dfa::try_from(a.clone())?;
        compute_max_colex_order(&d)
    } else {
        let po = colex::order::greedy_maximal_colex_order(a);
        if !colex::order::check_colex_axioms(a, &po)?.ok() {
            return Err(CliError::Usage(
                "could not find a valid co-lex order for the automaton".into(),
            ));
        }
        po
    };
    let cp = colex::order::chain_partition(&po).with_source_first(a.source())?;
    let abwt = build_abwt(a, &po, &cp)?;
    let map: Vec<StateId> = cp.chains.iter().flatten().copied().collect();
    Ok((abwt, map))
}

fn render_certificate(cert: &WitnessCertificate, alphabet: &colex::Alphabet) -> serde_json::Value {
    json!({
        "k": cert.k,
        "states": cert.states,
        "mus": cert.mus.iter().map(|w| alphabet.render_word(w)).collect::<Vec<_>>(),
        "gamma": alphabet.render_word(&cert.gamma),
        "side": serde_json::to_value(cert.side).expect("side serializes"),
    })
}

fn load_automaton(path: &Path) -> Result<Automaton, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(Automaton::parse(&text)?)
}

fn load_trim(path: &Path) -> Result<Automaton, CliError> {
    Ok(load_automaton(path)?.trim()?)
}

fn load_trim_dfa(path: &Path) -> Result<Dfa, CliError> {
    Ok(Dfa::try_from(load_trim(path)?)?)
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut f = fs::File::create(p)?;
            f.write_all(text.as_bytes())?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
