//! `g2`: command-line front end for the type G2 crystal library.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use g2_crystal::canonical::{canonical_basis, check_global_basis};
use g2_crystal::crystal::{component_graph, similar};
use g2_crystal::plactic::{p_symbol, q_symbol, rs_pair};
use g2_crystal::tableaux::{count_oscillating_by_final_shape, enumerate_tableaux};
use g2_crystal::{Error, Node, Shape, Word};

#[derive(Parser)]
#[command(
    name = "g2",
    version,
    about = "Crystal combinatorics and canonical bases of type G2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The connected component of the crystal graph containing a word.
    Component {
        /// Space-separated letters, e.g. "2 0 -3".
        word: String,
        /// Graphviz output.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// The P-symbol and Q-symbol of a word.
    Insert {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Whether two words are plactically congruent (exit status 0 or 1).
    Equiv { w1: String, w2: String },
    /// The matrix of the canonical basis of V(l1 Λ1 + l2 Λ2) on tabloids.
    Canonical {
        l1: usize,
        l2: usize,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// The tableaux of shape (l1, l2), sorted.
    Tableaux { l1: usize, l2: usize },
    /// Runs the consistency checks on all words up to a given length.
    Selftest {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

/// Failure of a command, mapped to the exit status.
enum Failure {
    Parse(String),
    Internal(String),
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidLetter(_) | Error::InvalidPolynomial(_) => Failure::Parse(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse::<Word>().map_err(Failure::from)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Component { word, dot, json } => {
            let g = component_graph(&parse_word(&word)?);
            if dot {
                print!("{}", g.to_dot());
            } else if json {
                println!("{}", g.to_json());
            } else {
                println!("highest weight vertex: {}", g.highest_weight);
                println!("weight: {}", g.highest_weight.weight());
                println!("vertices: {}", g.len());
                for v in &g.vertices {
                    println!("{v}");
                }
            }
        }
        Command::Insert { word, json } => {
            let pair = rs_pair(&parse_word(&word)?)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&pair).expect("pairs always serialize")
                );
            } else {
                println!("P:\n{}", pair.p);
                let shapes: Vec<String> = pair.q.shapes().iter().map(Shape::to_string).collect();
                if shapes.is_empty() {
                    println!("Q: (empty)");
                } else {
                    println!("Q: {}", shapes.join(" "));
                }
            }
        }
        Command::Equiv { w1, w2 } => {
            let (a, b) = (parse_word(&w1)?, parse_word(&w2)?);
            let equal = p_symbol(&a)? == p_symbol(&b)?;
            println!("{equal}");
            if !equal {
                return Err(Failure::Negative);
            }
        }
        Command::Canonical {
            l1,
            l2,
            csv: _,
            json,
        } => {
            let d = canonical_basis(Shape::new(l1, l2))?;
            if json {
                println!("{}", d.to_json());
            } else {
                print!("{}", d.to_csv());
            }
        }
        Command::Tableaux { l1, l2 } => {
            for t in enumerate_tableaux(Shape::new(l1, l2)) {
                println!("{}", t.reading());
            }
        }
        Command::Selftest { max_len } => selftest(max_len)?,
    }
    Ok(())
}

fn words_up_to(len: usize) -> Vec<Word> {
    (0..=len).flat_map(Word::all_of_length).collect()
}

/// Key of the position of a word in its connected component, up to isomorphism.
fn crystal_key(w: &Word) -> (Vec<Node>, String) {
    let (hw, path) = w.raise_to_highest_weight();
    (path, hw.weight().to_string())
}

fn selftest(max_len: usize) -> Result<(), Failure> {
    let words = words_up_to(max_len);
    let mut failed = Vec::new();
    let mut report = |name: &str, ok: bool, detail: String| {
        println!("[{}] {name}: {detail}", if ok { "ok" } else { "FAILED" });
        if !ok {
            failed.push(name.to_string());
        }
    };

    let mut bad = 0;
    let mut classes: BTreeMap<String, BTreeSet<(Vec<Node>, String)>> = BTreeMap::new();
    let mut keys: BTreeMap<(Vec<Node>, String), BTreeSet<String>> = BTreeMap::new();
    let mut qs: BTreeMap<String, BTreeSet<Word>> = BTreeMap::new();
    for w in &words {
        let pair = rs_pair(w)?;
        if !(pair.p.is_tableau() && similar(w, &pair.p.reading())) {
            bad += 1;
        }
        let p = pair.p.reading().to_string();
        classes.entry(p.clone()).or_default().insert(crystal_key(w));
        keys.entry(crystal_key(w)).or_default().insert(p);
        qs.entry(format!("{:?}", pair.q.shapes()))
            .or_default()
            .insert(w.raise_to_highest_weight().0);
    }
    report(
        "insertion",
        bad == 0,
        format!("{} words, {bad} failures", words.len()),
    );
    let congruence_ok =
        classes.values().all(|s| s.len() == 1) && keys.values().all(|s| s.len() == 1);
    report(
        "congruence = similarity",
        congruence_ok,
        format!("{} classes", classes.len()),
    );
    report(
        "Q-symbol theorem",
        qs.values().all(|s| s.len() == 1),
        format!("{} Q-symbols", qs.len()),
    );

    let mut notes = Vec::new();
    let mut rs_ok = true;
    for len in 0..=max_len {
        let pairs: BTreeSet<_> = Word::all_of_length(len)
            .iter()
            .map(rs_pair)
            .collect::<Result<_, _>>()?;
        let count: u64 = count_oscillating_by_final_shape(len)
            .iter()
            .map(|(s, n)| n * enumerate_tableaux(*s).len() as u64)
            .sum();
        rs_ok &= pairs.len() as u64 == 7u64.pow(len as u32) && count == pairs.len() as u64;
        notes.push(format!("{}", pairs.len()));
    }
    report(
        "RS bijection",
        rs_ok,
        format!("images {}", notes.join(", ")),
    );

    let q_ok = words.iter().all(|w| q_symbol(w).is_ok());
    report(
        "oscillating Q-symbols",
        q_ok,
        format!("{} words", words.len()),
    );

    let mut shapes_ok = true;
    let mut notes = Vec::new();
    for shape in [
        Shape::new(1, 0),
        Shape::new(0, 1),
        Shape::new(2, 0),
        Shape::new(1, 1),
    ] {
        let d = canonical_basis(shape)?;
        for (k, t) in d.tableaux().iter().enumerate() {
            shapes_ok &= check_global_basis(t, d.global_basis(k)).is_ok();
        }
        notes.push(format!("{shape}: {}", d.tableaux().len()));
    }
    report("canonical basis", shapes_ok, notes.join(", "));

    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "failed suites: {}",
            failed.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
