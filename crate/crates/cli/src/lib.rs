//! Command-line driver for the Schur-expansion toolkit.
//!
//! [`run`] parses an argument vector, executes one subcommand against the
//! library crates, writes the result to the supplied output handles, and
//! returns a process exit code:
//!
//! * `0` — success, result on stdout;
//! * `1` — `verify` found a disagreement (a reproducing input is printed
//!   to stderr);
//! * `2` — input validation failure, diagnostic on stderr;
//! * `3` — a reference computation exceeded its budget.
//!
//! Output is deterministic: terms are listed in partition order, maps are
//! rendered from ordered containers, and no subcommand reads stdin or the
//! environment.  `--threads` affects only the transition-tree walk inside
//! `expand`/`verify`, never the result.

mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use affperm::{AffinePermutation, Diagram};
use bridge::{CylindricSkewShape, KBruhatInterval};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use oracle::{OracleBudget, OracleError};
use schurring::{Partition, SchurVector};

use verify::VerifyError;

#[derive(Parser)]
#[command(
    name = "positroid",
    version,
    about = "Schur expansions of positroid classes of bounded affine permutations",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the class of a bounded affine permutation in the Schur basis.
    Expand(ExpandArgs),
    /// Expand a Schubert-times-Schur product over a k-Bruhat interval.
    Interval(IntervalArgs),
    /// Expand the toric Schur polynomial of a cylindric skew shape.
    Toric(ToricArgs),
    /// Decompose the Schur module of a diagram with at most three rows.
    #[command(name = "three-row")]
    ThreeRow(ThreeRowArgs),
    /// Compute a Schur-module character by brute-force rank computations.
    #[command(name = "schur-module")]
    SchurModule(SchurModuleArgs),
    /// Cross-check the fast pipelines against brute-force references.
    Verify(VerifyArgs),
    /// Print the transition tree of a bounded affine permutation.
    Trace(TraceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ExpandArgs {
    /// Window of the affine permutation: comma-separated integers.
    #[arg(long)]
    window: String,
    /// Rectangle height k; the expansion lives in the k x (n-k) rectangle.
    #[arg(long)]
    k: u32,
    /// Period n; must equal the window length when given.
    #[arg(long)]
    n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for the tree walk (the result does not depend on this).
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Also emit the transition tree that produced the expansion.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct IntervalArgs {
    /// Lower permutation u in one-line notation: comma-separated values.
    #[arg(long)]
    u: String,
    /// Upper permutation v in one-line notation: comma-separated values.
    #[arg(long)]
    v: String,
    /// The k of the k-Bruhat order; also the number of Schur variables.
    #[arg(long)]
    k: u32,
    /// Symmetric-group degree n; must equal the word lengths when given.
    #[arg(long)]
    n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ToricArgs {
    /// Lower boundary word of the shape, one V or H per unit step.
    #[arg(long)]
    lower: String,
    /// Upper boundary word of the shape, one V or H per unit step.
    #[arg(long)]
    upper: String,
    /// Horizontal offset of the upper boundary relative to the lower one.
    #[arg(long, default_value_t = 0)]
    offset: i64,
    /// Expected number of V steps per period; checked against the words.
    #[arg(long)]
    k: Option<u32>,
    /// Expected period n = k + m; checked against the words.
    #[arg(long)]
    n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ThreeRowArgs {
    /// Diagram: inline "row: col,col; row: col" text or a path to a file.
    #[arg(long)]
    diagram: String,
    /// Dimension of the underlying vector space; at least 3.
    #[arg(long, default_value_t = 3)]
    k: u32,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SchurModuleArgs {
    /// Diagram: inline "row: col,col; row: col" text or a path to a file.
    #[arg(long)]
    diagram: String,
    /// Number of variables of the character (the dimension of V).
    #[arg(long)]
    k: u32,
    /// Uniform cap replacing the default budget limits.
    #[arg(long)]
    budget: Option<u64>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest period n of the permutation sweeps.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Uniform cap replacing the default budget limits.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads for the tree walks (the verdict does not depend on this).
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct TraceArgs {
    /// Window of the affine permutation: comma-separated integers.
    #[arg(long)]
    window: String,
    /// Rectangle height k of the expansion the tree computes.
    #[arg(long)]
    k: u32,
    /// Period n; must equal the window length when given.
    #[arg(long)]
    n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Everything a subcommand can fail with, keyed by exit code.
enum CliError {
    /// Exit 2: the input does not describe a valid computation.
    Usage(String),
    /// Exit 3: a reference computation exceeded its budget.
    Budget(String),
    /// Exit 1: `verify` found two pipelines in disagreement.
    Failed(String),
    /// Exit 1: an output handle went away mid-write.
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Mismatch(msg) => CliError::Failed(msg),
            VerifyError::Budget(msg) => CliError::Budget(msg),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Parses and executes one invocation, returning the process exit code.
///
/// `argv` is the full argument vector including the binary name.  Results go
/// to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    let outcome = match &cli.command {
        Command::Expand(args) => cmd_expand(args, stdout),
        Command::Interval(args) => cmd_interval(args, stdout),
        Command::Toric(args) => cmd_toric(args, stdout),
        Command::ThreeRow(args) => cmd_three_row(args, stdout),
        Command::SchurModule(args) => cmd_schur_module(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
        Command::Trace(args) => cmd_trace(args, stdout),
    };
    match outcome {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(CliError::Budget(msg)) => {
            let _ = writeln!(stderr, "budget exceeded: {msg}");
            3
        }
        Err(CliError::Failed(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            1
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn parse_int_list(text: &str, flag: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|piece| {
            let piece = piece.trim();
            piece.parse::<i64>().map_err(|_| {
                CliError::Usage(format!("{flag} entry {piece:?} is not an integer"))
            })
        })
        .collect()
}

fn check_period(declared: Option<usize>, got: usize, what: &str) -> Result<(), CliError> {
    match declared {
        Some(n) if n != got => Err(CliError::Usage(format!(
            "--n is {n} but {what} has {got} values"
        ))),
        _ => Ok(()),
    }
}

fn check_rank(k: u32, n: usize) -> Result<(), CliError> {
    if k as usize > n {
        return Err(CliError::Usage(format!("--k is {k} but the period is only {n}")));
    }
    Ok(())
}

fn load_diagram(source: &str) -> Result<Diagram, CliError> {
    let text = if Path::new(source).is_file() {
        std::fs::read_to_string(source)
            .map_err(|e| CliError::Usage(format!("cannot read diagram file {source:?}: {e}")))?
    } else {
        source.to_string()
    };
    text.parse::<Diagram>()
        .map_err(|e| CliError::Usage(format!("cannot parse diagram: {e}")))
}

fn budget_from(cap: Option<u64>) -> OracleBudget {
    cap.map(OracleBudget::with_cap).unwrap_or_default()
}

fn write_text_terms<'a>(
    out: &mut dyn Write,
    terms: impl Iterator<Item = (&'a Partition, &'a BigInt)>,
) -> Result<(), CliError> {
    let mut empty = true;
    for (shape, coeff) in terms {
        writeln!(out, "{coeff} * s{shape}")?;
        empty = false;
    }
    if empty {
        writeln!(out, "0")?;
    }
    Ok(())
}

fn json_line(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn json_number(c: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&c.to_string()).expect("integer coefficients are JSON numbers")
}

fn map_to_json(terms: &BTreeMap<Partition, BigInt>) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = terms
        .iter()
        .map(|(shape, coeff)| {
            serde_json::json!({ "partition": shape, "coeff": json_number(coeff) })
        })
        .collect();
    serde_json::json!({ "terms": terms })
}

fn cmd_expand(args: &ExpandArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let window = parse_int_list(&args.window, "--window")?;
    check_period(args.n, window.len(), "the window")?;
    let n = window.len();
    check_rank(args.k, n)?;
    let f = AffinePermutation::from_window(n, window).map_err(usage)?;
    let expansion =
        lstree::expand_with_threads(&f, args.k, args.threads.max(1)).map_err(usage)?;
    let tree = if args.trace {
        Some(lstree::trace(&f, args.k).map_err(usage)?)
    } else {
        None
    };
    match args.format {
        Format::Text => {
            if let Some(tree) = &tree {
                write!(out, "{tree}")?;
            }
            write_text_terms(out, expansion.result().terms())
        }
        Format::Json => {
            let mut value = serde_json::to_value(&expansion).expect("expansion serialises");
            if let Some(tree) = tree {
                let object = value.as_object_mut().expect("expansion is an object");
                object.insert("trace".to_owned(), tree.into());
            }
            json_line(out, &value)
        }
    }
}

fn cmd_interval(args: &IntervalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let u = parse_int_list(&args.u, "--u")?;
    let v = parse_int_list(&args.v, "--v")?;
    check_period(args.n, u.len(), "--u")?;
    check_period(args.n, v.len(), "--v")?;
    let interval = KBruhatInterval::new(args.k, &u, &v).map_err(usage)?;
    let product = bridge::schubert_times_schur(&interval);
    match args.format {
        Format::Text => write_text_terms(out, product.iter()),
        Format::Json => {
            let m = interval.n() as u32 - interval.k();
            let mut vector = SchurVector::zero(interval.k(), m);
            for (shape, coeff) in &product {
                vector.insert(shape.clone(), coeff.clone());
            }
            let mut value = serde_json::to_value(&vector).expect("vector serialises");
            let object = value.as_object_mut().expect("vector is an object");
            object.insert("u".to_owned(), serde_json::json!(u));
            object.insert("v".to_owned(), serde_json::json!(v));
            json_line(out, &value)
        }
    }
}

fn cmd_toric(args: &ToricArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let shape =
        CylindricSkewShape::from_words(&args.lower, &args.upper, args.offset).map_err(usage)?;
    if let Some(k) = args.k {
        if k != shape.k() {
            return Err(CliError::Usage(format!(
                "--k is {k} but the boundary words have {} V steps",
                shape.k()
            )));
        }
    }
    check_period(args.n, shape.n(), "each boundary word")?;
    let vector = bridge::toric_gw_expand(&shape).map_err(usage)?;
    match args.format {
        Format::Text => write_text_terms(out, vector.terms()),
        Format::Json => {
            let f = bridge::f_from_cylindric_shape(&shape).map_err(usage)?;
            let mut value = serde_json::to_value(&vector).expect("vector serialises");
            let object = value.as_object_mut().expect("vector is an object");
            object.insert("window".to_owned(), serde_json::json!(f.window()));
            object.insert("n".to_owned(), serde_json::json!(shape.n()));
            object.insert("offset".to_owned(), serde_json::json!(shape.offset()));
            json_line(out, &value)
        }
    }
}

fn cmd_three_row(args: &ThreeRowArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.k < 3 {
        return Err(CliError::Usage(format!(
            "--k is {} but the three-row decomposition needs a space of dimension at least 3",
            args.k
        )));
    }
    let diagram = load_diagram(&args.diagram)?;
    let decomposition = bridge::three_row_decompose(&diagram, args.k).map_err(usage)?;
    match args.format {
        Format::Text => write_text_terms(out, decomposition.iter()),
        Format::Json => json_line(out, &map_to_json(&decomposition)),
    }
}

fn cmd_schur_module(args: &SchurModuleArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let diagram = load_diagram(&args.diagram)?;
    let budget = budget_from(args.budget);
    let character = oracle::schur_module_character(&diagram, args.k, &budget)?;
    match args.format {
        Format::Text => write_text_terms(out, character.iter()),
        Format::Json => json_line(out, &map_to_json(&character)),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let budget = budget_from(args.budget);
    let checked = verify::run_verify(args.max_n, &budget, args.threads.max(1))?;
    writeln!(out, "OK: {checked} permutations cross-checked")?;
    Ok(())
}

fn cmd_trace(args: &TraceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let window = parse_int_list(&args.window, "--window")?;
    check_period(args.n, window.len(), "the window")?;
    let n = window.len();
    check_rank(args.k, n)?;
    let f = AffinePermutation::from_window(n, window).map_err(usage)?;
    let tree = lstree::trace(&f, args.k).map_err(usage)?;
    match args.format {
        Format::Text => {
            write!(out, "{tree}")?;
            Ok(())
        }
        Format::Json => json_line(
            out,
            &serde_json::json!({
                "window": f.window(),
                "n": n,
                "k": args.k,
                "trace": tree,
            }),
        ),
    }
}
