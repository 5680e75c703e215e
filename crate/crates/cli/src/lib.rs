//! Command-line front end: every calculus operation behind one binary,
//! with plain-text or JSON output.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 precondition violation,
//! 3 internal-consistency failure (a stalled or mismatched sequence, or a
//! failed self-check).

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use wormcalc::{
    compare_worms, consistency_sequence, equiv, hyperexp, hyperlog, lt_at, oracle, order_type,
    order_type_at, parse_ordinal, parse_worm, print_ordinal, print_worm, worm_of, Error, Ordinal,
};

#[derive(Parser)]
#[command(
    name = "wormcalc",
    version,
    about = "Exact calculus for worms: consistency orderings, order types, \
             hyperexponentials, and consistency sequences",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit one JSON object instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Read worms as compact digit strings (2103 instead of [2, 1, 0, 3])
    #[arg(long, global = true)]
    compact: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order type of a worm, overall or as seen at a level
    Ot {
        worm: String,
        /// Level to view the worm at
        #[arg(long)]
        xi: Option<String>,
    },
    /// Compare two worms in the consistency order at a level
    Cmp {
        a: String,
        b: String,
        /// Level to compare at (0 gives the linear order)
        #[arg(long)]
        xi: Option<String>,
    },
    /// Full consistency sequence of a worm, one step per line
    Seq { worm: String },
    /// Hyperexponential of an ordinal at a level
    Hexp { xi: String, alpha: String },
    /// Hyperlogarithm of an ordinal at a level
    Hlog { xi: String, alpha: String },
    /// A worm whose order type is the given ordinal
    Wormof { ordinal: String },
    /// Parse an ordinal expression and print its normal form
    Norm { ordinal: String },
    /// Exhaustive cross-check over all small worms
    Selfcheck {
        /// Maximum worm length to enumerate
        #[arg(long, default_value_t = 5)]
        len: usize,
        /// Comma-separated worm entries
        #[arg(long, default_value = "0,1")]
        alphabet: String,
    },
}

/// Runs one invocation. `argv` includes the program name; diagnostics go to
/// `err`, results to `out`. Returns the process exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(stream, "{e}");
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<wormcalc::ParseError> for Failure {
    fn from(e: wormcalc::ParseError) -> Failure {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::SequenceStalled { .. } | Error::SequenceMismatch { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let emit =
        |out: &mut dyn Write, name: &str, inputs: Vec<String>, result: Value, text: String| {
            if cli.json {
                let object = json!({ "command": name, "inputs": inputs, "result": result });
                let _ = writeln!(out, "{object}");
            } else {
                let _ = writeln!(out, "{text}");
            }
        };

    match &cli.command {
        Command::Ot { worm, xi } => {
            let a = parse_worm(worm, cli.compact)?;
            let mut inputs = vec![print_worm(&a)];
            let value = match xi {
                None => order_type(&a),
                Some(xi) => {
                    let level = parse_ordinal(xi)?;
                    inputs.push(print_ordinal(&level));
                    order_type_at(&a, &level)
                }
            };
            let text = print_ordinal(&value);
            emit(out, "ot", inputs, json!(text.clone()), text);
        }
        Command::Cmp { a, b, xi } => {
            let left = parse_worm(a, cli.compact)?;
            let right = parse_worm(b, cli.compact)?;
            let mut inputs = vec![print_worm(&left), print_worm(&right)];
            let level = match xi {
                None => Ordinal::zero(),
                Some(xi) => {
                    let level = parse_ordinal(xi)?;
                    inputs.push(print_ordinal(&level));
                    level
                }
            };
            let verdict = if level.is_zero() {
                compare_worms(&left, &right).to_string()
            } else if lt_at(&left, &right, &level) {
                "LT".to_string()
            } else if lt_at(&right, &left, &level) {
                "GT".to_string()
            } else if equiv(&left, &right) {
                "EQ".to_string()
            } else {
                "incomparable".to_string()
            };
            emit(out, "cmp", inputs, json!(verdict.clone()), verdict);
        }
        Command::Seq { worm } => {
            let a = parse_worm(worm, cli.compact)?;
            let seq = consistency_sequence(&a)?;
            let text = seq
                .steps()
                .iter()
                .map(|s| format!("{}: {}", print_ordinal(&s.start), print_ordinal(&s.value)))
                .collect::<Vec<_>>()
                .join("\n");
            emit(out, "seq", vec![print_worm(&a)], seq.to_json(), text);
        }
        Command::Hexp { xi, alpha } => {
            let level = parse_ordinal(xi)?;
            let x = parse_ordinal(alpha)?;
            let value = print_ordinal(&hyperexp(&level, &x));
            let inputs = vec![print_ordinal(&level), print_ordinal(&x)];
            emit(out, "hexp", inputs, json!(value.clone()), value);
        }
        Command::Hlog { xi, alpha } => {
            let level = parse_ordinal(xi)?;
            let x = parse_ordinal(alpha)?;
            let value = print_ordinal(&hyperlog(&level, &x));
            let inputs = vec![print_ordinal(&level), print_ordinal(&x)];
            emit(out, "hlog", inputs, json!(value.clone()), value);
        }
        Command::Wormof { ordinal } => {
            let x = parse_ordinal(ordinal)?;
            let text = print_worm(&worm_of(&x));
            emit(
                out,
                "wormof",
                vec![print_ordinal(&x)],
                json!(text.clone()),
                text,
            );
        }
        Command::Norm { ordinal } => {
            let text = print_ordinal(&parse_ordinal(ordinal)?);
            emit(out, "norm", vec![text.clone()], json!(text.clone()), text);
        }
        Command::Selfcheck { len, alphabet } => {
            let entries = parse_alphabet(alphabet)?;
            let report = oracle::exhaustive_cross_check(*len, &entries)?;
            let mut inputs = vec![len.to_string()];
            inputs.extend(entries.iter().map(print_ordinal));
            emit(
                out,
                "selfcheck",
                inputs,
                report.to_json(),
                report.to_string(),
            );
            if !report.pass {
                return Ok(3);
            }
        }
    }
    Ok(0)
}

fn parse_alphabet(text: &str) -> Result<Vec<Ordinal>, Failure> {
    text.split(',')
        .map(|part| parse_ordinal(part.trim()).map_err(Failure::from))
        .collect()
}
