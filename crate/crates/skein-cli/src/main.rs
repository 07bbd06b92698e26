//! `skein`: evaluate the colored bracket invariant of singular braid words
//! and run the engine's verification batteries from the command line.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.

use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use skein_core::invariant::{
    closed_form_example1, closed_form_example2, evaluate, framing_correct, identity_checks,
    integrality_check, InvariantResult,
};
use skein_core::oracle::oracle_evaluate;
use skein_core::singular::{check_relations, parse_word, Report};
use skein_core::Bounds;

use skein_cli::wire;

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "Colored bracket invariant of singular links given as braid words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum FramingArg {
    #[default]
    Blackboard,
    Zero,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichForm {
    /// Closure of `t1 s1`: one vertex, one crossing.
    Ex1,
    /// Closure of `t1 s1 s1`: one vertex, two crossings.
    Ex2,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the invariant of the closure of a word ("-" reads stdin)
    Eval {
        word: String,
        #[arg(long, default_value_t = 2)]
        color: u8,
        #[arg(long, value_enum, default_value_t)]
        framing: FramingArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the Jones-Wenzl projector on n strands
    Jw {
        n: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify the defining relations of the singular braid monoid
    Relations {
        #[arg(long)]
        strands: u8,
        #[arg(long, default_value_t = 2)]
        color: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a closed form for a one-vertex two-strand closure at color 2n
    ClosedForm {
        which: WhichForm,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Test whether the scaled invariant of a word lies in the Laurent ring
    Integrality {
        word: String,
        #[arg(long, default_value_t = 2)]
        color: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the identity battery (expansions, vertex slides, flips) at half-color n
    Identities {
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate a classical knot word without projectors and cross-check
    Oracle {
        word: String,
        #[arg(long, default_value_t = 2)]
        color: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A failed run: exit code plus the message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn check(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("skein: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Bounds from defaults plus environment overrides.
fn bounds_from_env() -> Result<Bounds, Failure> {
    fn env_u8(var: &str) -> Result<Option<u8>, Failure> {
        match std::env::var(var) {
            Err(_) => Ok(None),
            Ok(text) => text.parse().map(Some).map_err(|_| {
                Failure::usage(format!("{var} must be a small integer, got {text:?}"))
            }),
        }
    }
    let mut b = Bounds::default();
    if let Some(v) = env_u8("SKEIN_MAX_CABLE_COLOR")? {
        b.max_cable_color = v;
    }
    if let Some(v) = env_u8("SKEIN_MAX_TOTAL_WIDTH")? {
        b.max_total_width = v;
    }
    Ok(b)
}

fn read_word_arg(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::usage(format!("reading word from stdin: {e}")))?;
    Ok(text)
}

fn parse_word_arg(arg: &str) -> Result<skein_core::singular::SingularBraidWord, Failure> {
    let text = read_word_arg(arg)?;
    // A word may also arrive as JSON: {"strands": k, "letters": [["s", i], ...]}.
    // Re-spell it in the text grammar so both forms share one validator.
    if text.trim_start().starts_with('{') {
        let w: wire::Word = serde_json::from_str(&text)
            .map_err(|e| Failure::usage(format!("word JSON: {e}")))?;
        let mut spelled = format!("strands={}", w.strands);
        for (kind, index) in &w.letters {
            spelled.push(' ');
            spelled.push_str(kind);
            spelled.push_str(&index.to_string());
        }
        return parse_word(&spelled).map_err(|e| Failure::usage(e.to_string()));
    }
    parse_word(&text).map_err(|e| Failure::usage(e.to_string()))
}

fn require_even_color(color: u8) -> Result<(), Failure> {
    if color < 2 || color % 2 != 0 {
        return Err(Failure::usage(format!("--color must be an even number >= 2, got {color}")));
    }
    Ok(())
}

fn print_report(report: &Report, format: Format, what: &str) -> Result<(), Failure> {
    match format {
        Format::Text => print!("{report}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&wire::report(report)).expect("report serializes")),
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::check(format!("{what}: some checks failed")))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let bounds = bounds_from_env()?;
    match cli.command {
        Command::Eval { word, color, framing, format } => {
            require_even_color(color)?;
            let w = parse_word_arg(&word)?;
            let mut result: InvariantResult =
                evaluate(&w, color, &bounds).map_err(|e| Failure::usage(e.to_string()))?;
            if framing == FramingArg::Zero {
                result = framing_correct(&result);
            }
            match format {
                Format::Text => println!("{}", result.value),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&wire::invariant_result(&result)).expect("result serializes"))
                }
            }
            Ok(())
        }
        Command::Jw { n, format } => {
            if n < 1 {
                return Err(Failure::usage("projector index must be at least 1"));
            }
            let f = skein_core::element::jones_wenzl(n, &bounds)
                .map_err(|e| Failure::usage(e.to_string()))?;
            match format {
                Format::Text => {
                    println!("width {}", f.width());
                    for (m, c) in f.terms() {
                        println!("{m}  {c}");
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&wire::element(&f)).expect("element serializes")),
            }
            Ok(())
        }
        Command::Relations { strands, color, format } => {
            require_even_color(color)?;
            if strands < 2 {
                return Err(Failure::usage("--strands must be at least 2"));
            }
            let report = check_relations(strands, color, &bounds)
                .map_err(|e| Failure::usage(e.to_string()))?;
            print_report(&report, format, "relations")
        }
        Command::ClosedForm { which, n, format } => {
            if n < 1 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            let color = 2 * n;
            let value = match which {
                WhichForm::Ex1 => closed_form_example1(color),
                WhichForm::Ex2 => closed_form_example2(color),
            };
            match format {
                Format::Text => println!("{value}"),
                Format::Json => {
                    let name = match which {
                        WhichForm::Ex1 => "ex1",
                        WhichForm::Ex2 => "ex2",
                    };
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&wire::closed_form(name, n, color, &value))
                            .expect("closed form serializes")
                    )
                }
            }
            Ok(())
        }
        Command::Integrality { word, color, format } => {
            require_even_color(color)?;
            let w = parse_word_arg(&word)?;
            let report =
                integrality_check(&w, color, &bounds).map_err(|e| Failure::usage(e.to_string()))?;
            match format {
                Format::Text => {
                    println!("singular letters: {}", report.singular_count);
                    println!("raw: {}", report.raw);
                    println!("scaled: {}", report.scaled);
                    println!("integral: {}", report.integral);
                    if let Some(witness) = &report.witness {
                        println!("witness: {witness}");
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&wire::integrality(&report)).expect("report serializes"))
                }
            }
            if report.integral {
                Ok(())
            } else {
                Err(Failure::check("scaled value is not a Laurent polynomial"))
            }
        }
        Command::Identities { n, format } => {
            if n < 1 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            let report =
                identity_checks(n, &bounds).map_err(|e| Failure::usage(e.to_string()))?;
            print_report(&report, format, "identities")
        }
        Command::Oracle { word, color, format } => {
            require_even_color(color)?;
            let w = parse_word_arg(&word)?;
            let oracle = oracle_evaluate(&w, color).map_err(|e| Failure::usage(e.to_string()))?;
            let ours = evaluate(&w, color, &bounds).map_err(|e| Failure::usage(e.to_string()))?;
            let matches = ours.value
                == skein_core::algebra::RationalFn::from(oracle.blackboard.clone());
            match format {
                Format::Text => {
                    println!("blackboard: {}", oracle.blackboard);
                    println!("zero framed: {}", oracle.zero_framed());
                    println!("writhe: {}", oracle.writhe);
                    println!("matches evaluate: {matches}");
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&wire::oracle(&oracle, matches))
                            .expect("oracle result serializes")
                    )
                }
            }
            if matches {
                Ok(())
            } else {
                Err(Failure::check("oracle disagrees with the projector evaluation"))
            }
        }
    }
}
