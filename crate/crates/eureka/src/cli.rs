//! The `eureka` command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | unreadable or invalid input (lexicon, tables, corpus) |
//! | 2 | usage or configuration error, including a stave-count mismatch |
//! | 3 | enumeration cap exceeded |
//! | 4 | a line failed to scan, or the machine ran down unwound |

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use eureka_core::lexicon::Severity;
use eureka_core::meter::parse_quantities;
use eureka_core::peter::{
    count_distinct_peter_lines, count_peter_lines, decode_line, encode_table, render_table, PeterKey,
};
use eureka_core::{
    compile_program, enumerate_lines, scan, scan_line, validate_historical, EnumerateError, Lexicon, LexiconError,
    Machine, MachineConfig, MachineError, MachineProgram, ValidationMode, Word, DEFAULT_LINE_CAP,
};

use crate::cascade::{run_cascade, CascadeSpec};
use crate::demo;
use crate::formats::{parse_corpus, parse_lexicon, parse_tables, parse_word_sets, render_program, write_tables};
use crate::trace::{write_cycle, FrameRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_RUN: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "eureka", version, about = "Simulator of Clark's Eureka Latin-verse machine and Peter's versifying tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pull the lever and print the verses.
    Compose {
        #[command(flatten)]
        machine: MachineArgs,
        /// Stop when the spring runs down instead of rewinding.
        #[arg(long)]
        no_auto_wind: bool,
    },
    /// Print every tick of the staves' descent.
    Trace {
        #[command(flatten)]
        machine: MachineArgs,
        /// Rewind automatically after five pulls.
        #[arg(long)]
        auto_wind: bool,
    },
    /// Scan a quantity string such as `-uu-u u-` or six words from the lexicon.
    Scan {
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(long)]
        allow_spondaic_fifth: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(required = true, allow_hyphen_values = true)]
        input: Vec<String>,
    },
    /// Number of distinct lines the drums can set.
    Count {
        #[command(flatten)]
        lexicon: LexiconArgs,
    },
    /// Print every distinct line.
    Enumerate {
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(long, default_value_t = DEFAULT_LINE_CAP)]
        cap: u64,
    },
    /// Print the compiled wire lengths.
    Program {
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(long)]
        expected_stave_count: Option<usize>,
    },
    /// Peter's versifying tables.
    Peter {
        #[command(subcommand)]
        command: PeterCommand,
    },
    /// Feed a corpus to a chain of machines.
    Cascade {
        #[command(flatten)]
        machine: MachineArgs,
        /// Six words per line; defaults to the two quoted verses.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
}

#[derive(Debug, Subcommand)]
enum PeterCommand {
    /// Number of keys, and of distinct lines when tables are given.
    Count { tables: Option<PathBuf> },
    /// Decode the line for a six-digit key.
    Decode {
        #[arg(long)]
        key: String,
        tables: PathBuf,
    },
    /// Build tables from a word-set file (nine words per line).
    Encode {
        words: Option<PathBuf>,
        #[arg(long, default_value_t = 9)]
        row_width: usize,
    },
    /// Show tables as grids.
    Render { tables: PathBuf },
}

#[derive(Debug, Args)]
struct LexiconArgs {
    /// Lexicon file; the built-in demo lexicon when omitted.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Historical)]
    mode: Mode,
}

#[derive(Debug, Args)]
struct MachineArgs {
    #[command(flatten)]
    lexicon: LexiconArgs,
    #[arg(long, env = "EUREKA_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    pulls: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    allow_spondaic_fifth: bool,
    #[arg(long)]
    expected_stave_count: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Strict,
    Historical,
}

/// A failed command: exit code and message for stderr.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

type CmdResult = Result<(), Failure>;

fn io_err(e: std::io::Error) -> Failure {
    fail(EXIT_INPUT, format!("write failed: {e}"))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_lexicon(args: &LexiconArgs, allow_spondaic_fifth: bool, err: &mut dyn Write) -> Result<Lexicon, Failure> {
    let (name, lexicon) = match &args.lexicon {
        Some(path) => {
            let text = read_file(path)?;
            let lex = parse_lexicon(&text).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            (path.display().to_string(), lex)
        }
        None => ("demo lexicon".to_owned(), demo::demo_lexicon()),
    };
    let mode = match args.mode {
        Mode::Strict => ValidationMode::Strict,
        Mode::Historical => ValidationMode::Historical,
    };
    match validate_historical(&lexicon, mode, allow_spondaic_fifth) {
        Ok(warnings) => {
            for w in warnings.iter().filter(|w| w.severity == Severity::Warning) {
                writeln!(err, "{name}: {w}").map_err(io_err)?;
            }
            Ok(lexicon)
        }
        Err(LexiconError::Metrical(diags)) => {
            let lines: Vec<String> = diags.iter().map(|d| format!("{name}: {d}")).collect();
            Err(fail(EXIT_INPUT, lines.join("\n")))
        }
        Err(e) => Err(fail(EXIT_INPUT, format!("{name}: {e}"))),
    }
}

fn build_program(lexicon: &Lexicon, expected_staves: Option<usize>) -> Result<MachineProgram, Failure> {
    let program = compile_program(lexicon).map_err(|e| fail(EXIT_INPUT, e))?;
    if let Some(expected) = expected_staves {
        if program.stave_count() != expected {
            return Err(fail(
                EXIT_USAGE,
                format!("lexicon needs {} staves, expected {expected}", program.stave_count()),
            ));
        }
    }
    Ok(program)
}

fn machine_error(e: MachineError) -> Failure {
    match e {
        MachineError::NeedsWinding => fail(EXIT_RUN, "the machine needs winding (pass --auto-wind or fewer --pulls)"),
        other => fail(EXIT_INPUT, other),
    }
}

/// Runs the session pull by pull, printing each result as it completes so
/// that a run-down spring still shows the verses already made.
fn run_machine(args: &MachineArgs, auto_wind: bool, frames: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let lexicon = load_lexicon(&args.lexicon, args.allow_spondaic_fifth, err)?;
    let program = build_program(&lexicon, args.expected_stave_count)?;
    let config = MachineConfig {
        auto_wind,
        ..Default::default()
    };
    let mut machine = Machine::new(program, args.seed, config);
    if args.pulls > 0 {
        machine.wind().map_err(machine_error)?;
    }
    for _ in 0..args.pulls {
        let result = machine.run_session(1).map_err(machine_error)?.remove(0);
        match args.format {
            Format::Jsonl => write_cycle(out, &result, args.seed, frames).map_err(io_err)?,
            Format::Text if frames => {
                writeln!(out, "cycle {}", result.cycle).map_err(io_err)?;
                for f in &result.trace {
                    let record = FrameRecord::from(f);
                    writeln!(out, "  tick {:2}  {}", record.tick, record.display).map_err(io_err)?;
                }
                writeln!(out, "  bell at tick {}: {}", result.bell_tick, result.verse).map_err(io_err)?;
            }
            Format::Text => writeln!(out, "{}", result.verse).map_err(io_err)?,
        }
    }
    Ok(())
}

fn cmd_scan(
    lexicon: &LexiconArgs,
    allow_spondaic_fifth: bool,
    format: Format,
    input: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let joined = input.join(" ");
    let is_quantities = joined.chars().all(|c| matches!(c, '-' | 'u' | 'U') || c.is_whitespace());
    let result = if is_quantities {
        let q = parse_quantities(&joined).ok_or_else(|| fail(EXIT_USAGE, "empty quantity string"))?;
        scan(&q, allow_spondaic_fifth)
    } else {
        let lex = load_lexicon(lexicon, allow_spondaic_fifth, err)?;
        let words = input
            .iter()
            .flat_map(|s| s.split_whitespace())
            .map(Word::parse)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| fail(EXIT_INPUT, e))?;
        scan_line(&lex, &words, allow_spondaic_fifth)
    };
    match (result, format) {
        (Ok(parse), Format::Text) => writeln!(out, "{parse}").map_err(io_err),
        (Ok(parse), Format::Jsonl) => {
            let feet: Vec<String> = parse.kinds().iter().map(|k| k.letter().to_string()).collect();
            writeln!(out, "{}", serde_json::json!({ "ok": true, "feet": feet })).map_err(io_err)
        }
        (Err(e), format) => {
            if format == Format::Jsonl {
                let furthest = match e {
                    eureka_core::MeterError::NoValidParse { furthest } => Some(furthest),
                    _ => None,
                };
                writeln!(out, "{}", serde_json::json!({ "ok": false, "error": e.to_string(), "furthest": furthest }))
                    .map_err(io_err)?;
            }
            let code = match e {
                eureka_core::MeterError::UnknownWord { .. } | eureka_core::MeterError::WordCount { .. } => EXIT_INPUT,
                _ => EXIT_RUN,
            };
            Err(fail(code, e))
        }
    }
}

fn cmd_enumerate(lexicon: &LexiconArgs, cap: u64, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let lex = load_lexicon(lexicon, false, err)?;
    let program = build_program(&lex, None)?;
    let lines = enumerate_lines(&program, cap).map_err(|e| match e {
        EnumerateError::CapExceeded { .. } => fail(EXIT_CAP, e),
        other => fail(EXIT_INPUT, other),
    })?;
    for verse in lines {
        writeln!(out, "{verse}").map_err(io_err)?;
    }
    Ok(())
}

fn load_tables(path: &Path) -> Result<Vec<eureka_core::peter::PeterTable>, Failure> {
    let text = read_file(path)?;
    parse_tables(&text).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn cmd_peter(command: &PeterCommand, out: &mut dyn Write) -> CmdResult {
    match command {
        PeterCommand::Count { tables } => {
            writeln!(out, "{}", count_peter_lines()).map_err(io_err)?;
            if let Some(path) = tables {
                let tables = load_tables(path)?;
                let distinct = count_distinct_peter_lines(&tables).map_err(|e| fail(EXIT_INPUT, e))?;
                writeln!(out, "{distinct} distinct").map_err(io_err)?;
            }
        }
        PeterCommand::Decode { key, tables } => {
            let key = PeterKey::parse(key).map_err(|e| fail(EXIT_USAGE, e))?;
            let tables = load_tables(tables)?;
            let words = decode_line(&tables, key).map_err(|e| fail(EXIT_INPUT, e))?;
            writeln!(out, "{}", words.join(" ")).map_err(io_err)?;
        }
        PeterCommand::Encode { words, row_width } => {
            let text = match words {
                Some(path) => read_file(path)?,
                None => demo::PETER_WORDS.to_owned(),
            };
            let sets = parse_word_sets(&text).map_err(|e| fail(EXIT_INPUT, e))?;
            let tables = sets
                .iter()
                .map(|set| {
                    let refs: Vec<&str> = set.iter().map(String::as_str).collect();
                    encode_table(&refs, *row_width)
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| match e {
                    eureka_core::peter::PeterError::ZeroWidth => fail(EXIT_USAGE, e),
                    other => fail(EXIT_INPUT, other),
                })?;
            out.write_all(write_tables(&tables).as_bytes()).map_err(io_err)?;
        }
        PeterCommand::Render { tables } => {
            for (i, t) in load_tables(tables)?.iter().enumerate() {
                if i > 0 {
                    writeln!(out).map_err(io_err)?;
                }
                out.write_all(render_table(t).as_bytes()).map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn cmd_cascade(
    args: &MachineArgs,
    corpus: Option<&Path>,
    depth: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let root = load_lexicon(&args.lexicon, args.allow_spondaic_fifth, err)?;
    let text = match corpus {
        Some(path) => read_file(path)?,
        None => demo::DEMO_CORPUS.to_owned(),
    };
    let corpus = parse_corpus(&text).map_err(|e| fail(EXIT_INPUT, e))?;
    if depth == 0 {
        return Err(fail(EXIT_USAGE, "--depth must be at least 1"));
    }
    let spec = CascadeSpec { corpus, depth };
    let generations = run_cascade(&root, &spec, args.seed, args.pulls).map_err(|e| fail(EXIT_INPUT, e))?;
    for g in generations {
        match args.format {
            Format::Text => {
                writeln!(out, "# generation {}: {} possible lines", g.index, g.lexicon.count_distinct_lines())
                    .map_err(io_err)?;
                for line in &g.lines {
                    let words: Vec<&str> = line.iter().map(Word::as_str).collect();
                    writeln!(out, "{}", words.join(" ")).map_err(io_err)?;
                }
            }
            Format::Jsonl => {
                for line in &g.lines {
                    let words: Vec<&str> = line.iter().map(Word::as_str).collect();
                    let record = serde_json::json!({
                        "generation": g.index,
                        "possible": g.lexicon.count_distinct_lines(),
                        "verse": words.join(" "),
                        "words": words,
                    });
                    writeln!(out, "{record}").map_err(io_err)?;
                }
            }
        }
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Compose { machine, no_auto_wind } => run_machine(&machine, !no_auto_wind, false, out, err),
        Command::Trace { machine, auto_wind } => run_machine(&machine, auto_wind, true, out, err),
        Command::Scan {
            lexicon,
            allow_spondaic_fifth,
            format,
            input,
        } => cmd_scan(&lexicon, allow_spondaic_fifth, format, &input, out, err),
        Command::Count { lexicon } => {
            let lex = load_lexicon(&lexicon, false, err)?;
            writeln!(out, "{}", lex.count_distinct_lines()).map_err(io_err)
        }
        Command::Enumerate { lexicon, cap } => cmd_enumerate(&lexicon, cap, out, err),
        Command::Program {
            lexicon,
            expected_stave_count,
        } => {
            let lex = load_lexicon(&lexicon, false, err)?;
            let program = build_program(&lex, expected_stave_count)?;
            out.write_all(render_program(&program).as_bytes()).map_err(io_err)
        }
        Command::Peter { command } => cmd_peter(&command, out),
        Command::Cascade { machine, corpus, depth } => cmd_cascade(&machine, corpus.as_deref(), depth, out, err),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "eureka: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["eureka"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_demo() {
        assert_eq!(run_str(&["count"]), (0, "64\n".into(), String::new()));
    }

    #[test]
    fn scan_forms() {
        let (code, out, _) = run_str(&["scan", "-uu -u u- --- -uu -u"]);
        assert_eq!((code, out.as_str()), (0, "D D S S D X\n"));
        let (code, out, _) = run_str(&["scan", "MARTIA", "CASTRA", "FORIS", "PRAENARRANT", "PROELIA", "MULTA"]);
        assert_eq!((code, out.as_str()), (0, "D D S S D X\n"));
        let (code, _, err) = run_str(&["scan", "uuuu"]);
        assert_eq!(code, EXIT_RUN);
        assert!(err.contains("syllable 0"), "{err}");
        let (code, _, err) = run_str(&["scan", "MARTIA", "CASTRA", "FORIS", "PRAENARRANT", "PROELIA", "DENSA"]);
        assert_eq!(code, EXIT_INPUT, "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["compose", "--format", "xml"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["program", "--expected-stave-count", "41"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["program", "--expected-stave-count", "39"]).0, EXIT_OK);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        assert_eq!(run_str(&["peter", "decode", "--key", "0", "x.pet"]).0, EXIT_USAGE);
    }

    #[test]
    fn trace_runs_down() {
        let (code, out, err) = run_str(&["trace", "--pulls", "6", "--seed", "1"]);
        assert_eq!(code, EXIT_RUN, "{err}");
        assert_eq!(out.matches("bell at tick").count(), 5);
        let (code, _, _) = run_str(&["trace", "--pulls", "6", "--auto-wind"]);
        assert_eq!(code, EXIT_OK);
    }

    #[test]
    fn cascade_default_corpus() {
        let (code, out, _) = run_str(&["cascade", "--pulls", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# generation 1: 64 possible lines\n"));
        assert_eq!(out.lines().count(), 3);
    }
}
