//! Command-line front end. [`run`] is pure apart from reading input files,
//! so the binary is a thin wrapper and the tests drive it directly.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::crt::lemma_pair;
use crate::dioph::{build_d, emit_text, EmitFormat};
use crate::equations::{paper_display_fixture, paper_tuple, search_equation_threads, NamedEquation, PaperTuple};
use crate::error::Error;
use crate::relations::{extract, extract_display, first_violation, paper_style_listing, RelationSystem};
use crate::solver::Searcher;
use crate::tuple::{DomainKind, IntTuple};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    /// 0 success, 1 negative result, 2 usage or input error.
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        Self {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn negative(stdout: String) -> Self {
        Self {
            exit_code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        let line = message.to_string();
        let line = line.lines().find(|l| !l.trim().is_empty()).unwrap_or("error").trim();
        Self {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("{line}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bnsets", version, about = "Relation systems, CRT certificates and Diophantine encodings of integer tuples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the relation system of a tuple file.
    Extract {
        file: PathBuf,
        /// Print `[i, j, k]` listings in scan order, hiding products with the last entry.
        #[arg(long)]
        paper_style: bool,
    },
    /// Check a tuple against a relation file.
    Satisfies { tuple_file: PathBuf, relations_file: PathBuf },
    /// Certificate for a * x = (2b - 1)(3b - 1).
    Crt {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Bounded counterexample search for membership.
    Member {
        file: PathBuf,
        #[arg(long)]
        domain: DomainArg,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Emit the sum-of-squares polynomial of a tuple.
    EmitD {
        file: PathBuf,
        #[arg(long)]
        format: FormatArg,
    },
    /// Bounded search of one of the quartic equations.
    SearchEq {
        #[arg(long)]
        name: EquationArg,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print one of the built-in tuples.
    Paper {
        #[arg(long)]
        which: TupleArg,
        /// Recompute the relation listings and compare with the stored fixtures.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DomainArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "N")]
    N,
    #[value(name = "N1")]
    N1,
}

impl From<DomainArg> for DomainKind {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Z => DomainKind::Integers,
            DomainArg::N => DomainKind::Naturals,
            DomainArg::N1 => DomainKind::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Sexpr,
    Smt2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EquationArg {
    Q1,
    Q2,
    Sq1,
}

impl From<EquationArg> for NamedEquation {
    fn from(e: EquationArg) -> Self {
        match e {
            EquationArg::Q1 => NamedEquation::Quartic,
            EquationArg::Q2 => NamedEquation::ShiftedQuartic,
            EquationArg::Sq1 => NamedEquation::SquaresMinusOne,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TupleArg {
    T1,
    T2,
    B13,
    B15,
}

impl From<TupleArg> for PaperTuple {
    fn from(t: TupleArg) -> Self {
        match t {
            TupleArg::T1 => PaperTuple::Theorem1,
            TupleArg::T2 => PaperTuple::Theorem2,
            TupleArg::B13 => PaperTuple::B13Positive,
            TupleArg::B15 => PaperTuple::B15Natural,
        }
    }
}

/// Parse `argv` (program name first) and execute.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutcome::ok(e.to_string()),
                _ => CommandOutcome::usage(e),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome::usage(e),
    }
}

fn read_text(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_tuple(path: &Path) -> Result<IntTuple, String> {
    let text = read_text(path)?;
    IntTuple::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn err(e: Error) -> String {
    e.to_string()
}

const EVIDENCE_NOTE: &str = "# bounded search: evidence within the bound, not a proof of membership\n";

fn dispatch(command: Command) -> Result<CommandOutcome, String> {
    match command {
        Command::Extract { file, paper_style } => {
            let t = read_tuple(&file)?;
            if paper_style {
                Ok(CommandOutcome::ok(paper_style_listing(&t, true)))
            } else {
                Ok(CommandOutcome::ok(extract(&t).to_text()))
            }
        }
        Command::Satisfies {
            tuple_file,
            relations_file,
        } => {
            let y = read_tuple(&tuple_file)?;
            let text = read_text(&relations_file)?;
            let r = RelationSystem::parse(&text, y.arity())
                .map_err(|e| format!("{}: {e}", relations_file.display()))?;
            match first_violation(&y, &r).map_err(err)? {
                None => Ok(CommandOutcome::ok("true\n".into())),
                Some(rel) => Ok(CommandOutcome::negative(format!("false\nviolated: {rel}\n"))),
            }
        }
        Command::Crt { x } => {
            let x: BigInt = x
                .trim()
                .parse()
                .map_err(|_| format!("cannot parse `{x}` as an integer"))?;
            let cert = lemma_pair(&x).map_err(err)?;
            Ok(CommandOutcome::ok(cert.to_string()))
        }
        Command::Member {
            file,
            domain,
            bound,
            threads,
        } => {
            let t = read_tuple(&file)?;
            let report = Searcher::new(domain.into(), bound)
                .threads(threads)
                .certify(&t)
                .map_err(err)?;
            let text = format!("{EVIDENCE_NOTE}{report}");
            if report.has_counterexample() {
                Ok(CommandOutcome::negative(text))
            } else {
                Ok(CommandOutcome::ok(text))
            }
        }
        Command::EmitD { file, format } => {
            let t = read_tuple(&file)?;
            let fmt = match format {
                FormatArg::Sexpr => EmitFormat::Sexpr,
                FormatArg::Smt2 => EmitFormat::Smt2,
            };
            let mut text = emit_text(&build_d(&t), fmt);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Ok(CommandOutcome::ok(text))
        }
        Command::SearchEq {
            name,
            bound,
            threads,
        } => {
            let eq: NamedEquation = name.into();
            let sols = search_equation_threads(eq, bound, threads).map_err(err)?;
            let mut out = format!("# {eq}, {} <= x, y, z <= {bound}, exhaustive within the bound\n", eq.domain_floor());
            for (x, y, z) in sols {
                out.push_str(&format!("{x} {y} {z}\n"));
            }
            Ok(CommandOutcome::ok(out))
        }
        Command::Paper { which, verify } => Ok(paper(which.into(), verify)),
    }
}

fn paper(which: PaperTuple, verify: bool) -> CommandOutcome {
    let t = paper_tuple(which);
    if !verify {
        return CommandOutcome::ok(format!("{t}\n"));
    }
    let mut out = format!("tuple: {t}\ndomain: {}\n", which.domain());
    let mut ok = true;
    if which == PaperTuple::Theorem1 {
        let cert = lemma_pair(t.get(13)).expect("slot 13 is nonzero");
        out.push_str(&format!("b: {}\na: {}\n", cert.b, cert.a));
        ok &= cert.b == *t.get(14) && cert.a == *t.get(19);
    }
    let reflexive = matches!(first_violation(&t, &extract(&t)), Ok(None));
    ok &= reflexive;
    match paper_display_fixture(which) {
        Some((adds, muls)) => {
            out.push_str(&paper_style_listing(&t, true));
            let (got_adds, got_muls) = extract_display(&t, true);
            let matches = got_adds == adds && got_muls == muls;
            ok &= matches;
            out.push_str(if matches {
                "fixture: match\n"
            } else {
                "fixture: MISMATCH\n"
            });
        }
        None => out.push_str(&extract(&t).to_text()),
    }
    out.push_str(&format!("self-consistent: {reflexive}\n"));
    if ok {
        CommandOutcome::ok(out)
    } else {
        CommandOutcome::negative(out)
    }
}
