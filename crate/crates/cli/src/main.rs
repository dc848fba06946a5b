use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use squares_cli::diagram::emit_diagram;
use squares_cli::report::{run_verify_paper, Bounds, DEFAULT_ATOM_COUNT, DEFAULT_MODEL_BOUND};
use squares_core::analytic::ImportPolicy;
use squares_core::model_io::parse_model;
use squares_core::opposition::{classify_pair, verify_square, SquareSpec};
use squares_core::proof::{bundled_script, check_derivation, AxiomSet, Derivation};
use squares_core::synthetic::{Reading, SyntheticOptions};
use squares_core::{parse, Error, Family, Formula, Schema, Semantics, Verdict};

#[derive(Parser)]
#[command(name = "squares", version, about = "Check the analytic and synthetic squares of opposition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula in a model file, or search for a countermodel.
    Eval {
        formula: String,
        /// JSON model file; without it the formula is checked for validity.
        #[arg(long)]
        model: Option<PathBuf>,
        #[command(flatten)]
        sem: SemanticsArgs,
        #[arg(long, default_value_t = DEFAULT_MODEL_BOUND)]
        bound: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Classify the opposition relation between two schemas.
    Classify {
        first: String,
        second: String,
        #[command(flatten)]
        sem: SemanticsArgs,
        #[arg(long, default_value_t = DEFAULT_MODEL_BOUND)]
        bound: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify the square of opposition for a semantics.
    Square {
        #[command(flatten)]
        sem: SemanticsArgs,
        #[arg(long, default_value_t = DEFAULT_MODEL_BOUND)]
        bound: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check a proof script, or a bundled derivation by id (T01-T20).
    Prove {
        script: String,
        /// Also admit axioms 6, 7 and 8.
        #[arg(long)]
        all_axioms: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every check and print the report.
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_MODEL_BOUND)]
        bound: usize,
        #[arg(long, default_value_t = DEFAULT_ATOM_COUNT)]
        atoms: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify a square and print it as a DOT digraph.
    Diagram {
        #[command(flatten)]
        sem: SemanticsArgs,
        #[arg(long, default_value_t = DEFAULT_MODEL_BOUND)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsKind {
    Analytic,
    Synthetic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    Direct,
    Derived,
    DerivedCharitable,
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Args)]
struct SemanticsArgs {
    /// Defaults to the family of the formula's copulas, else synthetic.
    #[arg(long, value_enum)]
    semantics: Option<SemanticsKind>,
    #[arg(long, value_enum, default_value = "direct")]
    reading: ReadingArg,
    /// Existential import for analytic universals.
    #[arg(long, value_enum, default_value = "on")]
    import: Switch,
    /// Admit the empty universe in synthetic models.
    #[arg(long)]
    allow_empty: bool,
}

impl SemanticsArgs {
    fn resolve(&self, hint: Option<&Formula>) -> Semantics {
        let family = match self.semantics {
            Some(SemanticsKind::Analytic) => Family::Analytic,
            Some(SemanticsKind::Synthetic) => Family::Synthetic,
            None => hint
                .and_then(|f| f.copulas().into_iter().next())
                .map_or(Family::Synthetic, |c| c.family()),
        };
        match family {
            Family::Analytic => Semantics::Analytic(match self.import {
                Switch::On => ImportPolicy::ON,
                Switch::Off => ImportPolicy::OFF,
            }),
            Family::Synthetic => Semantics::Synthetic(SyntheticOptions {
                reading: match self.reading {
                    ReadingArg::Direct => Reading::Direct,
                    ReadingArg::Derived => Reading::DerivedLiteral,
                    ReadingArg::DerivedCharitable => Reading::DerivedCharitable,
                },
                allow_empty_universe: self.allow_empty,
            }),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Expectation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<squares_core::ParseError> for Failure {
    fn from(e: squares_core::ParseError) -> Self {
        Failure::Usage(format!("parse error: {e}"))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit<T: Serialize>(out: &OutputArgs, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
    let body = if out.json {
        serde_json::to_string_pretty(value).expect("values serialize") + "\n"
    } else {
        text()
    };
    write_output(out.out.as_deref(), &body)
}

fn outcome(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Expectation)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct Evaluation {
    formula: String,
    semantics: Semantics,
    value: bool,
    trace: Vec<squares_core::semantics::AtomValue>,
}

fn verdict_text(f: &Formula, v: &Verdict) -> String {
    match v {
        Verdict::Valid { bound } => format!("{f}: valid up to bound {bound}\n"),
        Verdict::Counterexample(w) => {
            let mut s = format!("{f}: counterexample #{} of size {}\n  {}\n", w.index, w.size, w.model);
            for a in &w.trace {
                s.push_str(&format!("  {} = {}\n", a.atom, a.value));
            }
            s
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval {
            formula,
            model,
            sem,
            bound,
            out,
        } => {
            let f = parse(&formula)?;
            let sem = sem.resolve(Some(&f));
            match model {
                Some(path) => {
                    let m = parse_model(&read(&path)?)?;
                    let value = sem.eval(&m, &f)?;
                    let ev = Evaluation {
                        formula: f.to_string(),
                        semantics: sem,
                        value,
                        trace: sem.trace(&m, &f)?,
                    };
                    emit(&out, &ev, || {
                        let mut s = format!("{}: {value}\n", ev.formula);
                        for a in &ev.trace {
                            s.push_str(&format!("  {} = {}\n", a.atom, a.value));
                        }
                        s
                    })?;
                    outcome(value)
                }
                None => {
                    let v = sem.decide(&f, bound)?;
                    emit(&out, &v, || verdict_text(&f, &v))?;
                    outcome(v.is_valid())
                }
            }
        }
        Command::Classify {
            first,
            second,
            sem,
            bound,
            out,
        } => {
            let phi = Schema::parse_all_meta(&first)?;
            let psi = Schema::parse_all_meta(&second)?;
            let sem = sem.resolve(Some(phi.formula()));
            let rel = classify_pair(&phi, &psi, sem, bound)?;
            emit(&out, &rel, || {
                let mut s = format!("{phi}  /  {psi}: {} (under {sem}, bound {bound})\n", rel.kind);
                for (label, w) in rel.witnesses.labeled() {
                    s.push_str(&format!("  {label:<10} #{:<4} {}\n", w.index, w.model));
                }
                s
            })
        }
        Command::Square { sem, bound, out } => {
            let sem = sem.resolve(None);
            let spec = match sem.family() {
                Family::Analytic => SquareSpec::analytic(),
                Family::Synthetic => SquareSpec::synthetic(),
            };
            let r = verify_square(&spec, sem, bound)?;
            emit(&out, &r, || r.summary())?;
            outcome(r.passed())
        }
        Command::Prove {
            script,
            all_axioms,
            out,
        } => {
            let path = Path::new(&script);
            let text = match bundled_script(&script) {
                Some(text) if !path.exists() => text.to_string(),
                _ => read(path)?,
            };
            let d = Derivation::parse(&text)?;
            let ax = if all_axioms {
                AxiomSet::ALL
            } else {
                AxiomSet::A5_WITH_DEFINITIONS
            };
            let v = check_derivation(&d, &ax);
            emit(&out, &v, || format!("{v}\n"))?;
            outcome(v.is_accepted())
        }
        Command::VerifyPaper { bound, atoms, out } => {
            let report = run_verify_paper(Bounds::new(bound, atoms)?)?;
            let body = if out.json {
                report.to_json()
            } else {
                report.summary()
            };
            write_output(out.out.as_deref(), &body)?;
            outcome(report.passed())
        }
        Command::Diagram { sem, bound, out } => {
            let sem = sem.resolve(None);
            let spec = match sem.family() {
                Family::Analytic => SquareSpec::analytic(),
                Family::Synthetic => SquareSpec::synthetic(),
            };
            let r = verify_square(&spec, sem, bound)?;
            write_output(out.as_deref(), &emit_diagram(&r))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Expectation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
