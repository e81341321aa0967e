//! Command-line front end. `run` is pure over its inputs so golden tests can
//! drive it without spawning a process.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand};

use crate::artin::{determinant, ArtinPresentation, Candidate};
use crate::braid::{artin_inverse, braid_to_artin, FramedPureBraid};
use crate::classify::{classify_all, classify_x4, export_kirby};
use crate::coset::{enumerate, FinitePresentation, Strategy};
use crate::error::Error;
use crate::r2::{build_r2, recognize_r2, Tuple3};

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Artin presentations, framed pure braids and coset enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Artin identity for a candidate presentation.
    Verify { file: String },
    /// Compose two Artin presentations on the same generators.
    Compose { first: String, second: String },
    /// Presentation inverse to a framed pure braid.
    Invert { braid: String },
    /// Exponent-sum matrix with its determinant.
    Matrix { file: String },
    /// Presentation of a framed pure braid.
    Braid2artin { braid: String },
    /// Two-generator presentations `r(a,b,c)`.
    Tuple {
        #[command(subcommand)]
        op: TupleOp,
    },
    /// Family, form invariants and closed manifold of a listed tuple.
    Classify {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
    /// Every listed tuple with entries bounded by `--bound`.
    EnumTrivial {
        #[arg(long)]
        bound: i64,
    },
    /// Todd-Coxeter enumeration over the trivial subgroup.
    Coset {
        file: String,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
        #[arg(long, default_value = "relator-first")]
        strategy: String,
    },
    /// Kirby diagram data for `r(a,b,c)`.
    ExportKirby {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
}

#[derive(Subcommand, Debug)]
enum TupleOp {
    Build {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
    Recognize { file: String },
    Add {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    Neg {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse_error() {
            Failure::Usage(format!("error: {e}"))
        } else {
            Failure::Domain(format!("error: {e}"))
        }
    }
}

/// Runs one command. `argv[0]` is the program name; `-` as a file argument
/// reads `stdin`.
pub fn run<S: AsRef<str>>(argv: &[S], stdin: &mut dyn Read) -> Outcome {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut input = Input { stdin, used: false };
    match dispatch(cli.command, &mut input) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: msg + "\n" },
        Err(Failure::Domain(msg)) => Outcome { code: 1, stdout: String::new(), stderr: msg + "\n" },
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.used {
                return Err(Failure::Usage("error: stdin can be read only once".into()));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Failure::Usage(format!("error: stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("error: {path}: {e}")))
        }
    }

    fn parse<T: std::str::FromStr<Err = Error>>(&mut self, path: &str) -> Result<T, Failure> {
        Ok(self.read(path)?.parse()?)
    }
}

fn artin(input: &mut Input, path: &str) -> Result<ArtinPresentation, Failure> {
    let c: Candidate = input.parse(path)?;
    Ok(ArtinPresentation::try_from(c)?)
}

fn tuple(s: &str) -> Result<Tuple3, Failure> {
    Ok(s.parse()?)
}

fn dispatch(command: Command, input: &mut Input) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Verify { file } => {
            let c: Candidate = input.parse(&file)?;
            writeln!(out, "artin={} defect={}", c.is_artin(), c.artin_defect()).unwrap();
        }
        Command::Compose { first, second } => {
            let u = artin(input, &first)?;
            let r = artin(input, &second)?;
            write!(out, "{}", u.compose(&r)?).unwrap();
        }
        Command::Invert { braid } => {
            let fp: FramedPureBraid = input.parse(&braid)?;
            write!(out, "{}", artin_inverse(&fp)?).unwrap();
        }
        Command::Matrix { file } => {
            let c: Candidate = input.parse(&file)?;
            let m = c.exponent_matrix();
            write!(out, "{m}").unwrap();
            writeln!(out, "det={}", determinant(&m)).unwrap();
            writeln!(out, "symmetric={}", m.is_symmetric()).unwrap();
        }
        Command::Braid2artin { braid } => {
            let fp: FramedPureBraid = input.parse(&braid)?;
            write!(out, "{}", braid_to_artin(&fp)?).unwrap();
        }
        Command::Tuple { op } => match op {
            TupleOp::Build { tuple: t } => write!(out, "{}", build_r2(tuple(&t)?)).unwrap(),
            TupleOp::Recognize { file } => {
                let p = artin(input, &file)?;
                writeln!(out, "{}", recognize_r2(&p)?).unwrap();
            }
            TupleOp::Add { s, t } => writeln!(out, "{}", tuple(&s)? + tuple(&t)?).unwrap(),
            TupleOp::Neg { tuple: t } => writeln!(out, "{}", -tuple(&t)?).unwrap(),
        },
        Command::Classify { tuple: t } => {
            let c = classify_x4(tuple(&t)?)?;
            let inv = c.invariants;
            writeln!(
                out,
                "family={} det={} signature={} parity={} X4={} path={}",
                c.family, inv.det, inv.signature, inv.parity, c.manifold, c.path
            )
            .unwrap();
        }
        Command::EnumTrivial { bound } => {
            if bound < 0 {
                return Err(Failure::Usage("error: --bound must be nonnegative".into()));
            }
            for (t, c) in classify_all(bound)? {
                writeln!(out, "{t} family={} X4={}", c.family, c.manifold).unwrap();
            }
        }
        Command::Coset { file, max_cosets, strategy } => {
            let strategy: Strategy = strategy.parse()?;
            let p: FinitePresentation = input.parse(&file)?;
            writeln!(out, "{}", enumerate(&p, max_cosets, strategy)?).unwrap();
        }
        Command::ExportKirby { tuple: t } => writeln!(out, "{}", export_kirby(tuple(&t)?)).unwrap(),
    }
    Ok(out)
}
