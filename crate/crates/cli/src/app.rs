//! Argument parsing and the three commands.

use std::ffi::OsString;
use std::io::Write;
use std::sync::mpsc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use qplane_core::intertwiners::{cg_table, lowest_weight_vector, psi_plane, psi_tx, qrc, ClassicalLimit};
use qplane_core::plane::{phi, phi_inv};
use qplane_core::special::{little_qjacobi, qhahn};
use qplane_core::verify::{Mode, Report, Verifier};

use crate::expr::{parse_univariate, parse_value, ExprError};
use crate::render::{csv_field, Rendered};
use crate::suites::{tasks, Bounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "qplane", version, about = "Exact U_q(sl2) intertwiners, q-Hahn tables and q-Rankin-Cohen brackets")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Symbolic)]
    pub mode: ModeArg,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Evaluation points per comparison in point mode.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
    pub trials: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub out: Format,
    #[arg(long = "max-n", global = true, default_value_t = 8)]
    pub max_n: u32,
    #[arg(long = "max-degree", global = true, default_value_t = 10)]
    pub max_degree: u32,
    #[arg(id = "big_n", long = "N", global = true, default_value_t = 8)]
    pub big_n: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one exact object.
    Compute {
        #[command(subcommand)]
        object: Object,
    },
    /// Run verification suites; exit 0 iff every identity holds.
    Verify(VerifyArgs),
    /// Print a table of coefficients.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Cg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Picture {
    Plane,
    Tx,
}

#[derive(Subcommand, Debug)]
pub enum Object {
    /// The lowest-weight vector P_n in the quantum plane.
    LowestWeight {
        #[arg(long)]
        n: u32,
    },
    /// The little q-Jacobi polynomial j_n(X).
    Jacobi {
        #[arg(long)]
        n: u32,
    },
    /// Q_k^{(N)} on the grid q^{-2l}, l = 0..N (N from --N).
    Qhahn {
        #[arg(long)]
        k: u32,
    },
    /// Ψ_n(z^k).
    Psi {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Picture::Plane)]
        picture: Picture,
    },
    /// The bracket qrc(n, f, g) of two one-variable polynomials.
    Qrc {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// φ of a polynomial in t, X.
    Phi {
        #[arg(long)]
        expr: String,
    },
    /// φ⁻¹ of a quantum-plane polynomial in x, y.
    PhiInv {
        #[arg(long)]
        expr: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suites to run, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub suite: Vec<Suite>,
    /// Corrupt one coefficient per check (negative control).
    #[arg(long)]
    pub poison: bool,
    /// q₀, λ₀, λ'₀ for the classical-limit smoke test.
    #[arg(long, num_args = 3, value_names = ["Q0", "LAMBDA", "LAMBDA_PRIME"])]
    pub numeric: Option<Vec<String>>,
}

/// Failure to honour the command line; maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<ExprError> for Usage {
    fn from(e: ExprError) -> Self {
        Usage(e.to_string())
    }
}

impl From<qplane_core::Error> for Usage {
    fn from(e: qplane_core::Error) -> Self {
        Usage(e.to_string())
    }
}

impl Cli {
    fn verifier(&self, poison: bool) -> Verifier {
        let mut v = match self.mode {
            ModeArg::Symbolic => Verifier { seed: self.seed, trials: self.trials as usize, ..Verifier::symbolic() },
            ModeArg::Point => Verifier::point(self.seed, self.trials as usize),
        };
        v.poison = poison;
        v
    }

    fn bounds(&self) -> Bounds {
        Bounds { max_n: self.max_n, max_degree: self.max_degree, big_n: self.big_n }
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute { object } => compute(&cli, object).map(|r| emit(out, cli.out, &r)),
        Command::Table { kind: TableKind::Cg } => table_cg(&cli).map(|r| emit(out, cli.out, &r)),
        Command::Verify(args) => verify(&cli, args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, r: &Rendered) -> i32 {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&r.json).expect("json values serialize"),
        Format::Latex => r.latex.clone(),
        Format::Csv => r
            .csv
            .iter()
            .map(|row| row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    match writeln!(out, "{text}") {
        Ok(()) => EXIT_OK,
        Err(_) => EXIT_FAIL,
    }
}

fn compute(cli: &Cli, object: &Object) -> Result<Rendered, Usage> {
    let r = match object {
        Object::LowestWeight { n } => {
            let lw = lowest_weight_vector(*n);
            Rendered::poly(&lw.poly).with("object", "lowest-weight").with("params", json!({ "n": n }))
        }
        Object::Jacobi { n } => {
            Rendered::poly(&little_qjacobi(*n)).with("object", "jacobi").with("params", json!({ "n": n }))
        }
        Object::Qhahn { k } => {
            let grid = qhahn(*k, cli.big_n)?;
            Rendered::grid(&grid).with("object", "qhahn").with("params", json!({ "k": k, "N": cli.big_n }))
        }
        Object::Psi { n, k, picture } => {
            let params = json!({ "n": n, "k": k, "picture": format!("{picture:?}").to_lowercase() });
            let r = match picture {
                Picture::Plane => Rendered::poly(&psi_plane(*n, *k)),
                Picture::Tx => Rendered::poly(&psi_tx(*n, *k)),
            };
            r.with("object", "psi").with("params", params)
        }
        Object::Qrc { n, f, g } => {
            let (fp, gp) = (parse_univariate(f)?, parse_univariate(g)?);
            Rendered::poly(&qrc(*n, &fp, &gp)).with("object", "qrc").with("params", json!({ "n": n, "f": f, "g": g }))
        }
        Object::Phi { expr } => {
            let p = parse_value(expr)?.into_tx()?;
            Rendered::poly(&phi(&p)).with("object", "phi").with("params", json!({ "expr": expr }))
        }
        Object::PhiInv { expr } => {
            let p = parse_value(expr)?.into_plane()?;
            Rendered::poly(&phi_inv(&p)).with("object", "phi-inv").with("params", json!({ "expr": expr }))
        }
    };
    Ok(r)
}

fn table_cg(cli: &Cli) -> Result<Rendered, Usage> {
    Ok(Rendered::cg_table(&cg_table(cli.big_n)?))
}

fn classical_params(numeric: &Option<Vec<String>>) -> Result<ClassicalLimit, Usage> {
    let mut p = ClassicalLimit::default();
    if let Some(vals) = numeric {
        let parsed: Vec<f64> = vals
            .iter()
            .map(|s| s.trim().parse::<f64>().map_err(|e| Usage(format!("--numeric {s:?}: {e}"))))
            .collect::<Result<_, _>>()?;
        if !(parsed[0].is_finite() && parsed[0] > 0.0 && parsed[0] != 1.0) {
            return Err(Usage("--numeric: q0 must be positive and different from 1".into()));
        }
        (p.q0, p.lambda, p.lambda_prime) = (parsed[0], parsed[1], parsed[2]);
    }
    Ok(p)
}

fn report_line(format: Format, r: &Report) -> String {
    let status = if r.passed() { "ok" } else { "fail" };
    let mode = match r.mode {
        Mode::Symbolic => "symbolic",
        Mode::Point => "point",
    };
    match format {
        Format::Json => serde_json::to_string(r).expect("reports serialize"),
        Format::Csv => [r.identity.as_str(), mode, status, &r.params.to_string()].map(csv_field).join(","),
        Format::Latex => format!("\\texttt{{{}}} & {mode} & {status} \\\\", r.identity),
    }
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let limit = classical_params(&args.numeric)?;
    let v = cli.verifier(args.poison);
    let mut suites = args.suite.clone();
    suites.sort();
    suites.dedup();
    if suites.contains(&Suite::All) {
        suites = vec![Suite::All];
    }
    let jobs: Vec<_> = suites.iter().flat_map(|&s| tasks(s, cli.bounds(), limit)).collect();

    if cli.out == Format::Csv {
        let _ = writeln!(out, "identity,mode,status,params");
    }
    let (tx, rx) = mpsc::channel::<Report>();
    let mut total = 0usize;
    let mut first_failure: Option<Report> = None;
    std::thread::scope(|scope| {
        scope.spawn(|| {
            jobs.par_iter().for_each_with(tx, |tx, job| {
                for r in job.run(&v) {
                    // the receiver only goes away if writing failed
                    let _ = tx.send(r);
                }
            });
        });
        // single writer: reports are printed in completion order
        for r in rx {
            total += 1;
            let _ = writeln!(out, "{}", report_line(cli.out, &r));
            if !r.passed() && first_failure.is_none() {
                first_failure = Some(r);
            }
        }
    });
    let _ = out.flush();
    match first_failure {
        None => {
            let _ = writeln!(err, "{total} checks, all hold");
            Ok(EXIT_OK)
        }
        Some(r) => {
            let ce = r.counterexample.clone().unwrap_or(Value::Null);
            let _ = writeln!(err, "FAILED {} {}", r.identity, r.params);
            let _ = writeln!(err, "{}", serde_json::to_string_pretty(&ce).expect("json values serialize"));
            Ok(EXIT_FAIL)
        }
    }
}
