//! `binform`: classify binary cubics/quartics, symmetric tensors and PDE
//! principal parts from the command line.

mod input;
mod orbit;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use binform::algebra::{form_to_tensor, transform};
use binform::classify::{canonical_form, classify, ClassificationReport, Domain};
use binform::json::{
    eigenpairs_to_json, form_to_json, pde_report_to_json, pde_to_json, report_to_json, tensor_to_json,
};
use binform::pde::{classify_pde, render_pde, transform_pde};
use binform::spectra::{eigenpairs, Eigenpairs};
use binform::{BinaryForm, Error, Scalar, Tolerances};

use input::{parse_input, parse_transform, read_source, transform_in_mode, Input};
use orbit::{orbit_check, OrbitConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Float,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    Real,
    Complex,
}

#[derive(Parser, Debug)]
#[command(
    name = "binform",
    version,
    about = "Classify binary cubics/quartics, symmetric tensors and PDE principal parts"
)]
struct Cli {
    /// Arithmetic: float converts inputs to doubles, exact to Gaussian rationals.
    #[arg(long, value_enum, default_value = "float", global = true)]
    mode: Mode,
    /// Backward-error threshold for merging float roots.
    #[arg(long, global = true, value_parser = positive_f64)]
    eps_root: Option<f64>,
    /// Realness threshold for float roots.
    #[arg(long, global = true, value_parser = positive_f64)]
    eps_real: Option<f64>,
    /// Eigen-residual and zero-eigenvalue threshold.
    #[arg(long, global = true, value_parser = positive_f64)]
    eps_eig: Option<f64>,
    /// Seed for orbit-check transforms.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Transforms per orbit-check batch.
    #[arg(long, default_value_t = 100, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complex and real type, spectral signature and root pattern.
    Classify {
        /// JSON, `cubic:…`/`quartic:…`, PDE text, a file containing one of those, or `-`.
        input: String,
    },
    /// Eigenpair classes.
    Eigenpairs { input: String },
    /// Check that random transforms preserve the classification.
    OrbitCheck { input: String },
    /// Canonical representative of a type.
    Canonical {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "real")]
        domain: DomainArg,
        #[arg(long = "type")]
        type_id: usize,
        /// Modulus for the parametric quartic types.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Apply `x = p11·u + p12·v, y = p21·u + p22·v`.
    Transform {
        input: String,
        /// `p11,p12;p21,p22` or `{"p":[[…],[…]]}`.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

const EXIT_INPUT: u8 = 2;
const EXIT_AMBIGUOUS: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

enum Failure {
    Input(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<(String, u8), Failure>;

impl Cli {
    fn tolerances(&self) -> Tolerances {
        let d = Tolerances::default();
        Tolerances {
            eps_root: self.eps_root.unwrap_or(d.eps_root),
            eps_real: self.eps_real.unwrap_or(d.eps_real),
            eps_eig: self.eps_eig.unwrap_or(d.eps_eig),
        }
    }

    fn load(&self, arg: &str) -> Result<Input, Failure> {
        let text = read_source(arg).map_err(Failure::Input)?;
        Ok(parse_input(&text)?.in_mode(self.mode)?)
    }

    fn emit(&self, value: Value, text: String) -> String {
        if self.json {
            value.to_string()
        } else {
            text
        }
    }
}

fn coeff_tuple(c: &[Scalar]) -> String {
    let parts: Vec<String> = c.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

fn report_text(r: &ClassificationReport) -> String {
    let mut s = format!("complex: Type {}", r.complex_type.type_id);
    if let Some(t) = &r.real_type {
        s.push_str(&format!(", real: Type {}", t.type_id));
    }
    s.push_str(&format!(", signature: {}", r.signature));
    if let Some(mu) = r.mu() {
        s.push_str(&format!(", μ: {mu}"));
    }
    if let Some(p) = &r.root_pattern {
        s.push_str(&format!(", roots: {p}"));
    }
    if r.method != binform::classify::Method::Spectral {
        s.push_str(&format!(", method: {}", r.method.name()));
    }
    s
}

fn cmd_classify(cli: &Cli, arg: &str) -> Outcome {
    let tol = cli.tolerances();
    let out = match cli.load(arg)? {
        Input::Pde(p) => {
            let r = classify_pde(&p, &tol)?;
            cli.emit(pde_report_to_json(&r), r.to_string())
        }
        other => {
            let r = classify(&other.form(), &tol)?;
            cli.emit(report_to_json(&r), report_text(&r))
        }
    };
    Ok((out, 0))
}

fn cmd_eigenpairs(cli: &Cli, arg: &str) -> Outcome {
    let pairs = eigenpairs(&cli.load(arg)?.form(), &cli.tolerances())?;
    let text = match &pairs {
        Eigenpairs::Infinite { degenerate: true } => "infinite (degenerate: Q ≡ 0)".to_string(),
        Eigenpairs::Infinite { degenerate: false } => "infinite".to_string(),
        Eigenpairs::Finite(list) => {
            let noun = if list.len() == 1 { "class" } else { "classes" };
            let mut lines = vec![format!("{} {noun}", list.len())];
            for e in list {
                let mut line = format!("({}, {})", e.lambda, e.direction);
                if e.multiplicity > 1 {
                    line.push_str(&format!(" multiplicity {}", e.multiplicity));
                }
                if e.is_zero {
                    line.push_str(" zero");
                }
                lines.push(line);
            }
            lines.join("\n")
        }
    };
    Ok((cli.emit(eigenpairs_to_json(&pairs), text), 0))
}

fn cmd_orbit_check(cli: &Cli, arg: &str) -> Outcome {
    let f = cli.load(arg)?.form();
    let cfg = OrbitConfig { mode: cli.mode, seed: cli.seed, trials: cli.trials as usize, tol: cli.tolerances() };
    let check = orbit_check(&f, &cfg)?;
    let code = if check.agrees() { 0 } else { EXIT_DISAGREE };
    let text = orbit::render_text(&check);
    Ok((cli.emit(orbit::render_json(&check, &cfg), text.trim_end().to_string()), code))
}

fn cmd_canonical(cli: &Cli, order: usize, domain: DomainArg, type_id: usize, mu: Option<&str>) -> Outcome {
    let mu = mu.map(Scalar::parse).transpose()?.map(|m| match cli.mode {
        Mode::Float => m.to_float(),
        Mode::Exact => m,
    });
    let domain = match domain {
        DomainArg::Real => Domain::Real,
        DomainArg::Complex => Domain::Complex,
    };
    let f = canonical_form(type_id, order, domain, mu.as_ref())?;
    let text = format!("{} = {f}", coeff_tuple(f.coeffs()));
    Ok((cli.emit(form_to_json(&f), text), 0))
}

fn form_output(f: &BinaryForm) -> String {
    format!("{} = {f}", coeff_tuple(f.coeffs()))
}

fn cmd_transform(cli: &Cli, arg: &str, p_text: &str) -> Outcome {
    let input = cli.load(arg)?;
    let p = transform_in_mode(parse_transform(p_text)?, cli.mode)?;
    let out = match &input {
        Input::Pde(pde) => {
            let q = transform_pde(pde, &p)?;
            cli.emit(pde_to_json(&q), render_pde(&q))
        }
        Input::Tensor(_) => {
            let t = form_to_tensor(&transform(&input.form(), &p))?;
            cli.emit(tensor_to_json(&t), coeff_tuple(t.entries()))
        }
        Input::Form(f) => {
            let g = transform(f, &p);
            cli.emit(form_to_json(&g), form_output(&g))
        }
    };
    Ok((out, 0))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { input } => cmd_classify(cli, input),
        Command::Eigenpairs { input } => cmd_eigenpairs(cli, input),
        Command::OrbitCheck { input } => cmd_orbit_check(cli, input),
        Command::Canonical { order, domain, type_id, mu } => {
            cmd_canonical(cli, *order, *domain, *type_id, mu.as_deref())
        }
        Command::Transform { input, p } => cmd_transform(cli, input, p),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Library(e)) => {
            if cli.json {
                let _ = writeln!(std::io::stdout(), "{}", json!({ "error": e.to_string(), "module": e.module() }));
            }
            eprintln!("error: {}: {e}", e.module());
            ExitCode::from(if e.is_numerical_ambiguity() { EXIT_AMBIGUOUS } else { EXIT_INPUT })
        }
    }
}
