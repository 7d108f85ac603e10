//! Command-line front end. [`run_from`] does all the work and returns the exit
//! code with the text to print, so it can be driven from tests.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::assembler::{assembled_pattern, realize_full, verify, AssemblerError, RealizationReport, SelectionConfig};
use crate::charpoly::{char_poly, MonicPoly, SquareMatrix};
use crate::codec::{
    matrix_from_json, matrix_to_json, monic_from_json, monic_to_json, needs_gaussian, parse_json, pattern_from_json,
    poly_to_json, ratfunc_to_json, spectrum_from_json, xparams_to_json, JsonScalar,
};
use crate::exactalg::{BigRational, Complex64, GaussianRational};
use crate::pattern_s::{
    build_x, obstruction_certificate, phi_symbolic, witness_all_ones_spectrum, witness_nilpotent, XParams, ZeroPattern,
};
use crate::solver::{construction, CoeffVector, Construction, SolverError, VIETA_WEIGHTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFY_FAILED: i32 = 1;
pub const EXIT_UNREALIZABLE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "zeropatterns", version, about = "Exact realization of spectra on a sparse spectrally arbitrary pattern")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exact rational (or Gaussian rational) arithmetic; the default.
    #[arg(long, global = true, conflicts_with = "float")]
    pub exact: bool,
    /// Double-precision complex arithmetic.
    #[arg(long, global = true)]
    pub float: bool,
    /// Seed for the randomized subset search.
    #[arg(long, global = true, default_value_t = crate::assembler::DEFAULT_SEED)]
    pub seed: u64,
    /// Candidate subsets to try before giving up.
    #[arg(long, global = true, default_value_t = crate::assembler::DEFAULT_RETRIES)]
    pub retries: usize,
    /// Write the main artifact (matrix, solution or polynomial) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check both witnesses and the phi_4 / phi_7 divisibility.
    Certify {
        /// Replace x1 in both witnesses (negative control).
        #[arg(long, value_name = "RATIONAL")]
        inject_x1: Option<String>,
    },
    /// Solve phi_i = tau_i symbolically and build pi.
    Solve,
    /// Degree of pi.
    Degree {
        #[arg(long, value_enum, default_value_t = Weights::Vieta)]
        weights: Weights,
        /// Also emit pi itself.
        #[arg(long)]
        emit_pi: bool,
    },
    /// Realize 8 eigenvalues (or 8 coefficients) on S.
    Realize {
        /// {"values": [..]} with eight eigenvalues.
        #[arg(long, required_unless_present = "coeffs", conflicts_with = "coeffs")]
        spectrum: Option<PathBuf>,
        /// {"degree": 8, "coeffs": [tau0, .., tau7]}.
        #[arg(long)]
        coeffs: Option<PathBuf>,
    },
    /// Realize 8 + 2m eigenvalues on diag(S, D_2m).
    Assemble {
        #[arg(long)]
        spectrum: PathBuf,
    },
    /// Re-check a matrix against a pattern and a target polynomial.
    Verify {
        #[arg(long)]
        matrix: PathBuf,
        /// Defaults to diag(S, D_2m) for the matrix size.
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// Target as {"degree": n, "coeffs": [..]}.
        #[arg(long, required_unless_present = "spectrum", conflicts_with = "spectrum")]
        target: Option<PathBuf>,
        /// Target as the eigenvalues {"values": [..]}.
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weights {
    /// w(tau_i) = 8 - i.
    Vieta,
    /// Plain total degree.
    Uniform,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: msg.into() }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(EXIT_INPUT, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let exact_only = matches!(cli.command, Command::Certify { .. } | Command::Solve | Command::Degree { .. });
    if exact_only && cli.float {
        return Outcome::fail(EXIT_INPUT, "certify, solve and degree only run in exact arithmetic\n");
    }
    let result = match &cli.command {
        Command::Certify { inject_x1 } => certify(cli, inject_x1.as_deref()),
        Command::Solve => solve(cli),
        Command::Degree { weights, emit_pi } => degree(cli, *weights, *emit_pi),
        Command::Realize { spectrum, coeffs } => realize(cli, spectrum.as_deref(), coeffs.as_deref()),
        Command::Assemble { spectrum } => assemble(cli, spectrum),
        Command::Verify { matrix, pattern, target, spectrum } => {
            verify_cmd(cli, matrix, pattern.as_deref(), target.as_deref(), spectrum.as_deref())
        }
    };
    result.unwrap_or_else(|e| e)
}

type CmdResult = Result<Outcome, Outcome>;

fn input_error(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_INPUT, format!("error: {e}\n"))
}

fn read_json(path: &Path) -> Result<Value, Outcome> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_out(cli: &Cli, v: &Value) -> Result<(), Outcome> {
    if let Some(path) = &cli.out {
        let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
        fs::write(path, text + "\n").map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit(cli: &Cli, code: i32, v: &Value, text: String) -> Outcome {
    let stdout = if cli.json { serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n" } else { text };
    Outcome { code, stdout, stderr: String::new() }
}

fn solver_failure(e: SolverError) -> Outcome {
    match e {
        SolverError::Unrealizable(_) => Outcome::fail(EXIT_UNREALIZABLE, format!("unrealizable: {e}\n")),
        other => Outcome::fail(EXIT_VERIFY_FAILED, format!("error: {other}\n")),
    }
}

fn the_construction() -> Result<&'static Construction, Outcome> {
    construction().map_err(solver_failure)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Backend {
    Rational,
    Gaussian,
    Float,
}

fn backend(cli: &Cli, inputs: &[&Value]) -> Backend {
    if cli.float {
        Backend::Float
    } else if inputs.iter().any(|v| needs_gaussian(v)) {
        Backend::Gaussian
    } else {
        Backend::Rational
    }
}

fn check(name: &str, pass: bool, detail: String) -> Value {
    json!({"name": name, "pass": pass, "detail": detail})
}

fn witness_check(name: &str, params: &XParams<BigRational>, inject: Option<&BigRational>, target: MonicPoly<BigRational>) -> Value {
    let mut values = params.values().to_vec();
    if let Some(x1) = inject {
        values[0] = x1.clone();
    }
    match build_x(&values) {
        Err(e) => check(name, false, format!("pattern violation: {e}")),
        Ok(m) => {
            let p = char_poly(&m);
            let pass = p == target;
            check(name, pass, format!("char poly {p}"))
        }
    }
}

fn certify(cli: &Cli, inject: Option<&str>) -> CmdResult {
    let inject = inject.map(crate::codec::parse_rational).transpose().map_err(input_error)?;
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::from_integer(0.into());
    let mut checks = vec![
        witness_check("nilpotent_witness", &witness_nilpotent(), inject.as_ref(), MonicPoly::power_of_linear(&zero, 8)),
        witness_check("unipotent_witness", &witness_all_ones_spectrum(), inject.as_ref(), MonicPoly::power_of_linear(&one, 8)),
    ];
    let mut quotient = Value::Null;
    let mut quotient_terms = Value::Null;
    match obstruction_certificate() {
        Ok(q) => {
            checks.push(check("phi7_divides_phi4", true, format!("phi_4 = ({q}) * phi_7, phi_7 = {}", phi_symbolic().phi(7))));
            quotient_terms = json!(q.num_terms());
            quotient = poly_to_json(&q);
        }
        Err(e) => checks.push(check("phi7_divides_phi4", false, e.to_string())),
    }
    let pass = checks.iter().all(|c| c["pass"] == json!(true));
    let report = json!({
        "checks": checks,
        "quotient_terms": quotient_terms,
        "quotient": quotient,
        "variables": phi_symbolic().context().names(),
        "pass": pass,
    });
    write_out(cli, &report)?;
    let mut text = String::new();
    for c in report["checks"].as_array().unwrap() {
        let mark = if c["pass"] == json!(true) { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{mark} {}: {}", c["name"].as_str().unwrap(), c["detail"].as_str().unwrap());
    }
    Ok(emit(cli, if pass { EXIT_OK } else { EXIT_CERTIFY_FAILED }, &report, text))
}

fn solution_json(c: &Construction) -> Value {
    let s = &c.solution;
    let mut values = serde_json::Map::new();
    for (i, r) in s.values().iter().enumerate() {
        values.insert(format!("x{}", i + 1), ratfunc_to_json(r));
    }
    let trace: Vec<Value> = s
        .trace()
        .iter()
        .map(|st| json!({"equation": st.equation, "variable": format!("x{}", st.variable), "expression": st.expression.to_string()}))
        .collect();
    json!({
        "variables": s.context().names(),
        "solution": values,
        "trace": trace,
        "pi": pi_json(c),
    })
}

fn pi_json(c: &Construction) -> Value {
    let pi = &c.pi.pi;
    json!({
        "variables": c.solution.context().names(),
        "terms": poly_to_json(pi),
        "num_terms": pi.num_terms(),
        "vieta_degree": c.pi.vieta_degree(),
        "total_degree": pi.total_degree(),
    })
}

fn solve(cli: &Cli) -> CmdResult {
    let c = the_construction()?;
    if let Err(i) = c.solution.check_back_substitution(phi_symbolic()) {
        return Err(Outcome::fail(EXIT_VERIFY_FAILED, format!("back-substitution fails for phi_{i}\n")));
    }
    let v = solution_json(c);
    write_out(cli, &v)?;
    let mut text = String::from("elimination trace:\n");
    for st in c.solution.trace() {
        let _ = writeln!(text, "  phi_{0} = tau_{0}  ->  x{1} = {2}", st.equation, st.variable, st.expression);
    }
    text.push_str("solution:\n");
    for (i, r) in c.solution.values().iter().enumerate() {
        let _ = writeln!(text, "  x{} = {}", i + 1, r);
    }
    let _ = writeln!(text, "back-substitution: phi_i(solution) = tau_i for all i");
    let _ = writeln!(
        text,
        "pi: {} terms, weighted degree {}, total degree {}",
        c.pi.pi.num_terms(),
        c.pi.vieta_degree(),
        c.pi.pi.total_degree().unwrap_or(0)
    );
    Ok(emit(cli, EXIT_OK, &v, text))
}

fn degree(cli: &Cli, weights: Weights, emit_pi: bool) -> CmdResult {
    let c = the_construction()?;
    let (d, w) = match weights {
        Weights::Vieta => (c.pi.vieta_degree(), VIETA_WEIGHTS.to_vec()),
        Weights::Uniform => (c.pi.pi.total_degree().unwrap_or(0), vec![1; 8]),
    };
    let mut v = json!({"degree": d, "weights": w});
    if emit_pi {
        v["pi"] = pi_json(c);
        write_out(cli, &v["pi"])?;
    }
    let text = if emit_pi && cli.out.is_none() {
        serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
    } else {
        format!("{d}\n")
    };
    Ok(emit(cli, EXIT_OK, &v, text))
}

fn realize(cli: &Cli, spectrum: Option<&Path>, coeffs: Option<&Path>) -> CmdResult {
    let (input, is_spectrum) = match (spectrum, coeffs) {
        (Some(p), _) => (read_json(p)?, true),
        (None, Some(p)) => (read_json(p)?, false),
        (None, None) => return Err(input_error("one of --spectrum or --coeffs is required")),
    };
    match backend(cli, &[&input]) {
        Backend::Rational => realize_with::<BigRational>(cli, &input, is_spectrum),
        Backend::Gaussian => realize_with::<GaussianRational>(cli, &input, is_spectrum),
        Backend::Float => realize_with::<Complex64>(cli, &input, is_spectrum),
    }
}

fn realize_with<F: JsonScalar + std::fmt::Display>(cli: &Cli, input: &Value, is_spectrum: bool) -> CmdResult {
    let c = the_construction()?;
    let (params, target) = if is_spectrum {
        let sigma: Vec<F> = spectrum_from_json(input).map_err(input_error)?;
        let tau = CoeffVector::from_spectrum(&sigma).map_err(input_error)?;
        (c.realize_spectrum(&sigma).map_err(solver_failure)?, tau.to_monic())
    } else {
        let target: MonicPoly<F> = monic_from_json(input).map_err(input_error)?;
        let tau = CoeffVector::from_monic(&target).map_err(input_error)?;
        (c.realize_coeffs(&tau).map_err(solver_failure)?, target)
    };
    let m = params.matrix();
    let got = char_poly(&m);
    let pass = got.approx_eq(&target);
    let v = json!({
        "params": xparams_to_json(&params),
        "matrix": matrix_to_json(&m),
        "char_poly": monic_to_json(&got),
        "pass": pass,
    });
    write_out(cli, &v["matrix"])?;
    let mut text = String::new();
    for (i, x) in params.values().iter().enumerate() {
        let _ = writeln!(text, "x{} = {}", i + 1, x);
    }
    let _ = writeln!(text, "char poly: {got}");
    let _ = writeln!(text, "{}", if pass { "PASS" } else { "FAIL" });
    Ok(emit(cli, if pass { EXIT_OK } else { EXIT_VERIFY_FAILED }, &v, text))
}

fn report_json<F: JsonScalar>(r: &RealizationReport<F>) -> Value {
    json!({
        "pass": r.pass,
        "n": r.matrix.n(),
        "nonzero_count": r.nonzero_count,
        "pattern_ok": r.pattern_ok(),
        "missing": r.missing,
        "extra": r.extra,
        "blocks": r.block_polys.iter().map(|(s, k, p)| json!({"start": s + 1, "size": k, "char_poly": monic_to_json(p)})).collect::<Vec<_>>(),
        "assembled": monic_to_json(&r.assembled),
        "target": monic_to_json(&r.target),
        "whole_matrix_agrees": r.whole_matrix_agrees,
        "failures": r.failures(),
    })
}

fn report_text<F: JsonScalar>(r: &RealizationReport<F>) -> String {
    let mut text = String::new();
    let n = r.matrix.n();
    let _ = writeln!(text, "matrix: {n}x{n}, {} nonzero entries (2n-1 = {})", r.nonzero_count, 2 * n - 1);
    let _ = writeln!(text, "pattern: {}", if r.pattern_ok() { "matches" } else { "VIOLATED" });
    let _ = writeln!(text, "diagonal blocks: {}", r.block_polys.len());
    let _ = writeln!(text, "char poly: {}", if r.assembled.approx_eq(&r.target) { "matches target" } else { "MISMATCH" });
    for f in r.failures() {
        let _ = writeln!(text, "failure: {f}");
    }
    let _ = writeln!(text, "{}", if r.pass { "PASS" } else { "FAIL" });
    text
}

fn assembler_failure(e: AssemblerError) -> Outcome {
    match e {
        AssemblerError::SelectionFailed { .. } => Outcome::fail(EXIT_UNREALIZABLE, format!("{e}\n")),
        AssemblerError::Solver(s) => solver_failure(s),
        AssemblerError::BlockTooLarge { .. } => Outcome::fail(EXIT_VERIFY_FAILED, format!("{e}\n")),
        other => input_error(other),
    }
}

fn assemble(cli: &Cli, spectrum: &Path) -> CmdResult {
    let input = read_json(spectrum)?;
    match backend(cli, &[&input]) {
        Backend::Rational => assemble_with::<BigRational>(cli, &input),
        Backend::Gaussian => assemble_with::<GaussianRational>(cli, &input),
        Backend::Float => assemble_with::<Complex64>(cli, &input),
    }
}

fn assemble_with<F: JsonScalar>(cli: &Cli, input: &Value) -> CmdResult {
    let u: Vec<F> = spectrum_from_json(input).map_err(input_error)?;
    let config = SelectionConfig { seed: cli.seed, retries: cli.retries, ..Default::default() };
    let a = realize_full(&u, &config).map_err(assembler_failure)?;
    let mut v = report_json(&a.report);
    v["selection"] = json!({
        "branch": format!("{:?}", a.selection.branch),
        "tried": a.selection.tried,
        "sigma": a.selection.sigma.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
        "params": xparams_to_json(&a.selection.params),
    });
    write_out(cli, &matrix_to_json(&a.report.matrix))?;
    let mut text = format!("selection: {:?} after {} candidate(s)\n", a.selection.branch, a.selection.tried);
    text.push_str(&report_text(&a.report));
    Ok(emit(cli, if a.report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED }, &v, text))
}

fn verify_cmd(cli: &Cli, matrix: &Path, pattern: Option<&Path>, target: Option<&Path>, spectrum: Option<&Path>) -> CmdResult {
    let m = read_json(matrix)?;
    let pattern = match pattern {
        Some(p) => pattern_from_json(&read_json(p)?).map_err(input_error)?,
        None => {
            let n = m.get("n").and_then(Value::as_u64).ok_or_else(|| input_error("matrix without \"n\""))?;
            assembled_pattern(n as usize).map_err(|_| input_error(format!("no default pattern for n = {n}; pass --pattern")))?
        }
    };
    let (t, is_spectrum) = match (target, spectrum) {
        (Some(p), _) => (read_json(p)?, false),
        (None, Some(p)) => (read_json(p)?, true),
        (None, None) => return Err(input_error("one of --target or --spectrum is required")),
    };
    match backend(cli, &[&m, &t]) {
        Backend::Rational => verify_with::<BigRational>(cli, &m, &pattern, &t, is_spectrum),
        Backend::Gaussian => verify_with::<GaussianRational>(cli, &m, &pattern, &t, is_spectrum),
        Backend::Float => verify_with::<Complex64>(cli, &m, &pattern, &t, is_spectrum),
    }
}

fn verify_with<F: JsonScalar>(cli: &Cli, m: &Value, pattern: &ZeroPattern, t: &Value, is_spectrum: bool) -> CmdResult {
    let matrix: SquareMatrix<F> = matrix_from_json(m).map_err(input_error)?;
    let target: MonicPoly<F> = if is_spectrum {
        let u: Vec<F> = spectrum_from_json(t).map_err(input_error)?;
        MonicPoly::from_roots(&u)
    } else {
        monic_from_json(t).map_err(input_error)?
    };
    let r = verify(&matrix, pattern, &target).map_err(assembler_failure)?;
    let v = report_json(&r);
    write_out(cli, &v)?;
    Ok(emit(cli, if r.pass { EXIT_OK } else { EXIT_VERIFY_FAILED }, &v, report_text(&r)))
}
