//! Command-line front end for `noether`.
//!
//! The binary is a thin wrapper around [`run`], which parses arguments,
//! executes one command and returns the text to print with an exit code:
//! 0 on success, 1 for unreadable or malformed input, 2 when the engine
//! fails or operators do not fit their basis, 3 when verification fails.

pub mod document;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use noether::decompose::gtz::primary_decomposition_with;
use noether::decompose::{DecomposeOptions, FactorBudget};
use noether::diffprim::{get_pde, solve_pde, verify_decomposition, SolveOptions, VerificationReport};
use noether::ideal::Ideal;
use noether::poly::parse_poly;
use noether::weyl::DiffOperator;
use noether::Error;

use document::{
    gens_text, infer_variables, make_ring, DecompositionDocument, IdealDocument, PrimeListing, RawComponent,
    RawDecomposition,
};

#[derive(Parser, Debug)]
#[command(name = "noether", version, about = "Differential primary decomposition of polynomial ideals over QQ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Monomial order, overriding the document's.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    /// Seed for random coordinate changes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest truncation order tried for a dual space.
    #[arg(long, global = true, default_value_t = 50)]
    pub max_order: usize,
    /// Largest total degree handed to multivariate factorization.
    #[arg(long, global = true, default_value_t = 12)]
    pub factor_budget: u32,
    /// Use these associated primes instead of computing them.
    #[arg(long, global = true)]
    pub primes: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Verify results (default).
    #[arg(long, global = true, overrides_with = "no_verify")]
    pub verify: bool,
    /// Skip verification.
    #[arg(long, global = true, overrides_with = "verify")]
    pub no_verify: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl OrderArg {
    fn name(self) -> &'static str {
        match self {
            OrderArg::Grevlex => "grevlex",
            OrderArg::Lex => "lex",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Primes with Noetherian operators for an ideal document.
    Solvepde { file: PathBuf },
    /// The ideal described by a decomposition document.
    Getpde { file: PathBuf },
    /// Arithmetic multiplicity with the per-prime table.
    Amult { file: PathBuf },
    /// Associated primes.
    Ass { file: PathBuf },
    /// Primary decomposition.
    Primdec { file: PathBuf },
    /// Applies an operator to a polynomial.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        poly: String,
        /// Comma-separated variables; inferred from the inputs when absent.
        #[arg(long)]
        ring: Option<String>,
    },
    /// Checks a decomposition document against an ideal document.
    Verify { ideal: PathBuf, decomposition: PathBuf },
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: msg.into() + "\n" }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownVariable(_) | Error::DuplicateVariable(_) => 1,
        Error::VerificationFailed(_) => 3,
        _ => 2,
    }
}

fn read_input(path: &Path) -> std::result::Result<String, Outcome> {
    let res = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    res.map_err(|e| Outcome::fail(1, format!("cannot read {}: {e}", path.display())))
}

fn lib<T>(r: noether::Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(|e| Outcome::fail(exit_code(&e), format!("error: {e}")))
}

impl Flags {
    fn order(&self) -> Option<&'static str> {
        self.order.map(OrderArg::name)
    }

    fn decompose_options(&self) -> DecomposeOptions {
        DecomposeOptions {
            seed: self.seed,
            budget: FactorBudget { max_degree: self.factor_budget, ..FactorBudget::default() },
        }
    }

    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            decompose: self.decompose_options(),
            max_order: self.max_order,
            verify: !self.no_verify,
            ..SolveOptions::default()
        }
    }

    fn supplied_primes(&self, ideal: &Ideal) -> std::result::Result<Option<Vec<Ideal>>, Outcome> {
        let Some(path) = &self.primes else { return Ok(None) };
        let text = read_input(path)?;
        let raw = lib(RawDecomposition::parse(&text, self.order()))?;
        let ring = lib(raw.ring_or(Some(ideal.ring())))?;
        lib(raw.primes(&ring)).map(Some)
    }
}

fn read_ideal(path: &Path, flags: &Flags) -> std::result::Result<IdealDocument, Outcome> {
    let text = read_input(path)?;
    lib(IdealDocument::parse(&text, flags.order()))
}

fn report_text(report: &VerificationReport, doc: &DecompositionDocument) -> String {
    let mut out = String::new();
    for (i, c) in doc.components.iter().enumerate() {
        let vanish = report.membership.get(i).copied().unwrap_or(false);
        let mult = match report.multiplicities.get(i).copied().flatten() {
            Some((have, want)) => format!("{have} operators, multiplicity {want}"),
            None => format!("{} operators", c.operators.len()),
        };
        out.push_str(&format!(
            "component {}: prime = {} | operators vanish: {} | {mult}\n",
            i + 1,
            gens_text(&c.prime),
            if vanish { "yes" } else { "no" }
        ));
    }
    out.push_str(&format!("roundtrip: {}\n", if report.roundtrip_equal { "equal" } else { "different" }));
    if let Some(w) = &report.counterexample {
        out.push_str(&format!("counterexample: {w}\n"));
    }
    for f in &report.failures {
        out.push_str(&format!("failure: {f}\n"));
    }
    out.push_str(&format!("result: {}\n", if report.passed() { "passed" } else { "failed" }));
    out
}

fn report_json(report: &VerificationReport) -> String {
    let v = serde_json::json!({
        "roundtrip": report.roundtrip_equal,
        "membership": report.membership,
        "multiplicities": report.multiplicities.iter().map(|m| m.map(|(a, b)| vec![a, b])).collect::<Vec<_>>(),
        "counterexample": report.counterexample.as_ref().map(|p| p.to_string()),
        "failures": report.failures,
        "passed": report.passed(),
    });
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn execute(cli: &Cli) -> std::result::Result<Outcome, Outcome> {
    let flags = &cli.flags;
    let render = |text: String, json: String| Outcome::ok(if flags.json { json } else { text });
    match &cli.command {
        Command::Solvepde { file } => {
            let doc = read_ideal(file, flags)?;
            let primes = flags.supplied_primes(&doc.ideal)?;
            let d = lib(solve_pde(&doc.ideal, primes, &flags.solve_options()))?;
            let out = DecompositionDocument::from_solution(&d);
            Ok(render(out.to_text(), out.to_json()))
        }
        Command::Getpde { file } => {
            let text = read_input(file)?;
            let doc = lib(DecompositionDocument::parse(&text, flags.order()))?;
            let ideal = lib(get_pde(&doc.components))?.canonical();
            let out = IdealDocument::new(ideal);
            Ok(render(out.to_text(), out.to_json()))
        }
        Command::Amult { file } => {
            let doc = read_ideal(file, flags)?;
            let primes = flags.supplied_primes(&doc.ideal)?;
            let d = lib(solve_pde(&doc.ideal, primes, &flags.solve_options()))?;
            let listing = PrimeListing {
                ring: doc.ring.clone(),
                components: d
                    .components
                    .iter()
                    .map(|c| RawComponent { multiplicity: Some(c.multiplicity), ..PrimeListing::entry(&c.prime) })
                    .collect(),
                amult: Some(d.amult),
                source: Some(d.source),
            };
            Ok(render(listing.to_text(), listing.to_json()))
        }
        Command::Ass { file } | Command::Primdec { file } => {
            let doc = read_ideal(file, flags)?;
            let (comps, source) = lib(primary_decomposition_with(&doc.ideal, &flags.decompose_options()))?;
            let with_primary = matches!(cli.command, Command::Primdec { .. });
            let listing = PrimeListing {
                ring: doc.ring.clone(),
                components: comps
                    .iter()
                    .map(|c| {
                        let mut e = PrimeListing::entry(&c.prime);
                        if with_primary {
                            e.primary = Some(PrimeListing::entry(&c.primary).prime);
                        }
                        e
                    })
                    .collect(),
                amult: None,
                source: Some(source),
            };
            Ok(render(listing.to_text(), listing.to_json()))
        }
        Command::Apply { op, poly, ring } => {
            let vars: Vec<String> = match ring {
                Some(r) => r.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect(),
                None => infer_variables(op, poly),
            };
            let ring = lib(make_ring(&vars, flags.order()))?;
            let f = lib(parse_poly(poly, &ring))?;
            let d = lib(DiffOperator::parse(op, &ring, &[]))?;
            let value = lib(d.apply(&f))?;
            let json = serde_json::to_string_pretty(&serde_json::json!({ "result": value.to_string() }))
                .expect("serializable")
                + "\n";
            Ok(render(format!("{value}\n"), json))
        }
        Command::Verify { ideal, decomposition } => {
            let idoc = read_ideal(ideal, flags)?;
            let text = read_input(decomposition)?;
            let raw = lib(RawDecomposition::parse(&text, flags.order()))?;
            let ring = lib(raw.ring_or(Some(&idoc.ring)))?;
            let components = lib(raw.components(&ring))?;
            let recompute = flags.solve_options();
            let report =
                lib(verify_decomposition(&idoc.ideal, &components, (!flags.no_verify).then_some(&recompute)))?;
            let ddoc = DecompositionDocument { ring, components, amult: None, source: None, verified: None };
            let mut out = render(report_text(&report, &ddoc), report_json(&report));
            if !report.passed() {
                out.code = 3;
            }
            Ok(out)
        }
    }
}

/// Runs one command-line invocation.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::fail(1, text.trim_end()) };
        }
    };
    execute(&cli).unwrap_or_else(|o| o)
}
