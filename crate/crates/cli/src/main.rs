//! `gspecht`: graded tableau data, characters, branching tables and the
//! verification suites, with JSON or TSV output.
//!
//! Exit status: 0 on success, 1 if a verification check fails, 2 on usage
//! errors and exceeded resource bounds.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gspecht::characters::{branching_table, graded_character};
use gspecht::combinatorics::{AlgebraParams, Multipartition, Residue, Tableau};
use gspecht::hecke::DEFAULT_MAX_DIM;
use gspecht::klr::DEFAULT_WORD_CAP;
use gspecht::scalars::FieldSpec;
use gspecht::suites::{algebra_run, combinatorial_runs, parse_suites, random_charges, AlgebraOptions, VerifyReport};
use gspecht::Error;

#[derive(Parser, Debug)]
#[command(name = "gspecht", version, about = "Graded Specht modules of cyclotomic Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One row per standard tableau: id, filling, residue sequence, degree,
    /// codegree, length and canonical reduced word.
    Tableaux(ShapeArgs),
    /// Graded character of a Specht module as JSON.
    Char(ShapeArgs),
    /// Graded branching table, bottom to top, with the character identity.
    Branch(ShapeArgs),
    /// Run verification suites over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// Quantum characteristic: 0 or at least 2.
    #[arg(long)]
    e: u32,
    /// Prime with e | p - 1; defaults to the smallest such prime >= 5.
    #[arg(long)]
    p: Option<u64>,
    /// Charge k_1,...,k_l. Defaults to all zeros.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    charge: Option<Vec<i64>>,
    /// Level l; must agree with the charge length when both are given.
    #[arg(long)]
    level: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Multipartition: components separated by `|`, parts by `,`, `_` for
    /// an empty component, the empty string for the empty multipartition.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Largest d checked.
    #[arg(long, default_value_t = 4)]
    dmax: usize,
    /// Comma-separated suites: combinatorics, hecke, specht, klr,
    /// branching, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace the charge by this many seeded random charges of the given
    /// level.
    #[arg(long)]
    random_charges: Option<usize>,
    /// Worker threads.
    #[arg(long, env = "GSPECHT_THREADS")]
    threads: Option<usize>,
    /// Largest regular representation built, l^d d!.
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
    /// Reduced-word independence is checked for w_T with at most this many
    /// reduced words.
    #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
    word_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Tableaux(a) => {
            let (params, mu) = shape_inputs(&a)?;
            let fmt = a.params.format.unwrap_or(Format::Tsv);
            emit(&a.params.out, &tableaux_output(&mu, &params, fmt)?)
        }
        Command::Char(a) => {
            let (params, mu) = shape_inputs(&a)?;
            if a.params.format == Some(Format::Tsv) {
                return Err(Failure::Usage("char only supports JSON output".into()));
            }
            emit(&a.params.out, &char_output(&mu, &params)?)
        }
        Command::Branch(a) => {
            let (params, mu) = shape_inputs(&a)?;
            let fmt = a.params.format.unwrap_or(Format::Tsv);
            emit(&a.params.out, &branch_output(&mu, &params, fmt)?)
        }
        Command::Verify(a) => verify(&a),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => match io::stdout().lock().write_all(text.as_bytes()) {
            // A closed pipe (e.g. `| head`) is not an error of ours.
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Usage(format!("cannot write output: {e}"))),
            _ => Ok(()),
        },
    }
}

/// Level and charge after defaulting; rejects inconsistent combinations.
fn charge_of(a: &ParamArgs) -> CliResult<Vec<i64>> {
    match (&a.charge, a.level) {
        (Some(c), Some(l)) if c.len() != l => {
            Err(Failure::Usage(format!("--level {l} does not match a charge of length {}", c.len())))
        }
        (Some(c), _) => Ok(c.clone()),
        (None, Some(l)) => Ok(vec![0; l]),
        (None, None) => Ok(vec![0]),
    }
}

fn params_of(a: &ParamArgs, charge: Vec<i64>) -> CliResult<AlgebraParams> {
    let field = match (a.e, a.p) {
        (0, Some(_)) => return Err(Failure::Usage("--p is only meaningful for e >= 2".into())),
        (e, Some(p)) => FieldSpec::prime(p, e)?,
        (e, None) => FieldSpec::default_for_e(e)?,
    };
    Ok(AlgebraParams::new(field, charge)?)
}

fn shape_inputs(a: &ShapeArgs) -> CliResult<(AlgebraParams, Multipartition)> {
    let params = params_of(&a.params, charge_of(&a.params)?)?;
    let mu = Multipartition::parse(&a.mu, params.level())?;
    Ok((params, mu))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn tableaux_output(mu: &Multipartition, params: &AlgebraParams, fmt: Format) -> CliResult<String> {
    let mut rows = Vec::new();
    for (id, t) in Tableau::standard(mu).iter().enumerate() {
        let (deg, codeg) = (t.degree(params)?, t.codegree(params)?);
        let res: Vec<Residue> = t.residue_sequence(params);
        let word = t.permutation().canonical_reduced_word();
        rows.push((id, t.filling_string(), res, deg, codeg, t.length(), word));
    }
    Ok(match fmt {
        Format::Tsv => {
            let mut s = String::from("id\tfilling\tresidues\tdeg\tcodeg\tlength\tword\n");
            for (id, filling, res, deg, codeg, len, word) in rows {
                let _ = writeln!(s, "{id}\t{filling}\t{}\t{deg}\t{codeg}\t{len}\t{}", join(&res, ","), join(&word, ","));
            }
            s
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .into_iter()
                .map(|(id, filling, res, deg, codeg, len, word)| {
                    json!({"id": id, "filling": filling, "residues": res, "deg": deg, "codeg": codeg, "length": len, "word": word})
                })
                .collect();
            pretty(&json!({"mu": mu.to_string(), "e": params.e(), "charge": params.charge(), "tableaux": list}))
        }
    })
}

fn char_output(mu: &Multipartition, params: &AlgebraParams) -> CliResult<String> {
    let ch = graded_character(mu, params)?;
    Ok(pretty(&json!({
        "mu": mu.to_string(),
        "e": params.e(),
        "charge": params.charge(),
        "character": ch,
        "total": ch.total(),
    })))
}

fn branch_output(mu: &Multipartition, params: &AlgebraParams, fmt: Format) -> CliResult<String> {
    let table = branching_table(mu, params)?;
    Ok(match fmt {
        Format::Tsv => {
            let mut s = String::from("node\tresidue\tshape\tshift\n");
            for r in &table.rows {
                let shape = if r.shape.size() == 0 { "(empty)".to_string() } else { r.shape.to_string() };
                let _ = writeln!(s, "{}\t{}\t{shape}\t{}", r.node, r.residue, r.shift);
            }
            let _ = writeln!(s, "# identity\t{}", if table.identity_holds { "pass" } else { "fail" });
            s
        }
        Format::Json => pretty(&json!({
            "mu": mu.to_string(),
            "e": params.e(),
            "charge": params.charge(),
            "rows": table.rows.iter().map(|r| json!({
                "node": r.node,
                "residue": r.residue,
                "shape": r.shape.to_string(),
                "shift": r.shift,
            })).collect::<Vec<_>>(),
            "identity_holds": table.identity_holds,
        })),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn verify(a: &VerifyArgs) -> CliResult<()> {
    let suites = parse_suites(&a.suite)?;
    let p = &a.params;
    if p.e == 0 && suites.iter().any(|s| s.needs_algebra()) {
        return Err(Failure::Usage("algebra suites need e >= 2; use --suite combinatorics for e = 0".into()));
    }
    if let Some(n) = a.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {n} threads: {e}")))?;
    }
    let charges = match a.random_charges {
        Some(n) => {
            let level = p.level.or(p.charge.as_ref().map(Vec::len)).unwrap_or(1);
            random_charges(level, p.e, n, a.seed)
        }
        None => vec![charge_of(p)?],
    };
    let opts = AlgebraOptions { seed: a.seed, max_dim: a.max_dim, word_cap: a.word_cap };
    let mut runs = Vec::new();
    for charge in charges {
        // Validates e, p and the charge even for purely combinatorial runs.
        let params = params_of(p, charge.clone())?;
        if suites.iter().any(|s| !s.needs_algebra()) {
            runs.extend(combinatorial_runs(p.e, &[charge], a.dmax)?);
        }
        if suites.iter().any(|s| s.needs_algebra()) {
            runs.push(algebra_run(&params, a.dmax, &suites, opts)?);
        }
    }
    let report = VerifyReport::new(runs);
    let text = match p.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Tsv => verify_tsv(&report),
    };
    emit(&p.out, &text)?;
    let merged = report.merged();
    eprintln!(
        "{} checks, {} instances, {} failing checks",
        merged.checks.len(),
        merged.instances(),
        merged.checks.iter().filter(|c| !c.passed()).count()
    );
    for run in &report.runs {
        if let Some(err) = &run.error {
            eprintln!("stopped early at e = {}, charge {:?}: {err}", run.e, run.charge);
        }
    }
    if report.has_resource_error() {
        Err(Failure::Usage("resource bound exceeded; the report is partial".into()))
    } else if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify_tsv(report: &VerifyReport) -> String {
    let mut s = String::from("e\tp\tcharge\tcheck\tinstances\tfailures\n");
    for run in &report.runs {
        let p = run.p.map_or_else(|| "-".to_string(), |p| p.to_string());
        for c in &run.report.checks {
            let _ = writeln!(s, "{}\t{p}\t{}\t{}\t{}\t{}", run.e, join(&run.charge, ","), c.name, c.instances, c.failures);
        }
    }
    s
}
