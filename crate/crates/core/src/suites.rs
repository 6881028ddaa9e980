//! Grid runners that drive every verification layer and assemble a
//! versioned JSON report.
//!
//! Work is split into independent tasks (one per shape or charge vector)
//! and run on the rayon pool. Results are collected in task order, so the
//! serialized report is identical for any thread count.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{defect_suite, verify_branching_filtration};
use crate::combinatorics::{multipartitions, AlgebraParams, Multipartition, Tableau};
use crate::error::{Error, Result};
use crate::hecke::RegularRep;
use crate::klr::{GradedSpechtData, WordChoice, DEFAULT_WORD_CAP};
use crate::report::Report;
use crate::specht::specht_module;

pub const SCHEMA: &str = "gspecht/1";

/// Fillings enumerated by the Bruhat support check are capped at this many.
const BRUHAT_FILLING_CAP: usize = 5040;

/// Random products per `d` in the Hecke product checks.
const PRODUCT_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Combinatorics,
    Hecke,
    Specht,
    Klr,
    Branching,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Combinatorics, Suite::Hecke, Suite::Specht, Suite::Klr, Suite::Branching];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Combinatorics => "combinatorics",
            Suite::Hecke => "hecke",
            Suite::Specht => "specht",
            Suite::Klr => "klr",
            Suite::Branching => "branching",
        }
    }

    pub fn needs_algebra(self) -> bool {
        self != Suite::Combinatorics
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::param(format!("unknown suite {s:?}")))
    }
}

/// Parses a comma-separated suite list; `all` selects every suite. The
/// result is sorted and deduplicated.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::param("empty suite selection"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// One grid point: a suite group run at fixed `(e, p, charge)` up to `dmax`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunEntry {
    pub suites: Vec<Suite>,
    pub e: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    pub charge: Vec<i64>,
    pub dmax: usize,
    pub report: Report,
    /// Set when a resource bound stopped the run early; `report` then holds
    /// whatever finished before the bound was hit.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl RunEntry {
    fn new(suites: Vec<Suite>, params: &AlgebraParams, dmax: usize) -> Self {
        RunEntry {
            suites,
            e: params.e(),
            p: params.field().prime_field().map(|(f, _)| f.p()),
            charge: params.charge().to_vec(),
            dmax,
            report: Report::new(),
            error: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.report.all_passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub passed: bool,
    pub runs: Vec<RunEntry>,
}

impl VerifyReport {
    pub fn new(runs: Vec<RunEntry>) -> Self {
        let passed = runs.iter().all(RunEntry::passed);
        VerifyReport { schema: SCHEMA.to_string(), passed, runs }
    }

    pub fn has_resource_error(&self) -> bool {
        self.runs.iter().any(|r| r.error.is_some())
    }

    /// All reports merged by check name.
    pub fn merged(&self) -> Report {
        let mut rep = Report::new();
        for r in &self.runs {
            rep.merge(r.report.clone());
        }
        rep
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Algebra-side options shared by all grid points.
#[derive(Clone, Copy, Debug)]
pub struct AlgebraOptions {
    pub seed: u64,
    pub max_dim: usize,
    pub word_cap: usize,
}

/// `count` charge vectors of length `level` drawn from a stream seeded by
/// `(seed, level, e)`. Residues lie in `0..e`, or in `-3..=3` when `e = 0`.
/// Duplicates are removed; the order of first appearance is kept.
pub fn random_charges(level: usize, e: u32, count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((level as u64) << 32) ^ u64::from(e) << 48);
    let mut out: Vec<Vec<i64>> = Vec::new();
    for _ in 0..count {
        let c: Vec<i64> = (0..level)
            .map(|_| if e == 0 { rng.gen_range(-3..=3) } else { rng.gen_range(0..i64::from(e)) })
            .collect();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Combinatorial identities for every charge in `charges`.
pub fn combinatorial_runs(e: u32, charges: &[Vec<i64>], dmax: usize) -> Result<Vec<RunEntry>> {
    charges
        .iter()
        .map(|c| {
            let params = AlgebraParams::combinatorial(e, c.clone())?;
            let mut run = RunEntry::new(vec![Suite::Combinatorics], &params, dmax);
            run.report = defect_suite(&params, dmax)?;
            Ok(run)
        })
        .collect()
}

/// The full combinatorial sweep: levels `1..=lmax`, every `e` in `es`,
/// `count` seeded charges per `(level, e)`.
pub fn combinatorial_sweep(lmax: usize, es: &[u32], dmax: usize, count: usize, seed: u64) -> Result<Vec<RunEntry>> {
    let mut runs = Vec::new();
    for l in 1..=lmax {
        for &e in es {
            runs.extend(combinatorial_runs(e, &random_charges(l, e, count, seed), dmax)?);
        }
    }
    Ok(runs)
}

/// Hecke relations and products, Specht module checks, KLR checks and the
/// graded branching filtration, for `0 <= d <= dmax`, restricted to the
/// selected suites. A resource error stops the run and is recorded in the
/// entry; other errors propagate.
pub fn algebra_run(params: &AlgebraParams, dmax: usize, suites: &[Suite], opts: AlgebraOptions) -> Result<RunEntry> {
    let suites: Vec<Suite> = suites.iter().copied().filter(|s| s.needs_algebra()).collect();
    let mut run = RunEntry::new(suites.clone(), params, dmax);
    for s in &suites {
        for name in declared_checks(*s) {
            run.report.declare(name);
        }
    }
    for d in 0..=dmax {
        match algebra_degree(params, d, &suites, opts) {
            Ok(rep) => run.report.merge(rep),
            Err(Error::Resource(msg)) => {
                run.error = Some(msg);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(run)
}

fn declared_checks(s: Suite) -> &'static [&'static str] {
    match s {
        Suite::Combinatorics => &[],
        Suite::Hecke => &["hecke.dimension", "hecke.associativity"],
        Suite::Specht => &["specht.construction", "specht.dimension", "specht.dimension_sum", "specht.eigenvalues"],
        Suite::Klr => &[
            "klr.construction",
            "vbasis.triangular",
            "homogeneity.y",
            "homogeneity.psi",
            "reduced_words.independent",
            "weights.dimensions",
            "klr.word_choice",
        ],
        Suite::Branching => &["branching.invariant", "branching.sections"],
    }
}

fn algebra_degree(params: &AlgebraParams, d: usize, suites: &[Suite], opts: AlgebraOptions) -> Result<Report> {
    let rep = RegularRep::build(params, d, opts.max_dim)?;
    let mut out = Report::new();
    let want = (params.level() as u64).pow(d as u32) * (1..=d as u64).product::<u64>();
    if suites.contains(&Suite::Hecke) {
        out.merge(rep.verify_relations());
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ d as u64);
        out.merge(rep.verify_products(&mut rng, PRODUCT_TRIALS));
    }
    let module_suites = [Suite::Specht, Suite::Klr, Suite::Branching];
    if !suites.iter().any(|s| module_suites.contains(s)) {
        return Ok(out);
    }
    let shapes = multipartitions(d, params.level());
    let reports: Vec<Result<(Report, u64)>> =
        shapes.par_iter().map(|mu| module_checks(mu, &rep, suites, opts)).collect();
    let mut square_sum = 0;
    for r in reports {
        let (rep, dim) = r?;
        out.merge(rep);
        square_sum += dim * dim;
    }
    if suites.contains(&Suite::Specht) {
        out.record("specht.dimension_sum", square_sum == want, || {
            format!("d = {d}: sum of squares {square_sum} != {want}")
        });
    }
    Ok(out)
}

/// Per-shape checks. Returns the report and `dim S(mu)`.
fn module_checks(mu: &Multipartition, rep: &RegularRep, suites: &[Suite], opts: AlgebraOptions) -> Result<(Report, u64)> {
    let mut out = Report::new();
    let count = Tableau::standard(mu).len() as u64;
    let module = match specht_module(mu, rep) {
        Ok(m) => m,
        Err(Error::Convention(msg)) => {
            out.record("specht.construction", false, || msg);
            return Ok((out, 0));
        }
        Err(e) => return Err(e),
    };
    out.record("specht.construction", true, String::new);
    let dim = module.dim() as u64;
    if suites.contains(&Suite::Specht) {
        out.record("specht.dimension", dim == count, || format!("S({mu}): dim {dim} != #T {count}"));
        out.merge(module.check_eigenvalues());
        out.merge(module.check_relations());
        out.merge(module.check_bruhat_support(BRUHAT_FILLING_CAP)?);
    }
    if !suites.contains(&Suite::Klr) && !suites.contains(&Suite::Branching) {
        return Ok((out, dim));
    }
    let data = match GradedSpechtData::build(module.clone()) {
        Ok(g) => g,
        Err(Error::Convention(msg)) => {
            out.record("klr.construction", false, || msg);
            return Ok((out, dim));
        }
        Err(e) => return Err(e),
    };
    out.record("klr.construction", true, String::new);
    if suites.contains(&Suite::Klr) {
        out.merge(data.verify_relations());
        out.merge(data.verify_v_basis()?);
        out.merge(data.verify_homogeneity()?);
        out.merge(data.verify_reduced_words(opts.word_cap)?.0);
        out.merge(data.verify_weight_dimensions()?);
        // A second reduced-word choice must give the same graded data.
        let seed = opts.seed ^ (mu.size() as u64) << 40 ^ hash_shape(mu);
        let ok = match GradedSpechtData::build_with(module, WordChoice::Seeded(seed)) {
            Ok(other) => {
                other.verify_homogeneity()?.all_passed()
                    && other.verify_v_basis()?.all_passed()
                    && other.graded_weight_dimensions()? == data.graded_weight_dimensions()?
            }
            Err(Error::Convention(_)) => false,
            Err(e) => return Err(e),
        };
        out.record("klr.word_choice", ok, || format!("S({mu}) with seed {seed}"));
    }
    if suites.contains(&Suite::Branching) {
        out.merge(verify_branching_filtration(&data)?);
    }
    Ok((out, dim))
}

/// Stable across platforms and runs, unlike the std hasher.
fn hash_shape(mu: &Multipartition) -> u64 {
    mu.to_string().bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

impl Default for AlgebraOptions {
    fn default() -> Self {
        AlgebraOptions { seed: 0, max_dim: crate::hecke::DEFAULT_MAX_DIM, word_cap: DEFAULT_WORD_CAP }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn suite_lists_parse() {
        assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(parse_suites("klr,hecke,klr").unwrap(), vec![Suite::Hecke, Suite::Klr]);
        assert!(parse_suites("nope").is_err());
        assert!(parse_suites("").is_err());
    }

    #[test]
    fn charges_are_seeded_and_in_range() {
        let a = random_charges(3, 4, 20, 7);
        assert_eq!(a, random_charges(3, 4, 20, 7));
        assert!(a.iter().flatten().all(|&k| (0..4).contains(&k)));
        assert!(random_charges(2, 0, 20, 7).iter().flatten().all(|&k| (-3..=3).contains(&k)));
        assert!(random_charges(1, 2, 20, 7).len() <= 2);
    }

    #[test]
    fn small_algebra_run_passes() {
        let params = AlgebraParams::new(FieldSpec::default_for_e(2).unwrap(), vec![0]).unwrap();
        let run = algebra_run(&params, 3, &Suite::ALL, AlgebraOptions::default()).unwrap();
        assert!(run.passed(), "{:?}", run.report.failures());
        assert_eq!(run.p, Some(5));
        for name in ["hecke.braid", "specht.dimension_sum", "klr.psi_square", "klr.word_choice", "branching.sections"] {
            assert!(run.report.get(name).unwrap().instances > 0, "{name}");
        }
    }

    #[test]
    fn resource_bound_gives_partial_report() {
        let params = AlgebraParams::new(FieldSpec::default_for_e(3).unwrap(), vec![0]).unwrap();
        let opts = AlgebraOptions { max_dim: 10, ..AlgebraOptions::default() };
        let run = algebra_run(&params, 4, &[Suite::Hecke], opts).unwrap();
        assert!(run.error.is_some());
        assert!(run.report.get("hecke.braid").unwrap().instances > 0);
        assert!(!run.passed());
    }

    #[test]
    fn report_round_trips() {
        let runs = combinatorial_runs(3, &[vec![0]], 3).unwrap();
        let rep = VerifyReport::new(runs);
        assert!(rep.passed);
        let json = rep.to_json();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.to_json(), json);
        assert!(json.contains("\"schema\": \"gspecht/1\""));
    }
}
