//! Command-line front end. Exit codes: 0 pass, 1 a theorem check failed,
//! 2 invalid input, 3 the two Bass-number paths (or a cache audit)
//! disagreed.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcbass_core::cech::{lc_dim, lc_nonvanishing, lc_profile, support_profile};
use lcbass_core::harness::{corpus, verify_all, CorpusSpec, MAX_CORPUS_VERTICES};
use lcbass_core::homolog::{
    hypothesis_report, primes_containing, BassEngine, BassTable, HomologError,
};
use lcbass_core::sr::{SquareFreeIdeal, VarSet};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cache::{Cache, CacheError};
use crate::input::{load, InputError};
use crate::report;

#[derive(Debug, Parser)]
#[command(
    name = "lcbass",
    version,
    about = "Local cohomology and Bass numbers of square-free monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for table fills and corpus runs (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Ignore the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Compute every mu^0 by both the Čech socle and double Ext and compare.
    #[arg(long, global = true)]
    pub check_oracles: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Height, dimension, depth, pdim, purity, CM, S2 and the nonvanishing
    /// local cohomology.
    Info { file: PathBuf },
    /// Table of Bass numbers mu^p(P_sigma, H^i_I(R)) at monomial primes.
    Bass(BassArgs),
    /// Run the theorem checks on one ideal or on an enumerated corpus.
    Verify(VerifyArgs),
    /// Čech strand dimensions, nonvanishing set and supports.
    Lc(LcArgs),
}

#[derive(Debug, Args)]
pub struct BassArgs {
    pub file: PathBuf,
    /// `all`, `max`, or a comma list of 1-based variables; repeatable.
    #[arg(long, default_value = "all")]
    pub sigma: Vec<String>,
    /// Cohomological degrees: `all`, `n`, `d`, a number, `a-b`, or a comma
    /// list of these.
    #[arg(long = "i", default_value = "all")]
    pub i: String,
    /// Bass indices, same syntax as `--i`.
    #[arg(long = "p", default_value = "all")]
    pub p: String,
    /// With `--sigma all`, list every monomial prime containing I instead
    /// of heights d, d+1, d+2 and the maximal ideal.
    #[arg(long)]
    pub all_heights: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
    pub file: Option<PathBuf>,
    /// Corpus constraints: `n=K` then any of `pure`, `any-dim`,
    /// `height=a[-b]`, `codim=a[-b]`, `s2`, `not-s2`, `cm`, `not-cm`,
    /// `labeled`.
    #[arg(long, num_args = 1..)]
    pub corpus: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct LcArgs {
    pub file: PathBuf,
    /// Cohomological degree.
    #[arg(long = "i")]
    pub i: Option<usize>,
    /// Negative pattern as a comma list of 1-based variables (may be empty).
    #[arg(long, requires = "i")]
    pub pattern: Option<String>,
    /// Report the graded primes in the support and its dimension.
    #[arg(long, conflicts_with = "pattern")]
    pub support: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
    #[error("oracle disagreement: {0}")]
    Oracle(String),
    #[error("cache: {0}")]
    Cache(String),
}

impl From<HomologError> for CliError {
    fn from(e: HomologError) -> Self {
        match e {
            HomologError::OracleDisagreement { .. } => CliError::Oracle(e.to_string()),
            other => CliError::Computation(other.to_string()),
        }
    }
}

impl From<CacheError> for CliError {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::AuditMismatch { .. } => CliError::Oracle(e.to_string()),
            other => CliError::Cache(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Oracle(_) => 3,
            _ => 2,
        }
    }
}

/// A finished command: the report and whether every check passed.
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
    pub warnings: Vec<String>,
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            let bytes = match cli.format {
                Format::Json => report::to_bytes(&out.report),
                Format::Text => report::render_text(&out.report).into_bytes(),
            };
            let _ = std::io::stdout().write_all(&bytes);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cli.jobs)))?;
    let cache = Cache::from_env(cli.no_cache);
    pool.install(|| match &cli.command {
        Command::Info { file } => info(file, &cache),
        Command::Bass(a) => bass(a, cli.check_oracles, &cache),
        Command::Verify(a) => verify(a, &cache),
        Command::Lc(a) => lc(a),
    })
}

fn info(file: &Path, cache: &Cache) -> Result<Outcome, CliError> {
    let loaded = load(file)?;
    let named = &loaded.ideal;
    let ideal = &plain(named);
    let (report, _) = cache.get_or_compute(ideal, "info", || -> Result<Value, CliError> {
        let h = hypothesis_report(ideal)?;
        let nv = lc_nonvanishing(ideal).map_err(HomologError::from)?;
        Ok(report::info(ideal, &h, &nv))
    })?;
    Ok(Outcome {
        report: relabel(report, named),
        passed: true,
        warnings: loaded.warnings,
    })
}

/// The ideal with default variable names, which is what cached payloads
/// are computed on.
fn plain(ideal: &SquareFreeIdeal) -> SquareFreeIdeal {
    SquareFreeIdeal::new(ideal.nvars(), ideal.gens().to_vec()).expect("same supports")
}

/// Cached reports are keyed without variable names; put the caller's back.
fn relabel(mut v: Value, ideal: &SquareFreeIdeal) -> Value {
    if v.get("ideal").is_some() {
        v["ideal"] = report::ideal_json(ideal);
    }
    v
}

fn one_based_set(s: &str, n: usize, what: &str) -> Result<VarSet, CliError> {
    let mut out = VarSet::EMPTY;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let j: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("{what}: '{tok}' is not an index")))?;
        if j == 0 || j > n {
            return Err(CliError::Usage(format!(
                "{what}: index {j} outside 1..={n}"
            )));
        }
        out = out.insert(j - 1);
    }
    Ok(out)
}

/// Parses `all`, `n`, `d`, numbers, inclusive `a-b` ranges and comma lists
/// of these, all within `0..=n`.
pub fn index_list(s: &str, n: usize, d: usize, what: &str) -> Result<Vec<usize>, CliError> {
    let atom = |t: &str| -> Result<usize, CliError> {
        match t {
            "n" => Ok(n),
            "d" => Ok(d),
            _ => t
                .parse()
                .map_err(|_| CliError::Usage(format!("{what}: '{t}' is not an index"))),
        }
    };
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim) {
        if tok == "all" {
            out.extend(0..=n);
        } else if let Some((a, b)) = tok.split_once('-') {
            out.extend(atom(a)?..=atom(b)?);
        } else {
            out.push(atom(tok)?);
        }
    }
    if let Some(&bad) = out.iter().find(|&&k| k > n) {
        return Err(CliError::Usage(format!("{what}: {bad} outside 0..={n}")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn bass(a: &BassArgs, check_oracles: bool, cache: &Cache) -> Result<Outcome, CliError> {
    let loaded = load(&a.file)?;
    let named = &loaded.ideal;
    let ideal = &plain(named);
    let n = ideal.nvars();
    let d = ideal
        .height()
        .map_err(|e| CliError::Computation(e.to_string()))?;
    let is = index_list(&a.i, n, d, "--i")?;
    let ps = index_list(&a.p, n, d, "--p")?;
    let mut sigmas = Vec::new();
    for s in &a.sigma {
        match s.as_str() {
            "all" => sigmas.extend(
                primes_containing(ideal)
                    .into_iter()
                    .filter(|p| a.all_heights || (d..=d + 2).contains(&p.len()) || p.len() == n),
            ),
            "max" | "m" => sigmas.push(VarSet::full(n)),
            list => sigmas.push(one_based_set(list, n, "--sigma")?),
        }
    }
    sigmas.sort_by_key(|s| s.to_one_based());
    sigmas.dedup();

    let tag = format!(
        "bass;sigma={:?};i={is:?};p={ps:?};check={check_oracles}",
        sigmas.iter().map(|s| s.to_one_based()).collect::<Vec<_>>()
    );
    let (report, _) = cache.get_or_compute(ideal, &tag, || -> Result<Value, CliError> {
        let parts: Vec<BassTable> = sigmas
            .par_iter()
            .map_init(BassEngine::new, |e, &s| {
                e.bass_table(ideal, &[s], &is, &ps, check_oracles)
            })
            .collect::<Result<_, _>>()?;
        let mut cells: Vec<_> = parts.into_iter().flat_map(|t| t.cells).collect();
        cells.sort_by(|x, y| {
            (x.sigma.to_one_based(), x.i, x.p).cmp(&(y.sigma.to_one_based(), y.i, y.p))
        });
        Ok(report::bass(&BassTable {
            ideal: ideal.clone(),
            cells,
        }))
    })?;
    Ok(Outcome {
        report: relabel(report, named),
        passed: true,
        warnings: loaded.warnings,
    })
}

fn bounds(v: &str, key: &str) -> Result<(usize, usize), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--corpus {key}: expected a number or a-b, got '{v}'"
        ))
    };
    let (a, b) = v.split_once('-').unwrap_or((v, v));
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

/// Builds a corpus spec from tokens such as `n=4 pure height=2`.
pub fn corpus_spec(tokens: &[String]) -> Result<CorpusSpec, CliError> {
    let mut spec: Option<CorpusSpec> = None;
    let mut rest = Vec::new();
    for t in tokens.iter().flat_map(|t| t.split_whitespace()) {
        match t.split_once('=') {
            Some(("n", v)) => {
                let n: usize = v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("--corpus n: '{v}' is not a number")))?;
                if n == 0 || n > MAX_CORPUS_VERTICES {
                    return Err(CliError::Usage(format!(
                        "--corpus n must be in 1..={MAX_CORPUS_VERTICES}"
                    )));
                }
                spec = Some(CorpusSpec::pure(n));
            }
            _ => rest.push(t),
        }
    }
    let mut spec = spec.ok_or_else(|| CliError::Usage("--corpus needs n=K".into()))?;
    for t in rest {
        match t.split_once('=') {
            Some(("height", v)) => spec.height = Some(bounds(v, "height")?),
            Some(("codim", v)) => spec.codim = Some(bounds(v, "codim")?),
            None if t == "pure" => spec.pure_only = true,
            None if t == "any-dim" => spec.pure_only = false,
            None if t == "s2" => spec.s2 = Some(true),
            None if t == "not-s2" => spec.s2 = Some(false),
            None if t == "cm" => spec.cm = Some(true),
            None if t == "not-cm" => spec.cm = Some(false),
            None if t == "labeled" => spec.dedup = false,
            _ => {
                return Err(CliError::Usage(format!(
                    "--corpus: unknown constraint '{t}'"
                )))
            }
        }
    }
    Ok(spec)
}

fn spec_json(s: &CorpusSpec) -> Value {
    json!({
        "n": s.n,
        "pure": s.pure_only,
        "height": s.height,
        "codim": s.codim,
        "s2": s.s2,
        "cm": s.cm,
        "dedup": s.dedup,
    })
}

fn verify_one(named: &SquareFreeIdeal, cache: &Cache) -> Result<Value, CliError> {
    let ideal = &plain(named);
    let (v, _) = cache.get_or_compute(ideal, "verify", || -> Result<Value, CliError> {
        Ok(report::verify(&verify_all(ideal)?))
    })?;
    Ok(relabel(v, named))
}

fn failed(v: &Value) -> bool {
    v["summary"]["fail"].as_u64().unwrap_or(0) > 0
}

fn verify(a: &VerifyArgs, cache: &Cache) -> Result<Outcome, CliError> {
    if let Some(tokens) = &a.corpus {
        let spec = corpus_spec(tokens)?;
        let ideals = corpus(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
        let reports: Vec<Value> = ideals
            .par_iter()
            .map(|i| {
                verify_one(i, cache).map(|mut v| {
                    if let Value::Object(m) = &mut v {
                        m.remove("kind");
                        m.remove("schema_version");
                    }
                    v
                })
            })
            .collect::<Result<_, _>>()?;
        let report = report::verify_corpus(spec_json(&spec), &reports);
        let passed = !failed(&report);
        return Ok(Outcome {
            report,
            passed,
            warnings: Vec::new(),
        });
    }
    let file = a
        .file
        .as_ref()
        .expect("clap requires a file without --corpus");
    let loaded = load(file)?;
    let report = verify_one(&loaded.ideal, cache)?;
    let passed = !failed(&report);
    Ok(Outcome {
        report,
        passed,
        warnings: loaded.warnings,
    })
}

fn lc(a: &LcArgs) -> Result<Outcome, CliError> {
    let loaded = load(&a.file)?;
    let ideal = &loaded.ideal;
    let n = ideal.nvars();
    let cech = |e| CliError::from(HomologError::from(e));
    let report = if a.support {
        if a.i.is_some_and(|i| i > n) {
            return Err(CliError::Usage(format!("--i must be in 0..={n}")));
        }
        report::lc_support(ideal, &support_profile(ideal).map_err(cech)?, a.i)
    } else if let Some(p) = &a.pattern {
        let i = a.i.expect("clap enforces --i with --pattern");
        let pattern = one_based_set(p, n, "--pattern")?;
        report::lc_dim(ideal, i, pattern, lc_dim(ideal, i, pattern).map_err(cech)?)
    } else {
        let mut v = report::lc_profile(ideal, &lc_profile(ideal).map_err(cech)?);
        if let Some(i) = a.i {
            let keep = v["strand_dims"]
                .get(i.to_string())
                .cloned()
                .unwrap_or(json!([]));
            v["strand_dims"] = json!({ i.to_string(): keep });
        }
        v
    };
    Ok(Outcome {
        report,
        passed: true,
        warnings: loaded.warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_lists() {
        assert_eq!(index_list("all", 3, 1, "x").unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(index_list("d-n", 4, 2, "x").unwrap(), vec![2, 3, 4]);
        assert_eq!(index_list("3,1,1", 4, 2, "x").unwrap(), vec![1, 3]);
        assert!(index_list("5", 4, 2, "x").is_err());
        assert!(index_list("q", 4, 2, "x").is_err());
    }

    #[test]
    fn corpus_tokens() {
        let s = corpus_spec(&[
            "n=4".into(),
            "pure".into(),
            "height=2".into(),
            "not-cm".into(),
        ])
        .unwrap();
        assert_eq!(
            (s.n, s.height, s.cm, s.dedup),
            (4, Some((2, 2)), Some(false), true)
        );
        let s = corpus_spec(&["n=3 codim=1-2 labeled".into()]).unwrap();
        assert_eq!((s.codim, s.dedup), (Some((1, 2)), false));
        assert!(corpus_spec(&["pure".into()]).is_err());
        assert!(corpus_spec(&["n=8".into()]).is_err());
        assert!(corpus_spec(&["n=3".into(), "weird".into()]).is_err());
    }

    #[test]
    fn exit_codes() {
        let oracle = HomologError::OracleDisagreement {
            sigma: VarSet::EMPTY,
            i: 0,
            cech: 1,
            double_ext: 0,
        };
        assert_eq!(CliError::from(oracle).exit_code(), 3);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::from(CacheError::AuditMismatch { key: "k".into() }).exit_code(),
            3
        );
    }
}
