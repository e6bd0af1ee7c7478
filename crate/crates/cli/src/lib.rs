//! Command-line front end: argument parsing, input files, output rendering,
//! the result cache and the exit-code contract.
//!
//! Exit codes: 0 success, 1 search violations or an internal cross-check
//! failure, 2 usage or unreadable input, 3 failed mathematical precondition,
//! 4 budget exhausted.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use toric_robust::bouquet::{bouquet_decomposition, BouquetDecomposition, BouquetKind};
use toric_robust::cache::Cache;
use toric_robust::complex::{classify_curve3, lambda_matrix, robust_complex_with, ComplexOptions};
use toric_robust::graver::{circuits, graver_basis_with, vectors_to_text, Budget};
use toric_robust::lawrence::{
    build_gen_lawrence, reconstruct_gen_lawrence, GenLawrenceMatrix, GenLawrenceSpec,
};
use toric_robust::oracle::{boxed_kernel, graver_box_bound, oracle_graver, oracle_indispensable};
use toric_robust::robustness::{indispensable_set_with, is_strongly_robust_with};
use toric_robust::search::{sullivant_search, SearchConfig, SearchReport};
use toric_robust::{Error, IntMat, IntVec, Integer};

pub const CACHE_ENV: &str = "TORIC_ROBUST_CACHE_DIR";

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "toric-robust",
    version,
    about = "Graver bases, bouquets and strongly robust toric ideals"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Directory for cached results.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Cap on candidate vectors generated per Graver computation.
    #[arg(long, global = true)]
    pub budget_elems: Option<usize>,
    /// Wall-clock cap in seconds per Graver computation.
    #[arg(long, global = true)]
    pub budget_secs: Option<u64>,
    /// Cross-check the complex with the lifting test.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Box bound for the oracle; defaults to a bound proven to contain the Graver basis.
    #[arg(long = "box", global = true)]
    pub box_bound: Option<i64>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graver basis of a matrix file.
    Graver { matrix: PathBuf },
    /// Circuits of a matrix file.
    Circuits { matrix: PathBuf },
    /// Indispensable Graver elements.
    Indispensable { matrix: PathBuf },
    /// Bouquet decomposition, bouquet matrix and non-mixed bouquets.
    Bouquets { matrix: PathBuf },
    /// Strong robustness verdict with a decomposition witness.
    CheckRobust { matrix: PathBuf },
    /// Strongly robust complex of a monomial curve, given as degrees or a 1×s matrix file.
    Complex {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        input: Vec<String>,
    },
    /// Complete intersection pattern of a 3-variable monomial curve.
    Classify3 {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        input: Vec<String>,
    },
    /// The lifted matrix for a curve and a subset of its columns.
    Lambda {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        input: Vec<String>,
        /// 1-based column indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        omega: Vec<usize>,
    },
    /// Generalized Lawrence matrix from a JSON spec `{T, c, lambda?}`.
    Genlaw { spec: PathBuf },
    /// Generalized Lawrence form of a matrix, with the column permutation.
    Reconstruct { matrix: PathBuf },
    /// Bounded scan of monomial curves for complexes with edges or two vertices.
    Search {
        /// Curve lengths, comma separated (3 to 6).
        #[arg(long, value_delimiter = ',', default_value = "3")]
        sizes: Vec<usize>,
        /// Largest entry.
        #[arg(long, default_value_t = 20)]
        bound: u64,
        /// Random samples instead of an exhaustive scan.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra curves, comma separated entries; repeatable.
        #[arg(long, value_delimiter = ';')]
        extra: Vec<String>,
        /// Also run the lifting test on every pair of columns.
        #[arg(long)]
        edges: bool,
    },
    /// Brute-force box enumeration.
    Oracle {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "graver")]
        op: OracleOp,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleOp {
    /// Every kernel vector in the box.
    Kernel,
    /// Conformally minimal kernel vectors in the box.
    Graver,
    /// Minimal vectors with no semiconformal split through the box.
    Indispensable,
}

/// A failure together with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::LengthMismatch(..) => "length_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::Shape(_) => "shape",
            Error::NotInKernel => "not_in_kernel",
            Error::NotMember => "not_member",
            Error::NotPointed => "not_pointed",
            Error::NotSimple => "not_simple",
            Error::BadSubset(_) => "bad_subset",
            Error::GcdNotOne(_) => "gcd_not_one",
            Error::NegativeEntry => "negative_entry",
            Error::InvalidInput(_) => "invalid_input",
            Error::HypothesisViolation(_) => "hypothesis_violation",
            Error::NotMonomialCurve(_) => "not_monomial_curve",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Inconsistent(_) => "inconsistent",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        };
        let code = if e.is_budget() {
            EXIT_BUDGET
        } else if e.is_input() {
            EXIT_USAGE
        } else if matches!(e, Error::Inconsistent(_)) {
            EXIT_FAILURE
        } else {
            EXIT_PRECONDITION
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: &'a str,
    exit_code: i32,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

/// Rendered output plus the exit code it carries.
struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

fn budget(opts: &GlobalOpts) -> Budget {
    let mut b = Budget::default();
    if let Some(n) = opts.budget_elems {
        b.max_candidates = n;
    }
    if let Some(s) = opts.budget_secs {
        b.max_time = Duration::from_secs(s);
    }
    b
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(Error::from)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<IntMat, Failure> {
    Ok(IntMat::parse_text(&read_input(path)?)?)
}

/// Inline integers form a `1×s` matrix; a single non-numeric argument is a matrix file.
fn row_or_file(input: &[String]) -> Result<IntMat, Failure> {
    let parsed: Result<Vec<Integer>, _> = input.iter().map(|s| s.parse::<Integer>()).collect();
    match parsed {
        Ok(entries) => Ok(IntMat::from_vec(1, entries.len(), entries)?),
        Err(_) if input.len() == 1 => read_matrix(Path::new(&input[0])),
        Err(e) => Err(Failure::usage(format!(
            "expected integers or one matrix file: {}",
            e.0
        ))),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(Error::from)?;
    s.push('\n');
    Ok(s)
}

fn render<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce(&T) -> String,
) -> Result<String, Failure> {
    match format {
        Format::Json => json(value),
        Format::Text => Ok(text(value)),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn face_text(faces: &[Vec<usize>]) -> String {
    join(faces.iter().map(|f| format!("[{}]", join(f, ","))), " ")
}

#[derive(Serialize)]
struct BouquetEntry {
    /// 1-based.
    members: Vec<usize>,
    kind: BouquetKind,
    c: IntVec,
}

#[derive(Serialize)]
struct BouquetReport {
    ambient: usize,
    bouquets: Vec<BouquetEntry>,
    /// 1-based free columns.
    free: Vec<usize>,
    a_b: IntMat,
    /// 1-based indices of the non-mixed bouquets.
    non_mixed: Vec<usize>,
    simple: bool,
}

fn bouquet_report(dec: &BouquetDecomposition) -> BouquetReport {
    BouquetReport {
        ambient: dec.ambient,
        bouquets: dec
            .bouquets
            .iter()
            .map(|b| BouquetEntry {
                members: b.members.iter().map(|k| k + 1).collect(),
                kind: b.kind,
                c: b.c.clone(),
            })
            .collect(),
        free: dec
            .free
            .as_ref()
            .map(|f| f.members.iter().map(|k| k + 1).collect())
            .unwrap_or_default(),
        a_b: dec.a_b.clone(),
        non_mixed: dec.non_mixed(),
        simple: dec.is_simple(),
    }
}

fn bouquet_text(r: &BouquetReport) -> String {
    let mut s = String::new();
    for (i, b) in r.bouquets.iter().enumerate() {
        let kind = match b.kind {
            BouquetKind::Free => "free",
            BouquetKind::Mixed => "mixed",
            BouquetKind::NonMixed => "non-mixed",
        };
        let _ = writeln!(
            s,
            "B{} {{{}}} {kind} c={}",
            i + 1,
            join(&b.members, ","),
            b.c
        );
    }
    if !r.free.is_empty() {
        let _ = writeln!(s, "free {{{}}}", join(&r.free, ","));
    }
    let _ = writeln!(s, "non-mixed {{{}}}", join(&r.non_mixed, ","));
    s.push_str(&r.a_b.to_text());
    s
}

fn lawrence_text(g: &GenLawrenceMatrix) -> String {
    let mut s = g.matrix.to_text();
    if let Some(p) = &g.permutation {
        let perm: Vec<i64> = p.iter().map(|&k| k as i64).collect();
        s.push_str(&IntMat::row_matrix(&perm).to_text());
    }
    s
}

fn search_text(r: &SearchReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "instances {}", r.counts.instances);
    let _ = writeln!(s, "trivial {}", r.counts.trivial);
    for (i, n) in &r.counts.with_vertex {
        let _ = writeln!(s, "vertex {i} {n}");
    }
    for (k, n) in &r.counts.classification {
        let _ = writeln!(s, "class {k} {n}");
    }
    let _ = writeln!(s, "skipped {}", r.skipped.len());
    let _ = writeln!(s, "violations {}", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(s, "  {} {}", join(&v.t, " "), v.reason);
    }
    s
}

fn parse_extra(extra: &[String]) -> Result<Vec<Vec<u64>>, Failure> {
    extra
        .iter()
        .map(|e| {
            e.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<u64>()
                        .map_err(|err| Failure::usage(format!("bad --extra entry {x:?}: {err}")))
                })
                .collect()
        })
        .collect()
}

/// Looks up `(op, matrix, params)` in the cache, computing and storing on a miss.
fn cached(
    opts: &GlobalOpts,
    op: &str,
    matrix: &IntMat,
    params: &str,
    compute: impl FnOnce() -> Result<String, Failure>,
) -> Result<String, Failure> {
    let Some(dir) = &opts.cache_dir else {
        return compute();
    };
    let cache = Cache::new(dir);
    let fmt = match opts.format {
        Format::Text => "text",
        Format::Json => "json",
    };
    let key = Cache::key(op, matrix, &format!("{fmt};{params}"));
    if let Some(hit) = cache.get(&key)? {
        return Ok(hit);
    }
    let body = compute()?;
    cache.put(&key, &body)?;
    Ok(body)
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let opts = &cli.opts;
    let fmt = opts.format;
    let budget = budget(opts);
    let body = match &cli.command {
        Command::Graver { matrix } => {
            let a = read_matrix(matrix)?;
            cached(opts, "graver", &a, "", || {
                let g = graver_basis_with(&a, &budget)?;
                render(fmt, &g, |g| g.to_text())
            })?
        }
        Command::Circuits { matrix } => {
            let a = read_matrix(matrix)?;
            cached(opts, "circuits", &a, "", || {
                render(fmt, &circuits(&a), |c| c.to_text())
            })?
        }
        Command::Indispensable { matrix } => {
            let a = read_matrix(matrix)?;
            cached(opts, "indispensable", &a, "", || {
                let s = indispensable_set_with(&a, &budget)?;
                render(fmt, &s, |s| vectors_to_text(&s.elements, s.ambient))
            })?
        }
        Command::Bouquets { matrix } => {
            let a = read_matrix(matrix)?;
            cached(opts, "bouquets", &a, "", || {
                render(
                    fmt,
                    &bouquet_report(&bouquet_decomposition(&a)),
                    bouquet_text,
                )
            })?
        }
        Command::CheckRobust { matrix } => {
            let a = read_matrix(matrix)?;
            cached(opts, "check-robust", &a, "", || {
                let cert = is_strongly_robust_with(&a, &budget)?;
                render(fmt, &cert, |c| {
                    let mut s = format!(
                        "strongly_robust: {}\ngraver_size: {}\nindispensable_size: {}\n",
                        c.strongly_robust, c.graver_size, c.indispensable_size
                    );
                    if let Some(w) = &c.witness {
                        let _ = writeln!(s, "witness: {} = {} +sc {}", w.u, w.v, w.w);
                    }
                    s
                })
            })?
        }
        Command::Complex { input } => {
            let t = row_or_file(input)?;
            let params = format!("verify={}", opts.verify);
            cached(opts, "complex", &t, &params, || {
                let c = robust_complex_with(
                    &t,
                    &ComplexOptions {
                        verify: opts.verify,
                        budget,
                    },
                )?;
                render(fmt, &c, |c| {
                    let mut s = format!("T: {}\nfaces: {}\n", join(&c.t, " "), face_text(&c.faces));
                    if let Some(k) = &c.classification {
                        let _ = writeln!(s, "kind: {}", k.kind);
                    }
                    if c.cross_checked {
                        s.push_str("cross-checked: lifting test agrees\n");
                    }
                    s
                })
            })?
        }
        Command::Classify3 { input } => {
            let t = row_or_file(input)?;
            let c = classify_curve3(&t)?;
            render(fmt, &c, |c| {
                format!(
                    "T: {}\nc: {}\ndegrees: {}\nkind: {}\n",
                    join(c.t, " "),
                    join(c.c, " "),
                    join(c.betti_candidates, " "),
                    c.kind
                )
            })?
        }
        Command::Lambda { input, omega } => {
            let t = row_or_file(input)?;
            let l = lambda_matrix(&t, omega)?;
            render(fmt, &l, |l| l.matrix.to_text())?
        }
        Command::Genlaw { spec } => {
            let text = read_input(spec)?;
            let spec: GenLawrenceSpec = serde_json::from_str(&text).map_err(Error::from)?;
            let canonical = serde_json::to_string(&spec).map_err(Error::from)?;
            cached(opts, "genlaw", &IntMat::zeros(0, 0), &canonical, || {
                render(fmt, &build_gen_lawrence(&spec)?, lawrence_text)
            })?
        }
        Command::Reconstruct { matrix } => {
            let a = read_matrix(matrix)?;
            cached(opts, "reconstruct", &a, "", || {
                render(fmt, &reconstruct_gen_lawrence(&a)?, lawrence_text)
            })?
        }
        Command::Search {
            sizes,
            bound,
            samples,
            seed,
            extra,
            edges,
        } => {
            let mut cfg = match samples {
                Some(n) => SearchConfig::random(sizes, *bound, *n, *seed),
                None => SearchConfig::exhaustive(sizes, *bound),
            };
            cfg.extra = parse_extra(extra)?;
            cfg.check_edges = *edges;
            cfg.budget = budget;
            let report = sullivant_search(&cfg)?;
            let body = render(fmt, &report, search_text)?;
            let code = if report.is_clean() { 0 } else { EXIT_FAILURE };
            return Ok(Output { body, code });
        }
        Command::Oracle { matrix, op } => {
            let a = read_matrix(matrix)?;
            let bound = match opts.box_bound {
                Some(b) => b,
                None => graver_box_bound(&a)?,
            };
            match op {
                OracleOp::Kernel => {
                    let k = boxed_kernel(&a, bound)?;
                    render(fmt, &k, |k| vectors_to_text(k, a.cols()))?
                }
                OracleOp::Graver => {
                    let g = oracle_graver(&a, bound)?;
                    render(fmt, &g, |g| vectors_to_text(&g.elements, a.cols()))?
                }
                OracleOp::Indispensable => {
                    let s = oracle_indispensable(&a, bound)?;
                    render(fmt, &s, |s| vectors_to_text(s, a.cols()))?
                }
            }
        }
    };
    Ok(Output::ok(body))
}

fn wants_json(args: &[String]) -> bool {
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn report_failure(f: &Failure, json: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if json {
        let report = ErrorReport {
            error: ErrorBody {
                kind: f.kind,
                message: &f.message,
                exit_code: f.code,
            },
        };
        let _ = writeln!(
            stdout,
            "{}",
            serde_json::to_string(&report).unwrap_or_default()
        );
    } else {
        let _ = writeln!(stderr, "error: {}", f.message);
    }
    f.code
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let json = wants_json(args);
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            if json {
                let f = Failure::usage(e.kind().to_string());
                return report_failure(&f, true, stdout, stderr);
            }
            let _ = write!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.opts.out {
                Some(path) => std::fs::write(path, &out.body)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
                None => stdout
                    .write_all(out.body.as_bytes())
                    .map_err(|e| Failure::from(Error::from(e))),
            };
            match written {
                Ok(()) => out.code,
                Err(f) => report_failure(&f, json, stdout, stderr),
            }
        }
        Err(f) => report_failure(&f, json, stdout, stderr),
    }
}
