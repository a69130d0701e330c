//! Command-line front end.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skewcode_core::fqr::{gray_image_matrix, module_span};
use skewcode_core::quantum::{check_dual_containing, css_params, singleton_defect};
use skewcode_core::search::{right_divisors, SearchSpace, DEFAULT_ENUMERATION_BUDGET};
use skewcode_core::{Error, Executor, GaloisField, GrayMatrix, SkewRing};

use crate::config::{parse_coords, parse_poly, resolve_field, CodeConfig, CodeInputs, DistanceConfig};
use crate::driver::run_search;
use crate::parallel::{init_pool, Parallel};
use crate::report::{to_csv, to_json, to_jsonl, Classical, CodeReport, ErrorReport, Format, QuantumReport, Sink};
use crate::table1::{compare_with_existing, reproduce_row, ROWS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_CRITERION: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;
pub const EXIT_OTHER: i32 = 6;

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "skewcode",
    version,
    about = "F_qR-skew cyclic codes, Gray images and CSS quantum codes"
)]
pub struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = crate::selfcheck::DEFAULT_SEED)]
    pub seed: u64,
    /// Distance-search budget (column lookups).
    #[arg(long, global = true, env = "SKEWCODE_BUDGET")]
    pub budget: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite field utilities.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Skew polynomial utilities.
    #[command(subcommand)]
    Skew(SkewCmd),
    /// Build a code and measure its Gray image.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Dual-containment certificate and CSS parameters.
    #[command(subcommand)]
    Quantum(QuantumCmd),
    /// Sweep a search space.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Reproduce published tables.
    #[command(subcommand)]
    Reproduce(ReproduceCmd),
    /// Run the seeded consistency suites (uses --seed).
    Selfcheck,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Field order q = p^m.
    #[arg(long)]
    pub q: Option<u32>,
    /// Full descriptor, e.g. `GF(3^2);modulus=2,2,1`.
    #[arg(long, conflicts_with = "q")]
    pub field: Option<String>,
    /// Ascending modulus coefficients (with --q).
    #[arg(long, requires = "q")]
    pub modulus: Option<String>,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Frobenius exponent i of Θ(a) = a^(p^i).
    #[arg(long = "i", default_value_t = 1)]
    pub theta_exp: u32,
    /// Read polynomials in compact descending notation.
    #[arg(long)]
    pub paper_notation: bool,
}

#[derive(Debug, Subcommand)]
pub enum FieldCmd {
    /// Print tables and the Frobenius orbit of w.
    Info(FieldArgs),
}

#[derive(Debug, Subcommand)]
pub enum SkewCmd {
    /// Right division a = q·b + r.
    Divmod {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// The dagger polynomial h†.
    Dagger {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        h: String,
    },
    /// Monic right divisors of x^n − 1 of a given degree.
    Divisors {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        /// Cap on q^degree candidates.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        enum_budget: u64,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long)]
    pub alpha: Option<usize>,
    #[arg(long)]
    pub beta: Option<usize>,
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub g1: Option<String>,
    #[arg(long)]
    pub g2: Option<String>,
    /// `hadamard`, `identity` or four row-major entries.
    #[arg(long, default_value = "hadamard")]
    pub gray: String,
    /// `idempotent` or `additive`.
    #[arg(long, default_value = "idempotent")]
    pub gray_coords: String,
    /// `auto`, `enumerate` or `columns`.
    #[arg(long, default_value = "auto")]
    pub strategy: String,
    /// Re-run the configuration echoed in an earlier JSON report.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "f", "g1", "g2"])]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CodeCmd {
    /// Construct C, its Gray image and [n, k, d].
    Build {
        #[command(flatten)]
        code: CodeArgs,
        /// Include the Gray-image generator matrix.
        #[arg(long)]
        dump_matrix: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuantumCmd {
    /// Certificate, explicit containment and [[n, k, d]]_q.
    Check {
        #[command(flatten)]
        code: CodeArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SearchCmd {
    /// Enumerate certified (f, g1, g2) and rank the quantum codes.
    Run {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "i", default_value_t = 1)]
        theta_exp: u32,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long, default_value_t = 1)]
        max_deg_f: usize,
        #[arg(long, default_value_t = 1)]
        max_deg_g1: usize,
        #[arg(long, default_value_t = 1)]
        max_deg_g2: usize,
        #[arg(long, default_value = "hadamard")]
        gray: String,
        #[arg(long, default_value = "idempotent")]
        gray_coords: String,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        enum_budget: u64,
        /// Keep only the first N ranked rows.
        #[arg(long)]
        limit: Option<usize>,
        /// Fill the seconds column (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReproduceCmd {
    /// All seven rows of the new-codes table.
    Table1 {
        /// Comma-separated row numbers (default: all).
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        #[arg(long, default_value = "hadamard")]
        gray: String,
        #[arg(long, default_value = "idempotent")]
        gray_coords: String,
        /// Skip the explicit Gray-image containment check.
        #[arg(long)]
        no_explicit: bool,
    },
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub code: i32,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (kind, code) = match &e {
            Error::Parse(_)
            | Error::BadModulus { .. }
            | Error::ReducibleModulus { .. }
            | Error::NotPrimitive { .. }
            | Error::NotPrime(_)
            | Error::NoDefaultModulus { .. }
            | Error::ForeignElement { .. }
            | Error::GrayMatrix(_) => ("parse", EXIT_PARSE),
            Error::NoApplicableCriterion { .. }
            | Error::OrderDoesNotDivideBeta { .. }
            | Error::NotRightDivisor { .. }
            | Error::NotSeparable
            | Error::NotDualContaining { .. } => ("criterion", EXIT_CRITERION),
            Error::BudgetExceeded(_) | Error::EnumerationBudget { .. } => ("budget", EXIT_BUDGET),
            _ => ("math", EXIT_OTHER),
        };
        CliError {
            kind,
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            kind: "io",
            message: e.to_string(),
            code: EXIT_OTHER,
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(inner) => {
                let mut c = CliError::from(inner.clone());
                c.message = format!("{e:#}");
                c
            }
            None => CliError {
                kind: "other",
                message: format!("{e:#}"),
                code: EXIT_OTHER,
            },
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        kind: "usage",
        message: message.into(),
        code: EXIT_USAGE,
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `argv` and runs; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            if code != EXIT_OK {
                report_error(&usage(e.kind().to_string()));
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            report_error(&e);
            e.code
        }
    }
}

fn report_error(e: &CliError) {
    let body = ErrorReport {
        kind: e.kind,
        message: e.message.clone(),
        exit_code: e.code,
    };
    eprintln!("{}", serde_json::json!({ "error": body }));
}

fn sink(cli: &Cli) -> Sink {
    Sink {
        format: match cli.format {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Text => Format::Text,
        },
        out: cli.out.clone(),
    }
}

fn distance_config(cli: &Cli, strategy: &str) -> DistanceConfig {
    let mut d = DistanceConfig {
        strategy: strategy.to_string(),
        ..DistanceConfig::default()
    };
    if let Some(b) = cli.budget {
        d.budget = b;
    }
    d
}

fn field_of(args: &FieldArgs) -> CliResult<Arc<GaloisField>> {
    Ok(resolve_field(args.q, args.field.as_deref(), args.modulus.as_deref())?)
}

#[derive(Serialize)]
struct RunConfig<'a> {
    jobs: usize,
    seed: u64,
    budget: u64,
    format: &'a str,
    out: Option<String>,
}

fn run_config(cli: &Cli) -> RunConfig<'_> {
    RunConfig {
        jobs: cli.jobs,
        seed: cli.seed,
        budget: cli.budget.unwrap_or(skewcode_core::lincode::DEFAULT_BUDGET),
        format: match cli.format {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        },
        out: cli.out.as_ref().map(|p| p.display().to_string()),
    }
}

fn execute(cli: &Cli) -> CliResult<i32> {
    init_pool(cli.jobs).map_err(|e| usage(format!("--jobs: {e}")))?;
    let out = sink(cli);
    match &cli.command {
        Command::Field(FieldCmd::Info(args)) => field_info(cli, &out, args),
        Command::Skew(cmd) => skew(cli, &out, cmd),
        Command::Code(CodeCmd::Build { code, dump_matrix }) => code_build(cli, &out, code, *dump_matrix),
        Command::Quantum(QuantumCmd::Check { code }) => quantum_check(cli, &out, code),
        Command::Search(cmd) => search(cli, &out, cmd),
        Command::Reproduce(ReproduceCmd::Table1 {
            rows,
            gray,
            gray_coords,
            no_explicit,
        }) => reproduce(cli, &out, rows, gray, gray_coords, !no_explicit),
        Command::Selfcheck => selfcheck(cli, &out),
    }
}

fn emit_json_or_text<T: Serialize>(out: &Sink, value: &T, text: impl FnOnce() -> String) -> CliResult<()> {
    match out.format {
        Format::Json => out.write(&to_json(value))?,
        Format::Text => out.write(&text())?,
        Format::Csv => return Err(usage("csv output is only available for search and reproduce")),
    }
    Ok(())
}

#[derive(Serialize)]
struct FieldReport<'a> {
    run: RunConfig<'a>,
    field: String,
    q: u32,
    characteristic: u32,
    degree: u32,
    frobenius_orbit_of_w: Vec<String>,
    powers_of_w: Vec<String>,
    automorphism_orders: Vec<u32>,
}

fn field_info(cli: &Cli, out: &Sink, args: &FieldArgs) -> CliResult<i32> {
    let f = field_of(args)?;
    let w = f.generator();
    let mut orbit = vec![w];
    loop {
        let next = f.frobenius(*orbit.last().expect("nonempty"), 1);
        if next == w {
            break;
        }
        orbit.push(next);
    }
    let report = FieldReport {
        run: run_config(cli),
        field: f.descriptor(),
        q: f.order(),
        characteristic: f.characteristic(),
        degree: f.degree(),
        frobenius_orbit_of_w: orbit.iter().map(|&a| f.format(a)).collect(),
        powers_of_w: (0..f.order() as i64 - 1)
            .map(|k| {
                let a = f.pow_w(k);
                format!("w^{k} = {}", a.value())
            })
            .collect(),
        automorphism_orders: (0..f.degree()).map(|i| f.automorphism_order(i)).collect(),
    };
    emit_json_or_text(out, &report, || {
        let mut s = format!("# {}\n", report.field);
        s += &format!("frobenius orbit of w: {}\n", report.frobenius_orbit_of_w.join(" -> "));
        for line in &report.powers_of_w {
            s += line;
            s.push('\n');
        }
        s
    })?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SkewReport<'a> {
    run: RunConfig<'a>,
    field: String,
    theta_exp: u32,
    warnings: Vec<String>,
    #[serde(flatten)]
    result: serde_json::Value,
}

fn skew(cli: &Cli, out: &Sink, cmd: &SkewCmd) -> CliResult<i32> {
    let ring_args = match cmd {
        SkewCmd::Divmod { ring, .. } | SkewCmd::Dagger { ring, .. } | SkewCmd::Divisors { ring, .. } => ring,
    };
    let field = field_of(&ring_args.field)?;
    let ring = SkewRing::new(Arc::clone(&field), ring_args.theta_exp);
    let mut warnings = Vec::new();
    let compact = ring_args.paper_notation;
    let (result, text) = match cmd {
        SkewCmd::Divmod { a, b, .. } => {
            let a = parse_poly(&ring, a, compact, &mut warnings)?;
            let b = parse_poly(&ring, b, compact, &mut warnings)?;
            let (q, r) = a.right_divmod(&b)?;
            let text = format!("quotient: {q}\nremainder: {r}\n");
            (
                serde_json::json!({
                    "a": a.to_ascending(), "b": b.to_ascending(),
                    "quotient": q.to_ascending(), "remainder": r.to_ascending(),
                    "right_divisor": r.is_zero(),
                }),
                text,
            )
        }
        SkewCmd::Dagger { h, .. } => {
            let h = parse_poly(&ring, h, compact, &mut warnings)?;
            let d = h.dagger()?;
            let text = format!("{d}\n");
            (
                serde_json::json!({ "h": h.to_ascending(), "dagger": d.to_ascending() }),
                text,
            )
        }
        SkewCmd::Divisors {
            n, degree, enum_budget, ..
        } => {
            let list = right_divisors(&ring, *n, *degree, *enum_budget)?;
            let text = list.iter().map(|g| format!("{g}\n")).collect();
            (
                serde_json::json!({
                    "n": n, "degree": degree, "count": list.len(),
                    "divisors": list.iter().map(|g| g.to_ascending()).collect::<Vec<_>>(),
                }),
                text,
            )
        }
    };
    let report = SkewReport {
        run: run_config(cli),
        field: field.descriptor(),
        theta_exp: ring_args.theta_exp,
        warnings,
        result,
    };
    emit_json_or_text(out, &report, || text)?;
    Ok(EXIT_OK)
}

fn code_config(cli: &Cli, args: &CodeArgs) -> CliResult<(CodeConfig, Vec<String>)> {
    if let Some(path) = &args.config {
        let raw = std::fs::read_to_string(path)?;
        let value: serde_json::Value =
            serde_json::from_str(&raw).map_err(|e| CliError::from(Error::Parse(format!("{}: {e}", path.display()))))?;
        let cfg = value.get("config").cloned().unwrap_or(value);
        let mut cfg: CodeConfig = serde_json::from_value(cfg)
            .map_err(|e| CliError::from(Error::Parse(format!("{}: {e}", path.display()))))?;
        if let Some(b) = cli.budget {
            cfg.distance.budget = b;
        }
        return Ok((cfg, Vec::new()));
    }
    let missing: Vec<&str> = [
        ("--alpha", args.alpha.is_none()),
        ("--beta", args.beta.is_none()),
        ("--f", args.f.is_none()),
        ("--g1", args.g1.is_none()),
        ("--g2", args.g2.is_none()),
    ]
    .iter()
    .filter(|(_, m)| *m)
    .map(|(n, _)| *n)
    .collect();
    if !missing.is_empty() {
        return Err(usage(format!("missing {} (or pass --config)", missing.join(", "))));
    }
    let field = field_of(&args.ring.field)?;
    Ok(CodeConfig::from_inputs(CodeInputs {
        field,
        theta_exp: args.ring.theta_exp,
        alpha: args.alpha.unwrap_or_default(),
        beta: args.beta.unwrap_or_default(),
        f: args.f.as_deref().unwrap_or_default(),
        g1: args.g1.as_deref().unwrap_or_default(),
        g2: args.g2.as_deref().unwrap_or_default(),
        paper_notation: args.ring.paper_notation,
        gray: &args.gray,
        gray_coords: &args.gray_coords,
        distance: distance_config(cli, &args.strategy),
    })?)
}

fn code_build(cli: &Cli, out: &Sink, args: &CodeArgs, dump: bool) -> CliResult<i32> {
    let (config, mut warnings) = code_config(cli, args)?;
    let r = config.resolve()?;
    let basis = module_span(&r.spec)?;
    let (cx, c1, c2) = r.spec.separable_blocks()?;
    if basis.dimension() != cx.dimension() + c1.dimension() + c2.dimension() {
        warnings.push("module span dimension differs from the block sum".into());
    }
    let image = gray_image_matrix(&r.spec, &r.gray, r.coords)?;
    let d = image.min_distance(&r.distance, &Parallel)?;
    let report = CodeReport {
        n: image.length(),
        k: image.dimension(),
        d,
        q: r.field.order(),
        block_dimensions: [cx.dimension(), c1.dimension(), c2.dimension()],
        matrix: dump.then(|| {
            image
                .rows()
                .iter()
                .map(|row| row.iter().map(|&a| r.field.format(a)).collect())
                .collect()
        }),
        config,
        warnings,
    };
    emit_json_or_text(out, &report, || {
        format!("[{},{},{}]_{}\n", report.n, report.k, report.d, report.q)
    })?;
    Ok(EXIT_OK)
}

fn quantum_check(cli: &Cli, out: &Sink, args: &CodeArgs) -> CliResult<i32> {
    let (config, mut warnings) = code_config(cli, args)?;
    let r = config.resolve()?;
    let cert = check_dual_containing(&r.spec)?;
    if !cert.witnesses_hold() {
        warnings.push("certificate witnesses do not re-multiply".into());
    }
    let image = gray_image_matrix(&r.spec, &r.gray, r.coords)?;
    let explicit = image.contains(&image.dual())?;
    let exec: &dyn Executor = &Parallel;
    let d = image.min_distance(&r.distance, exec)?;
    let (n, k) = (image.length(), image.dimension());
    let quantum = if cert.is_valid() {
        Some(css_params(n, k, d, r.field.order())?)
    } else {
        None
    };
    let defect = quantum.as_ref().map(singleton_defect).transpose()?;
    let report = QuantumReport {
        n,
        k: quantum.map(|p| p.k),
        d,
        q: r.field.order(),
        dual_containing: cert.is_valid(),
        explicit_dual_containing: explicit,
        route: cert.route.name().into(),
        classical: Classical { n, k, d },
        singleton_defect: defect,
        witnesses: (&cert).into(),
        config,
        warnings,
    };
    emit_json_or_text(out, &report, || match quantum {
        Some(p) => format!("[{n},{k},{d}]_{} -> {p}\n", report.q),
        None => format!("[{n},{k},{d}]_{} is not dual-containing\n", report.q),
    })?;
    if cert.is_valid() != explicit {
        return Err(CliError {
            kind: "verification",
            message: "certificate and explicit containment disagree".into(),
            code: EXIT_VERIFICATION,
        });
    }
    Ok(if cert.is_valid() { EXIT_OK } else { EXIT_VERIFICATION })
}

#[derive(Serialize)]
struct SearchReport<'a> {
    run: RunConfig<'a>,
    field: String,
    theta_exp: u32,
    alpha: usize,
    beta: usize,
    max_degrees: [usize; 3],
    gray: String,
    gray_coords: String,
    distance: DistanceConfig,
    candidates: [usize; 3],
    spot_checked: Vec<usize>,
    rows: Vec<crate::report::SearchRow>,
}

fn search(cli: &Cli, out: &Sink, cmd: &SearchCmd) -> CliResult<i32> {
    let SearchCmd::Run {
        field,
        theta_exp,
        alpha,
        beta,
        max_deg_f,
        max_deg_g1,
        max_deg_g2,
        gray,
        gray_coords,
        enum_budget,
        limit,
        timing,
    } = cmd;
    let field = field_of(field)?;
    let distance = distance_config(cli, "auto");
    let space = SearchSpace {
        gray: GrayMatrix::parse(&field, gray)?,
        coords: parse_coords(gray_coords)?,
        field: Arc::clone(&field),
        theta_exp: *theta_exp,
        alpha: *alpha,
        beta: *beta,
        max_deg_f: *max_deg_f,
        max_deg_g1: *max_deg_g1,
        max_deg_g2: *max_deg_g2,
        distance: distance.options()?,
        enumeration_budget: *enum_budget,
    };
    let outcome = run_search(&space, cli.seed, *timing)?;
    let mut rows = outcome.rows;
    if let Some(l) = limit {
        rows.truncate(*l);
    }
    match out.format {
        Format::Csv => out.write(&to_csv(&rows).map_err(|e| usage(e.to_string()))?)?,
        Format::Text => out.write(&to_jsonl(&rows))?,
        Format::Json => {
            let report = SearchReport {
                run: run_config(cli),
                field: field.descriptor(),
                theta_exp: *theta_exp,
                alpha: *alpha,
                beta: *beta,
                max_degrees: [*max_deg_f, *max_deg_g1, *max_deg_g2],
                gray: space.gray.tokens(&field),
                gray_coords: gray_coords.clone(),
                distance,
                candidates: [outcome.candidates.0, outcome.candidates.1, outcome.candidates.2],
                spot_checked: outcome.spot_checked,
                rows,
            };
            out.write(&to_json(&report))?
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReproduceReport<'a> {
    run: RunConfig<'a>,
    gray: String,
    gray_coords: String,
    distance: DistanceConfig,
    passed: usize,
    total: usize,
    rows: Vec<crate::table1::RowReport>,
    comparisons: Vec<crate::table1::ComparisonReport>,
}

fn reproduce(cli: &Cli, out: &Sink, rows: &[usize], gray: &str, coords: &str, explicit: bool) -> CliResult<i32> {
    for r in rows {
        if !(1..=ROWS.len()).contains(r) {
            return Err(usage(format!("--rows: no row {r}")));
        }
    }
    let coords_v = parse_coords(coords)?;
    let distance = distance_config(cli, "auto");
    let opts = distance.options()?;
    let mut reports = Vec::new();
    for row in ROWS.iter().filter(|r| rows.is_empty() || rows.contains(&r.index)) {
        reports.push(reproduce_row(row, gray, coords_v, &opts, &Parallel, explicit)?);
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let total = reports.len();
    match out.format {
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat<'a> {
                row: usize,
                q: u32,
                alpha: usize,
                beta: usize,
                f: &'a str,
                g1: &'a str,
                g2: &'a str,
                n: usize,
                k: usize,
                d: usize,
                qn: usize,
                qk: usize,
                qd: usize,
                dual_containing: bool,
                expected: &'a str,
                pass: bool,
                seconds: f64,
                notes: String,
            }
            let flat: Vec<Flat> = reports
                .iter()
                .map(|r| Flat {
                    row: r.row,
                    q: r.q,
                    alpha: r.alpha,
                    beta: r.beta,
                    f: &r.f,
                    g1: &r.g1,
                    g2: &r.g2,
                    n: r.n,
                    k: r.k,
                    d: r.d,
                    qn: r.qn,
                    qk: r.qk,
                    qd: r.qd,
                    dual_containing: r.dual_containing,
                    expected: &r.expected,
                    pass: r.pass,
                    seconds: r.seconds,
                    notes: r.notes.join(" | "),
                })
                .collect();
            out.write(&to_csv(&flat).map_err(|e| usage(e.to_string()))?)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let quantum = if r.dual_containing {
                    format!("[[{},{},{}]]", r.qn, r.qk, r.qd)
                } else {
                    "not dual-containing".into()
                };
                s += &format!(
                    "row {} {}: got [{},{},{}] / {} expected {} ({:.2}s)\n",
                    r.row,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.n,
                    r.k,
                    r.d,
                    quantum,
                    r.expected,
                    r.seconds
                );
                for n in &r.notes {
                    s += &format!("  note: {n}\n");
                }
            }
            s += &format!("{passed}/{total} rows pass\n");
            out.write(&s)?
        }
        Format::Json => {
            let report = ReproduceReport {
                run: run_config(cli),
                gray: gray.to_string(),
                gray_coords: coords.to_string(),
                distance,
                passed,
                total,
                rows: reports,
                comparisons: compare_with_existing()?,
            };
            out.write(&to_json(&report))?
        }
    }
    Ok(if passed == total { EXIT_OK } else { EXIT_VERIFICATION })
}

#[derive(Serialize)]
struct SelfCheckReport<'a> {
    run: RunConfig<'a>,
    passed: bool,
    #[serde(flatten)]
    suites: crate::selfcheck::SelfCheck,
}

fn selfcheck(cli: &Cli, out: &Sink) -> CliResult<i32> {
    let suites = crate::selfcheck::run_all(cli.seed)?;
    let passed = suites.passed();
    let report = SelfCheckReport {
        run: run_config(cli),
        passed,
        suites,
    };
    emit_json_or_text(out, &report, || {
        let s = &report.suites;
        let mut t = String::new();
        for (q, a) in &s.skew_axioms {
            t += &format!("skew axioms GF({q}): {}/{} clean\n", a.cases - a.failures, a.cases);
        }
        t += &format!(
            "divmod: {}/{} clean\n",
            s.divmod.cases - s.divmod.failures,
            s.divmod.cases
        );
        for (q, g) in &s.gray_isometry {
            t += &format!("gray isometry GF({q}): {}/{} clean\n", g.cases - g.failures, g.cases);
        }
        for ((a, b), c) in &s.certificate {
            t += &format!(
                "certificate ({a},{b}): {} cases, {} certified, {} agree, {} dual-commute\n",
                c.cases, c.certified, c.agree, c.dual_commutes
            );
        }
        t += &format!(
            "distance kernels: {} disagreements in {}\n",
            s.distance.failures, s.distance.cases
        );
        t += if passed { "PASS\n" } else { "FAIL\n" };
        t
    })?;
    Ok(if passed { EXIT_OK } else { EXIT_VERIFICATION })
}
