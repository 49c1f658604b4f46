use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use star_ricci::classifier::{self, verify, GridSpec, ScanResult, SCHEMA_VERSION};
use star_ricci::conditions::{classify_hopf_with, ConditionOutcome, ConditionReport, DEFAULT_EPSILON};
use star_ricci::models::{AmbientSpace, HopfModel, ModelKind};
use star_ricci::numfmt::{self, format_sig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "star-ricci",
    version,
    about = "Parallelism conditions of the *-Ricci tensor of real hypersurfaces in CP2 and CH2"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Residual threshold below which a condition holds.
    #[arg(long, default_value_t = DEFAULT_EPSILON, global = true)]
    epsilon: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the catalog model kinds and their principal curvatures.
    Catalog,
    /// Classify one model.
    Check {
        /// Ambient space: cp2 or chh2.
        #[arg(long, default_value = "chh2")]
        space: String,
        /// Model kind: a0, a11, a12, b (CH2); a1, a2, b (CP2); abstract-hopf.
        #[arg(long)]
        kind: String,
        /// Tube radius r (catalog kinds other than a0).
        #[arg(long, allow_negative_numbers = true)]
        radius: Option<f64>,
        /// Principal curvature of ξ (abstract-hopf only).
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Principal curvature of W (abstract-hopf only).
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        /// Principal curvature of φW (abstract-hopf only; derived from the Hopf relation if omitted).
        #[arg(long, allow_negative_numbers = true)]
        nu: Option<f64>,
        /// ξ-derivative of λ.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        xi_lambda: f64,
        /// ξ-derivative of ν.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        xi_nu: f64,
        /// Gauge of the connection along ξ (∇_ξW = κφW).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        kappa: f64,
    },
    /// Classify a catalog kind over an evenly spaced radius grid.
    Scan {
        #[arg(long, default_value = "chh2")]
        space: String,
        #[arg(long)]
        kind: String,
        #[arg(long, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, allow_negative_numbers = true)]
        stop: f64,
        #[arg(long, short = 'n', default_value_t = 100)]
        count: usize,
    },
    /// Find the radius at which the *-Ricci tensor vanishes.
    Solve {
        #[arg(long, default_value = "chh2")]
        space: String,
        #[arg(long)]
        kind: String,
    },
    /// Run every identity and obstruction suite.
    Verify,
}

#[derive(Serialize)]
struct ModelSummary {
    space: String,
    kind: String,
    #[serde(with = "numfmt::option")]
    radius: Option<f64>,
    #[serde(with = "numfmt")]
    c: f64,
    #[serde(with = "numfmt")]
    alpha: f64,
    #[serde(with = "numfmt")]
    lambda: f64,
    #[serde(with = "numfmt")]
    nu: f64,
    #[serde(with = "numfmt")]
    xi_d_lambda: f64,
    #[serde(with = "numfmt")]
    xi_d_nu: f64,
}

impl From<&HopfModel> for ModelSummary {
    fn from(m: &HopfModel) -> Self {
        ModelSummary {
            space: m.space().id(),
            kind: m.kind().id().into(),
            radius: m.radius(),
            c: m.space().c(),
            alpha: m.alpha(),
            lambda: m.lambda(),
            nu: m.nu(),
            xi_d_lambda: m.xi_d_lambda(),
            xi_d_nu: m.xi_d_nu(),
        }
    }
}

#[derive(Serialize)]
struct CheckOutput {
    schema: u32,
    model: ModelSummary,
    #[serde(flatten)]
    report: ConditionReport,
}

#[derive(Serialize)]
struct SolveOutput {
    schema: u32,
    space: String,
    kind: String,
    #[serde(with = "numfmt")]
    radius: f64,
    #[serde(with = "numfmt")]
    lambda_nu_plus_c: f64,
}

#[derive(Serialize)]
struct VerifyOutput {
    schema: u32,
    passed: bool,
    suites: Vec<verify::SuiteOutcome>,
}

type CliResult = Result<ExitCode, String>;

// Like println!, but a closed stdout (e.g. piping into head) ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.epsilon.is_nan() || cli.epsilon <= 0.0 {
        eprintln!("error: --epsilon must be positive");
        return ExitCode::from(2);
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Catalog => catalog(cli.format),
        Command::Check { space, kind, radius, alpha, lambda, nu, xi_lambda, xi_nu, kappa } => {
            let space = AmbientSpace::parse(space).map_err(|e| e.to_string())?;
            let kind = ModelKind::parse(kind, &space).map_err(|e| e.to_string())?;
            let model = if kind == ModelKind::AbstractHopf {
                let (Some(alpha), Some(lambda)) = (alpha, lambda) else {
                    return Err("abstract-hopf needs --alpha and --lambda".into());
                };
                let nu = match nu {
                    Some(nu) => *nu,
                    None => star_ricci::models::compute_nu(*alpha, *lambda, space.c()).map_err(|e| e.to_string())?,
                };
                HopfModel::abstract_hopf(space, *alpha, *lambda, nu)
            } else {
                HopfModel::catalog(space, kind, *radius)
            }
            .map_err(|e| e.to_string())?
            .with_xi_derivatives(*xi_lambda, *xi_nu);
            check(&model, cli.format, cli.epsilon, *kappa)
        }
        Command::Scan { space, kind, start, stop, count } => {
            let space = AmbientSpace::parse(space).map_err(|e| e.to_string())?;
            let kind = ModelKind::parse(kind, &space).map_err(|e| e.to_string())?;
            let grid = GridSpec::new(*start, *stop, *count).map_err(|e| e.to_string())?;
            let result = classifier::scan(space, kind, grid, cli.epsilon).map_err(|e| e.to_string())?;
            print_scan(&result, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { space, kind } => {
            let space = AmbientSpace::parse(space).map_err(|e| e.to_string())?;
            let kind = ModelKind::parse(kind, &space).map_err(|e| e.to_string())?;
            let radius = classifier::solve_vanishing_radius(space, kind).map_err(|e| e.to_string())?;
            let m = HopfModel::catalog(space, kind, Some(radius)).map_err(|e| e.to_string())?;
            let out = SolveOutput {
                schema: SCHEMA_VERSION,
                space: space.id(),
                kind: kind.id().into(),
                radius,
                lambda_nu_plus_c: space.c() + m.lambda() * m.nu(),
            };
            match cli.format {
                Format::Json => out!("{}", to_json(&out)),
                Format::Table => {
                    out!("space   {}", out.space);
                    out!("kind    {}", out.kind);
                    out!("radius  {}", format_sig(out.radius));
                    out!("c+λν    {}", format_sig(out.lambda_nu_plus_c));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let suites = verify::run_all();
            let passed = suites.iter().all(|s| s.passed);
            match cli.format {
                Format::Json => out!("{}", to_json(&VerifyOutput { schema: SCHEMA_VERSION, passed, suites })),
                Format::Table => {
                    for s in &suites {
                        let tag = if s.passed { "PASS" } else { "FAIL" };
                        out!("{tag}  {:<56} max residual {}  ({:.3} s)", s.name, format_sig(s.max_residual), s.seconds);
                        if !s.detail.is_empty() {
                            out!("      {}", s.detail);
                        }
                    }
                }
            }
            Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn catalog(format: Format) -> CliResult {
    let entries = classifier::catalog_entries();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                schema: u32,
                kinds: Vec<classifier::CatalogEntry>,
            }
            out!("{}", to_json(&Out { schema: SCHEMA_VERSION, kinds: entries }));
        }
        Format::Table => {
            out!("{:<6} {:<4} {:<14} {:<12} {:<14} {}", "space", "id", "radius", "alpha", "lambda", "nu");
            for e in entries {
                out!("{:<6} {:<4} {:<14} {:<12} {:<14} {}", e.space, e.id, e.radius_domain, e.alpha, e.lambda, e.nu);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(model: &HopfModel, format: Format, epsilon: f64, kappa: f64) -> CliResult {
    let report = classify_hopf_with(model, epsilon, kappa);
    match format {
        Format::Json => {
            out!("{}", to_json(&CheckOutput { schema: SCHEMA_VERSION, model: model.into(), report }));
        }
        Format::Table => {
            let radius = model.radius().map(format_sig).unwrap_or_else(|| "-".into());
            out!("model   {} in {} (r = {radius})", model.kind().name(), model.space().id());
            out!(
                "curv.   alpha {}  lambda {}  nu {}",
                format_sig(model.alpha()),
                format_sig(model.lambda()),
                format_sig(model.nu())
            );
            print_outcome("vanishing", &report.vanishing);
            print_outcome("semi-parallel", &report.semi_parallel);
            let pp = &report.pseudo_parallel;
            let l = match (pp.degenerate, pp.l) {
                (true, _) => "L undetermined (both sides vanish)".to_string(),
                (false, Some(l)) => format!("L = {}", format_sig(l)),
                (false, None) => "no L".to_string(),
            };
            out!("{:<16}{:<6} residual {}  {l}", "pseudo-parallel", yes_no(pp.holds), format_sig(pp.residual));
            print_outcome("xi-parallel", &report.xi_parallel);
            let b = report.branch;
            out!("branch  type A: {}  A xi = 0: {}  constant along xi: {}", b.type_a, b.a_xi_zero, b.constant_along_xi);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_outcome(name: &str, o: &ConditionOutcome) {
    out!("{name:<16}{:<6} residual {}", yes_no(o.holds), format_sig(o.residual));
}

fn print_scan(result: &ScanResult, format: Format) {
    match format {
        Format::Json => out!("{}", to_json(result)),
        Format::Table => {
            out!("{:<20} {:<20} {:<20} {:<20} {:<20}", "radius", "vanishing", "semi-parallel", "L", "xi-parallel");
            for p in &result.points {
                let l = p.report.pseudo_parallel.l.map(format_sig).unwrap_or_else(|| "-".into());
                out!(
                    "{:<20} {:<20} {:<20} {:<20} {:<20}",
                    format_sig(p.radius),
                    format_sig(p.report.vanishing.residual),
                    format_sig(p.report.semi_parallel.residual),
                    l,
                    format_sig(p.report.xi_parallel.residual)
                );
            }
            let list = |v: &[f64]| v.iter().map(|r| format_sig(*r)).collect::<Vec<_>>().join(", ");
            out!("vanishing roots:     [{}]", list(&result.roots.vanishing));
            out!("semi-parallel roots: [{}]", list(&result.roots.semi_parallel));
        }
    }
}
