use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use qwalk_cli::curve::{curve, curve_csv, StateRef};
use qwalk_cli::export::{fourier_csv, fourier_table, model_document};
use qwalk_cli::figure::{figure, figure_csv, FigureOptions};
use qwalk_cli::output::{destination, emit, json, Format};
use qwalk_cli::table::{table, table_csv, TableKind};
use qwalk_cli::verify::{verify, VerifyOptions, DEFAULT_SEED};
use qwalk_cli::{exit_code, resolve_model, EXIT_FAIL, EXIT_PASS};

/// Random walks on finite quantum groups: verification, bound curves and
/// figure data.
#[derive(Parser)]
#[command(name = "qwalk", version)]
struct Cli {
    /// Directory for output files when --out is not given.
    #[arg(long, global = true, env = "QWALK_OUT_DIR")]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf axioms, the Haar state and the irrep catalogue.
    Verify {
        /// Registry name (sekine:3, classical:Z6, dual:S4, ...) or model document.
        model: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Seed for the sampled identities.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Upper and lower bounds, and optionally exact distances, for k = 1..=kmax.
    Curve {
        model: String,
        /// sekine-walk, snhat-walk, haar, counit, or a state document.
        state: String,
        #[arg(long, default_value_t = 100)]
        kmax: usize,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounds on the Sekine walk against alpha, with k = round(alpha n²).
    Figure {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2.0)]
        alpha_max: f64,
        /// Grid points per unit of alpha.
        #[arg(long, default_value_t = 20)]
        resolution: usize,
        /// Explicit alpha values, replacing the grid.
        #[arg(long = "alpha", value_delimiter = ',')]
        alphas: Vec<f64>,
        /// Largest n for which exact distances are computed.
        #[arg(long, default_value_t = 9)]
        exact_max_n: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form scalars over a range of n.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 50)]
        n_max: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a model document, or the Fourier transform of a state as CSV.
    Export {
        model: String,
        /// Export the Fourier transform of this state instead of the model.
        #[arg(long)]
        fourier: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An explicit format wins, then the extension of --out, then CSV.
fn pick_format(format: Option<Format>, out: Option<&Path>) -> Format {
    format.unwrap_or_else(|| match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        _ => Format::Csv,
    })
}

fn run(cli: Cli) -> Result<u8> {
    let out_dir = cli.out_dir.as_deref();
    match cli.command {
        Command::Verify {
            model,
            tol,
            seed,
            samples,
            format,
        } => {
            let report = verify(&model, &VerifyOptions { tol, seed, samples })?;
            let text = match format {
                ReportFormat::Text => report.to_string(),
                ReportFormat::Json => json(&report)?,
            };
            emit(None, &text)?;
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Curve {
            model,
            state,
            kmax,
            exact,
            tol,
            format,
            out,
        } => {
            let m = resolve_model(&model, tol)?;
            let state: StateRef = state.parse()?;
            let c = curve(&m, &state, kmax, exact)?;
            let format = pick_format(format, out.as_deref());
            let name = format!("curve_{}_{}.{}", slug(&model), slug(&state.label()), format.extension());
            let text = match format {
                Format::Csv => curve_csv(&c)?,
                Format::Json => json(&c)?,
            };
            emit(destination(out.as_deref(), out_dir, &name).as_deref(), &text)?;
            Ok(EXIT_PASS)
        }
        Command::Figure {
            n,
            alpha_max,
            resolution,
            alphas,
            exact_max_n,
            format,
            out,
        } => {
            let fig = figure(&FigureOptions {
                n,
                alpha_max,
                resolution,
                alphas,
                exact_max_n,
            })?;
            for w in &fig.warnings {
                eprintln!("warning: {w}");
            }
            let format = pick_format(format, out.as_deref());
            let name = format!("figure_sekine_{n}.{}", format.extension());
            let text = match format {
                Format::Csv => figure_csv(&fig)?,
                Format::Json => json(&fig)?,
            };
            emit(destination(out.as_deref(), out_dir, &name).as_deref(), &text)?;
            Ok(EXIT_PASS)
        }
        Command::Table {
            kind,
            n_min,
            n_max,
            format,
            out,
        } => {
            let t = table(kind, n_min, n_max)?;
            let format = pick_format(format, out.as_deref());
            let kind_name = match kind {
                TableKind::Snhat => "snhat",
                TableKind::Sekine => "sekine",
            };
            let name = format!("table_{kind_name}.{}", format.extension());
            let text = match format {
                Format::Csv => table_csv(&t)?,
                Format::Json => json(&t)?,
            };
            emit(destination(out.as_deref(), out_dir, &name).as_deref(), &text)?;
            Ok(EXIT_PASS)
        }
        Command::Export { model, fourier, out } => {
            let m = resolve_model(&model, 1e-9)?;
            let (name, text) = match fourier {
                Some(state) => {
                    let state: StateRef = state.parse()?;
                    let entries = fourier_table(&m, &state)?;
                    (
                        format!("fourier_{}_{}.csv", slug(&model), slug(&state.label())),
                        fourier_csv(&entries)?,
                    )
                }
                None => (format!("{}.model.json", slug(&model)), json(&model_document(&m)?)?),
            };
            emit(destination(out.as_deref(), out_dir, &name).as_deref(), &text)?;
            Ok(EXIT_PASS)
        }
    }
}

fn slug(s: &str) -> String {
    let base = Path::new(s).file_stem().and_then(|f| f.to_str()).unwrap_or(s);
    base.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
