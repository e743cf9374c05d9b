//! `k3omega`: verification tables, slope bounds and the bigness figure.
//!
//! Exit codes: 0 when every check passes (known discrepancies are tolerated
//! and listed), 1 on an unexpected mismatch or failed certification, 2 on a
//! usage or input error.

mod commands;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use k3omega::geometry::build_model;
use k3omega::svg::FigureConfig;
use k3omega::Rational;

use output::{Document, Format};

#[derive(Parser, Debug)]
#[command(name = "k3omega", version, about = "Exact verification of the slope bounds on P(Omega_S)")]
struct Cli {
    /// Output format. Defaults to markdown, or svg for `figure`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Output file. Without it, output goes to the default directory if one
    /// is set, else to standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Default output directory; files are named after the command.
    #[arg(long, global = true, env = "K3OMEGA_OUT_DIR")]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute every printed intersection number.
    Tables,
    /// Certify the cone constraints, optionally on triples and systems from a JSON file.
    Verify {
        /// JSON input (`-` for standard input).
        #[arg(long)]
        input: Option<String>,
    },
    /// Exact lower bound with the LP vertex and Farkas data.
    BoundLower,
    /// Bracket the critical parameter and the upper bound.
    BoundUpper {
        #[arg(long, default_value = "1e-7", value_parser = parse_tolerance)]
        tolerance: Rational,
    },
    /// Zero set of the bigness cubic as SVG, or its sign samples as CSV.
    Figure {
        #[arg(long, default_value_t = 160, value_parser = parse_grid)]
        grid: usize,
        /// `lo:hi`
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        x_range: Option<(Rational, Rational)>,
        /// `lo:hi`
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        y_range: Option<(Rational, Rational)>,
    },
    /// Everything: tables, both bounds and the cone certificates.
    Report {
        #[arg(long, default_value = "1e-7", value_parser = parse_tolerance)]
        tolerance: Rational,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Tables => "tables",
            Command::Verify { .. } => "verify",
            Command::BoundLower => "bound-lower",
            Command::BoundUpper { .. } => "bound-upper",
            Command::Figure { .. } => "figure",
            Command::Report { .. } => "report",
        }
    }
}

fn parse_tolerance(s: &str) -> Result<Rational, String> {
    let t: Rational = s.parse().map_err(|e| format!("{e}"))?;
    if !t.is_positive() {
        return Err(format!("tolerance must be positive, got {t}"));
    }
    Ok(t)
}

fn parse_grid(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a grid size: {s:?}"))?;
    if n < 2 {
        return Err(format!("grid must be at least 2, got {n}"));
    }
    Ok(n)
}

fn parse_range(s: &str) -> Result<(Rational, Rational), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let lo: Rational = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: Rational = hi.parse().map_err(|e| format!("{e}"))?;
    if lo >= hi {
        return Err(format!("degenerate range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(anyhow::Error),
    Check(anyhow::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Runs the command; `Ok(false)` means the output was written but contains
/// unexpected mismatches.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let name = cli.command.name();
    let is_figure = matches!(cli.command, Command::Figure { .. });
    let format = cli.format.unwrap_or(if is_figure { Format::Svg } else { Format::Markdown });
    let valid = if is_figure { matches!(format, Format::Svg | Format::Csv) } else { format != Format::Svg };
    if !valid {
        return Err(Failure::Usage(anyhow::anyhow!("format `{}` is not available for `{name}`", format.extension())));
    }
    let input = match &cli.command {
        Command::Verify { input: Some(p) } => Some(commands::read_input(p).map_err(Failure::Usage)?),
        _ => None,
    };

    let model = build_model();
    let check = Failure::Check;
    let (text, ok) = match &cli.command {
        Command::Figure { grid, x_range, y_range } => {
            let mut cfg = FigureConfig { grid: *grid, ..Default::default() };
            if let Some(r) = x_range {
                cfg.x_range = r.clone();
            }
            if let Some(r) = y_range {
                cfg.y_range = r.clone();
            }
            let text = match format {
                Format::Csv => commands::figure_samples(&model, &cfg),
                _ => commands::figure_svg(&model, &cfg),
            }
            .map_err(check)?;
            (text, true)
        }
        cmd => {
            let doc: Document = match cmd {
                Command::Tables => commands::tables(&model),
                Command::Verify { .. } => commands::verify(&model, input.as_ref()).map_err(check)?,
                Command::BoundLower => commands::bound_lower(&model).map_err(check)?,
                Command::BoundUpper { tolerance } => commands::bound_upper(&model, tolerance).map_err(check)?,
                Command::Report { tolerance } => commands::report(&model, tolerance).map_err(check)?,
                Command::Figure { .. } => unreachable!(),
            };
            for r in doc.unexpected() {
                eprintln!("unexpected mismatch: {} (printed {}, derived {})", r.quantity, r.printed, r.derived);
            }
            (doc.render(format).map_err(check)?, doc.unexpected().is_empty())
        }
    };
    emit(cli, name, format, &text).map_err(Failure::Usage)?;
    Ok(ok)
}

fn emit(cli: &Cli, name: &str, format: Format, text: &str) -> Result<()> {
    let path = match (&cli.out, &cli.out_dir) {
        (Some(p), _) => p.clone(),
        (None, Some(dir)) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            dir.join(format!("{name}.{}", format.extension()))
        }
        (None, None) => {
            print!("{text}");
            return Ok(());
        }
    };
    write_file(&path, text)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
