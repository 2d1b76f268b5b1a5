//! Command-line frontend: fit a chain, approximate it with a dominant
//! fraction of its points, or sweep a list of fractions.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use splinemerge::{
    approximate_with_fraction, emit_results, emit_sweep, fit, load_points, sweep, Error,
    FitConfig, PointFormat, Tension,
};

#[derive(Parser)]
#[command(name = "splinemerge", version, about = "Fit C2 cubic B-spline curves to ordered point chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit the full chain (planar or space, by dimension)
    Fit(CommonArgs),
    /// Approximate with a dominant fraction of the points
    Approx(ApproxArgs),
    /// Run the approximation over a list of fractions
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for PointFormat {
    fn from(f: FormatArg) -> PointFormat {
        match f {
            FormatArg::Csv => PointFormat::Csv,
            FormatArg::Json => PointFormat::Json,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Input point file, one point per line
    #[arg(long)]
    input: PathBuf,

    /// Input file format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Tension of the underlying cardinal spline
    #[arg(long, default_value_t = 0.5)]
    tension: f64,

    /// Axis shared by all coordinate planes of a space fit
    #[arg(long, default_value_t = 0)]
    independent_axis: usize,

    /// Samples per curve segment in emitted files
    #[arg(long, default_value_t = 32)]
    samples: usize,

    /// Reproduce the piecewise Bezier exactly (C1) instead of the C2 smoothing
    #[arg(long)]
    bezier_exact: bool,

    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct ApproxArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Fraction of the points to keep as dominant, in (0, 1]
    #[arg(long)]
    fraction: f64,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Comma-separated fractions to sweep
    #[arg(long, value_delimiter = ',', default_value = "1.0,0.9,0.8,0.7")]
    fractions: Vec<f64>,
}

impl CommonArgs {
    fn config(&self, fraction: f64) -> Result<FitConfig, Error> {
        let config = FitConfig {
            tension: Tension::new(self.tension)?,
            independent_axis: self.independent_axis,
            dominant_fraction: fraction,
            samples_per_segment: self.samples,
            bezier_exact_knots: self.bezier_exact,
        };
        config.validate()?;
        Ok(config)
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let written = match cli.command {
        Command::Fit(args) => {
            let config = args.config(1.0)?;
            let chain = load_points(&args.input, args.format.into())?;
            let result = fit(&chain, &config)?;
            emit_results(&result, &config, &args.out)?
        }
        Command::Approx(args) => {
            let config = args.common.config(args.fraction)?;
            let chain = load_points(&args.common.input, args.common.format.into())?;
            let result = approximate_with_fraction(&chain, &config)?;
            if let Some(e) = result.error {
                println!(
                    "m = {} of {} points, square error = {e:.6}",
                    result.selection.as_ref().map(|s| s.m()).unwrap_or(0),
                    chain.len()
                );
            }
            emit_results(&result, &config, &args.common.out)?
        }
        Command::Sweep(args) => {
            let config = args.common.config(1.0)?;
            for f in &args.fractions {
                if !(*f > 0.0 && *f <= 1.0) {
                    return Err(Error::InvalidConfig(format!(
                        "fraction {f} outside (0, 1]"
                    )));
                }
            }
            let chain = load_points(&args.common.input, args.common.format.into())?;
            let rows = sweep(&chain, &args.fractions, &config)?;
            for (f, result) in &rows {
                println!(
                    "fraction {f}: m = {}, square error = {:.6}",
                    result.selection.as_ref().map(|s| s.m()).unwrap_or(0),
                    result.error.unwrap_or(0.0)
                );
            }
            emit_sweep(&rows, &args.common.out)?
        }
    };
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Input problems exit with 1, numeric failures during fitting with 2.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::Json(_)
        | Error::ChainTooShort { .. }
        | Error::DimensionMismatch { .. }
        | Error::DimensionTooLow { .. }
        | Error::AxisOutOfRange { .. }
        | Error::TooFewControls { .. }
        | Error::InvalidConfig(_)
        | Error::InvalidSelection(_) => 1,
        Error::NonFinite
        | Error::ParameterOutOfRange { .. }
        | Error::KnotsNotSorted
        | Error::KnotCountMismatch { .. }
        | Error::JunctionMismatch(..)
        | Error::SegmentCountMismatch
        | Error::IndependentMismatch { .. }
        | Error::ZeroLengthLeg
        | Error::CoincidentChord => 2,
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own usage text; report parse problems with
            // the input-error exit code, keeping --help/--version clean.
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
