use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dicke_cli::commands::{self, SteadyStateArgs};
use dicke_cli::sweep::{Format, Scale, SweepConfig};
use dicke_cli::CliError;
use dicke_core::{BasisKind, FieldKind};

/// Entanglement and spin squeezing of two atoms in the Dicke model.
#[derive(Parser)]
#[command(name = "dicke", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a density matrix read from a JSON file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        basis: Option<Basis>,
    },
    /// Report on the steady state under a driving field.
    SteadyState {
        #[arg(long, value_enum)]
        field: Field,
        /// Mean photon number N.
        #[arg(long = "n", allow_negative_numbers = true)]
        n_bar: f64,
        /// |M| (custom fields only).
        #[arg(long)]
        m_abs: Option<f64>,
        /// arg M in radians.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m_arg: f64,
        /// Also write the product-basis density matrix to this file.
        #[arg(long)]
        export_matrix: Option<PathBuf>,
    },
    /// Sweep N and write one row per grid point.
    Sweep {
        #[arg(long, value_enum)]
        field: Field,
        #[arg(long, allow_negative_numbers = true)]
        n_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        n_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "linear")]
        scale: Scale,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// |M| (custom fields only).
        #[arg(long, default_value_t = 0.0)]
        m_abs: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m_arg: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Product,
    Collective,
}

impl From<Basis> for BasisKind {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Product => BasisKind::Product,
            Basis::Collective => BasisKind::Collective,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    Thermal,
    Classical,
    Quantum,
    Custom,
}

impl From<Field> for FieldKind {
    fn from(f: Field) -> Self {
        match f {
            Field::Thermal => FieldKind::Thermal,
            Field::Classical => FieldKind::ClassicalSqueezed,
            Field::Quantum => FieldKind::QuantumSqueezed,
            Field::Custom => FieldKind::Custom,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { input, basis } => {
            let report = commands::analyze(&input, basis.map(Into::into))?;
            println!("{}", commands::render_report(&report));
        }
        Command::SteadyState {
            field,
            n_bar,
            m_abs,
            m_arg,
            export_matrix,
        } => {
            let report = commands::steady_state_report(&SteadyStateArgs {
                kind: field.into(),
                n_bar,
                m_abs,
                m_arg,
                export_matrix,
            })?;
            println!("{}", commands::render_report(&report));
        }
        Command::Sweep {
            field,
            n_min,
            n_max,
            steps,
            scale,
            output,
            format,
            m_abs,
            m_arg,
        } => {
            let config = SweepConfig {
                kind: field.into(),
                n_min,
                n_max,
                steps,
                scale,
                m_abs,
                m_arg,
                output_path: output,
                format,
            };
            let rows = commands::run_sweep(&config)?;
            eprintln!("wrote {rows} rows to {}", config.output_path.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
