use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use richardson_mult::runner::{execute, Format, Method, RunConfig};
use richardson_mult::starsets::DEFAULT_ORBIT_BUDGET;
use richardson_mult::{Mode, SvgContent};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Symplectic,
    Ordinary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Paths,
    Starsets,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SvgArg {
    Chains,
    Families,
    All,
}

/// Multiplicity of the Richardson variety X_alpha^gamma at the fixed point e_beta.
#[derive(Debug, Parser)]
#[command(name = "richmult", version)]
struct Cli {
    /// Rank d; tuples live in {1..2d} (symplectic) or {1..n} (ordinary).
    #[arg(long)]
    d: u32,
    /// Comma-separated, strictly increasing entries.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, value_enum, default_value = "symplectic")]
    mode: ModeArg,
    /// Ambient dimension (ordinary mode only).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "paths")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Include every family (or maximal star set) in the report.
    #[arg(long)]
    list_families: bool,
    /// Write an SVG drawing to this path.
    #[arg(long)]
    emit_svg: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "chains")]
    svg_content: SvgArg,
    /// Largest number of #-orbits the star-set search will accept.
    #[arg(long, default_value_t = DEFAULT_ORBIT_BUDGET)]
    orbit_budget: usize,
    /// Record per-method wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            d: cli.d,
            mode: match cli.mode {
                ModeArg::Symplectic => Mode::Symplectic,
                ModeArg::Ordinary => Mode::Ordinary,
            },
            n: cli.n,
            alpha: cli.alpha,
            beta: cli.beta,
            gamma: cli.gamma,
            method: match cli.method {
                MethodArg::Paths => Method::Paths,
                MethodArg::Starsets => Method::Starsets,
                MethodArg::Both => Method::Both,
            },
            format: match cli.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
            list_families: cli.list_families,
            emit_svg: cli.emit_svg,
            svg_content: match cli.svg_content {
                SvgArg::Chains => SvgContent::Chains,
                SvgArg::Families => SvgContent::Families,
                SvgArg::All => SvgContent::All,
            },
            orbit_budget: cli.orbit_budget,
            timings: cli.timings,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap reports help/version as errors too
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let cfg = RunConfig::from(cli);
    let code = execute(&cfg, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}
