use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use optomech_cli::config::{self, Format, RunConfig};
use optomech_cli::error::CliError;
use optomech_cli::{modes, table};

#[derive(Parser)]
#[command(name = "optomech", version, about = "Radiation force, friction and diffusion scans for a moving scatterer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scan described by a JSON config.
    Run(Box<RunArgs>),
    /// Run every built-in cross-check and print a JSON report.
    Check,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    /// Output file; stdout if absent and the config names none.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Worker threads for scans.
    #[arg(long, env = "OPTOMECH_THREADS")]
    threads: Option<usize>,

    // Overrides of top-level scalar config fields.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    zeta: Option<f64>,
    #[arg(long = "zeta_im", allow_negative_numbers = true)]
    zeta_im: Option<f64>,
    #[arg(long = "k0_l")]
    k0_l: Option<f64>,
    #[arg(long)]
    k0x: Option<f64>,
    #[arg(long)]
    flux: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    velocity: Option<f64>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl RunArgs {
    fn overrides(&self) -> Vec<(&'static str, Value)> {
        let mut v = Vec::new();
        if let Some(m) = &self.mode {
            v.push(("mode", Value::from(m.clone())));
        }
        let scalars = [
            ("zeta", self.zeta),
            ("zeta_im", self.zeta_im),
            ("k0_l", self.k0_l),
            ("k0x", self.k0x),
            ("flux", self.flux),
            ("k", self.k),
            ("velocity", self.velocity),
        ];
        v.extend(scalars.into_iter().filter_map(|(name, x)| x.map(|x| (name, json!(x)))));
        v
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(*args),
        Command::Check => check(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("optomech: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: RunArgs) -> Result<ExitCode, CliError> {
    let path = args.config.display().to_string();
    let text = std::fs::read_to_string(&args.config).map_err(|source| CliError::Io { path, source })?;
    let config = config::parse(&text, &args.overrides())?;
    if let Some(w) = config.validity_warning() {
        eprintln!("{w}");
    }

    let table = with_threads(args.threads, || modes::compute(&config))??;

    let out_path = args.out.clone().or_else(|| config.output.as_ref()?.path.as_ref().map(PathBuf::from));
    let format = match args.format {
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
        None => config
            .output
            .as_ref()
            .and_then(|o| o.format)
            .or_else(|| {
                let ext = out_path.as_ref()?.extension()?;
                (ext == "json").then_some(Format::Json)
            })
            .unwrap_or(Format::Csv),
    };
    emit(out_path, format, &config, &table)?;
    Ok(if modes::any_failed(&table) { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| CliError::Config {
                path: "threads".into(),
                message: e.to_string(),
            })?;
            Ok(pool.install(f))
        }
    }
}

fn emit(path: Option<PathBuf>, format: Format, config: &RunConfig, t: &table::Table) -> Result<(), CliError> {
    let label = path.as_ref().map_or("stdout".to_string(), |p| p.display().to_string());
    let io_err = |source| CliError::Io { path: label.clone(), source };
    let sink: Box<dyn Write> = match &path {
        Some(p) => Box::new(File::create(p).map_err(io_err)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match format {
        Format::Csv => table::write_csv(&mut sink, config, t),
        Format::Json => table::write_json(&mut sink, config, t),
    }
    .and_then(|_| sink.flush())
    .map_err(io_err)
}

fn check() -> Result<ExitCode, CliError> {
    let outcomes = optomech_core::checks::run_all()?;
    let passed = outcomes.iter().all(|o| o.passed);
    let report = json!({
        "tool": "optomech",
        "version": optomech_core::VERSION,
        "passed": passed,
        "checks": outcomes,
    });
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    // A closed pipe downstream is not an error worth panicking over.
    let _ = writeln!(io::stdout(), "{text}");
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
