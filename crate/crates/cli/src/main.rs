use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ybmaps::algebra::{format_rational, parse_rational, BilinearForm};
use ybmaps::catalog::{
    build, custom_entry, descriptors, parse_coefficients, CatalogEntry, MapOptions,
    QuadrirationalMap,
};
use ybmaps::orbit::{orbit, OrbitError};
use ybmaps::report::{to_json_line, to_text};
use ybmaps::suite::{run_property, SuiteError};
use ybmaps::yb::{LaxMode, Property, SampleError, SampleRun};

/// Exact checks of Yang-Baxter maps, their transfer dynamics and Lax
/// matrices over the rationals.
#[derive(Parser)]
#[command(name = "ybmaps", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run property checks on seeded samples and report the outcome.
    Check(CheckArgs),
    /// Iterate a transfer map and write the trajectory as CSV.
    Orbit(OrbitArgs),
    /// List the available maps.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct MapArgs {
    /// Catalog id of the map.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    map: Option<String>,
    /// Coefficient file describing a custom quadrirational map.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Ambient dimension (projector maps) or tuple length (crystal).
    #[arg(long)]
    dim: Option<usize>,
    /// Image dimension for the Grassmannian maps.
    #[arg(long)]
    rank: Option<usize>,
    /// Diagonal of the bilinear form for grassmann-selfadjoint, e.g. "1,-1".
    #[arg(long)]
    form: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    target: MapArgs,
    /// Property to check; repeat for several. Defaults to yb.
    #[arg(long = "property")]
    properties: Vec<Property>,
    /// Tuple length for transfer and spectral properties.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comparison mode for Lax properties; the family's own mode if omitted.
    #[arg(long)]
    mode: Option<LaxMode>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    target: MapArgs,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Which transfer map T_i to iterate.
    #[arg(long, default_value_t = 1)]
    i: usize,
    #[arg(long)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Parse a coefficient file and print the coefficients as read.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A usage or configuration problem; maps to exit status 2.
#[derive(Debug)]
struct ConfigError(String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn config(message: impl ToString) -> anyhow::Error {
    ConfigError(message.to_string()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Orbit(args) => cmd_orbit(args),
        Command::Catalog(args) => cmd_catalog(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.chain().any(|e| e.is::<ConfigError>()) {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_custom(path: &Path) -> Result<(String, QuadrirationalMap)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| config(format!("cannot read {}: {e}", path.display())))?;
    let map = parse_coefficients(&text).map_err(|e| config(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "custom".into());
    Ok((name, map))
}

fn parse_form(text: &str) -> Result<BilinearForm> {
    let entries = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()
        .map_err(config)?;
    BilinearForm::diagonal(entries).map_err(config)
}

fn load(target: &MapArgs) -> Result<CatalogEntry> {
    if let Some(path) = &target.file {
        if target.dim.is_some() || target.rank.is_some() || target.form.is_some() {
            return Err(config(
                "--dim, --rank and --form do not apply to --file maps",
            ));
        }
        let (name, map) = read_custom(path)?;
        return Ok(custom_entry(&name, map));
    }
    let id = target
        .map
        .as_deref()
        .expect("clap requires --map or --file");
    let options = MapOptions {
        dim: target.dim,
        rank: target.rank,
        form: target.form.as_deref().map(parse_form).transpose()?,
    };
    build(id, &options).map_err(config)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode> {
    if args.samples == 0 {
        return Err(config("--samples must be at least 1"));
    }
    let entry = load(&args.target)?;
    let properties = if args.properties.is_empty() {
        vec![Property::YangBaxter]
    } else {
        args.properties.clone()
    };
    let mut out = output(args.out.as_deref())?;
    let mut all_pass = true;
    for property in properties {
        let run = SampleRun::new(args.seed, args.samples);
        let report = match run_property(&entry, property, args.n, run, args.mode) {
            Ok(r) => r,
            Err(SuiteError::Sample(e @ SampleError::ExhaustedRejections { .. })) => {
                return Err(anyhow::Error::from(e).context(format!("{property}: sampling failed")))
            }
            Err(e) => return Err(config(e)),
        };
        all_pass &= report.pass();
        let line = match args.format {
            Format::Json => to_json_line(&report),
            Format::Text => to_text(&report),
        };
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_orbit(args: OrbitArgs) -> Result<ExitCode> {
    let entry = load(&args.target)?;
    let trajectory = orbit(&entry, args.n, args.i, args.steps, args.seed).map_err(|e| match e {
        OrbitError::NoSteps | OrbitError::BadIndex { .. } | OrbitError::NotYangBaxter(_) => {
            config(e)
        }
        OrbitError::Sample(SampleError::EmptyRequest | SampleError::TupleTooShort(_)) => config(e),
        other => anyhow::Error::from(other).context("orbit aborted"),
    })?;
    let out = output(args.out.as_deref())?;
    trajectory.write_csv(out)?;
    Ok(ExitCode::SUCCESS)
}

fn flag(value: Option<bool>) -> &'static str {
    match value {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn cmd_catalog(args: CatalogArgs) -> Result<ExitCode> {
    let mut out = output(None)?;
    if let Some(path) = &args.file {
        let (name, map) = read_custom(path)?;
        match args.format {
            Format::Json => {
                let coefficients: serde_json::Map<String, serde_json::Value> = map
                    .coefficients()
                    .map(|(k, p)| {
                        let c: Vec<String> =
                            (0..3).rev().map(|d| format_rational(&p.coeff(d))).collect();
                        (k.to_string(), c.into())
                    })
                    .collect();
                let value = serde_json::json!({ "name": name, "coefficients": coefficients });
                writeln!(out, "{value}")?;
            }
            Format::Text => {
                writeln!(out, "# {name}")?;
                write!(out, "{map}")?;
            }
        }
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }
    let all = descriptors();
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&all)?)?,
        Format::Text => {
            for d in &all {
                writeln!(
                    out,
                    "{:<22} {:<16} yb={:<8} reversible={:<8} lax={}",
                    d.id,
                    d.slot_kind.to_string(),
                    flag(d.yang_baxter),
                    flag(d.reversible),
                    d.lax_family.as_deref().unwrap_or("-"),
                )?;
                writeln!(out, "    {}", d.description)?;
                if !d.constraints.is_empty() {
                    writeln!(out, "    constraints: {}", d.constraints)?;
                }
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
