//! `mcdm`: encode and decode bit files with a multi-composition distribution
//! matcher and tabulate matcher rates and divergences.

mod bitfile;
mod csv;
mod spec_args;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};
use mcdm::analysis::{
    divergence_base, optimize_m, sweep, DmKind, MonteCarloConfig, SweepConfig, TargetDistribution,
    DEFAULT_ENUMERATION_BUDGET,
};
use mcdm::{coder, BitVector, CodebookSpec};
use serde_json::json;
use thiserror::Error;

use bitfile::Format;
use spec_args::{KindArg, SpecArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    fn usage(e: impl ToString) -> Self {
        Self::Usage(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Data(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mcdm", version, about = "Multi-composition distribution matching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Size, input length, rate and base divergence of a codebook.
    Info {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        json: bool,
    },
    /// Optimal family parameter for a target distribution.
    Optimize {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        p1: f64,
        #[arg(long)]
        json: bool,
    },
    /// Map blocks of k data bits to codewords.
    Encode(CodecArgs),
    /// Map codewords back to data bits.
    Decode {
        #[command(flatten)]
        codec: CodecArgs,
        /// Reject codewords the encoder never produces.
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        strict: bool,
    },
    /// Write a CSV of rates and divergences over a grid of lengths.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
struct CodecArgs {
    #[command(flatten)]
    spec: SpecArgs,
    input: PathBuf,
    output: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Comma-separated kinds: cc, 2c, opt, range:LOW-HIGH, set:W1;W2;...
    #[arg(long, value_delimiter = ',', default_value = "cc,2c,opt")]
    kinds: Vec<String>,
    /// Lengths as a comma list of values and START:STOP:STEP ranges.
    #[arg(long)]
    n: String,
    #[arg(long)]
    p1: f64,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent random streams the samples are split over.
    #[arg(long, default_value_t = 4)]
    workers: usize,
    /// Largest k that is enumerated exactly instead of sampled.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Info { spec, json } => info(&spec, json),
        Command::Optimize { n, kind, p1, json } => optimize(n, kind, p1, json),
        Command::Encode(args) => encode(&args),
        Command::Decode { codec, strict } => decode(&codec, strict),
        Command::Analyze(args) => analyze(&args),
    }
}

fn weights_json(spec: &CodebookSpec) -> serde_json::Value {
    json!(spec.weights().as_slice())
}

fn info(args: &SpecArgs, as_json: bool) -> Result<(), CliError> {
    let r = args.resolve()?;
    let div_base = r.target.as_ref().map(|t| divergence_base(&r.spec, t));
    let spec = &r.spec;
    if as_json {
        let value = json!({
            "n": spec.n(),
            "kind": r.kind.to_string(),
            "m": r.m,
            "weights": weights_json(spec),
            "size": spec.size().to_string(),
            "k": spec.input_len(),
            "rate": spec.rate(),
            "p1": r.target.map(|t| t.p1()),
            "div_base": div_base,
        });
        println!("{value}");
        return Ok(());
    }
    println!("n        {}", spec.n());
    println!("kind     {}", r.kind);
    if let Some(m) = r.m {
        println!("m        {m}");
    }
    println!("weights  {}", spec.weights());
    println!("M        {}", spec.size());
    println!("k        {}", spec.input_len());
    println!("rate     {}", spec.rate());
    if let Some(d) = div_base {
        println!("div_base {d}");
    }
    Ok(())
}

fn optimize(n: usize, kind: KindArg, p1: f64, as_json: bool) -> Result<(), CliError> {
    let kind = match kind {
        KindArg::Cc => DmKind::ConstantComposition,
        KindArg::TwoC => DmKind::TwoComposition,
        KindArg::Opt => DmKind::UpToWeight,
        KindArg::Range | KindArg::Set => {
            return Err(CliError::Usage(
                "optimize needs a parameterized kind (cc, 2c or opt)".into(),
            ))
        }
    };
    let t = TargetDistribution::new(p1).map_err(CliError::usage)?;
    let opt = optimize_m(&kind, n, &t).map_err(CliError::usage)?;
    let spec = &opt.spec;
    if as_json {
        let value = json!({
            "n": n,
            "kind": kind.to_string(),
            "p1": p1,
            "m_star": opt.m_star,
            "weights": weights_json(spec),
            "complemented": opt.complemented,
            "size": spec.size().to_string(),
            "k": spec.input_len(),
            "rate": spec.rate(),
            "div_base": opt.div_base,
        });
        println!("{value}");
        return Ok(());
    }
    println!("m*       {}", opt.m_star);
    println!("weights  {}", spec.weights());
    println!("k        {}", spec.input_len());
    println!("rate     {}", spec.rate());
    println!("div_base {}", opt.div_base);
    Ok(())
}

fn read_bits(path: &Path, format: Format) -> Result<BitVector, CliError> {
    let data = fs::read(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    bitfile::read(&data, format).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, data: &[u8]) -> Result<(), CliError> {
    fs::write(path, data).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// Splits `bits` into blocks of `len` and maps each through `f`.
fn blockwise(
    bits: &BitVector,
    len: usize,
    mut f: impl FnMut(&BitVector) -> mcdm::Result<BitVector>,
) -> Result<BitVector, CliError> {
    if !bits.len().is_multiple_of(len) {
        return Err(CliError::Data(format!(
            "input has {} bits, not a multiple of the block length {len}",
            bits.len()
        )));
    }
    let mut out = BitVector::new();
    for (i, chunk) in bits.as_slice().chunks(len).enumerate() {
        let block = f(&BitVector::from(chunk.to_vec()))
            .map_err(|e| CliError::Data(format!("block {i}: {e}")))?;
        block.iter().for_each(|b| out.push(b));
    }
    Ok(out)
}

fn encode(args: &CodecArgs) -> Result<(), CliError> {
    let spec = args.spec.resolve()?.spec;
    let k = spec.input_len();
    if k == 0 {
        return Err(CliError::Usage(
            "codebook has a single usable codeword (k = 0) and carries no data".into(),
        ));
    }
    let bits = read_bits(&args.input, args.format)?;
    let out = blockwise(&bits, k, |u| coder::encode(&spec, u))?;
    write_file(&args.output, &bitfile::write(&out, args.format))
}

fn decode(args: &CodecArgs, strict: bool) -> Result<(), CliError> {
    let spec = args.spec.resolve()?.spec;
    let bits = read_bits(&args.input, args.format)?;
    let out = blockwise(&bits, spec.n(), |c| coder::decode(&spec, c, strict))?;
    write_file(&args.output, &bitfile::write(&out, args.format))
}

/// Parses `10:50:10,64,100` into `[10, 20, 30, 40, 50, 64, 100]`.
fn parse_n_list(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("invalid length list {s:?}"));
    let mut values = Vec::new();
    for part in s.split(',').map(str::trim) {
        let fields: Vec<&str> = part.split(':').collect();
        let nums = fields
            .iter()
            .map(|f| f.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        match nums[..] {
            [n] => values.push(n),
            [start, stop, step] if step > 0 && start <= stop => {
                values.extend((start..=stop).step_by(step));
            }
            _ => return Err(bad()),
        }
    }
    Ok(values)
}

fn analyze(args: &AnalyzeArgs) -> Result<(), CliError> {
    let kinds = args
        .kinds
        .iter()
        .map(|k| k.parse::<DmKind>().map_err(CliError::usage))
        .collect::<Result<Vec<_>, _>>()?;
    let n_values = parse_n_list(&args.n)?;
    let t = TargetDistribution::new(args.p1).map_err(CliError::usage)?;
    let config = SweepConfig {
        enumeration_budget: args.budget,
        monte_carlo: MonteCarloConfig {
            samples: args.samples,
            seed: args.seed,
            workers: args.workers,
        },
    };
    let rows = sweep(&kinds, &n_values, &t, &config).map_err(CliError::usage)?;
    let text = csv::render(&rows);
    match &args.out {
        Some(path) => write_file(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
