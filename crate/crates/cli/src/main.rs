use std::io::{ErrorKind, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matroidal_core::field::FieldChoice;
use matroidal_kit::parse::parse_input;
use matroidal_kit::{run_command, CliError, Command, Config, OutputFormat};

const THREADS_VAR: &str = "MATROIDAL_KIT_THREADS";

#[derive(Parser)]
#[command(name = "matroidal-kit", version, about = "Analyze and certify matroidal monomial ideals")]
struct Cli {
    /// Coefficient field: q or gf:<prime>
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Skip Groebner certification in analyze
    #[arg(long, global = true)]
    no_certify: bool,
    /// Largest number of variables to enumerate
    #[arg(long, global = true, default_value_t = 5)]
    max_n: usize,
    /// Largest degree to enumerate
    #[arg(long, global = true, default_value_t = 3)]
    max_d: usize,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report: decomposition, criteria, homology, witness, certificate
    Analyze { input: Option<PathBuf> },
    /// Blocks of a degree-2 matroidal ideal
    Partition { input: Option<PathBuf> },
    /// Layer witness for ara(I)
    Witness { input: Option<PathBuf> },
    /// Layer witness with its Groebner certificate
    Certify { input: Option<PathBuf> },
    /// Census of full-support matroidal ideals
    Enumerate {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Rerun the worked examples and theorem sweeps
    ReproducePaper,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let field: FieldChoice = cli.field.parse().map_err(|e: matroidal_core::Error| CliError::Usage(e.to_string()))?;
    let config = Config {
        field,
        max_n: cli.max_n,
        max_d: cli.max_d,
        certify: !cli.no_certify,
        format: if cli.json { OutputFormat::Json } else { OutputFormat::Text },
    };
    let (command, path) = match cli.command {
        Cmd::Analyze { input } => (Command::Analyze, input),
        Cmd::Partition { input } => (Command::Partition, input),
        Cmd::Witness { input } => (Command::Witness, input),
        Cmd::Certify { input } => (Command::Certify, input),
        Cmd::Enumerate { n, d } => (Command::Enumerate { n, d }, None),
        Cmd::ReproducePaper => (Command::ReproducePaper, None),
    };
    let ideal = if command.needs_input() { Some(parse_input(&read_input(path.as_ref())?)?) } else { None };
    let output = run_command(&command, &config, ideal.as_ref())?;
    let rendered = match config.format {
        OutputFormat::Json => output.to_json() + "\n",
        OutputFormat::Text => output.to_text(),
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != ErrorKind::BrokenPipe {
            return Err(e.into());
        }
    }
    let violations = output.violations();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Theorem(violations.join("; ")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("matroidal-kit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
