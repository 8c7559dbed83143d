use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcatalan::runner::{self, Format, PolyQuery, RunConfig, RunError};

#[derive(Parser)]
#[command(name = "qcatalan", version, about = "Exact q-Catalan computations and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Common {
    /// Inclusive range `A..B`
    #[arg(long = "m", default_value = "1..20", value_parser = runner::parse_range)]
    m: std::ops::RangeInclusive<u32>,
    #[arg(long = "n", default_value = "1..20", value_parser = runner::parse_range)]
    n: std::ops::RangeInclusive<u32>,
    #[arg(long, default_value_t = 30)]
    x_order: usize,
    #[arg(long)]
    q_ceiling: Option<i64>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip pairs already present in the `--out` CSV file
    #[arg(long)]
    resume: bool,
    /// Closed-form data file (default: the bundled one)
    #[arg(long)]
    data: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            m_range: self.m.clone(),
            n_range: self.n.clone(),
            x_order: self.x_order,
            q_ceiling: self.q_ceiling,
            jobs: self.jobs,
            format: match self.format {
                OutFormat::Text => Format::Text,
                OutFormat::Json => Format::Json,
                OutFormat::Csv => Format::Csv,
            },
            out: self.out.clone(),
            resume: self.resume,
            data: self.data.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parity-unimodality sweep over m and n
    Sweep(Common),
    /// Run the verification suite
    VerifyPaper(Common),
    /// Print the tableau statistic tables for size n
    Figures {
        #[arg(default_value_t = 3)]
        n: u32,
    },
    /// Print one polynomial: `catalan N`, `rational M N`, `cbar M N` or `k N`
    Poly {
        #[arg(num_args = 1..=3, required = true)]
        args: Vec<String>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), RunError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, RunError> {
    match cli.command {
        Command::Sweep(c) => {
            let cfg = c.config();
            let sweep = runner::cmd_sweep(&cfg)?;
            match (&cfg.out, cfg.format) {
                // the CSV file was written while sweeping
                (Some(_), Format::Csv) => println!("{}", sweep.report.to_text().lines().last().unwrap_or_default()),
                (out, f) => emit(&sweep.render(f)?, out.as_ref())?,
            }
            Ok(sweep.report.exit_code())
        }
        Command::VerifyPaper(c) => {
            let cfg = c.config();
            let report = runner::cmd_verify_paper(&cfg)?;
            let text = match cfg.format {
                Format::Json => report.to_json(),
                _ => report.to_text(),
            };
            emit(&text, cfg.out.as_ref())?;
            Ok(report.exit_code())
        }
        Command::Figures { n } => {
            print!("{}", runner::cmd_figures(n)?);
            Ok(0)
        }
        Command::Poly { args } => {
            println!("{}", runner::cmd_poly(PolyQuery::parse(&args)?)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("qcatalan: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
