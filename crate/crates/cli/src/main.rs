use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(
    name = "ccnet",
    version,
    about = "Corner-classification networks with quaternion inputs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the codeword for one integer.
    Encode {
        #[arg(long)]
        value: usize,
        #[arg(long)]
        range: usize,
        #[arg(long, default_value = "quaternion")]
        scheme: String,
    },
    /// Train on sampled points of a pattern and classify the whole grid.
    Classify {
        #[command(flatten)]
        source: PatternArgs,
        #[arg(long, default_value_t = 75)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run every (n, r, seed) combination and write the results as CSV.
    Sweep {
        #[command(flatten)]
        source: PatternArgs,
        #[arg(long, value_delimiter = ',', default_value = "75,65,55,45,35,25")]
        ns: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        rs: Vec<String>,
        /// Number of seeds, counting up from --seed.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Summarize a sweep CSV: mean error per (n, r) and the optimal n/N per r.
    Report { csv: std::path::PathBuf },
}

#[derive(Args)]
struct PatternArgs {
    /// Built-in pattern (spiral, box) or a pattern file path.
    #[arg(long, default_value = "spiral")]
    pattern: String,
    /// Side length of built-in patterns.
    #[arg(long, default_value_t = 16)]
    size: usize,
    #[arg(long, default_value = "quaternion")]
    scheme: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Encode {
            value,
            range,
            scheme,
        } => commands::encode(value, range, &scheme),
        Command::Classify { source, n, r, seed } => {
            commands::classify(&source.pattern, source.size, &source.scheme, n, r, seed)
        }
        Command::Sweep {
            source,
            ns,
            rs,
            seeds,
            seed,
            out,
        } => commands::sweep(
            &source.pattern,
            source.size,
            &source.scheme,
            &ns,
            &rs,
            seed,
            seeds,
            &out,
        ),
        Command::Report { csv } => commands::report(&csv),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
