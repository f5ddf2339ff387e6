use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pisum::oracle::validate_pi;
use pisum::render::{render_coeff, render_table, Format};
use pisum::report::check_paper;
use pisum::verify::run_verify;
use pisum_core::engine::{solve_beta_table, solve_zeta_table};
use pisum_core::fourier::Family;

#[derive(Parser, Debug)]
#[command(name = "pisum", version, about = "Exact even zeta and odd beta values")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Significant digits in decimal renderings.
    #[arg(long, global = true, default_value_t = 7, value_parser = clap::value_parser!(u32).range(1..=60))]
    precision: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print zeta(2k) = S_k·π^(2k) for k = 1..=K.
    Zeta {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        max_k: u32,
    },
    /// Print beta(2k+1) = T_k·π^(2k+1) for k = 0..=K.
    Beta {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=64))]
        max_k: u32,
    },
    /// Print the closed-form Fourier coefficient of one family.
    Coeffs {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        k: u32,
    },
    /// Check every published value against the engine and the oracles.
    CheckPaper,
    /// Run the invariant suite for k = 1..=K.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=32))]
        max_k: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Err(e) = validate_pi() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }

    match cli.command {
        Command::Zeta { max_k } => {
            let table = solve_zeta_table(max_k).expect("max_k validated");
            print!("{}", render_table(&table, cli.format, cli.precision));
            ExitCode::SUCCESS
        }
        Command::Beta { max_k } => {
            let table = solve_beta_table(max_k).expect("max_k validated");
            print!("{}", render_table(&table, cli.format, cli.precision));
            ExitCode::SUCCESS
        }
        Command::Coeffs { family, k } => match family.coeff(k) {
            Ok(c) => {
                print!("{}", render_coeff(&c, cli.format));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: --k {k} for {family}: {e}");
                ExitCode::from(2)
            }
        },
        Command::CheckPaper => {
            let report = check_paper();
            print!("{}", report.render(cli.format, cli.precision));
            ExitCode::from(report.exit_code())
        }
        Command::Verify { max_k } => {
            let summary = run_verify(max_k);
            print!("{}", summary.render());
            if summary.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
