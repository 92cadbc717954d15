mod args;
mod commands;
mod config;
mod output;

use clap::Parser;

use args::{Cli, Command};
use commands::{is_usage, Ctx};
use config::FileConfig;

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            if is_usage(&e) {
                eprintln!("error: {e}");
                std::process::exit(2);
            }
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(mut cli: Cli) -> anyhow::Result<i32> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::empty(),
    };
    merge_config(&file, &mut cli)?;

    let ctx = Ctx::new(cli.format, cli.out.clone(), cli.digits, cli.golden)?;
    match &cli.command {
        Command::Spectrum(a) => commands::spectrum::run(&ctx, a),
        Command::Converge(a) => commands::converge::run(&ctx, a),
        Command::Pt(a) => commands::pt::run(&ctx, a),
        Command::Limits(a) => commands::limits::run(&ctx, a),
        Command::Figure(a) => commands::figure::run(&ctx, a),
        Command::Table(a) => commands::table::run(&ctx, a),
    }
}

/// Fill any option not given on the command line from the config file.
fn merge_config(file: &FileConfig, cli: &mut Cli) -> anyhow::Result<()> {
    file.fill(&mut cli.digits, "digits")?;
    if cli.format.is_none() {
        let mut s: Option<String> = None;
        file.fill_string(&mut s, "format");
        cli.format = match s.as_deref() {
            Some("csv") => Some(args::OutputFormat::Csv),
            Some("json") => Some(args::OutputFormat::Json),
            Some(other) => anyhow::bail!("config format={other} must be csv or json"),
            None => None,
        };
    }
    match &mut cli.command {
        Command::Spectrum(a) => {
            file.fill_string(&mut a.r0, "r0");
            file.fill_string(&mut a.lambda, "lambda");
            file.fill_string(&mut a.lambda_range, "lambda_range");
            file.fill_string(&mut a.lambda_list, "lambda_list");
            file.fill(&mut a.n, "n")?;
            file.fill(&mut a.count, "count")?;
            fill_basis(file, &mut a.basis)?;
            fill_parity(file, &mut a.parity)?;
        }
        Command::Converge(a) => {
            file.fill_string(&mut a.r0, "r0");
            file.fill_string(&mut a.lambda, "lambda");
            file.fill_string(&mut a.n_range, "n_range");
            file.fill(&mut a.count, "count")?;
            fill_basis(file, &mut a.basis)?;
            fill_parity(file, &mut a.parity)?;
        }
        Command::Pt(a) => {
            file.fill_string(&mut a.r0, "r0");
            file.fill(&mut a.levels, "levels")?;
            file.fill(&mut a.order, "order")?;
            file.fill(&mut a.n, "n")?;
            file.fill_string(&mut a.grid, "grid");
            file.fill(&mut a.terms, "terms")?;
        }
        Command::Limits(a) => {
            file.fill_string(&mut a.r0, "r0");
            file.fill(&mut a.levels, "levels")?;
            file.fill_string(&mut a.r0_list, "r0_list");
            file.fill_string(&mut a.lambda_list, "lambda_list");
        }
        Command::Figure(a) => {
            file.fill_string(&mut a.r0, "r0");
            file.fill_string(&mut a.lambda_range, "lambda_range");
            file.fill(&mut a.levels, "levels")?;
            file.fill(&mut a.order, "order")?;
            file.fill(&mut a.n, "n")?;
        }
        Command::Table(_) => {}
    }
    Ok(())
}

fn fill_basis(file: &FileConfig, slot: &mut Option<args::BasisArg>) -> anyhow::Result<()> {
    if slot.is_none() {
        let mut s: Option<String> = None;
        file.fill_string(&mut s, "basis");
        *slot = match s.as_deref() {
            Some("poly") => Some(args::BasisArg::Poly),
            Some("gauss") => Some(args::BasisArg::Gauss),
            Some(other) => anyhow::bail!("config basis={other} must be poly or gauss"),
            None => None,
        };
    }
    Ok(())
}

fn fill_parity(file: &FileConfig, slot: &mut Option<args::ParityArg>) -> anyhow::Result<()> {
    if slot.is_none() {
        let mut s: Option<String> = None;
        file.fill_string(&mut s, "parity");
        *slot = match s.as_deref() {
            Some("even") => Some(args::ParityArg::Even),
            Some("odd") => Some(args::ParityArg::Odd),
            Some("both") => Some(args::ParityArg::Both),
            Some(other) => anyhow::bail!("config parity={other} must be even, odd or both"),
            None => None,
        };
    }
    Ok(())
}
