//! Command-line front end. [`run`] parses arguments, prints a report and
//! returns the process exit code: 0 on success, 1 when a verification
//! fails or a table differs from its reference, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::corpus::{Corpus, TableId};
use crate::error::Error;
use crate::linkage::{default_budget, link_exists, BUDGET_ENV};
use crate::notation::parse_weight;
use crate::parabolic::{scan_quasi_heisenberg, ParabolicData};
use crate::report::{
    cases_for, parse_ranks, table_report, ClassifyReport, Envelope, HwvReport, LinkReport,
    ScanReport, DEFAULT_RANKS,
};
use crate::roots::{parse_system_label, Family, RootSystem};

#[derive(Debug, Parser)]
#[command(
    name = "qhverma",
    version,
    about = "Homomorphisms between generalized Verma modules for quasi-Heisenberg parabolics"
)]
pub struct Cli {
    /// Emit versioned JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// State budget for each link search
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the quasi-Heisenberg maximal parabolics up to a rank
    Scan {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Decide whether the Ω₁ and Ω₂ homomorphisms are standard
    Classify {
        family: Family,
        rank: usize,
        node: usize,
    },
    /// Regenerate one of the tables T1..T5 and compare with the reference
    Tables {
        table: TableId,
        /// Systems, e.g. `B5..B8,C4..C6,E6`
        #[arg(long, default_value = DEFAULT_RANKS)]
        ranks: String,
        /// Reference file to compare against instead of the built-in one
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Search for a link between two weights (`a,b,c` in simple-root coordinates)
    Link {
        #[arg(long)]
        system: String,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Run the degree-2 highest-weight vector computations
    VerifyHwv {
        family: Family,
        rank: usize,
        node: usize,
    },
}

enum Outcome {
    Ok,
    Mismatch,
}

fn emit<T: Serialize + std::fmt::Display>(json: bool, command: &str, report: T) {
    if json {
        let env = Envelope::new(command, report);
        println!(
            "{}",
            serde_json::to_string_pretty(&env).expect("reports serialize")
        );
    } else {
        println!("{report}");
    }
}

fn pd_for(family: Family, rank: usize, node: usize) -> crate::Result<ParabolicData> {
    let pd = ParabolicData::build(family, rank, node)?;
    if !pd.is_quasi_heisenberg() {
        return Err(Error::NotQuasiHeisenberg { family, rank, node });
    }
    Ok(pd)
}

fn execute(cli: &Cli, echo: &str) -> crate::Result<Outcome> {
    let budget = cli.budget.unwrap_or_else(default_budget);
    match &cli.command {
        Command::Scan { max_rank } => {
            emit(
                cli.json,
                echo,
                ScanReport::new(*max_rank, &scan_quasi_heisenberg(*max_rank)),
            );
            Ok(Outcome::Ok)
        }
        Command::Classify { family, rank, node } => {
            let pd = pd_for(*family, *rank, *node)?;
            emit(cli.json, echo, ClassifyReport::build(&pd, budget)?);
            Ok(Outcome::Ok)
        }
        Command::Tables {
            table,
            ranks,
            golden,
        } => {
            let reference = match golden {
                Some(p) => Corpus::load(p)?,
                None => Corpus::builtin_for(*table).clone(),
            };
            let cases = cases_for(&parse_ranks(ranks)?)?;
            let report = table_report(*table, &cases, &reference, budget)?;
            let ok = report.is_ok();
            emit(cli.json, echo, report);
            Ok(if ok { Outcome::Ok } else { Outcome::Mismatch })
        }
        Command::Link { system, from, to } => {
            let (f, n) = parse_system_label(system)?;
            let rs = RootSystem::build(f, n)?;
            let a = parse_weight(from, &rs)?;
            let b = parse_weight(to, &rs)?;
            let cert = link_exists(&rs, &a, &b, budget)?;
            emit(cli.json, echo, LinkReport::new(&rs, &a, &b, &cert)?);
            Ok(Outcome::Ok)
        }
        Command::VerifyHwv { family, rank, node } => {
            let pd = pd_for(*family, *rank, *node)?;
            let report = HwvReport::build(&pd)?;
            let ok = report.ok;
            emit(cli.json, echo, report);
            Ok(if ok { Outcome::Ok } else { Outcome::Mismatch })
        }
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(&cli, &echo) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e @ Error::Invariant(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
