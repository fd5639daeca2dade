use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use semihol::pipeline::{exit_code, run, Options, Outcome, Stage};
use semihol::spec::GroupSpecFile;
use semihol_core::catalog::{amalgamated_count, h_bounds};

#[derive(Parser)]
#[command(name = "semihol", about = "Central products of quasisimple groups and the regular subgroups sharing their holomorph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Group spec file
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Output directory for report.json and summary.txt
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Normal-subgroup lattice guard for the oracle
    #[arg(long, global = true)]
    guard: Option<usize>,
    /// Run the brute-force regular-subgroup oracle
    #[arg(long, global = true)]
    oracle: bool,
    /// Factor count (formula mode)
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Factors with components in L (formula mode)
    #[arg(long, global = true)]
    l: Option<usize>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Build the group and run the construction gates
    Build,
    /// Components and the Aut-indecomposable decomposition
    Decompose,
    /// Holomorph generators and the identity suite
    Holomorph,
    /// The H-set with phi_J certificates
    Hset,
    /// The group T acting on the H-set
    Tgroup,
    /// Enumerate the regular normal subgroups of the holomorph
    OracleJ,
    /// h bounds and amalgamated count from --n and --l
    Formula,
    /// Full pipeline; writes report.json and summary.txt
    Report,
}

fn formula(n: Option<usize>, l: Option<usize>) -> ExitCode {
    let (Some(n), Some(l)) = (n, l) else {
        eprintln!("error: formula needs --n and --l");
        return ExitCode::from(2);
    };
    match (h_bounds(n, l), amalgamated_count(n, l)) {
        (Ok(b), Ok(count)) => {
            println!("n = {n}, l = {l}, m = {}", b.m);
            println!("|H| bounds [{}, {}]", b.min_count, b.max_count);
            println!("amalgamated count {count}");
            ExitCode::SUCCESS
        }
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

fn write_outputs(out: &PathBuf, outcome: &Outcome) -> std::io::Result<()> {
    std::fs::create_dir_all(out)?;
    std::fs::write(out.join("report.json"), outcome.report.to_json())?;
    let mut summary = outcome.report.summary();
    for (stage, t) in &outcome.timings {
        summary.push_str(&format!("time {stage:<11} {:.3}s\n", t.as_secs_f64()));
    }
    std::fs::write(out.join("summary.txt"), summary)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stage = match cli.command {
        Command::Formula => return formula(cli.n, cli.l),
        Command::Build => Stage::Build,
        Command::Decompose => Stage::Decompose,
        Command::Holomorph => Stage::Holomorph,
        Command::Hset => Stage::HSet,
        Command::Tgroup | Command::OracleJ => Stage::TGroup,
        Command::Report => Stage::Full,
    };
    let Some(path) = cli.spec.as_ref() else {
        eprintln!("error: --spec is required");
        return ExitCode::from(2);
    };
    let spec = match GroupSpecFile::read(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: spec {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let options = Options { oracle: cli.oracle || matches!(cli.command, Command::OracleJ), guard: cli.guard };
    let outcome = match run(&spec, stage, &options) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    print!("{}", outcome.report.summary());
    for (stage, t) in &outcome.timings {
        println!("time {stage:<11} {:.3}s", t.as_secs_f64());
    }
    if matches!(cli.command, Command::Report) {
        if let Err(e) = write_outputs(&cli.out, &outcome) {
            eprintln!("error: writing reports to {}: {e}", cli.out.display());
            return ExitCode::from(3);
        }
    }
    if outcome.report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}
