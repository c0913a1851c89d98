use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use maxinv::action::ActionGroup;
use maxinv::checks::Context;
use maxinv::format::{parse_action_file, parse_group_file};
use maxinv::group::{cap_from_env, GroupTable};
use maxinv::lattice::all_subgroups;
use maxinv::report::{self, Status, CHECK_NAMES};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_OUT_OF_HYPOTHESIS: u8 = 3;

/// Maximal invariant subgroups under coprime actions: analysis and
/// verification.
#[derive(Parser)]
#[command(name = "maxinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural facts and every check for one group.
    Analyze {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        action: Option<PathBuf>,
    },
    /// Run one checker; exit 0 if it holds, 1 with a counterexample, 3 if
    /// the input is outside the theorem's hypothesis.
    Verify {
        checker: String,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        action: Option<PathBuf>,
    },
    /// Run every checker over the standard campaign and write the report.
    Campaign {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

struct Input {
    name: String,
    group: GroupTable,
    action_name: String,
    action: ActionGroup,
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn load(group: &Path, action: Option<&Path>, cap: usize) -> Result<Input, String> {
    let read = |p: &Path| fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()));
    let g = parse_group_file(&read(group)?, cap).map_err(|e| format!("{}: {e}", group.display()))?;
    let (action_name, a) = match action {
        Some(path) => {
            let a = parse_action_file(&g, &read(path)?, cap).map_err(|e| format!("{}: {e}", path.display()))?;
            (stem(path), a)
        }
        None => ("A=1".to_string(), ActionGroup::trivial(&g)),
    };
    Ok(Input {
        name: stem(group),
        group: g,
        action_name,
        action: a,
    })
}

fn analyze(group: &Path, action: Option<&Path>, cap: usize) -> Result<ExitCode, String> {
    let input = load(group, action, cap)?;
    let lattice = all_subgroups(&input.group, cap).map_err(|e| e.to_string())?;
    let entry = report::analyze(
        &input.name,
        &input.group,
        &lattice,
        &input.action_name,
        &input.action,
        &BTreeMap::new(),
    )
    .map_err(|e| e.to_string())?;
    let micros = entry.timing.micros;
    print!("{}", report::to_json(&report::assemble(vec![entry], cap, None, micros)));
    Ok(ExitCode::SUCCESS)
}

fn verify(checker: &str, group: &Path, action: Option<&Path>, cap: usize) -> Result<ExitCode, String> {
    if !CHECK_NAMES.contains(&checker) {
        return Err(format!(
            "unknown checker {checker:?}; expected one of {}",
            CHECK_NAMES.join(", ")
        ));
    }
    let input = load(group, action, cap)?;
    let lattice = all_subgroups(&input.group, cap).map_err(|e| e.to_string())?;
    let ctx = Context::new(&input.group, &input.action, &lattice).map_err(|e| e.to_string())?;
    let record = report::run_check(&ctx, checker).expect("known checker");
    let json = serde_json::to_value(&record).expect("record serializes");
    println!("{}", serde_json::to_string_pretty(&json).expect("value serializes"));
    Ok(match record.status {
        Status::Fail => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Status::OutOfHypothesis => ExitCode::from(EXIT_OUT_OF_HYPOTHESIS),
        Status::Pass | Status::Vacuous | Status::NotApplicable => ExitCode::SUCCESS,
    })
}

fn campaign(max_order: usize, out: &Path, jobs: Option<usize>, cap: usize) -> Result<ExitCode, String> {
    let report = report::run_campaign(max_order, cap, jobs).map_err(|e| e.to_string())?;
    fs::write(out, report::to_json(&report)).map_err(|e| format!("{}: {e}", out.display()))?;
    let s = &report.summary;
    eprintln!(
        "{} fixtures over {} groups, {} failures, {:.1}s",
        s.fixtures_run,
        s.groups,
        s.failures,
        report.timing.micros as f64 / 1e6
    );
    for f in &s.failing {
        eprintln!("FAIL {f}");
    }
    Ok(if s.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cap_from_env();
    let result = match &cli.command {
        Command::Analyze { group, action } => analyze(group, action.as_deref(), cap),
        Command::Verify {
            checker,
            group,
            action,
        } => verify(checker, group, action.as_deref(), cap),
        Command::Campaign {
            max_order,
            out,
            jobs,
        } => campaign(*max_order, out, *jobs, cap),
    };
    result.unwrap_or_else(|message| {
        eprintln!("error: {message}");
        ExitCode::from(EXIT_INVALID)
    })
}
