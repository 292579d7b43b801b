use std::path::{Path, PathBuf};
use std::process::ExitCode;

use catalg::bundled::{self, FIXTURES};
use catalg::{parse_field, parse_spec, run, Command, Report, TaskArgs, WorkbenchSpec};
use catalg_core::linalg::Field;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "catalg",
    version,
    about = "Exact constructions and checks on finite category algebras"
)]
struct Cli {
    /// Override the document's field, e.g. `gf:101` or `rationals`.
    #[arg(long, global = true, value_parser = field_arg)]
    field: Option<Field>,
    /// Also write the report (with timings) to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Run tasks concurrently.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate every declaration, then run the document's task list.
    Check { spec: String },
    /// Build a construction and validate it.
    Build {
        construction: Construction,
        spec: String,
        #[command(flatten)]
        names: Names,
    },
    /// Run an induction.
    Induct {
        kind: Induction,
        spec: String,
        #[command(flatten)]
        names: Names,
    },
    /// Run a verification.
    Verify {
        check: Check,
        spec: String,
        #[command(flatten)]
        names: Names,
    },
    /// Bundled fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCmd,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// List bundled fixtures.
    List,
    /// Print a bundled fixture document.
    Show { name: String },
}

#[derive(Args, Default)]
struct Names {
    #[arg(long)]
    category: Option<String>,
    #[arg(long)]
    functor: Option<String>,
    #[arg(long)]
    precosheaf: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Kc,
    Skew,
    Tensor,
    Ttp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Induction {
    Turull,
    Puig,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Twisting,
    Thm11,
    Thm13,
    Lemma42,
    Cond423,
    Weakbialg,
}

fn field_arg(s: &str) -> Result<Field, String> {
    parse_field(s).map_err(|e| e.to_string())
}

/// Reads a spec from a path, or from a bundled fixture of that name.
fn load(spec: &str) -> Result<String, String> {
    if Path::new(spec).exists() {
        return std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"));
    }
    bundled::fixture(spec)
        .map(|f| f.text.to_string())
        .ok_or_else(|| format!("{spec}: no such file or bundled fixture"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (spec_arg, single) = match &cli.command {
        Cmd::Fixtures {
            action: FixturesCmd::List,
        } => {
            for f in &FIXTURES {
                println!("{:<20} {}", f.name, f.description);
            }
            return ExitCode::SUCCESS;
        }
        Cmd::Fixtures {
            action: FixturesCmd::Show { name },
        } => {
            return match bundled::fixture(name) {
                Some(f) => {
                    print!("{}", f.text);
                    ExitCode::SUCCESS
                }
                None => {
                    eprintln!("unknown fixture {name:?}");
                    ExitCode::from(2)
                }
            };
        }
        Cmd::Check { spec } => (spec, None),
        Cmd::Build {
            construction,
            spec,
            names,
        } => {
            let c = match construction {
                Construction::Kc => Command::BuildKc,
                Construction::Skew => Command::BuildSkew,
                Construction::Tensor => Command::BuildTensor,
                Construction::Ttp => Command::BuildTtp,
            };
            (spec, Some((c, names)))
        }
        Cmd::Induct { kind, spec, names } => {
            let c = match kind {
                Induction::Turull => Command::InductTurull,
                Induction::Puig => Command::InductPuig,
            };
            (spec, Some((c, names)))
        }
        Cmd::Verify { check, spec, names } => {
            let c = match check {
                Check::Twisting => Command::VerifyTwisting,
                Check::Thm11 => Command::VerifyThm11,
                Check::Thm13 => Command::VerifyThm13,
                Check::Lemma42 => Command::VerifyLemma42,
                Check::Cond423 => Command::VerifyCond423,
                Check::Weakbialg => Command::VerifyWeakBialg,
            };
            (spec, Some((c, names)))
        }
    };
    let spec = match prepare(spec_arg, cli.field, single) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = run(&spec, cli.parallel);
    print!("{}", report.render(false));
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, report.render(true)) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    exit_code(&report)
}

fn prepare(
    spec_arg: &str,
    field: Option<Field>,
    single: Option<(Command, &Names)>,
) -> Result<WorkbenchSpec, String> {
    let text = load(spec_arg)?;
    let mut spec = parse_spec(&text, field).map_err(|e| format!("{spec_arg}: {e}"))?;
    if let Some((command, names)) = single {
        let args = TaskArgs {
            category: names.category.clone(),
            functor: names.functor.clone(),
            precosheaf: names.precosheaf.clone(),
        };
        spec.tasks = vec![spec.task(command, &args)?];
    } else {
        let check = spec.task(Command::Check, &TaskArgs::default())?;
        spec.tasks.retain(|t| t.command != Command::Check);
        spec.tasks.insert(0, check);
    }
    Ok(spec)
}

fn exit_code(report: &Report) -> ExitCode {
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
