use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use aluffi_cli::acceptance::run_acceptance_suite;
use aluffi_cli::run::fixture_list;
use aluffi_cli::{exit_code, parse_input_with, run, AluffiOp, Command, IdealOp, JobSpec, Options, Report, Status};
use aluffi_cli::{EXIT_INPUT, EXIT_LIMIT, EXIT_OK, EXIT_VERDICT};
use aluffi_core::parse::parse_order;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "aluffi", version, about = "Exact Rees, symmetric and Aluffi algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Monomial order overriding the ring header (lex, grevlex, wgrevlex(w1,...)).
    #[arg(long, global = true)]
    order: Option<String>,
    /// Degree bound B for torsion, Artin-Rees and relation-type searches.
    #[arg(long, global = true, default_value_t = 4)]
    bound: u32,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Sampled members per family analysis.
    #[arg(long, global = true, default_value_t = 2)]
    samples: usize,
    /// Cap on S-pair reductions per Groebner basis.
    #[arg(long, global = true)]
    work_limit: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Keep timings in machine output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of `ideal:`.
    Gb { file: PathBuf },
    /// Operations on `ideal:` and `other:`.
    Ideal {
        #[arg(value_enum)]
        op: IdealArg,
        file: PathBuf,
    },
    /// Syzygies of `gens:`.
    Syz { file: PathBuf },
    /// Ideal of `size:` minors of the `row:` matrix.
    Minors { file: PathBuf },
    /// Blowup algebra computations for the pair `J:` inside `I:`.
    Aluffi {
        #[arg(value_enum)]
        op: AluffiArg,
        file: PathBuf,
    },
    /// Plane curves given by `curve:`.
    Curve {
        #[arg(value_enum)]
        op: CurveArg,
        file: PathBuf,
    },
    /// Parameterized families given by `family:`.
    Family {
        #[arg(value_enum)]
        op: FamilyArg,
        file: PathBuf,
        /// Parameter values for `member`, comma separated (overrides `member:`).
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Built-in fixtures.
    Fixtures {
        #[command(subcommand)]
        op: FixturesCmd,
    },
    /// Runs the acceptance criteria.
    Acceptance {
        /// Criterion number or tag, comma separated.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    List,
    Run {
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealArg {
    Intersect,
    Quotient,
    Saturate,
    Eliminate,
    Dim,
    Equal,
}

#[derive(Clone, Copy, ValueEnum)]
enum AluffiArg {
    Present,
    Torsion,
    LinearType,
    ArNumber,
    Reltype,
    Spread,
    Dim,
    VerifyComponents,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveArg {
    Cert,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Analyze,
    Member,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(real_main(&cli) as u8)
}

fn options(cli: &Cli) -> Options {
    Options { bound: cli.bound, seed: cli.seed, samples: cli.samples, work_limit: cli.work_limit, timing: cli.timing }
}

fn real_main(cli: &Cli) -> i32 {
    let command = match &cli.command {
        Cmd::Gb { .. } => Command::Gb,
        Cmd::Ideal { op, .. } => Command::Ideal(match op {
            IdealArg::Intersect => IdealOp::Intersect,
            IdealArg::Quotient => IdealOp::Quotient,
            IdealArg::Saturate => IdealOp::Saturate,
            IdealArg::Eliminate => IdealOp::Eliminate,
            IdealArg::Dim => IdealOp::Dim,
            IdealArg::Equal => IdealOp::Equal,
        }),
        Cmd::Syz { .. } => Command::Syz,
        Cmd::Minors { .. } => Command::Minors,
        Cmd::Aluffi { op, .. } => Command::Aluffi(match op {
            AluffiArg::Present => AluffiOp::Present,
            AluffiArg::Torsion => AluffiOp::Torsion,
            AluffiArg::LinearType => AluffiOp::LinearType,
            AluffiArg::ArNumber => AluffiOp::ArNumber,
            AluffiArg::Reltype => AluffiOp::RelType,
            AluffiArg::Spread => AluffiOp::Spread,
            AluffiArg::Dim => AluffiOp::Dim,
            AluffiArg::VerifyComponents => AluffiOp::VerifyComponents,
        }),
        Cmd::Curve { op: CurveArg::Cert, .. } => Command::CurveCert,
        Cmd::Family { op: FamilyArg::Analyze, .. } => Command::FamilyAnalyze,
        Cmd::Family { op: FamilyArg::Member, .. } => Command::FamilyMember,
        Cmd::Fixtures { op } => return fixtures(cli, op),
        Cmd::Acceptance { only } => return acceptance(cli, only.as_deref()),
    };
    let file = match &cli.command {
        Cmd::Gb { file }
        | Cmd::Ideal { file, .. }
        | Cmd::Syz { file }
        | Cmd::Minors { file }
        | Cmd::Aluffi { file, .. }
        | Cmd::Curve { file, .. }
        | Cmd::Family { file, .. } => file,
        _ => unreachable!("handled above"),
    };
    let text = match read(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", file.display(), e);
            return EXIT_INPUT;
        }
    };
    let order = match cli.order.as_deref().map(|o| parse_order(o).ok_or(o)) {
        None => None,
        Some(Ok(o)) => Some(o),
        Some(Err(o)) => {
            eprintln!("error: unknown order `{}`", o);
            return EXIT_INPUT;
        }
    };
    let alpha = match &cli.command {
        Cmd::Family { alpha: Some(a), .. } => Some(a.as_str()),
        _ => None,
    };
    let job = parse_input_with(&text, order)
        .and_then(|j| match alpha {
            Some(a) => j.with_alpha(a),
            None => Ok(j),
        })
        .and_then(|j| j.with_command(command))
        .and_then(|j| j.with_options(options(cli)));
    let job = match job {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {}: {}", file.display(), e);
            return EXIT_INPUT;
        }
    };
    emit(cli, &job)
}

fn emit(cli: &Cli, job: &JobSpec) -> i32 {
    match run(job) {
        Ok(report) => {
            print_reports(cli, std::slice::from_ref(&report));
            status_code(&report)
        }
        Err(e) => {
            eprintln!("error: {}: {}", job.command.name(), e);
            exit_code(&e)
        }
    }
}

fn status_code(r: &Report) -> i32 {
    if r.status == Status::Partial {
        EXIT_LIMIT
    } else {
        EXIT_OK
    }
}

fn print_reports(cli: &Cli, reports: &[Report]) {
    match cli.format {
        Format::Human => {
            let blocks: Vec<String> = reports.iter().map(|r| r.to_human()).collect();
            print!("{}", blocks.join("\n"));
        }
        Format::Machine if reports.len() == 1 => println!("{}", reports[0].to_machine(cli.timing)),
        Format::Machine => {
            let items: Vec<String> = reports.iter().map(|r| r.to_machine(cli.timing)).collect();
            println!("[\n{}\n]", items.join(",\n"));
        }
    }
}

fn fixtures(cli: &Cli, op: &FixturesCmd) -> i32 {
    match op {
        FixturesCmd::List => {
            let list = fixture_list();
            match cli.format {
                Format::Human => {
                    let w = list.iter().map(|(n, _, _)| n.len()).max().unwrap_or(0);
                    for (name, kind, prov) in list {
                        println!("{:<w$}  {:<6}  {}", name, kind, prov, w = w);
                    }
                }
                Format::Machine => {
                    let items: Vec<serde_json::Value> = list
                        .into_iter()
                        .map(|(n, k, p)| serde_json::json!({ "name": n, "kind": k, "provenance": p }))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items).expect("json"));
                }
            }
            EXIT_OK
        }
        FixturesCmd::Run { name, all } => {
            let names: Vec<String> = match (name, all) {
                (Some(n), false) => vec![n.clone()],
                (None, true) => fixture_list().into_iter().map(|(n, _, _)| n).collect(),
                _ => {
                    eprintln!("error: give a fixture name or --all");
                    return EXIT_INPUT;
                }
            };
            let opts = options(cli);
            if opts.bound == 0 {
                eprintln!("error: the bound B must be positive");
                return EXIT_INPUT;
            }
            // Jobs are independent; results come back in name order.
            let results: Vec<Result<Report, aluffi_core::Error>> = std::thread::scope(|s| {
                let handles: Vec<_> = names
                    .iter()
                    .map(|n| {
                        let job = JobSpec::fixture(n, opts.clone());
                        s.spawn(move || run(&job))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("fixture worker")).collect()
            });
            let mut code = EXIT_OK;
            let mut reports = Vec::new();
            for (n, r) in names.iter().zip(results) {
                match r {
                    Ok(rep) => {
                        code = code.max(status_code(&rep));
                        reports.push(rep);
                    }
                    Err(e) => {
                        eprintln!("error: fixture {}: {}", n, e);
                        code = code.max(exit_code(&e));
                    }
                }
            }
            print_reports(cli, &reports);
            code
        }
    }
}

fn acceptance(cli: &Cli, only: Option<&str>) -> i32 {
    let outcomes = run_acceptance_suite(only);
    let all = outcomes.iter().all(|o| o.passed);
    match cli.format {
        Format::Human => {
            for o in &outcomes {
                println!("{}", o.line());
            }
            println!("{}", if all { "acceptance: PASS" } else { "acceptance: FAIL" });
        }
        Format::Machine => {
            let summary = serde_json::json!({ "passed": all, "criteria": outcomes });
            println!("{}", serde_json::to_string_pretty(&summary).expect("json"));
        }
    }
    if all {
        EXIT_OK
    } else {
        EXIT_VERDICT
    }
}

fn read(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}
