//! `gi`: evaluate rules, solve and verify control instances, generate
//! instances, and benchmark solvers.
//!
//! Exit codes: 0 for yes / already qualified / accepted, 1 for no / immune /
//! rejected, 2 for any error.

mod bench;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gi_core::format::{
    parse_cnf3, parse_indices, parse_instance, parse_lrbds, parse_profile, parse_rbds, parse_rx3c,
    write_cnf3, write_instance, write_lrbds, write_rbds, write_rx3c, INSTANCE_HEADER,
};
use gi_core::random::{
    random_3sat, random_instance, random_lrbds, random_rbds, random_rx3c, random_strict_instance,
    seeded, InstanceShape,
};
use gi_core::reductions::*;
use gi_core::solvers::{gcai_system, gcdi_system, GroupedSystem};
use gi_core::{eval, ControlInstance, Error, Outcome, Problem, RuleSpec, Solver, Strategy, Subset};

#[derive(Parser)]
#[command(
    name = "gi",
    version,
    about = "Group identification: rules, control problems and reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the socially qualified members of a society.
    Eval {
        /// gi-profile (or gi-instance) file, or `-` for stdin.
        profile: PathBuf,
        /// `consent S T`, `csr` or `lsr`.
        #[arg(long)]
        rule: RuleSpec,
        /// Society members, e.g. "0 2 3"; defaults to everyone.
        #[arg(long)]
        society: Option<String>,
    },
    /// Decide a control instance and print the verdict.
    Solve {
        /// gi-instance file, or `-` for stdin.
        instance: PathBuf,
        #[arg(long, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Accept instances whose target is already qualified.
        #[arg(long)]
        lenient: bool,
        /// Brute force gives up beyond 2^LIMIT candidate witnesses.
        #[arg(long, default_value_t = gi_core::solvers::DEFAULT_LOG2_LIMIT)]
        limit: u32,
        /// Print the integer system (consent adding/deleting only) to stderr.
        #[arg(long)]
        dump_ilp: bool,
    },
    /// Check a witness: exit 0 if it works, 1 if not.
    Verify {
        instance: PathBuf,
        /// Witness members, e.g. "1 3"; may be empty.
        #[arg(long, allow_hyphen_values = true)]
        witness: String,
    },
    /// Write an instance built by a reduction or at random.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; stdout if omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run every applicable solver on each instance in a directory; CSV out.
    Bench {
        dir: PathBuf,
        /// CSV file; stdout if omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = gi_core::solvers::DEFAULT_LOG2_LIMIT)]
        limit: u32,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Exact cover to adding under consent (s >= 2).
    Rx3cGcai {
        source: PathBuf,
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Exact cover to deleting under consent (t >= 3).
    Rx3cGcdi {
        source: PathBuf,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, default_value_t = 3)]
        t: u32,
    },
    /// Exact cover to adding under the liberal-start rule.
    Rx3cGcaiLsr { source: PathBuf },
    /// Exact cover to adding under the consensus-start rule.
    Rx3cGcaiCsr { source: PathBuf },
    /// 3-SAT to partitioning under consent (t >= 2).
    Cnf3Gcpi {
        source: PathBuf,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, default_value_t = 2)]
        t: u32,
    },
    /// Labeled red-blue dominating set to partitioning under consent (s >= 3).
    LrbdsGcpi {
        source: PathBuf,
        #[arg(long, default_value_t = 3)]
        s: u32,
    },
    /// Red-blue dominating set to its labeled form (writes an lrbds file).
    RbdsLrbds { source: PathBuf },
    /// A seeded random control instance.
    Random(RandomArgs),
    /// A seeded random exact-cover source.
    RandomRx3c {
        #[arg(long)]
        kappa: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A seeded random 3-CNF source.
    RandomCnf3 {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A seeded random red-blue dominating set source.
    RandomRbds {
        #[arg(long)]
        red: usize,
        #[arg(long)]
        blue: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A seeded random labeled red-blue dominating set source.
    RandomLrbds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        red: usize,
        #[arg(long)]
        blue: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, default_value_t = Problem::Gcai)]
    problem: Problem,
    #[arg(long, default_value = "consent 2 2")]
    rule: RuleSpec,
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// `|S|`.
    #[arg(long, default_value_t = 2)]
    target: usize,
    /// `|T|` for adding; defaults to half the individuals.
    #[arg(long)]
    society: Option<usize>,
    /// `k` for adding and deleting.
    #[arg(long, default_value_t = 2)]
    budget: usize,
    /// Probability that an opinion is 1.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Resample until the target is not already qualified.
    #[arg(long)]
    strict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    let io_err = |e: io::Error| Error::Input(format!("{}: {e}", path.display()));
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

pub(crate) fn write_output(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn subset_arg(n: usize, text: &str, what: &str) -> Result<Subset, Error> {
    Subset::from_indices(n, parse_indices(text)?).map_err(|e| Error::Input(format!("{what}: {e}")))
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Eval {
            profile,
            rule,
            society,
        } => {
            let text = read_input(&profile)?;
            let p = if text.trim_start().starts_with(INSTANCE_HEADER) {
                parse_instance(&text)?.profile().clone()
            } else {
                parse_profile(&text)?
            };
            let society = match society {
                Some(text) => subset_arg(p.n(), &text, "society")?,
                None => p.everyone(),
            };
            println!("{}", eval(&p, &rule, &society)?);
            Ok(0)
        }
        Command::Solve {
            instance,
            strategy,
            lenient,
            limit,
            dump_ilp,
        } => {
            let mut inst = parse_instance(&read_input(&instance)?)?;
            if !lenient {
                inst = inst.require_strict()?;
            }
            if dump_ilp {
                dump_system(&inst)?;
            }
            let verdict = Solver::new()
                .with_brute_limit(limit)
                .solve(&inst, strategy)?;
            println!("{verdict}");
            Ok(match verdict.outcome {
                Outcome::Yes | Outcome::AlreadyQualified => 0,
                Outcome::No | Outcome::Immune => 1,
            })
        }
        Command::Verify { instance, witness } => {
            let inst = parse_instance(&read_input(&instance)?)?;
            let w = subset_arg(inst.profile().n(), &witness, "witness")?;
            if inst.verify(&w)? {
                println!("ACCEPT {w}");
                Ok(0)
            } else {
                println!("REJECT {w}");
                Ok(1)
            }
        }
        Command::Gen { kind, out } => {
            write_output(out.as_deref(), &generate(kind)?)?;
            Ok(0)
        }
        Command::Bench { dir, out, limit } => {
            bench::run(&dir, out.as_deref(), limit)?;
            Ok(0)
        }
    }
}

fn dump_system(inst: &ControlInstance) -> Result<(), Error> {
    let grouped: GroupedSystem = match inst {
        ControlInstance::Gcai(i) => gcai_system(i)?,
        ControlInstance::Gcdi(i) => gcdi_system(i)?,
        ControlInstance::Gcpi(_) => {
            return Err(Error::Strategy("no integer system for partitioning".into()));
        }
    };
    for (i, g) in grouped.groups.iter().enumerate() {
        let pattern: String = g
            .pattern
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        eprintln!("# x{i}: pattern {pattern}, members {:?}", g.members);
    }
    eprint!("{}", grouped.system);
    Ok(())
}

fn generate(kind: GenKind) -> Result<String, Error> {
    let rx3c = |path: &Path| parse_rx3c(&read_input(path)?);
    Ok(match kind {
        GenKind::Rx3cGcai { source, s, t } => {
            write_instance(&rx3c_to_gcai_consent(&rx3c(&source)?, s, t)?.into())
        }
        GenKind::Rx3cGcdi { source, s, t } => {
            write_instance(&rx3c_to_gcdi_consent(&rx3c(&source)?, s, t)?.into())
        }
        GenKind::Rx3cGcaiLsr { source } => {
            write_instance(&rx3c_to_gcai_lsr(&rx3c(&source)?)?.into())
        }
        GenKind::Rx3cGcaiCsr { source } => {
            write_instance(&rx3c_to_gcai_csr(&rx3c(&source)?)?.into())
        }
        GenKind::Cnf3Gcpi { source, s, t } => {
            let src = parse_cnf3(&read_input(&source)?)?;
            write_instance(&threesat_to_gcpi_consent(&src, s, t)?.into())
        }
        GenKind::LrbdsGcpi { source, s } => {
            let src = parse_lrbds(&read_input(&source)?)?;
            write_instance(&lrbds_to_gcpi_consent(&src, s)?.into())
        }
        GenKind::RbdsLrbds { source } => {
            write_lrbds(&rbds_to_lrbds(&parse_rbds(&read_input(&source)?)?)?)
        }
        GenKind::Random(args) => {
            let shape = InstanceShape {
                problem: args.problem,
                rule: args.rule,
                n: args.n,
                target: args.target,
                society: args.society.unwrap_or(args.n / 2).max(args.target),
                budget: args.budget,
                density: args.density,
            };
            let mut rng = seeded(args.seed);
            let inst = if args.strict {
                random_strict_instance(&mut rng, &shape, 10_000)?
            } else {
                random_instance(&mut rng, &shape)?
            };
            write_instance(&inst)
        }
        GenKind::RandomRx3c { kappa, seed } => write_rx3c(&random_rx3c(&mut seeded(seed), kappa)?),
        GenKind::RandomCnf3 {
            vars,
            clauses,
            seed,
        } => write_cnf3(&random_3sat(&mut seeded(seed), vars, clauses)?),
        GenKind::RandomRbds {
            red,
            blue,
            k,
            density,
            seed,
        } => write_rbds(&random_rbds(&mut seeded(seed), red, blue, k, density)?),
        GenKind::RandomLrbds {
            k,
            red,
            blue,
            density,
            seed,
        } => write_lrbds(&random_lrbds(&mut seeded(seed), k, red, blue, density)?),
    })
}
