use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use thetalie::galois::{h1, parse_gamma_group, DEFAULT_H1_CAP};
use thetalie::grading::KacSpec;
use thetalie::job::{parse_job, run, Analysis, Format, JobSpec, RunOptions, MAX_ORDER, SCHEMA};
use thetalie::liealg::CartanType;

/// Graded Lie algebras, little Weyl groups and real orbit counts.
#[derive(Parser, Debug)]
#[command(name = "thetalie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the randomized Cartan search.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Largest group order to enumerate.
    #[arg(long, global = true, value_name = "N")]
    cap_group_order: Option<usize>,

    /// Largest group order for H^1 enumeration.
    #[arg(long, global = true, value_name = "N")]
    cap_h1: Option<usize>,

    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Append per-section wall-clock timing.
    #[arg(long, global = true)]
    timing: bool,

    /// Run every section on the calling thread.
    #[arg(long, global = true)]
    serial: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct the algebra and check its structure constants.
    Build(Input),
    /// Graded components and the automorphism of order m.
    Grade(Input),
    /// A Cartan subspace of g_1 with its certificate.
    Cartan(Input),
    /// Weights of the Cartan subspace on g.
    Weights(Input),
    /// The little Weyl group.
    Weyl(Input),
    /// Stabilizers and strata of the little Weyl group.
    Strata(Input),
    /// Family comparisons between strata.
    Families(Input),
    /// Checks that stabilizers match centralizer Weyl groups.
    Central(Input),
    /// H^1 of the little Weyl group, or of a standalone group file with --group.
    H1 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE", conflicts_with_all = ["job", "cartan_type", "kac"])]
        group: Option<PathBuf>,
    },
    /// Run the analyses listed in the job (all by default).
    Report {
        #[command(flatten)]
        input: Input,
        /// Comma-separated analyses, overriding the job file.
        #[arg(long)]
        analyses: Option<String>,
    },
}

#[derive(Args, Debug, Default)]
struct Input {
    /// Job file with `key = value` lines.
    #[arg(conflicts_with_all = ["cartan_type", "kac"])]
    job: Option<PathBuf>,

    #[arg(long = "type", value_name = "TYPE", requires = "kac")]
    cartan_type: Option<String>,

    /// Kac coordinates, e.g. 1,1,1.
    #[arg(long, requires = "cartan_type")]
    kac: Option<String>,
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: 2 }
    }
}

fn load_job(input: &Input) -> Result<JobSpec, Failure> {
    match (&input.job, &input.cartan_type, &input.kac) {
        (Some(path), _, _) => {
            let text = read(path)?;
            parse_job(&text).map_err(|e| Failure::input(format!("{}:{}:{}: {}", path.display(), e.line, e.col, e.message)))
        }
        (None, Some(ty), Some(kac)) => {
            let cartan_type: CartanType = ty.parse().map_err(|e| Failure::input(format!("--type: {e}")))?;
            let kac = KacSpec::parse(cartan_type, kac).map_err(|e| Failure::input(format!("--kac: {e}")))?;
            let m = kac.order().map_err(|e| Failure::input(format!("--kac: {e}")))?;
            if m > MAX_ORDER {
                return Err(Failure::input(format!("--kac: m = {m} exceeds the supported maximum {MAX_ORDER}")));
            }
            Ok(JobSpec::new(kac, Analysis::ALL))
        }
        _ => Err(Failure::input("give a job file or --type and --kac")),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn apply_flags(cli: &Cli, job: &mut JobSpec) -> Result<(), Failure> {
    if let Some(seed) = cli.seed {
        job.seed = seed;
    }
    for (flag, value, slot) in [("--cap-group-order", cli.cap_group_order, &mut job.caps.group_order), ("--cap-h1", cli.cap_h1, &mut job.caps.h1)] {
        if let Some(v) = value {
            if v == 0 {
                return Err(Failure::input(format!("{flag} must be positive")));
            }
            *slot = v;
        }
    }
    if let Some(f) = cli.format {
        job.format = match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Machine => Format::Machine,
        };
    }
    Ok(())
}

fn analyses(list: &str) -> Result<Vec<Analysis>, Failure> {
    list.split(',').map(|s| s.trim().parse::<Analysis>().map_err(|e| Failure::input(format!("--analyses: {e}")))).collect()
}

fn standalone_h1(cli: &Cli, path: &Path) -> Result<(String, bool), Failure> {
    let text = read(path)?;
    let group = parse_gamma_group(&text).map_err(|e| Failure::input(format!("{}:{}:{}: {}", path.display(), e.line, e.col, e.message)))?;
    let cap = cli.cap_h1.unwrap_or(DEFAULT_H1_CAP);
    let result = h1(&group, cap);
    let machine = matches!(cli.format, Some(OutputFormat::Machine));
    let ok = result.is_ok();
    let out = match (&result, machine) {
        (Ok(set), true) => {
            let v = json!({
                "schema": SCHEMA,
                "group": {"order": group.order(), "twist_trivial": group.is_twist_trivial()},
                "h1": {"classes": set.len(), "cocycles": set.cocycles.len(), "representatives": set.representatives, "class_sizes": set.class_sizes},
                "success": true,
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        (Err(e), true) => {
            let v = json!({"schema": SCHEMA, "group": {"order": group.order()}, "error": e.to_string(), "success": false});
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        (Ok(set), false) => format!(
            "{SCHEMA}\ngroup order: {}\ntwist: {}\ncocycles: {}\nH1 classes: {}\nrepresentatives: {:?}\nclass sizes: {:?}\n",
            group.order(),
            if group.is_twist_trivial() { "trivial" } else { "nontrivial" },
            set.cocycles.len(),
            set.len(),
            set.representatives,
            set.class_sizes,
        ),
        (Err(e), false) => format!("{SCHEMA}\ngroup order: {}\nFAILED: {e}\n", group.order()),
    };
    Ok((out, ok))
}

fn execute(cli: &Cli) -> Result<(String, bool), Failure> {
    let (input, requested): (&Input, Option<Vec<Analysis>>) = match &cli.command {
        Command::Build(i) => (i, Some(vec![])),
        Command::Grade(i) => (i, Some(vec![Analysis::Grade])),
        Command::Cartan(i) => (i, Some(vec![Analysis::Cartan])),
        Command::Weights(i) => (i, Some(vec![Analysis::Weights])),
        Command::Weyl(i) => (i, Some(vec![Analysis::Weyl])),
        Command::Strata(i) => (i, Some(vec![Analysis::Strata])),
        Command::Families(i) => (i, Some(vec![Analysis::Families])),
        Command::Central(i) => (i, Some(vec![Analysis::Central])),
        Command::H1 { group: Some(path), .. } => return standalone_h1(cli, path),
        Command::H1 { input, group: None } => (input, Some(vec![Analysis::H1])),
        Command::Report { input, analyses: list } => (input, list.as_deref().map(analyses).transpose()?),
    };
    let mut job = load_job(input)?;
    if let Some(r) = requested {
        job.analyses = Analysis::closure(r);
    }
    apply_flags(cli, &mut job)?;
    let report = run(&job, RunOptions { parallel: !cli.serial });
    Ok((report.render(job.format, cli.timing), report.success()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (body, ok) = match execute(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
