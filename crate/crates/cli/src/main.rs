//! `hessex`: exact verification jobs for minimal-sheet matrix Hessenberg
//! families, plus Groebner-basis and multidegree utilities on ideal files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hessex_core::error::Error;
use hessex_core::groebner::GbOptions;
use hessex_core::hessenberg::HessenbergFunction;
use hessex_core::ideal::{order_from_name, order_name, Ideal};
use hessex_core::multidegree::multidegree_with;
use hessex_core::polynomial::Rational;
use hessex_core::text::format_polynomial;
use hessex_core::verify::{
    explore_conjecture, suite, verify_assprimes, verify_component_degeneration,
    verify_dim_and_class, verify_flatness, verify_grobner_tables, verify_nilpotent_fiber,
    JobContext, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "hessex",
    about = "Exact computer algebra checks for matrix Hessenberg schemes over the minimal sheet"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one named verification job.
    Verify {
        /// Job name: assprimes | flatness | grobner-tables | nilpotent-fiber
        /// | dim-and-class | component-degeneration | explore-conjecture
        job: String,
        #[arg(long)]
        n: usize,
        /// Hessenberg function, e.g. 2,4,4,4
        #[arg(long)]
        h: Option<String>,
        /// First index for grobner-tables (default: sweep all i < j)
        #[arg(long)]
        i: Option<usize>,
        /// Second index for grobner-tables
        #[arg(long)]
        j: Option<usize>,
        /// Evaluation samples for torsion checks, e.g. 0,1,-1,2
        #[arg(long)]
        samples: Option<String>,
        /// Monomial order: paper (the default elimination order) or lex
        #[arg(long, default_value = "paper")]
        order: String,
        /// S-pair budget for the Groebner engine
        #[arg(long)]
        budget: Option<usize>,
        /// Write the JSON report(s) here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Compute the reduced Groebner basis of an ideal file.
    Gb {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value = "paper")]
        order: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Compute the multidegree of an ideal file (column grading).
    Multidegree {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run every job for every Hessenberg function at the given n
    /// (the fixed smoke set at n = 5).
    Suite {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "paper")]
        order: String,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_samples(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<Rational>()
                .map_err(|e| Error::Parse(format!("bad sample '{v}': {e}")))
        })
        .collect()
}

fn context(order: &str, budget: Option<usize>, samples: Option<&str>) -> Result<JobContext, Error> {
    let mut ctx = JobContext::default();
    // the order name is resolved against a placeholder ring; only the kind
    // matters for "paper", and "lex" is re-derived per ring inside the jobs
    ctx.order = match order {
        "paper" => hessex_core::order::MonomialOrder::elimination(),
        "lex" => {
            return Err(Error::Invalid(
                "the lex order is available for gb/multidegree; jobs run under the paper order"
                    .into(),
            ))
        }
        other => return Err(Error::Parse(format!("unknown order '{other}'"))),
    };
    if let Some(b) = budget {
        ctx.opts.pair_budget = b;
    }
    if let Some(s) = samples {
        ctx.samples = parse_samples(s)?;
    }
    Ok(ctx)
}

fn parse_h(h: Option<&str>) -> Result<HessenbergFunction, Error> {
    match h {
        Some(s) => HessenbergFunction::parse(s),
        None => Err(Error::Invalid("this job needs --h".into())),
    }
}

fn run_verify(
    job: &str,
    n: usize,
    h: Option<&str>,
    i: Option<usize>,
    j: Option<usize>,
    ctx: &JobContext,
) -> Result<Vec<VerificationReport>, Error> {
    let reports = match job {
        "assprimes" => vec![verify_assprimes(n, &parse_h(h)?, ctx)?],
        "flatness" => {
            let h = parse_h(h)?;
            vec![verify_flatness(n, &h, &ctx.samples, ctx)?]
        }
        "nilpotent-fiber" => vec![verify_nilpotent_fiber(n, &parse_h(h)?, ctx)?],
        "dim-and-class" => vec![verify_dim_and_class(n, &parse_h(h)?, ctx)?],
        "component-degeneration" => {
            vec![verify_component_degeneration(n, &parse_h(h)?, ctx)?]
        }
        "explore-conjecture" => vec![explore_conjecture(n, &parse_h(h)?, ctx)?],
        "grobner-tables" => match (i, j) {
            (Some(i), Some(j)) => vec![verify_grobner_tables(n, i, j, ctx)?],
            (None, None) => {
                let mut out = Vec::new();
                for a in 0..n {
                    for b in a + 1..=n {
                        out.push(verify_grobner_tables(n, a, b, ctx)?);
                    }
                }
                out
            }
            _ => {
                return Err(Error::Invalid(
                    "grobner-tables takes both --i and --j, or neither".into(),
                ))
            }
        },
        other => return Err(Error::Invalid(format!("unknown job '{other}'"))),
    };
    Ok(reports)
}

fn write_reports(path: Option<&PathBuf>, reports: &[VerificationReport]) -> Result<(), Error> {
    if let Some(path) = path {
        let value = if reports.len() == 1 {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(reports)
        }
        .map_err(|e| Error::Invalid(e.to_string()))?;
        std::fs::write(path, serde_json::to_string_pretty(&value).unwrap())
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn print_reports(reports: &[VerificationReport]) {
    for r in reports {
        println!("{}", r.summary_line());
        for w in &r.witnesses {
            if !w.ok {
                println!("  FAILED: {} -- {}", w.claim, w.evidence);
            }
        }
    }
}

fn load_ideal(path: &PathBuf) -> Result<Ideal, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    Ideal::from_json(&value)
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify {
            job,
            n,
            h,
            i,
            j,
            samples,
            order,
            budget,
            json,
        } => {
            let ctx = context(&order, budget, samples.as_deref())?;
            let reports = run_verify(&job, n, h.as_deref(), i, j, &ctx)?;
            print_reports(&reports);
            write_reports(json.as_ref(), &reports)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Cmd::Gb {
            ideal,
            order,
            json,
            budget,
        } => {
            let i = load_ideal(&ideal)?;
            let ord = order_from_name(&order, &i.ring())?;
            let mut opts = GbOptions::default();
            if let Some(b) = budget {
                opts.pair_budget = b;
            }
            let gb = i.groebner_with(&ord, &opts)?;
            println!("order: {}", order_name(&ord));
            for g in &gb.generators {
                println!("{}", format_polynomial(g));
            }
            if let Some(path) = json {
                let value = i.to_json(Some(&ord))?;
                std::fs::write(&path, serde_json::to_string_pretty(&value).unwrap())
                    .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(true)
        }
        Cmd::Multidegree { ideal, budget } => {
            let i = load_ideal(&ideal)?;
            let mut opts = GbOptions::default();
            if let Some(b) = budget {
                opts.pair_budget = b;
            }
            let md = multidegree_with(&i, &hessex_core::order::MonomialOrder::elimination(), &opts)?;
            println!("{md}");
            Ok(true)
        }
        Cmd::Suite {
            n,
            order,
            budget,
            json,
        } => {
            let ctx = context(&order, budget, None)?;
            let reports = suite(n, &ctx)?;
            print_reports(&reports);
            let pass = reports.iter().filter(|r| r.passed()).count();
            println!("{pass}/{} jobs passed", reports.len());
            write_reports(json.as_ref(), &reports)?;
            Ok(pass == reports.len())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
