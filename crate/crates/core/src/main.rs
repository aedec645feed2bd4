//! `length-lab`: structural invariants of finite permutation groups over a
//! corpus file, with theorem checkers and certificate verification.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use length_lab::algebra::{is_nilpotent, is_soluble, Subgroup};
use length_lab::corpus::{elaborate, parse_corpus, ElaboratedEntry};
use length_lab::report::{emit_report, ReportFormat};
use length_lab::series::{
    self, fitting_series, generalized_fitting_series, parse_certificate,
    upper_nonsoluble_series, verify_series_certificate, FactorStatus, SeriesRecord,
};
use length_lab::suite::{run_suite, SuiteOptions};
use length_lab::{Error, Limits};

#[derive(Parser)]
#[command(
    name = "length-lab",
    about = "Structural invariants of finite permutation groups: radicals, Fitting series, nonsoluble length, coprime fixed points"
)]
struct Cli {
    /// Maximum group order for elementwise enumeration.
    #[arg(long, global = true, default_value_t = 200_000)]
    enumeration_limit: usize,

    /// Maximum subgroup index for coset actions.
    #[arg(long, global = true, default_value_t = 20_000)]
    quotient_limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print basic invariants of one corpus group.
    Info {
        corpus: PathBuf,
        #[arg(long)]
        group: String,
    },
    /// Print one structural series of one corpus group.
    Series {
        corpus: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        series: SeriesChoice,
    },
    /// Run golden comparisons and every applicable checker over the corpus.
    Check {
        corpus: PathBuf,
        /// Run only the named checker (`golden` selects all goldens).
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Verify a claimed series certificate for one corpus group.
    Certify {
        corpus: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesChoice {
    Fitting,
    Gfitting,
    Nonsoluble,
}

fn load_corpus(path: &PathBuf) -> Result<Vec<ElaboratedEntry>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_corpus(&text)?.iter().map(elaborate).collect()
}

fn find_entry<'a>(
    entries: &'a [ElaboratedEntry],
    name: &str,
) -> Result<&'a ElaboratedEntry, Error> {
    entries
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("no corpus group named `{name}`")))
}

fn print_series(record: &SeriesRecord) {
    println!("kind: {}", record.kind().name());
    let orders = record.term_orders();
    for (i, order) in orders.iter().enumerate() {
        if i == 0 {
            println!("  term 0: order {order}");
        } else {
            println!(
                "  term {i}: order {order}  [{} factor]",
                record.factor_tags()[i - 1].name()
            );
        }
    }
}

fn cmd_info(entry: &ElaboratedEntry, limits: &Limits) {
    println!("name: {}", entry.name);
    println!("degree: {}", entry.group.degree());
    println!("order: {}", entry.group.order());
    println!("orbits: {}", entry.group.orbits().len());
    let whole = Subgroup::whole(entry.group.clone());
    let soluble = is_soluble(&whole);
    println!("soluble: {soluble}");
    println!("nilpotent: {}", is_nilpotent(&whole));
    let capacity = |e: &Error| matches!(e, Error::Capacity { .. });
    match series::soluble_radical(&entry.group, limits) {
        Ok(rad) => println!("radical_order: {}", rad.order()),
        Err(e) if capacity(&e) => println!("radical_order: capacity"),
        Err(e) => println!("radical_order: error: {e}"),
    }
    match series::fitting_subgroup(&entry.group, limits) {
        Ok(fit) => println!("fitting_order: {}", fit.order()),
        Err(e) if capacity(&e) => println!("fitting_order: capacity"),
        Err(e) => println!("fitting_order: error: {e}"),
    }
    match series::generalized_fitting_subgroup(&entry.group, limits) {
        Ok(report) => {
            println!("fstar_order: {}", report.fstar.order());
            println!("layer_order: {}", report.layer.order());
            println!("components: {}", report.components.len());
        }
        Err(e) if capacity(&e) => println!("fstar_order: capacity"),
        Err(e) => println!("fstar_order: error: {e}"),
    }
    match series::h_star(&entry.group, limits) {
        Ok(h) => println!("hstar: {h}"),
        Err(e) if capacity(&e) => println!("hstar: capacity"),
        Err(e) => println!("hstar: error: {e}"),
    }
    match series::nonsoluble_length(&entry.group, limits) {
        Ok(l) => println!("lambda: {l}"),
        Err(e) if capacity(&e) => println!("lambda: capacity"),
        Err(e) => println!("lambda: error: {e}"),
    }
    if soluble {
        match series::fitting_height(&entry.group, limits) {
            Ok(h) => println!("height: {h}"),
            Err(e) if capacity(&e) => println!("height: capacity"),
            Err(e) => println!("height: error: {e}"),
        }
    }
    if let Some(act) = &entry.action {
        println!("automorphism_order: {}", act.a_order());
        println!("coprime: {}", act.is_coprime());
        println!("semidirect: {}", act.is_semidirect());
        match act.fixed_point_subgroup(limits) {
            Ok(c) => println!("centralizer_order: {}", c.order()),
            Err(e) if capacity(&e) => println!("centralizer_order: capacity"),
            Err(e) => println!("centralizer_order: error: {e}"),
        }
    }
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    let limits = Limits::new(cli.enumeration_limit, cli.quotient_limit);
    match cli.command {
        Command::Info { corpus, group } => {
            let entries = load_corpus(&corpus)?;
            cmd_info(find_entry(&entries, &group)?, &limits);
            Ok(true)
        }
        Command::Series {
            corpus,
            group,
            series,
        } => {
            let entries = load_corpus(&corpus)?;
            let entry = find_entry(&entries, &group)?;
            let record = match series {
                SeriesChoice::Fitting => fitting_series(&entry.group, &limits)?,
                SeriesChoice::Gfitting => generalized_fitting_series(&entry.group, &limits)?,
                SeriesChoice::Nonsoluble => upper_nonsoluble_series(&entry.group, &limits)?,
            };
            print_series(&record);
            Ok(true)
        }
        Command::Check {
            corpus,
            only,
            format,
        } => {
            let entries = load_corpus(&corpus)?;
            let format: ReportFormat = format.parse()?;
            let outcome = run_suite(&entries, &SuiteOptions { limits, only });
            print!("{}", emit_report(&outcome.reports, format)?);
            for diag in &outcome.diagnostics {
                eprintln!("error: {diag}");
            }
            if format == ReportFormat::Text {
                let failed = outcome
                    .reports
                    .iter()
                    .filter(|r| !r.acceptable() || (r.checker.starts_with("golden:") && !r.pass))
                    .count();
                println!(
                    "{} reports, {} failed",
                    outcome.reports.len(),
                    failed
                );
            }
            Ok(outcome.ok)
        }
        Command::Certify {
            corpus,
            group,
            certificate,
        } => {
            let entries = load_corpus(&corpus)?;
            let entry = find_entry(&entries, &group)?;
            let text = std::fs::read_to_string(&certificate).map_err(|e| {
                Error::InvalidInput(format!("cannot read {}: {e}", certificate.display()))
            })?;
            let lines = parse_certificate(&text, entry.group.degree())?;
            let verdict = verify_series_certificate(&entry.group, &lines, &limits)?;
            for (i, f) in verdict.factors.iter().enumerate() {
                println!(
                    "factor {}: {} of order {} [{}]",
                    i + 1,
                    f.tag.name(),
                    f.factor_order,
                    match f.status {
                        FactorStatus::Verified => "verified",
                        FactorStatus::Unverified => "unverified",
                    }
                );
            }
            println!(
                "certificate accepted: nonsoluble length <= {}",
                verdict.witnessed_length
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
