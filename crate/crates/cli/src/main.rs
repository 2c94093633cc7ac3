use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dyckideal::convert::{self, Repr};
use dyckideal::counting::{census, formula_table, CensusSource, CSV_HEADER};
use dyckideal::verify::{self, VerifyConfig};
use dyckideal::{enumerate_dyck, enumerate_partitions, Antichain, Error, Exec, LedgerMode, RootIdeal};

/// Largest rank `enumerate` will list (C_13 = 742900 objects).
const MAX_ENUMERATE_RANK: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "dyckideal", version, about = "Dyck paths, staircase partitions and ad-nilpotent ideals of sl(l+1)")]
struct Cli {
    /// Worker threads for the parallel sweeps (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Run every sweep on the calling thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert one object between representations
    Map {
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every object of one kind at rank l, one per line
    Enumerate {
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Kind::Partition)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSV census of the udu statistic against the closed formula
    Stats {
        #[arg(long)]
        max_l: usize,
    },
    /// Antichain of the dual ideal
    Dual {
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        antichain: String,
        /// Also report whether applying dual twice gives the input back
        #[arg(long)]
        check_involution: bool,
    },
    /// Run the exhaustive invariant suites
    Verify {
        #[arg(long)]
        max_l: usize,
        /// Rank bound for the matrix-unit suites (default: min(max-l, 5))
        #[arg(long)]
        lie_max_l: Option<usize>,
        /// Use a deliberately wrong ledger to exercise failure reporting
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Partition,
    Dyck,
    #[value(name = "dyck-akop")]
    DyckInsertion,
    Antichain,
}

impl From<Kind> for Repr {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Partition => Repr::Partition,
            Kind::Dyck => Repr::Dyck,
            Kind::DyckInsertion => Repr::DyckInsertion,
            Kind::Antichain => Repr::Antichain,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

enum Failure {
    /// Exit 1.
    Check(String),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn render(value: &convert::Value, format: Format) -> String {
    match format {
        Format::Text => value.text(),
        Format::Json => value.json(),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let io_err = |e: io::Error| Failure::Check(format!("write failed: {e}"));

    match cli.command {
        Command::Map { l, from, to, input, format } => {
            let value = convert::convert(from.into(), to.into(), l, &input)?;
            writeln!(out, "{}", render(&value, format)).map_err(io_err)?;
        }
        Command::Enumerate { l, kind, format } => {
            if l > MAX_ENUMERATE_RANK {
                return Err(Failure::Usage(format!("--l {l} exceeds {MAX_ENUMERATE_RANK}")));
            }
            let values: Vec<convert::Value> = match kind {
                // lexicographic path order rather than partition order
                Kind::Dyck => enumerate_dyck(l + 1)?.into_iter().map(convert::Value::Dyck).collect(),
                _ => enumerate_partitions(l)?
                    .iter()
                    .map(|lambda| convert::from_partition(lambda, kind.into()))
                    .collect(),
            };
            for value in &values {
                writeln!(out, "{}", render(value, format)).map_err(io_err)?;
            }
        }
        Command::Stats { max_l } => {
            if max_l == 0 || max_l > dyckideal::counting::MAX_CENSUS_RANK {
                return Err(Failure::Usage(format!(
                    "--max-l must lie in 1..={}",
                    dyckideal::counting::MAX_CENSUS_RANK
                )));
            }
            writeln!(out, "{CSV_HEADER}").map_err(io_err)?;
            let mut mismatches = Vec::new();
            for l in 1..=max_l {
                let formula = formula_table(l)?;
                let udu = census(l, CensusSource::UduCensus, exec)?;
                let imax = census(l, CensusSource::IdealCensus, exec)?;
                for table in [&formula, &udu, &imax] {
                    for row in table.csv_rows() {
                        writeln!(out, "{row}").map_err(io_err)?;
                    }
                    if table.counts != formula.counts {
                        mismatches.push(format!("l={l}: {} {:?} != formula {:?}", table.source, table.counts, formula.counts));
                    }
                }
            }
            if !mismatches.is_empty() {
                return Err(Failure::Check(mismatches.join("\n")));
            }
        }
        Command::Dual { l, antichain, check_involution } => {
            let antichain = Antichain::parse(l, &antichain)?;
            let ideal = RootIdeal::from_antichain(&antichain, l);
            let dual = ideal.dual();
            writeln!(out, "{}", dual.phi_min()).map_err(io_err)?;
            if check_involution {
                let back = dual.dual();
                let verdict = if back == ideal { "yes" } else { "no" };
                writeln!(out, "involution: {verdict} (dual of dual = {})", back.phi_min()).map_err(io_err)?;
            }
        }
        Command::Verify { max_l, lie_max_l, inject_fault } => {
            let config = VerifyConfig {
                max_l,
                lie_max_l: lie_max_l.unwrap_or(max_l.min(verify::MAX_VERIFY_LIE_RANK)),
                exec,
                ledger_mode: if inject_fault { LedgerMode::KeepZeroEntries } else { LedgerMode::Standard },
            };
            let report = verify::run(&config)?;
            for line in verify::render(&report) {
                writeln!(out, "{line}").map_err(io_err)?;
            }
            if let Some(bad) = report.first_failure() {
                return Err(Failure::Check(format!("suite {} failed", bad.name)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(n) = cli.threads {
        #[cfg(feature = "parallel")]
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
        #[cfg(not(feature = "parallel"))]
        eprintln!("warning: built without parallel support, ignoring --threads {n}");
    }

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
