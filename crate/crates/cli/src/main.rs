//! Command-line front-end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 IO or parse error.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use schreier_turan::graph::{build_t, turan_edge_count, CanonicalPolicy};
use schreier_turan::io::{
    compare_sequences, export_graph, read_bfile, sequence_table_csv, write_bfile, SequenceMatch,
};
use schreier_turan::schreier::{sr_bruteforce, sr_difference, sr_partial_sum, SchreierParams};
use schreier_turan::verify::{sweep_cell, VerificationReport};

#[derive(Parser)]
#[command(
    name = "schreier-turan",
    version,
    about = "Gap-constrained Schreier-set counts and their Turán-style graph companions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// `n,sr,diff` table.
    Csv,
    /// OEIS b-file lines `n value`, indexed from 1.
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Series {
    /// Sr(n, p, q), defined for indices >= 1.
    Sr,
    /// Balanced complete p-partite edge counts, defined for indices >= 0.
    Turan,
}

#[derive(Subcommand)]
enum Command {
    /// Print Sr(1..=n_max, p, q). Without --format, values appear as one
    /// comma-separated line.
    Seq {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Cross-check every value against exhaustive enumeration.
        #[arg(long)]
        check: bool,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check all computation routes over the whole (n, p, q) grid.
    /// SCHREIER_THREADS caps the parallelism.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        p_max: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        q_max: u64,
    },
    /// Export the n-vertex thinned graph on p parts with gap q and print its
    /// edge count.
    Graph {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        q: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare a generated sequence against an OEIS b-file and report the
    /// agreement length.
    Compare {
        #[arg(long, value_enum)]
        series: Series,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        q: u64,
        /// Compare at most this many leading entries.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
        /// Path to the b-file.
        bfile: PathBuf,
    },
    /// Print the n,sr,diff table for one (p, q).
    DiffTable {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Cross-check every row against exhaustive enumeration.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// A cross-check disagreed.
    Mismatch(String),
    /// Bad environment configuration.
    Env(String),
    Io(std::io::Error),
    /// Unusable input data.
    Data(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Env(_) => 2,
            CliError::Io(_) | CliError::Data(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Mismatch(msg) | CliError::Env(msg) | CliError::Data(msg) => {
                write!(f, "{msg}")
            }
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Seq { p, q, n_max, format, check, out } => {
            cmd_seq(p, q, n_max, format, check, out)
        }
        Command::Verify { n_max, p_max, q_max } => cmd_verify(n_max, p_max, q_max),
        Command::Graph { n, p, q, out } => cmd_graph(n, p, q, out),
        Command::Compare { series, p, q, n_max, bfile } => {
            cmd_compare(series, p, q, n_max, bfile)
        }
        Command::DiffTable { p, q, n_max, check, out } => cmd_diff_table(p, q, n_max, check, out),
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn checked_values(p: u64, q: u64, n_max: u64, check: bool) -> Result<Vec<u64>, CliError> {
    let mut values = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let params = SchreierParams::new(n, p, q);
        let value = sr_partial_sum(&params);
        if check {
            let reference = sr_bruteforce(&params);
            if reference != value {
                return Err(CliError::Mismatch(format!(
                    "cross-check failed at {params}: partial sum {value}, enumeration {reference}"
                )));
            }
        }
        values.push(value);
    }
    Ok(values)
}

fn cmd_seq(
    p: u64,
    q: u64,
    n_max: u64,
    format: Option<Format>,
    check: bool,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let values = checked_values(p, q, n_max, check)?;
    let text = match format {
        None => {
            let joined: Vec<String> = values.iter().map(u64::to_string).collect();
            format!("{}\n", joined.join(", "))
        }
        Some(Format::Csv) => sequence_table_csv(
            values.iter().enumerate().map(|(i, &sr)| {
                let n = i as u64 + 1;
                (n, sr, sr_difference(n, p, q))
            }),
        ),
        Some(Format::Bfile) => {
            let signed: Vec<i64> = values.iter().map(|&v| v as i64).collect();
            write_bfile(&signed, 1)
        }
    };
    emit(out, &text)
}

fn cmd_verify(n_max: u64, p_max: u64, q_max: u64) -> Result<(), CliError> {
    let cells: Vec<(u64, u64)> =
        (1..=p_max).flat_map(|p| (1..=q_max).map(move |q| (p, q))).collect();
    let run_cells = || -> Vec<Vec<VerificationReport>> {
        cells.par_iter().map(|&(p, q)| sweep_cell(p, q, n_max)).collect()
    };
    let per_cell = match std::env::var("SCHREIER_THREADS") {
        Ok(raw) => {
            let threads: usize = raw.parse().map_err(|_| {
                CliError::Env(format!("SCHREIER_THREADS must be a positive integer, got {raw:?}"))
            })?;
            if threads == 0 {
                return Err(CliError::Env("SCHREIER_THREADS must be at least 1".into()));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Env(format!("could not build thread pool: {e}")))?;
            pool.install(run_cells)
        }
        Err(_) => run_cells(),
    };

    let mut first_failure: Option<&VerificationReport> = None;
    for ((p, q), reports) in cells.iter().zip(&per_cell) {
        let passed = reports.iter().filter(|r| r.passed()).count();
        println!("p={p} q={q} n=1..={n_max}: {passed}/{} pass", reports.len());
        if first_failure.is_none() {
            first_failure = reports.iter().find(|r| !r.passed());
        }
    }
    match first_failure {
        None => {
            println!("all {} cells pass", cells.len() * n_max as usize);
            Ok(())
        }
        Some(report) => Err(CliError::Mismatch(format!("first failure: {report}"))),
    }
}

fn cmd_graph(n: u64, p: u64, q: u64, out: PathBuf) -> Result<(), CliError> {
    let graph = build_t(n, p, q, &mut CanonicalPolicy)
        .map_err(|e| CliError::Data(format!("construction failed: {e}")))?;
    let text = export_graph(&graph);
    fs::write(&out, text).map_err(CliError::Io)?;
    println!("{} vertices, {} edges -> {}", graph.vertex_count(), graph.edge_count(), out.display());
    Ok(())
}

fn cmd_compare(
    series: Series,
    p: u64,
    q: u64,
    n_max: Option<u64>,
    bfile: PathBuf,
) -> Result<(), CliError> {
    let text = fs::read_to_string(&bfile).map_err(CliError::Io)?;
    let mut entries = read_bfile(&text).map_err(|e| CliError::Data(format!("{}: {e}", bfile.display())))?;
    if let Some(limit) = n_max {
        entries.truncate(limit as usize);
    }
    if entries.is_empty() {
        println!("agreement length 0");
        return Ok(());
    }

    let computed: Vec<i64> = match series {
        Series::Sr => entries
            .iter()
            .map(|e| {
                let n = u64::try_from(e.index).ok().filter(|&n| n >= 1).ok_or_else(|| {
                    CliError::Data(format!("Sr is defined for indices >= 1, b-file has {}", e.index))
                })?;
                Ok(sr_partial_sum(&SchreierParams::new(n, p, q)) as i64)
            })
            .collect::<Result<_, CliError>>()?,
        Series::Turan => entries
            .iter()
            .map(|e| {
                let n = u64::try_from(e.index).map_err(|_| {
                    CliError::Data(format!("edge counts need indices >= 0, b-file has {}", e.index))
                })?;
                Ok(turan_edge_count(n, p) as i64)
            })
            .collect::<Result<_, CliError>>()?,
    };
    let listed: Vec<i64> = entries.iter().map(|e| e.value).collect();
    match compare_sequences(&computed, &listed) {
        SequenceMatch::Agree { overlap } => {
            println!("agreement length {overlap}");
            Ok(())
        }
        SequenceMatch::Mismatch { index } => Err(CliError::Mismatch(format!(
            "first mismatch at index {} (entry {}): computed {}, b-file lists {}",
            entries[index].index,
            index,
            computed[index],
            listed[index],
        ))),
    }
}

fn cmd_diff_table(
    p: u64,
    q: u64,
    n_max: u64,
    check: bool,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let values = checked_values(p, q, n_max, check)?;
    if check {
        // The diff column claims Sr(n+1) − Sr(n); check the step past the
        // table's edge as well.
        let next = sr_bruteforce(&SchreierParams::new(n_max + 1, p, q));
        let mut previous = None;
        for (i, &sr) in values.iter().enumerate() {
            let n = i as u64 + 1;
            if let Some(prev) = previous {
                let stepped = sr - prev;
                let formula = sr_difference(n - 1, p, q);
                if stepped != formula {
                    return Err(CliError::Mismatch(format!(
                        "difference cross-check failed at n={}: counted {stepped}, formula {formula}",
                        n - 1
                    )));
                }
            }
            previous = Some(sr);
        }
        let last_step = next - values[values.len() - 1];
        let formula = sr_difference(n_max, p, q);
        if last_step != formula {
            return Err(CliError::Mismatch(format!(
                "difference cross-check failed at n={n_max}: counted {last_step}, formula {formula}"
            )));
        }
    }
    let table = sequence_table_csv(values.iter().enumerate().map(|(i, &sr)| {
        let n = i as u64 + 1;
        (n, sr, sr_difference(n, p, q))
    }));
    emit(out, &table)
}
