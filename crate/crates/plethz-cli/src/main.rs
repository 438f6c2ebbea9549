mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use plethz::charalg::{plethysm_oracle, sylow_branching_oracle};
use plethz::plethysm::{deflate, pleth_recursive};
use plethz::sylow::{
    cache_entries, census, clear_cache_dir, z_closed_hook, z_closed_near_hook, z_closed_two_column,
    z_table_with, CensusOptions, CensusRun, ZOptions, CACHE_ENV,
};
use plethz::{Error, Partition};

const MAX_Z_SIZE: usize = 64;

#[derive(Parser)]
#[command(
    name = "plethz",
    version,
    about = "Plethysm coefficients and Sylow branching coefficients of symmetric groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the plethysm coefficient a^μ_{λ,(m)} = <s_λ ∘ s_(m), s_μ>.
    Pleth {
        mu: Partition,
        lambda: Partition,
        m: usize,
        /// Also compute the coefficient from power sums and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the deflation of χ^μ to S_n as `coeff [λ]` lines.
    Deflate { mu: Partition, n: usize },
    /// Print the Sylow branching coefficient Z^λ at p = 2.
    Zcoeff {
        lambda: Partition,
        /// Also compute Z^λ from the cycle index of the Sylow subgroup.
        #[arg(long)]
        oracle: bool,
        /// Table cache directory; defaults to $PLETH_CACHE_DIR.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Compute and classify Z^μ for every μ ⊢ n.
    ///
    /// Every zero is tagged with the first criterion that certifies it, in
    /// this order: tall, N1, N2, ..., N6 (only when 2^i divides n),
    /// two-column, hook, near-hook, inside-large-k, inside-column,
    /// inside-row, length-half, three-column. Zeros with no certificate are
    /// tagged unexplained. The summary also lists the overlapping count of
    /// each criterion. Output is identical for every --jobs value.
    Census {
        /// Size of the layer, at most 64.
        n: usize,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Table cache directory; defaults to $PLETH_CACHE_DIR.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Table file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also write the report as JSON to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify(verify::VerifyArgs),
    /// Inspect or clear the Z table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        /// Defaults to $PLETH_CACHE_DIR.
        #[arg(long, global = true)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum CacheAction {
    List,
    Clear,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
pub(crate) enum Failure {
    Verify(String),
    Usage(String),
    Scale(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) | Failure::Other(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Scale(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Usage(m) | Failure::Scale(m) | Failure::Other(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::ScaleExceeded { .. } | Error::Overflow(_) => Failure::Scale(msg),
            Error::TheoremViolated(_) => Failure::Verify(msg),
            Error::Parse(_)
            | Error::PreconditionViolated(_)
            | Error::ArityError { .. }
            | Error::SizeMismatch { .. }
            | Error::NotAHook(_)
            | Error::EmptyPartition
            | Error::PartTooLarge(_) => Failure::Usage(msg),
            _ => Failure::Other(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

pub(crate) type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Pleth {
            mu,
            lambda,
            m,
            oracle,
        } => cmd_pleth(&mu, &lambda, m, oracle),
        Command::Deflate { mu, n } => cmd_deflate(&mu, n),
        Command::Zcoeff {
            lambda,
            oracle,
            cache_dir,
        } => cmd_zcoeff(&lambda, oracle, cache_dir),
        Command::Census {
            n,
            jobs,
            cache_dir,
            format,
            output,
            report,
        } => cmd_census(n, jobs, cache_dir, format, output, report),
        Command::Verify(args) => verify::run(&args),
        Command::Cache { action, cache_dir } => cmd_cache(action, cache_dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn cmd_pleth(mu: &Partition, lambda: &Partition, m: usize, oracle: bool) -> CmdResult {
    let a = pleth_recursive(mu, lambda, m)?;
    println!("{a}");
    if oracle {
        let o = plethysm_oracle(lambda, &Partition::row(m))?.get(mu);
        let ok = o == a as i64;
        println!("oracle {o} {}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            return Err(Failure::Verify(format!(
                "recursion {a} differs from oracle {o}"
            )));
        }
    }
    Ok(())
}

fn cmd_deflate(mu: &Partition, n: usize) -> CmdResult {
    let d = deflate(mu, n)?;
    let mut out = io::stdout().lock();
    for (lambda, c) in d.value.iter() {
        writeln!(out, "{c} {lambda}")?;
    }
    Ok(())
}

fn cache_options(cache_dir: Option<PathBuf>) -> ZOptions {
    match cache_dir {
        Some(dir) => ZOptions {
            cache_dir: Some(dir),
        },
        None => ZOptions::from_env(),
    }
}

fn closed_form(lambda: &Partition) -> Option<(&'static str, u128)> {
    if let Ok(z) = z_closed_hook(lambda) {
        return Some(("hook", z));
    }
    if let Ok(z) = z_closed_two_column(lambda) {
        return Some(("two-column", z));
    }
    let l = lambda.near_hook_index()?;
    z_closed_near_hook(lambda.size(), l)
        .ok()
        .map(|z| ("near-hook", z))
}

fn cmd_zcoeff(lambda: &Partition, oracle: bool, cache_dir: Option<PathBuf>) -> CmdResult {
    let n = lambda.size();
    if n == 0 {
        return Err(Failure::Usage("Z needs a nonempty partition".into()));
    }
    if n > MAX_Z_SIZE {
        return Err(Error::ScaleExceeded {
            what: "n",
            value: n,
            bound: MAX_Z_SIZE,
        }
        .into());
    }
    let z = z_table_with(n, &cache_options(cache_dir))?.get(lambda);
    println!("{z}");
    if let Some((name, v)) = closed_form(lambda) {
        println!("closed form {name} {v}");
    }
    if oracle {
        let o = sylow_branching_oracle(lambda)?;
        let ok = o as u128 == z;
        println!("oracle {o} {}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            return Err(Failure::Verify(format!(
                "table {z} differs from oracle {o}"
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonRow<'a> {
    partition: &'a Partition,
    z: String,
    reason: Option<String>,
}

fn write_table<W: Write>(run: &CensusRun, format: Format, mut w: W) -> io::Result<()> {
    match format {
        Format::Csv => run.write_csv(&mut w)?,
        Format::Json => {
            let rows: Vec<JsonRow> = run
                .rows
                .iter()
                .map(|r| JsonRow {
                    partition: &r.partition,
                    z: r.z.to_string(),
                    reason: r.reason.map(|t| t.name()),
                })
                .collect();
            serde_json::to_writer_pretty(&mut w, &rows)?;
            writeln!(w)?;
        }
    }
    w.flush()
}

fn cmd_census(
    n: usize,
    jobs: usize,
    cache_dir: Option<PathBuf>,
    format: Format,
    output: Option<PathBuf>,
    report_path: Option<PathBuf>,
) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("census needs n ≥ 1".into()));
    }
    if n > MAX_Z_SIZE {
        return Err(Error::ScaleExceeded {
            what: "n",
            value: n,
            bound: MAX_Z_SIZE,
        }
        .into());
    }
    let opts = CensusOptions {
        jobs,
        cache_dir: cache_options(cache_dir).cache_dir,
        ..Default::default()
    };
    let run = census(n, &opts)?;
    match &output {
        Some(path) => write_table(&run, format, BufWriter::new(File::create(path)?))?,
        None => write_table(&run, format, io::stdout().lock())?,
    }
    if let Some(path) = report_path {
        let mut f = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut f, &run.report).map_err(io::Error::from)?;
        writeln!(f)?;
        f.flush()?;
    }

    let r = &run.report;
    let mut err = io::stderr().lock();
    writeln!(
        err,
        "n {}: total {}, zeros {}, explained {}, unexplained {}",
        r.n,
        r.total,
        r.zeros,
        r.explained,
        r.unexplained.len()
    )?;
    writeln!(err, "first match:")?;
    for (tag, c) in &r.reason_histogram {
        writeln!(err, "  {tag:<16} {c}")?;
    }
    writeln!(err, "overlapping:")?;
    for (tag, c) in &r.overlap_histogram {
        writeln!(err, "  {tag:<16} {c}")?;
    }
    for p in &r.unexplained {
        writeln!(err, "unexplained {p}")?;
    }
    writeln!(err, "runtime {:.2}s", r.runtime)?;
    if !r.false_certificates.is_empty() {
        return Err(Failure::Verify(format!(
            "{} certificates contradict the table",
            r.false_certificates.len()
        )));
    }
    Ok(())
}

fn cmd_cache(action: CacheAction, cache_dir: Option<PathBuf>) -> CmdResult {
    let dir = cache_options(cache_dir).cache_dir.ok_or_else(|| {
        Failure::Usage(format!(
            "no cache directory: pass --cache-dir or set {CACHE_ENV}"
        ))
    })?;
    match action {
        CacheAction::List => {
            for e in cache_entries(&dir)? {
                println!("{}\t{}\t{}", e.path.display(), e.bytes, e.header);
            }
        }
        CacheAction::Clear => {
            let removed = clear_cache_dir(&dir)?;
            println!("removed {removed}");
        }
    }
    Ok(())
}
