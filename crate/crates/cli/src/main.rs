use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use toric_core::budget::set_threads;
use toric_core::fibers::enumerate_fiber;
use toric_core::graver::graver_basis_with;
use toric_core::io::{format_matrix, moves_to_matrix, read_matrix, VerdictReport};
use toric_core::lawrence::{check_restriction, complexity_profile, lift};
use toric_core::markov::{
    indispensable_set_by_degrees, indispensable_set_with, minimal_markov_basis_with, universal_markov_basis_by_degrees, universal_markov_basis_with,
    DegreeSource, MarkovBasis,
};
use toric_core::paperlab::{self, Verdict};
use toric_core::{Budget, ConfigKind, Configuration, Error, IntMat, IntVec};

#[derive(Parser)]
#[command(name = "toric", version, about = "Fibers, Graver and Markov bases of toric lattices")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Limits {
    /// Point cap for a single fiber.
    #[arg(long, global = true)]
    max_fiber: Option<usize>,
    /// Cap on candidate pairs processed by completions.
    #[arg(long, global = true)]
    max_completion: Option<usize>,
    /// Give up after this many seconds.
    #[arg(long, global = true)]
    time_limit: Option<u64>,
    /// Worker threads (a hint; output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// All nonnegative solutions of A·t = b.
    Fiber {
        matrix: PathBuf,
        /// Degree, comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        deg: Vec<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Graver basis.
    Graver {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A minimal Markov basis, or the universal basis or indispensable set.
    Markov {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, conflicts_with = "indispensable")]
        universal: bool,
        #[arg(long)]
        indispensable: bool,
    },
    /// Universal Markov basis.
    Universal {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Indispensable set.
    Indispensable {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The r-th Lawrence lifting of a curve.
    Lift {
        matrix: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sizes and largest types of minimal Markov bases of the liftings.
    Complexity {
        matrix: PathBuf,
        #[arg(long)]
        rmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Compares universal Markov bases of a curve and its prefix under lifting.
    Restrict {
        matrix: PathBuf,
        #[arg(long)]
        prefix: usize,
        #[arg(long)]
        r: usize,
    },
    /// Checks one claim about the family (1, n, n²−n, n²−1).
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        #[arg(long, default_value_t = 5)]
        n: i64,
        #[arg(long, default_value_t = 3)]
        rmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Lemma1,
    Lemma2,
    Lemma3,
    Witness,
    Table1,
    Remark6,
    SubsetsCi,
    Restriction,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn budget(l: &Limits) -> Budget {
    let mut b = Budget::from_env();
    if let Some(x) = l.max_fiber {
        b.max_fiber = x;
    }
    if let Some(x) = l.max_completion {
        b.max_completion = x;
    }
    if let Some(s) = l.time_limit {
        b = b.with_time_limit(Duration::from_secs(s));
    }
    if let Some(t) = l.threads {
        set_threads(t.max(1));
        b.parallel = t > 1;
    }
    b
}

/// One-row matrices are curves; anything else is graded by the all-ones row.
fn load(path: &Path) -> Result<Configuration, Error> {
    let m = read_matrix(path)?;
    if m.rows() == 1 {
        return Configuration::curve(m.row(0));
    }
    Configuration::general(m.clone(), IntVec::new(vec![1; m.rows()]))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_basis(m: &MarkovBasis, dim: usize, output: Option<&Path>) -> Result<(), Error> {
    emit(&format_matrix(&moves_to_matrix(&m.moves, dim)?), output)
}

fn to_json(x: Result<serde_json::Value, serde_json::Error>) -> Result<String, Error> {
    x.and_then(|v| serde_json::to_string_pretty(&v)).map_err(|e| Error::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<bool, Error> {
    let b = budget(&cli.limits);
    match cli.cmd {
        Cmd::Fiber { matrix, deg, output } => {
            let c = load(&matrix)?;
            let f = enumerate_fiber(&c, &IntVec::new(deg), b.max_fiber, None)?;
            f.require_complete(b.max_fiber)?;
            let entries: Vec<i64> = f.points.iter().flat_map(|p| p.as_slice().iter().copied()).collect();
            emit(&format_matrix(&IntMat::new(f.len(), c.dim(), entries)?), output.as_deref())?;
        }
        Cmd::Graver { matrix, output } => {
            let c = load(&matrix)?;
            let g = graver_basis_with(&c, &b)?;
            emit(&format_matrix(&moves_to_matrix(&g.moves, c.dim())?), output.as_deref())?;
        }
        Cmd::Markov {
            matrix,
            output,
            universal,
            indispensable,
        } => {
            let c = load(&matrix)?;
            let m = if universal {
                universal_basis(&c, &b)?
            } else if indispensable {
                indispensable_basis(&c, &b)?
            } else {
                minimal_markov_basis_with(&c, DegreeSource::Auto, &b)?
            };
            emit_basis(&m, c.dim(), output.as_deref())?;
        }
        Cmd::Universal { matrix, output } => {
            let c = load(&matrix)?;
            emit_basis(&universal_basis(&c, &b)?, c.dim(), output.as_deref())?;
        }
        Cmd::Indispensable { matrix, output } => {
            let c = load(&matrix)?;
            emit_basis(&indispensable_basis(&c, &b)?, c.dim(), output.as_deref())?;
        }
        Cmd::Lift { matrix, r, output } => {
            let c = load(&matrix)?;
            emit(&format_matrix(lift(&c, r)?.matrix()), output.as_deref())?;
        }
        Cmd::Complexity { matrix, rmax, json } => {
            let c = load(&matrix)?;
            let p = complexity_profile(&c, rmax, &b)?;
            let text = to_json(serde_json::to_value(&p))? + "\n";
            match json {
                Some(path) => std::fs::write(path, &text)?,
                None => print!("{text}"),
            }
            if let Some((r, why)) = &p.truncated_at {
                eprintln!("profile truncated at r = {r}: {why}");
            }
        }
        Cmd::Restrict { matrix, prefix, r } => {
            let c = load(&matrix)?;
            let chk = check_restriction(&c, prefix, r, &b)?;
            println!("{}", to_json(serde_json::to_value(&chk))?);
            return Ok(chk.holds);
        }
        Cmd::Verify { claim, n, rmax, json } => {
            let started = Instant::now();
            let v = verify(claim, n, rmax, &b)?;
            let report = VerdictReport::new(v, started.elapsed().as_secs_f64());
            let text = report.to_json()? + "\n";
            match json {
                Some(path) => std::fs::write(path, &text)?,
                None => print!("{text}"),
            }
            return Ok(report.verdict.pass);
        }
    }
    Ok(true)
}

/// Lawrence liftings go through their fiber graphs directly; the Graver
/// basis of a lifting is far larger than its universal Markov basis.
fn universal_basis(c: &Configuration, b: &Budget) -> Result<MarkovBasis, Error> {
    match c.kind() {
        ConfigKind::Lawrence { .. } => universal_markov_basis_by_degrees(c, b),
        _ => universal_markov_basis_with(c, b),
    }
}

fn indispensable_basis(c: &Configuration, b: &Budget) -> Result<MarkovBasis, Error> {
    match c.kind() {
        ConfigKind::Lawrence { .. } => indispensable_set_by_degrees(c, b),
        _ => indispensable_set_with(c, b),
    }
}

fn verify(claim: Claim, n: i64, rmax: usize, b: &Budget) -> Result<Verdict, Error> {
    match claim {
        Claim::Lemma1 => paperlab::verify_lemma1(n, b),
        Claim::Lemma2 => paperlab::verify_lemma2(n, b),
        Claim::Lemma3 => paperlab::verify_lemma3(n, b),
        Claim::Witness => paperlab::verify_witness_indispensable(n, b),
        Claim::Table1 => paperlab::table1(rmax, b),
        Claim::Remark6 => paperlab::verify_remark_type6(),
        Claim::SubsetsCi => paperlab::verify_subsets_ci(n, b),
        Claim::Restriction => paperlab::verify_restriction(n, rmax, b),
    }
}
