use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ziptensor::blocks::Axis;
use ziptensor::dihedral::{enumerate_orbits_with, orbits_to_json};
use ziptensor::limits::CAPACITY_ENV;
use ziptensor::render::{
    decomposition_to_json, to_csv, to_json, to_svg, to_text, SvgOptions, TextStyle,
};
use ziptensor::verify::{run_checks, CheckId, VerifyOptions};
use ziptensor::{build_tensor, decode, GridDecomposition, Limits};

#[derive(Parser)]
#[command(
    name = "ziptensor",
    version,
    about = "Zippered composition tensors and their tree words"
)]
struct Cli {
    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest k accepted by every command.
    #[arg(long, global = true, env = CAPACITY_ENV)]
    capacity: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Grid {
    #[arg(short)]
    k: u32,
    #[arg(short)]
    i: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print one tensor.
    Gen {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value_t = Format::Digits)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run conformance checks and print the report; exit 1 if any fails.
    Verify {
        #[arg(long)]
        max_k: Option<u32>,
        /// Comma-separated check names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the tree words of every tensor for one k.
    Trees {
        #[arg(short)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Emit::Words)]
        emit: Emit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dihedral classes of the middle-level words.
    Orbits {
        #[arg(short)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strip sizes per level, or the full decomposition as JSON.
    Strips {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value_t = StripFormat::Text)]
        format: StripFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the grid as SVG.
    Render {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = 20)]
        cell: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Like verify, with timings.
    Report {
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Digits,
    Bullets,
    Annotated,
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Words,
    Parens,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripFormat {
    Text,
    Json,
}

enum Failure {
    /// Some check did not pass.
    Check,
    Usage(String),
}

impl From<ziptensor::Error> for Failure {
    fn from(e: ziptensor::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: Option<&PathBuf>, mut body: String) -> Result<(), Failure> {
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match out {
        Some(path) => fs::write(path, body)?,
        None => io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn parse_checks(names: &[String]) -> Result<Vec<CheckId>, Failure> {
    if names.is_empty() {
        return Ok(CheckId::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| n.trim().parse::<CheckId>().map_err(Failure::from))
        .collect()
}

fn strip_listing(d: &GridDecomposition) -> String {
    let mut lines = vec![format!("k={} i={} side={}", d.k, d.i, d.side)];
    for q in 1..d.i {
        let sizes = d.strip_sizes(q, Axis::Vertical);
        let line = if q + 1 < d.i {
            // group by the enclosing (q+1)-strips
            let outer = d.strip_sizes(q + 1, Axis::Vertical);
            let mut groups = Vec::new();
            let mut rest = sizes.as_slice();
            for size in outer {
                let mut taken = 0;
                let mut n = 0;
                while taken < size {
                    taken += rest[n];
                    n += 1;
                }
                let group: Vec<String> = rest[..n].iter().map(ToString::to_string).collect();
                groups.push(group.join(","));
                rest = &rest[n..];
            }
            groups.join("; ")
        } else {
            let all: Vec<String> = sizes.iter().map(ToString::to_string).collect();
            all.join(",")
        };
        lines.push(format!("q={q}: {line}"));
    }
    lines.join("\n")
}

fn verify(
    max_k: Option<u32>,
    checks: &[String],
    out: Option<PathBuf>,
    limits: Limits,
    timing: bool,
) -> Result<(), Failure> {
    let checks = parse_checks(checks)?;
    let opts = VerifyOptions {
        max_k,
        limits,
        timing,
    };
    let report = run_checks(&checks, &opts)?;
    emit(out.as_ref(), report.to_json())?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let limits = cli.capacity.map(Limits::uniform).unwrap_or_default();

    match cli.command {
        Command::Gen { grid, format, out } => {
            limits.check_tensor(grid.k)?;
            let t = build_tensor(grid.k, grid.i)?;
            let body = match format {
                Format::Digits => to_text(&t, TextStyle::Digits),
                Format::Bullets => to_text(&t, TextStyle::Bullets),
                Format::Annotated => to_text(&t, TextStyle::Annotated),
                Format::Csv => to_csv(&t),
                Format::Json => to_json(&t),
                Format::Svg => {
                    let d = GridDecomposition::new(grid.k, grid.i)?;
                    to_svg(&d, &t, &SvgOptions::default())?
                }
            };
            emit(out.as_ref(), body)
        }
        Command::Verify { max_k, checks, out } => verify(max_k, &checks, out, limits, false),
        Command::Report { max_k, checks, out } => verify(max_k, &checks, out, limits, true),
        Command::Trees { k, emit: kind, out } => {
            limits.check_tensor(k)?;
            let mut items = Vec::new();
            for i in 1..=k {
                for (_, _, w) in build_tensor(k, i)?.tree_words() {
                    items.push(match kind {
                        Emit::Words => w.to_string(),
                        Emit::Parens => decode(&w)?.to_parens(),
                        Emit::Dot => decode(&w)?.to_dot(),
                    });
                }
            }
            let sep = if matches!(kind, Emit::Dot) { "" } else { "\n" };
            emit(out.as_ref(), items.join(sep))
        }
        Command::Orbits { k, out } => {
            let classes = enumerate_orbits_with(k, &limits)?;
            emit(out.as_ref(), orbits_to_json(k, &classes))
        }
        Command::Strips { grid, format, out } => {
            limits.check_tensor(grid.k)?;
            let d = GridDecomposition::new(grid.k, grid.i)?;
            let body = match format {
                StripFormat::Text => strip_listing(&d),
                StripFormat::Json => decomposition_to_json(&d, &build_tensor(grid.k, grid.i)?)?,
            };
            emit(out.as_ref(), body)
        }
        Command::Render { grid, cell, out } => {
            limits.check_tensor(grid.k)?;
            let d = GridDecomposition::new(grid.k, grid.i)?;
            let t = build_tensor(grid.k, grid.i)?;
            emit(out.as_ref(), to_svg(&d, &t, &SvgOptions { cell })?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
