use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mosaic_cli::plane::{Axes, RowSet};
use mosaic_cli::{FoamKind, Outcome, RandomKind};

#[derive(Parser)]
#[command(name = "mosaic", version, about = "Construct, measure and verify convex mosaics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog mosaic and write it as JSON.
    Construct {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Average degrees of a catalog mosaic or a JSON file.
    Stats {
        mosaic: String,
        /// Print the first line as exact fractions.
        #[arg(long)]
        exact: bool,
    },
    /// Measured incidence matrix next to the one predicted from (v, f, n).
    Nij {
        mosaic: String,
        /// Fail unless the two matrices agree.
        #[arg(long)]
        check: bool,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Export mosaics as points of the (n, v) or (f, v) plane.
    Plane {
        #[arg(long, value_enum, default_value = "table1")]
        set: RowSet,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "nv")]
        axes: Axes,
    },
    /// Repeat foam or dual-foam steps and compare with the recursion.
    Iterate {
        #[arg(value_enum)]
        kind: FoamKind,
        name: String,
        #[arg(short)]
        k: usize,
    },
    /// Layered cubic/subdivided mix, or a recipe for a target harmonic degree.
    Mix {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
    /// Monte Carlo degrees of Poisson-Voronoi or Poisson-Delaunay mosaics.
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        #[arg(long, default_value_t = 1000)]
        points: usize,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        /// Overridden by the MOSAIC_SEED environment variable.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Spherical mosaic of a catalog polyhedron or an OFF file.
    Sphere { polyhedron: String },
}

#[derive(Subcommand)]
enum Verify {
    Table1 {
        /// Check all rows from their stored degrees instead of by construction.
        #[arg(long)]
        arithmetic: bool,
    },
    Table2,
    Conjecture,
    Angles {
        name: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn run(cli: Cli) -> mosaic_core::Result<Outcome> {
    match cli.command {
        Command::Construct { name, out } => mosaic_cli::construct(&name, out.as_deref()),
        Command::Stats { mosaic, exact } => mosaic_cli::stats(&mosaic, exact),
        Command::Nij { mosaic, check } => mosaic_cli::nij(&mosaic, check),
        Command::Verify(Verify::Table1 { arithmetic }) => Ok(mosaic_cli::verify_table1(arithmetic)),
        Command::Verify(Verify::Table2) => Ok(mosaic_cli::verify_table2_cmd()),
        Command::Verify(Verify::Conjecture) => mosaic_cli::verify_conjecture(),
        Command::Verify(Verify::Angles { name, tol }) => mosaic_cli::verify_angles(&name, tol),
        Command::Plane { set, csv, svg, axes } => mosaic_cli::plane(set, &csv, svg.as_deref(), axes),
        Command::Iterate { kind, name, k } => mosaic_cli::iterate(kind, &name, k),
        Command::Mix { lambda, target } => mosaic_cli::mix(lambda.as_deref(), target.as_deref()),
        Command::Random { kind, points, reps, seed, csv } => {
            let seed = match std::env::var("MOSAIC_SEED") {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| mosaic_core::Error::Parse(format!("MOSAIC_SEED `{v}` is not an integer")))?,
                Err(_) => seed,
            };
            let mut out = mosaic_cli::random(kind, points, reps, seed)?;
            if let Some(p) = csv {
                std::fs::write(&p, &out.text)?;
                out.text = format!("wrote {}\n", p.display());
            }
            Ok(out)
        }
        Command::Sphere { polyhedron } => mosaic_cli::sphere(&polyhedron),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(mosaic_cli::error_code(&e) as u8)
        }
    }
}
