//! `enrkit`: command-line front end for the lattice, code, elliptic-surface
//! and claim-verification libraries.
//!
//! Exit statuses: 0 success, 1 verification failure, 2 parse error,
//! 3 precondition error, 4 bound exceeded.

mod commands;
mod config;
mod error;
mod fixtures;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{code, ellsurf, lattice, verify, Output};
use config::{CliConfig, Format};
use error::Result;

#[derive(Parser)]
#[command(name = "enrkit", version, about = "Exact lattice, ternary-code and elliptic-surface computations")]
struct Cli {
    /// TOML config file (output_format, verbosity, [enumeration_bounds]).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format; overrides the config file.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// More detail (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Integral lattices from lattice files or bundled fixture names.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Ternary linear codes.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Elliptic surfaces from Weierstrass model files.
    #[command(subcommand)]
    Ellsurf(EllsurfCmd),
    /// Run the claim registry; exit 1 on any failure.
    Verify {
        /// Only claims with this tag (lattice, codes, ellsurf, divisor, moduli).
        #[arg(long)]
        tag: Option<String>,
        /// Only these claim ids.
        #[arg(long)]
        id: Vec<String>,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Rank, signature, determinant and discriminant group.
    Disc { file: String },
    /// Discriminant quadratic form on the group generators.
    Qform { file: String },
    /// Orthogonal complement of the span of `--basis` rows.
    Complement {
        file: String,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    /// Are the discriminant forms of two lattices isometric?
    Iso { first: String, second: String },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Null space over F3 of a matrix file (rows of digits 0/1/2).
    Kernel { file: String },
    /// Code spanned by the rows of a matrix file and its weight distribution.
    Weights { file: String },
    /// Largest dimension the Griesmer bound allows for length n, distance d.
    Griesmer { n: usize, d: usize },
    /// Exhaustive search for an [n, k] code whose nonzero weights lie in `--weights`.
    Search {
        n: usize,
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum EllsurfCmd {
    /// Singular fibers, discriminant and Euler number.
    Fibers { model: String },
    /// Height of a section from its fiber contacts.
    Height {
        #[arg(long)]
        chi: u32,
        /// Simple component met on each fiber, comma-separated.
        #[arg(long)]
        contacts: String,
        /// Intersection number with the zero section.
        #[arg(long, default_value_t = 0)]
        po: i64,
        /// Geometric fiber types, e.g. `I0*,I3,I3,I3,I3*`.
        #[arg(long)]
        fibers: Option<String>,
        /// Take the fibers from a model instead.
        #[arg(long)]
        model: Option<String>,
    },
    /// Quadratic twist by a square-free polynomial in t.
    Twist {
        model: String,
        #[arg(long, allow_hyphen_values = true)]
        by: String,
    },
    /// Pull back along t ↦ r(t).
    Basechange {
        model: String,
        #[arg(long, allow_hyphen_values = true)]
        by: String,
    },
    /// Member of the twist family with a section of x-coordinate c(t − a).
    Family {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

fn run(cli: &Cli, cfg: &CliConfig) -> Result<Output> {
    let bounds = &cfg.enumeration_bounds;
    let verbose = cli.verbose.max(cfg.verbosity.unwrap_or(0)) > 0;
    match &cli.cmd {
        Cmd::Lattice(c) => match c {
            LatticeCmd::Disc { file } => lattice::disc(file),
            LatticeCmd::Qform { file } => lattice::qform(file),
            LatticeCmd::Complement { file, basis } => lattice::complement(file, basis),
            LatticeCmd::Iso { first, second } => lattice::iso(first, second, bounds.iso_search()),
        },
        Cmd::Code(c) => match c {
            CodeCmd::Kernel { file } => code::kernel(file),
            CodeCmd::Weights { file } => code::weights(file, bounds.max_codewords()),
            CodeCmd::Griesmer { n, d } => code::griesmer(*n, *d),
            CodeCmd::Search { n, k, weights } => code::search(*n, *k, weights, bounds.search()),
        },
        Cmd::Ellsurf(c) => match c {
            EllsurfCmd::Fibers { model } => ellsurf::fibers(model),
            EllsurfCmd::Height { chi, contacts, po, fibers, model } => {
                ellsurf::height(*chi, contacts, *po, fibers.as_deref(), model.as_deref())
            }
            EllsurfCmd::Twist { model, by } => ellsurf::twist(model, by),
            EllsurfCmd::Basechange { model, by } => ellsurf::basechange(model, by),
            EllsurfCmd::Family { b } => ellsurf::family(b),
        },
        Cmd::Verify { tag, id } => verify::verify(tag.as_deref(), id, verbose),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.config.as_deref().map_or_else(|| Ok(CliConfig::default()), CliConfig::load).and_then(|cfg| {
        let format = cli.format.or(cfg.output_format).unwrap_or_default();
        run(&cli, &cfg).map(|out| (out, format))
    });
    match result {
        Ok((out, format)) => {
            let body = match format {
                Format::Text => out.text,
                Format::Structured => serde_json::to_string_pretty(&out.data).expect("JSON value"),
            };
            // A closed pipe (`enrkit ... | head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(u8::from(out.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
