use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use git_instab::gitcore::Mode;

#[derive(Debug, Parser)]
#[command(
    name = "git-instab",
    version,
    about = "Exact torus (semi)stability certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Weights of the form (or Hilbert point) under the diagonal torus.
    State(Options),
    /// Hilbert-Mumford index of a one-parameter subgroup of the diagonal torus.
    HmIndex(Options),
    /// Nearest point to the origin of the hull of explicit points.
    Nearest(Options),
    /// Worst one-parameter subgroup over the standard (and optionally sampled) tori.
    Worst(Options),
    /// Generators of the cone of destabilizing one-parameter subgroups.
    Destab(Options),
    /// Sampled generic state under random coordinate changes.
    GenericState(Options),
    /// Generic semistability (GL) or stability (SL) certificate.
    Certify(Options),
    /// Groups sampled coordinate changes by the state they produce.
    Stratify(Options),
    /// State of the Hilbert point of a homogeneous ideal in degree m.
    HilbertState(Options),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::State(_) => "state",
            Command::HmIndex(_) => "hm-index",
            Command::Nearest(_) => "nearest",
            Command::Worst(_) => "worst",
            Command::Destab(_) => "destab",
            Command::GenericState(_) => "generic-state",
            Command::Certify(_) => "certify",
            Command::Stratify(_) => "stratify",
            Command::HilbertState(_) => "hilbert-state",
        }
    }

    pub fn options(&self) -> &Options {
        match self {
            Command::State(o)
            | Command::HmIndex(o)
            | Command::Nearest(o)
            | Command::Worst(o)
            | Command::Destab(o)
            | Command::GenericState(o)
            | Command::Certify(o)
            | Command::Stratify(o)
            | Command::HilbertState(o) => o,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Acting group.
    #[arg(long, default_value = "SL")]
    pub mode: Mode,
    /// Projective dimension: variables are x0..xn.
    #[arg(long)]
    pub n: Option<usize>,
    /// Expected degree of the form.
    #[arg(long)]
    pub d: Option<u32>,
    /// Degree of the Hilbert point; an ideal is read when present.
    #[arg(long)]
    pub m: Option<u32>,
    /// Homogeneous form, e.g. "x0*x2 - x1^2".
    #[arg(long)]
    pub f: Option<String>,
    /// Comma-separated homogeneous generators.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Points for `nearest`, e.g. "[(1,0),(0,1/2)]".
    #[arg(long)]
    pub points: Option<String>,
    /// File holding the form, ideal or points text.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// One-parameter subgroup, e.g. "2,-1,-1".
    #[arg(long)]
    pub rho: Option<String>,
    /// Also search tori conjugated by sampled coordinate changes (`worst`).
    #[arg(long)]
    pub explore: bool,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 5)]
    pub entry_bound: i64,
    #[arg(long, default_value_t = 5)]
    pub stall: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write a picture of the point set here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Coordinates to draw, e.g. "0,1"; defaults to the sum-zero plane for n = 2.
    #[arg(long)]
    pub svg_axes: Option<String>,
}
