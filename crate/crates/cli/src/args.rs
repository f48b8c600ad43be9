use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Realizations and rigidity of labelled quadrangular pyramids.
///
/// Lengths are given in the order AB BC CD DA EA EB EC ED, as decimals or as
/// `sqrt(N)`. Angles are in radians.
#[derive(Debug, Parser)]
#[command(name = "pyramid", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Grid points per sweep [default: 8192]
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Residual target for polished realizations [default: 1e-12]
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Coordinate tolerance for congruence [default: 1e-7]
    #[arg(long, global = true)]
    pub congruence_tol: Option<f64>,
    /// Also report realizations on the boundary of the admissible range
    #[arg(long, global = true)]
    pub include_degenerate: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for random instances [default: 0]
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Backward,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    /// Unit square base, apex (0.5, 0.5, 1)
    Square,
    /// Crossed base C = (2, 2), D = (2, 1), apex (1, 1, 1)
    Flex,
}

#[derive(Debug, Args)]
pub struct LengthInput {
    /// Edge lengths
    #[arg(allow_negative_numbers = true)]
    pub lengths: Vec<String>,
    /// JSON problem file
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    /// Lower end of the base angle range [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    /// Upper end of the base angle range [default: pi]
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PyramidInput {
    /// Standard-position coordinates x1,y1,x2,y2,x3,y3,z3 of D, C and E
    #[arg(long, allow_hyphen_values = true, conflicts_with = "example")]
    pub coords: Option<String>,
    /// Target lengths, comma separated [default: measured from the coordinates]
    #[arg(long)]
    pub lengths: Option<String>,
    /// Built-in pyramid
    #[arg(long, value_enum)]
    pub example: Option<Example>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the convex realizations of eight edge lengths
    Realize {
        #[command(flatten)]
        input: LengthInput,
        /// Measure a seeded random convex pyramid and recover it
        #[arg(long, conflicts_with_all = ["lengths", "file"])]
        random: bool,
    },
    /// CSV profile of |EC|^2 over the base angle at A (EC may be given as '-')
    Sweep {
        #[command(flatten)]
        input: LengthInput,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Endpoints and interior extrema of |EC|^2 on each admissible interval
    Critical {
        #[command(flatten)]
        input: LengthInput,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Rank of the rigidity matrix at a realization
    Rigidity {
        #[command(flatten)]
        pyramid: PyramidInput,
    },
    /// Follow a one-parameter flex [default start: the crossed example]
    FlexTrace {
        #[command(flatten)]
        pyramid: PyramidInput,
        /// Accepted steps per direction
        #[arg(long, default_value_t = 40)]
        steps: usize,
        /// Nominal step length
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, value_enum, default_value_t = Direction::Both)]
        direction: Direction,
    },
    /// Freedom and relation counts for a face vector such as "3:4,4:1"
    Dof {
        faces: String,
        /// Size of the face pinned to the plane [default: largest]
        #[arg(long)]
        pinned: Option<u32>,
    },
}
