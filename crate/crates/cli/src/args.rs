use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "mforge", version, about = "Minuscule representations from lattice polytopes")]
pub struct Cli {
    /// Output format. `dot` applies to `crystal` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, short = 'o', global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List or build the polytope catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Build a catalog system and emit it as a system file.
    Build(BuildArgs),
    /// Check the minuscule axioms; exits 1 with a violation report on failure.
    Validate(Input),
    /// Cartan matrix, symmetrizer and Dynkin type of Δ.
    Cartan(Input),
    /// Check the operator identities and the Kac–Moody presentation.
    Relations(RelationsArgs),
    /// The weight `(c(v, a))_a` of every vertex.
    Weights(Input),
    /// Highest and lowest weight vectors.
    Extremes(Input),
    /// Irreducibility certificate (finite-type Δ only).
    Irreducible(Input),
    /// Crystal graph as JSON or Graphviz DOT.
    Crystal(Input),
    /// Weight poset; `--check-lattice` also tests the lattice properties.
    Poset(PosetArgs),
    /// Weyl group orbits on vertices, on pairs, or edge roots at a distance.
    Orbits(OrbitsArgs),
    /// Line incidence table of the Hesse polytope.
    Delpezzo(DelpezzoArgs),
    /// Slice a system by a hyperplane and emit it as a system file.
    Slice(Input),
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// Names, parameters, expected types and dimensions.
    List,
    /// Same as the top-level `build`.
    Build(BuildArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Builder {
    /// Rank parameter.
    #[arg(long)]
    pub n: Option<usize>,

    /// Half-cube parity: `+` (even number of -2 entries) or `-`.
    #[arg(long, allow_hyphen_values = true)]
    pub parity: Option<String>,

    /// Slice level for the slice entries.
    #[arg(long, allow_hyphen_values = true)]
    pub level: Option<i64>,

    /// Use the affine variant of a slice entry.
    #[arg(long)]
    pub affine: bool,
}

impl Builder {
    pub fn is_set(&self) -> bool {
        self.n.is_some() || self.parity.is_some() || self.level.is_some() || self.affine
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct Pipeline {
    /// Keep only these roots (`a,b,…`), or drop them (`no-a,no-b`).
    #[arg(long, value_name = "LABELS")]
    pub restrict: Option<String>,

    /// Normal vector of a slice, comma separated.
    #[arg(long, value_name = "V", allow_hyphen_values = true, requires = "slice_level")]
    pub slice_normal: Option<String>,

    /// Level of the slice.
    #[arg(long, value_name = "L", allow_hyphen_values = true, requires = "slice_normal")]
    pub slice_level: Option<i64>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// System file; `-` or omitted reads standard input.
    #[arg(value_name = "FILE", conflicts_with = "system")]
    pub file: Option<PathBuf>,

    /// Use a catalog entry instead of a file.
    #[arg(long, value_name = "NAME")]
    pub system: Option<String>,

    #[command(flatten)]
    pub builder: Builder,

    #[command(flatten)]
    pub pipeline: Pipeline,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    /// Catalog entry name (see `catalog list`).
    pub name: String,

    #[command(flatten)]
    pub builder: Builder,

    #[command(flatten)]
    pub pipeline: Pipeline,

    /// Write the system file here (same as `--output`).
    #[arg(long, value_name = "PATH")]
    pub emit: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RelationsArgs {
    #[command(flatten)]
    pub input: Input,

    /// Also dump dense E, F, H matrices for this root.
    #[arg(long, value_name = "LABEL")]
    pub matrix: Option<String>,

    /// List every relation instance, not only failures.
    #[arg(long)]
    pub all: bool,
}

#[derive(Args, Debug)]
pub struct PosetArgs {
    #[command(flatten)]
    pub input: Input,

    /// Decide whether the order is a (distributive) lattice; exits 1 if not.
    #[arg(long)]
    pub check_lattice: bool,
}

#[derive(Args, Debug)]
pub struct OrbitsArgs {
    #[command(flatten)]
    pub input: Input,

    /// Orbits on ordered pairs of vertices.
    #[arg(long)]
    pub pairs: bool,

    /// Edge roots: differences of vertex pairs at this squared distance.
    #[arg(long, value_name = "N")]
    pub sqdist: Option<i64>,
}

#[derive(Args, Debug)]
pub struct DelpezzoArgs {
    /// The 27 lines of the cubic surface instead of all 56.
    #[arg(long)]
    pub slice: bool,
}
