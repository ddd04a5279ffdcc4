use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Distance spectra, subdivision joins and bound verification for small graphs.
///
/// Graph operands are `gen:<kind>:<params>` (kinds: complete, complete_bipartite,
/// cycle, path, star, cycles), `g6:<graph6>`, or a bare graph6 string.
#[derive(Debug, Parser)]
#[command(name = "dspectra", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Omit the timings block so output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_timings: bool,

    /// Write the constructed graph as DOT to FILE.
    #[arg(long, value_name = "FILE", global = true)]
    pub dot: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance spectrum, energy, gap and related invariants.
    Spectrum(InputArgs),
    /// Every eigenvalue/gap/energy inequality on one graph.
    Bounds(InputArgs),
    /// Build a graph from operands.
    Construct(ConstructArgs),
    /// Closed-form spectrum of a subdivision join against brute force.
    Theorem(TheoremArgs),
    /// Joins of two adjacency-cospectral regular graphs with a third.
    Cospectral(CospectralArgs),
    /// Equienergetic families.
    Family(FamilyArgs),
    /// Sweep the labelled connected corpus and check every bound.
    Verify(VerifyArgs),
}

/// With neither flag set, newline-separated graph6 is read from stdin.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Generator, e.g. `complete:4` or `cycles:3,3`.
    #[arg(long, conflicts_with = "graph6")]
    pub gen: Option<String>,
    #[arg(long)]
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructOp {
    Subdivision,
    Central,
    Svv,
    See,
    Cvj,
    Cej,
    Cycles,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub op: ConstructOp,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
    /// Cycle lengths, e.g. `3,3`.
    #[arg(long)]
    pub partition: Option<String>,
    /// Also report the distance spectrum of the result.
    #[arg(long)]
    pub spectrum: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JoinOp {
    Svv,
    See,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[arg(value_enum)]
    pub which: JoinOp,
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
}

#[derive(Debug, Args)]
pub struct CospectralArgs {
    #[arg(value_enum)]
    pub which: JoinOp,
    #[arg(long)]
    pub g1: String,
    #[arg(long)]
    pub g2: String,
    #[arg(long)]
    pub h: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    SvvPartition,
    CentralVertex,
    CentralEdge,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub kind: FamilyKind,
    #[arg(long)]
    pub g: String,
    /// Total cycle length for `svv-partition`.
    #[arg(long)]
    pub l: Option<usize>,
    /// Comma-separated operands for the central families.
    #[arg(long)]
    pub hs: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep a single order.
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// Sweep every order from 1 to N.
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
}
