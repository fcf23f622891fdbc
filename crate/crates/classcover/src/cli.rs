//! Command-line definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::CommonArgs;

#[derive(Debug, Parser)]
#[command(name = "classcover", version, about = "Conjugacy-class covering, class-size spectra and commutator widths in finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Covering numbers of conjugacy classes.
    Cover(CoverArgs),
    /// Class-size spectrum tables for A_n or SL(n,p).
    Spectrum(SpectrumArgs),
    /// Twisted-commutator widths.
    Width(WidthArgs),
    /// Checks a^G ⊆ [G,f][G,f⁻¹] for every a in [G,f⁻¹].
    LemmaCheck(LemmaArgs),
    /// Eligibility and width for automorphisms of a central product.
    Qsimple(QsimpleArgs),
    /// h-profiles, intersection and covering certificates on a family.
    Filterbase(FilterbaseArgs),
    /// Largest k with A_k a section of the group.
    Alpha(GroupsArgs),
    /// Normal closure and G_* checks.
    Density(DensityArgs),
    /// The residual chain G1 ≥ G2 ≥ G3.
    Residuals(GroupsArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GroupsArgs {
    /// Group spec, e.g. A_5, PSL(2,7), "S_3 x C_2"; repeatable.
    #[arg(long = "group", short = 'g')]
    pub groups: Vec<String>,
    /// JSON or TOML list of group specs.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub groups: GroupsArgs,
    /// Include central classes.
    #[arg(long)]
    pub all_classes: bool,
    /// Write CSV to this file.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Also compute alpha of each member for the per-alpha maxima.
    #[arg(long)]
    pub with_alpha: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumFamily {
    An,
    Sl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Beta,
    Alpha,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub family: SpectrumFamily,
    /// Degrees or dimensions.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u32>,
    /// Primes, for SL.
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<u32>,
    /// β values; 0, 0.1, .., 1 when unset.
    #[arg(long, value_delimiter = ',')]
    pub beta: Vec<f64>,
    /// Which quantity the A_n cycle length follows.
    #[arg(long, value_enum, default_value = "beta")]
    pub rule: RuleArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WidthMode {
    Segal,
    Keyc,
    Inner,
    Qsimple,
}

#[derive(Debug, Args)]
pub struct WidthArgs {
    #[arg(long, short = 'g')]
    pub group: String,
    /// Elements, comma separated: "(12),(1234)" or "[1,1;0,1],[1,0;1,1]".
    #[arg(long, default_value = "")]
    pub gens: String,
    #[arg(long, value_enum)]
    pub mode: WidthMode,
    /// Subgroup H for keyc: G, derived, center, trivial, V4, or generators.
    #[arg(long)]
    pub target: Option<String>,
    /// Factor swaps `i,j` (1-based) added as automorphisms in qsimple mode.
    #[arg(long)]
    pub swap: Vec<String>,
    /// Search ceiling on t.
    #[arg(long)]
    pub ceiling: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[command(flatten)]
    pub groups: GroupsArgs,
    /// Images of the group's generators defining an extra automorphism; repeatable.
    #[arg(long)]
    pub auto: Vec<String>,
    /// Factor swaps `i,j` for central or direct products; repeatable.
    #[arg(long)]
    pub swap: Vec<String>,
}

#[derive(Debug, Args)]
pub struct QsimpleArgs {
    #[arg(long, short = 'g')]
    pub group: String,
    /// Factor swaps `i,j` (1-based); repeatable.
    #[arg(long)]
    pub swap: Vec<String>,
    /// Elements whose inner automorphisms are added.
    #[arg(long, default_value = "")]
    pub inner: String,
    #[arg(long)]
    pub ceiling: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterMode {
    Profile,
    Aset,
    Fip,
    Certificate,
    Dichotomy,
}

#[derive(Debug, Args)]
pub struct FilterbaseArgs {
    /// Family file: {"members": [...]}.
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long, value_enum, default_value = "profile")]
    pub mode: FilterMode,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Tuples file: {"tuples": [...]}.
    #[arg(long)]
    pub tuples: Option<PathBuf>,
    /// Datum used on every coordinate when no tuples file is given.
    #[arg(long, default_value = "beta:0.5")]
    pub datum: String,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    /// Degrees of the alternating factors, e.g. 5,6.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub tau_product: Option<Vec<u32>>,
    #[arg(long, short = 'g')]
    pub group: Option<String>,
    /// Whether the normal closure of tau is everything.
    #[arg(long)]
    pub check_closure: bool,
    /// The same check one factor at a time.
    #[arg(long)]
    pub coordinates: bool,
    /// Decompose G/G_*.
    #[arg(long)]
    pub gstar: bool,
}
