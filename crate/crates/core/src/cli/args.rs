use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "geodetic-forge", version, about = "Subdivided Cayley graphs and their rewriting systems")]
pub struct Cli {
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the Cayley graph has unique shortest paths.
    CheckGeodetic(GroupArgs),
    /// Build the rewriting system of the n-fold subdivision, as JSON.
    Nabla(NablaArgs),
    /// Subdivide the Cayley graph and dump it as JSON.
    Subdivide(SubdivideArgs),
    /// Rewrite a word to normal form.
    Rewrite(RewriteArgs),
    /// Bounded confluence sweep and random strategy comparison.
    Confluence(ConfluenceArgs),
    /// Run a named check.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Graphviz text of the Cayley graph or a subdivision.
    ExportDot(ExportDotArgs),
    /// Irreducible words by length next to sphere sizes.
    Growth(GrowthArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// `cyclic:<m>`, `c<m>`, `klein`, `s3`, or a group JSON file.
    pub group: String,

    /// Comma-separated element indices or names; defaults to the file's
    /// generators, or every non-identity element.
    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct NablaArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    #[arg(short = 'n', default_value_t = 0)]
    pub n: usize,

    /// `canonical`, `reversed`, or letters from least to greatest.
    #[arg(long, default_value = "canonical")]
    pub order: String,

    /// Write the JSON here instead of stdout.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,

    /// Also write Graphviz text of the subdivided graph.
    #[arg(long)]
    pub dot: Option<PathBuf>,

    /// Also write the rules as `LHS -> RHS` lines.
    #[arg(long)]
    pub rules: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SubdivideArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    #[arg(short = 'n', default_value_t = 0)]
    pub n: usize,

    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Leftmost,
    Rightmost,
    Random,
}

#[derive(Debug, Args)]
pub struct RewriteArgs {
    /// System as written by `nabla`, or rules text.
    #[arg(long)]
    pub system: PathBuf,

    #[arg(long, value_enum, default_value = "leftmost")]
    pub strategy: StrategyArg,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Letter tokens such as `a_1_1 b_1_2`; none, or `_`, is the empty word.
    pub word: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SystemSource {
    /// System file; otherwise the system is built from GROUP.
    #[arg(long, conflicts_with = "group")]
    pub system: Option<PathBuf>,

    pub group: Option<String>,

    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<String>>,

    #[arg(short = 'n', default_value_t = 0)]
    pub n: usize,

    #[arg(long, default_value = "canonical")]
    pub order: String,
}

#[derive(Debug, Args)]
pub struct ConfluenceArgs {
    #[command(flatten)]
    pub source: SystemSource,

    #[arg(long, default_value_t = 6)]
    pub max_len: usize,

    /// Random words compared across strategies.
    #[arg(long, default_value_t = 10_000)]
    pub random_words: usize,

    #[arg(long, default_value_t = 20)]
    pub random_len: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Write the JSON report here.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,

    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,

    /// Report a runtime of 0 ms so repeated runs are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Abelianization and homomorphism counts of the presented group.
    TheoremA {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        /// Probe groups, from c<m>, klein, s3.
        #[arg(long, value_delimiter = ',', default_value = "c2,c3,s3")]
        probes: Vec<String>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Geodeticity of the Cayley graph, the subdivision and length reduction agree.
    TheoremB {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Subdividing twice against subdividing once.
    Iterated {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'm', default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// The combined system of a free product.
    Compose {
        #[command(flatten)]
        group: GroupArgs,
        /// Second factor: a group source or `free:<k>`.
        #[arg(long = "with")]
        with: String,
        #[arg(long, value_delimiter = ',')]
        with_gens: Option<Vec<String>>,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Irreducible words against sphere sizes.
    Correspondence {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    /// Subdivide first; without it the Cayley graph itself is drawn.
    #[arg(short = 'n')]
    pub n: Option<usize>,

    /// Draw subdivision vertices as points.
    #[arg(long)]
    pub hide_interior: bool,

    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub source: SystemSource,

    #[arg(long, default_value_t = 6)]
    pub radius: usize,
}
