use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "folinv", version, about = "k-th Milnor and Tjurina numbers of plane curve and foliation germs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// dim O/(⟨polys⟩·m^mk + m^plus_mk).
    ///
    /// Put generators starting with `-` after `--`.
    Vdim {
        #[arg(required = true)]
        polys: Vec<String>,
        /// Multiply the ideal by m^k.
        #[arg(long, default_value_t = 0)]
        mk: u32,
        /// Add m^k to the ideal.
        #[arg(long)]
        plus_mk: Option<u32>,
    },
    /// Intersection number i(f, g).
    Intersect {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// k-th Milnor number of a curve.
    Milnor(CurveK),
    /// k-th Tjurina number of a curve.
    Tjurina(CurveK),
    /// k-th Milnor number of a foliation.
    FolMilnor {
        #[command(flatten)]
        fol: FoliationArgs,
        #[command(flatten)]
        k: KArg,
    },
    /// k-th Tjurina number of a foliation along an invariant curve.
    FolTjurina {
        #[command(flatten)]
        fol: FoliationArgs,
        #[command(flatten)]
        curve: CurveArg,
        #[command(flatten)]
        k: KArg,
    },
    /// GSV index of a foliation along an invariant curve.
    Gsv {
        #[command(flatten)]
        fol: FoliationArgs,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// k-th polar intersection number at sampled generic directions.
    Polar {
        #[command(flatten)]
        fol: FoliationArgs,
        #[command(flatten)]
        curve: CurveArg,
        #[command(flatten)]
        k: KArg,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Whether the curve is invariant by the foliation.
    Invariant {
        #[command(flatten)]
        fol: FoliationArgs,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Whether f lies in ⟨P, Q⟩.
    QhCheck {
        #[command(flatten)]
        fol: FoliationArgs,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Check an identity from the theory by name.
    Check(CheckArgs),
    /// Evaluate a closed-form formula.
    #[command(subcommand)]
    Closed(ClosedCommand),
    /// Weights of a weighted homogeneous polynomial.
    Weights {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Run or list the bundled reproduction scenarios.
    #[command(subcommand)]
    Scenarios(ScenariosCommand),
}

#[derive(Args, Debug)]
pub struct KArg {
    #[arg(long, default_value_t = 0)]
    pub k: u32,
}

#[derive(Args, Debug)]
pub struct CurveK {
    #[arg(allow_hyphen_values = true)]
    pub f: String,
    #[command(flatten)]
    pub k: KArg,
}

#[derive(Args, Debug)]
pub struct FoliationArgs {
    /// Coefficient of dx.
    #[arg(long = "P", allow_hyphen_values = true)]
    pub p: String,
    /// Coefficient of dy.
    #[arg(long = "Q", allow_hyphen_values = true)]
    pub q: String,
}

#[derive(Args, Debug)]
pub struct CurveArg {
    /// Equation of the curve.
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: String,
}

#[derive(Args, Debug)]
pub struct SamplingArgs {
    /// Seed for polar directions; FOLINV_SEED takes precedence.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of sampled polar directions.
    #[arg(long, default_value_t = crate::invariants::PolarSampling::DEFAULT_SAMPLES)]
    pub samples: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CheckName {
    GsvTheorem,
    TeissierK,
    PolarGsv,
    Bound,
    QhIdentity,
    SecondType,
    Conjecture1,
    Ratio,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub name: CheckName,
    #[arg(long = "P", allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long = "Q", allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[arg(long)]
    pub k_max: Option<u32>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    /// Assert that the foliation is non-dicritical of second type.
    #[arg(long)]
    pub assert_second_type: bool,
    /// Assert that the foliation is a non-dicritical generalized curve.
    #[arg(long)]
    pub assert_generalized_curve: bool,
}

#[derive(Subcommand, Debug)]
pub enum ClosedCommand {
    /// μ^k from μ and the multiplicity m.
    MilnorK {
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// dim O/(⟨f⟩ + m^k) for ν(f) = m.
    MkPlusF {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// (μ^k, τ^k) of a reduced singularity; pass --ell for a saddle-node.
    Reduced {
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// ℓ^k(a1, a2).
    Ell {
        #[arg(long)]
        a1: u64,
        #[arg(long)]
        a2: u64,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum ScenariosCommand {
    /// Run registered scenarios.
    Run {
        /// Run every scenario.
        #[arg(long, conflicts_with_all = ["filter", "id"])]
        all: bool,
        /// Run the scenarios carrying this tag.
        #[arg(long)]
        filter: Option<String>,
        /// Run a single scenario.
        #[arg(long)]
        id: Option<String>,
        /// Registry file; defaults to the bundled one.
        #[arg(long)]
        registry: Option<PathBuf>,
        /// Omit timings so the report is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// List registered scenarios.
    List {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
}
