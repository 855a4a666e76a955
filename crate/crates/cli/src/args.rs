use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "quasimap", version, about = "Exact quasimap I-functions of GIT quotients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and check a presentation.
    Validate(Input),
    /// Minimal torus and G-effective anticones.
    Anticones(Input),
    /// Enumerate I-effective (or CI-effective) classes.
    Effective(Truncated),
    /// Expand the I-function.
    Ifunction(Expand),
    /// Coefficients of z^0 in I - 1.
    MirrorMap(Truncated),
    /// Extend a presentation along a Weyl-invariant class.
    Extend(ExtendArgs),
    /// Quantum period of the del Pezzo example.
    Period(PeriodArgs),
}

#[derive(Args, Debug)]
pub struct Input {
    /// Fixture name or path to a presentation file.
    pub presentation: String,
}

#[derive(Args, Debug)]
pub struct Truncated {
    #[command(flatten)]
    pub input: Input,

    /// Upper bound on deg(q^β).
    #[arg(long, allow_hyphen_values = true)]
    pub degree_max: String,

    /// Coordinate box: `W` for [-W, W], `LO:HI` for every coordinate, or
    /// one `LO:HI` per coordinate separated by commas.
    #[arg(long = "box", default_value = "4", allow_hyphen_values = true)]
    pub bounds: String,

    /// Lowest power of z kept.
    #[arg(long, visible_alias = "zmin", allow_hyphen_values = true)]
    pub z_min: Option<i64>,

    /// Highest total degree in H kept.
    #[arg(long)]
    pub h_degree_max: Option<u32>,

    /// Named default for z-min and h-degree-max: quick, default or deep.
    #[arg(long, env = "QUASIMAP_PROFILE", default_value = "default")]
    pub profile: String,
}

#[derive(Args, Debug)]
pub struct Expand {
    #[command(flatten)]
    pub trunc: Truncated,

    /// Report coefficients at H = 0 (the default).
    #[arg(long, conflicts_with = "symbolic")]
    pub h_zero: bool,

    /// Report full polynomials in H.
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Args, Debug)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub input: Input,

    /// Weyl-invariant class, comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub class: String,

    /// Stability parameter N; defaults to the least admissible value.
    #[arg(long, short = 'n')]
    pub n: Option<i64>,

    /// Last coordinates for the E-weights, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Closed hypergeometric formula.
    Closed,
    /// General I-series pipeline on the del Pezzo fixture.
    Series,
}

#[derive(Args, Debug)]
pub struct PeriodArgs {
    /// Highest power of t.
    #[arg(long, default_value_t = 4)]
    pub order: u64,

    /// Specialize the parameter x to a rational.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,

    /// Multiply the t^n coefficient by n!.
    #[arg(long)]
    pub regularize: bool,

    /// Compare against the classical period of the Laurent mirror.
    #[arg(long)]
    pub compare: bool,

    #[arg(long, value_enum, default_value_t = Source::Closed)]
    pub source: Source,
}
