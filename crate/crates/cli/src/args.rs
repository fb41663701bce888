use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Tensor,
    Polynomial,
    Exterior,
}

/// Exact computations with shuffle algebras, bar complexes, free Lie
/// algebras and Bernoulli numbers.
///
/// Words are comma-separated letters (`1,2`), with `()` for the empty
/// word. Linear combinations use `2*(1,1) + (2) - 1/3*(3)`. Ranges are
/// inclusive: `4` or `1..6`.
#[derive(Debug, Parser)]
#[command(name = "koszulk", version, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Weight cap for enumerations and suites.
    #[arg(short = 'w', long = "max-weight", global = true, default_value_t = 8)]
    pub max_weight: u64,

    /// Degree cap; defaults to the weight cap.
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Algebra: preset name, parametric form such as `E(1,3)` or
    /// `Etilde(4k+1,k>=1)`, JSON text, or a path to a JSON file.
    #[arg(long, global = true)]
    pub algebra: Option<String>,

    /// Hopf structure: shuffle, stuffle or concat.
    #[arg(long, global = true)]
    pub product: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shuffle product of two words or sums.
    Shuffle { u: String, v: String },
    /// Quasi-shuffle (stuffle) product of two words or sums.
    Stuffle { u: String, v: String },
    /// Coproduct: deconcatenation for shuffle/stuffle, `ΔZ_n = Σ Z_i⊗Z_j` for concat.
    Coproduct { word: String },
    /// Antipode in the chosen Hopf structure (default shuffle).
    Antipode { word: String },
    /// Pairing of a Z-basis sum with an M-basis sum.
    Pair { z: String, m: String },
    /// Hoffman's exponential.
    Exp { word: String },
    /// Inverse of Hoffman's exponential.
    Log { word: String },
    /// Image of a monomial symmetric function in QSymm.
    SymmEmbed { partition: String },
    /// Rational homology of the reduced bar complex of `--algebra`.
    BarHomology {
        /// Product of two bar cycles (square-zero algebras only).
        #[arg(long = "induced-product", num_args = 2, value_names = ["U", "V"])]
        induced_product: Option<Vec<String>>,
        /// Run a Künneth comparison for SU/SO or CP-loop instead.
        #[arg(long)]
        kuenneth: Option<String>,
        /// Report dimensions by (bar-length, internal degree).
        #[arg(long)]
        bigraded: bool,
    },
    /// Free Lie algebra dimensions on a generator rule.
    LieDims {
        #[arg(long, default_value = "odd>=3")]
        gens: String,
    },
    /// Poincaré–Birkhoff–Witt check for a generator rule.
    Pbw {
        #[arg(long, default_value = "odd>=3")]
        gens: String,
        /// Self-test: add one to the Lie dimension in this weight.
        #[arg(long)]
        perturb: Option<u32>,
    },
    /// Lyndon words over an alphabet, weight at most `-w`.
    Lyndon {
        #[arg(long, default_value = "2,3")]
        alphabet: String,
    },
    /// Ext¹ dimension in weight `n` for a generator rule.
    Ext1 {
        n: u32,
        #[arg(long, default_value = "odd>=3")]
        gens: String,
    },
    /// Bernoulli numbers and ζ(1-2k) over a range of k.
    Zeta {
        range: String,
        /// Tabulate B_n for n in the range instead.
        #[arg(long)]
        bernoulli: bool,
    },
    /// von Staudt–Clausen denominators for even indices 2k in the range.
    Vsc { range: String },
    /// Orders of the image of J in stems 4k-1.
    Imj { range: String },
    /// Order of H¹_c at an odd prime p, for k in the range.
    H1c { p: u64, range: String },
    /// Dimension series of a K-theory or motivic preset.
    Preset { name: String },
    /// Dimensions d_n of motivic multiple zeta values.
    MzvDims { range: Option<String> },
    /// Three-way check of the d_n generating function.
    MotivicCheck {
        /// Self-test: add a generator in this weight.
        #[arg(long)]
        perturb: Option<u32>,
    },
    /// Run a named verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Poincaré series of a free algebra on listed degrees.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        degrees: String,
        /// Multiply by another series, given as `KIND:DEGREES`.
        #[arg(long)]
        times: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Shuffle { .. } => "shuffle",
            Command::Stuffle { .. } => "stuffle",
            Command::Coproduct { .. } => "coproduct",
            Command::Antipode { .. } => "antipode",
            Command::Pair { .. } => "pair",
            Command::Exp { .. } => "exp",
            Command::Log { .. } => "log",
            Command::SymmEmbed { .. } => "symm-embed",
            Command::BarHomology { .. } => "bar-homology",
            Command::LieDims { .. } => "lie-dims",
            Command::Pbw { .. } => "pbw",
            Command::Lyndon { .. } => "lyndon",
            Command::Ext1 { .. } => "ext1",
            Command::Zeta { .. } => "zeta",
            Command::Vsc { .. } => "vsc",
            Command::Imj { .. } => "imj",
            Command::H1c { .. } => "h1c",
            Command::Preset { .. } => "preset",
            Command::MzvDims { .. } => "mzv-dims",
            Command::MotivicCheck { .. } => "motivic-check",
            Command::Verify { .. } => "verify",
            Command::Series { .. } => "series",
        }
    }
}
