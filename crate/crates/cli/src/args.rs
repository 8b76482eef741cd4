use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "motivic-zeta", version, about = "Zeta functions, point counts and motivic invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input file (JSON, or TOML when the extension is .toml).
    #[arg(long = "in", value_name = "FILE", required = true)]
    pub input: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct Inputs {
    /// Input files, in the order the command expects them.
    #[arg(long = "in", value_name = "FILE", required = true, num_args = 1)]
    pub inputs: Vec<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Counting {
    /// Maximum number of polynomial evaluations (default 10^7 or MOTIVIC_ZETA_BUDGET).
    #[arg(long)]
    pub budget: Option<u128>,
    /// Worker threads for enumeration.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum StrategyArg {
    Auto,
    Exhaustive,
    Fibered,
}

#[derive(ValueEnum, Debug, Clone, Copy, Default)]
pub enum WindowArg {
    #[default]
    Principal,
    LowerClosed,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Zeta functions of graded endomorphisms.
    #[command(subcommand)]
    Motive(MotiveCmd),
    /// Big Witt vector arithmetic.
    #[command(subcommand)]
    Witt(WittCmd),
    /// Rational reconstruction of power series and trace sequences.
    #[command(subcommand)]
    Reconstruct(ReconstructCmd),
    /// Point counts and zeta functions of varieties over finite fields.
    #[command(subcommand)]
    Variety(VarietyCmd),
    /// Artin L-function of a group action: --in variety --in action [--in character].
    Lfun {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[command(flatten)]
        counting: Counting,
    },
    /// Orbifold zeta function by the product and the direct route: --in variety --in action.
    Orbifold {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[command(flatten)]
        counting: Counting,
    },
    /// Periodic point counts of x -> x^m on the multiplicative group over F_p.
    ArtinMazur {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 24)]
        nmax: u32,
        /// Also count fixed points by enumeration up to this n.
        #[arg(long)]
        enumerate: Option<u32>,
    },
    /// Hasse-Weil zeta function of a motive.
    #[command(subcommand)]
    Hw(HwCmd),
    /// Logarithms of the Frobenius blocks.
    Theta {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: f64,
        #[arg(long, value_enum, default_value_t = WindowArg::Principal)]
        window: WindowArg,
    },
    /// Regularized determinants against the Hasse-Weil zeta function at random points.
    RegdetCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = WindowArg::Principal)]
        window: WindowArg,
    },
    /// Numerical Grothendieck groups.
    #[command(subcommand)]
    Numk0(Numk0Cmd),
    /// Motivic measures on cell classes.
    #[command(subcommand)]
    Measure(MeasureCmd),
}

#[derive(Subcommand, Debug)]
pub enum MotiveCmd {
    /// Zeta series and its rational closed form.
    Zeta {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 16)]
        precision: usize,
    },
    /// Functional equation against the dual inverse.
    Feq {
        #[command(flatten)]
        input: Input,
    },
    /// Supertraces of the iterates.
    Traces {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 16)]
        nmax: usize,
    },
    /// Graded determinant.
    Det {
        #[command(flatten)]
        input: Input,
    },
    /// Spectral radius, growth rate and the trace bound.
    Growth {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 40)]
        nmax: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum WittCmd {
    /// Witt sum (series product) of two elements or motive zeta functions.
    Add {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Witt product of two elements or motive zeta functions.
    Mul {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Ghost components.
    Ghost {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        precision: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ReconstructCmd {
    /// Berlekamp-Massey on a coefficient sequence.
    Bm {
        #[command(flatten)]
        input: Input,
    },
    /// Zeta function from a trace sequence.
    Traces {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand, Debug)]
pub enum VarietyCmd {
    /// #X(F_{q^n}) for n = 1..nmax.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        nmax: u32,
        #[command(flatten)]
        counting: Counting,
    },
    /// Zeta function from point counts, with rational reconstruction.
    Zeta {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        #[command(flatten)]
        counting: Counting,
    },
    /// Rationality, functional equation and Riemann hypothesis checks.
    Weil {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        #[command(flatten)]
        counting: Counting,
    },
    /// Closed points of degree d for d = 1..nmax.
    ClosedPoints {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        nmax: u32,
        #[command(flatten)]
        counting: Counting,
    },
}

#[derive(Subcommand, Debug)]
pub enum HwCmd {
    /// zeta(f; s) at s = re + i im.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: f64,
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im: f64,
    },
    /// Poles and zeros with imaginary part in [im-min, im-max].
    Poles {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
        im_min: f64,
        #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
        im_max: f64,
    },
    /// Abscissa of absolute convergence.
    Abscissa {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Numk0Cmd {
    /// Kernels and free quotient of an Euler pairing.
    Compute {
        #[command(flatten)]
        input: Input,
    },
    /// Pairing of the collection O, ..., O(dim) on projective space.
    Beilinson {
        #[arg(long)]
        dim: usize,
    },
    /// Euler form of an acyclic quiver given as {"vertices": n, "arrows": [[i, j], ...]}.
    Quiver {
        #[command(flatten)]
        input: Input,
    },
    /// Compare the right kernels of two pairings: --in chi --in phi.
    Phi {
        #[command(flatten)]
        inputs: Inputs,
    },
}

#[derive(Subcommand, Debug)]
pub enum MeasureCmd {
    /// Counting polynomial and all measures of a class.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: u64,
    },
    /// Classes with equal noncommutative measure and different point counts.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
}
