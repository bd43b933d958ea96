mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Outcome};

/// Exact computations in the half quantum group U>=0.
#[derive(Parser, Debug)]
#[command(name = "borelq", version, about)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory for the graded-basis cache (overrides BORELQ_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Cartan type, e.g. A2 or G2.
    #[arg(long = "type", short = 't', value_name = "TYPE")]
    pub type_name: String,

    /// Reduced word for w0 as 1-based comma-separated indices.
    #[arg(long, value_name = "I,J,...")]
    pub word: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct ExprArgs {
    /// Expression, e.g. "E1*E2 - q*E2*E1".
    pub expr: String,

    /// Cartan type.
    #[arg(long = "type", short = 't', value_name = "TYPE", default_value = "A1")]
    pub type_name: String,

    #[arg(long, value_name = "I,J,...")]
    pub word: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan data, Weyl group order, w0 word and positive roots.
    Cartan(TypeArgs),
    /// Root vectors along the w0 word.
    Roots(TypeArgs),
    /// Dimension of the degree-eta component of U+.
    Dim {
        #[command(flatten)]
        ty: TypeArgs,
        /// Degree as comma-separated coefficients of the simple roots.
        #[arg(long, value_name = "L1,L2,...")]
        eta: String,
    },
    /// PBW monomials and their independence, degree by degree.
    Pbw {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        ex: ExprArgs,
        /// Evaluate coefficients at a primitive r-th root of unity.
        #[arg(long)]
        r: Option<u32>,
    },
    /// Coproduct of an expression.
    Delta(ExprArgs),
    /// Antipode of an expression.
    Antipode {
        #[command(flatten)]
        ex: ExprArgs,
        /// Apply the inverse antipode instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Checks that every q-Serre element reduces to zero.
    SerreCheck(TypeArgs),
    /// Coassociativity, counit and antipode laws on a basis slice.
    HopfCheck {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 3)]
        height: i64,
        /// K-exponents range over [-radius, radius].
        #[arg(long, default_value_t = 1)]
        radius: i64,
    },
    /// Multiplicativity of the smash-product comparison map.
    SmashCheck {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
    /// R-matrix constraint solving.
    Rmatrix {
        #[command(subcommand)]
        cmd: RmatrixCmd,
    },
    /// Verma modules and their tensor products.
    Verma {
        #[command(subcommand)]
        cmd: VermaCmd,
    },
    /// Yetter-Drinfel'd modules over the finite quotient.
    Yd {
        #[command(subcommand)]
        cmd: YdCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum RmatrixCmd {
    /// Solve the constraint system over the quotient at a root of unity.
    Solve {
        #[arg(long = "type", short = 't', value_name = "TYPE")]
        type_name: String,
        #[arg(long)]
        r: u32,
    },
    /// Solve over a grid of cases ("default" or a JSON file of {type, rank, r}).
    Classify {
        #[arg(long, default_value = "default")]
        grid: String,
    },
    /// Generic-q constraint system on a box of exponents.
    Generic {
        #[arg(long = "type", short = 't', value_name = "TYPE")]
        type_name: String,
        #[arg(long = "box", default_value_t = 2)]
        radius: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum VermaCmd {
    /// Weights of a truncated Verma module.
    Weights {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 4)]
        height: i64,
    },
    /// Decomposition of M(sigma) (x) M(sigma') into Verma modules.
    TensorDecompose {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct YdArgs {
    #[arg(long = "type", short = 't', value_name = "TYPE")]
    pub type_name: String,
    #[arg(long)]
    pub r: u32,
    /// beta(K_i) = zeta_d^{k_i}; comma-separated k_i.
    #[arg(long, value_name = "K1,...")]
    pub beta: String,
    /// g = K^m; comma-separated m_i.
    #[arg(long, value_name = "M1,...")]
    pub g: String,
}

#[derive(Subcommand, Debug)]
pub enum YdCmd {
    /// Build H_{beta,g} and report its carrier.
    Build(YdArgs),
    /// Build H_{beta,g} and run the compatibility checks.
    Check {
        #[command(flatten)]
        yd: YdArgs,
        #[arg(long, default_value_t = 3)]
        height: i64,
        /// Use S in place of S^{-1} in the action (fault fixture).
        #[arg(long, hide = true)]
        fault_antipode: bool,
    },
    /// All pairs (beta, g) with the invariant table.
    Scan {
        #[arg(long = "type", short = 't', value_name = "TYPE")]
        type_name: String,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let cache = cli.cache_dir.clone();
    match &cli.command {
        Command::Cartan(t) => commands::cartan(t),
        Command::Roots(t) => commands::roots(t, cache),
        Command::Dim { ty, eta } => commands::dim(ty, eta, cache),
        Command::Pbw { ty, height } => commands::pbw(ty, *height, cache),
        Command::Nf { ex, r } => commands::nf(ex, *r, cache),
        Command::Delta(ex) => commands::delta(ex, cache),
        Command::Antipode { ex, inverse } => commands::antipode(ex, *inverse, cache),
        Command::SerreCheck(t) => commands::serre_check(t, cache),
        Command::HopfCheck { ty, height, radius } => {
            commands::hopf_check(ty, *height, *radius, cache)
        }
        Command::SmashCheck { ty, height } => commands::smash_check(ty, *height, cache),
        Command::Rmatrix { cmd } => commands::rmatrix(cmd),
        Command::Verma { cmd } => commands::verma(cmd, cache),
        Command::Yd { cmd } => commands::yd(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
                );
            } else {
                print!("{}", out.text);
                if !out.text.ends_with('\n') {
                    println!();
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
