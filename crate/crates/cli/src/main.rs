mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cache::GraphCache;

pub const EXIT_OTHER: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_IDENTITY: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "alcove", version, about = "Quantum alcove paths, characters and Macdonald specializations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Spec {
    Zero,
    Inf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Shift,
    Recursion,
    W0Inversion,
    Lenart,
    Beta,
    DualRoute,
    Cominuscule,
    Nonnegativity,
    PiInvariance,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Cartan type, e.g. A2, C3, G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for path enumeration and verification.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Directory for cached graphs.
    #[arg(long, env = "ALCOVE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long)]
    pub no_cache: bool,
    /// Largest Weyl group order to materialize.
    #[arg(long, default_value_t = alcove::weyl::DEFAULT_GROUP_CAP)]
    pub cap: u128,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The quantum Bruhat graph.
    Qbg {
        #[command(flatten)]
        common: Common,
    },
    /// Reduced word and β-sequence of a translation.
    Beta {
        #[command(flatten)]
        common: Common,
        /// Fundamental-basis coordinates, e.g. -1,0.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Reduced word of t_λ to use instead of the canonical one.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Quantum alcove paths from σ·t_λ.
    Paths {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Finite Weyl group element as a 1-based word.
        #[arg(long, default_value = "")]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Walk the graph with arrows reversed.
        #[arg(long)]
        reversed: bool,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
    },
    /// E_λ(x;q,0) or E_λ(x;q^{-1},∞).
    Emac {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = Spec::Zero)]
        spec: Spec,
        /// Evaluate at x_i = x for all i, and q.
        #[arg(long, value_name = "X,Q", allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Graded character C_σ^{t_λ}.
    Char {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = "")]
        sigma: String,
        #[arg(long, value_name = "X,Q", allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Dimension of the generalized Weyl module.
    Dims {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = "")]
        sigma: String,
    },
    /// Run the identity suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suites to run; all but pi-invariance by default.
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
        /// Smallest weight coordinate in the tested box.
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        min: i64,
        /// Largest multiple for the cominuscule twist.
        #[arg(long, default_value_t = 2)]
        max_m: i64,
    },
}

/// One or more identities did not hold.
#[derive(Debug)]
pub struct IdentityFailure(pub Vec<String>);

impl std::fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "identity failures in: {}", self.0.join(", "))
    }
}

impl std::error::Error for IdentityFailure {}

fn classify(err: &anyhow::Error) -> (u8, &'static str) {
    use alcove::Error as E;
    if err.downcast_ref::<IdentityFailure>().is_some() {
        return (EXIT_IDENTITY, "identity");
    }
    match err.downcast_ref::<E>() {
        Some(E::CapExceeded { .. }) => (EXIT_CAP, "cap"),
        Some(E::RouteMismatch { .. }) => (EXIT_IDENTITY, "identity"),
        Some(
            E::Parse(_)
            | E::InvalidType { .. }
            | E::RankMismatch { .. }
            | E::IndexOutOfRange { .. }
            | E::NotACoroot(_)
            | E::NotAntiDominant(_)
            | E::NotCominuscule(_)
            | E::NotABetaSequence(_),
        ) => (EXIT_USAGE, "usage"),
        _ => (EXIT_OTHER, "other"),
    }
}

fn run(cli: Cli) -> anyhow::Result<commands::Output> {
    let common = match &cli.command {
        Command::Qbg { common }
        | Command::Beta { common, .. }
        | Command::Paths { common, .. }
        | Command::Emac { common, .. }
        | Command::Char { common, .. }
        | Command::Dims { common, .. }
        | Command::Verify { common, .. } => common.clone(),
    };
    if common.workers == 0 {
        return Err(alcove::Error::Parse("--workers must be at least 1".into()).into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(common.workers)
        .build_global()?;
    let cache = if common.no_cache {
        GraphCache::disabled()
    } else {
        GraphCache::new(Some(
            common
                .cache_dir
                .clone()
                .unwrap_or_else(|| std::env::temp_dir().join("alcove-cache")),
        ))
    };
    let ctx = commands::Context::new(&common, &cache)?;
    match cli.command {
        Command::Qbg { .. } => commands::qbg(&ctx),
        Command::Beta { weight, word, .. } => commands::beta(&ctx, &weight, word.as_deref()),
        Command::Paths {
            weight,
            sigma,
            word,
            reversed,
            count,
            ..
        } => commands::paths(&ctx, &weight, &sigma, word.as_deref(), reversed, count),
        Command::Emac { weight, spec, eval, .. } => commands::emac(&ctx, &weight, spec, eval.as_deref()),
        Command::Char { weight, sigma, eval, .. } => commands::character(&ctx, &weight, &sigma, eval.as_deref()),
        Command::Dims { weight, sigma, .. } => commands::dims(&ctx, &weight, &sigma),
        Command::Verify {
            suites, min, max_m, ..
        } => commands::verify(&ctx, &suites, min, max_m),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let err = match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            match out.failure {
                None => return ExitCode::SUCCESS,
                Some(f) => anyhow::Error::new(f),
            }
        }
        Err(err) => err,
    };
    let (code, class) = classify(&err);
    let report = serde_json::json!({ "error": class, "message": format!("{err:#}") });
    eprintln!("{report}");
    ExitCode::from(code)
}
