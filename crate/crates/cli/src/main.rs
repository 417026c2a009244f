use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twistbrack::commands::{self, Options, Report};
use twistbrack::resolutions::ContractionOrder;
use twistbrack::session::{SelfcheckBounds, Session};

/// Gerstenhaber brackets for skew group algebras over F_p.
#[derive(Parser)]
#[command(name = "twistbrack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Human readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Record wall-clock time in the result document.
    #[arg(long, global = true)]
    timing: bool,
    /// Variable order used by the Koszul contraction.
    #[arg(long, global = true, value_enum, default_value_t = Order::Descending)]
    order: Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Ascending,
    Descending,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the coboundary of a cochain and decide whether it is a cocycle.
    Check { session: PathBuf, name: String },
    /// Chain-level bracket of two cochains, optionally compared in cohomology.
    Bracket {
        session: PathBuf,
        left: String,
        right: String,
        #[arg(long)]
        class_compare_with: Option<String>,
    },
    /// Built-in examples.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
    /// Run every invariant suite on a session.
    Selfcheck {
        session: PathBuf,
        #[arg(long)]
        hdeg: Option<usize>,
        #[arg(long)]
        ideg: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// The order-p transvection acting on span(v, w).
    Transvection {
        #[arg(short)]
        p: u64,
    },
}

fn run(cli: &Cli) -> twistbrack::Result<Report> {
    let opts = Options {
        order: match cli.common.order {
            Order::Ascending => ContractionOrder::Ascending,
            Order::Descending => ContractionOrder::Descending,
        },
        timing: cli.common.timing,
    };
    match &cli.command {
        Command::Check { session, name } => commands::check(&Session::load(session)?, name, opts),
        Command::Bracket { session, left, right, class_compare_with } => {
            commands::bracket(&Session::load(session)?, left, right, class_compare_with.as_deref(), opts)
        }
        Command::Demo { which: Demo::Transvection { p } } => commands::demo_transvection(*p, opts),
        Command::Selfcheck { session, hdeg, ideg, trials, seed } => {
            let s = Session::load(session)?;
            let base = s.selfcheck.unwrap_or_default();
            let bounds = SelfcheckBounds {
                hdeg: hdeg.unwrap_or(base.hdeg),
                ideg: ideg.unwrap_or(base.ideg),
                trials: trials.unwrap_or(base.trials),
                seed: seed.unwrap_or(base.seed),
            };
            commands::selfcheck(&s, bounds, opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.common.pretty {
                print!("{}", report.pretty);
            } else {
                println!("{}", report.doc.to_json());
            }
            ExitCode::from(report.doc.verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
