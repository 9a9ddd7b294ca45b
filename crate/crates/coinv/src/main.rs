use clap::{Parser, Subcommand};
use coinv::experiment::{
    cmd_bound_check, cmd_gb, cmd_gb_polarize_test, cmd_lemma_sweep, cmd_polarize, cmd_snlead,
    ExperimentReport, RunCaps,
};
use coinv::invariant::GeneratorStrategy;
use coinv::polarize::MultiIndex;
use coinv::{FieldSpec, MonomialOrder};
use std::process::ExitCode;
use std::time::Instant;

/// Invariant theory workbench for permutation groups: Hilbert ideals,
/// polarization, staircases, and generating-degree bounds, all in exact
/// arithmetic.
#[derive(Parser)]
#[command(name = "coinv", version, about)]
struct Cli {
    /// Emit the report as deterministic JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on enumerated group size.
    #[arg(long, global = true, default_value_t = 5_040)]
    group_cap: usize,

    /// Cap on Buchberger S-pairs.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pair_cap: usize,

    /// Cap on enumerated monomials for generator construction.
    #[arg(long, global = true, default_value_t = 64 * 1024 * 1024)]
    term_cap: usize,

    /// Cap on n for `snlead`.
    #[arg(long, global = true, default_value_t = 5)]
    n_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the lead ideal and staircase of I(S_n, V).
    Snlead {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive fast-lead oracle and monotonicity sweep.
    LemmaSweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_deg: u32,
        /// Coefficient field: `q` or `f<p>`.
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Restrict to one order (`a` or `b`); default runs both.
        #[arg(long)]
        order: Option<MonomialOrder>,
    },
    /// Verify the degree bounds for I(G, V^m).
    BoundCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "goebel")]
        strategy: GeneratorStrategy,
        /// Also check that both generator strategies give the same ideal.
        #[arg(long)]
        cross_check: bool,
    },
    /// Polarize a polynomial, fully or at one multi-index.
    Polarize {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        m: usize,
        /// Component to extract, e.g. `2,1`.
        #[arg(long)]
        k: Option<MultiIndex>,
    },
    /// Reduced Gröbner basis of the polynomials in a file (one per line).
    Gb {
        #[arg(long)]
        gens: std::path::PathBuf,
        #[arg(long, default_value = "a")]
        order: MonomialOrder,
    },
    /// Test whether polarizing a reduced basis of I(G, V) stays a basis.
    GbPolarizeTest {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: usize,
    },
}

impl Cli {
    fn caps(&self) -> RunCaps {
        RunCaps {
            group_cap: self.group_cap,
            pair_cap: self.pair_cap,
            term_cap: self.term_cap,
            snlead_n_cap: self.n_cap,
        }
    }
}

fn run(cli: &Cli) -> Result<ExperimentReport, coinv::HarnessError> {
    let caps = cli.caps();
    match &cli.command {
        Command::Snlead { n } => cmd_snlead(*n, &caps),
        Command::LemmaSweep {
            n,
            m,
            max_deg,
            field,
            order,
        } => cmd_lemma_sweep(*n, *m, *max_deg, *field, *order),
        Command::BoundCheck {
            group,
            m,
            strategy,
            cross_check,
        } => cmd_bound_check(group, *m, *strategy, *cross_check, &caps),
        Command::Polarize { poly, m, k } => cmd_polarize(poly, *m, k.clone()),
        Command::Gb { gens, order } => {
            let raw = std::fs::read_to_string(gens).map_err(|e| {
                coinv::HarnessError::Unsupported(format!("cannot read {}: {e}", gens.display()))
            })?;
            let lines: Vec<String> = raw.lines().map(str::to_string).collect();
            cmd_gb(&lines, *order, &caps)
        }
        Command::GbPolarizeTest { group, m } => cmd_gb_polarize_test(group, *m, &caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.elapsed_ms = Some(started.elapsed().as_millis());
            // Timing stays on stderr so stdout is byte-reproducible.
            eprintln!("elapsed: {} ms", report.elapsed_ms.unwrap_or(0));
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
