use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use domlex::graph::{DEFAULT_ISO_LIMIT, MAX_ORDER};
use domlex::oracle::{OracleConfig, DEFAULT_MAX_ORDER, DEFAULT_SCAN_ORDER};
use domlex::FormulaId;
use domlex_cli::commands::{self, Input, Output};
use domlex_cli::error::exit;
use domlex_cli::hunt::{DEFAULT_MAX_G, DEFAULT_MAX_H};
use domlex_cli::verify::{Law, ParamRange, VerifyOptions};
use domlex_cli::CliError;

/// Domination polynomials of composed graphs.
#[derive(Parser)]
#[command(name = "domlex", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest order for full dominating-set enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER, value_parser = order_cap)]
    max_order: usize,

    /// Largest order for domination-number and monitor-number scans.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_ORDER, value_parser = order_cap)]
    scan_order: usize,

    /// Worker threads for enumeration; output is identical for any value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph expression, e.g. "lex(P6,P4)".
    #[arg(required_unless_present = "edge_list", conflicts_with = "edge_list")]
    expr: Option<String>,

    /// Read the graph from an edge-list file instead.
    #[arg(long)]
    edge_list: Option<PathBuf>,
}

impl GraphInput {
    fn input(&self) -> Input {
        match (&self.expr, &self.edge_list) {
            (Some(e), _) => Input::Expr(e.clone()),
            (None, Some(p)) => Input::EdgeList(p.clone()),
            (None, None) => unreachable!("clap requires one of them"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the domination polynomial.
    Poly {
        #[command(flatten)]
        graph: GraphInput,
        /// Use a closed form instead of enumeration.
        #[arg(long)]
        formula: Option<FormulaId>,
    },
    /// Print the domination number and a minimum dominating set.
    Gamma {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Print the monitor number with a gamma-set and its monitor set.
    Iota {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Check a law over parameter ranges and graph catalogs.
    Verify {
        law: Law,
        /// Range for the left factor parameter, e.g. 1..3 (inclusive).
        #[arg(long)]
        m: Option<ParamRange>,
        /// Range for the family parameter, e.g. 1..3 (inclusive).
        #[arg(long)]
        n: Option<ParamRange>,
        /// Largest order in the catalog of G operands.
        #[arg(long)]
        g_catalog: Option<usize>,
        /// Largest order in the catalog of H operands.
        #[arg(long)]
        h_catalog: Option<usize>,
        /// Order limit for isomorphism tests.
        #[arg(long, default_value_t = 12)]
        iso_limit: usize,
    },
    /// Search for counterexamples to D(G[H],x) = D(G,D(H,x)-1).
    Hunt {
        #[arg(long, default_value_t = DEFAULT_MAX_G)]
        max_g: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_H)]
        max_h: usize,
    },
    /// Test two graphs for isomorphism.
    Iso {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_ISO_LIMIT)]
        iso_limit: usize,
    },
}

fn order_cap(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if v > MAX_ORDER {
        return Err(format!("cap {v} exceeds the hard limit {MAX_ORDER}"));
    }
    Ok(v)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let config = OracleConfig {
        max_order: cli.max_order,
        scan_order: cli.scan_order,
        threads: cli.threads.max(1),
    };
    match cli.command {
        Command::Poly { graph, formula } => {
            commands::poly(&graph.input(), formula, &config, cli.json)
        }
        Command::Gamma { graph } => commands::gamma(&graph.input(), &config, cli.json),
        Command::Iota { graph } => commands::iota(&graph.input(), &config, cli.json),
        Command::Verify {
            law,
            m,
            n,
            g_catalog,
            h_catalog,
            iso_limit,
        } => {
            let opts = VerifyOptions {
                m,
                n,
                g_catalog,
                h_catalog,
                oracle: config,
                iso_limit,
            };
            commands::verify_law(law, &opts, cli.json)
        }
        Command::Hunt { max_g, max_h } => commands::hunt_pairs(max_g, max_h, &config, cli.json),
        Command::Iso {
            left,
            right,
            iso_limit,
        } => commands::iso(&Input::Expr(left), &Input::Expr(right), iso_limit, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            debug_assert!(code == exit::USAGE || code == exit::CAP_EXCEEDED);
            ExitCode::from(code as u8)
        }
    }
}
