//! Command-line front end for the alpha-index toolkit.
//!
//! Exit status: 0 when every checked claim holds (scan findings included),
//! 1 when a verification found a violation, 2 on usage or solver/IO
//! errors. All primary output is line-oriented: JSON objects for
//! computations, reports, and scan records, graph6 text for enumeration.

mod args;
mod family;
mod output;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use alpha_index::conjecture::{
    scan_adjacent_roots_balance, scan_same_root_balance, search_nonadjacent_reversal, ScanDirection,
    ScanError, ScanRecord,
};
use alpha_index::graph::{
    enumerate_connected, enumerate_trees, graph6_encode, EnumerateOptions, Graph, GraphError,
};
use alpha_index::spectral::{perron, SpectralError};
use alpha_index::verify::{
    balance_suite, flatten_suite, pendent_suite, ratio_suite, rotation_suite, ClassCensus,
    VerificationReport, VerifyError,
};

use args::{
    Cli, Command, EnumerateArgs, GlobalOpts, RhoArgs, ScanCommand, SuiteName, VerifyCommand,
};
use family::FamilyError;
use output::{RhoLine, Sink};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Scan(#[from] ScanError),
    #[error("unknown corpus '{0}'; only 'default' is built in")]
    UnknownCorpus(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(violations_found) => ExitCode::from(u8::from(violations_found)),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command; `Ok(true)` means a proved claim was violated.
fn run(cli: Cli) -> Result<bool, CliError> {
    let mut sink = Sink::new(cli.global.output.as_deref(), cli.global.csv.as_deref())?;
    let failed = match cli.command {
        Command::Rho(rho_args) => run_rho(rho_args, &cli.global, &mut sink)?,
        Command::Verify(command) => run_verify(command, &cli.global, &mut sink)?,
        Command::Scan(command) => run_scan(command, &cli.global, &mut sink)?,
        Command::Enumerate(enum_args) => run_enumerate(enum_args, &mut sink)?,
    };
    sink.finish()?;
    Ok(failed)
}

fn load_rho_input(rho_args: &RhoArgs) -> Result<Graph, CliError> {
    if let Some(spec) = &rho_args.family {
        return Ok(family::parse_family(spec)?);
    }
    if let Some(text) = &rho_args.graph6 {
        return Ok(alpha_index::graph::graph6_decode(text)?);
    }
    let path = rho_args.edgelist.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path)?;
    Ok(alpha_index::graph::edgelist_decode(&text)?)
}

fn run_rho(rho_args: RhoArgs, global: &GlobalOpts, sink: &mut Sink) -> Result<bool, CliError> {
    let graph = load_rho_input(&rho_args)?;
    let graph6 = graph6_encode(&graph);
    for &alpha in rho_args.alpha.values() {
        let solved = perron(&graph, alpha, global.tolerance)?;
        let line = RhoLine {
            graph6: graph6.clone(),
            order: graph.order(),
            alpha,
            rho: solved.rho,
            route: solved.route,
            iterations: solved.iterations,
            residual: solved.residual,
            perron: rho_args.perron.then_some(solved.perron),
        };
        sink.emit_json(&line)?;
        sink.emit_csv(output::RHO_CSV_HEADER, &output::rho_csv_row(&line))?;
    }
    Ok(false)
}

fn run_verify(
    command: VerifyCommand,
    global: &GlobalOpts,
    sink: &mut Sink,
) -> Result<bool, CliError> {
    let epsilon = global.epsilon;
    let reports: Vec<VerificationReport> = match command {
        VerifyCommand::Diameter(cmd) => {
            let mut census = ClassCensus::build(cmd.n, cmd.allow_order_eight, global.workers)?;
            cmd.alpha
                .values()
                .iter()
                .map(|&alpha| census.diameter_theorem(cmd.k, alpha, epsilon))
                .collect::<Result<_, _>>()?
        }
        VerifyCommand::Clique(cmd) => {
            let mut census = ClassCensus::build(cmd.n, cmd.allow_order_eight, global.workers)?;
            cmd.alpha
                .values()
                .iter()
                .map(|&alpha| census.clique_theorem(cmd.omega, alpha, epsilon))
                .collect::<Result<_, _>>()?
        }
        VerifyCommand::PathMinimum(cmd) => {
            let mut census = ClassCensus::build(cmd.n, cmd.allow_order_eight, global.workers)?;
            cmd.alpha
                .values()
                .iter()
                .map(|&alpha| census.path_minimum(alpha, epsilon))
                .collect::<Result<_, _>>()?
        }
        VerifyCommand::Balance(cmd) => {
            vec![balance_suite(cmd.k, cmd.s, cmd.alpha.values(), epsilon)?]
        }
        VerifyCommand::Lemmas(cmd) => {
            if cmd.corpus != "default" {
                return Err(CliError::UnknownCorpus(cmd.corpus));
            }
            let grid = cmd.alpha.values();
            vec![match cmd.suite {
                SuiteName::Pendent => pendent_suite(grid, global.seed, epsilon)?,
                SuiteName::Ratio => ratio_suite(grid, epsilon)?,
                SuiteName::Rotation => rotation_suite(grid, epsilon)?,
                SuiteName::Flatten => flatten_suite(grid, epsilon)?,
            }]
        }
    };
    let mut failed = false;
    for report in &reports {
        sink.emit_json(report)?;
        sink.emit_csv(output::REPORT_CSV_HEADER, &output::report_csv_row(report))?;
        failed |= !report.passed();
    }
    Ok(failed)
}

fn run_scan(command: ScanCommand, global: &GlobalOpts, sink: &mut Sink) -> Result<bool, CliError> {
    let epsilon = global.epsilon;
    let (records, banner_reversals): (Vec<ScanRecord>, bool) = match command {
        ScanCommand::Conjecture1(cmd) => {
            let base = family::parse_graph_input(&cmd.base)?;
            (
                scan_same_root_balance(&base, cmd.root, cmd.budget, cmd.alpha.values(), epsilon)?,
                true,
            )
        }
        ScanCommand::Conjecture2(cmd) => {
            let base = family::parse_graph_input(&cmd.base)?;
            let (u, v) = cmd.roots;
            (
                scan_adjacent_roots_balance(&base, u, v, cmd.budget, cmd.alpha.values(), epsilon)?,
                true,
            )
        }
        ScanCommand::Question1(cmd) => (
            search_nonadjacent_reversal(cmd.max_order, cmd.budget, cmd.alpha.values(), epsilon)?,
            false,
        ),
    };
    for record in &records {
        let line = sink.emit_json(record)?;
        sink.emit_csv(output::SCAN_CSV_HEADER, &output::scan_csv_row(record))?;
        if banner_reversals && record.direction == ScanDirection::Reversed {
            eprintln!("CONJECTURE COUNTEREXAMPLE: {line}");
        }
    }
    Ok(false)
}

fn run_enumerate(enum_args: EnumerateArgs, sink: &mut Sink) -> Result<bool, CliError> {
    let stream: Box<dyn Iterator<Item = Graph>> = if enum_args.trees {
        Box::new(enumerate_trees(enum_args.n, enum_args.dedup)?)
    } else {
        Box::new(enumerate_connected(
            enum_args.n,
            EnumerateOptions {
                deduplicate: enum_args.dedup,
                allow_order_eight: enum_args.allow_order_eight,
            },
        )?)
    };
    for graph in stream {
        let line = graph6_encode(&graph);
        sink.emit_line(&line)?;
        sink.emit_csv("graph6", &line)?;
    }
    Ok(false)
}
