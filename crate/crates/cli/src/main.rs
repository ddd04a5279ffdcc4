mod args;
mod operand;
mod report;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use dspectra::bounds::full_report;
use dspectra::closed_forms::{
    central_join_family, cospectral_join_pair, equienergetic_family, verify_closed_form,
};
use dspectra::corpus::verify_corpus;
use dspectra::graph::{bfs_distances, to_graph6};
use dspectra::linalg::char_poly_exact;
use dspectra::ops::{
    central_graph, central_join, cycle_union, subdivision, subdivision_join, to_dot,
    CentralJoinKind, JoinKind, JoinLayout,
};
use dspectra::serde_util;
use dspectra::spectra::{d_spectrum, distance_laplacian_spectrum};
use dspectra::{CharPolyExact, Graph};

use args::{Cli, Command, ConstructOp, FamilyKind, InputArgs, JoinOp};
use operand::{parse_generator, parse_operand, parse_partition, split_operands};
use report::{render_error, CliError, ReportDocument, Timings};

const THREADS_VAR: &str = "DSPECTRA_THREADS";

/// A finished command: its document and whether its verdict held.
struct Outcome {
    doc: ReportDocument,
    verified: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let result = threads().and_then(|t| {
        if let Some(t) = t {
            // only fails if a pool already exists, which cannot happen here
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
        run(&cli, t)
    });
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.doc.render(cli.format, cli.no_timings).as_bytes());
            if outcome.verified {
                0
            } else {
                4
            }
        }
        Err(err) => {
            let _ = out.write_all(render_error(name, &err, cli.format).as_bytes());
            err.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn threads() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| {
                CliError::Parse(format!(
                    "{THREADS_VAR} must be a positive integer, got {v:?}"
                ))
            }),
        Err(_) => Ok(None),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Spectrum(_) => "spectrum",
        Command::Bounds(_) => "bounds",
        Command::Construct(_) => "construct",
        Command::Theorem(_) => "theorem",
        Command::Cospectral(_) => "cospectral",
        Command::Family(_) => "family",
        Command::Verify(_) => "verify",
    }
}

fn run(cli: &Cli, threads: Option<usize>) -> Result<Outcome, CliError> {
    let name = command_name(&cli.command);
    let mut timings = Timings::default();
    match &cli.command {
        Command::Spectrum(input) => {
            let graphs = timings.time("parse", || read_inputs(input))?;
            let results = timings.time("spectrum", || {
                graphs
                    .iter()
                    .map(spectrum_result)
                    .collect::<Result<Vec<_>, _>>()
            })?;
            finish(name, &graphs, results, timings, true)
        }
        Command::Bounds(input) => {
            let graphs = timings.time("parse", || read_inputs(input))?;
            let reports = timings.time("bounds", || {
                graphs
                    .iter()
                    .map(full_report)
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let ok = reports.iter().all(|r| r.violations().next().is_none());
            finish(name, &graphs, reports, timings, ok)
        }
        Command::Construct(a) => {
            let operand = |s: &Option<String>, flag: &str| {
                s.as_deref()
                    .ok_or_else(|| CliError::Parse(format!("--{flag} is required")))
                    .and_then(parse_operand)
            };
            let (inputs, graph, layout) =
                timings.time("construct", || -> Result<_, CliError> {
                    Ok(match a.op {
                        ConstructOp::Subdivision | ConstructOp::Central => {
                            let g = operand(&a.a, "a")?;
                            let built = if a.op == ConstructOp::Subdivision {
                                subdivision(&g)
                            } else {
                                central_graph(&g)
                            };
                            (vec![g], built?, None)
                        }
                        ConstructOp::Svv | ConstructOp::See => {
                            let (g1, g2) = (operand(&a.a, "a")?, operand(&a.b, "b")?);
                            let kind = join_kind(if a.op == ConstructOp::Svv {
                                JoinOp::Svv
                            } else {
                                JoinOp::See
                            });
                            let (j, layout) = subdivision_join(&g1, &g2, kind)?;
                            (vec![g1, g2], j, Some(layout))
                        }
                        ConstructOp::Cvj | ConstructOp::Cej => {
                            let (g1, g2) = (operand(&a.a, "a")?, operand(&a.b, "b")?);
                            let kind = if a.op == ConstructOp::Cvj {
                                CentralJoinKind::Vertex
                            } else {
                                CentralJoinKind::Edge
                            };
                            let j = central_join(&g1, &g2, kind)?;
                            (vec![g1, g2], j, None)
                        }
                        ConstructOp::Cycles => {
                            let p = a
                                .partition
                                .as_deref()
                                .ok_or_else(|| CliError::Parse("--partition is required".into()))?;
                            (vec![], cycle_union(&parse_partition(p)?)?, None)
                        }
                    })
                })?;
            write_dot(cli, &graph, layout.as_ref())?;
            let spectrum = if a.spectrum {
                Some(timings.time("spectrum", || spectrum_result(&graph))?)
            } else {
                None
            };
            let diameter = graph
                .is_connected()
                .then(|| bfs_distances(&graph).map(|d| d.diameter()));
            let result = ConstructResult {
                graph6: to_graph6(&graph),
                order: graph.order(),
                size: graph.size(),
                connected: graph.is_connected(),
                diameter: diameter.transpose()?,
                layout,
                spectrum,
            };
            finish(name, &inputs, result, timings, true)
        }
        Command::Theorem(a) => {
            let (g1, g2) = (parse_operand(&a.a)?, parse_operand(&a.b)?);
            let check = timings.time("theorem", || {
                verify_closed_form(&g1, &g2, join_kind(a.which))
            })?;
            let ok = check.matches;
            finish(name, &[g1, g2], check, timings, ok)
        }
        Command::Cospectral(a) => {
            let (g1, g2, h) = (
                parse_operand(&a.g1)?,
                parse_operand(&a.g2)?,
                parse_operand(&a.h)?,
            );
            let cert = timings.time("cospectral", || {
                cospectral_join_pair(&g1, &g2, &h, join_kind(a.which))
            })?;
            let ok = cert.d_cospectral;
            finish(name, &[g1, g2, h], cert, timings, ok)
        }
        Command::Family(a) => {
            let g = parse_operand(&a.g)?;
            let (inputs, report) = match a.kind {
                FamilyKind::SvvPartition => {
                    let l =
                        a.l.ok_or_else(|| CliError::Parse("--l is required".into()))?;
                    let rep = timings.time("family", || equienergetic_family(&g, l))?;
                    (vec![g], rep)
                }
                FamilyKind::CentralVertex | FamilyKind::CentralEdge => {
                    let hs =
                        a.hs.as_deref()
                            .ok_or_else(|| CliError::Parse("--hs is required".into()))?;
                    let hs = split_operands(hs)
                        .into_iter()
                        .map(parse_operand)
                        .collect::<Result<Vec<_>, _>>()?;
                    let kind = if a.kind == FamilyKind::CentralVertex {
                        CentralJoinKind::Vertex
                    } else {
                        CentralJoinKind::Edge
                    };
                    let rep = timings.time("family", || central_join_family(&g, &hs, kind))?;
                    (std::iter::once(g).chain(hs).collect(), rep)
                }
            };
            let ok = !report.refuted;
            finish(name, &inputs, report, timings, ok)
        }
        Command::Verify(a) => {
            let orders: Vec<usize> = match a.n {
                Some(n) => vec![n],
                None => (1..=a.n_max).collect(),
            };
            let report = timings.time("verify", || verify_corpus(&orders, threads))?;
            let ok = report.pass;
            finish(name, &[], report, timings, ok)
        }
    }
}

fn finish(
    name: &str,
    inputs: &[Graph],
    results: impl Serialize,
    timings: Timings,
    verified: bool,
) -> Result<Outcome, CliError> {
    let inputs = inputs.iter().map(to_graph6).collect();
    Ok(Outcome {
        doc: ReportDocument::new(name, inputs, results, timings)?,
        verified,
    })
}

fn join_kind(op: JoinOp) -> JoinKind {
    match op {
        JoinOp::Svv => JoinKind::VertexVertex,
        JoinOp::See => JoinKind::EdgeEdge,
    }
}

fn read_inputs(input: &InputArgs) -> Result<Vec<Graph>, CliError> {
    if let Some(spec) = &input.gen {
        return Ok(vec![parse_generator(spec)?]);
    }
    if let Some(g6) = &input.graph6 {
        return Ok(vec![parse_operand(g6)?]);
    }
    let mut graphs = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line.map_err(|e| CliError::Io(e.to_string()))?;
        if !line.trim().is_empty() {
            graphs.push(parse_operand(&line)?);
        }
    }
    if graphs.is_empty() {
        return Err(CliError::Parse(
            "no graph given (use --gen, --graph6 or stdin)".into(),
        ));
    }
    Ok(graphs)
}

fn write_dot(cli: &Cli, g: &Graph, layout: Option<&JoinLayout>) -> Result<(), CliError> {
    if let Some(path) = &cli.dot {
        std::fs::write(path, to_dot(g, layout))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Inertia {
    positive: usize,
    zero: usize,
    negative: usize,
}

#[derive(Serialize)]
struct SpectrumResult {
    graph6: String,
    order: usize,
    size: usize,
    diameter: i64,
    #[serde(serialize_with = "serde_util::sig12_vec")]
    spectrum: Vec<f64>,
    #[serde(serialize_with = "serde_util::sig12")]
    energy: f64,
    #[serde(serialize_with = "serde_util::sig12_opt")]
    spectral_gap: Option<f64>,
    #[serde(serialize_with = "serde_util::u64_string")]
    s_d: u64,
    inertia: Inertia,
    transmissions: Vec<i64>,
    #[serde(serialize_with = "serde_util::sig12_vec")]
    distance_laplacian_spectrum: Vec<f64>,
    #[serde(serialize_with = "serde_util::char_poly")]
    char_poly: CharPolyExact,
}

fn spectrum_result(g: &Graph) -> Result<SpectrumResult, CliError> {
    let ds = d_spectrum(g)?;
    let lap = distance_laplacian_spectrum(g)?;
    let s = &ds.spectrum;
    let (positive, zero, negative) = s.inertia();
    Ok(SpectrumResult {
        graph6: to_graph6(g),
        order: g.order(),
        size: g.size(),
        diameter: ds.dist.diameter(),
        spectrum: s.values().to_vec(),
        energy: s.energy(),
        spectral_gap: (s.len() >= 2).then(|| s.rho(1) - s.rho(2)),
        s_d: ds.dist.sum_of_squares(),
        inertia: Inertia {
            positive,
            zero,
            negative,
        },
        transmissions: ds.dist.transmissions().to_vec(),
        distance_laplacian_spectrum: lap.values().to_vec(),
        char_poly: char_poly_exact(ds.dist.matrix()),
    })
}

#[derive(Serialize)]
struct ConstructResult {
    graph6: String,
    order: usize,
    size: usize,
    connected: bool,
    diameter: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    layout: Option<JoinLayout>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<SpectrumResult>,
}
