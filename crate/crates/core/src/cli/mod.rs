//! Command-line surface.
//!
//! Exit codes: 0 success (LERF, valid certificate, clean oracle run),
//! 1 input error, 2 usage error, 3 negative outcome (not LERF, invalid
//! certificate, oracle disagreement).

pub mod format;
pub mod json;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decider::{
    decide_lerf, decomposition_expression, verify_certificate, Certificate, NonLerfCore, TrailStep,
};
use crate::graph::{ArtinGraph, VertexId};
use crate::gtc::{build_r, display_name, raag_lerf_obstruction};
use crate::oracle::{differential_in_S, GraphEnumSpec};
use crate::quad::QuadShape;
use crate::spherical::{classify_spherical, gtc_status};

pub use format::{emit_presentation, parse_graph, serialize_graph, ParseError};
pub use json::{certificate_from_json, certificate_to_json, CertificateJsonError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "artin-lerf",
    version,
    about = "Decide subgroup separability of Artin groups from their defining graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide LERF and print the certificate
    Check {
        file: PathBuf,
        /// Print the certificate as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the product/free-product decomposition, or the non-LERF core
    Decompose { file: PathBuf },
    /// Print R(A) or the 2-skeleton as a graph file
    Raag {
        file: PathBuf,
        #[arg(long, conflicts_with = "skeleton")]
        gtc: bool,
        #[arg(long)]
        skeleton: bool,
    },
    /// Classify the graph as spherical (finite type) or not
    Spherical { file: PathBuf },
    /// List the clauses under which the Generalized Tits Conjecture is known
    GtcStatus { file: PathBuf },
    /// Print the Artin presentation
    Present { file: PathBuf },
    /// Compare the decider with the brute-force oracle over many graphs
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        labels: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a JSON certificate against a graph
    Verify { file: PathBuf, cert: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(EXIT_OK, text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::input_error(message),
    }
}

fn read_graph(path: &Path) -> Result<ArtinGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn dispatch(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Check { file, json } => {
            let g = read_graph(&file)?;
            let cert = decide_lerf(&g).map_err(|e| e.to_string())?;
            let code = if cert.is_lerf() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            let text = if json {
                certificate_to_json(&cert) + "\n"
            } else {
                describe_certificate(&cert)
            };
            Ok(Outcome::ok(code, text))
        }
        Command::Decompose { file } => {
            let g = read_graph(&file)?;
            Ok(match decide_lerf(&g).map_err(|e| e.to_string())? {
                Certificate::InS(tree) => {
                    Outcome::ok(EXIT_OK, decomposition_expression(&tree) + "\n")
                }
                Certificate::NotInS(core) => Outcome::ok(EXIT_NEGATIVE, describe_core(&core)),
            })
        }
        Command::Raag { file, skeleton, .. } => {
            let g = read_graph(&file)?;
            if skeleton {
                let sk = g
                    .two_skeleton()
                    .to_artin_graph()
                    .expect("2-skeleton keeps the vertex names");
                Ok(Outcome::ok(EXIT_OK, serialize_graph(&sk)))
            } else {
                Ok(Outcome::ok(EXIT_OK, describe_r(&g)))
            }
        }
        Command::Spherical { file } => {
            let g = read_graph(&file)?;
            Ok(Outcome::ok(
                EXIT_OK,
                format!("{}\n", classify_spherical(&g)),
            ))
        }
        Command::GtcStatus { file } => {
            let g = read_graph(&file)?;
            let status = gtc_status(&g);
            let clauses: Vec<String> = status.clauses().iter().map(|c| c.to_string()).collect();
            let clauses = if clauses.is_empty() {
                "(none)".to_string()
            } else {
                clauses.join(" ")
            };
            Ok(Outcome::ok(
                EXIT_OK,
                format!(
                    "clauses: {clauses}\nconjectural: {}\n",
                    status.conjectural()
                ),
            ))
        }
        Command::Present { file } => {
            let g = read_graph(&file)?;
            Ok(Outcome::ok(EXIT_OK, emit_presentation(&g)))
        }
        Command::Oracle {
            n,
            labels,
            mode,
            seed,
            samples,
            json,
        } => {
            let spec = match mode {
                Mode::Exhaustive => GraphEnumSpec::exhaustive(n, &labels),
                Mode::Random => GraphEnumSpec::random(n, &labels, samples, seed),
            };
            let report = differential_in_S(&spec).map_err(|e| e.to_string())?;
            let code = if report.disagreements.is_empty() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            let text = if json {
                serde_json::to_string_pretty(&report).expect("report is serializable") + "\n"
            } else {
                let mut out = format!(
                    "graphs: {}\nagreements: {}\ndisagreements: {}\nwitness_gap: {}\n",
                    report.total,
                    report.agreements,
                    report.disagreements.len(),
                    report.witness_gap_count
                );
                for d in &report.disagreements {
                    writeln!(
                        out,
                        "disagreement: decide_lerf={} oracle={}\n{}",
                        d.decide_lerf,
                        d.oracle_in_s,
                        serialize_graph(&d.graph).trim_end()
                    )
                    .unwrap();
                }
                out
            };
            Ok(Outcome::ok(code, text))
        }
        Command::Verify { file, cert } => {
            let g = read_graph(&file)?;
            let text =
                std::fs::read_to_string(&cert).map_err(|e| format!("{}: {e}", cert.display()))?;
            let (certificate, expression) =
                certificate_from_json(&text).map_err(|e| format!("{}: {e}", cert.display()))?;
            let verdict = verify_certificate(&g, &certificate)
                .map_err(|e| e.to_string())
                .and_then(|()| match (&certificate, expression) {
                    (Certificate::InS(tree), Some(expr))
                        if expr != decomposition_expression(tree) =>
                    {
                        Err("expression mismatch".to_string())
                    }
                    _ => Ok(()),
                });
            Ok(match verdict {
                Ok(()) => Outcome::ok(EXIT_OK, "valid\n".to_string()),
                Err(reason) => Outcome::ok(EXIT_NEGATIVE, format!("invalid: {reason}\n")),
            })
        }
    }
}

fn join(vs: &[VertexId]) -> String {
    vs.iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe_core(core: &NonLerfCore) -> String {
    let trail: Vec<String> = core
        .trail
        .iter()
        .map(|step| match step {
            TrailStep::RemoveApex(v) => format!("remove_apex {v}"),
            TrailStep::TakeComponent(vs) => format!("take_component {{{}}}", join(vs)),
        })
        .collect();
    let trail = if trail.is_empty() {
        "(none)".to_string()
    } else {
        trail.join("; ")
    };
    let witness = match &core.witness {
        Some(w) => format!("{} {}", w.kind, join(&w.vertices)),
        None => "none".to_string(),
    };
    format!(
        "NOT-LERF\ncore: {}\ntrail: {trail}\nwitness: {witness}\n",
        join(&core.core)
    )
}

fn describe_certificate(cert: &Certificate) -> String {
    match cert {
        Certificate::InS(tree) => format!("LERF\nexpression: {}\n", decomposition_expression(tree)),
        Certificate::NotInS(core) => describe_core(core),
    }
}

/// R(A) as a graph file. Generators are renamed `z1..zk` (subset names are
/// not valid vertex names); a comment legend maps them back.
fn describe_r(g: &ArtinGraph) -> String {
    let r = build_r(g);
    let mut out = format!("# R(A): {} generators\n", r.graph.vertex_count());
    for (k, member) in r.members.members.iter().enumerate() {
        writeln!(
            out,
            "# z{} = {} ({})",
            k + 1,
            member.generator_name(),
            member.ty
        )
        .unwrap();
    }
    match raag_lerf_obstruction(&r.graph) {
        None => out.push_str("# R(A) is LERF\n"),
        Some(hit) => {
            let shape = match hit.shape {
                QuadShape::Path => "full path",
                QuadShape::Cycle => "full square",
            };
            let names: Vec<&str> = hit.vertices.iter().map(|v| display_name(v)).collect();
            writeln!(out, "# R(A) is not LERF: {shape} {}", names.join(", ")).unwrap();
        }
    }
    for k in 1..=r.graph.vertex_count() {
        writeln!(out, "vertex z{k}").unwrap();
    }
    for (i, j) in r.graph.edge_indices() {
        writeln!(out, "edge z{} z{} 2", i + 1, j + 1).unwrap();
    }
    out
}
