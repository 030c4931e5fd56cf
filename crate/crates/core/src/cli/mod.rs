//! Command line front end over JSON graph documents.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but an
//! operation's precondition fails (or `validate` finds violations), 2 on
//! malformed input or bad usage.

mod document;
mod dot;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::balance::{
    dm_condition, dm_gcd, enumerate_balanced, stack_dimension, twist_by_omega, BalanceContext,
    Multidegree,
};
use crate::cohomology::{
    balanced_large_d_report, base_point_free_criterion, dualizing_power_report, h0_if_criterion,
    h1_vanishing, normal_generation_hypothesis, CriterionReport,
};
use crate::dualgraph::{classify, stability_status, MarkedDualGraph, VertexSet};
use crate::error::{Error, Result};
use crate::morphisms::{
    contract_last_marking, forgetful_fiber, stabilize, stable_model, strip_to_unpointed,
    PointLocation,
};

pub use document::{GraphDocument, VertexRecord, DOCUMENT_VERSION};
pub use dot::to_dot;

#[derive(Parser, Debug)]
#[command(name = "quasistable", version, about = "Balanced multidegrees on pointed quasistable dual graphs")]
struct Cli {
    /// Also write the resulting graph document (with any multidegrees) to this path.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report structural problems with the graph.
    Validate { file: PathBuf },
    /// Core, maximal rational tails and bridges, exceptional components.
    Classify { file: PathBuf },
    /// Semistable, stable and quasistable flags.
    Status { file: PathBuf },
    /// Check one multidegree, given as `A=0,B=1` or by its name in the document.
    CheckBalanced { file: PathBuf, mdeg: String },
    /// List every balanced multidegree of total degree d.
    Enumerate {
        file: PathBuf,
        #[arg(short, allow_hyphen_values = true)]
        d: i64,
    },
    /// Forget the last marking.
    Contract {
        file: PathBuf,
        #[arg(long)]
        mdeg: String,
    },
    /// Add a marking at `vertex:ID`, `node:eK` or `marking:I`.
    Stabilize {
        file: PathBuf,
        #[arg(long)]
        mdeg: String,
        #[arg(long)]
        at: String,
    },
    /// Contract destabilizing components.
    StableModel { file: PathBuf },
    /// Drop tails and markings; each bridge becomes a node or keeps one chain component.
    Strip {
        file: PathBuf,
        /// One entry per bridge, comma separated: `node` or the id of the chain component to keep.
        #[arg(long, default_value = "")]
        bridges: String,
    },
    /// Twist a balanced multidegree by the m-th power of the dualizing sheaf.
    Twist {
        file: PathBuf,
        #[arg(long)]
        mdeg: String,
        #[arg(short, allow_hyphen_values = true)]
        m: i64,
    },
    /// Quasistable blow-ups of a stable graph and their balanced multidegrees.
    Fibers {
        file: PathBuf,
        #[arg(short, allow_hyphen_values = true)]
        d: i64,
    },
    /// Evaluate a degree criterion: h1-vanishing, base-point-free, h0,
    /// normal-generation, dualizing-power or large-d.
    Criteria {
        name: String,
        file: PathBuf,
        #[arg(long)]
        mdeg: Option<String>,
        /// Power of the dualizing sheaf for dualizing-power.
        #[arg(short, default_value_t = 2, allow_hyphen_values = true)]
        m: i64,
        /// Leave out the last marking (dualizing-power).
        #[arg(long)]
        drop_last: bool,
        /// Twist exponent for large-d.
        #[arg(short, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// Whether gcd(d − g + 1, 2g − 2) = 1.
    DmCheck {
        #[arg(short, allow_hyphen_values = true)]
        d: i64,
        #[arg(short)]
        g: i64,
    },
    /// Genus, number of markings and stack dimension.
    Info { file: PathBuf },
    /// Graphviz rendering.
    ExportDot { file: PathBuf },
}

/// What a command produced: text for stdout, an optional document for
/// `--output`, and the exit code.
struct Outcome {
    text: String,
    document: Option<GraphDocument>,
    code: i32,
}

impl Outcome {
    fn text(text: String) -> Self {
        Outcome { text, document: None, code: 0 }
    }

    fn with_document(text: String, document: GraphDocument) -> Self {
        Outcome { text, document: Some(document), code: 0 }
    }
}

fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Malformed(_) | Error::TooManyVertices(_) => 2,
        _ => 1,
    }
}

/// Runs one command line (program name first), writing results to `out`
/// and a single `error: <kind>: <detail>` line to `err` on failure.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = execute(cli.command).and_then(|outcome| {
        if let (Some(path), Some(doc)) = (&cli.output, &outcome.document) {
            std::fs::write(path, doc.to_json())
                .map_err(|e| Error::Malformed(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let detail = e.detail().replace('\n', " ");
            let _ = writeln!(err, "error: {}: {detail}", e.kind());
            exit_code(&e)
        }
    }
}

fn load(file: &PathBuf) -> Result<(GraphDocument, MarkedDualGraph)> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", file.display())))?;
    let doc = GraphDocument::parse(&text)?;
    let graph = doc.graph()?;
    Ok((doc, graph))
}

/// `A=0,B=1` literally, otherwise the name of a multidegree stored in the document.
fn resolve_mdeg(doc: &GraphDocument, graph: &MarkedDualGraph, spec: &str) -> Result<Multidegree> {
    if spec.contains('=') {
        Multidegree::parse(graph, spec)
    } else {
        doc.multidegree(graph, spec)
    }
}

fn set_ids(graph: &MarkedDualGraph, z: VertexSet) -> String {
    let ids: Vec<&str> = z.iter().map(|v| graph.id(v)).collect();
    format!("{{{}}}", ids.join(","))
}

fn describe_report(graph: &MarkedDualGraph, report: &CriterionReport) -> String {
    match &report.witness {
        None => "holds\n".into(),
        Some(w) => format!(
            "not established: degree {} < {} on {}\n",
            w.degree,
            w.threshold,
            set_ids(graph, w.subcurve)
        ),
    }
}

fn graph_summary(graph: &MarkedDualGraph) -> String {
    let mut s = String::new();
    for v in graph.vertices() {
        let legs: Vec<String> = v.legs.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "vertex {} genus {} legs [{}]", v.id, v.genus, legs.join(","));
    }
    for (e, &[a, b]) in graph.edges().iter().enumerate() {
        let _ = writeln!(s, "edge e{} {} {}", e + 1, graph.id(a), graph.id(b));
    }
    s
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Validate { file } => {
            let (_, graph) = load(&file)?;
            let violations = graph.validate();
            if violations.is_empty() {
                return Ok(Outcome::text("valid\n".into()));
            }
            let text = violations.iter().map(|v| format!("{v}\n")).collect();
            Ok(Outcome { text, document: None, code: 1 })
        }
        Command::Classify { file } => {
            let (_, graph) = load(&file)?;
            let c = classify(&graph)?;
            let mut s = String::new();
            let _ = writeln!(s, "core: {}", set_ids(&graph, c.core));
            for (i, t) in c.all_tails().enumerate() {
                let _ = writeln!(
                    s,
                    "tail {}: {} attached at {} to {}",
                    i + 1,
                    set_ids(&graph, t.vertices),
                    t.attaching_edge,
                    graph.id(t.anchor)
                );
            }
            for (i, b) in c.bridges.iter().enumerate() {
                let chain: Vec<&str> = b.chain.iter().map(|&v| graph.id(v)).collect();
                let _ = writeln!(
                    s,
                    "bridge {}: {} -> {} -> {}",
                    i + 1,
                    graph.id(b.endpoints[0]),
                    chain.join(" -> "),
                    graph.id(b.endpoints[1])
                );
            }
            let _ = writeln!(s, "exceptional: {}", set_ids(&graph, c.exceptional));
            let _ = writeln!(s, "destabilizing: {}", set_ids(&graph, c.destabilizing));
            Ok(Outcome::text(s))
        }
        Command::Status { file } => {
            let (_, graph) = load(&file)?;
            let st = stability_status(&graph)?;
            Ok(Outcome::text(format!(
                "semistable: {}\nstable: {}\nquasistable: {}\n",
                st.semistable, st.stable, st.quasistable
            )))
        }
        Command::CheckBalanced { file, mdeg } => {
            let (doc, graph) = load(&file)?;
            let mdeg = resolve_mdeg(&doc, &graph, &mdeg)?;
            let report = BalanceContext::new(&graph)?.check(&mdeg)?;
            let text = match report.first_violation {
                None => "balanced\n".to_string(),
                Some(v) => format!("not balanced: {}\n", v.describe(&graph)),
            };
            Ok(Outcome::text(text))
        }
        Command::Enumerate { file, d } => {
            let (_, graph) = load(&file)?;
            let list = enumerate_balanced(&graph, d)?;
            let mut doc = GraphDocument::from_graph(&graph);
            let mut s = String::new();
            for (i, m) in list.iter().enumerate() {
                let _ = writeln!(s, "{}", m.render(&graph));
                doc = doc.with_multidegree(&graph, format!("d{d}_{:04}", i + 1), m);
            }
            Ok(Outcome::with_document(s, doc))
        }
        Command::Contract { file, mdeg } => {
            let (doc, graph) = load(&file)?;
            let mdeg = resolve_mdeg(&doc, &graph, &mdeg)?;
            let c = contract_last_marking(&graph, &mdeg)?;
            let mut s = graph_summary(&c.graph);
            let _ = writeln!(s, "multidegree {}", c.mdeg.render(&c.graph));
            let _ = writeln!(s, "delta {}", c.delta);
            if let Some(id) = &c.contracted {
                let _ = writeln!(s, "contracted {id}");
            }
            let out = GraphDocument::from_graph(&c.graph).with_multidegree(&c.graph, "L", &c.mdeg);
            Ok(Outcome::with_document(s, out))
        }
        Command::Stabilize { file, mdeg, at } => {
            let (doc, graph) = load(&file)?;
            let mdeg = resolve_mdeg(&doc, &graph, &mdeg)?;
            let delta: PointLocation = at.parse()?;
            let st = stabilize(&graph, &mdeg, &delta)?;
            let mut s = graph_summary(&st.graph);
            let _ = writeln!(s, "multidegree {}", st.mdeg.render(&st.graph));
            if let Some(v) = st.new_vertex {
                let _ = writeln!(s, "new component {}", st.graph.id(v));
            }
            let out = GraphDocument::from_graph(&st.graph).with_multidegree(&st.graph, "L", &st.mdeg);
            Ok(Outcome::with_document(s, out))
        }
        Command::StableModel { file } => {
            let (_, graph) = load(&file)?;
            let r = stable_model(&graph)?;
            Ok(Outcome::with_document(graph_summary(&r.graph), GraphDocument::from_graph(&r.graph)))
        }
        Command::Strip { file, bridges } => {
            let (_, graph) = load(&file)?;
            let c = classify(&graph)?;
            let entries: Vec<&str> = bridges
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            if entries.len() != c.bridges.len() {
                return Err(Error::Malformed(format!(
                    "{} bridge choices given, graph has {} bridges",
                    entries.len(),
                    c.bridges.len()
                )));
            }
            let assignment = entries
                .iter()
                .zip(&c.bridges)
                .map(|(&entry, bridge)| {
                    if entry == "node" {
                        return Ok(None);
                    }
                    let v = graph.require_index(entry)?;
                    bridge.chain.iter().position(|&x| x == v).map(Some).ok_or_else(|| {
                        Error::Domain(format!("`{entry}` is not on the chain of its bridge"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let r = strip_to_unpointed(&graph, &assignment)?;
            Ok(Outcome::with_document(graph_summary(&r.graph), GraphDocument::from_graph(&r.graph)))
        }
        Command::Twist { file, mdeg, m } => {
            let (doc, graph) = load(&file)?;
            let mdeg = resolve_mdeg(&doc, &graph, &mdeg)?;
            let ctx = BalanceContext::new(&graph)?;
            if let Some(v) = ctx.check(&mdeg)?.first_violation {
                return Err(Error::NotBalanced(v.describe(&graph)));
            }
            let twisted = twist_by_omega(&graph, ctx.classification(), &mdeg, m)?;
            let out = GraphDocument::from_graph(&graph).with_multidegree(&graph, "L", &twisted);
            Ok(Outcome::with_document(format!("{}\n", twisted.render(&graph)), out))
        }
        Command::Fibers { file, d } => {
            let (_, graph) = load(&file)?;
            let mut s = String::new();
            for entry in forgetful_fiber(&graph, d)? {
                let edges: Vec<String> = entry.edges.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{{{}}}: {}", edges.join(","), entry.multidegrees.len());
                for m in &entry.multidegrees {
                    let _ = writeln!(s, "  {}", m.render(&entry.graph));
                }
            }
            Ok(Outcome::text(s))
        }
        Command::Criteria { name, file, mdeg, m, drop_last, k } => {
            let (doc, graph) = load(&file)?;
            let needs_mdeg = || {
                mdeg.as_deref()
                    .ok_or_else(|| Error::Malformed(format!("criterion `{name}` needs --mdeg")))
                    .and_then(|spec| resolve_mdeg(&doc, &graph, spec))
            };
            let text = match name.as_str() {
                "h1-vanishing" => describe_report(&graph, &h1_vanishing(&graph, &needs_mdeg()?)?),
                "base-point-free" => {
                    describe_report(&graph, &base_point_free_criterion(&graph, &needs_mdeg()?)?)
                }
                "h0" => match h0_if_criterion(&graph, &needs_mdeg()?)? {
                    Some(h0) => format!("h0 = {h0}\n"),
                    None => "not established\n".into(),
                },
                "normal-generation" => {
                    let (report, shifted) = normal_generation_hypothesis(&graph, &needs_mdeg()?)?;
                    format!(
                        "{}twisted {}\n",
                        describe_report(&graph, &report),
                        shifted.render(&graph)
                    )
                }
                "dualizing-power" => {
                    describe_report(&graph, &dualizing_power_report(&graph, m, drop_last)?)
                }
                "large-d" => {
                    describe_report(&graph, &balanced_large_d_report(&graph, &needs_mdeg()?, k)?)
                }
                other => return Err(Error::Malformed(format!("unknown criterion `{other}`"))),
            };
            Ok(Outcome::text(text))
        }
        Command::DmCheck { d, g } => {
            if g < 2 {
                return Err(Error::GenusTooSmall { genus: g, required: 2 });
            }
            Ok(Outcome::text(format!("{} (gcd={})\n", dm_condition(d, g), dm_gcd(d, g))))
        }
        Command::Info { file } => {
            let (_, graph) = load(&file)?;
            graph.ensure_valid()?;
            let g = graph.total_genus();
            let n = graph.marking_count() as i64;
            Ok(Outcome::text(format!(
                "genus: {g}\nmarkings: {n}\nstack_dimension: {}\n",
                stack_dimension(g, n)
            )))
        }
        Command::ExportDot { file } => {
            let (_, graph) = load(&file)?;
            Ok(Outcome::text(to_dot(&graph)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["quasistable"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dm_check() {
        assert_eq!(call(&["dm-check", "-d", "4", "-g", "3"]), (0, "false (gcd=2)\n".into(), String::new()));
        assert_eq!(call(&["dm-check", "-d", "1", "-g", "3"]).1, "true (gcd=1)\n");
        assert_eq!(call(&["dm-check", "-d", "-2", "-g", "3"]).1, "false (gcd=4)\n");
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
    }

    #[test]
    fn missing_file_is_malformed() {
        let (code, _, err) = call(&["status", "/nonexistent/graph.json"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: malformed: "));
        assert_eq!(err.lines().count(), 1);
    }
}
