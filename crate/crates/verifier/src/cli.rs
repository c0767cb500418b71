//! The `tperfect` command line. Exit codes: 0 when every requested check
//! passes, 1 when one fails, 2 for usage errors.

use std::io::Write;
use std::sync::mpsc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tperfect_core::decision::{one_step_t_minors, Classifier};
use tperfect_core::generators::{
    complete, cycle, cycle_power, figure2_patterns, figure3_patterns, mobius_ladder, path, prop7_patterns, wheel,
    GeneratorError,
};
use tperfect_core::graph::{graph6_decode, graph6_encode, MAX_ORDER};
use tperfect_core::pattern::PatternExpr;
use tperfect_core::polytope::{DdOptions, DEFAULT_DIM_CAP};
use tperfect_core::Graph;

use crate::campaigns::{Verifier, CAMPAIGNS};
use crate::report::CampaignReport;
use crate::sweep::distinct_pattern_graphs;

/// Largest order run through the polytope code without `--allow-large`.
pub const DESK_SCALE_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "tperfect", about = "Decide t-perfection and replay the classification of t-perfect graphs")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker threads; 0 means one per core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Largest polytope dimension the vertex enumeration accepts.
    #[arg(long, global = true)]
    pub dim_cap: Option<usize>,
    /// Permit graphs with more than 10 vertices.
    #[arg(long, global = true)]
    pub allow_large: bool,
    /// Wall-clock limit for `check` and `minors`, in seconds.
    #[arg(long, global = true)]
    pub budget_secs: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one graph, given as graph6 or as a pattern expression.
    Check { graph: String },
    /// List the one-step t-minors of a graph, one per isomorphism class.
    Minors { graph: String },
    /// Print a named graph: cycle L, path L, complete L, wheel L,
    /// cyclepower L K, mobius 2K, fig2 [I], fig3 [I], prop7 [I].
    Gen {
        family: String,
        params: Vec<usize>,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CAMPAIGNS.iter().copied().chain(["all"])))]
        campaign: String,
    },
    /// List pattern graphs of one order, one per isomorphism class.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(5..=10))]
        order: u8,
        #[arg(long)]
        core_only: bool,
    },
}

/// Reads graph6, or a pattern expression when the text starts with `(` or `{`.
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let t = text.trim();
    if t.starts_with('(') || t.starts_with('{') {
        let e: PatternExpr = t.parse().map_err(|e| format!("bad pattern {t:?}: {e}"))?;
        e.realize().map_err(|e| format!("bad pattern {t:?}: {e}"))
    } else {
        graph6_decode(t).map_err(|e| format!("bad graph6 {t:?}: {e}"))
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn failed(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

#[derive(Serialize)]
struct Named {
    name: String,
    graph6: String,
}

#[derive(Serialize)]
struct MinorLine {
    op: String,
    graph6: String,
    t_perfect: bool,
}

#[derive(Serialize)]
struct PatternLine {
    pattern: String,
    graph6: String,
    core: Option<bool>,
}

/// Parses `args` (program name first), runs, writes to `out` and `err`, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "tperfect: {}", f.message);
            }
            f.code
        }
    }
}

fn options(cli: &Cli) -> DdOptions {
    let cap = cli.dim_cap.unwrap_or(if cli.allow_large { MAX_ORDER } else { DEFAULT_DIM_CAP });
    DdOptions { dim_cap: cap, ..DdOptions::default() }
}

fn desk_scale(cli: &Cli, g: &Graph) -> Result<(), Failure> {
    if g.order() > DESK_SCALE_ORDER && !cli.allow_large {
        return Err(usage(format!(
            "graph has {} vertices; pass --allow-large for more than {DESK_SCALE_ORDER}",
            g.order()
        )));
    }
    Ok(())
}

/// Runs `f` on another thread, giving up after the budget if one is set.
fn within_budget<T: Send + 'static>(cli: &Cli, f: impl FnOnce() -> T + Send + 'static) -> Result<T, Failure> {
    let Some(secs) = cli.budget_secs else {
        return Ok(f());
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(Duration::from_secs(secs)).map_err(|_| failed(format!("gave up after {secs} s")))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    // a closed pipe (output cut short by `head`) ends the run quietly
    let io = |e: std::io::Error| match e.kind() {
        std::io::ErrorKind::BrokenPipe => failed(""),
        _ => failed(e.to_string()),
    };
    match &cli.command {
        Command::Check { graph } => {
            let g = parse_graph(graph).map_err(usage)?;
            desk_scale(cli, &g)?;
            let opts = options(cli);
            let v = within_budget(cli, move || Classifier::new(opts).classify(&g))?.map_err(|e| failed(e.to_string()))?;
            match cli.format {
                Format::Json => writeln!(out, "{}", json(&v)).map_err(io)?,
                Format::Text => {
                    let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
                    writeln!(out, "graph6 {}", graph6_encode(&v.graph)).map_err(io)?;
                    writeln!(out, "canonical {}", v.canonical.to_hex()).map_err(io)?;
                    writeln!(out, "n {}", v.graph.order()).map_err(io)?;
                    writeln!(out, "t_perfect {}", v.t_perfect).map_err(io)?;
                    let w = v.witness.as_ref().map_or("none".to_string(), |w| w.to_string());
                    writeln!(out, "witness {w}").map_err(io)?;
                    writeln!(out, "minimally_t_imperfect {}", opt(v.minimally_t_imperfect)).map_err(io)?;
                    writeln!(out, "core {}", opt(v.core)).map_err(io)?;
                }
            }
            Ok(0)
        }
        Command::Minors { graph } => {
            let g = parse_graph(graph).map_err(usage)?;
            desk_scale(cli, &g)?;
            let opts = options(cli);
            let lines = within_budget(cli, move || {
                let cl = Classifier::new(opts);
                one_step_t_minors(&g)
                    .into_iter()
                    .map(|m| {
                        cl.is_t_perfect(&m.graph).map(|tp| MinorLine {
                            op: m.op.to_string(),
                            graph6: graph6_encode(&m.graph),
                            t_perfect: tp,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })?
            .map_err(|e| failed(e.to_string()))?;
            match cli.format {
                Format::Json => writeln!(out, "{}", json(&lines)).map_err(io)?,
                Format::Text => {
                    for l in &lines {
                        writeln!(out, "{} {} t_perfect={}", l.op, l.graph6, l.t_perfect).map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Gen { family, params } => {
            let named = generate(family, params)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", json(&named)).map_err(io)?,
                Format::Text => {
                    for n in &named {
                        writeln!(out, "{} {}", n.graph6, n.name).map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { campaign } => {
            let v = Verifier::new(cli.jobs, options(cli));
            let names: Vec<&str> = if campaign == "all" { CAMPAIGNS.to_vec() } else { vec![campaign.as_str()] };
            let reports: Vec<CampaignReport> =
                names.iter().map(|n| v.run(n).ok_or_else(|| usage(format!("unknown campaign {n}")))).collect::<Result<_, _>>()?;
            match (cli.format, reports.as_slice()) {
                (Format::Json, [one]) => writeln!(out, "{}", one.to_json()).map_err(io)?,
                (Format::Json, many) => writeln!(out, "{}", json(&many)).map_err(io)?,
                (Format::Text, many) => {
                    for r in many {
                        write!(out, "{r}").map_err(io)?;
                    }
                }
            }
            Ok(if reports.iter().all(CampaignReport::ok) { 0 } else { 1 })
        }
        Command::Enumerate { order, core_only } => {
            let cl = Classifier::new(options(cli));
            let mut lines = Vec::new();
            for (spec, g, _) in distinct_pattern_graphs(*order as usize) {
                let core = if *core_only { Some(cl.is_core(&g).map_err(|e| failed(e.to_string()))?) } else { None };
                if core != Some(false) {
                    lines.push(PatternLine { pattern: spec.to_string(), graph6: graph6_encode(&g), core });
                }
            }
            match cli.format {
                Format::Json => writeln!(out, "{}", json(&lines)).map_err(io)?,
                Format::Text => {
                    for l in &lines {
                        writeln!(out, "{} {}", l.graph6, l.pattern).map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn generate(family: &str, params: &[usize]) -> Result<Vec<Named>, Failure> {
    let gen_err = |e: GeneratorError| usage(e.to_string());
    let one = |name: String, g: Result<Graph, GeneratorError>| -> Result<Vec<Named>, Failure> {
        let g = g.map_err(gen_err)?;
        Ok(vec![Named { name, graph6: graph6_encode(&g) }])
    };
    let arg = |k: usize| params.get(k).copied().ok_or_else(|| usage(format!("{family} needs {} parameter(s)", k + 1)));
    let listed = |list: Vec<&'static str>| -> Result<Vec<Named>, Failure> {
        let pick: Vec<&str> = match params.first() {
            Some(&i) => vec![*list.get(i).ok_or_else(|| usage(format!("{family} has {} entries", list.len())))?],
            None => list,
        };
        pick.into_iter()
            .map(|p| {
                let g = parse_graph(p).map_err(failed)?;
                Ok(Named { name: p.to_string(), graph6: graph6_encode(&g) })
            })
            .collect()
    };
    match family {
        "cycle" => one(format!("C{}", arg(0)?), cycle(arg(0)?)),
        "path" => one(format!("P{}", arg(0)?), path(arg(0)?)),
        "complete" => one(format!("K{}", arg(0)?), complete(arg(0)?)),
        "wheel" => one(format!("W{}", arg(0)?), wheel(arg(0)?)),
        "cyclepower" => one(format!("C{}^{}", arg(0)?, arg(1)?), cycle_power(arg(0)?, arg(1)?)),
        "mobius" => one(format!("M{}", arg(0)?), mobius_ladder(arg(0)?)),
        "fig2" => listed(figure2_patterns()),
        "fig3" => listed(figure3_patterns()),
        "prop7" => listed(prop7_patterns()),
        _ => Err(usage(format!(
            "unknown family {family:?}; expected cycle, path, complete, wheel, cyclepower, mobius, fig2, fig3 or prop7"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("tperfect").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parse_graph_forms() {
        assert_eq!(parse_graph("C~").unwrap().order(), 4);
        assert_eq!(parse_graph("(1|23)").unwrap().order(), 8);
        assert_eq!(parse_graph("(12*435*1)-u1").unwrap().order(), 9);
        assert!(parse_graph("(6)").is_err());
    }

    #[test]
    fn k4_text_witness() {
        let (code, out, _) = call(&["check", "C~"]);
        assert_eq!(code, 0);
        assert!(out.contains("t_perfect false"));
        assert!(out.contains("witness 1/3 1/3 1/3 1/3"), "{out}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["verify", "nonsense"]).0, 2);
        assert_eq!(call(&["check", "C~", "--format", "xml"]).0, 2);
        assert_eq!(call(&["gen", "star", "3"]).0, 2);
        assert_eq!(call(&["gen", "cycle"]).0, 2);
        assert_eq!(call(&["check", "(7)"]).0, 2);
        assert_eq!(call(&["enumerate", "--order", "12"]).0, 2);
    }

    #[test]
    fn large_graphs_need_the_flag() {
        let g6 = graph6_encode(&Graph::empty(12).unwrap());
        let (code, _, err) = call(&["check", &g6]);
        assert_eq!(code, 2, "{err}");
        assert!(err.contains("--allow-large"));
    }

    #[test]
    fn gen_lists() {
        let (code, out, _) = call(&["gen", "fig3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        let (_, out, _) = call(&["gen", "wheel", "5"]);
        assert!(out.ends_with(" W5\n"));
    }
}
