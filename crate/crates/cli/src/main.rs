//! `visgraph` command-line tool.
//!
//! Exit codes: 0 on success or when the property holds, 1 when a property is
//! violated, a round trip differs or a graph is refuted, 2 on malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use visgraph::construct::{
    construct_k11n, construct_tree, construct_triangulated, parse_drawing, verify_roundtrip, ConstructError,
    ConstructionParams, PlaneDrawing,
};
use visgraph::geometry::{parse_scene, scene_to_json, validate_scene, Scene};
use visgraph::graph::{
    bridge_or_triangle_violations, classify_compact_with, contains_k4, graph_to_dot, graph_to_text, is_connected,
    is_planar, parse_graph, Graph, Verdict,
};
use visgraph::harness::{check_scene, fuzz, FuzzConfig};
use visgraph::render::render_svg;
use visgraph::visibility::{compute_visibility_graph_with, witnesses_to_json};
use visgraph::Exec;

#[derive(Parser)]
#[command(name = "visgraph", version, about = "Exact visibility graphs of compact planar regions")]
struct Cli {
    /// Run library calls on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the visibility graph of a scene in graph text format.
    Compute {
        scene: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Check a necessary condition on a graph.
    Check {
        graph: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// Decide whether a graph is a compact visibility graph, when possible.
    Classify {
        graph: PathBuf,
        #[arg(long)]
        drawing: Option<PathBuf>,
    },
    /// Build a scene realizing a graph.
    Construct {
        #[command(subcommand)]
        kind: Construction,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Compare the visibility graph of a scene with a target graph.
    Verify { scene: PathBuf, graph: PathBuf },
    /// Fuzz the invariants on random scenes, or replay one scene.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        iters: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        convex_only: bool,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        regions_min: usize,
        #[arg(long, default_value_t = 10)]
        regions_max: usize,
        #[arg(long, default_value_t = 50)]
        coord_range: i64,
        /// Re-check a saved scene; `--seed` is then the manifest's check seed.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Construction {
    Tree { graph: PathBuf },
    K11n { n: usize },
    Triangulated {
        graph: PathBuf,
        #[arg(long)]
        drawing: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    BridgeOrTriangle,
    PlanarOrK4,
    Connected,
}

/// A diagnostic with its exit code.
struct Fail(u8, String);

type Outcome = Result<u8, Fail>;

fn input(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_scene(path: &Path) -> Result<Scene, Fail> {
    let s = parse_scene(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let report = validate_scene(&s);
    if !report.is_valid() {
        let lines: Vec<String> = report.violations.iter().map(|v| format!("{}: invalid scene: {v}", path.display())).collect();
        return Err(input(lines.join("\n")));
    }
    Ok(s)
}

fn load_graph(path: &Path) -> Result<Graph, Fail> {
    parse_graph(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_drawing(path: &Path) -> Result<PlaneDrawing, Fail> {
    parse_drawing(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn construct_failure(e: ConstructError, source: &str) -> Fail {
    match e {
        ConstructError::VerificationFailed(_) | ConstructError::NoFit => Fail(1, format!("construction failed: {e}")),
        other => input(format!("{source}: {other}")),
    }
}

fn run(cli: Cli) -> Outcome {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match cli.cmd {
        Cmd::Compute { scene, dot, svg, witnesses } => {
            let s = load_scene(&scene)?;
            let vis = compute_visibility_graph_with(&s, exec).map_err(|e| input(format!("{}: {e}", scene.display())))?;
            let g = Graph::from(&vis);
            print!("{}", graph_to_text(&g));
            if let Some(p) = dot {
                write(&p, &graph_to_dot(&g))?;
            }
            if let Some(p) = svg {
                write(&p, &render_svg(&s, Some(&vis)))?;
            }
            if let Some(p) = witnesses {
                write(&p, &witnesses_to_json(&vis))?;
            }
            Ok(0)
        }
        Cmd::Check { graph, property } => {
            let g = load_graph(&graph)?;
            Ok(match property {
                Property::BridgeOrTriangle => {
                    let bad = bridge_or_triangle_violations(&g);
                    for (a, b) in &bad {
                        println!("violation {a} {b}: neither a bridge nor in a triangle");
                    }
                    if bad.is_empty() {
                        println!("holds");
                    }
                    u8::from(!bad.is_empty())
                }
                Property::PlanarOrK4 => {
                    if let Some(k) = contains_k4(&g) {
                        println!("holds: contains K4 on {}", k.join(" "));
                        0
                    } else if is_planar(&g) {
                        println!("holds: planar");
                        0
                    } else {
                        println!("violation: nonplanar and K4-free");
                        1
                    }
                }
                Property::Connected => {
                    if is_connected(&g) {
                        println!("holds");
                        0
                    } else {
                        println!("violation: disconnected");
                        1
                    }
                }
            })
        }
        Cmd::Classify { graph, drawing } => {
            let g = load_graph(&graph)?;
            let d = drawing.as_deref().map(load_drawing).transpose()?;
            let c = classify_compact_with(&g, d.as_ref());
            println!("{c}");
            Ok(u8::from(c.verdict == Verdict::RefutedCompact))
        }
        Cmd::Construct { kind, out } => {
            let s = match kind {
                Construction::Tree { graph } => {
                    let g = load_graph(&graph)?;
                    construct_tree(&g).map_err(|e| construct_failure(e, &graph.display().to_string()))?
                }
                Construction::K11n { n } => construct_k11n(n).map_err(|e| construct_failure(e, "k11n"))?,
                Construction::Triangulated { graph, drawing } => {
                    let g = load_graph(&graph)?;
                    let d = load_drawing(&drawing)?;
                    construct_triangulated(&g, &d, &ConstructionParams::default())
                        .map_err(|e| construct_failure(e, &drawing.display().to_string()))?
                }
            };
            let json = scene_to_json(&s);
            match out {
                Some(p) => write(&p, &json)?,
                None => print!("{json}"),
            }
            Ok(0)
        }
        Cmd::Verify { scene, graph } => {
            let s = load_scene(&scene)?;
            let g = load_graph(&graph)?;
            match verify_roundtrip(&g, &s) {
                Ok(diff) => {
                    println!("{diff}");
                    Ok(u8::from(!diff.is_empty()))
                }
                Err(e @ ConstructError::NameMismatch { .. }) => {
                    println!("{e}");
                    Ok(1)
                }
                Err(e) => Err(input(format!("{}: {e}", scene.display()))),
            }
        }
        Cmd::Fuzz { iters, seed, convex_only, out_dir, regions_min, regions_max, coord_range, replay } => {
            let base = FuzzConfig::default();
            if let Some(path) = replay {
                let s = load_scene(&path)?;
                let c = check_scene(&s, base.oracle_budget, seed, exec);
                for f in &c.failures {
                    println!("violation {}: {}", f.invariant, f.detail);
                }
                if c.passed() {
                    println!("all {} invariants hold", c.checked.len());
                }
                return Ok(u8::from(!c.passed()));
            }
            let config = FuzzConfig {
                iterations: iters,
                seed,
                convex_only,
                out_dir,
                regions_min,
                regions_max,
                coord_range,
                exec,
                ..base
            };
            let report = fuzz(&config).map_err(|e| input(e.to_string()))?;
            print!("{report}");
            Ok(u8::from(report.failures() > 0))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
