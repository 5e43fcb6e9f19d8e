//! Command-line driver. Every subcommand prints one JSON document on stdout;
//! exit status 0 means accept/valid/success, 1 a legitimate negative answer
//! and 2 a usage or I/O error.

use crate::io;
use crate::svg::{self, Layout};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fbp_core::drawing::{bound_guard, class_bound, BundledDrawing};
use fbp_core::generate::Family;
use fbp_core::k3n::{build_k3_2kp1, build_k3_4kp2, count_crossings};
use fbp_core::oracles::{babysnake_oracle, outer3_oracle};
use fbp_core::recognize::{recognize_outer_triconnected, recognize_twolayer_biconnected, recognize_twolayer_maximal, RecognitionResult};
use fbp_core::reduction::{reduce, Model, ThreePartitionInstance};
use fbp_core::{validate, Graph};
use serde_json::{json, Value};
use std::path::Path;

const GRAPH_FORMAT: &str = "\
Graph files: `#` comments, header `p <n> <m>`, optional `v <id>` lines fixing
vertex order, optional layers `l <id> <0|1>`, edges `e <u> <w>`.";

const DRAWING_FORMAT: &str = "\
Drawing files are JSON with keys variant (general|outer|twolayer), sides (1|2),
graph {vertices, edges, layers}, bundles [{id, anchor, edges}], attachments
{\"u-w\": {first, second}}, crossings [[id, id]], embedding {node: [arc, ...]}
with node keys v:<id>, t:<bundle>, x:<bundle>|<bundle> and arc keys
trunk:<bundle>:<0|1>, mid:<u>-<w>, listed clockwise; optional outerFace.";

const ROTATION_FORMAT: &str = "\
Rotation files: one line `r <v> <u-w> ...` per vertex, edges clockwise.";

#[derive(Parser, Debug)]
#[command(name = "fbp", version, about = "Fan-bundle-planar drawings: recognition, generation, validation and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Class {
    Outer3,
    TwolayerBiconnected,
    TwolayerMaximal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Outer3,
    Babysnake,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LayoutArg {
    Twolayer,
    Circular,
    Barycentric,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recognize a graph class and optionally write the witness drawing.
    #[command(after_help = GRAPH_FORMAT)]
    Recognize {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long = "in")]
        input: String,
        /// Writes <out>.drawing and <out>.svg on acceptance.
        #[arg(long)]
        out: Option<String>,
        /// Derive missing layers from the bipartition.
        #[arg(long)]
        bipartition: bool,
    },
    /// Generate a family member (or a geometric K3,n drawing with family k3n).
    #[command(after_help = "Families: onesided-general (--k), onesided-outer (--q), bn (--k), waterlily, \
double-waterlily, layered-lily (--n), d12, k3n (--k, --mirror). --n is accepted for every family \
whose vertex count determines the parameter.")]
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// For k3n: the two-half-plane drawing of K3,4k+2.
        #[arg(long)]
        mirror: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Validate a drawing file.
    #[command(after_help = DRAWING_FORMAT)]
    Validate {
        #[arg(long = "in")]
        input: String,
        /// Validate under a different sides value than the file declares.
        #[arg(long)]
        sides: Option<u8>,
    },
    /// Run a brute-force oracle next to the fast recognizer.
    #[command(after_help = GRAPH_FORMAT)]
    Oracle {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long = "in")]
        input: String,
    },
    /// Build a hardness instance from a 3-Partition instance.
    #[command(after_help = ROTATION_FORMAT)]
    Reduce3p {
        #[arg(long = "A", value_delimiter = ',')]
        a: Vec<u64>,
        #[arg(long = "B")]
        b: u64,
        #[arg(long = "K")]
        k: Option<usize>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        model: u8,
        #[arg(long)]
        out: Option<String>,
    },
    /// Render a drawing file as SVG.
    #[command(after_help = DRAWING_FORMAT)]
    Render {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum)]
        layout: Option<LayoutArg>,
        #[arg(long)]
        out: String,
    },
    /// Sweep a family and compare edge counts with the closed form.
    DensityReport {
        #[arg(long)]
        family: String,
        #[arg(long = "max-n")]
        max_n: usize,
    },
}

/// Outcome of a subcommand: the JSON document and whether it is positive.
struct Outcome {
    json: Value,
    positive: bool,
}

/// Parses `argv` (program name first), runs it, prints JSON to `out` and
/// returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            eprint!("{e}");
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let text = serde_json::to_string_pretty(&o.json).expect("JSON values always serialize");
            let _ = writeln!(out, "{text}");
            if o.positive {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let _ = writeln!(out, "{}", json!({"error": format!("{e:#}")}));
            2
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
}

fn write(path: &str, text: &str) -> Result<()> {
    if let Some(dir) = Path::new(path).parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    std::fs::write(path, text).with_context(|| format!("cannot write {path}"))
}

fn load_graph(path: &str) -> Result<Graph> {
    io::parse_graph(&read(path)?).with_context(|| format!("in {path}"))
}

fn report_json(d: &BundledDrawing) -> Value {
    let r = validate(d);
    let violations: Vec<Value> =
        r.violations.iter().map(|v| json!({"rule": v.rule, "message": v.message, "objects": v.objects})).collect();
    json!({"valid": r.valid, "violations": violations})
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Recognize { class, input, out, bipartition } => recognize_cmd(class, &input, out.as_deref(), bipartition),
        Command::Generate { family, n, k, q, mirror, out } => generate_cmd(&family, n, k, q, mirror, out.as_deref()),
        Command::Validate { input, sides } => {
            let mut d = io::parse_drawing(&read(&input)?).with_context(|| format!("in {input}"))?;
            if let Some(s) = sides {
                if s != 1 && s != 2 {
                    bail!("--sides must be 1 or 2");
                }
                d.sides = s;
            }
            let mut json = report_json(&d);
            let valid = json["valid"].as_bool().unwrap_or(false);
            json["bound"] = match bound_guard(&d) {
                Ok(()) => Value::Null,
                Err(v) => Value::String(v.message),
            };
            json["command"] = json!("validate");
            json["n"] = json!(d.graph.n());
            json["m"] = json!(d.graph.m());
            Ok(Outcome { json, positive: valid })
        }
        Command::Oracle { which, input } => {
            let g = load_graph(&input)?;
            let (name, oracle, fast) = match which {
                Which::Outer3 => ("outer3", outer3_oracle(&g), recognize_outer_triconnected(&g)),
                Which::Babysnake => ("babysnake", babysnake_oracle(&g), recognize_twolayer_biconnected(&g)),
            };
            let accepted = oracle.map_err(|e| anyhow!(e))?;
            Ok(Outcome {
                json: json!({
                    "command": "oracle",
                    "which": name,
                    "accepted": accepted,
                    "recognizer": fast.accepted,
                    "agree": accepted == fast.accepted,
                    "reason": if accepted { Value::Null } else { json!("oracle found no certificate") },
                }),
                positive: accepted,
            })
        }
        Command::Reduce3p { a, b, k, model, out } => reduce_cmd(a, b, k, model, out.as_deref()),
        Command::Render { input, layout, out } => {
            let d = io::parse_drawing(&read(&input)?).with_context(|| format!("in {input}"))?;
            let hint = match layout {
                Some(LayoutArg::Twolayer) => Layout::TwoLayer,
                Some(LayoutArg::Circular) => Layout::Circular,
                Some(LayoutArg::Barycentric) => Layout::Barycentric,
                None => Layout::default_for(&d),
            };
            let text = svg::render_svg(&d, hint)?;
            write(&out, &text)?;
            Ok(Outcome { json: json!({"command": "render", "file": out, "nodes": d.node_count()}), positive: true })
        }
        Command::DensityReport { family, max_n } => density_cmd(&family, max_n),
    }
}

fn recognize_cmd(class: Class, input: &str, out: Option<&str>, bipartition: bool) -> Result<Outcome> {
    let mut g = load_graph(input)?;
    if bipartition && g.layers().is_none() {
        if let Some(l) = fbp_core::connectivity::bipartition(&g) {
            g = g.with_layers(Some(l)).map_err(|e| anyhow!("{e}"))?;
        }
    }
    let (name, r): (&str, RecognitionResult) = match class {
        Class::Outer3 => ("outer3", recognize_outer_triconnected(&g)),
        Class::TwolayerBiconnected => ("twolayer-biconnected", recognize_twolayer_biconnected(&g)),
        Class::TwolayerMaximal => ("twolayer-maximal", recognize_twolayer_maximal(&g)),
    };
    let mut files = Vec::new();
    let mut witness = Value::Null;
    if let Some(d) = &r.witness {
        let rep = report_json(d);
        witness = json!({
            "bundles": d.bundles.len(),
            "crossings": d.crossings.len(),
            "valid": rep["valid"],
            "sameGraph": d.graph.same_as(&g),
        });
        if let Some(prefix) = out {
            let path = format!("{prefix}.drawing");
            write(&path, &io::write_drawing(d))?;
            files.push(path);
            let path = format!("{prefix}.svg");
            write(&path, &svg::render_svg(d, Layout::default_for(d))?)?;
            files.push(path);
        }
    }
    let reason = match (&r.reason, r.accepted) {
        (Some(s), _) => Value::String(s.clone()),
        (None, false) => json!("rejected"),
        (None, true) => Value::Null,
    };
    Ok(Outcome {
        json: json!({
            "command": "recognize",
            "class": name,
            "n": g.n(),
            "m": g.m(),
            "accepted": r.accepted,
            "reason": reason,
            "witness": witness,
            "files": files,
        }),
        positive: r.accepted,
    })
}

/// Resolves the generator parameter from `--n`, `--k` or `--q`.
fn family_parameter(f: Family, n: Option<usize>, k: Option<usize>, q: Option<usize>) -> Result<usize> {
    let name = f.parameter();
    let direct = match name {
        Some("k") => k,
        Some("q") => q,
        Some("n") => n,
        _ => return Ok(0),
    };
    if let Some(p) = direct {
        return Ok(p);
    }
    if let Some(n) = n {
        return (0..=n).find(|&p| f.vertex_count(p) == n).ok_or_else(|| anyhow!("{} has no member with {n} vertices", f.as_str()));
    }
    bail!("{} needs --{}", f.as_str(), name.unwrap_or("n"))
}

fn generate_cmd(family: &str, n: Option<usize>, k: Option<usize>, q: Option<usize>, mirror: bool, out: Option<&str>) -> Result<Outcome> {
    if family == "k3n" {
        let k = k.ok_or_else(|| anyhow!("k3n needs --k"))?;
        let d = if mirror { build_k3_4kp2(k) } else { build_k3_2kp1(k) };
        let c = count_crossings(&d).map_err(|e| anyhow!(e))?;
        let expected_pairs = (2 * k * k + k) * if mirror { 2 } else { 1 };
        let mut files = Vec::new();
        if let Some(prefix) = out {
            for (ext, text) in [
                ("graph", io::write_graph(&d.graph)),
                ("geometry.json", format!("{}\n", serde_json::to_string_pretty(&io::geometry_json(&d, &c))?)),
                ("svg", svg::render_geometry(&d)),
            ] {
                let path = format!("{prefix}.{ext}");
                write(&path, &text)?;
                files.push(path);
            }
        }
        let ok = c.max() <= k && c.pairs.len() == expected_pairs;
        return Ok(Outcome {
            json: json!({
                "command": "generate",
                "family": "k3n",
                "k": k,
                "mirror": mirror,
                "n": d.graph.n(),
                "m": d.graph.m(),
                "crossingPairs": c.pairs.len(),
                "expectedCrossingPairs": expected_pairs,
                "maxCrossingsPerEdge": c.max(),
                "files": files,
            }),
            positive: ok,
        });
    }
    let f = Family::parse(family).ok_or_else(|| anyhow!("unknown family {family}"))?;
    let p = family_parameter(f, n, k, q)?;
    let inst = f.generate(p).map_err(|e| anyhow!("{}: {e}", f.as_str()))?;
    let mut files = Vec::new();
    let mut report = Value::Null;
    if let Some(prefix) = out {
        let path = format!("{prefix}.graph");
        write(&path, &io::write_graph(&inst.graph))?;
        files.push(path);
    }
    let mut valid = true;
    if let Some(d) = &inst.drawing {
        report = report_json(d);
        valid = report["valid"].as_bool().unwrap_or(false);
        if let Some(prefix) = out {
            let path = format!("{prefix}.drawing");
            write(&path, &io::write_drawing(d))?;
            files.push(path);
            let path = format!("{prefix}.svg");
            write(&path, &svg::render_svg(d, Layout::default_for(d))?)?;
            files.push(path);
        }
    }
    let tight = inst.graph.m() == inst.expected_edges;
    let params: serde_json::Map<String, Value> = inst.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    Ok(Outcome {
        json: json!({
            "command": "generate",
            "family": f.as_str(),
            "params": params,
            "n": inst.graph.n(),
            "m": inst.graph.m(),
            "expectedEdges": inst.expected_edges,
            "tight": tight,
            "validation": report,
            "files": files,
        }),
        positive: tight && valid,
    })
}

fn density_cmd(family: &str, max_n: usize) -> Result<Outcome> {
    let f = Family::parse(family).ok_or_else(|| anyhow!("unknown family {family}"))?;
    let mut rows = Vec::new();
    let mut all = true;
    for p in f.parameters_up_to(max_n) {
        let n = f.vertex_count(p);
        let bound = f.expected_edges(n);
        match f.generate(p) {
            Ok(inst) => {
                let valid = inst.drawing.as_ref().map(|d| validate(d).valid);
                let tight = inst.graph.m() == bound;
                let upper = inst.drawing.as_ref().and_then(|d| class_bound(d.sides, d.variant, n)).map(|(a, b)| format!("{a}/{b}"));
                all &= tight && valid.unwrap_or(true);
                rows.push(json!({"param": p, "n": n, "edges": inst.graph.m(), "bound": bound, "tight": tight, "valid": valid, "classUpperBound": upper}));
            }
            Err(e) => {
                all = false;
                rows.push(json!({"param": p, "n": n, "edges": Value::Null, "bound": bound, "tight": false, "error": e}));
            }
        }
    }
    let reason = if all { Value::Null } else { json!("some rows are not tight or not valid") };
    Ok(Outcome {
        json: json!({"command": "density-report", "family": f.as_str(), "maxN": max_n, "rows": rows, "allTight": all, "reason": reason}),
        positive: all,
    })
}

fn reduce_cmd(a: Vec<u64>, b: u64, k: Option<usize>, model: u8, out: Option<&str>) -> Result<Outcome> {
    let (inst, _) = ThreePartitionInstance::new(a, b).map_err(|e| anyhow!("invalid 3-Partition instance: {e}"))?;
    let model = if model == 2 { Model::TwoSided } else { Model::OneSided };
    let r = reduce(&inst, k, model).map_err(|e| anyhow!(e))?;
    let s = &r.stats;
    let rot_ok = r.rotation.check(&r.graph).is_ok();
    let copies_ok = fbp_core::reduction::check_copy_contiguity(&r).is_ok();
    let json = json!({
        "command": "reduce3p",
        "A": inst.a,
        "B": inst.b,
        "m": inst.m,
        "K": r.k,
        "model": if model == Model::TwoSided { 2 } else { 1 },
        "expectedYes": r.expected_yes,
        "warnings": r.warnings,
        "convention": r.convention,
        "stats": {
            "beamVertices": s.beam_vertices,
            "wallVertices": s.wall_vertices,
            "obstacleVertices": s.obstacle_vertices,
            "obstaclesPerColumn": s.obstacles_per_column,
            "obstacleCount": s.obstacle_count,
            "columnCount": s.column_count,
            "cellsPerColumn": s.cells_per_column,
            "pathCount": s.path_count,
            "pathLength": s.path_length,
            "centralCellEdges": s.central_cell_edges,
            "otherCellEdges": s.other_cell_edges,
            "vertices": s.vertices,
            "edges": s.edges,
            "predictedVertices": s.predicted_vertices,
            "predictedEdges": s.predicted_edges,
            "crossedPairs": r.crossed_pairs.len(),
        },
        "rotationValid": rot_ok,
        "copiesContiguous": copies_ok,
        "origin": r.graph.name(r.origin),
        "destination": r.graph.name(r.destination),
    });
    if let Some(prefix) = out {
        write(&format!("{prefix}.graph"), &io::write_graph(&r.graph))?;
        write(&format!("{prefix}.rot"), &io::write_rotation(&r.graph, &r.rotation))?;
        write(&format!("{prefix}.json"), &format!("{}\n", serde_json::to_string_pretty(&json)?))?;
    }
    Ok(Outcome { json, positive: true })
}
