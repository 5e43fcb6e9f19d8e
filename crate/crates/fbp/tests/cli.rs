use serde_json::Value;
use std::fs;
use std::path::Path;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let argv = std::iter::once("fbp").chain(args.iter().copied());
    let code = fbp::cli::run(argv, &mut out);
    let text = String::from_utf8(out).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (code, json)
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn prefix(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn complete_graph(n: usize) -> String {
    let mut s = format!("p {n} {}\n", n * (n - 1) / 2);
    for u in 1..=n {
        for v in u + 1..=n {
            s += &format!("e {u} {v}\n");
        }
    }
    s
}

fn count(text: &str, class: &str) -> usize {
    text.matches(&format!("class=\"{class}\"")).count()
}

#[test]
fn outer3_k4_accepts_and_k5_rejects() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.graph", &complete_graph(4));
    let out = prefix(&dir, "k4");
    let (code, j) = run(&["recognize", "--class", "outer3", "--in", &k4, "--out", &out]);
    assert_eq!(code, 0);
    assert_eq!(j["accepted"], true);
    assert_eq!(j["witness"]["valid"], true);
    assert_eq!(j["witness"]["sameGraph"], true);
    let svg = fs::read_to_string(format!("{out}.svg")).unwrap();
    assert_eq!(count(&svg, "vertex"), 4);
    assert!(Path::new(&format!("{out}.drawing")).exists());

    let k5 = file(&dir, "k5.graph", &complete_graph(5));
    let (code, j) = run(&["recognize", "--class", "outer3", "--in", &k5]);
    assert_eq!(code, 1);
    assert_eq!(j["accepted"], false);
    assert_eq!(j["reason"], "edge count exceeds characterization");
}

#[test]
fn twolayer_k23_and_k24() {
    let dir = TempDir::new().unwrap();
    let k23 = file(&dir, "k23.graph", "p 5 6\nl 1 0\nl 2 0\nl 3 1\nl 4 1\nl 5 1\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\n");
    assert_eq!(run(&["recognize", "--class", "twolayer-biconnected", "--in", &k23]).0, 0);
    let k24 = file(
        &dir,
        "k24.graph",
        "p 6 8\nl 1 0\nl 2 0\nl 3 1\nl 4 1\nl 5 1\nl 6 1\ne 1 3\ne 1 4\ne 1 5\ne 1 6\ne 2 3\ne 2 4\ne 2 5\ne 2 6\n",
    );
    let (code, j) = run(&["recognize", "--class", "twolayer-biconnected", "--in", &k24]);
    assert_eq!(code, 1);
    assert!(j["reason"].is_string());
}

#[test]
fn bipartition_flag_supplies_layers() {
    let dir = TempDir::new().unwrap();
    let c8 = file(&dir, "c8.graph", "p 8 8\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 8\ne 8 1\n");
    let (code, _) = run(&["recognize", "--class", "twolayer-biconnected", "--in", &c8]);
    assert_eq!(code, 1);
    let (code, j) = run(&["recognize", "--class", "twolayer-biconnected", "--in", &c8, "--bipartition"]);
    assert_eq!(code, 0, "{j}");
}

#[test]
fn generate_writes_graph_drawing_and_svg() {
    let dir = TempDir::new().unwrap();
    let out = prefix(&dir, "wl");
    let (code, j) = run(&["generate", "--family", "waterlily", "--n", "9", "--out", &out]);
    assert_eq!(code, 0, "{j}");
    assert_eq!(j["m"], 27);
    assert_eq!(j["tight"], true);
    let drawing = fs::read_to_string(format!("{out}.drawing")).unwrap();
    let d: Value = serde_json::from_str(&drawing).unwrap();
    let svg = fs::read_to_string(format!("{out}.svg")).unwrap();
    assert_eq!(count(&svg, "vertex"), 9);
    assert_eq!(count(&svg, "crossing"), d["crossings"].as_array().unwrap().len());
    let graph = fs::read_to_string(format!("{out}.graph")).unwrap();
    assert!(graph.starts_with("p 9 27") || graph.contains("\np 9 27"));

    let (code, j) = run(&["validate", "--in", &format!("{out}.drawing")]);
    assert_eq!(code, 0, "{j}");
    assert_eq!(j["bound"], Value::Null);
}

#[test]
fn generation_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (prefix(&dir, "a"), prefix(&dir, "b"));
    for p in [&a, &b] {
        assert_eq!(run(&["generate", "--family", "onesided-outer", "--q", "4", "--out", p]).0, 0);
    }
    for ext in ["graph", "drawing", "svg"] {
        assert_eq!(fs::read(format!("{a}.{ext}")).unwrap(), fs::read(format!("{b}.{ext}")).unwrap(), "{ext}");
    }
}

#[test]
fn twolayer_svg_puts_vertices_on_two_rows() {
    let dir = TempDir::new().unwrap();
    let out = prefix(&dir, "bn");
    assert_eq!(run(&["generate", "--family", "bn", "--k", "2", "--out", &out]).0, 0);
    let svg = fs::read_to_string(format!("{out}.svg")).unwrap();
    let rows: Vec<&str> = svg
        .lines()
        .filter(|l| l.contains("class=\"vertex\""))
        .map(|l| l.split("cy=\"").nth(1).unwrap().split('"').next().unwrap())
        .collect();
    let mut distinct = rows.clone();
    distinct.sort();
    distinct.dedup();
    assert_eq!(distinct.len(), 2);
    let mut sizes: Vec<usize> = distinct.iter().map(|y| rows.iter().filter(|r| *r == y).count()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![3, 5]);
}

#[test]
fn infeasible_members_exit_with_an_error() {
    let (code, j) = run(&["generate", "--family", "onesided-general", "--k", "0"]);
    assert_eq!(code, 2);
    assert!(j["error"].is_string());
    assert_eq!(run(&["generate", "--family", "nosuch", "--n", "9"]).0, 2);
    assert_eq!(run(&["generate", "--family", "waterlily"]).0, 2);
}

#[test]
fn k3n_geometry() {
    let dir = TempDir::new().unwrap();
    let out = prefix(&dir, "k3n");
    let (code, j) = run(&["generate", "--family", "k3n", "--k", "3", "--mirror", "--out", &out]);
    assert_eq!(code, 0);
    assert_eq!(j["n"], 17);
    assert_eq!(j["crossingPairs"], 42);
    assert_eq!(j["maxCrossingsPerEdge"], 3);
    let geo: Value = serde_json::from_str(&fs::read_to_string(format!("{out}.geometry.json")).unwrap()).unwrap();
    assert!(geo.is_object());
    let (_, j) = run(&["generate", "--family", "k3n", "--k", "2"]);
    assert_eq!(j["crossingPairs"], 10);
}

#[test]
fn validate_with_fewer_sides_reports_v2() {
    let dir = TempDir::new().unwrap();
    let out = prefix(&dir, "dw");
    assert_eq!(run(&["generate", "--family", "double-waterlily", "--n", "12", "--out", &out]).0, 0);
    let (code, j) = run(&["validate", "--in", &format!("{out}.drawing"), "--sides", "1"]);
    assert_eq!(code, 1);
    let rules: Vec<&str> = j["violations"].as_array().unwrap().iter().map(|v| v["rule"].as_str().unwrap()).collect();
    assert!(rules.contains(&"V2"), "{rules:?}");
}

#[test]
fn oracle_subcommand_reports_agreement() {
    let dir = TempDir::new().unwrap();
    let k5 = file(&dir, "k5.graph", &complete_graph(5));
    let (code, j) = run(&["oracle", "--which", "outer3", "--in", &k5]);
    assert_eq!(code, 1);
    assert_eq!(j["agree"], true);
    let c8 = file(&dir, "c8.graph", "p 8 8\nl 1 0\nl 2 1\nl 3 0\nl 4 1\nl 5 0\nl 6 1\nl 7 0\nl 8 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 8\ne 8 1\n");
    let (code, j) = run(&["oracle", "--which", "babysnake", "--in", &c8]);
    assert_eq!(code, 0);
    assert_eq!(j["agree"], true);
    let big = file(&dir, "k9.graph", &complete_graph(9));
    assert_eq!(run(&["oracle", "--which", "outer3", "--in", &big]).0, 2);
}

#[test]
fn reduce3p_nine_item_instance() {
    let dir = TempDir::new().unwrap();
    let out = prefix(&dir, "nine");
    let (code, j) = run(&["reduce3p", "--A", "2,2,2,3,3,3,4,5,6", "--B", "10", "--K", "4", "--out", &out]);
    assert_eq!(code, 0, "{j}");
    assert_eq!(j["stats"]["beamVertices"], 151);
    assert_eq!(j["stats"]["pathLength"], 34);
    assert_eq!(j["stats"]["centralCellEdges"][8], 6);
    assert_eq!(j["rotationValid"], true);
    assert_eq!(j["copiesContiguous"], true);
    assert_eq!(j["expectedYes"], true);
    for ext in ["graph", "rot", "json"] {
        assert!(Path::new(&format!("{out}.{ext}")).exists(), "{ext}");
    }
    let g = fbp::io::parse_graph(&fs::read_to_string(format!("{out}.graph")).unwrap()).unwrap();
    assert!(fbp::io::parse_rotation(&g, &fs::read_to_string(format!("{out}.rot")).unwrap()).is_ok());

    let (_, j) = run(&["reduce3p", "--A", "2,2,2,3,3,3,4,5,6", "--B", "10", "--K", "4", "--model", "2"]);
    assert_eq!(j["stats"]["otherCellEdges"], 8);
    assert_eq!(j["stats"]["centralCellEdges"][8], 12);
}

#[test]
fn reduce3p_rejects_bad_instances() {
    assert_eq!(run(&["reduce3p", "--A", "1,1,1,1,1,2", "--B", "3"]).0, 2);
    assert_eq!(run(&["reduce3p", "--A", "3,3,4", "--B", "10", "--model", "3"]).0, 2);
}

#[test]
fn render_honours_the_layout_flag() {
    let dir = TempDir::new().unwrap();
    let out = prefix(&dir, "o");
    assert_eq!(run(&["generate", "--family", "onesided-outer", "--q", "3", "--out", &out]).0, 0);
    let svg = prefix(&dir, "o2.svg");
    let (code, j) = run(&["render", "--in", &format!("{out}.drawing"), "--layout", "barycentric", "--out", &svg]);
    assert_eq!(code, 0, "{j}");
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(count(&text, "vertex"), 11);
    assert!(text.trim_end().ends_with("</svg>"));
}

#[test]
fn density_report_rows() {
    let (code, j) = run(&["density-report", "--family", "bn", "--max-n", "40"]);
    assert_eq!(code, 0);
    assert_eq!(j["rows"].as_array().unwrap().len(), 12);
    let (code, j) = run(&["density-report", "--family", "double-waterlily", "--max-n", "12"]);
    assert_eq!(code, 1);
    assert!(j["rows"][0]["error"].is_string());
    assert_eq!(j["rows"][3]["tight"], true);
}

#[test]
fn usage_errors_exit_2_and_help_exits_0() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["recognize", "--class", "outer3"]).0, 2);
    assert_eq!(run(&["recognize", "--class", "outer3", "--in", "/nonexistent/g.graph"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
