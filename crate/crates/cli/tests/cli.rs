use geom_core::io::points_from_json;
use std::path::Path;
use std::process::{Command, Output};
use verify::{gen_random, Distribution};

fn spanloc(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spanloc")).args(args).current_dir(dir).output().expect("binary runs")
}

fn code(dir: &Path, args: &[&str]) -> i32 {
    let out = spanloc(dir, args);
    out.status.code().expect("exit code")
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn example_pipeline_exits_zero() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--kind", "uniform", "--n", "100", "--seed", "7", "--out", "pts.json"]), 0);
    assert_eq!(code(d.path(), &["build", "--variant", "homothet", "--shape", "square", "--eps", "0.25"]), 0);
    assert_eq!(code(d.path(), &["verify", "--trials", "500"]), 0);
}

#[test]
fn homothet_eps_above_half_is_usage_error() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "20"]), 0);
    assert_eq!(code(d.path(), &["build", "--variant", "homothet", "--eps", "0.6"]), 2);
}

#[test]
fn unknown_flags_and_values_exit_two() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["build", "--bogus"]), 2);
    assert_eq!(code(d.path(), &["gen", "--kind", "spiral"]), 2);
    assert_eq!(code(d.path(), &["frobnicate"]), 2);
    assert_eq!(code(d.path(), &[]), 2);
    assert_eq!(code(d.path(), &["--help"]), 0);
}

#[test]
fn missing_input_is_usage_error() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["build", "--in", "absent.json"]), 2);
}

#[test]
fn bad_shape_is_usage_error() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "20"]), 0);
    assert_eq!(code(d.path(), &["build", "--shape", "regular-2"]), 2);
    assert_eq!(code(d.path(), &["build", "--shape", "blob"]), 2);
    assert_eq!(code(d.path(), &["build", "--variant", "fat-triangle", "--shape", "square"]), 2);
}

#[test]
fn gen_round_trips_bit_exactly() {
    let d = tempfile::tempdir().unwrap();
    for (kind, dist) in [("uniform", Distribution::Uniform), ("clustered", Distribution::Clustered)] {
        assert_eq!(code(d.path(), &["gen", "--kind", kind, "--n", "300", "--seed", "11", "--out", "p.json"]), 0);
        let loaded = points_from_json(&std::fs::read_to_string(d.path().join("p.json")).unwrap()).unwrap();
        let direct = gen_random(300, dist, 11).unwrap();
        assert_eq!(loaded.len(), direct.len());
        for i in 0..direct.len() {
            let (a, b) = (loaded.pos(i), direct.pos(i));
            assert_eq!((a.x.to_bits(), a.y.to_bits()), (b.x.to_bits(), b.y.to_bits()), "{kind} point {i}");
        }
    }
}

#[test]
fn lower_bound_files_carry_forced_edges() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--kind", "lower-disk", "--n", "8", "--phi", "256", "--out", "lb.json"]), 0);
    let doc = json(&d.path().join("lb.json"));
    assert_eq!(doc["forced_edges"].as_array().unwrap().len(), 8 * 8);
    assert_eq!(code(d.path(), &["gen", "--kind", "lower-triangle", "--n", "8", "--phi", "64", "--out", "lt.json"]), 0);
    let doc = json(&d.path().join("lt.json"));
    assert_eq!(doc["shape"]["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn every_output_references_its_manifest() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    assert_eq!(code(p, &["gen", "--n", "40", "--seed", "3"]), 0);
    assert_eq!(json(&p.join("points.json"))["manifest"]["command"], "gen");
    assert_eq!(code(p, &["build", "--variant", "weak-rect", "--eps", "0.3", "--delta", "0.3"]), 0);
    let g = json(&p.join("graph.json"));
    assert_eq!(g["manifest"]["command"], "build");
    assert_eq!(g["manifest"]["config"]["variant"], "weak-rect");
    assert_eq!(code(p, &["verify", "--trials", "50", "--out", "report.json"]), 0);
    assert_eq!(json(&p.join("report.json"))["manifest"]["command"], "verify");
    assert_eq!(code(p, &["stats", "--out", "stats.json"]), 0);
    assert_eq!(json(&p.join("stats.json"))["manifest"]["command"], "stats");
    assert_eq!(code(p, &["export-svg", "--graph", "graph.json", "--out", "g.svg"]), 0);
    let svg = std::fs::read_to_string(p.join("g.svg")).unwrap();
    assert!(svg.contains("g.svg.manifest.json"));
    assert_eq!(json(&p.join("g.svg.manifest.json"))["command"], "export-svg");
    assert_eq!(code(p, &["bench", "--n", "20", "--trials", "10", "--out", "b.csv"]), 0);
    assert_eq!(json(&p.join("b.csv.manifest.json"))["command"], "bench");
}

#[test]
fn empty_edge_set_renders_points_only() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "25"]), 0);
    std::fs::write(d.path().join("empty.json"), r#"{"n":25,"edges":[]}"#).unwrap();
    assert_eq!(code(d.path(), &["export-svg", "--graph", "empty.json", "--out", "e.svg"]), 0);
    let svg = std::fs::read_to_string(d.path().join("e.svg")).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<circle").count(), 25);
    assert_eq!(svg.matches("<line").count(), 0);
    assert_eq!(svg.matches('<').count(), svg.matches('>').count());
}

#[test]
fn region_overlay_is_drawn() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "10"]), 0);
    std::fs::write(d.path().join("r.json"), r#"{"type":"homothet","t":[0.5,0.5],"lambda":0.2}"#).unwrap();
    assert_eq!(code(d.path(), &["export-svg", "--region", "r.json", "--shape", "hexagon", "--out", "r.svg"]), 0);
    assert_eq!(std::fs::read_to_string(d.path().join("r.svg")).unwrap().matches("<polygon").count(), 1);
    assert_eq!(code(d.path(), &["export-svg", "--region", "r.json", "--out", "r.svg"]), 2);
}

#[test]
fn sparse_graph_fails_verification_with_exit_one() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "30", "--seed", "5"]), 0);
    let path: Vec<String> = (0..29).map(|i| format!("[{i},{}]", i + 1)).collect();
    std::fs::write(d.path().join("path.json"), format!(r#"{{"n":30,"edges":[{}]}}"#, path.join(","))).unwrap();
    let out = spanloc(d.path(), &["verify", "--graph", "path.json", "--variant", "homothet", "--trials", "200"]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn every_variant_builds_and_verifies() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "40", "--seed", "9"]), 0);
    for v in ["homothet", "disk", "fat-triangle", "nice-polygon", "weak-convex", "weak-rect", "theta"] {
        let out = format!("{v}.json");
        assert_eq!(code(d.path(), &["build", "--variant", v, "--eps", "0.4", "--out", &out]), 0, "{v}");
        assert_eq!(code(d.path(), &["verify", "--graph", &out, "--trials", "100"]), 0, "{v}");
    }
    assert_eq!(code(d.path(), &["build", "--shape", "regular-8", "--out", "oct.json"]), 0);
    assert_eq!(code(d.path(), &["verify", "--graph", "oct.json", "--faults", "5", "--trials", "50"]), 0);
}

#[test]
fn bench_csv_is_reproducible_apart_from_timing() {
    let d = tempfile::tempdir().unwrap();
    let args = ["bench", "--n", "30,50", "--phi", "1,64", "--eps-list", "0.25,0.4", "--trials", "20", "--seed", "2"];
    let run = |name: &str| {
        let mut a = args.to_vec();
        a.extend(["--out", name]);
        assert_eq!(code(d.path(), &a), 0);
        let mut r = csv::Reader::from_path(d.path().join(name)).unwrap();
        let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
        let rows: Vec<Vec<String>> = r.records().map(|x| x.unwrap().iter().map(String::from).collect()).collect();
        (header, rows)
    };
    let (h1, r1) = run("a.csv");
    let (h2, r2) = run("b.csv");
    assert_eq!(h1, ["construction", "n", "phi", "eps", "delta", "edges", "maxDilation", "seconds"]);
    assert_eq!(h1, h2);
    assert_eq!(r1.len(), 8);
    for (x, y) in r1.iter().zip(&r2) {
        assert_eq!(x[..7], y[..7]);
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(d.path(), &["gen", "--n", "60", "--seed", "4"]), 0);
    let run = |threads: &str, out: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_spanloc"))
            .args(["build", "--variant", "nice-polygon", "--shape", "hexagon", "--out", out])
            .env("SPANLOC_THREADS", threads)
            .current_dir(d.path())
            .output()
            .unwrap();
        assert!(o.status.success());
        json(&d.path().join(out))["edges"].clone()
    };
    assert_eq!(run("1", "a.json"), run("0", "b.json"));
}
