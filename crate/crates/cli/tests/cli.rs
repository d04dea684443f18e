use std::process::{Command, Output};

use serde_json::Value;

fn skewcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewcount")).args(args).env_remove("SKEWCOUNT_CAP").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn count_examples() {
    let out = skewcount(&["count", "2,1", "--method", "det"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n");
    assert_eq!(stdout(&skewcount(&["count", "1", "--method", "tilings"])), "2\n");
}

#[test]
fn figure_shape_by_det_and_dp() {
    let det = stdout(&skewcount(&["count", "9,7,6,2/3,1", "--method", "det"]));
    let dp = stdout(&skewcount(&["count", "9,7,6,2/3,1", "--method", "dp"]));
    assert_eq!(det, dp);
    assert_eq!(det, "399\n");
}

#[test]
fn every_method_agrees_on_a_small_shape() {
    for m in ["det", "dp", "enum", "tilings", "gv", "gv-det"] {
        assert_eq!(stdout(&skewcount(&["count", "3,3,1/1", "--method", m])), "15\n", "method {m}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(skewcount(&["count", "1,2"]).status.code(), Some(2));
    assert_eq!(skewcount(&["count", "2/3"]).status.code(), Some(2));
    assert_eq!(skewcount(&["count", "4,4,4", "--method", "enum", "--cap", "3"]).status.code(), Some(3));
    assert_eq!(skewcount(&["render", "1", "--tiling", "2"]).status.code(), Some(2));
    assert_eq!(skewcount(&["render", "2,1", "--path", "EENN"]).status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_skewcount"))
        .args(["count", "4,4,4", "--method", "enum"])
        .env("SKEWCOUNT_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_box_3x3_agrees() {
    let out = skewcount(&["verify", "--box", "3x3"]);
    assert!(out.status.success());
    let reports = json_lines(&out);
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["agree"] == true && r["matrix_identity"] == true));
}

#[test]
fn verify_degenerate_shape() {
    let out = skewcount(&["verify", "3,1/2"]);
    assert!(out.status.success());
    let r = &json_lines(&out)[0];
    assert_eq!(r["agree"], true);
    for k in ["det", "dp", "enum", "tilings", "gv_enum", "gv_det"] {
        assert_eq!(r["counts"][k], "4", "{k}");
    }
}

#[test]
fn verify_box_1x1_is_a_single_shape() {
    let out = skewcount(&["verify", "--box", "1x1", "--no-timings"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        concat!(
            r#"{"shape":"1","counts":{"det":"2","dp":"2","enum":"2","tilings":"2","gv_enum":"2","gv_det":"2"},"#,
            r#""matrix_identity":true,"agree":true}"#,
            "\n"
        )
    );
}

#[test]
fn verify_sequential_order_is_canonical() {
    let a = stdout(&skewcount(&["verify", "--box", "2x2", "--jobs", "1", "--no-timings"]));
    let b = stdout(&skewcount(&["verify", "--box", "2x2", "--jobs", "1", "--no-timings"]));
    assert_eq!(a, b);
    let shapes: Vec<String> =
        a.lines().map(|l| serde_json::from_str::<Value>(l).unwrap()["shape"].as_str().unwrap().to_string()).collect();
    assert_eq!(shapes.len(), 14);
    assert_eq!(shapes[0], "1");
}

#[test]
fn verify_skips_capped_methods() {
    let out = skewcount(&["verify", "4,4,4", "--cap", "3"]);
    assert!(out.status.success());
    let r = &json_lines(&out)[0];
    assert_eq!(r["counts"]["enum"], Value::Null);
    assert_eq!(r["counts"]["det"], "35");
}

#[test]
fn enumerate_paths_text() {
    assert_eq!(stdout(&skewcount(&["enumerate", "1", "paths"])), "EN\nNE\n");
}

#[test]
fn enumerate_tilings_json() {
    let items = json_lines(&skewcount(&["enumerate", "2,1", "tilings", "--format", "json"]));
    assert_eq!(items.len(), 5);
    for (i, t) in items.iter().enumerate() {
        assert_eq!(t["index"], i);
        assert_eq!(t["lozenges"].as_array().unwrap().len(), 7);
    }
}

#[test]
fn enumerate_families() {
    let items = json_lines(&skewcount(&["enumerate", "2,1", "families", "--format", "json"]));
    assert_eq!(items.len(), 5);
    assert!(items.iter().all(|f| f["paths"].as_array().unwrap().len() == 2));
    assert_eq!(stdout(&skewcount(&["enumerate", "2,1", "families"])).lines().count(), 5);
}

#[test]
fn enumerate_truncates() {
    let text = stdout(&skewcount(&["enumerate", "2,1", "paths", "--limit", "2"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].contains("truncated"));
    let json = json_lines(&skewcount(&["enumerate", "2,1", "paths", "--limit", "2", "--format", "json"]));
    assert_eq!(json.last().unwrap()["truncated"], true);
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for f in [&a, &b] {
        let out = skewcount(&["render", "9,7,6,2/3,1", "--tiling", "0", "--shade", "both", "-o", f.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let svg = std::fs::read(&a).unwrap();
    assert_eq!(svg, std::fs::read(&b).unwrap());
    let svg = String::from_utf8(svg).unwrap();
    assert!(svg.contains("id=\"contour\""));
}

#[test]
fn render_unit_hexagon() {
    let out = skewcount(&["render", "1", "--path", "EN"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert_eq!(svg.matches("<polygon class=\"T").count(), 3);
}
