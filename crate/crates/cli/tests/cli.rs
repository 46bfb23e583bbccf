use std::fs;
use std::process::{Command, Output};

fn gos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classify_ladder_json() {
    let o = gos(&["classify", "ladder:5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orientable"], true);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["boundary"], 1);
    assert_eq!(v["r"], 4);
    assert_eq!(v["V"], 10);
    assert_eq!(v["E"], 13);
    assert_eq!(v["homology"]["h1_rank"], 4);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["orientable", "genus", "boundary", "r", "V", "E", "homology"]);
}

#[test]
fn classify_text_with_checks() {
    let o = gos(&["classify", "ladder:6", "--format", "text", "--check"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("orientable, genus 2, 2 boundary"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn validate_rejects_tau_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.gos");
    fs::write(&path, "vertices 1\nv 1 : 1 2\ne 1 1 +\ne 2 2 +\n").unwrap();
    let o = gos(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("tau fixed point"));
}

#[test]
fn validate_accepts_and_renumbers_user_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theta.gos");
    fs::write(&path, "vertices 2\nv 1 : 10 20 30\nv 2 : 40 60 50\ne 10 40 +\ne 20 50 -\ne 30 60 +\n").unwrap();
    let o = gos(&["validate", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "valid: V = 2, E = 3 (labels renumbered)\n");
}

#[test]
fn census_petersen_all_plus_csv() {
    let o = gos(&["census", "petersen", "--all-plus"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "class,genus,boundary,count\norientable,1,5,40\norientable,2,3,664\norientable,3,1,320\n"
    );
}

#[test]
fn census_budget_is_a_usage_error() {
    let o = gos(&["census", "petersen", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("33554432"));
}

#[test]
fn census_fix_sign() {
    let o = gos(&["census", "loop:+", "--fix-sign", "1=-", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 1);
    assert_eq!(v["classes"][0]["orientable"], false);
    assert_eq!(gos(&["census", "loop:+", "--fix-sign", "2=-"]).status.code(), Some(2));
}

#[test]
fn build_trace_prints_case_labels() {
    let o = gos(&["build", "theta:crossed", "--trace"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("I-1(a)"));
    assert!(out.contains("b = 1, orientable"));
    // valency 2 is outside the builder's domain
    assert_eq!(gos(&["build", "ladder:3"]).status.code(), Some(1));
}

#[test]
fn generate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.gos");
    let o = gos(&["generate", "petersen:0:spokes-minus", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("vertices 10\n"));
    let o = gos(&["generate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let c = gos(&["classify", path.to_str().unwrap(), "--format", "text"]);
    assert!(c.status.success());
    let norm = gos(&["normalize", path.to_str().unwrap()]);
    assert!(norm.status.success());
    assert!(!stdout(&norm).contains(" -\n"));
}

#[test]
fn normalize_rejects_non_orientable() {
    assert_eq!(gos(&["normalize", "loop:-"]).status.code(), Some(1));
}

#[test]
fn boundary_and_orientable() {
    let o = gos(&["boundary", "loop:+", "--piles"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2\n"));
    let o = gos(&["orientable", "theta:planar:+-+", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orientable"], false);
}

#[test]
fn render_writes_svg() {
    let o = gos(&["render", "ladder:3"]);
    assert!(o.status.success());
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="twist""#).count(), 3);
}

#[test]
fn unknown_family_and_bad_flags() {
    assert_eq!(gos(&["classify", "nosuchfile.gos"]).status.code(), Some(2));
    assert_eq!(gos(&["classify", "ladder:x"]).status.code(), Some(2));
    assert_eq!(gos(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn achievability_small_bound() {
    let o = gos(&["achievability", "--max-vertices", "2", "--max-edges", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("disc found: false"));
    assert!(out.contains("annulus or Möbius on a trivalent skeleton: false"));
}
