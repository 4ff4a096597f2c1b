use std::process::Command;

fn richmult(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_richmult")).args(args).output().expect("binary runs")
}

const WORKED: [&str; 8] = ["--d", "5", "--alpha", "1,2,4,6,8", "--beta", "2,4,5,8,10", "--gamma", "3,5,7,9,10"];

#[test]
fn worked_instance_json() {
    let mut args = WORKED.to_vec();
    args.extend(["--method", "both", "--format", "json"]);
    let out = richmult(&args);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["multiplicity"], 4);
    assert_eq!(v["results"]["paths"]["multiplicity"], 4);
    assert_eq!(v["results"]["starsets"]["multiplicity"], 4);
    assert_eq!(v["results"]["starsets"]["max_degree"], 13);
    assert_eq!(v["t_alpha"], serde_json::json!([[1, 5], [6, 10]]));
}

#[test]
fn text_is_default() {
    let out = richmult(&WORKED);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("multiplicity = 4\n"));
    assert!(!text.contains("starsets:"));
}

#[test]
fn order_violation_is_zero() {
    let out = richmult(&["--d", "2", "--alpha", "2,4", "--beta", "1,3", "--gamma", "3,4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fixed point not on variety"));
    assert!(text.ends_with("multiplicity = 0\n"));
}

#[test]
fn malformed_input_exits_2() {
    let out = richmult(&["--d", "2", "--alpha", "1,4", "--beta", "1,3", "--gamma", "3,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not isotropic"));
    let out = richmult(&["--d", "2", "--alpha", "1,x", "--beta", "1,3", "--gamma", "3,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = richmult(&["--d", "2", "--alpha", "1,2", "--beta", "1,3", "--gamma", "3,4", "--method", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exits_3() {
    let mut args = WORKED.to_vec();
    args.extend(["--method", "starsets", "--orbit-budget", "3"]);
    assert_eq!(richmult(&args).status.code(), Some(3));
}

#[test]
fn ordinary_mode() {
    let out = richmult(&[
        "--d", "2", "--mode", "ordinary", "--n", "5", "--alpha", "1,2", "--beta", "2,4", "--gamma", "4,5",
        "--method", "both", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mode"], "ordinary");
    assert_eq!(v["n"], 5);
    assert_eq!(v["results"]["paths"]["multiplicity"], v["results"]["starsets"]["multiplicity"]);
}

#[test]
fn svg_output() {
    let dir = std::env::temp_dir().join(format!("richmult-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("worked.svg");
    let mut args = WORKED.to_vec();
    let p = path.to_str().unwrap().to_string();
    args.extend(["--list-families", "--emit-svg", &p, "--svg-content", "all"]);
    let out = richmult(&args);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches(r#"class="family""#).count(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}
