use ncluster::cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    let argv = std::iter::once("ncluster").chain(args.iter().copied());
    run(argv, &mut std::io::empty())
}

fn json_of(o: &Outcome) -> Value {
    assert_eq!(o.code, 0, "stderr: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn validate_accepts_and_rejects() {
    let ok = cli(&["arcs", "validate", "-n", "3", "--json", "[[1,5],[0,7]]"]);
    let v = json_of(&ok);
    assert_eq!(v["valid"], true);
    assert_eq!(v["components"], serde_json::json!([1, 0]));

    let bad = cli(&["arcs", "validate", "-n", "3", "--json", "[[1,4]]"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.starts_with("error: "), "{}", bad.stderr);
    assert!(bad.stderr.contains("length 3 ≢ 1 (mod 3)"), "{}", bad.stderr);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["arcs", "validate", "--json", "[[1,5]]"][..],
        &["arcs", "validate", "-n", "0", "--json", "[[1,5]]"],
        &["arcs", "validate", "-n", "3", "--json", "[[1,5"],
        &["arcs", "enumerate", "-n", "2", "--window", "5", "1"],
        &["k0", "verify", "-n", "2", "--m", "0"],
        &["bogus"],
    ] {
        let o = cli(args);
        assert_eq!(o.code, 2, "{args:?} -> {o:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn angulation_check_exit_codes() {
    let crossing = cli(&["angulation", "check", "-n", "1", "--json", "[[0,2],[1,3]]"]);
    assert_eq!(crossing.code, 1);
    assert_eq!(
        serde_json::from_str::<Value>(&crossing.stdout).unwrap()["noncrossing"],
        false
    );

    let maximal = cli(&[
        "angulation",
        "check",
        "-n",
        "3",
        "--window",
        "0",
        "5",
        "--json",
        "[[1,5]]",
    ]);
    let v = json_of(&maximal);
    assert_eq!(v["window_maximal"], true);
    assert_eq!(v["certificate"], "window-local certificate");

    let open = cli(&[
        "angulation",
        "check",
        "-n",
        "1",
        "--window",
        "0",
        "3",
        "--json",
        "[[0,2]]",
    ]);
    assert_eq!(open.code, 1);
    assert_eq!(
        serde_json::from_str::<Value>(&open.stdout).unwrap()["witness"],
        serde_json::json!([0, 3])
    );
}

#[test]
fn completion_and_enumeration() {
    let v = json_of(&cli(&[
        "angulation",
        "complete",
        "-n",
        "1",
        "--window",
        "0",
        "3",
        "--json",
        "[]",
    ]));
    assert_eq!(v["arcs"], serde_json::json!([[0, 2], [0, 3]]));
    let v = json_of(&cli(&["arcs", "enumerate", "-n", "2", "--window", "-1", "3"]));
    assert_eq!(v["arcs"], serde_json::json!([[-1, 2], [0, 3]]));
}

#[test]
fn k0_verify_summary_and_json() {
    let o = cli(&["k0", "verify", "-n", "3", "--m", "20", "--format", "text"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "free_rank=1, torsion=[], classes alternate\n");
    let v = json_of(&cli(&["k0", "verify", "-n", "4", "--m", "10"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["free_rank"], 1);
}

#[test]
fn k0_present_canonical_even() {
    let v = json_of(&cli(&[
        "k0",
        "present",
        "-n",
        "2",
        "--json",
        r#"{"n":2,"family":"canonical","m":6}"#,
    ]));
    assert_eq!(v["presentation"], "canonical");
    assert_eq!(v["free_rank"], 1);
    assert_eq!(v["invariant_factors"], serde_json::json!([]));
    let classes = v["classes"].as_object().unwrap();
    let mut got: Vec<i64> = classes.values().map(|c| c[0].as_i64().unwrap()).collect();
    got.sort();
    assert_eq!(got, (1..=6).collect::<Vec<_>>());
    assert_eq!(classes["[1,4]"], serde_json::json!([1]));
}

#[test]
fn k0_present_explicit_is_an_upper_bound() {
    let v = json_of(&cli(&["k0", "present", "-n", "3", "--json", "[[1,5],[-2,5],[-2,8]]"]));
    assert_eq!(v["presentation"], "upper-bound presentation");
}

#[test]
fn svg_outputs_parse() {
    let o = cli(&[
        "render",
        "arcs",
        "-n",
        "3",
        "--window",
        "-8",
        "12",
        "--json",
        r#"{"n":3,"family":"canonical","m":5}"#,
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let doc = roxmltree::Document::parse(&o.stdout).unwrap();
    let arcs = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("arc"))
        .count();
    assert_eq!(arcs, 5);

    let o = cli(&[
        "render",
        "quiver",
        "-n",
        "3",
        "--component",
        "2",
        "--columns",
        "-4",
        "20",
        "--depth",
        "4",
        "--highlight-canonical",
        "6",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let doc = roxmltree::Document::parse(&o.stdout).unwrap();
    let nodes = doc
        .descendants()
        .filter(|n| n.attribute("class").is_some_and(|c| c.starts_with("node")))
        .count();
    assert_eq!(nodes, 18);
}

#[test]
fn svg_format_rejected_for_reports() {
    let o = cli(&["family", "canonical", "-n", "2", "--m", "3", "--format", "svg"]);
    assert_eq!(o.code, 2);
}

#[test]
fn output_file_and_determinism() {
    let path = std::env::temp_dir().join(format!("ncluster-cli-{}.json", std::process::id()));
    let args = [
        "quiver",
        "window",
        "-n",
        "3",
        "--component",
        "1",
        "--columns",
        "-6",
        "18",
        "--depth",
        "4",
    ];
    let direct = cli(&args);
    let mut with_file: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_file.extend(["-o", p]);
    let o = cli(&with_file);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, direct.stdout);
    assert_eq!(cli(&args), direct);
}

#[test]
fn help_exits_zero() {
    let o = cli(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("k0"));
}
