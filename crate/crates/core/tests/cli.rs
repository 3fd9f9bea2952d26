use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blocktrans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_lines() {
    let o = run(&["enumerate", "--n", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.lines().next().unwrap(), "(0,1,2)  L  2 1 3");
    let o = run(&["enumerate", "--n", "5", "--class", "B"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).lines().all(|l| l.contains("  B  ")));
    assert_eq!(run(&["enumerate", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn graph_export() {
    let o = run(&["graph", "--n", "5", "--kind", "bt", "--format", "edges"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| !l.starts_with('#')).count(), 60);
    let o = run(&["graph", "--n", "5", "--kind", "btv", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("label=").count(), 12);
    assert_eq!(run(&["graph", "--n", "9", "--kind", "cayley"]).status.code(), Some(2));
    let o = run(&["graph", "--n", "3", "--kind", "cayley", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn graph_to_file() {
    let path = std::env::temp_dir().join(format!("blocktrans-cli-{}.json", std::process::id()));
    let o = run(&["graph", "--n", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 4);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--n", "6", "--suite", "regularity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2(n-2)=8"));
    let o = run(&["verify", "--n", "5", "--suite", "cliques"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("EXPECTED 6 GOT 6 PASS"));
    let o = run(&["verify", "--n", "6", "--suite", "n_trivial"]);
    assert_eq!(o.status.code(), Some(0));
    // the 3-regular claim at n = 4 does not hold
    let o = run(&["verify", "--n", "4", "--suite", "regularity"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["verify", "--n", "7", "--suite", "n_trivial"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "5", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_json_mirrors_text() {
    let text = stdout(&run(&["verify", "--n", "5", "--suite", "hamiltonian"]));
    let json = stdout(&run(&["verify", "--n", "5", "--suite", "hamiltonian", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), text.lines().count());
    for (c, line) in checks.iter().zip(text.lines()) {
        let rebuilt = format!(
            "CLAIM {} EXPECTED {} GOT {} {}",
            c["claim"].as_str().unwrap(),
            c["expected"].as_str().unwrap(),
            c["got"].as_str().unwrap(),
            if c["pass"].as_bool().unwrap() { "PASS" } else { "FAIL" }
        );
        assert_eq!(rebuilt, line);
    }
}

#[test]
fn distance_and_trace() {
    let o = run(&["distance", "--n", "3", "--perm", "3 2 1"]);
    assert_eq!(stdout(&o), "2\n");
    let o = run(&["distance", "--n", "3", "--perm", "3 2 1", "--trace"]);
    assert_eq!(stdout(&o), "2\n(0,1,2) -> 2 3 1\n(0,2,3) -> 1 2 3\n");
    assert_eq!(run(&["distance", "--n", "4", "--perm", "3 2 1"]).status.code(), Some(2));
    assert_eq!(run(&["distance", "--n", "3", "--perm", "3 3 1"]).status.code(), Some(2));
}

#[test]
fn aut_and_hampath() {
    let o = run(&["aut", "--n", "5", "--graph", "bt"]);
    assert_eq!(stdout(&o), "order 12; generators: f, g\n");
    let o = run(&["aut", "--n", "4", "--graph", "cayley"]);
    assert!(stdout(&o).starts_with("order 240;"));
    let o = run(&["hampath", "--n", "5"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[0], "(0,2,3)");
    assert!(lines[12].ends_with("PASS"));
    assert_eq!(run(&["hampath", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn output_independent_of_threads() {
    for args in [
        vec!["graph", "--n", "5", "--kind", "cayley", "--format", "edges"],
        vec!["verify", "--n", "5", "--suite", "all"],
    ] {
        let one = run(&[&["--threads", "1"], args.as_slice()].concat());
        let four = run(&[&["--threads", "4"], args.as_slice()].concat());
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout);
    }
}
