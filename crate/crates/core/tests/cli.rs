use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylphi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn phi_single_class() {
    let o = run(&["phi", "--type", "C", "--rank", "3", "--class", "[];[2,1]", "--json"]);
    assert!(o.status.success());
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["phi"], "(4,2)");
    assert_eq!(rows[0]["d_C"], "5");
    assert_eq!(rows[0]["distinguished"], "yes");
}

#[test]
fn phi_paren_grammar_and_prefix() {
    let o = run(&["phi", "--type", "C", "--rank", "3", "--class", "(;2,1)", "--json"]);
    assert_eq!(json_lines(&o)[0]["phi"], "(4,2)");
    let o = run(&["phi", "--type", "F4", "--class", "F4:2.2.6'", "--json"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["d_C"], "10");
}

#[test]
fn phi_g2_and_e8() {
    let rows = json_lines(&run(&["phi", "--type", "G2", "--json"]));
    let names: Vec<&str> = rows.iter().filter(|r| r["elliptic"] == "yes").map(|r| r["phi"].as_str().unwrap()).collect();
    assert_eq!(names, ["~A_1", "G_2(a_1)", "G_2"]);
    assert!(rows.len() > 3);
    let e8 = json_lines(&run(&["phi", "--type", "E8", "--elliptic", "--json"]));
    assert_eq!(e8.len(), 30);
}

#[test]
fn excellent_csv() {
    let o = run(&["excellent", "--type", "C", "--rank", "3", "--partition", "2,1", "--csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "type,partition,word,length,d_C,valid\nC3,\"(2,1)\",(3)(232)(1),5,5,yes\n");
}

#[test]
fn verify_is_deterministic_and_passes() {
    let a = run(&["verify", "--suite", "tables", "jordan", "--max-n", "4", "--json"]);
    let b = run(&["verify", "--suite", "tables", "jordan", "--max-n", "4", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    for r in json_lines(&a) {
        assert_eq!(r["status"], "pass", "{r}");
        assert!(r["suite"].is_string() && r["case"].is_string());
    }
}

#[test]
fn verify_one_group() {
    let o = run(&["verify", "--suite", "fq", "--group", "sp4", "--q", "3", "--json"]);
    assert!(o.status.success());
    let rows = json_lines(&o);
    assert!(rows.iter().all(|r| r["case"].as_str().unwrap().starts_with("sp4(F_3)")));
}

#[test]
fn budget_override_is_honored() {
    let o = Command::new(env!("CARGO_BIN_EXE_weylphi"))
        .args(["verify", "--suite", "fq", "--group", "sp4", "--q", "3"])
        .env("WEYLPHI_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn errors_exit_nonzero() {
    assert_eq!(run(&["phi", "--type", "C", "--rank", "3", "--class", "[2];[2]"]).status.code(), Some(2));
    assert_eq!(run(&["phi", "--type", "C"]).status.code(), Some(2));
    assert!(!run(&["excellent", "--type", "D", "--rank", "3", "--partition", "3"]).status.success());
}

#[test]
fn help_documents_labels_and_budget() {
    let h = stdout(&run(&["phi", "--help"]));
    assert!(h.contains("F4:2.2.6'") && h.contains("(α;β)") && h.contains("WEYLPHI_BUDGET"));
}
