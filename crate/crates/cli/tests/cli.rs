use std::collections::{BTreeSet, HashMap};
use std::process::{Command, Output};

fn typeb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typeb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = typeb(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn order_chain_for_two() {
    let out = stdout(&["order", "--n", "2", "--r", "0", "--format", "text"]);
    assert_eq!(out, golden("order_n2_r0.txt"));
    assert_eq!(out, "(∅;11) ◁ (11;∅) ◁ (1;1) ◁ (∅;2) ◁ (2;∅)\n");
    let inf = stdout(&["order", "--n", "2", "--r", "inf"]);
    assert_eq!(inf, "(∅;11) ◁ (∅;2) ◁ (1;1) ◁ (11;∅) ◁ (2;∅)\n");
}

#[test]
fn order_diagram_for_three() {
    assert_eq!(
        stdout(&["order", "--n", "3", "--r", "0", "--format", "dot"]),
        golden("order_n3_r0.dot")
    );
}

/// `(source, label, target)` triples of a crystal DOT file.
fn dot_edges(dot: &str) -> BTreeSet<(String, usize, String)> {
    let mut names = HashMap::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((id, rest)) = line.split_once(" [label=\"") {
            let label = rest.trim_end_matches("\"];");
            match id.split_once(" -> ") {
                Some((a, b)) => edges.push((a.to_string(), label.parse().unwrap(), b.to_string())),
                None => {
                    names.insert(id.to_string(), label.to_string());
                }
            }
        }
    }
    edges
        .into_iter()
        .map(|(a, l, b)| (names[&a].clone(), l, names[&b].clone()))
        .collect()
}

#[test]
fn crystal_dot_for_the_zero_charge() {
    let out = stdout(&[
        "crystal", "--charge", "0,0", "--e", "2", "--n", "4", "--format", "dot",
    ]);
    assert_eq!(out, golden("crystal_00_e2_n4.dot"));
    let expected: BTreeSet<(String, usize, String)> = [
        ("(∅;∅)", 0, "(1;∅)"),
        ("(1;∅)", 0, "(1;1)"),
        ("(1;∅)", 1, "(2;∅)"),
        ("(1;1)", 1, "(2;1)"),
        ("(2;∅)", 0, "(3;∅)"),
        ("(2;∅)", 1, "(21;∅)"),
        ("(21;∅)", 0, "(31;∅)"),
        ("(3;∅)", 0, "(3;1)"),
        ("(3;∅)", 1, "(4;∅)"),
        // Drawn with label 0; the node added has residue 1.
        ("(2;1)", 1, "(2;2)"),
    ]
    .iter()
    .map(|&(a, l, b)| (a.to_string(), l, b.to_string()))
    .collect();
    assert_eq!(dot_edges(&out), expected);
}

#[test]
fn charge_from_parameters() {
    assert_eq!(
        stdout(&["charge", "--r", "2", "--d", "0", "--e", "2"]),
        "(2,0)\n"
    );
    assert_eq!(
        stdout(&["charge", "--r", "0", "--d", "1", "--e", "2"]),
        "(-1,0)\n"
    );
}

#[test]
fn json_carries_schema_and_is_stable() {
    let args = [
        "canbasis", "--n", "3", "--charge", "1,0", "--e", "3", "--format", "json",
    ];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["command"], "canbasis");
}

#[test]
fn decomposition_matrix_tsv() {
    let out = stdout(&[
        "decmat", "--n", "1", "--charge", "0,0", "--e", "2", "--format", "tsv",
    ]);
    assert_eq!(out, "λ\\μ\t(1;∅)\n(1;∅)\t1\n(∅;1)\tv\n");
    let ones = stdout(&[
        "decmat", "--n", "2", "--r", "0", "--e", "2", "--at-one", "--format", "tsv",
    ]);
    assert!(ones.lines().skip(1).all(|l| !l.contains('v')));
}

#[test]
fn checks_exit_zero_when_they_pass() {
    for args in [
        &["check-conj-a", "--n", "2", "--r", "1"][..],
        &["check-cellular", "--n", "2", "--r", "0"],
        &["insert", "--verify", "--n", "3", "--r", "2"],
        &["theorem41", "--n", "2", "--e", "2", "--r", "0"],
        &[
            "uglov", "--n", "4", "--charge", "0,1", "--e", "2", "--flotw",
        ],
    ] {
        assert_eq!(typeb(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["nonsense"][..],
        &["order", "--n", "2", "--format", "tsv"],
        &["klbasis", "--n", "1", "--r", "1", "--xi", "1/2"],
        &[
            "crystal", "--charge", "0,0", "--d", "1", "--e", "2", "--n", "2",
        ],
        &["canbasis", "--n", "2", "--e", "2"],
        &["bip", "--n", "2", "--bound", "bogus=3"],
        &["klbasis", "--n", "1", "--xi", "2/1"],
    ] {
        let out = typeb(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(typeb(&["--help"]).status.code(), Some(0));
}

#[test]
fn bounds_are_enforced_and_overridable() {
    let out = typeb(&["klbasis", "--n", "5", "--r", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
    assert_eq!(
        stdout(&["bip", "--n", "1", "--bound", "kl=2"]),
        "(1;∅)\n(∅;1)\n"
    );
}

#[test]
fn insertion_text() {
    let out = stdout(&["insert", "--w", "-1", "--r", "0"]);
    assert!(out.ends_with("λ = (∅;1)\n"), "{out}");
}

#[test]
fn specht_at_minus_one() {
    let out = stdout(&[
        "specht", "--n", "1", "--r", "0", "--e", "2", "--format", "tsv",
    ]);
    assert_eq!(out, "λ\\μ\t(1;∅)\n(1;∅)\t1\n(∅;1)\t1\n");
}
