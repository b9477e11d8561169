use std::process::{Command, Output};

use extbar_cli::report::{BarHomologyReport, ExtTableReport, VerifyReport, WordsReport};

fn extbar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extbar"))
        .args(args)
        .output()
        .expect("failed to run extbar")
}

fn extbar_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extbar"))
        .args(args)
        .env(key, value)
        .output()
        .expect("failed to run extbar")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn json_schema_and_round_trip() {
    let o = extbar(&["bar-homology", "--ring", "Z", "--n", "2", "--weight", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["ring"], "Z");
    assert_eq!(v["groups"][1], serde_json::json!({"degree": 12, "free_rank": 0, "torsion": [12]}));
    let rep: BarHomologyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&rep).unwrap() + "\n", text);

    let o = extbar(&["ext-table", "--source", "S", "--target", "Gamma", "--ring", "Fp:3", "--max-weight", "3", "--json"]);
    let text = stdout(&o);
    let rep: ExtTableReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&rep).unwrap() + "\n", text);

    let o = extbar(&["words", "--p", "3", "--height", "4", "--max-degree", "80", "--pairs", "--json"]);
    let text = stdout(&o);
    let rep: WordsReport = serde_json::from_str(&text).unwrap();
    assert!(!rep.pairs.as_ref().unwrap().is_empty());
    assert_eq!(serde_json::to_string(&rep).unwrap() + "\n", text);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["bar-homology", "--ring", "Z", "--n", "2", "--weight", "4", "--m", "2", "--csv"];
    let a = extbar(&args);
    let b = extbar(&args);
    let c = extbar_env(&args, "EXTBAR_THREADS", "1");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let args = ["ext-table", "--source", "S", "--target", "Lambda", "--ring", "Z", "--max-weight", "6"];
    assert_eq!(extbar(&args).stdout, extbar_env(&args, "EXTBAR_THREADS", "2").stdout);
}

#[test]
fn csv_mirrors_json() {
    let o = extbar(&["bar-homology", "--ring", "Z", "--n", "1", "--weight", "4", "--csv"]);
    assert_eq!(
        stdout(&o),
        "schema_version,ring,n,weight,m,degree,free_rank,torsion\n\
         1,Z,1,4,1,9,0,2\n\
         1,Z,1,4,1,10,0,3\n\
         1,Z,1,4,1,11,0,2\n"
    );
    let o = extbar(&["bar-homology", "--ring", "Z", "--n", "1", "--weight", "3", "--csv"]);
    assert_eq!(stdout(&o).lines().skip(1).collect::<Vec<_>>(), ["1,Z,1,3,1,7,0,3", "1,Z,1,3,1,8,0,2"]);
    // an empty table still has its header
    let o = extbar(&["bar-homology", "--ring", "Fp:5", "--n", "1", "--weight", "3", "--csv"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn field_example() {
    let o = extbar(&["bar-homology", "--ring", "Fp:2", "--n", "1", "--weight", "1", "--m", "1", "--json"]);
    let rep: BarHomologyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.groups.len(), 1);
    assert_eq!((rep.groups[0].degree, rep.groups[0].free_rank), (3, 1));
}

#[test]
fn words_examples() {
    let o = extbar(&["words", "--p", "3", "--height", "2", "--max-degree", "99", "--json"]);
    let rep: WordsReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.words.len(), 1);
    assert_eq!(rep.words[0].word, "σσ");

    // height 4 at p = 2: σγ^k σγ^l σσ of degree 2^{k+l+1} + 2^k + 1
    let o = extbar(&["words", "--p", "2", "--height", "4", "--max-degree", "20", "--json"]);
    let rep: WordsReport = serde_json::from_str(&stdout(&o)).unwrap();
    let mut expected = Vec::new();
    for k in 0..5u32 {
        for l in 0..5u32 {
            let d = 2u64.pow(k + l + 1) + 2u64.pow(k) + 1;
            if d <= 20 {
                expected.push(format!("σ{}σ{}σσ", "γ2".repeat(k as usize), "γ2".repeat(l as usize)));
            }
        }
    }
    let mut got: Vec<String> = rep.words.iter().map(|w| w.word.clone()).collect();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);

    // height 3 at odd p: σγ^k σσ and φγ^k σσ
    let o = extbar(&["words", "--p", "3", "--height", "3", "--max-degree", "60", "--json"]);
    let rep: WordsReport = serde_json::from_str(&stdout(&o)).unwrap();
    for w in &rep.words {
        let expected = if w.word.starts_with('φ') {
            2 * 3u64.pow(w.twisting) + 2
        } else {
            2 * 3u64.pow(w.twisting) + 1
        };
        assert_eq!(w.degree, expected, "{}", w.word);
    }
    assert_eq!(rep.words.len(), 7);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["bar-homology", "--ring", "Q", "--n", "1", "--weight", "2"],
        &["bar-homology", "--ring", "Fp:4", "--n", "1", "--weight", "2"],
        &["bar-homology", "--ring", "Z", "--n", "1"],
        &["bar-homology", "--ring", "Z", "--n", "1", "--weight", "2", "--json", "--csv"],
        &["words", "--p", "6", "--height", "3", "--max-degree", "10"],
        &["ext-table", "--source", "S", "--target", "Lambda", "--ring", "Z", "--s", "1"],
        &["ext-table", "--source", "Gamma", "--target", "Lambda", "--ring", "Fp:2", "--method", "bar"],
        &["ext-table", "--source", "X", "--target", "Lambda", "--ring", "Fp:2"],
        &["verify", "--suite", "everything"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(extbar(args).status.code(), Some(2), "{args:?}");
    }
    let o = extbar_env(&["words", "--p", "2", "--height", "3", "--max-degree", "9"], "EXTBAR_THREADS", "zero");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = extbar(&["verify", "--suite", "tables", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rep.passed && rep.first_mismatch.is_none() && rep.checks > 0);
    let o = extbar(&["verify", "--suite", "cartan-field", "--p", "2", "--n", "1", "--max-weight", "4", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("cartan-field: PASS"));
    let o = extbar(&["verify", "--suite", "twist-consistency", "--p", "3", "--max-s", "2", "--max-t", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn ext_table_examples() {
    let o = extbar(&["ext-table", "--source", "Gamma", "--target", "Lambda", "--ring", "Fp:2", "--s", "1", "--t", "1", "--max-weight", "8", "--json"]);
    let rep: ExtTableReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.method, "predict");
    // exterior algebra on generators of weight 4 in degrees (2i+1)·2 - 1, i = 0, 1
    let got: Vec<(u32, i64)> = rep.entries.iter().map(|e| (e.weight, e.cohom_degree)).collect();
    assert_eq!(got, vec![(0, 0), (4, 1), (4, 5), (8, 6)]);

    let o = extbar(&["ext-table", "--source", "S", "--target", "Gamma", "--ring", "Z", "--max-weight", "4", "--max-codegree", "3", "--json"]);
    let rep: ExtTableReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rep.entries.iter().all(|e| e.cohom_degree <= 3));
    assert_eq!(rep.method, "bar");
}
