use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gencomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencomp"))
        .args(args)
        .env_remove("GENCOMP_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write_spec(dir: &TempDir, name: &str, json: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, json).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn values(tsv: &str) -> Vec<String> {
    tsv.lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn compute_examples() {
    let dir = TempDir::new().unwrap();
    let constant = write_spec(&dir, "constant1.json", r#"{"family":"constant","params":{"p":1}}"#);
    let out = gencomp(&["compute", "--spec", arg(&constant), "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\t1\n2\t2\n3\t4\n4\t8\n");

    let catalan = write_spec(&dir, "catalan.json", r#"{"family":"catalan_seq"}"#);
    let out = gencomp(&["compute", "--spec", arg(&catalan), "--n", "4", "--method", "oracle"]);
    assert_eq!(values(&stdout(&out)), ["1", "2", "5", "14"]);

    let floor = write_spec(&dir, "floor.json", r#"{"family":"floor_half"}"#);
    let out = gencomp(&["compute", "--spec", arg(&floor), "--n", "3", "--method", "closed"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).is_empty());
}

#[test]
fn output_is_identical_across_methods() {
    let dir = TempDir::new().unwrap();
    let specs = [
        r#"{"family":"head_tail","params":{"p":2,"q":3}}"#,
        r#"{"family":"quadratic","params":{"k":"1","m":"1","p":"-1"}}"#,
        r#"{"family":"fib_squared","params":{"k":2}}"#,
        r#"{"family":"two_part","params":{"p":3}}"#,
    ];
    for (j, text) in specs.iter().enumerate() {
        let spec = write_spec(&dir, &format!("s{j}.json"), text);
        let mut outputs = Vec::new();
        for method in ["auto", "fundamental", "recurrence", "closed"] {
            let out = gencomp(&["compute", "--spec", arg(&spec), "--n", "60", "--method", method]);
            if code(&out) == 0 {
                outputs.push(out.stdout);
            } else {
                assert_eq!(code(&out), 3, "{text} with {method}");
            }
        }
        assert!(outputs.len() >= 3, "{text}");
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{text}");
    }
}

#[test]
fn big_values_are_printed_in_full() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(&dir, "c.json", r#"{"family":"constant","params":{"p":1}}"#);
    let out = gencomp(&["compute", "--spec", arg(&spec), "--n", "200"]);
    let last = values(&stdout(&out)).pop().unwrap();
    assert_eq!(last, "803469022129495137770981046170581301261101496891396417650688");

    let out = gencomp(&["compute", "--spec", arg(&spec), "--n", "200", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["method_used"], "closed");
    assert_eq!(v["values"][199], Value::String(last));
    assert_eq!(v["spec"]["family"], "constant");
}

#[test]
fn bad_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = write_spec(&dir, "bad.json", "{not json");
    let out = gencomp(&["compute", "--spec", arg(&bad), "--n", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("bad.json"));

    let invalid = write_spec(&dir, "neg.json", r#"{"family":"exponential","params":{"k":-2,"m":2,"p":1}}"#);
    let out = gencomp(&["compute", "--spec", arg(&invalid), "--n", "3"]);
    assert_eq!(code(&out), 2);

    let unknown = write_spec(&dir, "u.json", r#"{"family":"mystery"}"#);
    assert_eq!(code(&gencomp(&["compute", "--spec", arg(&unknown), "--n", "3"])), 2);

    let missing = dir.path().join("nope.json");
    assert_eq!(code(&gencomp(&["compute", "--spec", arg(&missing), "--n", "3"])), 2);
}

#[test]
fn oracle_limit_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(&dir, "c.json", r#"{"family":"catalan_seq"}"#);
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_gencomp"))
            .args(["compute", "--spec", arg(&spec), "--n", "8", "--method", "oracle"])
            .env("GENCOMP_ORACLE_LIMIT", limit)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("5")), 3);
    assert_eq!(values(&stdout(&run("8"))).last().unwrap(), "1430");
}

#[test]
fn table_keeps_spec_order() {
    let dir = TempDir::new().unwrap();
    let many = write_spec(
        &dir,
        "many.json",
        r#"[{"family":"constant","params":{"p":2}},{"family":"floor_half"},{"family":"catalan_seq"}]"#,
    );
    let one = write_spec(&dir, "one.json", r#"{"family":"ceil_half"}"#);
    let out = gencomp(&["table", "--spec", arg(&many), "--spec", arg(&one), "--n", "4", "--verify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n\tconstant(p=2)\tfloor_half\tcatalan_seq\tceil_half\n1\t2\t0\t1\t1\n2\t6\t1\t2\t2\n3\t18\t1\t5\t5\n4\t54\t3\t14\t11\n"
    );

    let bad = write_spec(&dir, "bad.json", r#"[{"family":"floor_half"},{"family":"quadratic","params":{"k":"1/2","m":"0","p":"0"}}]"#);
    let out = gencomp(&["table", "--spec", arg(&bad), "--n", "3", "--format", "json"]);
    assert_eq!(code(&out), 2);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["values"][2], "1");
    assert!(v["rows"][1]["error"].as_str().unwrap().contains("not an integer"));
}

#[test]
fn invert_examples() {
    assert_eq!(values(&stdout(&gencomp(&["invert", "--terms", "1,2,4,8"]))), ["1", "1", "1", "1"]);
    assert_eq!(values(&stdout(&gencomp(&["invert", "--terms", "2,5,13,34"]))), ["2", "1", "1", "1"]);
    let out = gencomp(&["invert", "--terms", "2,1"]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("b_2"));
    let out = gencomp(&["invert", "--terms", "2,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["index"], 2);
    assert_eq!(code(&gencomp(&["invert", "--terms", "1,x"])), 2);
}

#[test]
fn verify_scopes_pass() {
    let out = gencomp(&["verify", "--scope", "identities"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("identities\tfib_") && l.contains("\tpass\t")).count(), 4);
    assert!(text.contains("arithmetic_m2_k0_sum\twaived"));
    assert!(text.contains("two_part_p1_sum\tpass"));

    let out = gencomp(&["verify", "--scope", "oracle", "--nmax", "14"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).lines().filter(|l| l.starts_with("oracle\t")).all(|l| l.contains("\tpass\t")));

    let out = gencomp(&["verify", "--scope", "catalog", "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn verify_catalog_fails_when_a_persisted_entry_breaks() {
    // A bundled fixture replaced by wrong values
    let dir = TempDir::new().unwrap();
    let mut text = String::from("# A000079\n");
    for i in 0..30 {
        text.push_str(&format!("{i} {}\n", 3u128.pow(i)));
    }
    fs::write(dir.path().join("b000079.txt"), text).unwrap();
    let out = gencomp(&["verify", "--scope", "catalog", "--fixtures", arg(dir.path())]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("A000079"));
}

#[test]
fn oeis_check_examples() {
    let out = gencomp(&["oeis-check", "--depth", "10", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["summary"]["verified"].as_u64().unwrap() >= 20);
    for e in v["entries"].as_array().unwrap() {
        let status = e["status"].as_str().unwrap();
        assert!(["verified", "mismatch", "unfixtured"].contains(&status));
        if status == "mismatch" {
            assert!(!e["detail"].as_str().unwrap().is_empty());
        }
    }

    let empty = TempDir::new().unwrap();
    let out = gencomp(&["oeis-check", "--fixtures", arg(empty.path())]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().skip(1).filter(|l| !l.starts_with('#')).all(|l| l.contains("\tunfixtured\t")));

    let corrupt = TempDir::new().unwrap();
    fs::write(corrupt.path().join("b000045.txt"), "0 0\n1 1\n3 2\n").unwrap();
    let out = gencomp(&["oeis-check", "--fixtures", arg(corrupt.path())]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("b000045.txt"));

    assert_eq!(code(&gencomp(&["oeis-check", "--fixtures", "/nonexistent/fixtures"])), 2);
}

#[test]
fn persisted_catalog_keeps_only_verified_offsets() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("catalog.json");
    let out = gencomp(&["oeis-check", "--recalibrate", "--persist", arg(&path)]);
    assert_eq!(code(&out), 0);
    let persisted: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    let entries = persisted.as_array().unwrap();
    assert_eq!(entries.len(), rows.len());
    for (e, row) in entries.iter().zip(rows) {
        assert_eq!(e["offset"].is_null(), !row.contains("\tverified\t"), "{row}");
        assert!(e["oeis"].as_str().unwrap().starts_with('A'));
    }
}
