use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gsatlas(args: &[&str]) -> Output {
    run(args, None, &[])
}

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gsatlas"));
    cmd.args(args)
        .env_remove("GSATLAS_CACHE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let input = stdin.unwrap_or("").to_owned();
    let mut pipe = child.stdin.take().unwrap();
    std::thread::spawn(move || pipe.write_all(input.as_bytes()));
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_counts() {
    let o = gsatlas(&["enumerate", "-n", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 6);
    assert_eq!(stdout(&gsatlas(&["enumerate", "-n", "1"])), "@\n");
    assert_eq!(
        stdout(&gsatlas(&["enumerate", "-n", "8"])).lines().count(),
        11117
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&gsatlas(&["enumerate"])), 2);
    assert_eq!(code(&gsatlas(&["classify", "-n", "9"])), 2);
    assert_eq!(
        code(&gsatlas(&["classify", "-n", "4", "--format", "xml"])),
        2
    );
    assert_eq!(code(&gsatlas(&["verify", "-n", "13"])), 2);
    assert_eq!(code(&gsatlas(&["bogus"])), 2);
}

#[test]
fn classify_eight() {
    let o = gsatlas(&["classify", "-n", "8", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "no,lc,edges,es,ri4,ri3,ri2,twocol");
    assert_eq!(lines.len(), 102);
    assert_eq!(lines[1], "46,2,7,1,(0;0;0;35),(0;0;56),(0;28),yes");
    assert_eq!(lines[101], "146,51,13,4<5,(24;10;1;0),(56;0;0),(28;0),no");
}

#[test]
fn classify_seven() {
    let o = gsatlas(&["classify", "-n", "7"]);
    assert_eq!(stdout(&o).lines().count(), 27);
}

#[test]
fn output_independent_of_jobs() {
    let one = gsatlas(&["--jobs", "1", "classify", "-n", "7", "--format", "json"]);
    let four = gsatlas(&["--jobs", "4", "classify", "-n", "7", "--format", "json"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn lookup_reports_class() {
    let k8 = gsatlas(&["lookup", "G~~~~{"]);
    assert_eq!(code(&k8), 0);
    let row = stdout(&k8).lines().nth(1).unwrap().to_owned();
    assert!(row.starts_with("G~~~~{,8,46,2,7,1,yes,"), "{row}");

    let o = gsatlas(&["lookup", "G???F{", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["no"], 46);
    assert_eq!(v[0]["representative"], "G???F{");
}

#[test]
fn lookup_from_stdin() {
    let o = run(&["lookup"], Some("Bw\nCr\n"), &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("Bw,3,2,"));
    assert!(rows[1].starts_with("Cr,4,4,"), "{}", rows[1]);
}

#[test]
fn lookup_disconnected_exits_two() {
    let o = gsatlas(&["lookup", "C?"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not connected"));
}

#[test]
fn verify_passes_and_fault_fails() {
    assert_eq!(code(&gsatlas(&["verify", "-n", "5"])), 0);
    assert_eq!(
        code(&gsatlas(&[
            "verify",
            "-n",
            "4",
            "--inject-fault",
            "measure-rule"
        ])),
        1
    );
    assert_eq!(
        code(&gsatlas(&[
            "verify",
            "-n",
            "4",
            "--inject-fault",
            "lc-sign"
        ])),
        1
    );
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = gsatlas(&["classify", "-n", "6", "--cache-dir", d]);
    let file = dir.path().join("orbits-n6.txt");
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("# gsatlas orbit cache v1 canon=1 n=6")
    );
    assert_eq!(text.lines().count(), 12);

    let warm = run(&["classify", "-n", "6"], None, &[("GSATLAS_CACHE", d)]);
    assert_eq!(cold.stdout, warm.stdout);

    let stale = text.replacen("canon=1", "canon=0", 1);
    std::fs::write(&file, stale).unwrap();
    let redo = gsatlas(&["classify", "-n", "6", "--cache-dir", d]);
    assert_eq!(cold.stdout, redo.stdout);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), text);
}

#[test]
fn truncated_cache_is_an_internal_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    gsatlas(&["orbits", "-n", "5", "--cache-dir", d]);
    let file = dir.path().join("orbits-n5.txt");
    let text = std::fs::read_to_string(&file).unwrap();
    let kept: Vec<&str> = text.lines().take(3).collect();
    std::fs::write(&file, kept.join("\n") + "\n").unwrap();
    assert_eq!(
        code(&gsatlas(&["classify", "-n", "5", "--cache-dir", d])),
        3
    );
}

#[test]
fn table_rerenders_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("atlas.json");
    let j = json.to_str().unwrap();
    assert_eq!(
        code(&gsatlas(&[
            "classify", "-n", "6", "--format", "json", "-o", j
        ])),
        0
    );
    let csv = gsatlas(&["classify", "-n", "6"]);
    assert_eq!(gsatlas(&["table", j]).stdout, csv.stdout);
    let piped = run(
        &["table"],
        Some(&std::fs::read_to_string(&json).unwrap()),
        &[],
    );
    assert_eq!(piped.stdout, csv.stdout);
    let again = gsatlas(&["table", j, "--format", "json"]);
    assert_eq!(again.stdout, std::fs::read(&json).unwrap());
}

#[test]
fn json_schema() {
    let o = gsatlas(&["classify", "-n", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 8);
    let first = &v["classes"][0];
    let keys: Vec<&str> = first
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        [
            "no",
            "lc",
            "edges",
            "es_lower",
            "es_upper",
            "ri4",
            "ri3",
            "ri2",
            "two_colorable",
            "representative"
        ]
    );
    assert_eq!(first["ri4"], serde_json::json!([0, 0, 0, 35]));
}

#[test]
fn orbits_output() {
    let o = gsatlas(&["orbits", "-n", "5", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    let o = gsatlas(&["orbits", "-n", "5"]);
    assert!(stdout(&o).starts_with("# gsatlas orbit cache v1 canon=1 n=5\n"));
}
