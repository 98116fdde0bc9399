use std::path::Path;
use std::process::{Command, Output};

fn freqlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freqlab")).args(args).output().expect("spawn freqlab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_writes_spike_pair_file() {
    let out = freqlab(&["gen", "--family", "spike_pair", "--C", "100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "#freqlab-signal v1\n# family=spike_pair\n# C=100\n-300 200/1\n0 1/1\n300 200/1\n");
}

#[test]
fn gen_squares_power_and_composite() {
    let out = freqlab(&["gen", "--family", "squares_power", "--epsilon", "1", "--cutoff", "3"]);
    let text = stdout(&out);
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data, ["1 1/1", "4 1/4", "9 1/9"]);

    let out = freqlab(&["gen", "--family", "composite_jump", "--C", "100", "--C-max", "100"]);
    let text = stdout(&out);
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data.len(), 3);
    assert!(data[0].split(' ').next().unwrap().len() > 55);
}

#[test]
fn gen_rejects_small_spike() {
    let out = freqlab(&["gen", "--family", "spike_pair", "--C", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_and_profile_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let gen = freqlab(&["gen", "--family", "spike_pair", "--C", "100"]);
    let spike = write(dir.path(), "spike.txt", &stdout(&gen));

    assert_eq!(stdout(&freqlab(&["eval", "--signal", &spike, "--n", "1"])), "M=401/603 F=301 E={301}\n");
    assert_eq!(stdout(&freqlab(&["eval", "--signal", &spike, "--n", "-1"])), "M=401/603 F=301 E={301}\n");

    let csv = dir.path().join("profile.csv");
    let out = freqlab(&["profile", "--signal", &spike, "--from", "0", "--to", "2", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), "n,M,F\n0,1,0\n1,401/603,301\n2,401/605,302\n");
}

#[test]
fn bilinear_eval() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "#freqlab-signal v1\n0 1/1\n2 1/1\n");
    assert_eq!(stdout(&freqlab(&["eval", "--f", &f, "--g", &f, "--n", "1"])), "B=2/3 F=1 E={1}\n");
    let out = stdout(&freqlab(&["eval", "--f", &f, "--g", &f, "--n", "5"]));
    assert!(out.ends_with(" degenerate\n"), "{out}");
}

#[test]
fn levelset_counts() {
    let dir = tempfile::tempdir().unwrap();
    let delta = write(dir.path(), "delta.txt", "#freqlab-signal v1\n0 1/1\n");
    let out = stdout(&freqlab(&["levelset", "--signal", &delta, "--C", "2/1", "--N-grid", "10,100"]));
    let counts: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(counts, ["1", "1"]);

    let zero = write(dir.path(), "zero.txt", "#freqlab-signal v1\n");
    let out = stdout(&freqlab(&["levelset", "--signal", &zero, "--C", "2", "--N-grid", "10"]));
    assert!(out.lines().nth(1).unwrap().starts_with("10,21,"), "{out}");

    let bad = freqlab(&["levelset", "--signal", &delta, "--C", "1/1", "--N-grid", "10"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn covering_report_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ivs = write(dir.path(), "iv.txt", "0 9\n5 14\n10 19\n");
    let out = stdout(&freqlab(&["covering", "--intervals", &ivs]));
    assert!(out.starts_with("chosen=0,2\n"), "{out}");
    assert!(out.contains("chosen_length_sum=20\nunion_size=20\n"));
    assert!(out.ends_with("third_bound=ok\n"));

    let empty = write(dir.path(), "empty.txt", "");
    assert_eq!(freqlab(&["covering", "--intervals", &empty]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "#freqlab-signal v1\n3 1/1\n1 1/1\n");
    let out = freqlab(&["eval", "--signal", &bad, "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(freqlab(&["eval", "--signal", "/nonexistent", "--n", "0"]).status.code(), Some(2));
    assert_eq!(freqlab(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_suites_report_pass_lines() {
    let out = freqlab(&["verify", "--suite", "covering", "--trials", "200", "--seed", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("PASS covering: ")));

    let out = freqlab(&["verify", "--suite", "variational"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS variational: C=1000: F f_C(1) = 3C+1"));
}
