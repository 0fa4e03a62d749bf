use std::path::Path;
use std::process::Command;

fn nbstab(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nbstab"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn zero_code_passes_all_forms() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("zero.txt"), "# empty code\np=3 m=2 n=2 r=0 mod=1,0,1\n").unwrap();
    let (code, out) = nbstab(dir.path(), &["verify-classical", "--in", "zero.txt"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches(" PASS").count(), 3, "{out}");
}

#[test]
fn params_and_dense_check_agree() {
    let dir = tempfile::tempdir().unwrap();
    let search = [
        "search",
        "--field",
        "p=2,m=1",
        "--n",
        "5",
        "--target-r",
        "4",
        "--target-d",
        "3",
        "--seed",
        "9",
        "--out",
        "c.txt",
    ];
    assert_eq!(nbstab(dir.path(), &search).0, 0);
    let (c1, params) = nbstab(dir.path(), &["params", "--in", "c.txt"]);
    let (c2, dense) = nbstab(dir.path(), &["dense-check", "--in", "c.txt"]);
    assert_eq!((c1, c2), (0, 0), "{params}\n{dense}");
    let line = |s: &str| s.lines().find(|l| l.starts_with("[[")).unwrap().to_string();
    assert_eq!(line(&params), "[[5,1,3]]_2");
    assert_eq!(line(&params), line(&dense));
    assert!(dense.trim_end().ends_with("PASS"));
}

#[test]
fn distance_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let search = [
        "search",
        "--field",
        "p=3,m=1",
        "--n",
        "5",
        "--target-r",
        "4",
        "--target-d",
        "3",
        "--seed",
        "2",
        "--out",
        "c.txt",
    ];
    assert_eq!(nbstab(dir.path(), &search).0, 0);
    let (code, out) = nbstab(dir.path(), &["distance", "--in", "c.txt"]);
    assert_eq!(code, 0);
    assert!(out.contains("distance 3\n"));
    assert!(out.contains("enumerated 729\n"));
}

#[test]
fn budget_and_search_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let search = [
        "search",
        "--field",
        "p=2,m=1",
        "--n",
        "5",
        "--target-r",
        "4",
        "--target-d",
        "3",
        "--seed",
        "9",
        "--out",
        "c.txt",
    ];
    assert_eq!(nbstab(dir.path(), &search).0, 0);
    let (code, out) = nbstab(dir.path(), &["distance", "--in", "c.txt", "--budget", "10"]);
    assert_eq!(code, 1);
    assert!(out.contains("exceeds the budget"), "{out}");
    let hopeless = [
        "search",
        "--field",
        "p=2,m=1",
        "--n",
        "3",
        "--target-r",
        "2",
        "--target-d",
        "3",
        "--seed",
        "1",
    ];
    assert_eq!(nbstab(dir.path(), &hopeless).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(nbstab(dir.path(), &["no-such-command"]).0, 2);
    assert_eq!(nbstab(dir.path(), &["params", "--in", "missing.txt"]).0, 2);
    assert_eq!(
        nbstab(dir.path(), &["identity-suite", "--field", "p=2,m=1,mod=1,0,1"]).0,
        2
    );
}

#[test]
fn families_table() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = nbstab(dir.path(), &["families", "--q", "3", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("[[27,22,3]]_3"), "{out}");
    assert!(out.contains("[[10,6,3]]_3"), "{out}");
}
