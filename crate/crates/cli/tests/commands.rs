use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn binrank(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binrank"))
        .args(args)
        .env("BINRANK_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let o = binrank(
        dir.path(),
        &[
            "enumerate",
            "--n",
            "3",
            "--semiring",
            "gf2",
            "--format",
            "csv",
        ],
    );
    assert!(o.status.success());
    let counts: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(counts, ["1", "27", "162", "66"]);

    let o = binrank(
        dir.path(),
        &[
            "enumerate",
            "--n",
            "4",
            "--semiring",
            "nat",
            "--format",
            "csv",
        ],
    );
    let text = stdout(&o);
    let tail: Vec<&str> = text
        .lines()
        .rev()
        .take(3)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(tail, ["26", "560", "3908"]);
}

#[test]
fn cached_rerun_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate", "--n", "3", "--semiring", "bool"];
    let first = binrank(dir.path(), &args);
    assert!(dir.path().join("strata-v1-n3-bool.bin").exists());
    let second = binrank(dir.path(), &args);
    assert!(first.status.success() && second.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(second.stderr.is_empty());
}

#[test]
fn corrupt_cache_warns_and_recomputes() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate", "--n", "3", "--semiring", "gf2"];
    let clean = binrank(dir.path(), &args);
    let file = dir.path().join("strata-v1-n3-gf2.bin");
    let mut bytes = fs::read(&file).unwrap();
    bytes[20] ^= 0xff;
    fs::write(&file, bytes).unwrap();

    let again = binrank(dir.path(), &args);
    assert!(again.status.success());
    assert_eq!(again.stdout, clean.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning"));
    // rewritten
    let third = binrank(dir.path(), &args);
    assert!(third.stderr.is_empty());
}

#[test]
fn rank_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = binrank(
        dir.path(),
        &["rank", "--n", "3", "--semiring", "gf2", "00000001"],
    );
    assert_eq!(stdout(&o).trim(), "rank: 1");

    let o = binrank(
        dir.path(),
        &["rank", "--n", "4", "--semiring", "bool", "0110100110010110"],
    );
    assert_eq!(stdout(&o).trim(), "rank: 8");

    // spaces between digits, as copied from a table
    let o = binrank(
        dir.path(),
        &[
            "rank",
            "--n",
            "4",
            "--semiring",
            "bool",
            "0110 1001 1001 0110",
        ],
    );
    assert_eq!(stdout(&o).trim(), "rank: 8");

    let o = binrank(
        dir.path(),
        &[
            "rank",
            "--n",
            "4",
            "--semiring",
            "gf2",
            "--group",
            "large",
            "0110101110111101",
        ],
    );
    assert_eq!(
        stdout(&o),
        "rank: 6\ncanonical form: 0110101110111101\norbit size: 24\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &[
            "rank",
            "--n",
            "4",
            "--semiring",
            "bool",
            "--group",
            "small",
            "0000000000000001",
        ],
        &["classify", "--n", "3", "--semiring", "nat"],
        &["rank", "--n", "3", "0102"],
        &["rank", "--n", "3", "0101"],
        &["enumerate", "--n", "5"],
    ];
    for args in cases {
        let o = binrank(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let o = binrank(dir.path(), &["classify", "--n", "3", "--semiring", "bool"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("canonical forms"));
}

#[test]
fn classify_and_split() {
    let dir = tempfile::tempdir().unwrap();
    let o = binrank(
        dir.path(),
        &[
            "classify", "--n", "4", "--group", "large", "--format", "csv",
        ],
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 31);

    let o = binrank(
        dir.path(),
        &[
            "classify", "--n", "4", "--group", "small", "--format", "csv",
        ],
    );
    assert_eq!(stdout(&o).lines().count(), 113);

    let o = binrank(dir.path(), &["split", "--n", "4"]);
    let text = stdout(&o);
    for line in [
        "26 → 6 · 108",
        "3 → 6 · 54",
        "12 → 6 · 1296",
        "21 → 12 · 648",
    ] {
        assert!(text.contains(line), "{line}");
    }
}

#[test]
fn bounds_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = binrank(dir.path(), &["bounds", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "n,small group,large group\r\n3,2,1\r\n4,51,3\r\n5,552337,4603\r\n6,395377745064077,549135757034\r\n"
    );
}

#[test]
fn tables_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for format in ["md", "csv", "json"] {
        let first = binrank(a.path(), &["tables", "--format", format]);
        let second = binrank(a.path(), &["tables", "--format", format]);
        let fresh = binrank(b.path(), &["tables", "--format", format, "--no-cache"]);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout);
        assert_eq!(first.stdout, fresh.stdout);
    }
}

#[test]
fn verify_all_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = binrank(dir.path(), &["verify", "--scope", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn export_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("out.json");
    let o = binrank(
        dir.path(),
        &[
            "export",
            "--n",
            "3",
            "--semiring",
            "bool",
            "--output",
            file.to_str().unwrap(),
        ],
    );
    assert!(o.status.success());
    let text = fs::read_to_string(file).unwrap();
    assert!(text.contains("\"max_rank\": 4"));
}
