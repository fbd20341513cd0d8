use std::fs;
use std::process::{Command, Output};

fn empty4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_empty4")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = empty4(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["empty-check", "100:9,1,-2,-3,-5"]), "empty\n");
    assert_eq!(stdout(&["hstar", "42:4,7,15,17,41"]), "1 0 25 16 0\n");
    assert_eq!(stdout(&["classify", "39:5,8,13,14,38"]), "sporadic\n");
    assert_eq!(stdout(&["empty-check", "5:1,1,1,1,1"]), "not-empty\n");
    assert_eq!(stdout(&["hollow-check", "5:1,1,1,1,1"]), "not-hollow\n");
    assert_eq!(stdout(&["width", "7:2,-1,-1,-1,1"]), "1\n");
    assert_eq!(stdout(&["width", "39:5,8,13,14,38"]), "2\n");
}

#[test]
fn classification_depends_only_on_the_isomorphism_class() {
    // 100:(9,1,-2,-3,-5) times the unit 3, entries permuted.
    let a = stdout(&["classify", "100:9,1,-2,-3,-5"]);
    let b = stdout(&["classify", "100:-15,27,3,-6,-9"]);
    assert_eq!(a, b);
    assert!(a.starts_with("family "), "{a}");
    assert!(a.contains("primitive-1"), "{a}");
    assert_eq!(
        stdout(&["empty-check", "39:38,5,8,13,14"]),
        stdout(&["empty-check", "39:5,8,13,14,38"])
    );
}

#[test]
fn coordinates_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let coords = stdout(&["realize", "100:9,1,-2,-3,-5"]);
    assert_eq!(coords.lines().count(), 5);
    let path = dir.path().join("s.txt");
    fs::write(&path, &coords).unwrap();
    let p = path.to_str().unwrap();
    let t = stdout(&["tuple-of", "--coords", p]);
    assert_eq!(stdout(&["classify", t.trim()]), stdout(&["classify", "--coords", p]));
    assert_eq!(stdout(&["empty-check", "--coords", p]), "empty\n");
    assert_eq!(stdout(&["width", "--coords", p]), stdout(&["width", "100:9,1,-2,-3,-5"]));
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(empty4(&[]).status.code(), Some(2));
    assert_eq!(empty4(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(empty4(&["enumerate", "--from", "x", "--to", "3"]).status.code(), Some(2));
    // Domain errors.
    let bad = empty4(&["classify", "39:5,8,13"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(empty4(&["hstar", "5:1,1,1,1,1"]).status.code(), Some(1));
    assert_eq!(empty4(&["realize", "30:2,3,5,6,14"]).status.code(), Some(1));
    assert_eq!(empty4(&["enumerate", "--from", "1", "--to", "9000"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    // conv(0, 2e1, 2e2, e3, e4): quotient group Z2 x Z2.
    fs::write(&path, "0,0,0,0\n2,0,0,0\n0,2,0,0\n0,0,1,0\n0,0,0,1\n").unwrap();
    let out = empty4(&["tuple-of", "--coords", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    fs::write(&path, "0,0,0\n1,0\n").unwrap();
    assert_eq!(empty4(&["tuple-of", "--coords", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn families_list_prints_every_row() {
    let text = stdout(&["families", "list"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("primitive-")).count(), 29);
    assert_eq!(text.lines().filter(|l| l.starts_with("nonprimitive-")).count(), 23);
    assert!(text.contains("(15,10,6,-1,-30)"));
}

#[test]
fn census_commands() {
    let dir = tempfile::tempdir().unwrap();
    let all = dir.path().join("all.txt");
    let spo = dir.path().join("sporadic.txt");
    let state = dir.path().join("state.json");
    let (a, s) = (all.to_str().unwrap(), spo.to_str().unwrap());
    stdout(&["enumerate", "--from", "1", "--to", "40", "--out", a]);
    stdout(&[
        "enumerate", "--from", "1", "--to", "40", "--sporadic", "--workers", "2", "--out", s,
        "--checkpoint", state.to_str().unwrap(),
    ]);
    assert!(state.exists());
    let census = fs::read_to_string(&spo).unwrap();
    assert!(census.lines().any(|l| l == "39 5 8 13 14 38"));
    assert_eq!(stdout(&["enumerate", "--from", "1", "--to", "40", "--sporadic"]), census);

    let stats = stdout(&["stats", s, "--format", "machine"]);
    assert!(stats.lines().any(|l| l == "24 1"));
    assert!(stats.lines().all(|l| !l.starts_with("25 ")));
    assert!(stdout(&["stats", s]).contains("total"));

    // Everything only in the full census is a family member.
    let diff = stdout(&["diff", a, s]);
    assert!(diff.lines().all(|l| l.starts_with("< ")));
    for line in diff.lines().take(20) {
        let f: Vec<&str> = line[2..].split(' ').collect();
        let t = format!("{}:{}", f[0], f[1..].join(","));
        assert!(stdout(&["classify", &t]).starts_with("family "), "{t}");
    }
    assert_eq!(stdout(&["diff", s, s]), "");

    let widths = stdout(&["widths", a, "--format", "machine"]);
    assert!(widths.lines().next().unwrap().starts_with("1 "));
    let excess = stdout(&["excess", s, "--format", "machine"]);
    assert!(excess.lines().any(|l| l == "38 12 39 5 8 13 14 38"));
    assert!(stdout(&["excess", s]).starts_with("   V-1"));

    fs::write(&spo, "39 5 8 13\n").unwrap();
    assert_eq!(empty4(&["stats", s]).status.code(), Some(1));
}
