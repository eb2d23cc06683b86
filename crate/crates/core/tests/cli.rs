use std::io::Write;
use std::process::{Command, Stdio};

fn sidonfold(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sidonfold"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = sidonfold(args, stdin);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn welch_unfolds_to_the_known_sidon_set() {
    let welch = ok(
        &["construct", "--family", "welch", "--p", "7", "--alpha", "3"],
        "",
    );
    let s = ok(
        &["unfold", "--direction", "1,1", "--anchor", "lower-left"],
        &welch,
    );
    assert_eq!(s.trim(), r#"{"modulus":42,"elements":[0,8,10,11,33,37]}"#);
    assert_eq!(
        ok(&["verify", "--kind", "sidon"], &s).trim(),
        r#"{"ok":true}"#
    );
}

#[test]
fn every_construction_verifies() {
    let cases: &[(&str, &str, &[&str])] = &[
        ("welch", "11", &["periodic-ddc", "ddc"]),
        ("golomb", "9", &["periodic-ddc", "ddc"]),
        ("bose", "8", &["sidon", "weak-sidon"]),
        ("singer", "5", &["sidon", "weak-sidon"]),
        ("ruzsa", "13", &["sidon", "weak-sidon"]),
        ("power-pairs", "16", &["sidon", "weak-sidon"]),
    ];
    for (family, q, kinds) in cases {
        let json = ok(&["construct", "--family", family, "--q", q], "");
        for kind in *kinds {
            ok(&["verify", "--kind", kind], &json);
        }
    }
}

#[test]
fn construct_output_is_stable() {
    assert_eq!(
        ok(&["construct", "--family", "bose", "--q", "3"], "").trim(),
        r#"{"modulus":8,"elements":[1,6,7]}"#
    );
    assert_eq!(
        ok(&["construct", "--family", "power-pairs", "--q", "4"], "").trim(),
        r#"{"moduli":[3,2,2],"elements":[[0,1,0],[1,0,1],[2,1,1]]}"#
    );
    assert_eq!(
        ok(
            &["construct", "--family", "welch", "--p", "5", "--alpha", "2"],
            ""
        )
        .trim(),
        r#"{"lattice":[[4,0],[0,5]],"shape":[[0,0],[0,1],[0,2],[0,3],[0,4],[1,0],[1,1],[1,2],[1,3],[1,4],[2,0],[2,1],[2,2],[2,3],[2,4],[3,0],[3,1],[3,2],[3,3],[3,4]],"dots":[[0,1],[1,2],[2,4],[3,3]]}"#
    );
}

#[test]
fn fold_then_unfold_from_a_file() {
    let dir = std::env::temp_dir().join(format!("sidonfold-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s.json");
    std::fs::write(&path, r#"{"modulus":42,"elements":[0,8,10,11,33,37]}"#).unwrap();
    let path = path.to_str().unwrap();
    let c = ok(
        &[
            "fold",
            "--lattice",
            "[[6,0],[0,7]]",
            "--direction",
            "1,1",
            path,
        ],
        "",
    );
    ok(&["verify", "--kind", "periodic-ddc"], &c);
    let back = ok(&["unfold", "--direction", "1,1", "--anchor", "origin"], &c);
    assert_eq!(
        back.trim(),
        r#"{"modulus":42,"elements":[0,8,10,11,33,37]}"#
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn violations_print_a_witness_and_exit_two() {
    let (code, out, _) = sidonfold(
        &["verify", "--kind", "ddc"],
        r#"{"dots":[[0,0],[1,0],[2,0]]}"#,
    );
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], false);
    assert!(v["witness"]["difference"].is_array());

    let c = r#"{"lattice":[[2,0],[0,1]],"shape":[[0,0],[1,0]],"dots":[[0,0],[1,0]]}"#;
    assert_eq!(sidonfold(&["verify", "--kind", "periodic-ddc"], c).0, 2);
    assert_eq!(sidonfold(&["verify", "--kind", "ddc"], c).0, 0);
}

#[test]
fn input_errors_exit_one() {
    for (args, stdin) in [
        (&["construct", "--family", "costas", "--q", "7"][..], ""),
        (&["construct", "--family", "golomb", "--q", "10"][..], ""),
        (&["verify", "--kind", "sidon"][..], "[1,2"),
        (&["unfold", "--direction", "0,0"][..], "{}"),
        (&["directions", "--lattice", "[[1,2],[2,4]]"][..], ""),
        (&["search"][..], ""),
    ] {
        let (code, out, err) = sidonfold(args, stdin);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn searches_directions_and_rendering() {
    assert_eq!(
        ok(&["search", "--max-sidon", "7"], "").trim(),
        r#"{"max":3,"witness":[0,1,3]}"#
    );
    let r = ok(&["search", "--max-ddc", "--lattice", "[[6,0],[0,7]]"], "");
    let v: serde_json::Value = serde_json::from_str(&r).unwrap();
    assert_eq!(v["max"], 6);
    let dirs: Vec<[i64; 2]> =
        serde_json::from_str(&ok(&["directions", "--lattice", "[[6,0],[0,7]]"], "")).unwrap();
    assert_eq!(dirs.len(), 12);
    assert_eq!(
        ok(&["directions", "--lattice", "[[4,0],[0,4]]"], "").trim(),
        "[]"
    );

    let welch = ok(
        &["construct", "--family", "welch", "--p", "5", "--alpha", "2"],
        "",
    );
    let grid = ok(&["render"], &welch);
    assert_eq!(grid.trim_end(), "..•.\n...•\n.•..\n•...\n....");
    assert_eq!(
        ok(
            &[
                "construct",
                "--family",
                "welch",
                "--p",
                "5",
                "--alpha",
                "2",
                "--format",
                "ascii"
            ],
            ""
        ),
        grid
    );
    assert_eq!(
        ok(
            &[
                "construct",
                "--family",
                "bose",
                "--q",
                "3",
                "--format",
                "ascii"
            ],
            ""
        )
        .trim(),
        ".•....••"
    );
}
