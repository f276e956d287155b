//! End-to-end tests of the binary: the documented commands, exit codes,
//! file formats, and JSON schemas.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn tautology_command() {
    let out = run(&["taut", "-f", "X1 # !X1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "tautology: true");

    let out = run(&["taut", "-f", "X1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "tautology: false");
}

#[test]
fn eval_and_table_commands() {
    let out = run(&["eval", "-f", "d(h,0)", "-v", ""]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&["eval", "-f", "X1 # !X1", "-v", "1"]);
    assert_eq!(stdout(&out).trim(), "h");

    let out = run(&["table", "-f", "N X1"]);
    assert_eq!(stdout(&out), "m=1\n011\n");

    let out = run(&["table", "-f", "X1", "-m", "2"]);
    assert_eq!(stdout(&out), "m=2\n000hhh111\n");
}

#[test]
fn entails_command_and_witnesses() {
    let out = run(&["entails", "-t", "X1", "-f", "!X1"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("holds: false"));
    assert!(text.contains("witness: X1=0"));

    let out = run(&["entails", "-t", "X1", "-f", "X1 # 0"]);
    assert_eq!(code(&out), 0);

    // Explosion on an incompatible premise set.
    let out = run(&["entails", "-t", "X1", "-t", "!X1", "-f", "X2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("explosion"));
}

#[test]
fn entails_methods_agree_on_compatible_singletons() {
    for (premise, goal, expect) in [("X1", "X1 # 0", 0), ("X1 # 0", "X1", 1), ("h", "X1 # !X1", 0)]
    {
        for method in ["direct", "meet", "reduction"] {
            let out = run(&["entails", "-t", premise, "-f", goal, "--method", method]);
            assert_eq!(code(&out), expect, "{premise} |= {goal} via {method}");
        }
    }
    // meet and reduction refuse incompatible premises with a usage error;
    // direct explodes.
    let out = run(&[
        "entails", "-t", "X1", "-t", "!X1", "-f", "X2", "--method", "meet",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&[
        "entails", "-t", "X1", "-t", "!X1", "-f", "X2", "--method", "reduction",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&["entails", "-t", "X1", "-t", "!X1", "-f", "X2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn strict_incompatibility_flag() {
    let out = run(&["compat", "-t", "h"]);
    assert_eq!(code(&out), 0);
    let out = run(&["compat", "-t", "h", "--strict-incompat"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("incompatible"));
}

#[test]
fn arity_override_keeps_verdicts() {
    for arity in ["1", "2", "4"] {
        let out = run(&["entails", "-t", "X1", "-f", "X1 # 0", "--arity", arity]);
        assert_eq!(code(&out), 0, "arity {arity}");
    }
    // An override below the needed arity is an input error.
    let out = run(&["table", "-f", "X2", "-m", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn translate_and_synth() {
    let out = run(&["translate", "--to", "rm", "-f", "!X1"]);
    assert_eq!(stdout(&out).trim(), "d(h,X1)");

    let out = run(&["translate", "--to", "rm", "-f", "N X1"]);
    assert_eq!(stdout(&out).trim(), "d(X1,0)");

    // Round trip through the other direction preserves the table.
    let out = run(&["translate", "--to", "post", "-f", "X1 # X2"]);
    assert_eq!(code(&out), 0);
    let translated = stdout(&out).trim().to_string();
    let direct = run(&["table", "-f", "X1 # X2", "-m", "2"]);
    let via_post = run(&["table", "-f", &translated, "-m", "2"]);
    assert_eq!(stdout(&direct), stdout(&via_post));

    // Cubic connectives are rejected on the way to the Post signature.
    let out = run(&["translate", "--to", "rm", "-f", "X1 # X2"]);
    assert_eq!(code(&out), 2);

    let out = run(&["synth", "--table", "0h1"]);
    assert_eq!(code(&out), 0);
    let formula = stdout(&out).trim().to_string();
    let back = run(&["table", "-f", &formula]);
    assert_eq!(stdout(&back), "m=1\n0h1\n");
}

#[test]
fn synth_reads_the_table_file_format() {
    let dir = std::env::temp_dir().join("rmlogic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.txt");
    std::fs::write(&path, "m=1\n0hh\n").unwrap();
    let out = run(&["synth", "--table-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let formula = stdout(&out).trim().to_string();
    let back = run(&["table", "-f", &formula]);
    assert_eq!(stdout(&back), "m=1\n0hh\n");
}

#[test]
fn reduce_post_command() {
    let out = run(&["reduce-post", "-f", "N X1 | !N X1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("post_tautology: true"));
    assert!(stdout(&out).contains("rm_tautology: true"));

    let out = run(&["reduce-post", "-f", "X1 | !X1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("post_tautology: false"));

    let out = run(&["reduce-post", "-f", "1"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn faces_commands() {
    let out = run(&["faces", "join", "00", "01"]);
    assert_eq!(stdout(&out).trim(), "0h");

    let out = run(&["faces", "meet", "0h", "h1"]);
    assert_eq!(stdout(&out).trim(), "01");

    let out = run(&["faces", "meet", "0h", "1h"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "undefined");

    let out = run(&["faces", "antipodal", "hh", "01"]);
    assert_eq!(stdout(&out).trim(), "10");

    let out = run(&["faces", "subface", "01", "0h"]);
    assert_eq!(code(&out), 0);
    let out = run(&["faces", "subface", "0h", "01"]);
    assert_eq!(code(&out), 1);

    let out = run(&["faces", "farthest", "h0"]);
    assert_eq!(stdout(&out).trim(), "(1,0)");

    let out = run(&["faces", "dpar", "h", "1"]);
    assert_eq!(stdout(&out).trim(), "0");

    let out = run(&["faces", "wedge", "h", "1"]);
    assert_eq!(stdout(&out).trim(), "h");

    let out = run(&["faces", "compatible", "0h", "1h"]);
    assert_eq!(code(&out), 1);

    // Dimension mismatch and containment violations are input errors.
    let out = run(&["faces", "join", "0", "00"]);
    assert_eq!(code(&out), 2);
    let out = run(&["faces", "antipodal", "01", "hh"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn axioms_and_dump_algebra() {
    let dir = std::env::temp_dir().join("rmlogic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let dump = run(&["dump-algebra", "--which", "z-post"]);
    assert_eq!(code(&dump), 0);
    let path = dir.join("z_post.alg");
    std::fs::write(&path, stdout(&dump)).unwrap();
    let out = run(&["axioms", "--set", "post", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "pass");
    let out = run(&["axioms", "--set", "kleene", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    // Corrupt min(1/2, 1) and the checker must report a witness.
    let corrupted = stdout(&dump).replace("binop meet: 0 0 0 0 1 1 0 1 2", "binop meet: 0 0 0 0 1 0 0 1 2");
    assert_ne!(corrupted, stdout(&dump), "the fault injection must hit");
    let bad_path = dir.join("z_post_bad.alg");
    std::fs::write(&bad_path, corrupted).unwrap();
    let out = run(&["axioms", "--set", "post", "--algebra", bad_path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fail"));

    let dump = run(&["dump-algebra", "--which", "z-rm"]);
    let path = dir.join("z_rm.alg");
    std::fs::write(&path, stdout(&dump)).unwrap();
    let out = run(&["axioms", "--set", "rm", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    // A Kleene check on the RM signature is a signature mismatch.
    let out = run(&["axioms", "--set", "kleene", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn clone_membership() {
    // The meet is reachable (the nondefinability claim fails); negation
    // and the projection are reachable too.
    for query in ["meet", "neg", "p1"] {
        let out = run(&[
            "clone", "--generators", "0,h,join,dpar", "--query", query,
        ]);
        assert_eq!(code(&out), 0, "{query}");
        assert!(stdout(&out).contains("member: true"));
    }
    // Without dpar nothing brings the upper row down: flip is out.
    let out = run(&["clone", "--generators", "0,h,join", "--query", "flip"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("member: false"));

    let out = run(&["clone", "--generators", "bogus", "--query", "meet"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn lind_command() {
    let out = run(&["lind", "-t", "X1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("mod: 1 of 3"));
    assert!(text.contains("carrier: 3"));
    assert!(text.contains("isomorphic to the face algebra of the 1-cube"));

    let out = run(&["lind", "-t", "N X1"]);
    assert!(stdout(&out).contains("trivial"));

    let out = run(&["lind", "-m", "1"]);
    let text = stdout(&out);
    assert!(text.contains("mod: 3 of 3"));
    assert!(text.contains("carrier: 27"));
    assert!(text.contains("3-cube"));

    // More than four model points: certified, no isomorphism search.
    let out = run(&["lind", "-m", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("mod: 9 of 9"));
    assert!(text.contains("carrier: 19683"));
    assert!(text.contains("certified"));
}

#[test]
fn tables_command() {
    for check in ["1", "2"] {
        let out = run(&["tables", "--check", check]);
        assert_eq!(code(&out), 0, "table {check}");
        assert!(stdout(&out).contains("row 1:"));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn json_outputs_follow_the_schemas() {
    let out = run(&["entails", "-t", "X1 # 0", "-f", "X1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["holds"], serde_json::json!(false));
    assert_eq!(v["mode"], serde_json::json!("compatible"));
    assert_eq!(v["witness"]["valuation"], serde_json::json!(["1"]));

    let out = run(&["compat", "-t", "X1", "-t", "!X1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["mode"], serde_json::json!("incompatible"));
    assert_eq!(v["witness"]["premises"], serde_json::json!([0, 1]));

    let out = run(&["eval", "-f", "foo # X2", "-v", "0h1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    // Canonical names claim their suffix; other identifiers take the
    // smallest free index in first-occurrence order, and the index map is
    // part of the output.
    assert_eq!(v["vars"]["X2"], serde_json::json!(2));
    assert_eq!(v["vars"]["foo"], serde_json::json!(1));

    let out = run(&["faces", "join", "0h1h", "00hh", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["word"], serde_json::json!("0hhh"));
    assert_eq!(v["A0"], serde_json::json!([1]));
    assert_eq!(v["n"], serde_json::json!(4));

    let out = run(&["synth", "--table", "0hh", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["table"], serde_json::json!("0hh"));
    assert!(v["formula"].is_object());
}

#[test]
fn parse_errors_exit_2_with_a_diagnostic() {
    let out = run(&["taut", "-f", "X1 # "]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("error:"), "{err}");
    assert!(err.contains("expected"), "{err}");

    let out = run(&["taut", "-f", "X1 $ X2"]);
    assert_eq!(code(&out), 2);

    // Unknown command: clap reports usage errors with exit 2.
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn meet_formula_command() {
    let out = run(&["meet-formula", "-f", "T X1", "-g", "X1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("001"));

    let out = run(&["meet-formula", "-f", "h", "-g", "X1"]);
    assert!(stdout(&out).contains("0h1"));

    let out = run(&["meet-formula", "-f", "X1", "-g", "!X1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn compactness_command() {
    let out = run(&["compactness", "-t", "h", "-t", "X1", "-f", "X1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("core: 1 of 2"));
    assert!(text.contains("X1"));

    // Non-entailing goals violate the precondition.
    let out = run(&["compactness", "-t", "X1 # 0", "-f", "X1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn nonmono_command() {
    let out = run(&["nonmono", "-m", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("alpha:"));
    assert!(text.contains("beta:"));
    assert!(text.contains("gamma:"));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("check table-fidelity: PASS"));
    assert!(text.contains("join-closed-form-discrepancy: PASS"));
    assert!(text.contains("meet-definability-discrepancy: PASS"));
    assert!(!text.contains("FAIL"));
}
