//! End-to-end checks of the `skein` binary: golden text output, exit-code
//! contract, stdin input, env-var bounds, and byte-exact JSON round-trips.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use skein_cli::wire;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn unknot_prints_the_colored_loop_weight() {
    let out = skein(&["eval", "strands=1", "--color", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "A^4 + 1 + A^-4\n");
}

#[test]
fn zero_framed_trefoil_is_frozen() {
    let out = skein(&["eval", "strands=2 s1 s1 s1", "--color", "2", "--framing", "zero"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "A^-4 + A^-8 + A^-12 + A^-16 + A^-20 - A^-32 - A^-36 - A^-40 + A^-48\n"
    );
}

#[test]
fn dash_reads_the_word_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["eval", "-", "--color", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(b"strands=1\n")
        .expect("writes word");
    let out = child.wait_with_output().expect("binary finishes");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "A^4 + 1 + A^-4\n");
}

#[test]
fn one_vertex_closure_matches_its_closed_form() {
    let eval = skein(&["eval", "strands=2 t1 s1", "--color", "2", "--format", "json"]);
    assert!(eval.status.success());
    let eval: wire::Invariant = serde_json::from_str(&stdout(&eval)).expect("eval json parses");

    let form = skein(&["closed-form", "ex1", "--n", "1", "--format", "json"]);
    assert!(form.status.success());
    let form: wire::ClosedForm =
        serde_json::from_str(&stdout(&form)).expect("closed-form json parses");

    assert_eq!(form.which, "ex1");
    assert_eq!(form.color, 2);
    assert_eq!(eval.value, form.value);
}

#[test]
fn word_argument_also_accepts_json() {
    let json = skein(&[
        "eval",
        r#"{"strands": 2, "letters": [["t", 1], ["s", 1]]}"#,
        "--color",
        "2",
    ]);
    assert!(json.status.success());
    let text = skein(&["eval", "strands=2 t1 s1", "--color", "2"]);
    assert_eq!(stdout(&json), stdout(&text));

    let bad = skein(&["eval", r#"{"strands": 2, "letters": [["q", 1]]}"#]);
    assert_eq!(bad.status.code(), Some(2));
    let unparsable = skein(&["eval", r#"{"strands": "two"}"#]);
    assert_eq!(unparsable.status.code(), Some(2));
}

#[test]
fn jw_two_strands_is_golden_json() {
    let out = skein(&["jw", "2", "--format", "json"]);
    assert!(out.status.success());
    let parsed: wire::Element = serde_json::from_str(&stdout(&out)).expect("json parses");
    let one = wire::Rational { num: vec![(0, "1".into())], den: vec![(0, "1".into())] };
    // -1/d = A^2/(A^4 + 1); term order is lexicographic in the pairing array.
    let hook_coeff = wire::Rational {
        num: vec![(2, "1".into())],
        den: vec![(0, "1".into()), (4, "1".into())],
    };
    let expected = wire::Element {
        width: 2,
        terms: vec![(vec![1, 0, 3, 2], hook_coeff), (vec![2, 3, 0, 1], one)],
    };
    assert_eq!(parsed, expected);
}

#[test]
fn text_and_json_agree_on_the_unknot() {
    let text = skein(&["eval", "strands=1", "--color", "2"]);
    assert_eq!(stdout(&text), "A^4 + 1 + A^-4\n");

    let json = skein(&["eval", "strands=1", "--color", "2", "--format", "json"]);
    let parsed: wire::Invariant = serde_json::from_str(&stdout(&json)).expect("json parses");
    let expected = wire::Invariant {
        value: wire::Rational {
            num: vec![(-4, "1".into()), (0, "1".into()), (4, "1".into())],
            den: vec![(0, "1".into())],
        },
        color: 2,
        strands: 1,
        writhe: 0,
        framing: "blackboard".into(),
    };
    assert_eq!(parsed, expected);
}

#[test]
fn relations_report_passes_for_three_strands() {
    let out = skein(&["relations", "--strands", "3", "--color", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pass"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn identity_battery_passes_at_half_color_one() {
    let out = skein(&["identities", "--n", "1"]);
    assert!(out.status.success());
}

#[test]
fn integrality_of_a_single_vertex_closure_exits_clean() {
    let out = skein(&["integrality", "strands=2 t1 s1", "--color", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("integral: true"));
    assert!(text.contains("witness: A^4 + 1 + A^-4"));
}

#[test]
fn oracle_agrees_with_the_projector_evaluation() {
    let out = skein(&["oracle", "strands=2 s1 s1 s1", "--color", "2", "--format", "json"]);
    assert!(out.status.success());
    let parsed: wire::Oracle = serde_json::from_str(&stdout(&out)).expect("oracle json parses");
    assert!(parsed.matches_evaluate);
    assert_eq!(parsed.writhe, 3);
}

#[test]
fn usage_failures_exit_with_two() {
    let cases: &[&[&str]] = &[
        &["eval", "strands=2 s1", "--color", "3"],
        &["eval", "strands=2 q1"],
        &["eval", "strands=2 s5"],
        &["eval", "s1 s1"],
        &["closed-form", "ex1", "--n", "0"],
        &["oracle", "strands=2 t1 s1"],
    ];
    for args in cases {
        let out = skein(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} should explain the failure");
    }
}

#[test]
fn env_bounds_are_enforced() {
    let tight_color = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["eval", "strands=2 s1", "--color", "4"])
        .env("SKEIN_MAX_CABLE_COLOR", "2")
        .output()
        .expect("binary runs");
    assert_eq!(tight_color.status.code(), Some(2));

    let tight_width = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["eval", "strands=3 s1 s2", "--color", "2"])
        .env("SKEIN_MAX_TOTAL_WIDTH", "4")
        .output()
        .expect("binary runs");
    assert_eq!(tight_width.status.code(), Some(2));

    let garbage = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["eval", "strands=1"])
        .env("SKEIN_MAX_CABLE_COLOR", "banana")
        .output()
        .expect("binary runs");
    assert_eq!(garbage.status.code(), Some(2));
}

fn round_trip<T>(raw: &str)
where
    T: serde::Serialize + serde::de::DeserializeOwned,
{
    let value: T = serde_json::from_str(raw).expect("output parses");
    let again = serde_json::to_string_pretty(&value).expect("re-serializes");
    assert_eq!(raw.trim_end(), again, "re-serialization changed the bytes");
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    let out = skein(&[
        "eval", "strands=2 s1 s1 s1", "--color", "2", "--framing", "zero", "--format", "json",
    ]);
    round_trip::<wire::Invariant>(&stdout(&out));

    let out = skein(&["jw", "3", "--format", "json"]);
    round_trip::<wire::Element>(&stdout(&out));

    let out = skein(&["relations", "--strands", "2", "--color", "2", "--format", "json"]);
    round_trip::<wire::CheckReport>(&stdout(&out));

    let out = skein(&["closed-form", "ex2", "--n", "1", "--format", "json"]);
    round_trip::<wire::ClosedForm>(&stdout(&out));

    let out = skein(&["integrality", "strands=2 t1 s1", "--color", "2", "--format", "json"]);
    round_trip::<wire::Integrality>(&stdout(&out));

    let out = skein(&["oracle", "strands=2 s1 s1 s1", "--color", "2", "--format", "json"]);
    round_trip::<wire::Oracle>(&stdout(&out));
}
