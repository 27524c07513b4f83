//! Environment-variable handling, isolated in its own test binary so the
//! process environment is not shared with unrelated tests.

use derivpoly_cli::run;
use serde_json::Value;

fn exec(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args.iter().copied(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn precision_env_var_sets_default_and_flag_wins() {
    std::env::set_var("DERIVPOLY_PRECISION_BITS", "192");

    let (code, out, _) = exec(&[
        "derivpoly", "zeta", "--n", "2", "--x", "1/3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["precision"], 192);

    let (code, out, _) = exec(&[
        "derivpoly", "zeta", "--n", "2", "--x", "1/3", "--precision-bits", "128", "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["precision"], 128);

    let (code, out, _) = exec(&[
        "derivpoly", "derivative", "--kind", "tan", "--n", "0", "--point", "0.5", "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["precision"], 192);

    std::env::set_var("DERIVPOLY_PRECISION_BITS", "not-a-number");
    let (code, _, err) = exec(&["derivpoly", "zeta", "--n", "2", "--x", "1/3"]);
    assert_eq!(code, 1);
    assert!(err.contains("DERIVPOLY_PRECISION_BITS"));

    std::env::remove_var("DERIVPOLY_PRECISION_BITS");
    let (code, out, _) = exec(&[
        "derivpoly", "zeta", "--n", "2", "--x", "1/3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["precision"], 128);
}
