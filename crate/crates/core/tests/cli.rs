use steinitz::cli::{run, EXIT_BOUND, EXIT_OK, EXIT_USAGE};

fn steinitz(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("steinitz").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn parse_prints_canonical_text() {
    let (code, out, _) = steinitz(&["parse", "char=2;  3 , 2^2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "char=2; 2^2,3\n");
    let (code, out, _) = steinitz(&["parse", "char=5; 1; rest=inf"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "char=5; 1; rest=inf\n"));
}

#[test]
fn syntax_errors_report_the_offset() {
    let (code, out, err) = steinitz(&["parse", "char=2; 2^x"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("offset 10"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(steinitz(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(steinitz(&["rgmax"]).0, EXIT_USAGE);
    assert_eq!(steinitz(&["ring", "gf", "-p", "2", "-n", "2", "--lattice", "--maximal"]).0, EXIT_USAGE);
    assert_eq!(steinitz(&["--help"]).0, EXIT_OK);
}

#[test]
fn field_verbs() {
    assert_eq!(steinitz(&["rgmax", "char=2; 2^inf,3^2"]).1, "rgmax 1\n");
    assert_eq!(steinitz(&["rgmax", "char=2; 2; rest=1"]).1, "rgmax countably infinite\n");
    let (code, _, err) = steinitz(&["rgmax", "--list", "char=2; 2; rest=1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("infinitely many"), "{err}");
    assert_eq!(steinitz(&["degree", "char=2; 2", "char=2; 2^2,3"]).1, "degree 2,3\n");
    assert_eq!(steinitz(&["intermediate", "char=2; 1", "char=2; 2^2,3"]).1, "intermediate 6\n");
    assert_eq!(
        steinitz(&["embed", "char=2; 2^inf", "char=2; 2^inf,3^2"]).1,
        "maximal char=2; 2^inf,3 (decrement 3)\n"
    );
    assert_eq!(steinitz(&["embed", "char=3; 2^inf,7^5", "char=3; 2^inf,7^inf"]).1, "blocked by 7\n");
    let (_, out, _) = steinitz(&["chains", "--enumerate", "char=2; 2^2,3"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.starts_with("length 3; chains 3; terminus char=2; 1\n"));
}

#[test]
fn chain_cap_is_a_bound_error() {
    let (code, _, err) = steinitz(&["chains", "--enumerate", "char=2; 2^2,3^2,5^2,7^2,11^2,13^2,17^2"]);
    assert_eq!(code, EXIT_BOUND, "{err}");
}

#[test]
fn affine_verdicts() {
    let (code, out, _) = steinitz(&["affine", "affine: base=char=2; 1; gens=alg(4),alg(6); kind=domain"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "finitely many; field char=2; 2^2,3; count 2\n");
    let (_, out, _) = steinitz(&["affine", "affine: base=char0; gens=; kind=domain"]);
    assert!(out.starts_with("infinitely many"));
    let (_, out, _) = steinitz(&["--format", "records", "affine", "variety: base=char=2; 2,3^0; rest=inf; points=2"]);
    assert!(out.contains("\"verdict\":\"infinitely-many\""), "{out}");
}

#[test]
fn ring_inspection() {
    let (code, out, _) = steinitz(&["ring", "dual", "-p", "2", "-n", "2", "--maximal"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 3);
    let (_, out, _) = steinitz(&["ring", "gf", "-p", "2", "-n", "4", "--chains"]);
    assert_eq!(out, "ring gf(2,4) of size 16\n  chain 16 > 4 > 2\n1 chains, uniform\n");
    assert_eq!(steinitz(&["ring", "gf", "-p", "2", "-n", "13"]).0, EXIT_BOUND);
    assert_eq!(steinitz(&["ring", "dual", "-p", "2", "-n", "3", "--max-size", "32"]).0, EXIT_BOUND);
    assert_eq!(steinitz(&["ring", "gf", "-p", "4", "-n", "1"]).0, EXIT_USAGE);
}

#[test]
fn records_are_byte_stable() {
    let args = ["--format", "records", "ring", "product", "-p", "2", "-n", "2", "--lattice"];
    let (code, first, _) = steinitz(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first, steinitz(&args).1);
    for line in first.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["record"].is_string());
    }
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = steinitz(&["verify", "dual"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("dual: 7/7 match\n"), "{out}");
    let (code, out, _) = steinitz(&["verify", "product", "--max-size", "16"]);
    assert_eq!(code, EXIT_BOUND);
    assert!(out.contains("skipped"));
    let (code, _, _) = steinitz(&["verify", "chains", "--samples", "5", "--seed", "9"]);
    assert_eq!(code, EXIT_OK);
}
