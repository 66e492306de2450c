use smalldeg::cli::{parse_ideal_file, run, ParseOptions};
use smalldeg::constructions::scroll;
use smalldeg::resolve::BettiTable;
use smalldeg::ring::DEFAULT_CHARACTERISTIC as P;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn smalldeg(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["smalldeg".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const CUBIC: &str = "ring char=32003 vars=x0,x1,x2,x3 order=grevlex;\ngens: x0*x2-x1^2, x0*x3-x1*x2, x1*x3-x2^2;\n";

#[test]
fn twisted_cubic_diagram() {
    let (code, out, _) = smalldeg(&["betti", &fixture("twisted-cubic.ideal")], "");
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert!(rows.contains(&"    0: 1 . ."), "{out}");
    assert!(rows.contains(&"    1: . 3 2"), "{out}");
    assert!(out.contains("total: 1 3 2"));
}

#[test]
fn json_round_trip() {
    let (code, out, _) = smalldeg(&["--json", "betti", "-"], CUBIC);
    assert_eq!(code, 0);
    let t = BettiTable::from_json(&out).unwrap();
    assert_eq!(t.get(1, 2), 3);
    assert_eq!(t.get(2, 3), 2);
    assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
}

#[test]
fn fixture_is_the_twisted_cubic() {
    let text = std::fs::read_to_string(fixture("twisted-cubic.ideal")).unwrap();
    let parsed = parse_ideal_file(&text, &ParseOptions::default()).unwrap().ideal().unwrap();
    assert!(parsed.equals(&scroll(P, &[3]).unwrap()));
}

#[test]
fn parse_errors_are_located() {
    let (code, _, err) = smalldeg(&["betti", "-"], "ring char=32003 vars=x,y order=grevlex;\ngens: ;\n");
    assert_eq!(code, 2);
    assert!(err.contains("2:"), "{err}");

    let (code, _, err) = smalldeg(&["betti", "-"], "ring char=32003 vars=x,y order=grevlex;\ngens: x^2, y^3+x;\n");
    assert_eq!(code, 2);
    assert!(err.contains("generator 1") && err.contains("y^3+x"), "{err}");

    let text = "ring char=32003 vars=x,y order=grevlex;\ngens: x^2, y^3+x;\n";
    let opts = ParseOptions { allow_inhomogeneous: true, ..Default::default() };
    assert_eq!(parse_ideal_file(text, &opts).unwrap().generators.len(), 2);

    let (code, _, err) = smalldeg(&["betti", "-"], "ring char=32003 vars=x,y order=grevlex;\ngens: x*z;\n");
    assert_eq!(code, 2);
    assert!(err.contains("2:") && err.contains('z'), "{err}");

    let (code, _, _) = smalldeg(&["betti", "-"], "ring char=32004 vars=x order=grevlex;\ngens: x;\n");
    assert_eq!(code, 2);
}

#[test]
fn usage_and_io_errors() {
    assert_eq!(smalldeg(&["frobnicate"], "").0, 2);
    assert_eq!(smalldeg(&["betti", "/nonexistent/file.ideal"], "").0, 1);
    assert_eq!(smalldeg(&["construct", "no-such-entry"], "").0, 2);
}

#[test]
fn construct_pipes_into_betti() {
    let (code, ideal, _) = smalldeg(&["construct", "deg6-c1", "--emit"], "");
    assert_eq!(code, 0);
    assert!(ideal.starts_with("ring "));
    let (code, out, _) = smalldeg(&["betti", "-"], &ideal);
    assert_eq!(code, 0);
    let (_, direct, _) = smalldeg(&["--json", "betti", "-"], &ideal);
    let t = BettiTable::from_json(&direct).unwrap();
    assert_eq!((t.get(1, 2), t.get(1, 3)), (8, 1));
    assert!(out.contains("total:"));
}

#[test]
fn construct_families() {
    let (code, out, _) = smalldeg(&["construct", "scroll", "2", "2", "--emit"], "");
    assert_eq!(code, 0);
    let (_, json, _) = smalldeg(&["--json", "betti", "-"], &out);
    let t = BettiTable::from_json(&json).unwrap();
    assert_eq!((t.get(1, 2), t.get(2, 3), t.get(3, 4)), (6, 8, 3));
}

#[test]
fn rope_explicit_complex() {
    let (code, out, err) = smalldeg(&["rope", "--spec", &fixture("p5-double-line.rope"), "--explicit-complex"], "");
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("complex: OK, minimal: yes, matches GB resolution: yes"), "{out}");
    assert!(out.contains("G_1:"));
}

#[test]
fn rope_spec_errors() {
    let dir = std::env::temp_dir().join("smalldeg-cli-test.rope");
    std::fs::write(&dir, "rope n=5 k=1\nt\ns\n").unwrap();
    let (code, _, err) = smalldeg(&["rope", "--spec", dir.to_str().unwrap()], "");
    assert_eq!(code, 2);
    assert!(err.contains("rows") || err.contains(':'), "{err}");
    let _ = std::fs::remove_file(dir);
}

#[test]
fn verify_paper_summary() {
    let (code, out, _) = smalldeg(&["verify-paper", "--filter", "formula/"], "");
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("PASS ") && last.contains('/'), "{out}");
    let (k, n) = last[5..].split_once('/').unwrap();
    assert_eq!(k, n);
}

#[test]
fn unit_ideal_renders() {
    let (code, out, _) = smalldeg(&["--json", "betti", "-"], "ring char=32003 vars=x,y order=grevlex;\ngens: 0;\n");
    assert_eq!(code, 0);
    let t = BettiTable::from_json(&out).unwrap();
    assert_eq!(t.get(0, 0), 1);
    assert_eq!(t.pd(), 0);
}
