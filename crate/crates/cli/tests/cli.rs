use std::path::PathBuf;
use std::process::Command;

use noether::diffprim::get_pde;
use noether::ideal::Ideal;
use noether_cli::document::{DecompositionDocument, IdealDocument, RawDecomposition};
use noether_cli::run;
use tempfile::TempDir;

const VOGEL: &str = "ring x,y,z over QQ\nideal: x^2*y; x^2*z; x*y^2; x*y*z^2\n";
const PALAMODOV: &str = "ring x,y,z over QQ\nideal: x*y*z^2; x*y^2*z; x^2*y*z; y^2*z^2; \
    2*x*y*z - x*z^2 + y*z^3; 2*x*y*z - x^2*y + x^3*z; 2*x*y*z - y^2*z + x*y^3\n";
const CUBIC: &str = "ring x,y,z over QQ\norder grevlex\nideal: x^2*z; y^3 + z^3; x^2*y; x^3 + y^3 + z^3\n";

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

fn ok(args: &[&str]) -> String {
    let mut full = vec!["noether"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    let mut full = vec!["noether"];
    full.extend_from_slice(args);
    run(full).code
}

fn component_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| l.starts_with("component:")).collect()
}

#[test]
fn vogel_decomposition() {
    let f = Files::new();
    let input = f.put("vogel.txt", VOGEL);
    let out = ok(&["solvepde", &input]);
    assert_eq!(
        component_lines(&out),
        [
            "component: prime = x | basis = y,z | ops = 1 | multiplicity = 1",
            "component: prime = z; y | basis = x | ops = 1 | multiplicity = 1",
            "component: prime = y; x | basis = z | ops = dx | multiplicity = 1",
            "component: prime = z; y; x | basis = | ops = dx*dy; dx*dy*dz | multiplicity = 2",
        ]
    );
    assert!(out.contains("amult: 5\n"));
    assert!(out.contains("verified: true\n"));
}

#[test]
fn vogel_roundtrip_through_getpde() {
    let f = Files::new();
    let input = f.put("vogel.txt", VOGEL);
    let dec = f.put("vogel.dec", &ok(&["solvepde", &input]));
    let back = IdealDocument::parse(&ok(&["getpde", &dec]), None).unwrap();
    let orig = IdealDocument::parse(VOGEL, None).unwrap();
    assert!(back.ideal.equals(&orig.ideal));
    assert_eq!(back.ideal.gens().len(), 4);

    let json = f.put("vogel.json", &ok(&["solvepde", &input, "--json"]));
    let back = IdealDocument::parse(&ok(&["getpde", &json, "--json"]), None).unwrap();
    assert!(back.ideal.equals(&orig.ideal));
}

#[test]
fn getpde_single_component() {
    let f = Files::new();
    let dec = f.put("x.dec", "ring x,y,z over QQ\ncomponent: prime = x | basis = y,z | ops = 1\n");
    let back = IdealDocument::parse(&ok(&["getpde", &dec]), None).unwrap();
    assert_eq!(back.ideal.gens().len(), 1);
    assert_eq!(back.ideal.gens()[0].to_string(), "x");
}

#[test]
fn getpde_of_displayed_palamodov_operators() {
    let f = Files::new();
    let dec = f.put(
        "pal.dec",
        "ring x,y,z over QQ\n\
         component: prime = y; z | basis = x | ops = 1; x*dy + dz\n\
         component: prime = x; z | basis = y | ops = 1; y*dz + dx\n\
         component: prime = x; y | basis = z | ops = 1; z*dx + dy\n\
         component: prime = x; y; z | basis = | ops = dx*dy*dz + dx^2*dy + dy^2*dz + dz^2*dx\n",
    );
    let back = IdealDocument::parse(&ok(&["getpde", &dec]), None).unwrap();
    let orig = IdealDocument::parse(PALAMODOV, None).unwrap();
    assert!(back.ideal.equals(&orig.ideal));
}

#[test]
fn palamodov_commands() {
    let f = Files::new();
    let input = f.put("pal.txt", PALAMODOV);
    let ass = ok(&["ass", &input]);
    assert_eq!(component_lines(&ass).len(), 4);
    let amult = ok(&["amult", &input]);
    assert!(amult.contains("amult: 7\n"));
    let primdec = ok(&["primdec", &input]);
    assert!(component_lines(&primdec).iter().all(|l| l.contains("| primary = ")));
}

#[test]
fn vogel_amult_table() {
    let f = Files::new();
    let input = f.put("vogel.txt", VOGEL);
    let out = ok(&["amult", &input]);
    let mults: Vec<&str> =
        component_lines(&out).iter().map(|l| l.rsplit("multiplicity = ").next().unwrap()).collect();
    assert_eq!(mults, ["1", "1", "1", "2"]);
    assert!(out.contains("amult: 5\n"));
    let json: serde_json::Value = serde_json::from_str(&ok(&["amult", &input, "--json"])).unwrap();
    assert_eq!(json["amult"], 5);
    assert_eq!(json["components"].as_array().unwrap().len(), 4);
}

#[test]
fn cubic_cone_decomposition() {
    let f = Files::new();
    let input = f.put("cubic.txt", CUBIC);
    let json: serde_json::Value = serde_json::from_str(&ok(&["solvepde", &input, "--json"])).unwrap();
    let ops: Vec<Vec<String>> = json["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["operators"].as_array().unwrap().iter().map(|o| o.as_str().unwrap().to_string()).collect())
        .collect();
    assert_eq!(ops, [vec!["1", "dx"], vec!["1", "dx"], vec!["dx^2"]]);
    assert_eq!(json["verified"], true);
    for key in ["ring", "components", "amult", "source", "verified"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    for key in ["prime", "basis", "operators", "multiplicity"] {
        assert!(json["components"][0].get(key).is_some(), "{key}");
    }
}

#[test]
fn apply_operator() {
    assert_eq!(ok(&["apply", "--op", "x*dy+dz", "--poly", "y-x*z"]), "0\n");
    assert_eq!(ok(&["apply", "--op", "dx^2", "--poly", "x^3*y"]), "6*x*y\n");
    assert_eq!(ok(&["apply", "--op", "dt", "--poly", "t^2", "--ring", "s,t"]), "2*t\n");
}

#[test]
fn zero_ideal_convention() {
    let f = Files::new();
    let input = f.put("zero.txt", "ring x,y over QQ\nideal:\n");
    let out = ok(&["solvepde", &input]);
    assert_eq!(component_lines(&out), ["component: prime = 0 | basis = x,y | ops = 1 | multiplicity = 1"]);
    let dec = f.put("zero.dec", &out);
    let back = IdealDocument::parse(&ok(&["getpde", &dec]), None).unwrap();
    assert!(back.ideal.is_zero());
}

#[test]
fn exit_codes() {
    let f = Files::new();
    let garbage = f.put("bad.txt", "ring x,y over QQ\nideal: x^^2\n");
    assert_eq!(code(&["solvepde", &garbage]), 1);
    let unknown = f.put("unknown.txt", "ring x,y over QQ\nideal: x*w\n");
    assert_eq!(code(&["solvepde", &unknown]), 1);
    assert_eq!(code(&["solvepde", "/nonexistent/file"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    let unit = f.put("unit.txt", "ring x,y over QQ\nideal: 1\n");
    assert_eq!(code(&["solvepde", &unit]), 2);
    let pairing = f.put("pair.dec", "ring x,y,z over QQ\ncomponent: prime = x | basis = y,z | ops = dy\n");
    assert_eq!(code(&["getpde", &pairing]), 2);
    let count = f.put("count.dec", "ring x,y,z over QQ\ncomponent: prime = x | basis = y,z | ops = 1 | multiplicity = 2\n");
    assert_eq!(code(&["getpde", &count]), 2);
}

#[test]
fn verify_detects_missing_operator() {
    let f = Files::new();
    let input = f.put("vogel.txt", VOGEL);
    let good = ok(&["solvepde", &input]);
    let dec = f.put("good.dec", &good);
    let report = ok(&["verify", &input, &dec]);
    assert!(report.ends_with("result: passed\n"));

    let broken = good.replace("ops = dx*dy; dx*dy*dz | multiplicity = 2", "ops = dx*dy | multiplicity = 1");
    let dec = f.put("broken.dec", &broken);
    let mut args = vec!["noether", "verify", input.as_str(), dec.as_str()];
    let out = run(args.clone());
    assert_eq!(out.code, 3);
    assert!(out.stdout.contains("result: failed"));
    args.push("--json");
    let json: serde_json::Value = serde_json::from_str(&run(args).stdout).unwrap();
    assert_eq!(json["passed"], false);

    // The remaining operator regenerates dx*dy under commutators, so only
    // the span of the local dual exposes the gap.
    let hidden = good.replace("ops = dx*dy; dx*dy*dz | multiplicity = 2", "ops = dx*dy*dz | multiplicity = 1");
    let dec = f.put("hidden.dec", &hidden);
    let out = run(vec!["noether", "verify", input.as_str(), dec.as_str()]);
    assert_eq!(out.code, 3, "{}", out.stdout);
    assert!(out.stdout.contains("miss 1 dimensions"), "{}", out.stdout);
}

#[test]
fn documents_roundtrip() {
    let f = Files::new();
    for (name, text) in [("vogel", VOGEL), ("pal", PALAMODOV), ("cubic", CUBIC)] {
        let input = f.put(name, text);
        let doc = IdealDocument::parse(text, None).unwrap();
        let again = IdealDocument::parse(&doc.to_text(), None).unwrap();
        assert!(again.ideal.equals(&doc.ideal));
        assert_eq!(again.to_text(), IdealDocument::parse(&doc.to_json(), None).unwrap().to_text());

        let out = ok(&["solvepde", &input]);
        let dec = DecompositionDocument::parse(&out, None).unwrap();
        assert_eq!(dec.to_text().replace("verified: true\n", ""), out.replace("source: monomial-engine\n", "").replace("source: gtz-engine\n", "").replace("verified: true\n", ""));
        let json = ok(&["solvepde", &input, "--json"]);
        let from_json = DecompositionDocument::parse(&json, None).unwrap();
        assert_eq!(from_json.to_text(), dec.to_text());
        let rebuilt = get_pde(&dec.components).unwrap();
        assert!(rebuilt.equals(&doc.ideal));
    }
}

#[test]
fn ass_output_is_a_primes_file() {
    let f = Files::new();
    let input = f.put("pal.txt", PALAMODOV);
    let primes = f.put("pal.primes", &ok(&["ass", &input]));
    let raw = RawDecomposition::parse(&std::fs::read_to_string(&primes).unwrap(), None).unwrap();
    assert_eq!(raw.components.len(), 4);
    let with = ok(&["solvepde", &input, "--primes", &primes]);
    let without = ok(&["solvepde", &input]);
    assert_eq!(component_lines(&with), component_lines(&without));
    assert!(with.contains("source: supplied\n"));
}

#[test]
fn output_is_deterministic() {
    let f = Files::new();
    let input = f.put("pal.txt", PALAMODOV);
    for flags in [vec![], vec!["--json"], vec!["--seed", "7"]] {
        let mut a = vec!["solvepde", input.as_str()];
        a.extend(flags.iter().copied());
        assert_eq!(ok(&a), ok(&a));
    }
}

#[test]
fn lex_order_flag() {
    let f = Files::new();
    let input = f.put("vogel.txt", VOGEL);
    let out = ok(&["solvepde", &input, "--order", "lex"]);
    assert!(out.contains("order lex\n"));
    assert!(out.contains("amult: 5\n"));
    let dec = f.put("lex.dec", &out);
    let back = IdealDocument::parse(&ok(&["getpde", &dec]), None).unwrap();
    let orig = IdealDocument::parse(VOGEL, Some("lex")).unwrap();
    assert!(back.ideal.equals(&orig.ideal));
}

#[test]
fn binomial_with_supplied_primes() {
    let f = Files::new();
    let input = f.put(
        "binom.txt",
        "ring x1,x2,x3,x4 over QQ\n\
         ideal: x1^3*x3^2 - x2^5; x2^2*x4^3 - x3^5; x1^5*x4^2 - x2^7; x1^2*x4^5 - x3^7\n",
    );
    let primes = f.put(
        "binom.primes",
        "ring x1,x2,x3,x4 over QQ\n\
         prime: x2*x3 - x1*x4; x3^5 - x2^2*x4^3; x1*x3^4 - x2^3*x4^2; x1^2*x3^3 - x2^4*x4; x2^5 - x1^3*x3^2\n\
         prime: x1; x2; x3\n\
         prime: x2; x3; x4\n\
         prime: x1; x2; x3; x4\n",
    );
    let out = ok(&["amult", &input, "--primes", &primes, "--no-verify"]);
    let mults: Vec<&str> =
        component_lines(&out).iter().map(|l| l.rsplit("multiplicity = ").next().unwrap()).collect();
    assert_eq!(mults, ["1", "18", "18", "170"]);
    assert!(out.contains("amult: 207\n"));
}

#[test]
fn binary_exit_status() {
    let f = Files::new();
    let input = f.put("vogel.txt", VOGEL);
    let bin = env!("CARGO_BIN_EXE_noether");
    let out = Command::new(bin).args(["amult", &input]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("amult: 5"));
    let out = Command::new(bin).args(["getpde", &input]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let _ = Ideal::zero;
}
