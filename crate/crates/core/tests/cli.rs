use std::io::Write as _;
use std::process::{Command, Stdio};

use good_semigroups::cli::{build, parse_document, run};

fn call(args: &[&str], input: &str) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("goodsg").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

const DUP: &str = r#"{"kind":"duplication","semigroup":[2,3],"ideal":[6]}"#;
const AMALG: &str = r#"{"kind":"amalgamation","semigroup":[2,3],"target":[3,4],"ideal":[3],"factor":2}"#;
const HALF_SLOPE: &str = r#"{"kind":"maximal","left":[4,6,13],"right":[2,3],
  "maximal":[[0,0],[4,2],[6,3],[8,4],[10,5],[12,6],[14,7],[16,8],[18,9],[20,10],[24,12],[22,11],[28,14]]}"#;
const PRODUCT: &str = r#"{"kind":"cartesian","left":[3,5,7],"right":[4,5]}"#;

#[test]
fn golden_small() {
    let (code, out) = call(&["small"], DUP);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        concat!(
            r#"{"conductor":[8,8],"dim":2,"kind":"small","small":[[0,0],[2,2],[3,3],[4,4],[5,5],[6,6],"#,
            r#"[6,7],[6,8],[7,6],[7,7],[8,6],[8,8]]}"#,
            "\n"
        )
    );
}

#[test]
fn golden_check_of_the_product() {
    let (code, out) = call(&["check"], PRODUCT);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"conductor\":[5,12],\"local\":false,\"small_count\":21,\"valid\":true}\n");

    let small = call(&["small"], PRODUCT).1;
    let (code, out) = call(&["check", "--format", "text"], &small);
    assert_eq!(code, 0);
    assert!(out.contains("valid: true"));
}

#[test]
fn golden_mingens_of_half_slope() {
    let (code, out) = call(&["mingens"], HALF_SLOPE);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"conductor\":[29,15],\"minimal_generating_system\":[[4,2],[6,3],[13,15],[29,13]]}\n");
}

#[test]
fn golden_arf_closure() {
    let input = r#"{"kind":"generators","generators":[[4,3],[3,4]],"conductor":[6,7]}"#;
    let (code, out) = call(&["arf-closure"], input);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"conductor\":[3,3],\"dim\":2,\"kind\":\"small\",\"level\":1,\"small\":[[0,0],[3,3]]}\n");
}

#[test]
fn golden_maximal_and_membership() {
    let (_, out) = call(&["maximal"], AMALG);
    assert_eq!(out, "{\"maximal_elements\":[[0,0],[2,4],[4,8]]}\n");
    let (_, out) = call(&["member", "--point", "5,40"], AMALG);
    assert_eq!(out, "{\"member\":true,\"point\":[5,40]}\n");
    let (_, out) = call(&["member", "--point", "4,9"], AMALG);
    assert_eq!(out, "{\"member\":false,\"point\":[4,9]}\n");
}

#[test]
fn canonical_and_symmetry() {
    let input = r#"{"kind":"duplication","semigroup":[3,5],"ideal":[3]}"#;
    let (code, out) = call(&["canonical"], input);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["generators"].to_string(),
        "[[0,0],[3,11],[5,5],[6,11],[8,11],[9,11],[10,10],[11,3],[11,6],[11,8],[11,9]]"
    );
    assert_eq!(v["equals_semigroup"], true);
    assert_eq!(call(&["symmetric"], input).1, "{\"symmetric\":true}\n");
    let not = r#"{"kind":"duplication","semigroup":[3,5],"ideal":[3,5]}"#;
    assert_eq!(call(&["symmetric"], not).1, "{\"symmetric\":false}\n");
}

#[test]
fn is_mingens() {
    let (_, out) = call(&["is-mingens", "--gens", "4,2", "6,3", "13,15", "26,15", "29,13"], HALF_SLOPE);
    assert_eq!(out, "{\"generates\":true,\"generators\":[[4,2],[6,3],[13,15],[26,15],[29,13]],\"minimal\":false}\n");
    let (_, out) = call(&["is-mingens", "--gens", "4,2", "6,3", "13,15", "29,13"], HALF_SLOPE);
    assert!(out.contains("\"minimal\":true"));
    let (_, out) = call(&["is-mingens", "--gens", "4,2"], HALF_SLOPE);
    assert!(out.contains("\"generates\":false"));
}

#[test]
fn saturate_reports_the_gap() {
    let input = r#"{"kind":"small","small":[[0,0],[3,3],[4,4],[5,4],[4,6],[6,6]]}"#;
    let (code, out) = call(&["saturate", "--box", "8,8"], input);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["arf_closure_minus_saturation"].to_string(), "[[4,5]]");
    assert_eq!(v["infima_closure_is_arf_closure"], true);
    assert_eq!(call(&["arf"], input).1, "{\"arf\":false}\n");
}

#[test]
fn non_local_products() {
    let input = r#"{"kind":"cartesian","left":[3,5,7],"right":[2,5]}"#;
    let (code, out) = call(&["mingens"], input);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"conductor\":[5,4],\"minimal\":false,\"product_generating_system\":[[0,2],[3,0],[3,2]]}\n");
    let small = call(&["small"], input).1;
    let (code, out) = call(&["mingens"], &small);
    assert_eq!(code, 4);
    assert!(out.contains("\"error\":\"non_local\""));
}

#[test]
fn small_output_round_trips() {
    for input in [DUP, AMALG, HALF_SLOPE, PRODUCT] {
        let original = build(&parse_document(input).unwrap()).unwrap().semigroup;
        let (_, small) = call(&["small"], input);
        let again = build(&parse_document(&small).unwrap()).unwrap().semigroup;
        assert_eq!(original, again);
        assert_eq!(call(&["small"], &small).1, small);
    }
}

#[test]
fn construct_describes_the_semigroup() {
    let (_, out) = call(&["construct"], AMALG);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["projection_generators"].to_string(), "[[2,3],[3,4]]");
    assert_eq!(v["local"], true);
    assert_eq!(v["conductor"].to_string(), "[5,9]");
}

#[test]
fn plots_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.svg");
    let path = path.to_str().unwrap();
    let (code, out) = call(&["plot", "--output", path], DUP);
    assert_eq!((code, out.as_str()), (0, ""));
    let first = std::fs::read_to_string(path).unwrap();
    call(&["plot", "--output", path], DUP);
    assert_eq!(std::fs::read_to_string(path).unwrap(), first);
    assert_eq!(first.matches("<circle").count(), 12);

    let (_, ascii) = call(&["plot", "--render", "ascii"], AMALG);
    assert_eq!(ascii, call(&["plot", "--render", "ascii"], AMALG).1);
    let row3 = ascii.lines().find(|l| l.starts_with(" 3 ")).unwrap();
    assert_eq!(row3, " 3 ..****--");

    let (_, marked) = call(&["plot", "--mark-gens"], DUP);
    assert!(marked.contains(r##"stroke="#c00""##));
    let (code, _) = call(&["plot", "--canonical"], DUP);
    assert_eq!(code, 0);
}

#[test]
fn rejected_inputs() {
    let bad = r#"{"kind":"generators","generators":[[3,4],[7,8]],"conductor":[8,10]}"#;
    let (code, out) = call(&["check"], bad);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["violation"]["axiom"], "g2");
    assert_eq!(v["small"].to_string(), "[[0,0],[3,4],[6,8],[7,8],[8,10]]");
    let (code, _) = call(&["small"], bad);
    assert_eq!(code, 1);

    assert_eq!(call(&["small"], "not json").0, 2);
    assert_eq!(call(&["small"], r#"{"kind":"small","small":[[0,-1]]}"#).0, 2);
    assert_eq!(call(&["member"], DUP).0, 2);
    assert_eq!(call(&["arf"], r#"{"dim":3,"kind":"small","small":[[0,0,0],[1,1,1]]}"#).0, 3);
}

#[test]
fn the_binary() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_goodsg"))
        .args(["check", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(PRODUCT.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("valid: true"));

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    std::fs::write(&input, r#"{"kind":"small","small":[[0,0],[2,2],[4,2],[4,4],[6,4],[6,6]]}"#).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_goodsg")).arg("check").arg(&input).output().unwrap().status;
    assert_eq!(status.code(), Some(1));
}
