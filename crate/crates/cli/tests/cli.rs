use std::io::Write;
use std::process::{Command, Output};

use tameweights_cli::{cmd_adequacy, cmd_equiv, cmd_weights, cmd_witness, EquivSpec, Format, GroupSpec, RepSpec, Which};

const CX1: &str = r#"
l = 7
f = 2
e = 6
shape = "split"
characters = [[6, 4], [6, 3]]
weight = [[6, 0], [1, 0]]
"#;

const CX2: &str = r#"
l = 7
f = 2
e = 6
shape = "irreducible"
characters = [[6, 4, 6, 3]]
weight = [[6, 0], [1, 0]]
"#;

const L5_SPLIT: &str = r#"
l = 5
f = 1
e = 1
shape = "split"
characters = [[3], [0]]
"#;

fn run(args: &[&str], input: Option<&str>) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tameweights"));
    cmd.args(args);
    if let Some(text) = input {
        file.write_all(text.as_bytes()).unwrap();
        cmd.arg("--input").arg(file.path());
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counterexample_queries() {
    let out = cmd_weights(&RepSpec::parse(CX1).unwrap(), Which::Explicit, Format::Table).unwrap();
    assert_eq!(out.stdout, "absent\n");
    assert_eq!(out.exit, 0);
    let out = cmd_weights(&RepSpec::parse(CX1).unwrap(), Which::Sch, Format::Table).unwrap();
    assert_eq!(out.stdout, "absent\n");
    let o = run(&["witness"], Some(CX2));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn small_split_table() {
    let o = run(&["weights", "--which", "bdj"], Some(L5_SPLIT));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|r| r.starts_with("d=(2)\tt=0\t((2,0))")), "{text}");
    let mut query = L5_SPLIT.to_string();
    query.push_str("weight = [[2, 0]]\n");
    let out = cmd_weights(&RepSpec::parse(&query).unwrap(), Which::Explicit, Format::Table).unwrap();
    assert_eq!(out.stdout, "present\n");
}

#[test]
fn json_lines_rows() {
    let o = run(&["--format", "json-lines", "weights"], Some(L5_SPLIT));
    let text = stdout(&o);
    assert!(!text.is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let obj = v.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["d", "flags", "representative", "t", "witness"]);
        assert!(obj["witness"].is_object());
    }
}

#[test]
fn nonsplit_rows_are_flagged() {
    let spec = L5_SPLIT.replace("split", "nonsplit");
    let out = cmd_weights(&RepSpec::parse(&spec).unwrap(), Which::Ghs, Format::JsonLines).unwrap();
    for line in out.stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["flags"], serde_json::json!(["superset"]));
    }
    assert!(cmd_weights(&RepSpec::parse(L5_SPLIT).unwrap(), Which::Ghs, Format::Table).is_err());
}

#[test]
fn big_e_witness_is_constructive() {
    let spec = r#"
l = 3
f = 2
e = 4
shape = "split"
characters = [[1, 2], [0, 1]]
weight = [[2, 1], [1, 1]]
"#;
    // E(χ₁χ₂) = 5 + 1 = 6 but E(det) = 3·7 + 6 = 27 ≡ 3 mod 8, so no witness
    let out = cmd_witness(&RepSpec::parse(spec).unwrap(), Format::JsonLines).unwrap();
    assert_eq!(out.stdout, "{\"method\":\"search\",\"witness\":null}\n");
    let spec = spec.replace("[[1, 2], [0, 1]]", "[[1, 2], [2, 0]]");
    let out = cmd_witness(&RepSpec::parse(&spec).unwrap(), Format::JsonLines).unwrap();
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(v["method"], "constructive");
    assert_eq!(v["witness"]["niveau"], 1);
}

#[test]
fn equivalence() {
    let spec = EquivSpec { l: 3, a: vec![(2, 0)], b: vec![(4, 2)] };
    assert_eq!(cmd_equiv(&spec, Format::Table).unwrap().stdout, "true\n");
    let spec = EquivSpec { l: 3, a: vec![(2, 0)], b: vec![(3, 1)] };
    assert_eq!(cmd_equiv(&spec, Format::Table).unwrap().stdout, "false\n");
    let o = run(&["equiv"], Some("l = 3\na = [[2, 0]]\nb = [[4, 2]]\n"));
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn adequacy_reports() {
    let o = run(&["--format", "json-lines", "adequacy"], Some("named = \"SL2(5)\"\n"));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["cond4"]["pass"], false);
    assert_eq!(v["cond4"]["value"], 1);
    assert_eq!(v["verdict"], false);
    let r = cmd_adequacy(&GroupSpec::parse("named = \"GL2(3)\"").unwrap(), 20_000, Format::Table).unwrap();
    assert!(r.stdout.ends_with("verdict\tadequate\n"), "{}", r.stdout);
    // SL_2(F_3) from explicit generators
    let explicit = "l = 3\nn = 2\ngenerators = [[[1, 1], [0, 1]], [[0, 2], [1, 0]]]\n";
    let r = cmd_adequacy(&GroupSpec::parse(explicit).unwrap(), 20_000, Format::Table).unwrap();
    assert!(r.stdout.starts_with("order\t24\ncond1\tfail\tl-part=3\n"), "{}", r.stdout);
    let f9 = "l = 3\nn = 2\nm = 2\ngenerators = [[[[0, 1], 0], [0, [0, 2]]]]\n";
    let r = cmd_adequacy(&GroupSpec::parse(f9).unwrap(), 20_000, Format::Table).unwrap();
    assert!(r.stdout.starts_with("order\t4\n"), "{}", r.stdout);
}

#[test]
fn exit_codes() {
    let singular = "l = 3\nn = 2\ngenerators = [[[1, 1], [1, 1]]]\n";
    let o = run(&["adequacy"], Some(singular));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular"));
    let o = run(&["--cap", "100", "adequacy"], Some("named = \"SL2(5)\"\n"));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["weights"], Some("l = 7\nf = 2\ne = 6\nshape = \"split\"\ncharacters = [[6, 4]]\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("characters"));
    let o = run(&["weights"], Some("l = 7\nf = 2\ne = 6\nshape = \"split\"\ncharacter = [[6, 4], [1, 1]]\n"));
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["frobnicate"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["weights", "--which", "bdj"], Some(&CX1.replace("e = 6", "e = 2")));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["weights", "--jobs", "1"], Some(CX1.replace("weight = [[6, 0], [1, 0]]", "").as_str()));
    let b = run(&["weights", "--jobs", "4"], Some(CX1.replace("weight = [[6, 0], [1, 0]]", "").as_str()));
    assert_eq!(a.stdout, b.stdout);
    let rows: Vec<&str> = std::str::from_utf8(&a.stdout).unwrap().lines().collect();
    assert!(!rows.is_empty());
    let o = run(&["detset"], Some("l = 3\nf = 2\ne = 1\ncharacter = [1, 0]\n"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&run(&["detset"], Some("l = 3\nf = 2\ne = 1\ncharacter = [1, 0]\n"))));
}

#[test]
fn specs_round_trip() {
    for text in [CX1, CX2, L5_SPLIT] {
        let spec = RepSpec::parse(text).unwrap();
        let again = RepSpec::parse(&spec.to_toml()).unwrap();
        assert_eq!(again, spec);
        assert_eq!(again.rep().unwrap(), spec.rep().unwrap());
    }
    for text in [
        "named = \"DIHEDRAL(5, 8)\"\n",
        "l = 3\nn = 2\nm = 2\ngenerators = [[[[0, 1], 0], [0, [0, 2]]], [[0, 1], [1, 0]]]\n",
    ] {
        let spec = GroupSpec::parse(text).unwrap();
        let again = GroupSpec::parse(&spec.to_toml()).unwrap();
        assert_eq!(again, spec);
        assert_eq!(again.group(100).unwrap().elements(), spec.group(100).unwrap().elements());
    }
}
