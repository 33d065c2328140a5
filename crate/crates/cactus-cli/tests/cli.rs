use std::process::{Command, Output};

use cactus::CactusWord;

fn ajn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ajn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    ajn(args).status.code().unwrap()
}

#[test]
fn reduce_examples() {
    let o = ajn(&["reduce", "--n", "4", "s(1,2) s(1,2) s(3,4)"]);
    assert_eq!(stdout(&o).lines().next(), Some("s(3,4)"));
    let o = ajn(&["reduce", "--n", "4", "s(2,3) s(1,4) s(2,3)"]);
    assert_eq!(stdout(&o).lines().next(), Some("s(1,4)"));
    assert!(stdout(&o).contains("phi: "));
    let o = ajn(&["reduce", "--n", "2", ""]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
}

#[test]
fn equal_exit_codes() {
    assert_eq!(code(&["equal", "--n", "3", "s(1,2) s(1,3)", "s(1,3) s(2,3)"]), 0);
    assert_eq!(code(&["equal", "--n", "3", "s(1,2)", "s(2,1)"]), 1);
    assert_eq!(
        code(&["equal", "--n", "3", "s(1,2)", r#"{"n":4,"letters":[[1,2]]}"#]),
        2
    );
    assert_eq!(code(&["equal", "--n", "3", "s(1,4)", "s(1,2)"]), 2);
    assert_eq!(code(&["equal", "s(1,2)", "s(1,2)"]), 2);
}

#[test]
fn orders() {
    assert_eq!(stdout(&ajn(&["order", "--n", "4", "s(1,2) s(1,4)"])), "4\n");
    assert_eq!(
        stdout(&ajn(&["order", "--n", "2", "s(1,2) s(2,1)"])),
        "infinite\n"
    );
    assert_eq!(stdout(&ajn(&["order", "--n", "2", ""])), "1\n");
    assert_eq!(
        stdout(&ajn(&["order", "--n", "4", "--json", "s(1,2) s(1,4)"])).trim(),
        "{\n  \"order\": 4\n}"
    );
}

#[test]
fn presentations() {
    let plain = stdout(&ajn(&["presentation", "--n", "2", "ajn"]));
    assert_eq!(plain.lines().filter(|l| l.starts_with("gen: ")).count(), 2);
    assert_eq!(plain.lines().filter(|l| l.ends_with("= 1")).count(), 2);
    let count = |kind: &str| {
        stdout(&ajn(&["presentation", "--n", "3", kind]))
            .matches("gen: ")
            .count()
    };
    assert_eq!(count("adn"), 9);
    assert_eq!(count("coxeter-cactus"), 6);
    assert_eq!(count("jn"), 3);
    let algebra = stdout(&ajn(&["presentation", "--n", "3", "ajn", "--format", "algebra"]));
    assert!(algebra.starts_with("F := FreeGroup("));
    assert_eq!(code(&["presentation", "--n", "3", "bogus"]), 2);
}

#[test]
fn diagram_files() {
    let dir = std::env::temp_dir().join(format!("ajn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cactus.svg");
    let p = path.to_str().unwrap();
    assert_eq!(
        code(&["diagram", "--n", "4", "s(1,2) s(3,1) s(2,3)", "--out", p]),
        0
    );
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 3);
    assert!(svg.contains("stroke-dasharray=\"5,4\""));
    let empty = stdout(&ajn(&["diagram", "--n", "3", ""]));
    assert_eq!(
        (
            empty.matches("<polyline").count(),
            empty.matches("<circle").count()
        ),
        (3, 0)
    );
    let single = stdout(&ajn(&["diagram", "--n", "2", "s(1,2)"]));
    assert_eq!(single.matches("<circle").count(), 1);
    assert_eq!(
        code(&["diagram", "--n", "4", "s(1,2)", "--out", "/nonexistent/dir/x.svg"]),
        3
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn printed_words_reparse() {
    let w = "s(1,2) s(3,1) s(2,3) s(4,2)";
    let expected = CactusWord::parse(4, w).unwrap();
    let reduced = stdout(&ajn(&["reduce", "--n", "4", w]));
    let r = CactusWord::parse(4, reduced.lines().next().unwrap()).unwrap();
    assert!(r.equals(&expected).unwrap());
    let rotated = stdout(&ajn(&["rotate", "--n", "4", "--by", "-3", w]));
    assert_eq!(CactusWord::parse(4, rotated.trim()).unwrap(), expected.rotate(1));
    let split = stdout(&ajn(&["split", "--n", "4", "--p", "3", w]));
    let parts: Vec<CactusWord> = split.lines().map(|l| CactusWord::parse(4, l).unwrap()).collect();
    assert!(parts[0].concat(&parts[1]).unwrap().equals(&expected).unwrap());
    let json = stdout(&ajn(&["rotate", "--n", "4", "--json", w]));
    assert_eq!(code(&["equal", &json, &json]), 0);
}

#[test]
fn small_predicates_and_images() {
    assert_eq!(
        stdout(&ajn(&["perm", "--n", "4", "s(1,2) s(3,1) s(2,3)"])),
        "[3,2,1,4]\n"
    );
    assert_eq!(code(&["pure", "--n", "2", "s(1,2) s(2,1)"]), 0);
    assert_eq!(code(&["pure", "--n", "3", "s(1,2)"]), 1);
    assert_eq!(
        stdout(&ajn(&["phi", "--n", "4", "s(1,2) s(3,1) s(2,3)"])),
        "[(1,2), (3,4,2), {1,6}] [-1,6,1,4]\n"
    );
    let rep: serde_json::Value = serde_json::from_str(&stdout(&ajn(&["rep", "--n", "3"]))).unwrap();
    assert_eq!(rep["affine"].as_array().unwrap().len(), 6);
    assert_eq!(rep["diagram"].as_array().unwrap().len(), 9);
    assert_eq!(rep["affine"][0]["matrix"].as_array().unwrap().len(), 4);
    assert_eq!(code(&["iso-check", "--n", "5"]), 0);
}

#[test]
fn selftest_single_check() {
    let o = ajn(&["selftest", "quick", "--check", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("[PASS]"));
    assert_eq!(code(&["selftest", "quick", "--check", "99"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["phi", "--n", "5", "s(1,3) s(4,2) s(5,1) s(2,4)"][..],
        &["presentation", "--n", "4", "adn", "--format", "algebra"][..],
        &["diagram", "--n", "5", "s(4,2) s(1,3)"][..],
        &["rep", "--n", "3", "--json"][..],
    ] {
        assert_eq!(ajn(args).stdout, ajn(args).stdout);
    }
}
