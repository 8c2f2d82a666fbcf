//! print(parse(s)) parses back to the same tree, and printing is a fixed point.

use std::fs;
use std::path::Path;

use semistar::domain::parse_domain;
use semistar::expr::{parse_expr, print_expr};

#[test]
fn corpus_round_trips() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut checked = 0;
    for entry in fs::read_dir(&corpus).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_none_or(|x| x != "dom") {
            continue;
        }
        let d = parse_domain(&fs::read_to_string(&p).unwrap()).unwrap();
        for line in fs::read_to_string(p.with_extension("exprs")).unwrap().lines() {
            let Ok(ast) = parse_expr(line, &d) else { continue };
            let printed = print_expr(&ast, &d);
            let again = parse_expr(&printed, &d).unwrap_or_else(|e| panic!("{printed}: {e}"));
            assert_eq!(ast, again, "{line} -> {printed}");
            assert_eq!(print_expr(&again, &d), printed);
            checked += 1;
        }
    }
    assert!(checked > 80, "{checked}");
}
