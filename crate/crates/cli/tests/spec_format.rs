use catalg::{parse_spec, Command, SpecErrorKind, TaskArgs};
use catalg_core::linalg::Field;

const SMALL: &str = r#"
field = "rationals"

[categories.A]
objects = ["x", "y"]
morphisms = [["1_x", "x", "x"], ["1_y", "y", "y"], ["f", "x", "y"]]
compositions = [
  ["1_x", "1_x", "1_x"],
  ["1_y", "1_y", "1_y"],
  ["f", "1_x", "f"],
  ["1_y", "f", "f"],
]

[algebras.k]
preset = "field"

[algebras.m]
basis = ["1", "u"]
unit = [1, 0]
products = [["1", "1", [1, 0]], ["1", "u", [0, 1]], ["u", "1", [0, 1]], ["u", "u", ["-3/2", 0]]]

[precosheaves.K]
category = "A"
algebras = { x = "k", y = "k" }
homs = { f = [[1]] }
"#;

#[test]
fn parses_small_document() {
    let spec = parse_spec(SMALL, None).unwrap();
    assert_eq!(spec.field, Field::Rationals);
    assert_eq!(spec.categories["A"].num_morphisms(), 3);
    assert_eq!(spec.algebras["m"].dim(), 2);
    assert_eq!(
        spec.algebras["m"].basis_product(1, 1)[0],
        Field::Rationals.parse("-3/2").unwrap()
    );
    assert!(spec.tasks.is_empty());
}

#[test]
fn empty_task_list_runs_nothing() {
    let spec = parse_spec(SMALL, None).unwrap();
    let r = catalg::run(&spec, false);
    assert!(r.tasks.is_empty());
    assert!(r.all_pass());
    assert!(r.summary().contains("tasks = 0"));
}

#[test]
fn field_override_and_declared_prime() {
    let spec = parse_spec(SMALL, Some(Field::prime(7).unwrap())).unwrap();
    assert_eq!(spec.field, Field::Prime(7));
    // -3/2 = 2 mod 7
    assert_eq!(
        spec.algebras["m"].basis_product(1, 1)[0],
        Field::Prime(7).from_int(2)
    );
    let text = SMALL.replace("field = \"rationals\"", "field = \"gf:101\"");
    assert_eq!(parse_spec(&text, None).unwrap().field, Field::Prime(101));
}

fn error(text: &str) -> catalg::SpecError {
    parse_spec(text, None).unwrap_err()
}

#[test]
fn non_prime_field_is_rejected_with_position() {
    let e = error(&SMALL.replace("field = \"rationals\"", "field = \"gf:100\""));
    assert_eq!(e.kind, SpecErrorKind::NotPrime(100));
    assert_eq!((e.line, e.column), (2, 9));
}

#[test]
fn unknown_category_is_named() {
    let e = error(&SMALL.replace("category = \"A\"", "category = \"B\""));
    assert_eq!(
        e.kind,
        SpecErrorKind::UnknownName {
            kind: "category",
            name: "B".into()
        }
    );
    let line = SMALL
        .lines()
        .position(|l| l.starts_with("category = "))
        .unwrap()
        + 1;
    assert_eq!(e.line, line);
    assert!(e
        .to_string()
        .starts_with(&format!("line {line}, column 12")));
}

#[test]
fn duplicate_object_is_rejected() {
    let e = error(&SMALL.replace("objects = [\"x\", \"y\"]", "objects = [\"x\", \"x\"]"));
    assert!(matches!(
        e.kind,
        SpecErrorKind::Duplicate { kind: "object", .. }
    ));
}

#[test]
fn duplicate_declaration_is_a_syntax_error() {
    let e = error(&format!("{SMALL}\n[algebras.k]\npreset = \"field\"\n"));
    assert!(matches!(e.kind, SpecErrorKind::Syntax(_)), "{e}");
    assert!(e.line > 20);
}

#[test]
fn malformed_matrices() {
    let e = error(&SMALL.replace("homs = { f = [[1]] }", "homs = { f = [[1, 0]] }"));
    assert!(matches!(e.kind, SpecErrorKind::MalformedMatrix(_)), "{e}");
    let e = error(&SMALL.replace("homs = { f = [[1]] }", "homs = { f = [[\"1/0\"]] }"));
    assert!(matches!(e.kind, SpecErrorKind::MalformedMatrix(_)), "{e}");
    let e = error(&SMALL.replace("unit = [1, 0]", "unit = [1]"));
    assert!(matches!(e.kind, SpecErrorKind::MalformedMatrix(_)), "{e}");
}

#[test]
fn denominator_divisible_by_p_is_malformed() {
    let e = parse_spec(SMALL, Some(Field::prime(2).unwrap())).unwrap_err();
    assert!(matches!(e.kind, SpecErrorKind::MalformedMatrix(_)), "{e}");
}

#[test]
fn missing_non_identity_hom_is_rejected() {
    let e = error(&SMALL.replace("homs = { f = [[1]] }", ""));
    assert!(
        e.to_string()
            .contains("no hom for non-identity morphism \"f\""),
        "{e}"
    );
}

#[test]
fn unknown_command_and_task_names() {
    let e = error(&format!(
        "{SMALL}\n[[tasks]]\ncommand = \"verify everything\"\n"
    ));
    assert!(matches!(
        e.kind,
        SpecErrorKind::UnknownName {
            kind: "command",
            ..
        }
    ));
    let e = error(&format!(
        "{SMALL}\n[[tasks]]\ncommand = \"build skew\"\nprecosheaf = \"nope\"\n"
    ));
    assert!(matches!(
        e.kind,
        SpecErrorKind::UnknownName {
            kind: "precosheaf",
            ..
        }
    ));
    let e = error(&format!(
        "{SMALL}\n[[tasks]]\ncommand = \"verify cond423\"\n"
    ));
    assert!(e.to_string().contains("no functor"), "{e}");
}

#[test]
fn unknown_key_is_a_syntax_error() {
    let e = error(&format!("{SMALL}\ncolour = 3\n"));
    assert!(matches!(e.kind, SpecErrorKind::Syntax(_)));
}

#[test]
fn tasks_fill_in_unambiguous_arguments() {
    let spec = parse_spec(SMALL, None).unwrap();
    let t = spec.task(Command::BuildSkew, &TaskArgs::default()).unwrap();
    assert_eq!(t.arguments(), vec![("precosheaf", "K".to_string())]);
    let t = spec.task(Command::BuildKc, &TaskArgs::default()).unwrap();
    assert_eq!(t.arguments(), vec![("category", "A".to_string())]);
    for c in Command::ALL {
        assert_eq!(Command::parse(c.as_str()), Some(c));
    }
}

#[test]
fn constant_precosheaf_twisting_passes() {
    let text = format!("{SMALL}\n[[tasks]]\ncommand = \"verify twisting\"\n");
    let r = catalg::run(&parse_spec(&text, None).unwrap(), false);
    assert!(r.all_pass(), "{}", r.render(false));
}
