use std::collections::BTreeMap;

use dmm_core::constructions::make_named;
use dmm_core::term::{
    evaluate, library, parse, parse_statement, parse_statement_lines, parse_term, random_term, satisfies,
    satisfies_capped, Atom, Constant, Parsed, Relation, Scope, Statement, Term,
};
use dmm_core::{Element, Error, FiniteIrl};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn named(name: &str) -> FiniteIrl {
    make_named(name).unwrap()
}

fn x() -> Term {
    Term::var("x")
}

fn y() -> Term {
    Term::var("y")
}

fn z() -> Term {
    Term::var("z")
}

#[test]
fn parses_statements() {
    assert_eq!(parse_statement("x <= x * x").unwrap(), Statement::Atom(Atom::leq(x(), Term::fusion(x(), x()))));
    let semilinear = parse_statement("e <= (x -> y) \\/ (y -> x)").unwrap();
    assert_eq!(
        semilinear,
        Statement::Atom(Atom::leq(Term::e(), Term::join(Term::arrow(x(), y()), Term::arrow(y(), x()))))
    );
    match parse_statement("x = y & y = z => x = z").unwrap() {
        Statement::QuasiEquation { premises, conclusion } => {
            assert_eq!(premises.len(), 2);
            assert_eq!(conclusion, Atom::eq(x(), z()));
        }
        other => panic!("expected a quasi-equation, got {other:?}"),
    }
    assert_eq!(parse("x * ~y").unwrap(), Parsed::Term(Term::fusion(x(), Term::neg(y()))));
    assert!(matches!(parse("x = y").unwrap(), Parsed::Statement(_)));
}

#[test]
fn precedence_and_associativity() {
    assert_eq!(parse_term("x -> y -> z").unwrap(), Term::arrow(x(), Term::arrow(y(), z())));
    assert_eq!(parse_term("x \\/ y /\\ z").unwrap(), Term::join(x(), Term::meet(y(), z())));
    assert_eq!(parse_term("~x * y").unwrap(), Term::fusion(Term::neg(x()), y()));
    assert_eq!(parse_term("x * y /\\ z").unwrap(), Term::meet(Term::fusion(x(), y()), z()));
    assert_eq!(parse_term("f").unwrap(), Term::Const(Constant::F));
}

#[test]
fn prints_minimal_parentheses() {
    assert_eq!(Term::fusion(Term::neg(Term::e()), Term::neg(Term::e())).to_string(), "~e * ~e");
    assert_eq!(Term::arrow(x(), Term::arrow(y(), z())).to_string(), "x -> y -> z");
    assert_eq!(Term::meet(Term::join(x(), y()), z()).to_string(), "(x \\/ y) /\\ z");
    assert_eq!(Term::arrow(Term::arrow(x(), y()), z()).to_string(), "(x -> y) -> z");
    let s = parse_statement("x = y & y = z => x = z").unwrap();
    assert_eq!(parse_statement(&s.to_string()).unwrap(), s);
}

#[test]
fn syntax_errors() {
    for bad in ["", "x *", "(x", "x <= y <= z", "x => y", "x # y", "x = y &"] {
        match parse(bad) {
            Err(Error::Syntax { expected, .. }) => assert!(!expected.is_empty(), "{bad}"),
            other => panic!("{bad:?} parsed as {other:?}"),
        }
    }
    match parse_term("x * * y") {
        Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
        other => panic!("{other:?}"),
    }
}

#[test]
fn statement_lines() {
    let text = "# comment\nx <= x * x\n\ne <= x \\/ ~x\n";
    let parsed = parse_statement_lines(text).unwrap();
    assert_eq!(parsed.len(), 2);
    assert!(parse_statement_lines("x <=\n").is_err());
}

#[test]
fn evaluation() {
    let c4 = named("C4");
    let empty = BTreeMap::new();
    let top = c4.element_by_label("f^2").unwrap();
    assert_eq!(evaluate(&parse_term("f * f").unwrap(), &c4, &empty).unwrap(), top);
    assert_eq!(evaluate(&Term::e(), &c4, &empty).unwrap(), c4.e());
    assert_eq!(evaluate(&Term::Const(Constant::F), &c4, &empty).unwrap(), c4.f());
    let s5 = named("S5");
    let env = BTreeMap::from([("x".to_string(), s5.element_by_label("-2").unwrap())]);
    let r = evaluate(&parse_term("x -> x").unwrap(), &s5, &env).unwrap();
    assert_eq!(s5.label(r), "2");
    assert!(matches!(evaluate(&x(), &s5, &empty), Err(Error::UnboundVariable(v)) if v == "x"));
}

#[test]
fn satisfaction() {
    assert!(satisfies(&named("2"), &parse_statement("x <= e").unwrap()).holds);
    assert!(satisfies(&named("C4"), &parse_statement("e <= f").unwrap()).holds);
    let d4 = named("D4");
    let r = satisfies(&d4, &parse_statement("e <= (x -> y) \\/ (y -> x)").unwrap());
    assert!(!r.holds);
    let cx = r.counterexample_map().unwrap();
    let (a, b) = (cx["x"], cx["y"]);
    assert!(!d4.leq(d4.e(), d4.join(d4.residual(a, b), d4.residual(b, a))));
    assert_eq!(d4.label(a), "e");
    assert_eq!(d4.label(b), "f");
}

#[test]
fn counterexamples_come_first_in_lexicographic_order() {
    let s5 = named("S5");
    let r = satisfies(&s5, &parse_statement("x <= y").unwrap());
    assert_eq!(r.counterexample, Some(vec![("x".to_string(), 1), ("y".to_string(), 0)]));
}

#[test]
fn evaluation_count_is_exact_when_the_statement_holds() {
    let s5 = named("S5");
    for (text, k) in [("x <= x * x", 1u32), ("x * y = y * x", 2), ("x * (y * z) = (x * y) * z", 3)] {
        let r = satisfies(&s5, &parse_statement(text).unwrap());
        assert!(r.holds);
        assert_eq!(r.conclusion_evaluations, 5u64.pow(k), "{text}");
    }
    let r = satisfies(&s5, &parse_statement("x = y => x * x = y * y").unwrap());
    assert!(r.holds);
    assert_eq!(r.conclusion_evaluations, 5);
}

#[test]
fn variable_cap() {
    let s = parse_statement("x * y * z * u * v <= x").unwrap();
    assert!(matches!(satisfies_capped(&named("2"), &s, 4), Err(Error::TooManyVariables { found: 5, limit: 4 })));
    assert!(satisfies_capped(&named("2"), &s, 5).is_ok());
}

#[test]
fn library_laws_hold_where_they_should() {
    let lib = library();
    for name in ["2", "S3", "S5", "C4", "D4", "C4ext_1"] {
        let a = named(name);
        for entry in lib.with_scope(Scope::Irl).chain(lib.with_scope(Scope::SquareIncreasing)) {
            for s in &entry.statements {
                assert!(satisfies(&a, s).holds, "{} fails {}", name, entry.key);
            }
        }
    }
    for key in ["law-1", "law-2"] {
        assert!(lib.get(key).is_some());
    }
}

#[test]
fn library_round_trips() {
    for entry in library().entries() {
        for (s, src) in entry.statements.iter().zip(&entry.sources) {
            assert_eq!(&parse_statement(src).unwrap(), s);
            assert_eq!(&parse_statement(&s.to_string()).unwrap(), s, "{}", entry.key);
        }
    }
}

#[test]
fn random_terms_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let t = random_term(&mut rng, 6, &["x", "y", "z"]);
        assert!(t.depth() <= 6);
        assert_eq!(parse_term(&t.to_string()).unwrap(), t, "{t}");
    }
}

/// Straight recursion over the tables, with `a -> b` as the largest `c`
/// with `a * c <= b`.
fn eval_oracle(t: &Term, a: &FiniteIrl, env: &BTreeMap<String, Element>) -> Element {
    match t {
        Term::Var(v) => env[v],
        Term::Const(Constant::E) => a.e(),
        Term::Const(Constant::F) => a.neg(a.e()),
        Term::Neg(s) => a.neg(eval_oracle(s, a, env)),
        Term::Fusion(l, r) => a.fusion(eval_oracle(l, a, env), eval_oracle(r, a, env)),
        Term::Meet(l, r) => a.meet(eval_oracle(l, a, env), eval_oracle(r, a, env)),
        Term::Join(l, r) => a.join(eval_oracle(l, a, env), eval_oracle(r, a, env)),
        Term::Arrow(l, r) => {
            let (p, q) = (eval_oracle(l, a, env), eval_oracle(r, a, env));
            let below: Vec<Element> = a.elements().filter(|&c| a.leq(a.fusion(p, c), q)).collect();
            let max = below.iter().copied().find(|&c| below.iter().all(|&d| a.leq(d, c)));
            max.expect("residual exists")
        }
    }
}

fn statement_oracle(a: &FiniteIrl, s: &Statement) -> bool {
    let vars = s.variables();
    let n = a.size();
    let holds = |at: &Atom, env: &BTreeMap<String, Element>| {
        let (l, r) = (eval_oracle(&at.lhs, a, env), eval_oracle(&at.rhs, a, env));
        match at.relation {
            Relation::Eq => l == r,
            Relation::Leq => a.leq(l, r),
        }
    };
    (0..n.pow(vars.len() as u32)).all(|mut code| {
        let env: BTreeMap<String, Element> = vars
            .iter()
            .map(|v| {
                let x = code % n;
                code /= n;
                (v.clone(), x)
            })
            .collect();
        !s.premises().iter().all(|p| holds(p, &env)) || holds(s.conclusion(), &env)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evaluation_matches_recursion(seed in any::<u64>(), name in prop::sample::select(vec!["S4", "C4", "D4", "C4ext_1"])) {
        let a = named(name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_term(&mut rng, 5, &["x", "y"]);
        for i in a.elements() {
            for j in a.elements() {
                let env = BTreeMap::from([("x".to_string(), i), ("y".to_string(), j)]);
                prop_assert_eq!(evaluate(&t, &a, &env).unwrap(), eval_oracle(&t, &a, &env));
            }
        }
    }

    #[test]
    fn satisfaction_matches_brute_force(seed in any::<u64>(), name in prop::sample::select(vec!["2", "S3", "C4", "D4"])) {
        let a = named(name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_term(&mut rng, 3, &["x", "y"]);
        let r = random_term(&mut rng, 3, &["x", "y"]);
        let p = random_term(&mut rng, 2, &["x"]);
        for s in [
            Statement::Atom(Atom::leq(l.clone(), r.clone())),
            Statement::Atom(Atom::eq(l.clone(), r.clone())),
            Statement::QuasiEquation { premises: vec![Atom::leq(p, Term::e())], conclusion: Atom::leq(l, r) },
        ] {
            prop_assert_eq!(satisfies(&a, &s).holds, statement_oracle(&a, &s), "{}", s);
        }
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), depth in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_term(&mut rng, depth, &["x", "y", "z", "w1"]);
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }
}
