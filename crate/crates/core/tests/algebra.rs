use dmm_core::algebra::{
    algebras_from_json, check_derived_laws, predicates, read_algebra_file, validate_dmm, validate_irl,
    write_algebra_file, BinOpTable,
};
use dmm_core::constructions::{make_named, trivial};
use dmm_core::enumeration::{enumerate, ClassFlags, SearchSpec};
use dmm_core::{Error, FiniteIrl};
use proptest::prelude::*;

fn named(name: &str) -> FiniteIrl {
    make_named(name).unwrap()
}

fn el(a: &FiniteIrl, label: &str) -> usize {
    a.element_by_label(label).unwrap()
}

/// All IRLs and DMMs up to size 5, plus a few larger named algebras.
fn corpus() -> Vec<FiniteIrl> {
    let mut out: Vec<FiniteIrl> =
        (1..=5).flat_map(|n| enumerate(&SearchSpec::new(n, ClassFlags::IRL)).unwrap().algebras).collect();
    for name in ["S6", "S7", "C4ext_1", "C4ext_2", "D4ext_1"] {
        out.push(named(name));
    }
    out
}

#[test]
fn validation_examples() {
    assert!(validate_irl(&named("C4")).passed());
    assert!(validate_irl(&trivial()).passed());
    assert!(validate_dmm(&trivial()).unwrap().passed());
    assert!(validate_dmm(&named("D4")).unwrap().passed());
    assert!(validate_dmm(&named("2")).unwrap().passed());

    // the 2-chain with e at the bottom and f * f = f
    let rows = |t: [[usize; 2]; 2]| t.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let bad = FiniteIrl::from_rows(
        "bad",
        &rows([[0, 0], [0, 1]]),
        &rows([[0, 1], [1, 1]]),
        &rows([[0, 1], [1, 1]]),
        vec![1, 0],
        0,
    )
    .unwrap();
    let r = validate_irl(&bad);
    assert!(!r.passed());
    assert_eq!(r.axioms(), vec!["involution-fusion"]);
    assert!(r.witnesses("involution-fusion").contains(&&[1, 1, 1][..]));
    assert!(matches!(validate_dmm(&bad), Err(Error::NotAnIrl(_))));
}

#[test]
fn irl_that_is_not_square_increasing() {
    let found = (1..=4)
        .flat_map(|n| enumerate(&SearchSpec::new(n, ClassFlags::IRL)).unwrap().algebras)
        .find(|a| validate_dmm(a).unwrap().axioms().contains(&"square-increasing"))
        .expect("a non-square-increasing IRL of size at most 4");
    let r = validate_dmm(&found).unwrap();
    for w in r.witnesses("square-increasing") {
        let x = w[0];
        assert!(found.lt(found.square(x), x));
    }
}

#[test]
fn malformed_tables() {
    let t = BinOpTable::from_fn(2, |a, b| a.min(b));
    assert!(matches!(
        FiniteIrl::from_tables("x", t.clone(), t.clone(), t.clone(), vec![1, 0], 2),
        Err(Error::MalformedTable(_))
    ));
    assert!(matches!(
        FiniteIrl::from_tables("x", t.clone(), t.clone(), t.clone(), vec![1, 5], 0),
        Err(Error::MalformedTable(_))
    ));
    assert!(matches!(FiniteIrl::from_tables("x", t.clone(), t.clone(), t, vec![], 0), Err(Error::MalformedTable(_))));
    assert!(FiniteIrl::from_rows("x", &[vec![0]], &[vec![0, 0]], &[vec![0]], vec![0], 0).is_err());
}

#[test]
fn residual_examples() {
    let c4 = named("C4");
    assert_eq!(c4.residual(el(&c4, "f"), el(&c4, "e")), el(&c4, "~f^2"));
    let s5 = named("S5");
    assert_eq!(s5.residual(el(&s5, "2"), el(&s5, "0")), el(&s5, "-2"));
    for a in [c4, s5, named("D4")] {
        for x in a.elements() {
            assert_eq!(a.residual(a.e(), x), x);
        }
    }
}

#[test]
fn derived_law_examples() {
    assert!(check_derived_laws(&named("2")).passed());
    let c4 = named("C4");
    let r = check_derived_laws(&c4);
    assert!(r.passed());
    assert!(r.get("lemma-cube").unwrap().applicable);
    let f = c4.f();
    assert_eq!(c4.fusion(c4.square(f), f), c4.square(f));
    assert_eq!(c4.square(f), c4.top().unwrap());
    let s5 = named("S5");
    assert!(check_derived_laws(&s5).passed());
    // a = a -> a exactly at e and above
    let fixed: Vec<String> = s5.elements().filter(|&x| s5.residual(x, x) == x).map(|x| s5.label(x)).collect();
    assert_eq!(fixed, ["0", "1", "2"]);
}

#[test]
fn predicates_agree_with_their_definitions() {
    for a in corpus() {
        let p = predicates(&a);
        assert_eq!(p.odd, a.e() == a.f(), "{}", a.name());
        assert_eq!(p.idempotent, a.elements().all(|x| a.square(x) == x), "{}", a.name());
        assert_eq!(p.integral, a.top() == Some(a.e()), "{}", a.name());
        if p.semilinear {
            assert!(p.distributive);
        }
    }
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d4.json");
    let d4 = named("D4");
    write_algebra_file(&path, &d4).unwrap();
    let back = read_algebra_file(path.to_str().unwrap()).unwrap();
    assert!(back.same_tables(&d4));
    assert_eq!(back.labels(), d4.labels());

    let both = serde_json::to_string(&vec![named("C4"), named("S3")]).unwrap();
    let cat = dir.path().join("two.json");
    std::fs::write(&cat, &both).unwrap();
    assert_eq!(algebras_from_json(&both).unwrap().len(), 2);
    let s3 = read_algebra_file(&format!("{}#1", cat.display())).unwrap();
    assert!(s3.same_tables(&named("S3")));
    assert!(read_algebra_file(cat.to_str().unwrap()).is_err());
    assert!(read_algebra_file(&format!("{}#2", cat.display())).is_err());
}

#[test]
fn labels_are_optional() {
    let doc = r#"{"name":"two","size":2,"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],
        "fusion":[[0,0],[0,1]],"neg":[1,0],"e":1}"#;
    let a = &algebras_from_json(doc).unwrap()[0];
    assert!(a.labels().is_none());
    assert_eq!(a.label(0), "0");
    assert!(validate_dmm(a).unwrap().passed());
    let wrong = doc.replace("\"e\":1", "\"e\":1,\"labels\":[\"a\"]");
    assert!(algebras_from_json(&wrong).is_err());
}

fn corpus_strategy() -> impl Strategy<Value = FiniteIrl> {
    prop::sample::select(corpus())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residual_is_the_largest_solution(a in corpus_strategy()) {
        for x in a.elements() {
            for y in a.elements() {
                let r = a.residual(x, y);
                prop_assert!(a.leq(a.fusion(x, r), y));
                for c in a.elements() {
                    prop_assert_eq!(a.leq(a.fusion(x, c), y), a.leq(c, r));
                }
            }
        }
    }

    #[test]
    fn de_morgan_duality(a in corpus_strategy()) {
        for x in a.elements() {
            for y in a.elements() {
                prop_assert_eq!(a.neg(a.meet(x, y)), a.join(a.neg(x), a.neg(y)));
                prop_assert_eq!(a.neg(a.join(x, y)), a.meet(a.neg(x), a.neg(y)));
            }
        }
    }

    #[test]
    fn bounds_form_a_subalgebra(a in corpus_strategy()) {
        let (Some(bot), Some(top)) = (a.bottom(), a.top()) else { return Ok(()) };
        prop_assert_eq!(a.fusion(top, top), top);
        for x in a.elements() {
            prop_assert_eq!(a.fusion(bot, x), bot);
            prop_assert_eq!(a.residual(x, top), top);
        }
        prop_assert_eq!(a.residual(bot, bot), top);
    }

    #[test]
    fn derived_laws_hold(a in corpus_strategy()) {
        let r = check_derived_laws(&a);
        prop_assert!(r.passed(), "{} fails {:?}", a.name(), r.failures().map(|f| f.name).collect::<Vec<_>>());
    }

    #[test]
    fn relabelling_preserves_validity(a in corpus_strategy(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = a.elements().collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let b = a.relabel(&perm);
        prop_assert!(validate_irl(&b).passed());
        prop_assert_eq!(predicates(&a).semilinear, predicates(&b).semilinear);
    }
}
