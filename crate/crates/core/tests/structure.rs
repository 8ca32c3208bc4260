use dmm_core::algebra::{validate_dmm, ElementSet};
use dmm_core::constructions::{
    c4, direct_product, homs, is_isomorphic, is_zero_generated, make_named, rigorous_extension, sugihara,
};
use dmm_core::filters::classify;
use dmm_core::structure::{
    bounds_of_generated, embed_c4_if_e_below_f, fusion_pattern_check, idempotent_order_facts, lollipop,
    odd_sugihara_quotient, onto_zero_generated_check, render_hasse, render_lollipop, splitting_check,
};
use dmm_core::{Error, FiniteIrl};

fn named(name: &str) -> FiniteIrl {
    make_named(name).unwrap()
}

fn el(a: &FiniteIrl, label: &str) -> usize {
    a.element_by_label(label).unwrap()
}

fn two_by_two() -> FiniteIrl {
    direct_product(&named("2"), &named("2")).unwrap()
}

/// C4 with a new bottom and top, the top absorbing all but the bottom.
fn c4_plus_pair() -> FiniteIrl {
    let a = rigorous_extension(&c4()).unwrap();
    assert!(validate_dmm(&a).unwrap().passed());
    a
}

fn fsi_sample() -> Vec<FiniteIrl> {
    let mut v: Vec<FiniteIrl> = ["2", "S3", "S4", "S5", "C4", "D4", "C4ext_1", "C4ext_2", "D4ext_1", "D4ext_2"]
        .iter()
        .map(|n| named(n))
        .collect();
    v.push(rigorous_extension(&named("S3")).unwrap());
    v
}

#[test]
fn splitting() {
    assert!(splitting_check(&named("C4")).unwrap().passed);
    assert!(splitting_check(&named("D4")).unwrap().passed);
    assert!(matches!(splitting_check(&two_by_two()), Err(Error::NotFsi)));
    for a in fsi_sample() {
        assert!(splitting_check(&a).unwrap().passed, "{}", a.name());
    }
}

#[test]
fn bounds() {
    let c4 = named("C4");
    let b = bounds_of_generated(&c4, ElementSet::empty()).unwrap();
    assert_eq!((b.c, b.b), (el(&c4, "f"), el(&c4, "f^2")));
    assert_eq!((b.lower, b.upper), (el(&c4, "~f^2"), el(&c4, "f^2")));
    assert!(b.holds);
    let two = named("2");
    let b = bounds_of_generated(&two, ElementSet::empty()).unwrap();
    assert_eq!((b.c, b.b), (el(&two, "e"), el(&two, "e")));
    let s5 = named("S5");
    let b = bounds_of_generated(&s5, ElementSet::singleton(el(&s5, "2"))).unwrap();
    assert_eq!((b.b, b.lower), (el(&s5, "2"), el(&s5, "-2")));
    assert_eq!(b.generated, ["-2", "0", "2"].iter().map(|l| el(&s5, l)).collect());
    for a in fsi_sample() {
        for x in a.elements() {
            assert!(bounds_of_generated(&a, ElementSet::singleton(x)).unwrap().holds);
        }
    }
}

#[test]
fn lollipop_decomposition() {
    for name in ["C4", "D4"] {
        let a = named(name);
        let r = lollipop(&a).unwrap();
        assert!(r.passed() && !r.idempotent_case);
        assert_eq!(r.interval, ElementSet::full(4));
        assert_eq!(r.lower_chain, ElementSet::singleton(el(&a, "~f^2")));
        assert_eq!(r.upper_chain, ElementSet::singleton(el(&a, "f^2")));
    }
    assert!(matches!(lollipop(&two_by_two()), Err(Error::NotFsi)));
    let s5 = lollipop(&named("S5")).unwrap();
    assert!(s5.idempotent_case && s5.totally_ordered);
    let ext = named("C4ext_2");
    let r = lollipop(&ext).unwrap();
    assert!(r.passed());
    assert_eq!(r.interval.len(), 4);
    assert_eq!((r.lower_chain.len(), r.upper_chain.len()), (3, 3));
    for a in fsi_sample() {
        assert!(lollipop(&a).unwrap().passed(), "{}", a.name());
    }
}

#[test]
fn fusion_pattern() {
    let c4 = named("C4");
    assert_eq!(c4.fusion(el(&c4, "f"), el(&c4, "f")), el(&c4, "f^2"));
    let d4 = named("D4");
    assert_eq!(d4.fusion(el(&d4, "f"), el(&d4, "f^2")), el(&d4, "f^2"));
    assert!(fusion_pattern_check(&c4).unwrap().passed);
    assert!(fusion_pattern_check(&d4).unwrap().passed);
    assert!(matches!(fusion_pattern_check(&named("S5")), Err(Error::NotApplicable(_))));
    for a in fsi_sample().iter().filter(|a| !a.elements().all(|x| a.is_idempotent_element(x))) {
        assert!(fusion_pattern_check(a).unwrap().passed, "{}", a.name());
        assert!(idempotent_order_facts(a).unwrap().passed, "{}", a.name());
    }
}

#[test]
fn odd_sugihara_factor() {
    for name in ["C4", "D4"] {
        let r = odd_sugihara_quotient(&named(name)).unwrap();
        assert!(r.passed());
        assert!(r.quotient.algebra.is_trivial());
    }
    let r = odd_sugihara_quotient(&c4_plus_pair()).unwrap();
    assert!(r.passed());
    assert!(is_isomorphic(&r.quotient.algebra, &named("S3")));
    let r = odd_sugihara_quotient(&named("D4ext_2")).unwrap();
    assert!(r.passed());
    assert!(is_isomorphic(&r.quotient.algebra, &sugihara(5).unwrap()));
    assert!(matches!(odd_sugihara_quotient(&named("S3")), Err(Error::NotApplicable(_))));
}

#[test]
fn c4_embeds_when_e_below_f() {
    let c4 = named("C4");
    assert_eq!(embed_c4_if_e_below_f(&c4).unwrap().unwrap().map, vec![0, 1, 2, 3]);
    let ext = c4_plus_pair();
    let h = embed_c4_if_e_below_f(&ext).unwrap().unwrap();
    let f2 = ext.square(ext.f());
    let image: ElementSet = [ext.neg(f2), ext.e(), ext.f(), f2].into_iter().collect();
    assert_eq!(h.image(), image);
    assert!(embed_c4_if_e_below_f(&named("2")).unwrap().is_none());
}

#[test]
fn zero_generated_images() {
    for a in fsi_sample() {
        assert!(onto_zero_generated_check(&a).unwrap().passed, "{}", a.name());
        // the same statement phrased with homomorphisms into small targets
        for b in ["2", "C4", "D4"].map(named) {
            assert!(is_zero_generated(&b));
            for h in homs(&a, &b).iter().filter(|h| h.surjective) {
                assert!(h.is_isomorphism() || is_isomorphic(&b, &c4()), "{} -> {}", a.name(), b.name());
            }
        }
    }
}

#[test]
fn fsi_algebras_are_rigorously_compact() {
    for a in fsi_sample() {
        assert!(classify(&a).fsi);
        let (bot, top) = (a.bottom().unwrap(), a.top().unwrap());
        assert!(a.elements().filter(|&x| x != bot).all(|x| a.fusion(top, x) == top), "{}", a.name());
    }
}

#[test]
fn hasse_text() {
    let c4 = named("C4");
    let text = render_hasse(&c4);
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("  3 | f^2"));
    assert!(text.contains("covers: ~f^2 < e, e < f, f < f^2"));
    let ext = named("C4ext_1");
    let text = render_lollipop(&ext, &lollipop(&ext).unwrap());
    assert!(text.contains("top1[U]") && text.contains("bot1[L]") && text.contains("f[I]"));
}
