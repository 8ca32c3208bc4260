use dmm_core::algebra::{is_square_increasing, predicates, ElementSet};
use dmm_core::constructions::{direct_product, is_isomorphic, make_named, trivial};
use dmm_core::enumeration::{enumerate, ClassFlags, SearchSpec};
use dmm_core::filters::{
    classify, congruence_lattice, congruences_bruteforce, deductive_filters, deductive_filters_principal, dfg,
    filter_of, omega, quotient, quotient_by, Congruence, DeductiveFilter,
};
use dmm_core::{Error, FiniteIrl};

fn named(name: &str) -> FiniteIrl {
    make_named(name).unwrap()
}

fn set(a: &FiniteIrl, labels: &[&str]) -> ElementSet {
    labels.iter().map(|l| a.element_by_label(l).unwrap()).collect()
}

fn catalog(max: usize, class: ClassFlags) -> Vec<FiniteIrl> {
    (1..=max).flat_map(|n| enumerate(&SearchSpec::new(n, class)).unwrap().algebras).collect()
}

/// Every subset containing `e` that is up-closed and closed under meet and
/// fusion, by brute force over all subsets.
fn filters_oracle(a: &FiniteIrl) -> Vec<ElementSet> {
    let n = a.size();
    let mut out: Vec<ElementSet> = (0u64..1 << n)
        .map(|bits| a.elements().filter(|&x| bits >> x & 1 == 1).collect::<ElementSet>())
        .filter(|s| {
            s.contains(a.e())
                && s.iter().all(|x| {
                    a.elements().all(|y| !a.leq(x, y) || s.contains(y))
                        && s.iter().all(|y| s.contains(a.meet(x, y)) && s.contains(a.fusion(x, y)))
                })
        })
        .collect();
    out.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    out
}

#[test]
fn filter_examples() {
    let s3 = named("S3");
    let fs: Vec<ElementSet> = deductive_filters(&s3).iter().map(|g| g.members).collect();
    assert_eq!(fs, vec![set(&s3, &["0", "1"]), set(&s3, &["-1", "0", "1"])]);
    let two = named("2");
    assert_eq!(deductive_filters(&two).len(), 2);
    let c4 = named("C4");
    let fs: Vec<ElementSet> = deductive_filters(&c4).iter().map(|g| g.members).collect();
    assert_eq!(fs, vec![c4.upset(c4.e()), ElementSet::full(4)]);
    assert_eq!(
        deductive_filters(&named("D4")).len(),
        2,
        "D4 is simple, so its only filters are [e) and the whole algebra"
    );
}

#[test]
fn generated_filters() {
    let c4 = named("C4");
    assert_eq!(dfg(&c4, set(&c4, &["~f^2"])).members, ElementSet::full(4));
    for a in [named("C4"), named("S5"), named("D4")] {
        assert_eq!(dfg(&a, ElementSet::empty()).members, a.upset(a.e()));
    }
    let s5 = named("S5");
    assert_eq!(dfg(&s5, set(&s5, &["-1"])).members, set(&s5, &["-1", "0", "1", "2"]));
    assert!(matches!(DeductiveFilter::new(&s5, set(&s5, &["1"])), Err(Error::NotAFilter(_))));
}

#[test]
fn congruence_examples() {
    let s5 = named("S5");
    let g = dfg(&s5, set(&s5, &["-1"]));
    let theta = omega(&s5, &g).unwrap();
    let classes: Vec<ElementSet> = theta.classes();
    assert_eq!(classes, vec![set(&s5, &["-2"]), set(&s5, &["-1", "0", "1"]), set(&s5, &["2"])]);
    for a in [named("S5"), named("C4"), named("D4")] {
        assert!(omega(&a, &dfg(&a, ElementSet::empty())).unwrap().is_identity());
    }
    let c4 = named("C4");
    let upper = dfg(&c4, set(&c4, &["f"]));
    assert_eq!(filter_of(&c4, &omega(&c4, &upper).unwrap()).unwrap(), upper);
    let bogus = Congruence::from_labels(&[0, 0, 1, 1]);
    assert!(matches!(filter_of(&c4, &bogus), Err(Error::NotACongruence(_))));
}

#[test]
fn quotient_examples() {
    let s5 = named("S5");
    let q = quotient(&s5, &dfg(&s5, set(&s5, &["-1"]))).unwrap();
    assert!(is_isomorphic(&q.algebra, &named("S3")));
    for a in [named("S5"), named("C4"), named("D4")] {
        let all = DeductiveFilter::new(&a, ElementSet::full(a.size())).unwrap();
        assert!(quotient(&a, &all).unwrap().algebra.is_trivial());
    }
    let c4 = named("C4");
    assert!(quotient(&c4, &dfg(&c4, set(&c4, &["~f^2"]))).unwrap().algebra.is_trivial());
}

#[test]
fn classification_examples() {
    let d4 = classify(&named("D4"));
    assert!(d4.simple && d4.si && d4.fsi);
    let s5 = named("S5");
    let c = classify(&s5);
    assert!(c.si && !c.simple);
    assert_eq!(c.subcover, s5.element_by_label("-1"));
    let p = direct_product(&named("2"), &named("2")).unwrap();
    assert!(!classify(&p).fsi);
    assert_eq!(congruence_lattice(&named("C4")).len(), 2);
    assert!(congruence_lattice(&named("S5")).is_chain());
    assert_eq!(congruence_lattice(&named("S5")).len(), 3);
    assert_eq!(congruence_lattice(&trivial()).len(), 1);
    assert_eq!(congruence_lattice(&named("2")).len(), 2);
}

#[test]
fn filters_match_brute_force() {
    for a in catalog(6, ClassFlags::DMM).iter().chain(&catalog(5, ClassFlags::IRL)) {
        let fs: Vec<ElementSet> = deductive_filters(a).iter().map(|g| g.members).collect();
        assert_eq!(fs, filters_oracle(a), "{}", a.name());
        let mut principal: Vec<ElementSet> = deductive_filters_principal(a).iter().map(|g| g.members).collect();
        principal.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
        assert_eq!(principal, fs, "{}", a.name());
    }
}

#[test]
fn filters_and_congruences_correspond() {
    for a in catalog(6, ClassFlags::DMM).iter().chain(&catalog(5, ClassFlags::IRL)) {
        let lat = congruence_lattice(a);
        let mut cs = lat.congruences.clone();
        cs.sort();
        assert_eq!(cs, congruences_bruteforce(a), "{}", a.name());
        for (g, theta) in lat.filters.iter().zip(&lat.congruences) {
            assert_eq!(&filter_of(a, theta).unwrap(), g);
            for (h, psi) in lat.filters.iter().zip(&lat.congruences) {
                assert_eq!(g.members.is_subset(h.members), theta.refines(psi), "{}", a.name());
            }
            let q = quotient_by(a, theta).unwrap();
            for x in a.elements() {
                for y in a.elements() {
                    assert_eq!(g.contains(a.residual(x, y)), q.algebra.leq(q.projection[x], q.projection[y]));
                }
            }
        }
        let c = classify(a);
        assert!(c.criteria_agree && c.cross_check_ok, "{}", a.name());
    }
}

#[test]
fn idempotent_quotients() {
    for a in catalog(6, ClassFlags::IRL).iter().filter(|a| is_square_increasing(a)) {
        let low = a.neg(a.square(a.f()));
        let fsi_dmm = predicates(a).distributive && classify(a).fsi && !predicates(a).idempotent;
        for g in deductive_filters(a) {
            let q = quotient(a, &g).unwrap().algebra;
            let p = predicates(&q);
            assert_eq!(p.idempotent, g.contains(low), "{}", a.name());
            if fsi_dmm && g.contains(low) {
                assert!(p.odd && p.idempotent && q.is_chain(), "{}", a.name());
            }
        }
    }
}
