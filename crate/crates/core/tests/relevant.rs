use dmm_core::algebra::ElementSet;
use dmm_core::constructions::{direct_product, make_named, rigorous_extensions};
use dmm_core::filters::{classify, congruence_lattice};
use dmm_core::relevant::{
    contains_two_reduct, dfg_oracle, dfg_ra, dfg_ra_set, e_free_reduct, meet_property_check, ra_classify,
    ra_congruence_lattice, ra_filters, ra_from_json, ra_subuniverses, reconstruct_neutral, validate_ra, FiniteRa,
};
use dmm_core::{Error, FiniteIrl};

fn named(name: &str) -> FiniteIrl {
    make_named(name).unwrap()
}

fn reduct(name: &str) -> FiniteRa {
    e_free_reduct(&named(name))
}

fn el(a: &FiniteRa, label: &str) -> usize {
    a.element_by_label(label).unwrap()
}

fn set(a: &FiniteRa, labels: &[&str]) -> ElementSet {
    labels.iter().map(|l| el(a, l)).collect()
}

fn sample() -> Vec<FiniteIrl> {
    let mut out: Vec<FiniteIrl> =
        ["trivial", "2", "S3", "S4", "S5", "S6", "C4", "D4", "C4ext_1", "D4ext_1"].iter().map(|n| named(n)).collect();
    out.push(direct_product(&named("2"), &named("S3")).unwrap());
    out.push(direct_product(&named("2"), &named("2")).unwrap());
    out.extend(rigorous_extensions(&named("S3"), 1));
    out
}

#[test]
fn reducts_validate() {
    for a in sample() {
        assert!(validate_ra(&e_free_reduct(&a)).passed(), "{}", a.name());
    }
}

#[test]
fn broken_square_increasing_is_reported() {
    let two = reduct("2");
    let (bot, top) = (two.bottom(), two.top());
    let mut fusion = two.fusion_table().rows();
    fusion[top][top] = bot;
    let bad = FiniteRa::from_rows(
        "bad",
        &two.meet_table().rows(),
        &two.join_table().rows(),
        &fusion,
        two.neg_table().to_vec(),
    )
    .unwrap();
    let r = validate_ra(&bad);
    assert!(r.axioms().contains(&"square-increasing"));
    assert_eq!(r.witnesses("square-increasing")[0], &[top]);
}

#[test]
fn generated_filters() {
    let s3 = reduct("S3");
    assert_eq!(dfg_ra(&s3, el(&s3, "1")).members, set(&s3, &["0", "1"]));
    assert_eq!(dfg_ra(&s3, el(&s3, "-1")).members, ElementSet::full(3));
    let two = reduct("2");
    assert_eq!(dfg_ra(&two, two.top()).members, ElementSet::singleton(two.top()));
    assert_eq!(dfg_oracle(&two, ElementSet::singleton(two.bottom())).members, ElementSet::full(2));
    for a in sample() {
        let ra = e_free_reduct(&a);
        for x in ra.elements() {
            assert_eq!(dfg_ra(&ra, x), dfg_oracle(&ra, ElementSet::singleton(x)), "{} {x}", a.name());
        }
        assert_eq!(dfg_ra_set(&ra, ElementSet::empty()), dfg_oracle(&ra, ElementSet::empty()));
        for x in ra.elements() {
            for y in ra.elements() {
                let xy: ElementSet = [x, y].into_iter().collect();
                assert_eq!(dfg_ra_set(&ra, xy), dfg_oracle(&ra, xy));
            }
        }
        // every RA filter is generated by one element
        for g in ra_filters(&ra) {
            assert!(ra.elements().any(|x| dfg_ra(&ra, x) == g));
        }
    }
}

#[test]
fn meet_property() {
    for name in ["S3", "C4", "D4"] {
        let r = meet_property_check(&reduct(name));
        assert!(r.passed(), "{name}");
    }
    assert_eq!(meet_property_check(&reduct("S3")).pairs_checked, 9);
    for a in sample() {
        assert!(meet_property_check(&e_free_reduct(&a)).passed(), "{}", a.name());
    }
}

#[test]
fn neutral_reconstruction() {
    let s3 = reduct("S3");
    assert_eq!(reconstruct_neutral(&s3), Some(el(&s3, "0")));
    let c4 = named("C4");
    assert_eq!(reconstruct_neutral(&e_free_reduct(&c4)), Some(c4.e()));
    let two = reduct("2");
    assert_eq!(reconstruct_neutral(&two), Some(two.top()));
    for a in sample() {
        let ra = e_free_reduct(&a);
        assert_eq!(reconstruct_neutral(&ra), Some(a.e()), "{}", a.name());
        assert!(ra.with_neutral(a.e()).unwrap().same_tables(&a));
    }
}

#[test]
fn boolean_copy() {
    let c4 = reduct("C4");
    assert_eq!(contains_two_reduct(&c4).unwrap(), Some((el(&c4, "~f^2"), el(&c4, "f^2"))));
    let d4 = reduct("D4");
    assert_eq!(contains_two_reduct(&d4).unwrap(), Some((el(&d4, "~f^2"), el(&d4, "f^2"))));
    let s3 = reduct("S3");
    assert_eq!(contains_two_reduct(&s3).unwrap(), Some((el(&s3, "-1"), el(&s3, "1"))));
    assert!(matches!(contains_two_reduct(&reduct("trivial")), Err(Error::TrivialAlgebra)));
    for a in sample().iter().filter(|a| !a.is_trivial()) {
        assert!(contains_two_reduct(&e_free_reduct(a)).unwrap().is_some(), "{}", a.name());
    }
}

#[test]
fn classification() {
    let c4 = ra_classify(&reduct("C4")).unwrap();
    assert!(c4.simple && c4.agrees_with_dmm == Some(true));
    let s3 = reduct("S3");
    let c = ra_classify(&s3).unwrap();
    assert!(c.simple);
    let proper: Vec<ElementSet> =
        ra_subuniverses(&s3).into_iter().filter(|u| u.len() > 1 && u.len() < s3.size()).collect();
    assert_eq!(proper, vec![set(&s3, &["-1", "1"])]);
    assert!(ra_classify(&reduct("trivial")).unwrap().trivial);
    for a in sample() {
        let ra = e_free_reduct(&a);
        let rc = ra_classify(&ra).unwrap();
        assert_eq!(rc.agrees_with_dmm, Some(true), "{}", a.name());
        let dc = classify(&a);
        assert_eq!((rc.fsi, rc.si, rc.simple), (dc.fsi, dc.si, dc.simple));
    }
}

#[test]
fn congruences_coincide_with_the_expansion() {
    for a in sample() {
        let mut mine = ra_congruence_lattice(&e_free_reduct(&a)).unwrap().congruences;
        mine.sort();
        let mut theirs = congruence_lattice(&a).congruences;
        theirs.sort();
        assert_eq!(mine, theirs, "{}", a.name());
    }
}

#[test]
fn fsi_reducts_are_rigorously_compact() {
    for a in sample() {
        let ra = e_free_reduct(&a);
        let (bot, top) = (ra.bottom(), ra.top());
        if ra_classify(&ra).unwrap().fsi {
            assert!(ra.elements().filter(|&x| x != bot).all(|x| ra.fusion(top, x) == top), "{}", a.name());
        }
    }
}

#[test]
fn json_round_trip() {
    let c4 = reduct("C4");
    let text = serde_json::to_string(&c4).unwrap();
    assert!(text.contains("\"signature\":\"RA\""));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v.get("e").is_none());
    let back = ra_from_json(&text).unwrap();
    assert_eq!(back, vec![c4]);
    assert!(ra_from_json(&text.replace("\"RA\"", "\"DMM\"")).is_err());
}
