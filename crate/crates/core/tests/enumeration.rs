mod common;

use dmm_core::algebra::{validate_dmm, validate_irl};
use dmm_core::constructions::{is_isomorphic, make_named};
use dmm_core::enumeration::{
    axiomatization_check, enumerate, enumerate_with, lattices, read_catalog, theorem_harness, write_catalog, Catalog,
    ClassFlags, EnumerateOptions, SearchSpec,
};
use dmm_core::Error;

/// De Morgan monoids of sizes 1..=4, confirmed by the slow recount below.
const DMM_COUNTS: [usize; 4] = [1, 1, 1, 4];
/// Involutive residuated lattices of sizes 1..=4, confirmed likewise.
const IRL_COUNTS: [usize; 4] = [1, 1, 2, 9];

#[test]
fn counts_agree_with_slow_recount() {
    for n in 1..=4 {
        let fast = enumerate(&SearchSpec::dmm(n)).unwrap().algebras.len();
        assert_eq!(fast, common::slow_count(n, true), "dmm n={n}");
        assert_eq!(fast, DMM_COUNTS[n - 1]);
        let fast = enumerate(&SearchSpec::new(n, ClassFlags::IRL)).unwrap().algebras.len();
        assert_eq!(fast, common::slow_count(n, false), "irl n={n}");
        assert_eq!(fast, IRL_COUNTS[n - 1]);
    }
}

#[test]
fn smallest_catalogs() {
    let c = enumerate(&SearchSpec::dmm(1)).unwrap();
    assert!(c.complete && c.algebras[0].is_trivial());
    let c = enumerate(&SearchSpec::dmm(2)).unwrap();
    assert_eq!(c.algebras.len(), 1);
    assert!(is_isomorphic(&c.algebras[0], &make_named("2").unwrap()));
    let c = enumerate(&SearchSpec::dmm(3)).unwrap();
    assert_eq!(c.algebras.len(), 1);
    assert!(is_isomorphic(&c.algebras[0], &make_named("S3").unwrap()));
    let c = enumerate(&SearchSpec::dmm(4)).unwrap();
    for name in ["C4", "D4", "S4"] {
        let x = make_named(name).unwrap();
        assert_eq!(c.algebras.iter().filter(|a| is_isomorphic(a, &x)).count(), 1, "{name}");
    }
}

#[test]
fn lattice_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| lattices(n, false).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
    let counts: Vec<usize> = (1..=7).map(|n| lattices(n, true).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 5, 8]);
}

#[test]
fn entries_are_valid_and_distinct() {
    for n in 1..=6 {
        let c = enumerate(&SearchSpec::dmm(n)).unwrap();
        for a in &c.algebras {
            assert!(validate_dmm(a).unwrap().passed(), "{}", a.name());
        }
        for (i, a) in c.algebras.iter().enumerate() {
            for b in &c.algebras[i + 1..] {
                assert!(!is_isomorphic(a, b));
            }
        }
        let irl = enumerate(&SearchSpec::new(n, ClassFlags::IRL)).unwrap();
        assert!(irl.algebras.iter().all(|a| validate_irl(a).passed()));
        // the De Morgan monoids among the IRLs are exactly the DMM catalog
        let dmms: Vec<_> = irl.algebras.iter().filter(|a| validate_dmm(a).unwrap().passed()).collect();
        assert_eq!(dmms.len(), c.algebras.len(), "n={n}");
    }
}

#[test]
fn deterministic_output() {
    for n in [5, 6] {
        let a = enumerate(&SearchSpec::dmm(n)).unwrap().to_json().unwrap();
        let opts = EnumerateOptions { jobs: Some(1), ..Default::default() };
        let b = enumerate_with(&SearchSpec::dmm(n), &opts).unwrap().0.to_json().unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn catalog_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dmm5.json");
    let c = enumerate(&SearchSpec::dmm(5)).unwrap();
    write_catalog(&path, &c).unwrap();
    assert_eq!(read_catalog(&path).unwrap(), c);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dmm_core::algebra::algebras_from_json(&text).unwrap().len(), c.algebras.len());
}

#[test]
fn size_limit_and_checkpoint() {
    assert!(matches!(enumerate(&SearchSpec::dmm(9)), Err(Error::SizeTooLarge { size: 9, max: 8 })));
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let opts = EnumerateOptions { max_size: 5, unsafe_size: true, checkpoint: Some(cp.clone()), ..Default::default() };
    let (c, _) = enumerate_with(&SearchSpec::dmm(6), &opts).unwrap();
    assert!(cp.exists());
    // resuming from a finished checkpoint gives the same catalog
    let (again, _) = enumerate_with(&SearchSpec::dmm(6), &opts).unwrap();
    assert_eq!(c, again);
    assert_eq!(c, enumerate(&SearchSpec::dmm(6)).unwrap());
    assert!(enumerate_with(&SearchSpec::dmm(7), &opts).is_err());
}

#[test]
fn filters_and_limits() {
    let all = enumerate(&SearchSpec::dmm(6)).unwrap();
    let simple = enumerate(&SearchSpec::dmm(6).with_predicates(&["simple"])).unwrap();
    assert!(simple.algebras.len() < all.algebras.len());
    let capped = enumerate(&SearchSpec::dmm(6).with_limit(2)).unwrap();
    assert_eq!(capped.algebras.len(), 2);
    assert!(!capped.complete);
    assert!(matches!(theorem_harness(&capped), Err(Error::IncompleteCatalog)));
    assert!(matches!(enumerate(&SearchSpec::dmm(3).with_predicates(&["shiny"])), Err(Error::UnknownName(_))));
}

#[test]
fn harness_on_small_catalogs() {
    let parts: Vec<Catalog> = (1..=6).map(|n| enumerate(&SearchSpec::dmm(n)).unwrap()).collect();
    let all = Catalog::merge(parts).unwrap();
    let r = theorem_harness(&all).unwrap();
    assert!(r.passed(), "{:?}", r.results.iter().filter(|t| !t.passed()).collect::<Vec<_>>());
    assert!(r.get("zero-generated-simples").unwrap().checked >= 3);
    assert!(axiomatization_check(&all).passed());
    let empty = Catalog { algebras: Vec::new(), ..all };
    assert!(matches!(theorem_harness(&empty), Err(Error::IncompleteCatalog)));
}
