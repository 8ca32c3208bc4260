use rayon::prelude::*;
use serde::Serialize;

use super::catalog::Catalog;
use crate::algebra::{check_derived_laws, is_distributive, is_square_increasing, validate_irl, ElementSet, FiniteIrl};
use crate::constructions::{hs_contains, is_isomorphic, is_zero_generated, make_named, MINIMAL};
use crate::error::{Error, Result};
use crate::filters::{classify, congruence_lattice};
use crate::relevant::{
    contains_two_reduct, dfg_oracle, dfg_ra, e_free_reduct, meet_property_check, ra_congruence_lattice,
    reconstruct_neutral, validate_ra,
};
use crate::structure::{
    bounds_of_generated, embed_c4_if_e_below_f, fusion_pattern_check, idempotent_order_facts, lollipop,
    odd_sugihara_quotient, onto_zero_generated_check, splitting_check,
};
use crate::term::{library, satisfies, Scope};

/// Checks in report order.
const THEOREMS: &[&str] = &[
    "class-membership",
    "derived-laws",
    "law-library",
    "classification-agreement",
    "generated-bounds",
    "zero-generated-simples",
    "minimal-varieties",
    "splitting",
    "rigorous-compactness",
    "zero-generated-images",
    "c4-embedding",
    "lollipop",
    "fusion-pattern",
    "idempotent-order",
    "odd-sugihara-quotient",
    "relevant-reduct",
];

#[derive(Clone, Debug, Serialize)]
pub struct TheoremResult {
    pub theorem: String,
    /// Catalog entries the check applied to.
    pub checked: usize,
    /// First failing entry.
    pub counterexample: Option<FiniteIrl>,
    pub detail: Option<String>,
}

impl TheoremResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    pub entries: usize,
    pub results: Vec<TheoremResult>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }

    pub fn get(&self, theorem: &str) -> Option<&TheoremResult> {
        self.results.iter().find(|r| r.theorem == theorem)
    }
}

/// `None`: not applicable; `Some(Err(_))`: failed.
type Outcome = Option<std::result::Result<(), String>>;

fn ok_if(cond: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn from_check(r: Result<crate::structure::Check>) -> std::result::Result<(), String> {
    match r {
        Ok(c) if c.passed => Ok(()),
        Ok(c) => Err(format!("{} at {:?}", c.detail.unwrap_or_default(), c.witness.unwrap_or_default())),
        Err(e) => Err(e.to_string()),
    }
}

fn relevant_reduct(a: &FiniteIrl) -> std::result::Result<(), String> {
    let ra = e_free_reduct(a);
    let v = validate_ra(&ra);
    ok_if(v.passed(), || format!("reduct fails {}", v.summary()))?;
    for x in ra.elements() {
        ok_if(dfg_ra(&ra, x) == dfg_oracle(&ra, ElementSet::singleton(x)), || format!("DFg mismatch at {x}"))?;
    }
    ok_if(meet_property_check(&ra).passed(), || "meet property fails".into())?;
    ok_if(reconstruct_neutral(&ra) == Some(a.e()), || "neutral element not recovered".into())?;
    if !a.is_trivial() {
        let w = contains_two_reduct(&ra).map_err(|e| e.to_string())?;
        ok_if(w.is_some(), || "no two-element Boolean subreduct".into())?;
    }
    let mut mine = ra_congruence_lattice(&ra).map_err(|e| e.to_string())?.congruences;
    mine.sort();
    let mut theirs = congruence_lattice(a).congruences;
    theirs.sort();
    ok_if(mine == theirs, || "congruences differ from those of the expansion".into())
}

fn check_algebra(a: &FiniteIrl, minimal: &[FiniteIrl]) -> Vec<Outcome> {
    let si = is_square_increasing(a);
    let dmm = si && is_distributive(a);
    let class = classify(a);
    let fsi = dmm && class.fsi;
    let nonidempotent_fsi = fsi && a.elements().any(|x| !a.is_idempotent_element(x));
    let lib = library();
    THEOREMS
        .iter()
        .map(|&name| match name {
            "class-membership" => {
                let r = validate_irl(a);
                Some(ok_if(r.passed(), || r.summary()))
            }
            "derived-laws" => {
                let r = check_derived_laws(a);
                Some(ok_if(r.passed(), || r.failures().map(|f| f.name).collect::<Vec<_>>().join(", ")))
            }
            "law-library" => Some(
                lib.entries()
                    .iter()
                    .filter(|e| e.scope == Scope::Irl || (si && e.scope == Scope::SquareIncreasing))
                    .try_for_each(|e| ok_if(e.statements.iter().all(|s| satisfies(a, s).holds), || e.key.to_string())),
            ),
            "classification-agreement" => {
                Some(ok_if(class.criteria_agree && class.cross_check_ok, || format!("{class:?}")))
            }
            "generated-bounds" => si.then(|| {
                a.elements().try_for_each(|x| {
                    let b = bounds_of_generated(a, ElementSet::singleton(x)).map_err(|e| e.to_string())?;
                    ok_if(b.holds, || format!("bounds fail for generator {x}"))
                })
            }),
            "zero-generated-simples" => (dmm && class.simple && is_zero_generated(a)).then(|| {
                ok_if(["2", "C4", "D4"].iter().any(|n| is_isomorphic(a, &make_named(n).expect("named"))), || {
                    "simple 0-generated algebra outside {2, C4, D4}".into()
                })
            }),
            "minimal-varieties" => (dmm && !a.is_trivial())
                .then(|| ok_if(minimal.iter().any(|x| hs_contains(a, x)), || "no minimal algebra in HS".into())),
            "splitting" => fsi.then(|| from_check(splitting_check(a))),
            "rigorous-compactness" => fsi.then(|| {
                let (bot, top) = (a.bottom().expect("finite"), a.top().expect("finite"));
                ok_if(a.elements().filter(|&x| x != bot).all(|x| a.fusion(top, x) == top), || {
                    "top does not absorb".into()
                })
            }),
            "zero-generated-images" => fsi.then(|| from_check(onto_zero_generated_check(a))),
            "c4-embedding" => (dmm && a.lt(a.e(), a.f())).then(|| match embed_c4_if_e_below_f(a) {
                Ok(Some(h)) => ok_if(h.injective, || "not injective".into()),
                Ok(None) => Err("no embedding".into()),
                Err(e) => Err(e.to_string()),
            }),
            "lollipop" => nonidempotent_fsi.then(|| match lollipop(a) {
                Ok(r) => ok_if(r.passed(), || r.violations.join("; ")),
                Err(e) => Err(e.to_string()),
            }),
            "fusion-pattern" => nonidempotent_fsi.then(|| from_check(fusion_pattern_check(a))),
            "idempotent-order" => nonidempotent_fsi.then(|| from_check(idempotent_order_facts(a))),
            "odd-sugihara-quotient" => nonidempotent_fsi.then(|| match odd_sugihara_quotient(a) {
                Ok(r) => ok_if(r.passed(), || {
                    format!("{:?}", (r.odd_sugihara, r.e_class_is_interval, r.other_classes_singletons))
                }),
                Err(e) => Err(e.to_string()),
            }),
            "relevant-reduct" => dmm.then(|| relevant_reduct(a)),
            _ => unreachable!("unknown theorem {name}"),
        })
        .collect()
}

/// Runs every applicable check on every entry of a complete catalog.
pub fn theorem_harness(catalog: &Catalog) -> Result<HarnessReport> {
    if !catalog.complete || catalog.algebras.is_empty() {
        return Err(Error::IncompleteCatalog);
    }
    let minimal: Vec<FiniteIrl> = MINIMAL.iter().map(|n| make_named(n)).collect::<Result<_>>()?;
    let outcomes: Vec<Vec<Outcome>> = catalog.algebras.par_iter().map(|a| check_algebra(a, &minimal)).collect();
    let results = THEOREMS
        .iter()
        .enumerate()
        .map(|(i, &name)| {
            let mut r = TheoremResult { theorem: name.to_string(), checked: 0, counterexample: None, detail: None };
            for (a, o) in catalog.algebras.iter().zip(&outcomes) {
                match &o[i] {
                    None => {}
                    Some(Ok(())) => r.checked += 1,
                    Some(Err(why)) => {
                        r.checked += 1;
                        if r.counterexample.is_none() {
                            r.counterexample = Some(a.clone());
                            r.detail = Some(why.clone());
                        }
                    }
                }
            }
            r
        })
        .collect();
    Ok(HarnessReport { entries: catalog.algebras.len(), results })
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomatizationRow {
    pub algebra: String,
    pub axioms: Vec<&'static str>,
    pub satisfies_own: bool,
    /// SI catalog entries satisfying the axioms.
    pub matches: Vec<String>,
    /// Every match is isomorphic to the algebra.
    pub only_itself: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomatizationReport {
    pub si_entries: usize,
    pub rows: Vec<AxiomatizationRow>,
}

impl AxiomatizationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.satisfies_own && r.only_itself)
    }
}

/// For each minimal algebra: it satisfies its axiom set, and every SI entry
/// of the catalog satisfying the set is isomorphic to it.
pub fn axiomatization_check(catalog: &Catalog) -> AxiomatizationReport {
    let lib = library();
    let si: Vec<&FiniteIrl> = catalog.algebras.iter().filter(|a| classify(a).si).collect();
    let rows = MINIMAL
        .iter()
        .map(|&name| {
            let x = make_named(name).expect("named algebra");
            let axioms = lib.axiom_set(name).expect("axiom set for every minimal algebra");
            let holds = |a: &FiniteIrl| axioms.iter().all(|s| satisfies(a, s).holds);
            let matches: Vec<&FiniteIrl> = si.iter().copied().filter(|a| holds(a)).collect();
            AxiomatizationRow {
                algebra: name.to_string(),
                axioms: lib.axiom_set_keys(name).expect("keys").to_vec(),
                satisfies_own: holds(&x),
                only_itself: matches.iter().all(|a| is_isomorphic(a, &x)),
                matches: matches.iter().map(|a| a.name().to_string()).collect(),
            }
        })
        .collect();
    AxiomatizationReport { si_entries: si.len(), rows }
}
