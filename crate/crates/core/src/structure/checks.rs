use serde::Serialize;

use crate::algebra::{is_square_increasing, validate_dmm, Element, ElementSet, FiniteIrl};
use crate::constructions::{c4, is_isomorphic, is_zero_generated, sg, Homomorphism};
use crate::error::{Error, Result};
use crate::filters::{deductive_filters, order_criteria, quotient, DeductiveFilter, Quotient};

/// Outcome of an exhaustive check: the first failing witness, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Check {
    pub passed: bool,
    pub witness: Option<Vec<Element>>,
    pub detail: Option<String>,
    /// Number of cases examined.
    pub checked: usize,
}

impl Check {
    fn new() -> Self {
        Check { passed: true, ..Check::default() }
    }

    /// Records a failure unless one is already recorded.
    fn fail(&mut self, witness: &[Element], detail: impl Into<String>) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness.to_vec());
            self.detail = Some(detail.into());
        }
    }
}

fn require_dmm(a: &FiniteIrl) -> Result<()> {
    let r = validate_dmm(a).map_err(|e| Error::NotDmm(e.to_string()))?;
    if r.passed() {
        Ok(())
    } else {
        Err(Error::NotDmm(r.summary()))
    }
}

/// In a square-increasing algebra FSI is equivalent to `e` being
/// join-irreducible.
fn require_fsi_dmm(a: &FiniteIrl) -> Result<()> {
    require_dmm(a)?;
    if a.is_trivial() || order_criteria(a).fsi {
        Ok(())
    } else {
        Err(Error::NotFsi)
    }
}

fn is_idempotent(a: &FiniteIrl) -> bool {
    a.elements().all(|x| a.is_idempotent_element(x))
}

fn require_nonidempotent_fsi_dmm(a: &FiniteIrl) -> Result<()> {
    require_fsi_dmm(a)?;
    if is_idempotent(a) {
        return Err(Error::NotApplicable(format!("{} is idempotent", a.name())));
    }
    Ok(())
}

/// Every element lies above `e` or below `f`.
pub fn splitting_check(a: &FiniteIrl) -> Result<Check> {
    require_fsi_dmm(a)?;
    let mut c = Check::new();
    for x in a.elements() {
        c.checked += 1;
        if !a.leq(a.e(), x) && !a.leq(x, a.f()) {
            c.fail(&[x], "neither e <= x nor x <= f");
        }
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsCertificate {
    pub generators: ElementSet,
    /// `e \/ f \/ (x \/ ~x)` over the generators.
    pub c: Element,
    /// `c^2`.
    pub b: Element,
    pub lower: Element,
    pub upper: Element,
    pub generated: ElementSet,
    /// `~b <= x <= b` for every generated `x`.
    pub holds: bool,
}

pub fn bounds_of_generated(a: &FiniteIrl, generators: ElementSet) -> Result<BoundsCertificate> {
    if !is_square_increasing(a) {
        return Err(Error::NotApplicable(format!("{} is not square-increasing", a.name())));
    }
    let c = generators.iter().fold(a.join(a.e(), a.f()), |acc, x| a.join(acc, a.join(x, a.neg(x))));
    let b = a.square(c);
    let generated = sg(a, generators).universe;
    let holds = generated.iter().all(|x| a.leq(a.neg(b), x) && a.leq(x, b));
    Ok(BoundsCertificate { generators, c, b, lower: a.neg(b), upper: b, generated, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LollipopReport {
    pub idempotent_case: bool,
    /// Idempotent case only: the algebra is a chain.
    pub totally_ordered: bool,
    /// `[~(f^2), f^2]`.
    pub interval: ElementSet,
    /// `(~(f^2)]`.
    pub lower_chain: ElementSet,
    /// `[f^2)`.
    pub upper_chain: ElementSet,
    pub violations: Vec<String>,
}

impl LollipopReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Splits a non-idempotent FSI De Morgan monoid into the interval
/// `[~(f^2), f^2]` and the two outer chains, checking that the parts cover the
/// carrier, that the chains consist of idempotents and that the interval is
/// a subuniverse. Idempotent inputs are only checked for being chains.
pub fn lollipop(a: &FiniteIrl) -> Result<LollipopReport> {
    require_fsi_dmm(a)?;
    let f2 = a.square(a.f());
    let nf2 = a.neg(f2);
    let mut r = LollipopReport {
        idempotent_case: is_idempotent(a),
        totally_ordered: a.is_chain(),
        interval: a.interval(nf2, f2),
        lower_chain: a.downset(nf2),
        upper_chain: a.upset(f2),
        violations: Vec::new(),
    };
    if r.idempotent_case {
        if !r.totally_ordered {
            r.violations.push("idempotent but not totally ordered".into());
        }
        return Ok(r);
    }
    let covered = r.interval.union(r.lower_chain).union(r.upper_chain);
    for x in a.elements().filter(|&x| !covered.contains(x)) {
        r.violations.push(format!("{} is outside the interval and both chains", a.label(x)));
    }
    for (name, chain) in [("lower", r.lower_chain), ("upper", r.upper_chain)] {
        if !a.is_chain_set(chain) {
            r.violations.push(format!("{name} part is not a chain"));
        }
        for x in chain.iter().filter(|&x| !a.is_idempotent_element(x)) {
            r.violations.push(format!("{name} part holds non-idempotent {}", a.label(x)));
        }
    }
    if !a.is_subuniverse(r.interval) {
        r.violations.push("interval is not a subuniverse".into());
    }
    Ok(r)
}

/// Fusion of upper bounds of `f`: `f^2` when both are below `f^2`, the larger
/// one otherwise; and for `a < b` with `f^2 <= b`,
/// `a*~b = ~b = b*~b` and `b*~a = b`.
pub fn fusion_pattern_check(a: &FiniteIrl) -> Result<Check> {
    require_nonidempotent_fsi_dmm(a)?;
    let f2 = a.square(a.f());
    let above: Vec<Element> = a.upset(a.f()).to_vec();
    let mut c = Check::new();
    for &x in &above {
        for &y in &above {
            c.checked += 1;
            let xy = a.fusion(x, y);
            if a.leq(x, f2) && a.leq(y, f2) {
                if xy != f2 {
                    c.fail(&[x, y], "both below f^2 but product is not f^2");
                }
            } else if !a.comparable(x, y) {
                c.fail(&[x, y], "incomparable factors");
            } else if xy != a.join(x, y) {
                c.fail(&[x, y], "product is not the larger factor");
            }
            if a.lt(x, y) && a.leq(f2, y) {
                let (nx, ny) = (a.neg(x), a.neg(y));
                if a.fusion(x, ny) != ny || a.fusion(y, ny) != ny || a.fusion(y, nx) != y {
                    c.fail(&[x, y], "products with negations deviate");
                }
            }
        }
    }
    Ok(c)
}

/// `f^2 > e`; idempotent upper bounds of `f` are pairwise comparable; every
/// upper bound of `f` not strictly below `f^2` is idempotent.
pub fn idempotent_order_facts(a: &FiniteIrl) -> Result<Check> {
    require_nonidempotent_fsi_dmm(a)?;
    let f2 = a.square(a.f());
    let mut c = Check::new();
    if !a.lt(a.e(), f2) {
        c.fail(&[f2], "f^2 is not above e");
    }
    let above: Vec<Element> = a.upset(a.f()).to_vec();
    for &x in &above {
        c.checked += 1;
        if !a.lt(x, f2) && !a.is_idempotent_element(x) {
            c.fail(&[x], "not idempotent");
        }
        for &y in &above {
            if a.is_idempotent_element(x) && a.is_idempotent_element(y) && !a.comparable(x, y) {
                c.fail(&[x, y], "incomparable idempotents above f");
            }
        }
    }
    Ok(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct OddSugiharaReport {
    pub filter: DeductiveFilter,
    pub quotient: Quotient,
    /// The quotient is idempotent, odd and totally ordered.
    pub odd_sugihara: bool,
    /// The class of `e` is `[~(f^2), f^2]`.
    pub e_class_is_interval: bool,
    /// Every class other than that of `e` is a singleton.
    pub other_classes_singletons: bool,
}

impl OddSugiharaReport {
    pub fn passed(&self) -> bool {
        self.odd_sugihara && self.e_class_is_interval && self.other_classes_singletons
    }
}

/// The quotient by the filter `[~(f^2))`.
pub fn odd_sugihara_quotient(a: &FiniteIrl) -> Result<OddSugiharaReport> {
    require_nonidempotent_fsi_dmm(a)?;
    let f2 = a.square(a.f());
    let filter = DeductiveFilter::new(a, a.upset(a.neg(f2)))?;
    let q = quotient(a, &filter)?;
    let b = &q.algebra;
    let odd_sugihara = is_idempotent(b) && b.e() == b.f() && b.is_chain();
    let e_class = q.congruence.class_of(a.e());
    let other_classes_singletons = q.congruence.classes().iter().filter(|&&cl| cl != e_class).all(|cl| cl.len() == 1);
    Ok(OddSugiharaReport {
        filter,
        e_class_is_interval: e_class == a.interval(a.neg(f2), f2),
        odd_sugihara,
        other_classes_singletons,
        quotient: q,
    })
}

/// When `e < f`, the embedding of `C4` onto `{~(f^2), e, f, f^2}`.
pub fn embed_c4_if_e_below_f(a: &FiniteIrl) -> Result<Option<Homomorphism>> {
    if !is_square_increasing(a) {
        return Err(Error::NotApplicable(format!("{} is not square-increasing", a.name())));
    }
    if !a.lt(a.e(), a.f()) {
        return Ok(None);
    }
    let f2 = a.square(a.f());
    let h = Homomorphism::checked(&c4(), a, vec![a.neg(f2), a.e(), a.f(), f2])?;
    if !h.injective {
        return Err(Error::NotAHomomorphism("image of C4 collapses".into()));
    }
    Ok(Some(h))
}

/// Every homomorphic image that is nontrivial and 0-generated is either the
/// algebra itself or isomorphic to `C4`. Images are taken as quotients by
/// deductive filters.
pub fn onto_zero_generated_check(a: &FiniteIrl) -> Result<Check> {
    require_fsi_dmm(a)?;
    let c4 = c4();
    let mut c = Check::new();
    for g in deductive_filters(a) {
        c.checked += 1;
        let q = quotient(a, &g)?;
        let b = &q.algebra;
        if b.is_trivial() || !is_zero_generated(b) {
            continue;
        }
        if !q.congruence.is_identity() && !is_isomorphic(b, &c4) {
            c.fail(&g.members.to_vec(), format!("proper image of size {} is not C4", b.size()));
        }
    }
    Ok(c)
}
