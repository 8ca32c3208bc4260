use serde::Serialize;

use super::{Element, FiniteIrl};
use crate::error::{Error, Result};

/// Witnesses recorded per axiom before the check moves on.
const MAX_WITNESSES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<Element>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violated axiom names, in check order, without repetition.
    pub fn axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom.as_str()) {
                out.push(&v.axiom);
            }
        }
        out
    }

    pub fn witnesses(&self, axiom: &str) -> Vec<&[Element]> {
        self.violations.iter().filter(|v| v.axiom == axiom).map(|v| v.witness.as_slice()).collect()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            return "pass".into();
        }
        self.axioms().iter().map(|ax| format!("{ax} {:?}", self.witnesses(ax)[0])).collect::<Vec<_>>().join("; ")
    }
}

struct Collector<'a> {
    report: &'a mut ValidationReport,
    axiom: &'static str,
    count: usize,
}

impl Collector<'_> {
    fn full(&self) -> bool {
        self.count >= MAX_WITNESSES
    }

    fn record(&mut self, witness: &[Element]) {
        if !self.full() {
            self.report.violations.push(Violation { axiom: self.axiom.to_string(), witness: witness.to_vec() });
            self.count += 1;
        }
    }
}

pub(crate) fn check1(r: &mut ValidationReport, axiom: &'static str, n: usize, ok: impl Fn(Element) -> bool) {
    let mut c = Collector { report: r, axiom, count: 0 };
    for a in 0..n {
        if !ok(a) {
            c.record(&[a]);
            if c.full() {
                return;
            }
        }
    }
}

pub(crate) fn check2(r: &mut ValidationReport, axiom: &'static str, n: usize, ok: impl Fn(Element, Element) -> bool) {
    let mut c = Collector { report: r, axiom, count: 0 };
    for a in 0..n {
        for b in 0..n {
            if !ok(a, b) {
                c.record(&[a, b]);
                if c.full() {
                    return;
                }
            }
        }
    }
}

pub(crate) fn check3(
    r: &mut ValidationReport,
    axiom: &'static str,
    n: usize,
    ok: impl Fn(Element, Element, Element) -> bool,
) {
    let mut c = Collector { report: r, axiom, count: 0 };
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                if !ok(a, b, d) {
                    c.record(&[a, b, d]);
                    if c.full() {
                        return;
                    }
                }
            }
        }
    }
}

/// Checks every defining axiom of an involutive residuated lattice and reports
/// all violations (at most 32 witnesses per axiom).
pub fn validate_irl(a: &FiniteIrl) -> ValidationReport {
    let n = a.size();
    let mut r = ValidationReport::default();
    let (m, j) = (|x, y| a.meet(x, y), |x, y| a.join(x, y));

    check1(&mut r, "meet-idempotent", n, |x| m(x, x) == x);
    check2(&mut r, "meet-commutative", n, |x, y| m(x, y) == m(y, x));
    check3(&mut r, "meet-associative", n, |x, y, z| m(m(x, y), z) == m(x, m(y, z)));
    check1(&mut r, "join-idempotent", n, |x| j(x, x) == x);
    check2(&mut r, "join-commutative", n, |x, y| j(x, y) == j(y, x));
    check3(&mut r, "join-associative", n, |x, y, z| j(j(x, y), z) == j(x, j(y, z)));
    check2(&mut r, "absorption", n, |x, y| m(x, j(x, y)) == x && j(x, m(x, y)) == x);
    check2(&mut r, "join-agrees-with-meet", n, |x, y| (j(x, y) == y) == (m(x, y) == x));

    let p = |x, y| a.fusion(x, y);
    check2(&mut r, "fusion-commutative", n, |x, y| p(x, y) == p(y, x));
    check3(&mut r, "fusion-associative", n, |x, y, z| p(p(x, y), z) == p(x, p(y, z)));
    check1(&mut r, "e-neutral", n, |x| p(x, a.e()) == x);

    check1(&mut r, "double-negation", n, |x| a.neg(a.neg(x)) == x);
    // x * y <= z  iff  ~z * y <= ~x
    check3(&mut r, "involution-fusion", n, |x, y, z| a.leq(p(x, y), z) == a.leq(p(a.neg(z), y), a.neg(x)));
    r
}

/// Checks the De Morgan monoid axioms on top of [`validate_irl`]:
/// square-increasing (`x <= x * x`) and lattice distributivity.
pub fn validate_dmm(a: &FiniteIrl) -> Result<ValidationReport> {
    let base = validate_irl(a);
    if !base.passed() {
        return Err(Error::NotAnIrl(base.summary()));
    }
    let n = a.size();
    let mut r = ValidationReport::default();
    check1(&mut r, "square-increasing", n, |x| a.leq(x, a.square(x)));
    check3(&mut r, "distributive", n, |x, y, z| a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z)));
    Ok(r)
}

pub fn is_distributive(a: &FiniteIrl) -> bool {
    a.elements().all(|x| {
        a.elements().all(|y| a.elements().all(|z| a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z))))
    })
}

pub fn is_square_increasing(a: &FiniteIrl) -> bool {
    a.elements().all(|x| a.leq(x, a.square(x)))
}

/// Valid IRL that is also a De Morgan monoid.
pub fn is_dmm(a: &FiniteIrl) -> bool {
    validate_irl(a).passed() && is_square_increasing(a) && is_distributive(a)
}
