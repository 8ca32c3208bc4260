//! Direct table checks of the standard laws of (square-increasing) IRLs.
//!
//! These are evaluated natively, independently of the term language, so the
//! law library in [`crate::term`] can be used as a second route over the same
//! statements.

use serde::Serialize;

use super::validate::is_square_increasing;
use super::{Element, FiniteIrl};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub name: &'static str,
    pub applicable: bool,
    /// First failing assignment in lexicographic order.
    pub counterexample: Option<Vec<Element>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.counterexample.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| r.counterexample.is_some())
    }

    pub fn get(&self, name: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

fn first1(n: usize, ok: impl Fn(Element) -> bool) -> Option<Vec<Element>> {
    (0..n).find(|&x| !ok(x)).map(|x| vec![x])
}

fn first2(n: usize, ok: impl Fn(Element, Element) -> bool) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            if !ok(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn first3(n: usize, ok: impl Fn(Element, Element, Element) -> bool) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !ok(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// Evaluates the standard derived laws over all assignments.
///
/// The caller is expected to pass a validated IRL; a failure then points at a
/// bug in the table machinery. Laws that need `x <= x^2` are marked not
/// applicable on other algebras.
pub fn check_derived_laws(a: &FiniteIrl) -> LawReport {
    let n = a.size();
    let si = is_square_increasing(a);
    let le = |x, y| a.leq(x, y);
    let p = |x, y| a.fusion(x, y);
    let r = |x, y| a.residual(x, y);
    let m = |x, y| a.meet(x, y);
    let j = |x, y| a.join(x, y);
    let ng = |x| a.neg(x);
    let (e, f) = (a.e(), a.f());

    let mut out = LawReport::default();
    let mut push = |name: &'static str, applicable: bool, cex: Option<Vec<Element>>| {
        out.results.push(LawResult { name, applicable, counterexample: if applicable { cex } else { None } });
    };

    push("residual-is-max", true, first2(n, |x, y| a.residual_by_max(x, y) == Some(r(x, y))));
    push("law-2", true, first3(n, |x, y, z| le(p(x, y), z) == le(y, r(x, z))));
    push("law-3", true, first2(n, |x, y| ng(x) == r(x, f) && r(x, y) == r(ng(y), ng(x)) && p(x, y) == ng(r(x, ng(y)))));
    push("de-morgan", true, first2(n, |x, y| ng(m(x, y)) == j(ng(x), ng(y)) && ng(j(x, y)) == m(ng(x), ng(y))));
    push("law-4", true, first2(n, |x, y| le(p(x, r(x, y)), y) && le(x, r(r(x, y), y))));
    push("law-5", true, first3(n, |x, y, z| r(p(x, y), z) == r(y, r(x, z)) && r(y, r(x, z)) == r(x, r(y, z))));
    push("law-6", true, first3(n, |x, y, z| le(p(r(x, y), r(y, z)), r(x, z))));
    push("law-7", true, first3(n, |x, y, z| p(x, j(y, z)) == j(p(x, y), p(x, z))));
    push(
        "law-8",
        true,
        first3(n, |x, y, z| !le(x, y) || (le(p(x, z), p(y, z)) && le(r(z, x), r(z, y)) && le(r(y, z), r(x, z)))),
    );
    push("law-9", true, first2(n, |x, y| le(x, y) == le(e, r(x, y))));
    push("law-10", true, first2(n, |x, y| (x == y) == le(e, a.biresidual(x, y))));
    push("law-11", true, first1(n, |x| le(e, r(x, x)) && r(e, x) == x));
    push("law-12", true, first1(n, |x| le(e, x) == le(r(x, x), x)));
    // e <= a = a^2  iff  a * ~a = ~a  iff  a = a -> a
    push(
        "lemma-3-conditions",
        true,
        first1(n, |x| {
            let c1 = le(e, x) && p(x, x) == x;
            let c2 = p(x, ng(x)) == ng(x);
            let c3 = x == r(x, x);
            c1 == c2 && c2 == c3
        }),
    );
    match (a.bottom(), a.top()) {
        (Some(bot), Some(top)) => {
            push(
                "lemma-bounds",
                true,
                first1(n, |x| {
                    top == r(bot, bot)
                        && p(x, bot) == bot
                        && r(top, bot) == bot
                        && r(bot, x) == top
                        && r(x, top) == top
                        && p(top, top) == top
                })
                .or_else(|| (ng(bot) != top).then(|| vec![bot])),
            );
            // the three conditions defining rigorous compactness are equivalent
            let c1 = (0..n).filter(|&x| x != bot).all(|x| p(top, x) == top);
            let c2 = (0..n).filter(|&x| x != bot).all(|x| r(x, bot) == bot);
            let c3 = (0..n).filter(|&x| x != top).all(|x| r(top, x) == bot);
            push("lemma-rigorously-compact", true, (!(c1 == c2 && c2 == c3)).then(|| vec![bot, top]));
        }
        _ => push("lemma-bounds", false, None),
    }

    push("law-13", si, first2(n, |x, y| le(m(x, y), p(x, y))));
    push("law-14", si, first2(n, |x, y| !(le(x, e) && le(y, e)) || p(x, y) == m(x, y)));
    push("law-15", si, first1(n, |x| le(e, j(x, ng(x)))));
    push("law-16", si, first1(n, |x| !le(f, x) || le(r(x, ng(x)), r(p(x, x), x))));
    push("lemma-cube", si, first1(n, |x| !le(f, x) || p(p(x, x), x) == p(x, x)));
    // f^2 = f  iff  f <= e  iff  every element is idempotent
    let f2f = p(f, f) == f;
    let fle = le(f, e);
    let idem = (0..n).all(|x| p(x, x) == x);
    push("idempotence-f-e", si, (!(f2f == fle && fle == idem)).then(|| vec![f, e]));
    out
}
