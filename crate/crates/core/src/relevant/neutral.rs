use std::collections::BTreeSet;

use super::algebra::FiniteRa;
use crate::algebra::{Element, ElementSet};
use crate::error::{Error, Result};

/// `m = /\ |a|` over the whole carrier, when `m` is a neutral element for
/// fusion.
pub fn reconstruct_neutral(a: &FiniteRa) -> Option<Element> {
    let m = a.meet_all(a.elements().map(|x| a.abs(x)))?;
    a.elements().all(|x| a.fusion(m, x) == x && a.fusion(x, m) == x).then_some(m)
}

/// A pair `p < q` with `~p = q` forming a subuniverse on which fusion is
/// meet, i.e. a copy of the two-element Boolean reduct.
pub fn contains_two_reduct(a: &FiniteRa) -> Result<Option<(Element, Element)>> {
    if a.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    let found = a.elements().find_map(|p| {
        let q = a.neg(p);
        let ok = a.lt(p, q) && a.fusion(p, p) == p && a.fusion(q, q) == q && a.fusion(p, q) == p && a.fusion(q, p) == p;
        ok.then_some((p, q))
    });
    Ok(found)
}

fn closure(a: &FiniteRa, x: ElementSet) -> ElementSet {
    let mut s = x;
    loop {
        let mut next = s;
        for p in s.iter() {
            next.insert(a.neg(p));
            for q in s.iter() {
                next.insert(a.meet(p, q));
                next.insert(a.join(p, q));
                next.insert(a.fusion(p, q));
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Every nonempty subuniverse, sorted by size then membership.
pub fn ra_subuniverses(a: &FiniteRa) -> Vec<ElementSet> {
    let mut seen = BTreeSet::new();
    let mut stack: Vec<ElementSet> = a.elements().map(|x| closure(a, ElementSet::singleton(x))).collect();
    while let Some(u) = stack.pop() {
        if !seen.insert(u) {
            continue;
        }
        for x in a.elements().filter(|&x| !u.contains(x)) {
            let mut g = u;
            g.insert(x);
            let v = closure(a, g);
            if !seen.contains(&v) {
                stack.push(v);
            }
        }
    }
    seen.into_iter().collect()
}
