use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{BinOpTable, Element, ElementSet, FiniteIrl};
use crate::error::{Error, Result};

/// A subalgebra together with its inclusion map. Elements of `algebra` are
/// the members of `universe` in increasing order.
#[derive(Clone, Debug, Serialize)]
pub struct Subalgebra {
    pub universe: ElementSet,
    pub algebra: FiniteIrl,
    /// `inclusion[i]` is the element of the parent algebra that `i` stands for.
    pub inclusion: Vec<Element>,
}

/// Least subuniverse containing `x` (and `e`).
pub fn sg_universe(a: &FiniteIrl, x: ElementSet) -> ElementSet {
    let mut s = x;
    s.insert(a.e());
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

/// The subalgebra generated by `x`.
pub fn sg(a: &FiniteIrl, x: ElementSet) -> Subalgebra {
    subalgebra_on(a, sg_universe(a, x)).expect("generated set is a subuniverse")
}

/// The subalgebra with the given universe.
pub fn subalgebra_on(a: &FiniteIrl, universe: ElementSet) -> Result<Subalgebra> {
    if !a.is_subuniverse(universe) {
        return Err(Error::NotASubuniverse(format!("{universe:?}")));
    }
    let inclusion = universe.to_vec();
    let k = inclusion.len();
    let index = |x: Element| inclusion.binary_search(&x).expect("closed subuniverse");
    let t =
        |op: &dyn Fn(Element, Element) -> Element| BinOpTable::from_fn(k, |i, j| index(op(inclusion[i], inclusion[j])));
    let meet = t(&|x, y| a.meet(x, y));
    let join = t(&|x, y| a.join(x, y));
    let fusion = t(&|x, y| a.fusion(x, y));
    let neg = inclusion.iter().map(|&x| index(a.neg(x))).collect();
    let labels = inclusion.iter().map(|&x| a.label(x)).collect();
    let algebra =
        FiniteIrl::from_tables(format!("Sg({})", a.name()), meet, join, fusion, neg, index(a.e()))?.with_labels(labels);
    Ok(Subalgebra { universe, algebra, inclusion })
}

/// The smallest subalgebra, generated by the empty set.
pub fn zero_generated(a: &FiniteIrl) -> Subalgebra {
    sg(a, ElementSet::empty())
}

/// Is the algebra generated by the empty set?
pub fn is_zero_generated(a: &FiniteIrl) -> bool {
    sg_universe(a, ElementSet::empty()).len() == a.size()
}

/// Every subuniverse, sorted by size then membership.
pub fn subuniverses(a: &FiniteIrl) -> Vec<ElementSet> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![sg_universe(a, ElementSet::empty())];
    while let Some(u) = stack.pop() {
        if !seen.insert(u) {
            continue;
        }
        for x in a.elements().filter(|&x| !u.contains(x)) {
            let mut g = u;
            g.insert(x);
            let v = sg_universe(a, g);
            if !seen.contains(&v) {
                stack.push(v);
            }
        }
    }
    seen.into_iter().collect()
}
