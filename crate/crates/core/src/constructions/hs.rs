use std::collections::BTreeSet;

use crate::algebra::{ElementSet, FiniteIrl};
use crate::filters::{deductive_filters, quotient};

use super::iso::is_isomorphic;
use super::subalgebra::{sg_universe, subalgebra_on};

/// Subuniverses generated by at most `k` elements, grown one generator at a
/// time: `Sg(X + y) = Sg(Sg(X) + y)`.
fn small_subuniverses(a: &FiniteIrl, k: usize) -> BTreeSet<ElementSet> {
    let mut out = BTreeSet::from([sg_universe(a, ElementSet::empty())]);
    let mut level: Vec<ElementSet> = out.iter().copied().collect();
    for _ in 0..k {
        let mut next = Vec::new();
        for u in level {
            for y in a.elements().filter(|&y| !u.contains(y)) {
                let mut gens = u;
                gens.insert(y);
                let v = sg_universe(a, gens);
                if out.insert(v) {
                    next.push(v);
                }
            }
        }
        level = next;
    }
    out
}

/// Is `x` a homomorphic image of a subalgebra of `a`?
///
/// If `B / G` is isomorphic to `x`, preimages of the elements of `x` generate
/// a subalgebra of `B` that still maps onto `x`, so generating sets of size at
/// most `|x|` suffice. Homomorphic images are quotients by deductive filters.
pub fn hs_contains(a: &FiniteIrl, x: &FiniteIrl) -> bool {
    small_subuniverses(a, x.size()).into_iter().filter(|s| s.len() >= x.size()).any(|s| {
        let b = subalgebra_on(a, s).expect("generated subuniverse").algebra;
        deductive_filters(&b).iter().any(|g| {
            let q = quotient(&b, g).expect("filter of b");
            q.algebra.size() == x.size() && is_isomorphic(&q.algebra, x)
        })
    })
}
