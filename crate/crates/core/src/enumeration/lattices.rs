use std::collections::BTreeMap;

use crate::algebra::{lattice_from_order, BinOpTable, Element, FiniteIrl};
use crate::constructions::canonical_form;

/// A lattice as `(meet, join)`.
pub type Lattice = (BinOpTable, BinOpTable);

fn is_distributive(meet: &BinOpTable, join: &BinOpTable) -> bool {
    let n = meet.size();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| meet.get(x, join.get(y, z)) == join.get(meet.get(x, y), meet.get(x, z))))
    })
}

/// The lattice viewed as a structure whose only non-order data are trivial,
/// so that isomorphism of the structure is lattice isomorphism.
fn order_shadow(l: &Lattice, neg: Vec<Element>, e: Element) -> FiniteIrl {
    FiniteIrl::from_tables("shadow", l.0.clone(), l.1.clone(), l.0.clone(), neg, e).expect("well-formed tables")
}

/// All lattices with `n` elements up to isomorphism, in canonical order.
///
/// Orders are built on `0 < 1..n-2 < n-1` with every inner element choosing a
/// down-closed set of earlier inner elements as its strict lower set (every
/// finite poset has such a natural labelling); the order is kept when meets
/// and joins exist.
pub fn lattices(n: usize, distributive_only: bool) -> Vec<Lattice> {
    assert!(n >= 1);
    if n <= 2 {
        let l = lattice_from_order(n, |x, y| x <= y).expect("chain");
        return vec![l];
    }
    let inner = n - 2;
    let mut below = vec![0u64; inner];
    let mut out: BTreeMap<Vec<u8>, Lattice> = BTreeMap::new();
    posets(0, inner, &mut below, &mut |below| {
        let leq = |x: Element, y: Element| {
            x == y || x == 0 || y == n - 1 || (x != n - 1 && y != 0 && below[y - 1] >> (x - 1) & 1 == 1)
        };
        if let Some(l) = lattice_from_order(n, leq) {
            if !distributive_only || is_distributive(&l.0, &l.1) {
                let id: Vec<Element> = (0..n).collect();
                let key = canonical_form(&order_shadow(&l, id, 0)).bytes().to_vec();
                out.entry(key).or_insert(l);
            }
        }
    });
    out.into_values().collect()
}

fn posets(k: usize, inner: usize, below: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if k == inner {
        visit(below);
        return;
    }
    for mask in 0u64..(1 << k) {
        // strict lower set must be down-closed
        let closed = (0..k).filter(|&d| mask >> d & 1 == 1).all(|d| below[d] & !mask == 0);
        if closed {
            below[k] = mask;
            posets(k + 1, inner, below, visit);
        }
    }
    below[k] = 0;
}

/// Every order-reversing permutation of period two.
pub fn antitone_involutions(l: &Lattice) -> Vec<Vec<Element>> {
    let n = l.0.size();
    let leq = |x: Element, y: Element| l.0.get(x, y) == x;
    let mut out = Vec::new();
    let mut neg = vec![usize::MAX; n];
    fn go(
        x: Element,
        n: usize,
        neg: &mut Vec<Element>,
        leq: &dyn Fn(Element, Element) -> bool,
        out: &mut Vec<Vec<Element>>,
    ) {
        if x == n {
            out.push(neg.clone());
            return;
        }
        if neg[x] != usize::MAX {
            return go(x + 1, n, neg, leq, out);
        }
        for y in x..n {
            if neg[y] != usize::MAX {
                continue;
            }
            // the pair x, y is consistent with itself; check it against the assigned pairs
            let ok = (0..n).filter(|&a| neg[a] != usize::MAX).all(|a| {
                leq(a, x) == leq(y, neg[a])
                    && leq(x, a) == leq(neg[a], y)
                    && leq(a, y) == leq(x, neg[a])
                    && leq(y, a) == leq(neg[a], x)
            });
            if ok {
                neg[x] = y;
                neg[y] = x;
                go(x + 1, n, neg, leq, out);
                neg[x] = usize::MAX;
                neg[y] = usize::MAX;
            }
        }
    }
    go(0, n, &mut neg, &leq, &mut out);
    out
}

/// A lattice with a negation and a neutral element.
pub(crate) type FrameTriple = (Lattice, Vec<Element>, Element);

/// Frames up to isomorphism, with the number of lattices and involutions seen.
pub(crate) fn frames(n: usize, distributive_only: bool) -> (usize, usize, Vec<FrameTriple>) {
    let ls = lattices(n, distributive_only);
    let mut involutions = 0;
    let mut out: BTreeMap<Vec<u8>, FrameTriple> = BTreeMap::new();
    for l in &ls {
        for neg in antitone_involutions(l) {
            involutions += 1;
            for e in 0..n {
                let key = canonical_form(&order_shadow(l, neg.clone(), e)).bytes().to_vec();
                out.entry(key).or_insert_with(|| (l.clone(), neg.clone(), e));
            }
        }
    }
    (ls.len(), involutions, out.into_values().collect())
}
