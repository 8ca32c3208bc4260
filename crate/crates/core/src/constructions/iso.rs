//! Canonical labelling by colour refinement with individualization.
//!
//! Elements start coloured by order and monoid invariants; colours are refined
//! by the colours of products, meets and negations until stable. While some
//! colour class has several members, each member is tried in turn as the
//! distinguished one. Every discrete leaf gives a relabelling; the least
//! resulting encoding is the canonical form.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::algebra::{Element, FiniteIrl};

/// Isomorphism-invariant byte encoding: `[n, e]`, then the meet table, the
/// negation and the fusion table of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

fn encode(a: &FiniteIrl, perm: &[Element]) -> Vec<u8> {
    let n = a.size();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut out = Vec::with_capacity(2 + 2 * n * n + n);
    out.push(n as u8);
    out.push(perm[a.e()] as u8);
    for i in 0..n {
        for j in 0..n {
            out.push(perm[a.meet(inv[i], inv[j])] as u8);
        }
    }
    for i in 0..n {
        out.push(perm[a.neg(inv[i])] as u8);
    }
    for i in 0..n {
        for j in 0..n {
            out.push(perm[a.fusion(inv[i], inv[j])] as u8);
        }
    }
    out
}

/// Replaces arbitrary comparable keys by dense ranks `0..k`.
fn rank_keys<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let distinct: BTreeMap<K, usize> = keys.iter().cloned().map(|k| (k, 0)).collect();
    let index: BTreeMap<K, usize> = distinct.into_keys().enumerate().map(|(i, k)| (k, i)).collect();
    keys.iter().map(|k| index[k]).collect()
}

fn initial_colours(a: &FiniteIrl) -> Vec<usize> {
    let keys: Vec<_> = a
        .elements()
        .map(|x| {
            (
                x != a.e(),
                x != a.f(),
                a.downset(x).len(),
                a.upset(x).len(),
                a.square(x) == x,
                a.leq(x, a.e()),
                a.leq(a.e(), x),
                a.neg(x) == x,
            )
        })
        .collect();
    rank_keys(&keys)
}

/// Own colour, colour of the negation, sorted row signature.
type ColourKey = (usize, usize, Vec<(usize, usize, usize, bool)>);

/// Refines until the number of colours is stable.
fn refine(a: &FiniteIrl, mut colour: Vec<usize>) -> Vec<usize> {
    let n = a.size();
    let mut classes = colour.iter().max().map_or(0, |m| m + 1);
    loop {
        let keys: Vec<ColourKey> = (0..n)
            .map(|x| {
                let mut row: Vec<_> =
                    (0..n).map(|y| (colour[y], colour[a.meet(x, y)], colour[a.fusion(x, y)], a.leq(x, y))).collect();
                row.sort_unstable();
                (colour[x], colour[a.neg(x)], row)
            })
            .collect();
        let next = rank_keys(&keys);
        let next_classes = next.iter().max().map_or(0, |m| m + 1);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

struct Best {
    code: Option<Vec<u8>>,
    perm: Vec<Element>,
}

fn explore(a: &FiniteIrl, colour: Vec<usize>, best: &mut Best) {
    let n = a.size();
    let classes = colour.iter().max().map_or(0, |m| m + 1);
    if classes == n {
        let code = encode(a, &colour);
        if best.code.as_ref().is_none_or(|b| code < *b) {
            best.code = Some(code);
            best.perm = colour;
        }
        return;
    }
    // first colour class with more than one member
    let mut sizes = vec![0usize; classes];
    for &c in &colour {
        sizes[c] += 1;
    }
    let target = (0..classes).find(|&c| sizes[c] > 1).expect("non-discrete colouring");
    for x in (0..n).filter(|&x| colour[x] == target) {
        let keys: Vec<(usize, bool)> = (0..n).map(|y| (colour[y], y != x)).collect();
        explore(a, refine(a, rank_keys(&keys)), best);
    }
}

/// The canonical form and the relabelling (old index -> new index) producing it.
pub fn canonical_labelling(a: &FiniteIrl) -> (CanonicalForm, Vec<Element>) {
    let mut best = Best { code: None, perm: Vec::new() };
    explore(a, refine(a, initial_colours(a)), &mut best);
    (CanonicalForm(best.code.expect("at least one leaf")), best.perm)
}

pub fn canonical_form(a: &FiniteIrl) -> CanonicalForm {
    canonical_labelling(a).0
}

/// `a` relabelled into canonical order.
pub fn canonicalize(a: &FiniteIrl) -> FiniteIrl {
    let (_, perm) = canonical_labelling(a);
    a.relabel(&perm)
}

pub fn is_isomorphic(a: &FiniteIrl, b: &FiniteIrl) -> bool {
    a.size() == b.size() && canonical_form(a) == canonical_form(b)
}
