use serde::{Deserialize, Serialize};

use crate::algebra::{Element, ElementSet, FiniteIrl};
use crate::error::{Error, Result};

/// A deductive filter: an upward closed, meet-closed submonoid containing `e`.
/// Serializes as the sorted member array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeductiveFilter {
    pub members: ElementSet,
}

impl DeductiveFilter {
    /// Wraps `members` after checking the filter conditions in `a`.
    pub fn new(a: &FiniteIrl, members: ElementSet) -> Result<Self> {
        match filter_violation(a, members) {
            Some(why) => Err(Error::NotAFilter(why)),
            None => Ok(DeductiveFilter { members }),
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn is_upset(a: &FiniteIrl, s: ElementSet) -> bool {
    s.iter().all(|x| a.elements().all(|y| !a.leq(x, y) || s.contains(y)))
}

pub(crate) fn filter_violation(a: &FiniteIrl, s: ElementSet) -> Option<String> {
    if s.iter().any(|x| x >= a.size()) {
        return Some("member out of range".into());
    }
    if !s.contains(a.e()) {
        return Some("does not contain e".into());
    }
    if !is_upset(a, s) {
        return Some("not upward closed".into());
    }
    for x in s.iter() {
        for y in s.iter() {
            if !s.contains(a.meet(x, y)) {
                return Some(format!("not closed under meet at ({x},{y})"));
            }
            if !s.contains(a.fusion(x, y)) {
                return Some(format!("not closed under fusion at ({x},{y})"));
            }
        }
    }
    None
}

/// Elements ordered so that every element comes after all its strict upper
/// bounds (decreasing number of upper bounds is enough: `x < y` implies
/// `upset(y)` is a proper subset of `upset(x)`).
fn top_down(a: &FiniteIrl) -> Vec<Element> {
    let mut order: Vec<Element> = a.elements().collect();
    order.sort_by_key(|&x| (a.upset(x).len(), x));
    order
}

/// All deductive filters, sorted by size and then by membership.
///
/// Upward closed sets containing `e` are enumerated by deciding elements top
/// down (an element may join only if all its upper covers are in), then kept
/// when closed under meet and fusion.
pub fn deductive_filters(a: &FiniteIrl) -> Vec<DeductiveFilter> {
    let order = top_down(a);
    let covers: Vec<Vec<Element>> =
        a.elements().map(|x| a.elements().filter(|&y| a.lower_covers(y).contains(&x)).collect()).collect();
    let mut out = Vec::new();
    let mut current = ElementSet::empty();
    upsets(a, &order, &covers, 0, &mut current, &mut out);
    out.sort();
    out
}

fn upsets(
    a: &FiniteIrl,
    order: &[Element],
    covers: &[Vec<Element>],
    i: usize,
    current: &mut ElementSet,
    out: &mut Vec<DeductiveFilter>,
) {
    if i == order.len() {
        if filter_violation(a, *current).is_none() {
            out.push(DeductiveFilter { members: *current });
        }
        return;
    }
    let x = order[i];
    if covers[x].iter().all(|&y| current.contains(y)) {
        current.insert(x);
        upsets(a, order, covers, i + 1, current, out);
        current.remove(x);
    }
    // elements above e are forced in
    if !a.leq(a.e(), x) {
        upsets(a, order, covers, i + 1, current, out);
    }
}

/// The least deductive filter containing `x`, by closure iteration.
pub fn dfg(a: &FiniteIrl, x: ElementSet) -> DeductiveFilter {
    let mut s = x;
    s.insert(a.e());
    loop {
        let mut next = s;
        for p in s.iter() {
            next = next.union(a.upset(p));
            for q in s.iter() {
                next.insert(a.meet(p, q));
                next.insert(a.fusion(p, q));
            }
        }
        if next == s {
            return DeductiveFilter { members: s };
        }
        s = next;
    }
}

/// The principal filter route: in a finite lattice every lattice filter is
/// `[a)` for some `a`, so the deductive filters are the `[a)` with `a <= e`
/// that are closed under fusion. Used as an independent cross-check.
pub fn deductive_filters_principal(a: &FiniteIrl) -> Vec<DeductiveFilter> {
    let mut out: Vec<DeductiveFilter> = a
        .elements()
        .filter(|&x| a.leq(x, a.e()))
        .map(|x| a.upset(x))
        .filter(|&s| filter_violation(a, s).is_none())
        .map(|members| DeductiveFilter { members })
        .collect();
    out.sort();
    out
}
