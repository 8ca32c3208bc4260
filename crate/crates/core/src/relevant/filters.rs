use serde::{Deserialize, Serialize};

use super::algebra::FiniteRa;
use super::neutral::reconstruct_neutral;
use crate::algebra::{Element, ElementSet};
use crate::error::{Error, Result};
use crate::filters::{classify, Congruence};

/// A lattice filter containing `|a|` for every `a`. Serializes as the sorted
/// member array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RaDeductiveFilter {
    pub members: ElementSet,
}

impl RaDeductiveFilter {
    pub fn new(a: &FiniteRa, members: ElementSet) -> Result<Self> {
        match filter_violation(a, members) {
            Some(why) => Err(Error::NotAFilter(why)),
            None => Ok(RaDeductiveFilter { members }),
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

fn filter_violation(a: &FiniteRa, s: ElementSet) -> Option<String> {
    if s.iter().any(|x| x >= a.size()) {
        return Some("member out of range".into());
    }
    if let Some(x) = a.elements().find(|&x| !s.contains(a.abs(x))) {
        return Some(format!("|{x}| is missing"));
    }
    for x in s.iter() {
        if let Some(y) = a.elements().find(|&y| a.leq(x, y) && !s.contains(y)) {
            return Some(format!("not upward closed at {x} <= {y}"));
        }
        if let Some(y) = s.iter().find(|&y| !s.contains(a.meet(x, y))) {
            return Some(format!("not closed under meet at ({x},{y})"));
        }
    }
    None
}

/// `DFg{x} = {c : x /\ |d| <= c for some d}`.
pub fn dfg_ra(a: &FiniteRa, x: Element) -> RaDeductiveFilter {
    let members = a.elements().filter(|&c| a.elements().any(|d| a.leq(a.meet(x, a.abs(d)), c))).collect();
    RaDeductiveFilter { members }
}

/// The filter generated by a finite set is generated by its meet; the empty
/// set contributes the top element.
pub fn dfg_ra_set(a: &FiniteRa, x: ElementSet) -> RaDeductiveFilter {
    dfg_ra(a, a.meet_all(x.iter()).unwrap_or_else(|| a.top()))
}

/// Least fixpoint: `x` and every `|d|`, closed under meet and upward.
pub fn dfg_oracle(a: &FiniteRa, x: ElementSet) -> RaDeductiveFilter {
    let mut s = x;
    for d in a.elements() {
        s.insert(a.abs(d));
    }
    loop {
        let mut next = s;
        for p in s.iter() {
            next = next.union(a.upset(p));
            for q in s.iter() {
                next.insert(a.meet(p, q));
            }
        }
        if next == s {
            return RaDeductiveFilter { members: s };
        }
        s = next;
    }
}

/// Every deductive filter, by enumerating upsets top down and keeping the
/// meet-closed ones that contain all `|a|`. Sorted by size then membership.
pub fn ra_filters(a: &FiniteRa) -> Vec<RaDeductiveFilter> {
    let mut order: Vec<Element> = a.elements().collect();
    order.sort_by_key(|&x| (a.upset(x).len(), x));
    let forced: ElementSet = a.elements().flat_map(|d| a.upset(a.abs(d)).iter()).collect();
    let mut out = Vec::new();
    let mut current = ElementSet::empty();
    upsets(a, &order, forced, 0, &mut current, &mut out);
    out.sort();
    out
}

fn upsets(
    a: &FiniteRa,
    order: &[Element],
    forced: ElementSet,
    i: usize,
    current: &mut ElementSet,
    out: &mut Vec<RaDeductiveFilter>,
) {
    if i == order.len() {
        if filter_violation(a, *current).is_none() {
            out.push(RaDeductiveFilter { members: *current });
        }
        return;
    }
    let x = order[i];
    // every strict upper bound was decided earlier
    if a.upset(x).iter().all(|y| y == x || current.contains(y)) {
        current.insert(x);
        upsets(a, order, forced, i + 1, current, out);
        current.remove(x);
    }
    if !forced.contains(x) {
        upsets(a, order, forced, i + 1, current, out);
    }
}

/// The first operation the partition is not compatible with, if any.
pub fn ra_congruence_violation(a: &FiniteRa, theta: &Congruence) -> Option<String> {
    if theta.block_ids().len() != a.size() {
        return Some("partition size differs from carrier".into());
    }
    for x in a.elements() {
        for y in a.elements().filter(|&y| theta.related(x, y)) {
            if !theta.related(a.neg(x), a.neg(y)) {
                return Some(format!("~ at ({x},{y})"));
            }
            for z in a.elements() {
                if !theta.related(a.meet(x, z), a.meet(y, z))
                    || !theta.related(a.join(x, z), a.join(y, z))
                    || !theta.related(a.fusion(x, z), a.fusion(y, z))
                {
                    return Some(format!("operation at ({x},{y}) with {z}"));
                }
            }
        }
    }
    None
}

/// `{(a, b) : a -> b, b -> a in F}`.
pub fn ra_omega(a: &FiniteRa, g: &RaDeductiveFilter) -> Result<Congruence> {
    if let Some(why) = filter_violation(a, g.members) {
        return Err(Error::NotAFilter(why));
    }
    let mut labels = vec![usize::MAX; a.size()];
    for x in a.elements() {
        if labels[x] != usize::MAX {
            continue;
        }
        for y in a.elements().filter(|&y| y >= x) {
            if g.contains(a.residual(x, y)) && g.contains(a.residual(y, x)) {
                labels[y] = x;
            }
        }
    }
    let theta = Congruence::from_labels(&labels);
    match ra_congruence_violation(a, &theta) {
        Some(why) => Err(Error::NotACongruence(why)),
        None => Ok(theta),
    }
}

/// The congruences, indexed like the deductive filters they come from.
#[derive(Clone, Debug, Serialize)]
pub struct RaCongruenceLattice {
    pub filters: Vec<RaDeductiveFilter>,
    pub congruences: Vec<Congruence>,
}

impl RaCongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    /// Indices of the congruences covering the identity.
    pub fn atoms(&self) -> Vec<usize> {
        let cs = &self.congruences;
        (0..cs.len())
            .filter(|&i| {
                !cs[i].is_identity() && !(0..cs.len()).any(|j| j != i && !cs[j].is_identity() && cs[j].refines(&cs[i]))
            })
            .collect()
    }
}

pub fn ra_congruence_lattice(a: &FiniteRa) -> Result<RaCongruenceLattice> {
    let filters = ra_filters(a);
    let congruences = filters.iter().map(|g| ra_omega(a, g)).collect::<Result<_>>()?;
    Ok(RaCongruenceLattice { filters, congruences })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MeetPropertyReport {
    /// Pairs with `||a| /\ |b|| > |a| /\ |b|`.
    pub abs_meet_failures: Vec<(Element, Element)>,
    /// Pairs with `DFg{a} & DFg{b} != DFg{a \/ b}`.
    pub intersection_failures: Vec<(Element, Element)>,
    pub pairs_checked: usize,
}

impl MeetPropertyReport {
    pub fn passed(&self) -> bool {
        self.abs_meet_failures.is_empty() && self.intersection_failures.is_empty()
    }
}

pub fn meet_property_check(a: &FiniteRa) -> MeetPropertyReport {
    let mut r = MeetPropertyReport::default();
    let generated: Vec<RaDeductiveFilter> = a.elements().map(|x| dfg_ra(a, x)).collect();
    for x in a.elements() {
        for y in a.elements() {
            r.pairs_checked += 1;
            let m = a.meet(a.abs(x), a.abs(y));
            if !a.leq(a.abs(m), m) {
                r.abs_meet_failures.push((x, y));
            }
            if generated[x].members.intersection(generated[y].members) != generated[a.join(x, y)].members {
                r.intersection_failures.push((x, y));
            }
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaClassification {
    pub trivial: bool,
    pub fsi: bool,
    pub si: bool,
    pub simple: bool,
    pub congruences: usize,
    /// The reconstructed neutral element, if any.
    pub neutral: Option<Element>,
    /// Whether the flags agree with those of the algebra with `neutral`
    /// added; `None` when no neutral element was found.
    pub agrees_with_dmm: Option<bool>,
}

/// FSI / SI / simple from the congruence lattice of the relevant algebra,
/// compared against the expanded De Morgan monoid when one exists.
pub fn ra_classify(a: &FiniteRa) -> Result<RaClassification> {
    let lat = ra_congruence_lattice(a)?;
    let n = a.size();
    let atoms = lat.atoms().len();
    let (fsi, si, simple) = if n == 1 { (true, false, false) } else { (atoms == 1, atoms == 1, lat.len() == 2) };
    let neutral = reconstruct_neutral(a);
    let agrees_with_dmm = match neutral {
        Some(e) => {
            let dmm = a.with_neutral(e)?;
            let c = classify(&dmm);
            let mut mine = lat.congruences.clone();
            mine.sort();
            let mut theirs = crate::filters::congruence_lattice(&dmm).congruences;
            theirs.sort();
            Some(c.fsi == fsi && c.si == si && c.simple == simple && mine == theirs)
        }
        None => None,
    };
    Ok(RaClassification { trivial: n == 1, fsi, si, simple, congruences: lat.len(), neutral, agrees_with_dmm })
}
