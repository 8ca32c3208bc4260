use serde::Serialize;

use super::congruence::{congruence_lattice, congruences_bruteforce, CongruenceLattice};
use crate::algebra::{is_square_increasing, Element, FiniteIrl};

/// Flags read off the order around `e`; meaningful for square-increasing
/// algebras only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCriteria {
    /// `e` is join-irreducible.
    pub fsi: bool,
    /// There is a largest element strictly below `e`.
    pub si: bool,
    /// `e` has exactly one strict lower bound.
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub trivial: bool,
    pub fsi: bool,
    pub si: bool,
    pub simple: bool,
    /// Largest element strictly below `e`, when the algebra is SI.
    pub subcover: Option<Element>,
    /// The order criteria, or `None` when the algebra is not square-increasing.
    pub order_criteria: Option<OrderCriteria>,
    /// The order criteria agree with the congruence lattice (true when not applicable).
    pub criteria_agree: bool,
    /// The filter-derived congruences agree with the congruences obtained
    /// from principal congruences directly.
    pub cross_check_ok: bool,
}

/// Carriers up to this size get the brute-force congruence cross-check.
const CROSS_CHECK_LIMIT: usize = 16;

pub(crate) fn largest_strictly_below(a: &FiniteIrl, x: Element) -> Option<Element> {
    let below: Vec<Element> = a.elements().filter(|&y| a.lt(y, x)).collect();
    below.iter().copied().find(|&m| below.iter().all(|&y| a.leq(y, m)))
}

pub fn order_criteria(a: &FiniteIrl) -> OrderCriteria {
    let e = a.e();
    OrderCriteria {
        fsi: a.is_join_irreducible(e),
        si: largest_strictly_below(a, e).is_some(),
        simple: a.elements().filter(|&y| a.lt(y, e)).count() == 1,
    }
}

fn flags(lat: &CongruenceLattice, n: usize) -> (bool, bool, bool) {
    if n == 1 {
        return (true, false, false);
    }
    let atoms = lat.atoms().len();
    // in a finite lattice the bottom is (completely) meet-irreducible iff it
    // has a single upper cover
    (atoms == 1, atoms == 1, lat.len() == 2)
}

/// FSI / SI / simple from the congruence lattice. On square-increasing
/// algebras the order criteria are computed as well and compared.
pub fn classify(a: &FiniteIrl) -> Classification {
    let n = a.size();
    let lat = congruence_lattice(a);
    let (fsi, si, simple) = flags(&lat, n);
    let order = is_square_increasing(a).then(|| order_criteria(a));
    let criteria_agree = match order {
        // the trivial algebra has no strict lower bound of e
        Some(c) if n > 1 => c.fsi == fsi && c.si == si && c.simple == simple,
        Some(c) => c.fsi && !c.si && !c.simple,
        None => true,
    };
    let cross_check_ok = n > CROSS_CHECK_LIMIT || {
        let mut from_filters = lat.congruences.clone();
        from_filters.sort();
        from_filters == congruences_bruteforce(a)
    };
    Classification {
        trivial: n == 1,
        fsi,
        si,
        simple,
        subcover: if si { largest_strictly_below(a, a.e()) } else { None },
        order_criteria: order,
        criteria_agree,
        cross_check_ok,
    }
}
