use serde::Serialize;

use super::validate::{is_distributive, is_square_increasing};
use super::{Element, FiniteIrl};
use crate::term::{library, satisfies};

/// Structural flags of a validated IRL, each computed by a direct table check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateRecord {
    pub idempotent: bool,
    pub odd: bool,
    /// `x <= f^2` for all `x`.
    pub anti_idempotent: bool,
    /// `e` is the greatest element.
    pub integral: bool,
    pub bounded: bool,
    /// `(bottom, top)` when bounded.
    pub extrema: Option<(Element, Element)>,
    /// Bounded and `top * a = top` for every `a != bottom`.
    pub rigorously_compact: bool,
    pub distributive: bool,
    pub square_increasing: bool,
    /// Distributive and satisfies `e <= (x -> y) \/ (y -> x)`.
    pub semilinear: bool,
}

pub fn predicates(a: &FiniteIrl) -> PredicateRecord {
    let f2 = a.square(a.f());
    let extrema = match (a.bottom(), a.top()) {
        (Some(b), Some(t)) => Some((b, t)),
        _ => None,
    };
    let rigorously_compact =
        extrema.is_some_and(|(bot, top)| a.elements().filter(|&x| x != bot).all(|x| a.fusion(top, x) == top));
    let distributive = is_distributive(a);
    let semilinear = distributive && satisfies(a, library().statement("ax-semilinear")).holds;
    PredicateRecord {
        idempotent: a.elements().all(|x| a.is_idempotent_element(x)),
        odd: a.f() == a.e(),
        anti_idempotent: a.elements().all(|x| a.leq(x, f2)),
        integral: a.elements().all(|x| a.leq(x, a.e())),
        bounded: extrema.is_some(),
        extrema,
        rigorously_compact,
        distributive,
        square_increasing: is_square_increasing(a),
        semilinear,
    }
}
