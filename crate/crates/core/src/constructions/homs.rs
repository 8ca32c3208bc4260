use serde::Serialize;

use crate::algebra::{Element, ElementSet, FiniteIrl};
use crate::error::{Error, Result};

/// A map between two algebras preserving `*, /\, \/, ~` and `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homomorphism {
    pub map: Vec<Element>,
    pub injective: bool,
    pub surjective: bool,
}

impl Homomorphism {
    fn new(map: Vec<Element>, target_size: usize) -> Self {
        let image: ElementSet = map.iter().copied().collect();
        Homomorphism { injective: image.len() == map.len(), surjective: image.len() == target_size, map }
    }

    /// Checks the map against both algebras.
    pub fn checked(a: &FiniteIrl, b: &FiniteIrl, map: Vec<Element>) -> Result<Self> {
        if let Some(why) = hom_violation(a, b, &map) {
            return Err(Error::NotAHomomorphism(why));
        }
        Ok(Homomorphism::new(map, b.size()))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }

    /// Kernel blocks: classes of elements with the same image, by least member.
    pub fn kernel(&self) -> Vec<ElementSet> {
        let mut blocks: Vec<ElementSet> = Vec::new();
        for (x, &y) in self.map.iter().enumerate() {
            match blocks.iter_mut().find(|bl| self.map[bl.first().expect("nonempty block")] == y) {
                Some(bl) => {
                    bl.insert(x);
                }
                None => blocks.push(ElementSet::singleton(x)),
            }
        }
        blocks
    }

    pub fn image(&self) -> ElementSet {
        self.map.iter().copied().collect()
    }
}

/// Describes the first operation the map fails to preserve.
pub fn hom_violation(a: &FiniteIrl, b: &FiniteIrl, h: &[Element]) -> Option<String> {
    if h.len() != a.size() || h.iter().any(|&y| y >= b.size()) {
        return Some("map does not fit the carriers".into());
    }
    if h[a.e()] != b.e() {
        return Some("e is not preserved".into());
    }
    for x in a.elements() {
        if h[a.neg(x)] != b.neg(h[x]) {
            return Some(format!("~ at {x}"));
        }
        for y in a.elements() {
            if h[a.meet(x, y)] != b.meet(h[x], h[y]) {
                return Some(format!("/\\ at ({x},{y})"));
            }
            if h[a.join(x, y)] != b.join(h[x], h[y]) {
                return Some(format!("\\/ at ({x},{y})"));
            }
            if h[a.fusion(x, y)] != b.fusion(h[x], h[y]) {
                return Some(format!("* at ({x},{y})"));
            }
        }
    }
    None
}

const UNSET: Element = usize::MAX;

struct Search<'a> {
    a: &'a FiniteIrl,
    b: &'a FiniteIrl,
    injective: bool,
    first_only: bool,
    out: Vec<Vec<Element>>,
}

impl Search<'_> {
    fn set(&self, h: &mut [Element], trail: &mut Vec<Element>, x: Element, y: Element) -> bool {
        if h[x] != UNSET {
            return h[x] == y;
        }
        if self.injective && h.contains(&y) {
            return false;
        }
        h[x] = y;
        trail.push(x);
        true
    }

    /// Extends a partial map by everything it forces; false on a conflict.
    fn propagate(&self, h: &mut [Element], trail: &mut Vec<Element>) -> bool {
        let (a, b) = (self.a, self.b);
        let mut assigned: Vec<Element> = (0..h.len()).filter(|&x| h[x] != UNSET).collect();
        // pairs (assigned[i], assigned[j]) with j <= i, each visited once
        let mut i = 0;
        while i < assigned.len() {
            let x = assigned[i];
            let before = trail.len();
            if !self.set(h, trail, a.neg(x), b.neg(h[x])) {
                return false;
            }
            for &y in &assigned[..=i] {
                let (hx, hy) = (h[x], h[y]);
                if !self.set(h, trail, a.meet(x, y), b.meet(hx, hy))
                    || !self.set(h, trail, a.join(x, y), b.join(hx, hy))
                    || !self.set(h, trail, a.fusion(x, y), b.fusion(hx, hy))
                {
                    return false;
                }
            }
            assigned.extend_from_slice(&trail[before..]);
            i += 1;
        }
        true
    }

    fn search(&mut self, h: &mut Vec<Element>) {
        let Some(x) = h.iter().position(|&y| y == UNSET) else {
            debug_assert!(hom_violation(self.a, self.b, h).is_none());
            self.out.push(h.clone());
            return;
        };
        for y in self.b.elements() {
            let mut trail = Vec::new();
            if self.set(h, &mut trail, x, y) && self.propagate(h, &mut trail) {
                self.search(h);
            }
            for &t in &trail {
                h[t] = UNSET;
            }
            if self.first_only && !self.out.is_empty() {
                return;
            }
        }
    }
}

fn run(a: &FiniteIrl, b: &FiniteIrl, injective: bool, first_only: bool) -> Vec<Vec<Element>> {
    let mut s = Search { a, b, injective, first_only, out: Vec::new() };
    let mut h = vec![UNSET; a.size()];
    h[a.e()] = b.e();
    if s.propagate(&mut h, &mut Vec::new()) {
        s.search(&mut h);
    }
    s.out
}

/// All homomorphisms `a -> b`, sorted lexicographically by map.
pub fn homs(a: &FiniteIrl, b: &FiniteIrl) -> Vec<Homomorphism> {
    let mut maps = run(a, b, false, false);
    maps.sort();
    maps.into_iter().map(|m| Homomorphism::new(m, b.size())).collect()
}

/// Some injective homomorphism `a -> b`, if one exists.
pub fn find_embedding(a: &FiniteIrl, b: &FiniteIrl) -> Option<Homomorphism> {
    if a.size() > b.size() {
        return None;
    }
    run(a, b, true, true).pop().map(|m| Homomorphism::new(m, b.size()))
}

/// Some isomorphism `a -> b`, found by backtracking (independent of
/// canonical forms).
pub fn find_isomorphism(a: &FiniteIrl, b: &FiniteIrl) -> Option<Homomorphism> {
    if a.size() != b.size() {
        return None;
    }
    find_embedding(a, b)
}
