//! Finite involutive (commutative) residuated lattices given by operation tables.
//!
//! Elements are the indices `0..n`. The lattice order is derived from the meet
//! table (`a <= b` iff `a /\ b = a`); the residual `a -> b = ~(a * ~b)` and the
//! constant `f = ~e` are derived and never stored.

mod io;
mod laws;
mod predicates;
mod set;
mod table;
pub(crate) mod validate;

use std::fmt;
use std::sync::OnceLock;

pub use io::{algebras_from_json, read_algebra_file, read_catalog_file, write_algebra_file, AlgebraDoc};
pub use laws::{check_derived_laws, LawReport, LawResult};
pub use predicates::{predicates, PredicateRecord};
pub use set::ElementSet;
pub use table::BinOpTable;
pub use validate::{
    is_distributive, is_dmm, is_square_increasing, validate_dmm, validate_irl, ValidationReport, Violation,
};

use crate::error::{Error, Result};

/// An element of a finite algebra: an index into its carrier.
pub type Element = usize;

/// Largest carrier size supported (elements sets are single machine words).
pub const MAX_SIZE: usize = 64;

/// A finite involutive residuated lattice `<A; *, /\, \/, ~, e>`.
///
/// Construction only checks that the tables are well formed; use
/// [`validate_irl`] / [`validate_dmm`] to check the axioms.
#[derive(Clone)]
pub struct FiniteIrl {
    name: String,
    meet: BinOpTable,
    join: BinOpTable,
    fusion: BinOpTable,
    neg: Vec<Element>,
    e: Element,
    labels: Option<Vec<String>>,
    residual: OnceLock<BinOpTable>,
}

impl FiniteIrl {
    pub fn from_tables(
        name: impl Into<String>,
        meet: BinOpTable,
        join: BinOpTable,
        fusion: BinOpTable,
        neg: Vec<Element>,
        e: Element,
    ) -> Result<Self> {
        let n = neg.len();
        if n == 0 {
            return Err(Error::MalformedTable("carrier must be nonempty".into()));
        }
        if n > MAX_SIZE {
            return Err(Error::MalformedTable(format!("carrier of size {n} exceeds the supported maximum {MAX_SIZE}")));
        }
        for (label, t) in [("meet", &meet), ("join", &join), ("fusion", &fusion)] {
            if t.size() != n {
                return Err(Error::MalformedTable(format!("{label} table has size {}, expected {n}", t.size())));
            }
            if let Some(v) = t.entries().iter().find(|&&v| v >= n) {
                return Err(Error::MalformedTable(format!("{label} entry {v} out of range")));
            }
        }
        if let Some((a, v)) = neg.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::MalformedTable(format!("neg({a}) = {v} out of range")));
        }
        if e >= n {
            return Err(Error::MalformedTable(format!("e = {e} out of range")));
        }
        Ok(FiniteIrl { name: name.into(), meet, join, fusion, neg, e, labels: None, residual: OnceLock::new() })
    }

    /// Builds an algebra from row-major tables as they appear in the file format.
    pub fn from_rows(
        name: impl Into<String>,
        meet: &[Vec<Element>],
        join: &[Vec<Element>],
        fusion: &[Vec<Element>],
        neg: Vec<Element>,
        e: Element,
    ) -> Result<Self> {
        let n = neg.len();
        let mk = |label: &str, rows: &[Vec<Element>]| {
            BinOpTable::from_rows(n, rows).map_err(|m| Error::MalformedTable(format!("{label}: {m}")))
        };
        Self::from_tables(name, mk("meet", meet)?, mk("join", join)?, mk("fusion", fusion)?, neg, e)
    }

    /// Builds an algebra from a meet table, deriving the join from the induced order.
    pub fn from_meet(
        name: impl Into<String>,
        meet: BinOpTable,
        fusion: BinOpTable,
        neg: Vec<Element>,
        e: Element,
    ) -> Result<Self> {
        let n = neg.len();
        let join = join_from_meet(&meet)
            .ok_or_else(|| Error::MalformedTable("meet table does not induce a lattice".into()))?;
        if join.size() != n {
            return Err(Error::MalformedTable("table sizes disagree".into()));
        }
        Self::from_tables(name, meet, join, fusion, neg, e)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.size() {
            self.labels = Some(labels);
        }
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.neg.len()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    #[inline]
    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join.get(a, b)
    }

    #[inline]
    pub fn fusion(&self, a: Element, b: Element) -> Element {
        self.fusion.get(a, b)
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        self.neg[a]
    }

    #[inline]
    pub fn e(&self) -> Element {
        self.e
    }

    /// `f = ~e`.
    #[inline]
    pub fn f(&self) -> Element {
        self.neg[self.e]
    }

    #[inline]
    pub fn square(&self, a: Element) -> Element {
        self.fusion(a, a)
    }

    /// `a -> b = ~(a * ~b)`, memoized per algebra.
    #[inline]
    pub fn residual(&self, a: Element, b: Element) -> Element {
        self.residual_table().get(a, b)
    }

    pub fn residual_table(&self) -> &BinOpTable {
        self.residual.get_or_init(|| BinOpTable::from_fn(self.size(), |a, b| self.neg(self.fusion(a, self.neg(b)))))
    }

    /// `max {c : a * c <= b}` computed by search, if it exists.
    pub fn residual_by_max(&self, a: Element, b: Element) -> Option<Element> {
        let below: Vec<Element> = self.elements().filter(|&c| self.leq(self.fusion(a, c), b)).collect();
        below.iter().copied().find(|&m| below.iter().all(|&c| self.leq(c, m)))
    }

    /// `a <-> b = (a -> b) /\ (b -> a)`.
    pub fn biresidual(&self, a: Element, b: Element) -> Element {
        self.meet(self.residual(a, b), self.residual(b, a))
    }

    /// `|a| = a -> a`.
    pub fn abs(&self, a: Element) -> Element {
        self.residual(a, a)
    }

    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.meet(a, b) == a
    }

    #[inline]
    pub fn lt(&self, a: Element, b: Element) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Element, b: Element) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn meet_table(&self) -> &BinOpTable {
        &self.meet
    }

    pub fn join_table(&self) -> &BinOpTable {
        &self.join
    }

    pub fn fusion_table(&self) -> &BinOpTable {
        &self.fusion
    }

    pub fn neg_table(&self) -> &[Element] {
        &self.neg
    }

    /// The least element, when one exists.
    pub fn bottom(&self) -> Option<Element> {
        self.elements().find(|&a| self.elements().all(|b| self.leq(a, b)))
    }

    /// The greatest element, when one exists.
    pub fn top(&self) -> Option<Element> {
        self.elements().find(|&a| self.elements().all(|b| self.leq(b, a)))
    }

    pub fn upset(&self, a: Element) -> ElementSet {
        self.elements().filter(|&b| self.leq(a, b)).collect()
    }

    pub fn downset(&self, a: Element) -> ElementSet {
        self.elements().filter(|&b| self.leq(b, a)).collect()
    }

    /// `{c : lo <= c <= hi}`.
    pub fn interval(&self, lo: Element, hi: Element) -> ElementSet {
        self.elements().filter(|&c| self.leq(lo, c) && self.leq(c, hi)).collect()
    }

    pub fn is_chain(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.comparable(a, b)))
    }

    pub fn is_chain_set(&self, s: ElementSet) -> bool {
        s.iter().all(|a| s.iter().all(|b| self.comparable(a, b)))
    }

    /// `a` is not the join of two elements strictly below it.
    /// The least element counts as join-irreducible.
    pub fn is_join_irreducible(&self, a: Element) -> bool {
        let below: Vec<Element> = self.elements().filter(|&b| self.lt(b, a)).collect();
        !below.iter().any(|&x| below.iter().any(|&y| self.join(x, y) == a))
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: Element) -> Vec<Element> {
        self.elements().filter(|&b| self.lt(b, a) && !self.elements().any(|c| self.lt(b, c) && self.lt(c, a))).collect()
    }

    /// Cover pairs `(lower, upper)` of the order, sorted.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.lower_covers(a) {
                out.push((b, a));
            }
        }
        out.sort_unstable();
        out
    }

    /// Length of the longest chain from a minimal element up to `a`.
    pub fn rank(&self, a: Element) -> usize {
        self.lower_covers(a).into_iter().map(|b| self.rank(b) + 1).max().unwrap_or(0)
    }

    pub fn is_idempotent_element(&self, a: Element) -> bool {
        self.square(a) == a
    }

    /// Is `s` closed under all fundamental operations (and does it contain `e`)?
    pub fn is_subuniverse(&self, s: ElementSet) -> bool {
        s.contains(self.e)
            && s.iter().all(|a| {
                s.contains(self.neg(a))
                    && s.iter().all(|b| {
                        s.contains(self.meet(a, b)) && s.contains(self.join(a, b)) && s.contains(self.fusion(a, b))
                    })
            })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element (its index when the algebra carries no labels).
    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Looks an element up by label or by index.
    pub fn element_by_label(&self, s: &str) -> Option<Element> {
        let s = s.trim();
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == s) {
                return Some(i);
            }
        }
        s.parse::<Element>().ok().filter(|&i| i < self.size())
    }

    /// Same tables up to the stored name and labels.
    pub fn same_tables(&self, other: &FiniteIrl) -> bool {
        self.e == other.e
            && self.neg == other.neg
            && self.meet == other.meet
            && self.join == other.join
            && self.fusion == other.fusion
    }

    /// Renames elements by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[Element]) -> FiniteIrl {
        let n = self.size();
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let t = |op: &BinOpTable| BinOpTable::from_fn(n, |a, b| perm[op.get(inv[a], inv[b])]);
        let neg = (0..n).map(|a| perm[self.neg[inv[a]]]).collect();
        let mut out =
            FiniteIrl::from_tables(self.name.clone(), t(&self.meet), t(&self.join), t(&self.fusion), neg, perm[self.e])
                .expect("relabeling preserves well-formedness");
        if let Some(l) = &self.labels {
            out.labels = Some((0..n).map(|a| l[inv[a]].clone()).collect());
        }
        out
    }
}

impl PartialEq for FiniteIrl {
    fn eq(&self, other: &Self) -> bool {
        self.same_tables(other)
    }
}

impl Eq for FiniteIrl {}

impl fmt::Debug for FiniteIrl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteIrl")
            .field("name", &self.name)
            .field("size", &self.size())
            .field("meet", &self.meet.rows())
            .field("fusion", &self.fusion.rows())
            .field("neg", &self.neg)
            .field("e", &self.e)
            .finish()
    }
}

/// Derives the join table from a meet table, if the induced order is a lattice.
pub fn join_from_meet(meet: &BinOpTable) -> Option<BinOpTable> {
    let n = meet.size();
    let leq = |a: Element, b: Element| meet.get(a, b) == a;
    let mut entries = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let ub: Vec<Element> = (0..n).filter(|&c| leq(a, c) && leq(b, c)).collect();
            let lub = ub.iter().copied().find(|&c| ub.iter().all(|&d| leq(c, d)))?;
            entries.push(lub);
        }
    }
    Some(BinOpTable::from_fn(n, |a, b| entries[a * n + b]))
}

/// Meet and join tables of a finite lattice given by its order relation.
pub fn lattice_from_order(n: usize, leq: impl Fn(Element, Element) -> bool) -> Option<(BinOpTable, BinOpTable)> {
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lb: Vec<Element> = (0..n).filter(|&c| leq(c, a) && leq(c, b)).collect();
            meet[a * n + b] = lb.iter().copied().find(|&c| lb.iter().all(|&d| leq(d, c)))?;
            let ub: Vec<Element> = (0..n).filter(|&c| leq(a, c) && leq(b, c)).collect();
            join[a * n + b] = ub.iter().copied().find(|&c| ub.iter().all(|&d| leq(c, d)))?;
        }
    }
    Some((BinOpTable::from_fn(n, |a, b| meet[a * n + b]), BinOpTable::from_fn(n, |a, b| join[a * n + b])))
}
