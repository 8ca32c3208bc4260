use std::sync::OnceLock;

use crate::algebra::validate::{check1, check2, check3};
use crate::algebra::{BinOpTable, Element, ElementSet, FiniteIrl, ValidationReport, MAX_SIZE};
use crate::error::{Error, Result};

/// A finite algebra `<A; *, /\, \/, ~>` with no neutral element in the
/// signature. `a -> b` abbreviates `~(a * ~b)` and `|a|` abbreviates `a -> a`.
#[derive(Clone, Debug)]
pub struct FiniteRa {
    name: String,
    meet: BinOpTable,
    join: BinOpTable,
    fusion: BinOpTable,
    neg: Vec<Element>,
    labels: Option<Vec<String>>,
    residual: OnceLock<BinOpTable>,
}

impl PartialEq for FiniteRa {
    fn eq(&self, other: &Self) -> bool {
        self.meet == other.meet && self.join == other.join && self.fusion == other.fusion && self.neg == other.neg
    }
}

impl Eq for FiniteRa {}

impl FiniteRa {
    pub fn from_tables(
        name: impl Into<String>,
        meet: BinOpTable,
        join: BinOpTable,
        fusion: BinOpTable,
        neg: Vec<Element>,
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
        Ok(FiniteRa { name: name.into(), meet, join, fusion, neg, labels: None, residual: OnceLock::new() })
    }

    pub fn from_rows(
        name: impl Into<String>,
        meet: &[Vec<Element>],
        join: &[Vec<Element>],
        fusion: &[Vec<Element>],
        neg: Vec<Element>,
    ) -> Result<Self> {
        let n = neg.len();
        let t = |rows: &[Vec<Element>], label: &str| {
            BinOpTable::from_rows(n, rows).map_err(|e| Error::MalformedTable(format!("{label}: {e}")))
        };
        Self::from_tables(name, t(meet, "meet")?, t(join, "join")?, t(fusion, "fusion")?, neg)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size(), "one label per element");
        self.labels = Some(labels);
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

    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet.get(a, b)
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join.get(a, b)
    }

    pub fn fusion(&self, a: Element, b: Element) -> Element {
        self.fusion.get(a, b)
    }

    pub fn neg(&self, a: Element) -> Element {
        self.neg[a]
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.meet(a, b) == a
    }

    pub fn lt(&self, a: Element, b: Element) -> bool {
        a != b && self.leq(a, b)
    }

    /// `a -> b = ~(a * ~b)`.
    pub fn residual(&self, a: Element, b: Element) -> Element {
        self.residual
            .get_or_init(|| BinOpTable::from_fn(self.size(), |x, y| self.neg(self.fusion(x, self.neg(y)))))
            .get(a, b)
    }

    /// `|a| = a -> a`.
    pub fn abs(&self, a: Element) -> Element {
        self.residual(a, a)
    }

    /// Meet of a nonempty set; `None` for the empty set.
    pub fn meet_all(&self, s: impl IntoIterator<Item = Element>) -> Option<Element> {
        s.into_iter().reduce(|x, y| self.meet(x, y))
    }

    pub fn bottom(&self) -> Element {
        self.meet_all(self.elements()).expect("nonempty carrier")
    }

    pub fn top(&self) -> Element {
        self.elements().reduce(|x, y| self.join(x, y)).expect("nonempty carrier")
    }

    pub fn upset(&self, a: Element) -> ElementSet {
        self.elements().filter(|&x| self.leq(a, x)).collect()
    }

    pub fn is_subuniverse(&self, s: ElementSet) -> bool {
        s.iter().all(|x| {
            s.contains(self.neg(x))
                && s.iter().all(|y| {
                    s.contains(self.meet(x, y)) && s.contains(self.join(x, y)) && s.contains(self.fusion(x, y))
                })
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.elements().find(|&x| self.label(x) == label)
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

    /// The same algebra with `e` added to the signature. Fails unless the
    /// result is an involutive residuated lattice.
    pub fn with_neutral(&self, e: Element) -> Result<FiniteIrl> {
        if e >= self.size() {
            return Err(Error::MalformedTable(format!("e = {e} out of range")));
        }
        let a = FiniteIrl::from_tables(
            format!("{}+", self.name),
            self.meet.clone(),
            self.join.clone(),
            self.fusion.clone(),
            self.neg.clone(),
            e,
        )?;
        let a = match &self.labels {
            Some(l) => a.with_labels(l.clone()),
            None => a,
        };
        let report = crate::algebra::validate_dmm(&a)?;
        if !report.passed() {
            return Err(Error::NotDmm(report.summary()));
        }
        Ok(a)
    }
}

/// Drops `e` from the signature.
pub fn e_free_reduct(a: &FiniteIrl) -> FiniteRa {
    let ra = FiniteRa::from_tables(
        format!("{}-", a.name()),
        a.meet_table().clone(),
        a.join_table().clone(),
        a.fusion_table().clone(),
        a.neg_table().to_vec(),
    )
    .expect("tables of a valid algebra");
    match a.labels() {
        Some(l) => ra.with_labels(l.to_vec()),
        None => ra,
    }
}

/// Checks every defining condition of a relevant algebra by exhaustive loops.
pub fn validate_ra(a: &FiniteRa) -> ValidationReport {
    let n = a.size();
    let mut r = ValidationReport::default();
    let (m, j, p, neg) = (|x, y| a.meet(x, y), |x, y| a.join(x, y), |x, y| a.fusion(x, y), |x| a.neg(x));

    check1(&mut r, "meet-idempotent", n, |x| m(x, x) == x);
    check2(&mut r, "meet-commutative", n, |x, y| m(x, y) == m(y, x));
    check3(&mut r, "meet-associative", n, |x, y, z| m(m(x, y), z) == m(x, m(y, z)));
    check1(&mut r, "join-idempotent", n, |x| j(x, x) == x);
    check2(&mut r, "join-commutative", n, |x, y| j(x, y) == j(y, x));
    check3(&mut r, "join-associative", n, |x, y, z| j(j(x, y), z) == j(x, j(y, z)));
    check2(&mut r, "absorption", n, |x, y| m(x, j(x, y)) == x && j(x, m(x, y)) == x);
    check2(&mut r, "join-agrees-with-meet", n, |x, y| (j(x, y) == y) == (m(x, y) == x));
    check3(&mut r, "distributive", n, |x, y, z| m(x, j(y, z)) == j(m(x, y), m(x, z)));
    check2(&mut r, "fusion-commutative", n, |x, y| p(x, y) == p(y, x));
    check3(&mut r, "fusion-associative", n, |x, y, z| p(p(x, y), z) == p(x, p(y, z)));
    check1(&mut r, "double-negation", n, |x| neg(neg(x)) == x);
    check1(&mut r, "square-increasing", n, |x| a.leq(x, p(x, x)));
    check2(&mut r, "contraposition", n, |x, y| a.leq(x, y) == a.leq(neg(y), neg(x)));
    check3(&mut r, "antilogism", n, |x, y, z| a.leq(p(x, y), z) == a.leq(p(x, neg(z)), neg(y)));
    check3(&mut r, "abs-meet-absorbing", n, |x, y, z| a.leq(x, p(x, m(neg(p(y, neg(y))), neg(p(z, neg(z)))))));
    r
}
