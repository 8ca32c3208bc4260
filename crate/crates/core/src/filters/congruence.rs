use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::filter::{deductive_filters, filter_violation, DeductiveFilter};
use crate::algebra::{BinOpTable, Element, ElementSet, FiniteIrl};
use crate::error::{Error, Result};

/// A partition given as block ids; blocks are numbered in order of their
/// least member. Serializes as the block-id array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Congruence {
    blocks: Vec<usize>,
}

impl Congruence {
    /// Normalizes any labelling of the classes.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut ids: Vec<Option<usize>> = Vec::new();
        let mut next = 0;
        let blocks = labels
            .iter()
            .map(|&l| {
                if ids.len() <= l {
                    ids.resize(l + 1, None);
                }
                *ids[l].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Congruence { blocks }
    }

    pub fn identity(n: usize) -> Self {
        Congruence { blocks: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Congruence { blocks: vec![0; n] }
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_of(&self, a: Element) -> usize {
        self.blocks[a]
    }

    pub fn related(&self, a: Element, b: Element) -> bool {
        self.blocks[a] == self.blocks[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<ElementSet> {
        let mut out = vec![ElementSet::empty(); self.num_blocks()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].insert(x);
        }
        out
    }

    pub fn class_of(&self, a: Element) -> ElementSet {
        self.classes()[self.blocks[a]]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.blocks.len()
    }

    /// Pairs `(x, least member of x's class)`; they generate the partition.
    pub fn spanning_pairs(&self) -> Vec<(Element, Element)> {
        let mut least = vec![usize::MAX; self.num_blocks()];
        for (x, &b) in self.blocks.iter().enumerate() {
            least[b] = least[b].min(x);
        }
        self.blocks.iter().enumerate().map(|(x, &b)| (x, least[b])).collect()
    }

    /// Is every class of `self` inside a class of `other`?
    pub fn refines(&self, other: &Congruence) -> bool {
        (0..self.blocks.len()).all(|a| (0..self.blocks.len()).all(|b| !self.related(a, b) || other.related(a, b)))
    }
}

/// The first operation the partition is not compatible with, if any.
pub fn congruence_violation(a: &FiniteIrl, theta: &Congruence) -> Option<String> {
    if theta.blocks.len() != a.size() {
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

/// `{(a, b) : a -> b, b -> a in G}`.
pub fn omega(a: &FiniteIrl, g: &DeductiveFilter) -> Result<Congruence> {
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
    Ok(Congruence::from_labels(&labels))
}

/// `{a : (a /\ e, e) in theta}`.
pub fn filter_of(a: &FiniteIrl, theta: &Congruence) -> Result<DeductiveFilter> {
    if let Some(why) = congruence_violation(a, theta) {
        return Err(Error::NotACongruence(why));
    }
    let members = a.elements().filter(|&x| theta.related(a.meet(x, a.e()), a.e())).collect();
    DeductiveFilter::new(a, members)
}

/// A quotient algebra with its projection map.
#[derive(Clone, Debug, Serialize)]
pub struct Quotient {
    pub algebra: FiniteIrl,
    pub projection: Vec<Element>,
    pub congruence: Congruence,
}

/// `A / theta`; block `i` is the class with the `i`-th least least member.
pub fn quotient_by(a: &FiniteIrl, theta: &Congruence) -> Result<Quotient> {
    if let Some(why) = congruence_violation(a, theta) {
        return Err(Error::NotACongruence(why));
    }
    let k = theta.num_blocks();
    let reps: Vec<Element> = theta.classes().iter().map(|c| c.first().expect("nonempty class")).collect();
    let t =
        |op: &dyn Fn(Element, Element) -> Element| BinOpTable::from_fn(k, |i, j| theta.block_of(op(reps[i], reps[j])));
    let meet = t(&|x, y| a.meet(x, y));
    let join = t(&|x, y| a.join(x, y));
    let fusion = t(&|x, y| a.fusion(x, y));
    let neg = reps.iter().map(|&r| theta.block_of(a.neg(r))).collect();
    let labels = theta
        .classes()
        .iter()
        .map(|c| {
            let names: Vec<String> = c.iter().map(|x| a.label(x)).collect();
            if names.len() == 1 {
                names[0].clone()
            } else {
                format!("{{{}}}", names.join(","))
            }
        })
        .collect();
    let algebra =
        FiniteIrl::from_tables(format!("{}/theta", a.name()), meet, join, fusion, neg, theta.block_of(a.e()))?
            .with_labels(labels);
    Ok(Quotient { algebra, projection: theta.blocks.clone(), congruence: theta.clone() })
}

/// `A / G`. Checks afterwards that `a -> b in G` iff `a/G <= b/G`.
pub fn quotient(a: &FiniteIrl, g: &DeductiveFilter) -> Result<Quotient> {
    let theta = omega(a, g)?;
    let q = quotient_by(a, &theta)?;
    for x in a.elements() {
        for y in a.elements() {
            assert_eq!(
                g.contains(a.residual(x, y)),
                q.algebra.leq(q.projection[x], q.projection[y]),
                "quotient order disagrees with the filter at ({x},{y})"
            );
        }
    }
    Ok(q)
}

/// The congruences of an algebra, in bijection with its deductive filters.
#[derive(Clone, Debug, Serialize)]
pub struct CongruenceLattice {
    /// Sorted as the filters: by filter size, then membership.
    pub filters: Vec<DeductiveFilter>,
    pub congruences: Vec<Congruence>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    /// `leq[i][j]` iff congruence `i` refines congruence `j`.
    pub fn order(&self) -> Vec<Vec<bool>> {
        self.congruences.iter().map(|c| self.congruences.iter().map(|d| c.refines(d)).collect()).collect()
    }

    /// Indices of the congruences covering the identity.
    pub fn atoms(&self) -> Vec<usize> {
        let order = self.order();
        let bottom = self.congruences.iter().position(|c| c.is_identity()).expect("identity congruence");
        (0..self.len())
            .filter(|&i| i != bottom && !(0..self.len()).any(|j| j != i && j != bottom && order[j][i]))
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        let order = self.order();
        (0..self.len()).all(|i| (0..self.len()).all(|j| order[i][j] || order[j][i]))
    }
}

pub fn congruence_lattice(a: &FiniteIrl) -> CongruenceLattice {
    let filters = deductive_filters(a);
    let congruences = filters.iter().map(|g| omega(a, g).expect("enumerated filter")).collect();
    CongruenceLattice { filters, congruences }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// The least congruence containing the given pairs, by union-find closure.
pub fn congruence_generated(a: &FiniteIrl, pairs: &[(Element, Element)]) -> Congruence {
    let n = a.size();
    let mut parent: Vec<usize> = (0..n).collect();
    for &(x, y) in pairs {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent[rx.max(ry)] = rx.min(ry);
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in x + 1..n {
                if find(&mut parent, x) != find(&mut parent, y) {
                    continue;
                }
                let mut forced = vec![(a.neg(x), a.neg(y))];
                for z in 0..n {
                    forced.push((a.meet(x, z), a.meet(y, z)));
                    forced.push((a.join(x, z), a.join(y, z)));
                    forced.push((a.fusion(x, z), a.fusion(y, z)));
                }
                for (u, v) in forced {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru.max(rv)] = ru.min(rv);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
            return Congruence::from_labels(&labels);
        }
    }
}

/// All congruences computed from principal congruences and their joins,
/// without reference to filters. Sorted.
pub fn congruences_bruteforce(a: &FiniteIrl) -> Vec<Congruence> {
    let n = a.size();
    let mut all: BTreeSet<Congruence> = BTreeSet::new();
    all.insert(Congruence::identity(n));
    let principal: Vec<Congruence> =
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).map(|p| congruence_generated(a, &[p])).collect();
    let mut frontier: Vec<Congruence> = all.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let mut pairs = c.spanning_pairs();
            pairs.extend(p.spanning_pairs());
            let j = congruence_generated(a, &pairs);
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    all.into_iter().collect()
}
