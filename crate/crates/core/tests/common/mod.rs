//! Slow reference recount of small algebras: every labelled order, negation,
//! neutral element and commutative table with the neutral row fixed is tried,
//! checked against the axioms directly, and the survivors are grouped into
//! isomorphism classes by minimizing over all permutations.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

struct Structure {
    n: usize,
    leq: Vec<bool>,
    neg: Vec<usize>,
    e: usize,
    fusion: Vec<usize>,
}

fn meet_of(n: usize, leq: &[bool], a: usize, b: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..n).filter(|&c| leq[c * n + a] && leq[c * n + b]).collect();
    lower.iter().copied().find(|&c| lower.iter().all(|&d| leq[d * n + c]))
}

fn join_of(n: usize, leq: &[bool], a: usize, b: usize) -> Option<usize> {
    let upper: Vec<usize> = (0..n).filter(|&c| leq[a * n + c] && leq[b * n + c]).collect();
    upper.iter().copied().find(|&c| upper.iter().all(|&d| leq[c * n + d]))
}

fn lattice_orders(n: usize, distributive: bool) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    let mut out = Vec::new();
    for bits in 0u64..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                leq[a * n + b] = true;
            }
        }
        let antisymmetric = pairs.iter().all(|&(a, b)| !(leq[a * n + b] && leq[b * n + a]));
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(leq[a * n + b] && leq[b * n + c]) || leq[a * n + c])));
        if !antisymmetric || !transitive {
            continue;
        }
        let lattice =
            (0..n).all(|a| (0..n).all(|b| meet_of(n, &leq, a, b).is_some() && join_of(n, &leq, a, b).is_some()));
        if !lattice {
            continue;
        }
        if distributive {
            let m = |a, b| meet_of(n, &leq, a, b).unwrap();
            let j = |a, b| join_of(n, &leq, a, b).unwrap();
            if !(0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(a, j(b, c)) == j(m(a, b), m(a, c))))) {
                continue;
            }
        }
        out.push(leq);
    }
    out
}

fn is_model(s: &Structure, square_increasing: bool) -> bool {
    let n = s.n;
    let le = |a: usize, b: usize| s.leq[a * n + b];
    let p = |a: usize, b: usize| s.fusion[a * n + b];
    (0..n).all(|x| {
        p(x, s.e) == x
            && (!square_increasing || le(x, p(x, x)))
            && (0..n).all(|y| {
                p(x, y) == p(y, x)
                    && (0..n).all(|z| p(p(x, y), z) == p(x, p(y, z)) && le(p(x, y), z) == le(x, s.neg[p(y, s.neg[z])]))
            })
    })
}

/// Least encoding of the structure over all relabellings.
fn code(s: &Structure) -> Vec<usize> {
    let n = s.n;
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut inv = vec![0; n];
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            let mut c = vec![perm[s.e]];
            for i in 0..n {
                for j in 0..n {
                    c.push(s.leq[inv[i] * n + inv[j]] as usize);
                }
            }
            c.extend((0..n).map(|i| perm[s.neg[inv[i]]]));
            for i in 0..n {
                for j in 0..n {
                    c.push(perm[s.fusion[inv[i] * n + inv[j]]]);
                }
            }
            c
        })
        .min()
        .expect("at least one permutation")
}

/// Number of involutive residuated lattices of size `n` up to isomorphism;
/// with `dmm`, De Morgan monoids only.
pub fn slow_count(n: usize, dmm: bool) -> usize {
    let mut classes = BTreeSet::new();
    for leq in lattice_orders(n, dmm) {
        for neg in (0..n).permutations(n) {
            let involutive = (0..n).all(|a| neg[neg[a]] == a);
            let antitone = (0..n).all(|a| (0..n).all(|b| leq[a * n + b] == leq[neg[b] * n + neg[a]]));
            if !involutive || !antitone {
                continue;
            }
            for e in 0..n {
                let free: Vec<(usize, usize)> = (0..n)
                    .filter(|&x| x != e)
                    .flat_map(|x| (x..n).filter(move |&y| y != e).map(move |y| (x, y)))
                    .collect();
                for values in (0..free.len()).map(|_| 0..n).multi_cartesian_product() {
                    let mut fusion = vec![0; n * n];
                    for x in 0..n {
                        fusion[x * n + e] = x;
                        fusion[e * n + x] = x;
                    }
                    for (&(x, y), &v) in free.iter().zip(&values) {
                        fusion[x * n + y] = v;
                        fusion[y * n + x] = v;
                    }
                    let s = Structure { n, leq: leq.clone(), neg: neg.clone(), e, fusion };
                    if is_model(&s, dmm) {
                        classes.insert(code(&s));
                    }
                }
                if free.is_empty() {
                    let mut fusion = vec![0; n * n];
                    for x in 0..n {
                        fusion[x * n + e] = x;
                        fusion[e * n + x] = x;
                    }
                    let s = Structure { n, leq: leq.clone(), neg: neg.clone(), e, fusion };
                    if is_model(&s, dmm) {
                        classes.insert(code(&s));
                    }
                }
            }
        }
    }
    classes.len()
}
