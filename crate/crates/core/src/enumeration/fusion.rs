//! Fusion tables over a fixed lattice, negation and neutral element.
//!
//! Each cell of the (commutative) table carries a bitmask domain. Fixing a
//! cell propagates monotonicity, join preservation, associativity and the
//! involutive residuation law `x*y <= z iff x*~z <= ~y`; the search branches
//! on the cell with the smallest domain.

use crate::algebra::{BinOpTable, Element};

pub(crate) struct Frame<'a> {
    pub meet: &'a BinOpTable,
    pub join: &'a BinOpTable,
    pub neg: &'a [Element],
    pub e: Element,
    pub square_increasing: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub pruned: u64,
}

struct Ctx {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
    lt: Vec<Vec<bool>>,
    join: Vec<Element>,
    neg: Vec<Element>,
    all: u64,
}

type Domains = Vec<u64>;

impl Ctx {
    fn cell(&self, x: Element, y: Element) -> usize {
        x * self.n + y
    }

    /// Intersects the domain of `(x, y)` (and `(y, x)`) with `mask`.
    fn narrow(&self, d: &mut Domains, x: Element, y: Element, mask: u64, queue: &mut Vec<(Element, Element)>) -> bool {
        let i = self.cell(x, y);
        let new = d[i] & mask;
        if new == d[i] {
            return true;
        }
        if new == 0 {
            return false;
        }
        d[i] = new;
        d[self.cell(y, x)] = new;
        if new.count_ones() == 1 {
            queue.push((x, y));
        }
        true
    }

    fn value(&self, d: &Domains, x: Element, y: Element) -> Option<Element> {
        let v = d[self.cell(x, y)];
        (v.count_ones() == 1).then(|| v.trailing_zeros() as Element)
    }

    fn equate(
        &self,
        d: &mut Domains,
        a: (Element, Element),
        b: (Element, Element),
        q: &mut Vec<(Element, Element)>,
    ) -> bool {
        let m = d[self.cell(a.0, a.1)] & d[self.cell(b.0, b.1)];
        self.narrow(d, a.0, a.1, m, q) && self.narrow(d, b.0, b.1, m, q)
    }

    /// Consequences of `x * y = v`, with `x` as the varying left argument.
    fn consequences(
        &self,
        d: &mut Domains,
        x: Element,
        y: Element,
        v: Element,
        q: &mut Vec<(Element, Element)>,
    ) -> bool {
        let n = self.n;
        for x2 in 0..n {
            if self.lt[x][x2] && !self.narrow(d, x2, y, self.up[v], q) {
                return false;
            }
            if self.lt[x2][x] && !self.narrow(d, x2, y, self.down[v], q) {
                return false;
            }
        }
        let not_below_ny = self.all & !self.down[self.neg[y]];
        for c in 0..n {
            let mask = if self.down[c] >> v & 1 == 1 { self.down[self.neg[y]] } else { not_below_ny };
            if !self.narrow(d, x, self.neg[c], mask, q) {
                return false;
            }
        }
        for z in 0..n {
            if let Some(w) = self.value(d, x, z) {
                let yz = self.join[y * n + z];
                if !self.narrow(d, x, yz, 1 << self.join[v * n + w], q) {
                    return false;
                }
            }
            if let Some(w) = self.value(d, y, z) {
                // (x y) z = x (y z)
                if !self.equate(d, (v, z), (x, w), q) {
                    return false;
                }
            }
            if let Some(u) = self.value(d, z, x) {
                // (z x) y = z (x y)
                if !self.equate(d, (u, y), (z, v), q) {
                    return false;
                }
            }
        }
        true
    }

    fn propagate(&self, d: &mut Domains, q: &mut Vec<(Element, Element)>) -> bool {
        while let Some((x, y)) = q.pop() {
            let Some(v) = self.value(d, x, y) else { continue };
            if !self.consequences(d, x, y, v, q) || !self.consequences(d, y, x, v, q) {
                return false;
            }
        }
        true
    }
}

/// All fusion tables making the frame an involutive residuated lattice
/// (square-increasing when requested). Each returned table is fully checked.
pub(crate) fn fusion_tables(frame: &Frame, counters: &mut Counters) -> Vec<BinOpTable> {
    let n = frame.neg.len();
    let leq = |x: Element, y: Element| frame.meet.get(x, y) == x;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let up: Vec<u64> = (0..n).map(|x| (0..n).filter(|&y| leq(x, y)).fold(0, |m, y| m | 1 << y)).collect();
    let down: Vec<u64> = (0..n).map(|x| (0..n).filter(|&y| leq(y, x)).fold(0, |m, y| m | 1 << y)).collect();
    let ctx = Ctx {
        n,
        lt: (0..n).map(|x| (0..n).map(|y| x != y && leq(x, y)).collect()).collect(),
        join: frame.join.entries().to_vec(),
        neg: frame.neg.to_vec(),
        up,
        down,
        all,
    };
    let (e, f) = (frame.e, frame.neg[frame.e]);
    let bot = (0..n).find(|&x| (0..n).all(|y| leq(x, y))).expect("finite lattice");
    let below_f = ctx.down[f];
    let mut d: Domains = vec![all; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut m = all;
            // x * y <= f iff x <= ~y
            m &= if leq(x, frame.neg[y]) { below_f } else { all & !below_f };
            if y == e {
                m &= 1 << x;
            }
            if x == e {
                m &= 1 << y;
            }
            if x == bot || y == bot {
                m &= 1 << bot;
            }
            if frame.square_increasing && x == y {
                m &= ctx.up[x];
            }
            d[ctx.cell(x, y)] &= m;
        }
    }
    let mut out = Vec::new();
    if d.contains(&0) {
        counters.pruned += 1;
        return out;
    }
    let mut q: Vec<(Element, Element)> =
        (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).filter(|&(x, y)| ctx.value(&d, x, y).is_some()).collect();
    if !ctx.propagate(&mut d, &mut q) {
        counters.pruned += 1;
        return out;
    }
    search(&ctx, d, frame, counters, &mut out);
    out
}

fn search(ctx: &Ctx, d: Domains, frame: &Frame, counters: &mut Counters, out: &mut Vec<BinOpTable>) {
    counters.nodes += 1;
    let n = ctx.n;
    let open = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .filter(|&(x, y)| d[ctx.cell(x, y)].count_ones() > 1)
        .min_by_key(|&(x, y)| d[ctx.cell(x, y)].count_ones());
    let Some((x, y)) = open else {
        let table = BinOpTable::from_fn(n, |a, b| d[ctx.cell(a, b)].trailing_zeros() as Element);
        if is_fusion(&table, frame) {
            out.push(table);
        } else {
            counters.pruned += 1;
        }
        return;
    };
    let mut rest = d[ctx.cell(x, y)];
    while rest != 0 {
        let v = rest.trailing_zeros() as Element;
        rest &= rest - 1;
        let mut next = d.clone();
        let mut q = Vec::new();
        if ctx.narrow(&mut next, x, y, 1 << v, &mut q) && ctx.propagate(&mut next, &mut q) {
            search(ctx, next, frame, counters, out);
        } else {
            counters.pruned += 1;
        }
    }
}

/// Full check of a candidate table.
fn is_fusion(t: &BinOpTable, frame: &Frame) -> bool {
    let n = t.size();
    let leq = |x: Element, y: Element| frame.meet.get(x, y) == x;
    let neg = frame.neg;
    (0..n).all(|x| {
        t.get(x, frame.e) == x
            && (!frame.square_increasing || leq(x, t.get(x, x)))
            && (0..n).all(|y| {
                t.get(x, y) == t.get(y, x)
                    && (0..n).all(|z| {
                        t.get(t.get(x, y), z) == t.get(x, t.get(y, z))
                            && leq(t.get(x, y), z) == leq(t.get(x, neg[z]), neg[y])
                    })
            })
    })
}
