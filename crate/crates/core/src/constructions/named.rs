//! The small named algebras: 2, the Sugihara chains S_n, C4, D4, their
//! rigorous extensions, and the trivial algebra.

use crate::algebra::{lattice_from_order, validate_dmm, BinOpTable, Element, FiniteIrl};
use crate::error::{Error, Result};

/// Builds one of the named algebras.
///
/// Accepted names: `trivial`, `2`, `S<n>` / `S_<n>` (n >= 1), `C4`, `D4`,
/// `C4ext_<k>` / `D4ext_<k>`.
pub fn make_named(name: &str) -> Result<FiniteIrl> {
    let unknown = || Error::UnknownName(name.to_string());
    let a = match name {
        "trivial" | "1" => trivial(),
        "2" => two(),
        "C4" => c4(),
        "D4" => d4(),
        _ => {
            if let Some(k) = name.strip_prefix("C4ext_") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                rigorous_extensions(&c4(), k)?.with_name(name)
            } else if let Some(k) = name.strip_prefix("D4ext_") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                rigorous_extensions(&d4(), k)?.with_name(name)
            } else if let Some(n) = name.strip_prefix("S_").or_else(|| name.strip_prefix('S')) {
                let n: usize = n.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                sugihara(n)?
            } else {
                return Err(unknown());
            }
        }
    };
    let report = validate_dmm(&a)?;
    if !report.passed() {
        return Err(Error::NotDmm(format!("{name}: {}", report.summary())));
    }
    Ok(a)
}

pub fn trivial() -> FiniteIrl {
    let t = BinOpTable::from_fn(1, |_, _| 0);
    FiniteIrl::from_tables("trivial", t.clone(), t.clone(), t, vec![0], 0)
        .expect("one-element tables")
        .with_labels(vec!["e".into()])
}

/// The two-element Boolean algebra: `f < e`, fusion is meet.
pub fn two() -> FiniteIrl {
    let (meet, join) = lattice_from_order(2, |a, b| a <= b).expect("chain");
    FiniteIrl::from_tables("2", meet.clone(), join, meet, vec![1, 0], 1)
        .expect("2 tables")
        .with_labels(vec!["f".into(), "e".into()])
}

/// The Sugihara chain with `n` elements: `-k..k` with `e = 0` for odd `n`,
/// `-k..-1, 1..k` with `e = 1` for even `n`. Fusion returns the argument of
/// larger absolute value, and the meet of the two when these agree.
pub fn sugihara(n: usize) -> Result<FiniteIrl> {
    if n == 0 || n > crate::algebra::MAX_SIZE {
        return Err(Error::UnknownName(format!("S{n}")));
    }
    let k = (n / 2) as i64;
    let values: Vec<i64> = if n % 2 == 1 { (-k..=k).collect() } else { (-k..=k).filter(|&v| v != 0).collect() };
    let idx = |v: i64| values.iter().position(|&w| w == v).expect("value in carrier");
    let (meet, join) = lattice_from_order(n, |a, b| a <= b).expect("chain");
    let fusion = BinOpTable::from_fn(n, |a, b| {
        let (x, y) = (values[a], values[b]);
        let v = match x.abs().cmp(&y.abs()) {
            std::cmp::Ordering::Greater => x,
            std::cmp::Ordering::Less => y,
            std::cmp::Ordering::Equal => x.min(y),
        };
        idx(v)
    });
    let neg = values.iter().map(|&v| idx(-v)).collect();
    let e = if n % 2 == 1 { idx(0) } else { idx(1) };
    let labels = values.iter().map(|v| v.to_string()).collect();
    Ok(FiniteIrl::from_tables(format!("S{n}"), meet, join, fusion, neg, e)?.with_labels(labels))
}

const FOUR_LABELS: [&str; 4] = ["~f^2", "e", "f", "f^2"];

/// Fusion on `{bot, e, f, top}` forced by: bottom absorbs, `top * a = top`
/// for `a != bot`, `e` is neutral, `f * f = f^2 = top`.
fn four_element(name: &str, leq: impl Fn(Element, Element) -> bool) -> FiniteIrl {
    let (bot, e, f, top) = (0, 1, 2, 3);
    let (meet, join) = lattice_from_order(4, leq).expect("four-element lattice");
    let fusion = BinOpTable::from_fn(4, |a, b| {
        if a == bot || b == bot {
            bot
        } else if a == top || b == top {
            top
        } else if a == e {
            b
        } else if b == e {
            a
        } else {
            debug_assert!(a == f && b == f);
            top
        }
    });
    FiniteIrl::from_tables(name, meet, join, fusion, vec![top, f, e, bot], e)
        .expect("four-element tables")
        .with_labels(FOUR_LABELS.iter().map(|s| s.to_string()).collect())
}

/// The chain `~f^2 < e < f < f^2`.
pub fn c4() -> FiniteIrl {
    four_element("C4", |a, b| a <= b)
}

/// The diamond with `e`, `f` incomparable between `~f^2` and `f^2`.
pub fn d4() -> FiniteIrl {
    four_element("D4", |a, b| a == b || a == 0 || b == 3)
}

/// Adds a new least element `bot'` and greatest element `top'`; `bot'`
/// absorbs everything and `top' * a = top'` for `a != bot'`. Old elements
/// shift up by one index.
pub fn rigorous_extension(a: &FiniteIrl) -> Result<FiniteIrl> {
    let n = a.size();
    let m = n + 2;
    let (bot, top) = (0, n + 1);
    let old = |x: Element| x - 1;
    let (meet, join) =
        lattice_from_order(m, |x, y| x == bot || y == top || (x != top && y != bot && a.leq(old(x), old(y))))
            .ok_or_else(|| Error::MalformedTable("extension order is not a lattice".into()))?;
    let fusion = BinOpTable::from_fn(m, |x, y| {
        if x == bot || y == bot {
            bot
        } else if x == top || y == top {
            top
        } else {
            a.fusion(old(x), old(y)) + 1
        }
    });
    let neg = (0..m)
        .map(|x| match x {
            x if x == bot => top,
            x if x == top => bot,
            x => a.neg(old(x)) + 1,
        })
        .collect();
    let depth = a.name().matches('\'').count() + 1;
    let mut labels = vec![format!("bot{depth}")];
    labels.extend((0..n).map(|x| a.label(x)));
    labels.push(format!("top{depth}"));
    Ok(FiniteIrl::from_tables(format!("{}'", a.name()), meet, join, fusion, neg, a.e() + 1)?.with_labels(labels))
}

/// `k` successive rigorous two-point extensions.
pub fn rigorous_extensions(a: &FiniteIrl, k: usize) -> Result<FiniteIrl> {
    let mut out = a.clone();
    for _ in 0..k {
        out = rigorous_extension(&out)?;
    }
    Ok(out)
}

/// The names of the four algebras generating the minimal varieties.
pub const MINIMAL: [&str; 4] = ["2", "S3", "C4", "D4"];
