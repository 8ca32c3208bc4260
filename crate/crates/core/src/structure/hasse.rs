use std::fmt::Write;

use super::checks::LollipopReport;
use crate::algebra::{Element, FiniteIrl};

/// Levels of the order from the top down, one line per rank, followed by the
/// cover relation. `mark` may attach a short tag to each element.
fn render(a: &FiniteIrl, mark: &dyn Fn(Element) -> Option<&'static str>) -> String {
    let mut order: Vec<Element> = a.elements().collect();
    order.sort_by_key(|&x| a.downset(x).len());
    let mut ranks = vec![0; a.size()];
    for &x in &order {
        ranks[x] = a.lower_covers(x).iter().map(|&y| ranks[y] + 1).max().unwrap_or(0);
    }
    let tag = |x: Element| {
        let mut s = a.label(x);
        if x == a.e() && s != "e" {
            s.push_str("(e)");
        }
        if let Some(m) = mark(x) {
            write!(s, "[{m}]").expect("write to string");
        }
        s
    };
    let mut out = String::new();
    let max = ranks.iter().copied().max().unwrap_or(0);
    for r in (0..=max).rev() {
        let row: Vec<String> = a.elements().filter(|&x| ranks[x] == r).map(tag).collect();
        writeln!(out, "{r:>3} | {}", row.join("  ")).expect("write to string");
    }
    let edges: Vec<String> =
        a.covers().into_iter().map(|(lo, hi)| format!("{} < {}", a.label(lo), a.label(hi))).collect();
    if !edges.is_empty() {
        writeln!(out, "covers: {}", edges.join(", ")).expect("write to string");
    }
    out
}

pub fn render_hasse(a: &FiniteIrl) -> String {
    render(a, &|_| None)
}

/// Hasse diagram with `I` on the interval, `L` and `U` on the outer chains
/// (the shared endpoints keep the `I` tag).
pub fn render_lollipop(a: &FiniteIrl, r: &LollipopReport) -> String {
    if r.idempotent_case {
        return render(a, &|_| None);
    }
    render(a, &|x| {
        if r.interval.contains(x) {
            Some("I")
        } else if r.lower_chain.contains(x) {
            Some("L")
        } else if r.upper_chain.contains(x) {
            Some("U")
        } else {
            None
        }
    })
}
