use crate::algebra::{BinOpTable, FiniteIrl};
use crate::error::{Error, Result};

/// Componentwise product; the pair `(a, b)` has index `a * |B| + b`.
pub fn direct_product(a: &FiniteIrl, b: &FiniteIrl) -> Result<FiniteIrl> {
    let (n, m) = (a.size(), b.size());
    if n * m > crate::algebra::MAX_SIZE {
        return Err(Error::SizeTooLarge { size: n * m, max: crate::algebra::MAX_SIZE });
    }
    let split = |x: usize| (x / m, x % m);
    let pair = |x: usize, y: usize| x * m + y;
    let op = |fa: &dyn Fn(usize, usize) -> usize, fb: &dyn Fn(usize, usize) -> usize| {
        BinOpTable::from_fn(n * m, |x, y| {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            pair(fa(x1, y1), fb(x2, y2))
        })
    };
    let meet = op(&|x, y| a.meet(x, y), &|x, y| b.meet(x, y));
    let join = op(&|x, y| a.join(x, y), &|x, y| b.join(x, y));
    let fusion = op(&|x, y| a.fusion(x, y), &|x, y| b.fusion(x, y));
    let neg = (0..n * m)
        .map(|x| {
            let (x1, x2) = split(x);
            pair(a.neg(x1), b.neg(x2))
        })
        .collect();
    let labels = (0..n * m)
        .map(|x| {
            let (x1, x2) = split(x);
            format!("({},{})", a.label(x1), b.label(x2))
        })
        .collect();
    let name = format!("{} x {}", a.name(), b.name());
    Ok(FiniteIrl::from_tables(name, meet, join, fusion, neg, pair(a.e(), b.e()))?.with_labels(labels))
}
