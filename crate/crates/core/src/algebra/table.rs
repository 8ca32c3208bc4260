use super::Element;

/// An `n x n` operation table, row index = left argument.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinOpTable {
    size: usize,
    entries: Vec<Element>,
}

impl BinOpTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(Element, Element) -> Element) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                entries.push(f(a, b));
            }
        }
        BinOpTable { size, entries }
    }

    /// Builds a table from rows, returning a description of the first shape or range problem.
    pub fn from_rows(size: usize, rows: &[Vec<Element>]) -> Result<Self, String> {
        if rows.len() != size {
            return Err(format!("expected {size} rows, found {}", rows.len()));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(format!("row {i} has {} entries, expected {size}", row.len()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(format!("entry ({i},{j}) = {v} is out of range"));
                }
                entries.push(v);
            }
        }
        Ok(BinOpTable { size, entries })
    }

    #[inline]
    pub fn get(&self, a: Element, b: Element) -> Element {
        self.entries[a * self.size + b]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.entries.chunks(self.size.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }
}
