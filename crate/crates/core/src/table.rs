//! Raw Cayley tables.

use std::fmt;

use crate::error::FormatError;

/// An element of a finite algebra, identified by its index in `0..order`.
///
/// Index 0 is always the constant 0 of the algebra.
pub type Element = usize;

/// An unvalidated `n × n` operation table over the elements `0..n`.
///
/// Entries are stored row-major: `get(x, y)` is `x·y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Builds a table from its rows, checking shape and range.
    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self, FormatError> {
        let order = rows.len();
        if order == 0 {
            return Err(FormatError::Empty);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(FormatError::NotSquare {
                    row: x,
                    len: row.len(),
                    order,
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_flat(order, entries)
    }

    /// Builds a table from a row-major flattened vector of length `order²`.
    pub fn from_flat(order: usize, entries: Vec<Element>) -> Result<Self, FormatError> {
        if order == 0 {
            return Err(FormatError::Empty);
        }
        if entries.len() != order * order {
            return Err(FormatError::WrongLength {
                order,
                len: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|&v| v >= order) {
            return Err(FormatError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos],
                order,
            });
        }
        Ok(CayleyTable { order, entries })
    }

    /// Builds a table by evaluating `op` on every pair.
    pub fn from_fn(order: usize, mut op: impl FnMut(Element, Element) -> Element) -> Result<Self, FormatError> {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                entries.push(op(x, y));
            }
        }
        Self::from_flat(order, entries)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// `x·y`. Panics if either index is out of range.
    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        assert!(x < self.order && y < self.order, "element out of range");
        self.entries[x * self.order + y]
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.order)
    }

    /// Row-major flattened entries.
    pub fn as_flat(&self) -> &[Element] {
        &self.entries
    }

    /// Relabels the table by `perm` (source label to target label):
    /// the result satisfies `out[perm[x]][perm[y]] = perm[self[x][y]]`.
    ///
    /// Panics unless `perm` is a permutation of `0..order`.
    pub fn relabel(&self, perm: &[Element]) -> CayleyTable {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation length must equal the order");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.entries[x * n + y]];
            }
        }
        CayleyTable { order: n, entries }
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
