//! Validated BCK-algebras and their order-theoretic queries.

use std::collections::BTreeSet;

use crate::commuting::CommutingReport;
use crate::error::{Axiom, AxiomViolation, ValidationError};
use crate::table::{CayleyTable, Element};

/// A Cayley table that satisfies BCK1–BCK5 (and therefore `x·0 = x`).
///
/// Element 0 is the constant; `x ≤ y` iff `x·y = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BckAlgebra {
    table: CayleyTable,
}

impl std::fmt::Debug for BckAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("BckAlgebra").field(&self.table).finish()
    }
}

/// Checks the axioms in a fixed order and reports the first failure with the
/// lexicographically least witness.
pub fn validate(table: CayleyTable) -> Result<BckAlgebra, AxiomViolation> {
    match first_violation(&table) {
        Some(v) => Err(v),
        None => Ok(BckAlgebra { table }),
    }
}

/// Like [`validate`], starting from raw rows so shape errors are reported too.
pub fn validate_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<BckAlgebra, ValidationError> {
    let table = CayleyTable::from_rows(rows)?;
    Ok(validate(table)?)
}

fn first_violation(t: &CayleyTable) -> Option<AxiomViolation> {
    let n = t.order();
    let op = |x, y| t.get(x, y);
    let fail = |axiom, witness: Vec<Element>| Some(AxiomViolation { axiom, witness });
    for axiom in Axiom::CHECK_ORDER {
        match axiom {
            Axiom::Bck3 => {
                if let Some(x) = (0..n).find(|&x| op(x, x) != 0) {
                    return fail(axiom, vec![x]);
                }
            }
            Axiom::Bck4 => {
                if let Some(x) = (0..n).find(|&x| op(0, x) != 0) {
                    return fail(axiom, vec![x]);
                }
            }
            Axiom::RightZero => {
                if let Some(x) = (0..n).find(|&x| op(x, 0) != x) {
                    return fail(axiom, vec![x]);
                }
            }
            Axiom::Bck5 => {
                for x in 0..n {
                    for y in 0..n {
                        if x != y && op(x, y) == 0 && op(y, x) == 0 {
                            return fail(axiom, vec![x, y]);
                        }
                    }
                }
            }
            Axiom::Bck2 => {
                for x in 0..n {
                    for y in 0..n {
                        if op(op(x, op(x, y)), y) != 0 {
                            return fail(axiom, vec![x, y]);
                        }
                    }
                }
            }
            Axiom::Bck1 => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if op(op(op(x, y), op(x, z)), op(z, y)) != 0 {
                                return fail(axiom, vec![x, y, z]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

impl BckAlgebra {
    /// Wraps a table known to satisfy the axioms by construction.
    pub(crate) fn from_trusted(table: CayleyTable) -> Self {
        debug_assert!(
            first_violation(&table).is_none(),
            "construction produced an invalid table: {table:?}"
        );
        BckAlgebra { table }
    }

    /// The one-element algebra `{0}`.
    pub fn trivial() -> Self {
        BckAlgebra {
            table: CayleyTable::from_flat(1, vec![0]).expect("1x1 table"),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    /// `x·y`.
    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table.get(x, y)
    }

    /// `x ≤ y` in the induced order.
    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.op(x, y) == 0
    }

    /// Strict order `x < y`.
    #[inline]
    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    /// `x` and `y` are incomparable.
    pub fn incomparable(&self, x: Element, y: Element) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    /// The meet term `x∧y = y·(y·x)`, a common lower bound of `x` and `y`.
    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.op(y, self.op(y, x))
    }

    #[inline]
    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.meet(x, y) == self.meet(y, x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.commutes(x, y)))
    }

    /// `x·y = (x·y)·y` for all pairs.
    pub fn is_positive_implicative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| {
            let xy = self.op(x, y);
            xy == self.op(xy, y)
        }))
    }

    /// The top element, if the algebra is bounded.
    pub fn top(&self) -> Option<Element> {
        let n = self.order();
        (0..n).find(|&t| (0..n).all(|x| self.leq(x, t)))
    }

    pub fn is_bounded(&self) -> bool {
        self.top().is_some()
    }

    pub fn commuting_degree(&self) -> CommutingReport {
        CommutingReport::of(self)
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn hasse_covers(&self) -> BTreeSet<(Element, Element)> {
        let n = self.order();
        let mut covers = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    covers.insert((x, y));
                }
            }
        }
        covers
    }

    /// Height of each element in the poset (0 has rank 0).
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.order();
        let mut rank = vec![0usize; n];
        // A strict chain has at most n elements, so n passes reach a fixpoint.
        for _ in 0..n {
            let mut changed = false;
            for y in 0..n {
                for x in 0..n {
                    if self.lt(x, y) && rank[x] + 1 > rank[y] {
                        rank[y] = rank[x] + 1;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        rank
    }

    /// Whether `elements` is closed under `·` (it must contain 0 to be a subalgebra).
    pub fn is_closed(&self, elements: &[Element]) -> bool {
        let mut member = vec![false; self.order()];
        for &e in elements {
            member[e] = true;
        }
        member[0]
            && elements
                .iter()
                .all(|&x| elements.iter().all(|&y| member[self.op(x, y)]))
    }

    /// The subalgebra on `elements`, relabeled in increasing label order.
    ///
    /// Returns `None` when the set is not closed or does not contain 0.
    pub fn subalgebra(&self, elements: &[Element]) -> Option<BckAlgebra> {
        let mut elems: Vec<Element> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) || elems.iter().any(|&e| e >= self.order()) || !self.is_closed(&elems) {
            return None;
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            index[e] = i;
        }
        let table = CayleyTable::from_fn(elems.len(), |i, j| index[self.op(elems[i], elems[j])])
            .expect("closed subset yields in-range entries");
        validate(table).ok()
    }

    /// Relabels by a permutation fixing 0 (source label to target label).
    pub fn relabel(&self, perm: &[Element]) -> BckAlgebra {
        assert_eq!(perm.first(), Some(&0), "relabeling must fix 0");
        BckAlgebra::from_trusted(self.table.relabel(perm))
    }
}

/// The three small algebras used as building blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardAlgebras {
    pub two: BckAlgebra,
    pub pi: BckAlgebra,
    pub tc: BckAlgebra,
}

pub fn standard_algebras() -> StandardAlgebras {
    StandardAlgebras {
        two: two(),
        pi: pi(),
        tc: tc(),
    }
}

fn fixed(rows: &[[Element; 3]]) -> BckAlgebra {
    validate_rows(rows).expect("built-in table is a BCK-algebra")
}

/// The unique two-element algebra `2`.
pub fn two() -> BckAlgebra {
    validate_rows(&[[0, 0], [1, 0]]).expect("built-in table is a BCK-algebra")
}

/// The positive implicative chain `PI`.
pub fn pi() -> BckAlgebra {
    fixed(&[[0, 0, 0], [1, 0, 0], [2, 2, 0]])
}

/// The commutative chain `TC`.
pub fn tc() -> BckAlgebra {
    fixed(&[[0, 0, 0], [1, 0, 0], [2, 1, 0]])
}
