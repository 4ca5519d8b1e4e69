//! Enumeration of all BCK-algebras of a given order up to isomorphism, and
//! the classification queries built on it.
//!
//! The search fills a Cayley table cell by cell. Row 0, column 0 and the
//! diagonal are forced (`0·x = 0`, `x·0 = x`, `x·x = 0`). Every isomorphism
//! class has a labeling in which the induced order refines the index order
//! (a linear extension of the poset), so the search only produces such
//! labelings: `x·y = 0` is allowed only for `x < y`, and `x·y ≤ x` restricts
//! values to `0..=x`. An axiom instance is checked as soon as every entry it
//! reads is set. Each complete table is reduced to its canonical form and
//! duplicates are dropped.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::BckAlgebra;
use crate::commuting::CommutingReport;
use crate::construct::m_chain;
use crate::iso::{canonical_form, is_isomorphic, CanonicalForm, IsoWitness};
use crate::ratio::Ratio;
use crate::table::{CayleyTable, Element};

/// Largest order whose enumeration has been run and checked.
pub const VALIDATED_MAX_ORDER: usize = 6;

/// Hard ceiling; cells are stored as `u8` and larger orders are far out of reach.
pub const ABSOLUTE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error(
        "order {order} exceeds the enumeration budget of {max_order}; raise the budget \
         (BCK_MAX_ENUM_ORDER or --max-order) to proceed, noting that runtime above order \
         {VALIDATED_MAX_ORDER} is unvalidated"
    )]
    BudgetExceeded { order: usize, max_order: usize },
    #[error("order {0} is beyond the supported maximum of {ABSOLUTE_MAX_ORDER}")]
    Unsupported(usize),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_order: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_order: VALIDATED_MAX_ORDER,
            workers: None,
        }
    }
}

impl EnumerationConfig {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    /// Whether `n` is allowed but beyond the validated range.
    pub fn is_unvalidated(&self, n: usize) -> bool {
        n > VALIDATED_MAX_ORDER && n <= self.max_order
    }
}

const UNSET: u8 = u8::MAX;

#[derive(Clone)]
struct Search {
    n: usize,
    cells: Vec<u8>,
    free: Vec<(usize, usize)>,
}

impl Search {
    fn new(n: usize) -> Self {
        let mut cells = vec![UNSET; n * n];
        let mut free = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let forced = if x == 0 || x == y {
                    Some(0)
                } else if y == 0 {
                    Some(x as u8)
                } else {
                    None
                };
                match forced {
                    Some(v) => cells[x * n + y] = v,
                    None => free.push((x, y)),
                }
            }
        }
        Search { n, cells, free }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> u8 {
        self.cells[x * self.n + y]
    }

    /// `a·b` if both arguments and the entry are known.
    #[inline]
    fn op(&self, a: u8, b: u8) -> u8 {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            self.get(a as usize, b as usize)
        }
    }

    /// Values `x·y` may take in a linear-extension labeling.
    fn domain(&self, x: usize, y: usize) -> std::ops::RangeInclusive<u8> {
        let lo = if y < x { 1 } else { 0 };
        lo..=x as u8
    }

    /// Checks every fully determined instance of BCK1, BCK2 and BCK5, plus
    /// `(x·y)·x = 0`.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        let v = self.get(x, y);
        let w = self.get(y, x);
        if v == 0 && w == 0 {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                // (a·b)·a = 0
                let r = self.op(ab, a as u8);
                if r != UNSET && r != 0 {
                    return false;
                }
                // BCK2: (a·(a·b))·b = 0
                let r = self.op(self.op(a as u8, ab), b as u8);
                if r != UNSET && r != 0 {
                    return false;
                }
                // BCK1: ((a·b)·(a·c))·(c·b) = 0
                for c in 0..n {
                    let ac = self.get(a, c);
                    let cb = self.get(c, b);
                    if ac == UNSET || cb == UNSET {
                        continue;
                    }
                    let r = self.op(self.op(ab, ac), cb);
                    if r != UNSET && r != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn to_algebra(&self) -> BckAlgebra {
        let entries = self.cells.iter().map(|&c| c as Element).collect();
        let table = CayleyTable::from_flat(self.n, entries).expect("complete table");
        BckAlgebra::from_trusted(table)
    }

    /// Depth-first completion from free cell `depth`, feeding each full table to `emit`.
    fn run(&mut self, depth: usize, emit: &mut dyn FnMut(&Search)) {
        if depth == self.free.len() {
            emit(self);
            return;
        }
        let (x, y) = self.free[depth];
        for v in self.domain(x, y) {
            self.cells[x * self.n + y] = v;
            if self.consistent(x, y) {
                self.run(depth + 1, emit);
            }
        }
        self.cells[x * self.n + y] = UNSET;
    }

    /// Partial tables with the first unforced row filled, as independent subtrees.
    fn split(mut self) -> Vec<(Search, usize)> {
        let n = self.n;
        let row_cells = self.free.iter().take_while(|&&(x, _)| x == 1).count();
        debug_assert_eq!(row_cells, n.saturating_sub(2));
        let mut out = Vec::new();
        self.run_prefix(0, row_cells, &mut out);
        out
    }

    fn run_prefix(&mut self, depth: usize, stop: usize, out: &mut Vec<(Search, usize)>) {
        if depth == stop {
            out.push((self.clone(), depth));
            return;
        }
        let (x, y) = self.free[depth];
        for v in self.domain(x, y) {
            self.cells[x * self.n + y] = v;
            if self.consistent(x, y) {
                self.run_prefix(depth + 1, stop, out);
            }
        }
        self.cells[x * self.n + y] = UNSET;
    }
}

fn search_classes(n: usize) -> Vec<CanonicalForm> {
    let subtrees = Search::new(n).split();
    let found: Vec<HashSet<CanonicalForm>> = subtrees
        .into_par_iter()
        .map(|(mut search, depth)| {
            let mut seen = HashSet::new();
            search.run(depth, &mut |s| {
                seen.insert(canonical_form(&s.to_algebra()));
            });
            seen
        })
        .collect();
    let merged: HashSet<CanonicalForm> = found.into_iter().flatten().collect();
    let mut classes: Vec<CanonicalForm> = merged.into_iter().collect();
    classes.sort();
    classes
}

/// One representative per isomorphism class, in canonical order, with the
/// default budget.
pub fn enumerate(n: usize) -> Result<Vec<BckAlgebra>, EnumerationError> {
    enumerate_with(n, &EnumerationConfig::default())
}

pub fn enumerate_with(n: usize, config: &EnumerationConfig) -> Result<Vec<BckAlgebra>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroOrder);
    }
    if n > ABSOLUTE_MAX_ORDER {
        return Err(EnumerationError::Unsupported(n));
    }
    if n > config.max_order {
        return Err(EnumerationError::BudgetExceeded {
            order: n,
            max_order: config.max_order,
        });
    }
    if n == 1 {
        return Ok(vec![BckAlgebra::trivial()]);
    }
    let classes = match config.workers {
        None => search_classes(n),
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .map_err(|e| EnumerationError::Pool(e.to_string()))?
            .install(|| search_classes(n)),
    };
    Ok(classes.iter().map(CanonicalForm::to_algebra).collect())
}

/// An enumerated class with its properties precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub algebra: BckAlgebra,
    pub report: CommutingReport,
    pub commutative: bool,
    pub bounded: bool,
    pub positive_implicative: bool,
}

impl ClassEntry {
    pub fn new(algebra: BckAlgebra) -> Self {
        let report = algebra.commuting_degree();
        ClassEntry {
            commutative: report.is_commutative(),
            bounded: algebra.is_bounded(),
            positive_implicative: algebra.is_positive_implicative(),
            report,
            algebra,
        }
    }
}

/// All isomorphism classes of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub order: usize,
    pub classes: Vec<ClassEntry>,
}

impl Catalog {
    pub fn build(n: usize, config: &EnumerationConfig) -> Result<Self, EnumerationError> {
        let classes = enumerate_with(n, config)?.into_iter().map(ClassEntry::new).collect();
        Ok(Catalog { order: n, classes })
    }

    pub fn non_commutative(&self) -> impl Iterator<Item = &ClassEntry> {
        self.classes.iter().filter(|c| !c.commutative)
    }

    pub fn census(&self) -> DegreeCensus {
        let mut counts = BTreeMap::new();
        for c in &self.classes {
            *counts.entry(c.report.pair_count).or_insert(0) += 1;
        }
        DegreeCensus { order: self.order, counts }
    }

    /// Checks that exactly one class attains `(3n−2)/n²` and that it is `M_n`.
    pub fn verify_unique_minimum(&self) -> Result<MinimumReport, MinimumError> {
        let n = self.order;
        let chain = m_chain(n).map_err(|_| MinimumError::OrderTooSmall(n))?;
        let minimum = CommutingReport::from_count(n, 3 * n as u64 - 2);
        let at_min: Vec<&ClassEntry> = self
            .classes
            .iter()
            .filter(|c| c.report.pair_count == minimum.pair_count)
            .collect();
        let [only] = at_min.as_slice() else {
            return Err(MinimumError::NotUnique { order: n, count: at_min.len() });
        };
        let witness = is_isomorphic(&only.algebra, &chain).ok_or(MinimumError::NotChain(n))?;
        Ok(MinimumReport {
            order: n,
            minimum,
            representative: only.algebra.clone(),
            witness,
        })
    }
}

/// Number of classes at each commuting degree, keyed by unreduced numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCensus {
    pub order: usize,
    pub counts: BTreeMap<u64, usize>,
}

impl DegreeCensus {
    pub fn get(&self, degree: Ratio) -> usize {
        let sq = (self.order * self.order) as u64;
        if !sq.is_multiple_of(degree.denom()) {
            return 0;
        }
        let k = degree.numer() * (sq / degree.denom());
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (CommutingReport, usize)> + '_ {
        self.counts
            .iter()
            .map(|(&k, &count)| (CommutingReport::from_count(self.order, k), count))
    }
}

pub fn degree_census(n: usize) -> Result<DegreeCensus, EnumerationError> {
    Ok(Catalog::build(n, &EnumerationConfig::default())?.census())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumReport {
    pub order: usize,
    pub minimum: CommutingReport,
    pub representative: BckAlgebra,
    /// Isomorphism from `representative` onto `m_chain(order)`.
    pub witness: IsoWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimumError {
    #[error("the minimum-degree chain needs order at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("expected exactly one class of order {order} at the minimum degree, found {count}")]
    NotUnique { order: usize, count: usize },
    #[error("the minimum-degree class of order {0} is not isomorphic to the chain M_n")]
    NotChain(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

pub fn verify_unique_minimum(n: usize) -> Result<MinimumReport, MinimumError> {
    Catalog::build(n, &EnumerationConfig::default())?.verify_unique_minimum()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgebraError {
    #[error("the trivial algebra has no proper subalgebra of order n-1 containing 0")]
    Trivial,
    #[error("no subalgebra of order {0} obtained by removing one element; every finite BCK-algebra should have one")]
    NotFound(usize),
}

/// A subalgebra of order `n−1`, as the sorted element set, found by trying
/// each nonzero element for removal from the highest label down.
pub fn find_maximal_subalgebra(a: &BckAlgebra) -> Result<Vec<Element>, SubalgebraError> {
    let n = a.order();
    if n < 2 {
        return Err(SubalgebraError::Trivial);
    }
    for removed in (1..n).rev() {
        let elements: Vec<Element> = (0..n).filter(|&e| e != removed).collect();
        if a.subalgebra(&elements).is_some() {
            return Ok(elements);
        }
    }
    Err(SubalgebraError::NotFound(n - 1))
}
