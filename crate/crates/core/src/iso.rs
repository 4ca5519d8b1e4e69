//! Isomorphism of finite BCK-algebras.
//!
//! Every isomorphism fixes 0, so relabelings range over permutations of
//! `1..n`. The canonical form is the lexicographically least row-major table
//! among all of them; witness search prunes on per-element invariants.

use std::cmp::Ordering;

use crate::algebra::BckAlgebra;
use crate::table::{CayleyTable, Element};

/// A permutation mapping source labels to target labels, fixing 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub perm: Vec<Element>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> Self {
        IsoWitness { perm: (0..n).collect() }
    }

    /// Whether relabeling `source` by this permutation yields `target` exactly.
    pub fn verify(&self, source: &BckAlgebra, target: &BckAlgebra) -> bool {
        let n = source.order();
        if target.order() != n || self.perm.len() != n || self.perm[0] != 0 {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in &self.perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        (0..n).all(|x| (0..n).all(|y| target.op(self.perm[x], self.perm[y]) == self.perm[source.op(x, y)]))
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { perm: inv }
    }
}

/// The lexicographically least relabeling of a table; equal iff isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(CayleyTable);

impl CanonicalForm {
    pub fn table(&self) -> &CayleyTable {
        &self.0
    }

    pub fn into_table(self) -> CayleyTable {
        self.0
    }

    /// The canonical table as an algebra (it is a relabeling of a valid one).
    pub fn to_algebra(&self) -> BckAlgebra {
        BckAlgebra::from_trusted(self.0.clone())
    }
}

pub fn canonical_form(a: &BckAlgebra) -> CanonicalForm {
    canonical_labeling(a).0
}

/// The canonical form together with a relabeling (source to canonical) producing it.
pub fn canonical_labeling(a: &BckAlgebra) -> (CanonicalForm, Vec<Element>) {
    let n = a.order();
    let mut search = CanonSearch {
        a,
        n,
        preimage: vec![0; n],
        image: vec![usize::MAX; n],
        best: None,
        best_perm: Vec::new(),
        scratch: vec![0; n * n],
    };
    search.image[0] = 0;
    search.descend(1);
    let best = search.best.expect("at least one relabeling");
    let table = CayleyTable::from_flat(n, best).expect("relabeled table is in range");
    (CanonicalForm(table), search.best_perm)
}

struct CanonSearch<'a> {
    a: &'a BckAlgebra,
    n: usize,
    /// `preimage[label]`: source element placed at canonical label.
    preimage: Vec<Element>,
    /// `image[source]`: canonical label, or `usize::MAX` while unassigned.
    image: Vec<Element>,
    best: Option<Vec<Element>>,
    best_perm: Vec<Element>,
    scratch: Vec<Element>,
}

impl CanonSearch<'_> {
    /// Compares the partially known row 1 against the best table so far.
    ///
    /// With labels `0..assigned` placed, entry `(1, j)` for `j < assigned` is
    /// either known or known to be at least `assigned`.
    fn prefix_cmp(&self, assigned: usize) -> Ordering {
        let Some(best) = &self.best else {
            return Ordering::Less;
        };
        let n = self.n;
        let row = self.preimage[1];
        for j in 0..assigned {
            let v = self.image[self.a.op(row, self.preimage[j])];
            let b = best[n + j];
            if v == usize::MAX {
                return if assigned > b { Ordering::Greater } else { Ordering::Equal };
            }
            match v.cmp(&b) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn descend(&mut self, label: usize) {
        let n = self.n;
        if label == n {
            self.complete();
            return;
        }
        for src in 1..n {
            if self.image[src] != usize::MAX {
                continue;
            }
            self.preimage[label] = src;
            self.image[src] = label;
            if label < 2 || self.prefix_cmp(label + 1) != Ordering::Greater {
                self.descend(label + 1);
            }
            self.image[src] = usize::MAX;
        }
    }

    fn complete(&mut self) {
        let n = self.n;
        let mut ord = if self.best.is_none() { Ordering::Less } else { Ordering::Equal };
        for i in 0..n {
            for j in 0..n {
                let v = self.image[self.a.op(self.preimage[i], self.preimage[j])];
                if ord == Ordering::Equal {
                    ord = v.cmp(&self.best.as_ref().expect("set")[i * n + j]);
                    if ord == Ordering::Greater {
                        return;
                    }
                }
                self.scratch[i * n + j] = v;
            }
        }
        if ord == Ordering::Less {
            self.best = Some(self.scratch.clone());
            self.best_perm = self.image.clone();
        }
    }
}

/// Relabeling-invariant data about one element, used to restrict candidate images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSignature {
    pub rank: usize,
    /// Elements above it (zeros in its row).
    pub up: usize,
    /// Elements below it (zeros in its column).
    pub down: usize,
    /// Elements it commutes with.
    pub commuting: usize,
    /// Elements `y` with `x·y = x`.
    pub fixed_by: usize,
}

pub fn signatures(a: &BckAlgebra) -> Vec<ElementSignature> {
    let n = a.order();
    let ranks = a.ranks();
    (0..n)
        .map(|x| ElementSignature {
            rank: ranks[x],
            up: (0..n).filter(|&y| a.leq(x, y)).count(),
            down: (0..n).filter(|&y| a.leq(y, x)).count(),
            commuting: (0..n).filter(|&y| a.commutes(x, y)).count(),
            fixed_by: (0..n).filter(|&y| a.op(x, y) == x).count(),
        })
        .collect()
}

/// Finds an isomorphism `a → b`, or `None` if there is none.
pub fn is_isomorphic(a: &BckAlgebra, b: &BckAlgebra) -> Option<IsoWitness> {
    let n = a.order();
    if b.order() != n || a.commuting_degree() != b.commuting_degree() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut search = IsoSearch {
        a,
        b,
        candidates: (0..n)
            .map(|x| (1..n).filter(|&y| sig_a[x] == sig_b[y]).collect())
            .collect(),
        forward: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search.forward[0] = 0;
    search.used[0] = true;
    if search.extend(1) {
        Some(IsoWitness { perm: search.forward })
    } else {
        None
    }
}

struct IsoSearch<'a> {
    a: &'a BckAlgebra,
    b: &'a BckAlgebra,
    candidates: Vec<Vec<Element>>,
    forward: Vec<Element>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    /// Checks every product involving `x` and already-mapped elements.
    fn consistent(&self, x: Element) -> bool {
        let n = self.a.order();
        for y in 0..n {
            let fy = self.forward[y];
            if fy == usize::MAX {
                continue;
            }
            let fx = self.forward[x];
            for (p, q, fp, fq) in [(x, y, fx, fy), (y, x, fy, fx)] {
                let image = self.b.op(fp, fq);
                match self.forward[self.a.op(p, q)] {
                    usize::MAX => {
                        if self.used[image] {
                            return false;
                        }
                    }
                    expected => {
                        if expected != image {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, x: Element) -> bool {
        let n = self.a.order();
        if x == n {
            // Products that were unmapped when checked are only settled here.
            return IsoWitness { perm: self.forward.clone() }.verify(self.a, self.b);
        }
        for idx in 0..self.candidates[x].len() {
            let y = self.candidates[x][idx];
            if self.used[y] {
                continue;
            }
            self.forward[x] = y;
            self.used[y] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.used[y] = false;
            self.forward[x] = usize::MAX;
        }
        false
    }
}
