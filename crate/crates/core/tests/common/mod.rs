//! Test-only reference implementations, kept independent of the library's
//! search, validation and isomorphism code.

#![allow(dead_code)]

use bck_core::{enumerate, BckAlgebra};

/// Plain axiom check over a row-major table.
pub fn naive_is_bck(n: usize, t: &[usize]) -> bool {
    let op = |x: usize, y: usize| t[x * n + y];
    for x in 0..n {
        if op(x, x) != 0 || op(0, x) != 0 || op(x, 0) != x {
            return false;
        }
        for y in 0..n {
            if x != y && op(x, y) == 0 && op(y, x) == 0 {
                return false;
            }
            if op(op(x, op(x, y)), y) != 0 {
                return false;
            }
            for z in 0..n {
                if op(op(op(x, y), op(x, z)), op(z, y)) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Every permutation of `0..n` fixing 0.
pub fn relabelings(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![0], n, &mut out);
    out
}

fn relabel(n: usize, t: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
        }
    }
    out
}

pub fn naive_isomorphic(n: usize, a: &[usize], b: &[usize], perms: &[Vec<usize>]) -> bool {
    perms.iter().any(|p| relabel(n, a, p) == b)
}

/// Isomorphism classes of order `n` found by filtering every table and
/// grouping by exhaustive permutation search. Returns one member per class.
///
/// Row 0, column 0 and the diagonal are fixed to the values `0·x = 0`,
/// `x·0 = x`, `x·x = 0` force; any table differing there fails the filter,
/// so skipping those tables leaves the result unchanged.
pub fn naive_classes(n: usize) -> Vec<Vec<usize>> {
    let perms = relabelings(n);
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut t = vec![0usize; n * n];
    for x in 0..n {
        t[x * n] = x;
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let total = (n as u64).pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &free {
            t[x * n + y] = (c % n as u64) as usize;
            c /= n as u64;
        }
        if naive_is_bck(n, &t) && !classes.iter().any(|r| naive_isomorphic(n, &t, r, &perms)) {
            classes.push(t.clone());
        }
    }
    classes
}

/// Commuting pair count straight from the definition.
pub fn naive_pair_count(a: &BckAlgebra) -> u64 {
    let n = a.order();
    let meet = |x: usize, y: usize| a.op(y, a.op(y, x));
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| meet(x, y) == meet(y, x))
        .count() as u64
}

/// All classes of orders `lo..=hi`.
pub fn corpus(lo: usize, hi: usize) -> Vec<BckAlgebra> {
    (lo..=hi).flat_map(|n| enumerate(n).unwrap()).collect()
}
