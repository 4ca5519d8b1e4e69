//! BCK-union, Iséki's extension, and the extremal families built from them.

use thiserror::Error;

use crate::algebra::{pi, two, BckAlgebra};
use crate::commuting::CommutingReport;
use crate::table::{CayleyTable, Element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("a BCK-union needs at least one component")]
    EmptyUnion,
    #[error("{family} is defined for n >= {min}, got {got}")]
    OrderTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

/// The BCK-union of `parts`, glued at their shared 0.
///
/// The first part keeps its labels; the nonzero elements of each later part
/// are appended in part order, preserving their relative order. Within a part
/// the operation is the part's own; across parts `x·y = x`.
pub fn union(parts: &[BckAlgebra]) -> Result<BckAlgebra, ConstructError> {
    let first = parts.first().ok_or(ConstructError::EmptyUnion)?;
    if parts.len() == 1 {
        return Ok(first.clone());
    }
    let order = 1 + parts.iter().map(|p| p.order() - 1).sum::<usize>();
    // (part index, local label) for each global label; 0 belongs to every part.
    let mut origin: Vec<(usize, Element)> = vec![(0, 0)];
    let mut offsets = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        offsets.push(origin.len() - 1);
        origin.extend((1..part.order()).map(|e| (i, e)));
    }
    let global = |part: usize, local: Element| if local == 0 { 0 } else { offsets[part] + local };
    let table = CayleyTable::from_fn(order, |x, y| {
        if x == 0 {
            return 0;
        }
        if y == 0 {
            return x;
        }
        let (px, lx) = origin[x];
        let (py, ly) = origin[y];
        if px == py {
            global(px, parts[px].op(lx, ly))
        } else {
            x
        }
    })
    .expect("union entries are in range");
    Ok(BckAlgebra::from_trusted(table))
}

/// Iséki's extension `A ⊕ ⊤`: a new top labeled `|A|` with `x·⊤ = 0` and `⊤·x = ⊤` for `x ≠ ⊤`.
pub fn extend_top(base: &BckAlgebra) -> BckAlgebra {
    let top = base.order();
    let table = CayleyTable::from_fn(top + 1, |x, y| match (x == top, y == top) {
        (false, false) => base.op(x, y),
        (_, true) => 0,
        (true, false) => top,
    })
    .expect("extension entries are in range");
    BckAlgebra::from_trusted(table)
}

/// Predicted report of `A ⊔ 2` from the report of `A`: `k ↦ k + 2n + 1`.
pub fn predict_union_two(report: &CommutingReport) -> CommutingReport {
    let n = report.order as u64;
    CommutingReport::from_count(report.order + 1, report.pair_count + 2 * n + 1)
}

/// Predicted report of `A ⊕ ⊤` from the report of `A`: `k ↦ k + 3`.
pub fn predict_extend_top(report: &CommutingReport) -> CommutingReport {
    CommutingReport::from_count(report.order + 1, report.pair_count + 3)
}

/// The chain `M_n`: `x·y = x` if `y < x`, else 0. Minimum commuting degree `(3n−2)/n²`.
pub fn m_chain(n: usize) -> Result<BckAlgebra, ConstructError> {
    if n < 2 {
        return Err(ConstructError::OrderTooSmall {
            family: "M_n",
            min: 2,
            got: n,
        });
    }
    let table = CayleyTable::from_fn(n, |x, y| if y < x { x } else { 0 }).expect("chain entries are in range");
    Ok(BckAlgebra::from_trusted(table))
}

/// `B_n = PI ⊔ 2 ⊔ … ⊔ 2`. Maximum non-commutative degree `(n²−2)/n²`.
pub fn b_star(n: usize) -> Result<BckAlgebra, ConstructError> {
    if n < 3 {
        return Err(ConstructError::OrderTooSmall {
            family: "B_n",
            min: 3,
            got: n,
        });
    }
    let mut parts = vec![pi()];
    parts.extend(std::iter::repeat_with(two).take(n - 3));
    union(&parts)
}
