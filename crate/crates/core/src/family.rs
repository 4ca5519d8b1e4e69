//! Realizing every non-commutative commuting degree.
//!
//! The achievable degrees of non-commutative algebras of order `n` are
//! `(3n−2)/n², 3n/n², …, (n²−2)/n²`, which is `T(n−2)` values. Level `n` of
//! the family below holds one algebra per value, in increasing order. Level 4
//! is `[PI⊕⊤, TC⊕⊤, PI⊔2]`, and level `m+1` is built from level `m`
//! (`t = T(m−2)` entries) by extending every entry with a top, then taking the
//! union with 2 of the last `m−1` entries.

use thiserror::Error;

use crate::algebra::{tc, BckAlgebra};
use crate::commuting::CommutingReport;
use crate::expr::{Base, ConstructionExpr, Step};
use crate::ratio::Ratio;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("order {0} is below 3; non-commutative algebras start at order 3")]
    OrderTooSmall(usize),
    #[error("index {index} is outside 1..={len} for order {order}")]
    IndexOutOfRange { order: usize, index: usize, len: usize },
    #[error("target {p}/{q} must satisfy 0 < p <= q")]
    InvalidTarget { p: u64, q: u64 },
    #[error("arithmetic overflow while placing {p}/{q}")]
    Overflow { p: u64, q: u64 },
}

/// The triangular number `m(m+1)/2`.
pub fn triangular(m: usize) -> usize {
    m * (m + 1) / 2
}

/// Number of achievable non-commutative degrees at order `n`: `T(n−2)`.
pub fn level_len(n: usize) -> usize {
    triangular(n.saturating_sub(2))
}

/// The achievable non-commutative degrees at order `n`, increasing.
///
/// Entry `j` (1-based) has unreduced numerator `3n−2+2(j−1)`.
pub fn cd_set(n: usize) -> Result<Vec<CommutingReport>, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall(n));
    }
    let lo = 3 * n as u64 - 2;
    Ok((0..level_len(n) as u64)
        .map(|j| CommutingReport::from_count(n, lo + 2 * j))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub expr: ConstructionExpr,
    pub algebra: BckAlgebra,
    pub report: CommutingReport,
}

impl FamilyEntry {
    fn from_expr(expr: ConstructionExpr, algebra: BckAlgebra) -> Self {
        let report = algebra.commuting_degree();
        FamilyEntry { expr, algebra, report }
    }
}

/// One level of the family: `T(n−2)` algebras of order `n` in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLevel {
    pub order: usize,
    pub entries: Vec<FamilyEntry>,
}

fn base_level(n: usize) -> Vec<ConstructionExpr> {
    use Step::*;
    let e = |base, steps: &[Step]| ConstructionExpr {
        base,
        steps: steps.to_vec(),
    };
    match n {
        3 => vec![e(Base::Pi, &[])],
        4 => vec![e(Base::Pi, &[ExtendTop]), e(Base::Tc, &[ExtendTop]), e(Base::Pi, &[UnionTwo])],
        _ => unreachable!("base levels are 3 and 4"),
    }
}

/// Materializes level `n` of the family, computing each degree directly.
pub fn family(n: usize) -> Result<FamilyLevel, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall(n));
    }
    let start = n.min(4);
    let mut entries: Vec<FamilyEntry> = base_level(start)
        .into_iter()
        .map(|expr| {
            let algebra = expr.eval();
            FamilyEntry::from_expr(expr, algebra)
        })
        .collect();
    for m in start..n {
        let t = entries.len();
        debug_assert_eq!(t, level_len(m));
        let extended = entries
            .iter()
            .map(|e| FamilyEntry::from_expr(e.expr.then(Step::ExtendTop), Step::ExtendTop.apply(&e.algebra)));
        let unions = entries[t - (m - 1)..]
            .iter()
            .map(|e| FamilyEntry::from_expr(e.expr.then(Step::UnionTwo), Step::UnionTwo.apply(&e.algebra)));
        entries = extended.chain(unions).collect();
    }
    Ok(FamilyLevel { order: n, entries })
}

/// The expression of entry `index` (1-based) of level `n`, found by walking
/// the schedule backwards instead of materializing the level.
pub fn trace_family_index(n: usize, index: usize) -> Result<ConstructionExpr, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall(n));
    }
    let len = level_len(n);
    if index == 0 || index > len {
        return Err(FamilyError::IndexOutOfRange { order: n, index, len });
    }
    let mut steps = Vec::new();
    let mut i = index;
    let mut level = n;
    while level > 4 {
        let m = level - 1;
        let t = level_len(m);
        if i <= t {
            steps.push(Step::ExtendTop);
        } else {
            steps.push(Step::UnionTwo);
            i = t - (m - 1) + (i - t);
        }
        level = m;
    }
    let mut expr = base_level(level.min(4)).swap_remove(i - 1);
    expr.steps.extend(steps.into_iter().rev());
    Ok(expr)
}

/// Where a target degree sits in the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub order: usize,
    /// Half the deficit: the degree is `(n² − 2k)/n²`.
    pub k: u64,
    /// 1-based index in level `order`.
    pub index: usize,
    /// `order` is a multiple of `2q` larger than `2q`.
    pub escalated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisPlan {
    pub target: Ratio,
    pub expr: ConstructionExpr,
    /// `None` for the commutative target 1, which TC realizes.
    pub placement: Option<Placement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synthesis {
    pub plan: SynthesisPlan,
    pub algebra: BckAlgebra,
    pub report: CommutingReport,
}

/// Chooses an order and family index realizing `p/q` without building anything.
///
/// For `p < q` (reduced) the order is the least `n ∈ {2q, 4q, 6q, …}` with
/// `k = n²(q−p)/(2q)` in `1..=T(n−2)`. `n = 2q` works unless `p = 1`, where
/// `n = 4q` does.
pub fn plan_synthesis(p: u64, q: u64) -> Result<SynthesisPlan, FamilyError> {
    if p == 0 || q == 0 || p > q {
        return Err(FamilyError::InvalidTarget { p, q });
    }
    let target = Ratio::new(p, q).expect("q > 0");
    if target.is_one() {
        return Ok(SynthesisPlan {
            target,
            expr: ConstructionExpr::leaf(Base::Tc),
            placement: None,
        });
    }
    let (p, q) = (target.numer(), target.denom());
    let overflow = || FamilyError::Overflow { p, q };
    for multiple in 1u64.. {
        let n = multiple
            .checked_mul(2)
            .and_then(|v| v.checked_mul(q))
            .ok_or_else(overflow)?;
        // k = n²(q−p)/(2q) = 2·multiple²·q·(q−p)
        let k = [2, multiple, multiple, q, q - p]
            .into_iter()
            .try_fold(1u64, |acc, f| acc.checked_mul(f))
            .ok_or_else(overflow)?;
        let n_usize = usize::try_from(n).map_err(|_| overflow())?;
        let len = (n - 2).checked_mul(n - 1).ok_or_else(overflow)? / 2;
        if (1..=len).contains(&k) {
            let index = usize::try_from(len - k + 1).map_err(|_| overflow())?;
            let expr = trace_family_index(n_usize, index)?;
            return Ok(SynthesisPlan {
                target,
                expr,
                placement: Some(Placement {
                    order: n_usize,
                    k,
                    index,
                    escalated: multiple > 1,
                }),
            });
        }
        debug_assert!(multiple < 2, "n = 4q always places a reduced p/q < 1");
    }
    unreachable!()
}

/// Builds an algebra whose commuting degree is exactly `p/q`.
pub fn synthesize(p: u64, q: u64) -> Result<Synthesis, FamilyError> {
    let plan = plan_synthesis(p, q)?;
    let algebra = match plan.placement {
        None => tc(),
        Some(_) => plan.expr.eval(),
    };
    let report = algebra.commuting_degree();
    Ok(Synthesis { plan, algebra, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerators(n: usize) -> Vec<u64> {
        family(n).unwrap().entries.iter().map(|e| e.report.pair_count).collect()
    }

    #[test]
    fn cd_set_small() {
        let s: Vec<String> = cd_set(3).unwrap().iter().map(|r| r.degree.to_string()).collect();
        assert_eq!(s, vec!["7/9"]);
        let raw: Vec<u64> = cd_set(4).unwrap().iter().map(|r| r.pair_count).collect();
        assert_eq!(raw, vec![10, 12, 14]);
        for n in 3..=20 {
            assert_eq!(cd_set(n).unwrap().len(), (n - 2) * (n - 1) / 2);
        }
        assert!(cd_set(2).is_err());
    }

    #[test]
    fn level_four() {
        let level = family(4).unwrap();
        let exprs: Vec<String> = level.entries.iter().map(|e| e.expr.to_unicode()).collect();
        assert_eq!(exprs, vec!["PI⊕⊤", "TC⊕⊤", "PI⊔2"]);
        assert_eq!(numerators(4), vec![10, 12, 14]);
    }

    #[test]
    fn level_five() {
        let exprs: Vec<String> = family(5).unwrap().entries.iter().map(|e| e.expr.to_unicode()).collect();
        assert_eq!(
            exprs,
            vec!["(PI⊕⊤)⊕⊤", "(TC⊕⊤)⊕⊤", "(PI⊔2)⊕⊤", "(PI⊕⊤)⊔2", "(TC⊕⊤)⊔2", "(PI⊔2)⊔2"]
        );
        assert_eq!(numerators(5), vec![13, 15, 17, 19, 21, 23]);
    }

    #[test]
    fn level_six_unions_come_from_level_five_tail() {
        let five = family(5).unwrap();
        let six = family(6).unwrap();
        for (j, entry) in six.entries[6..].iter().enumerate() {
            assert_eq!(entry.expr, five.entries[2 + j].expr.then(Step::UnionTwo));
        }
    }

    #[test]
    fn level_seven_numerators() {
        assert_eq!(numerators(7), (19..=47).step_by(2).collect::<Vec<u64>>());
    }

    #[test]
    fn family_rejects_small_orders() {
        assert_eq!(family(2), Err(FamilyError::OrderTooSmall(2)));
        assert_eq!(numerators(3), vec![7]);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_family_index(4, 3).unwrap().to_unicode(), "PI⊔2");
        assert_eq!(trace_family_index(3, 1).unwrap().to_string(), "PI");
        assert!(trace_family_index(4, 4).is_err());
        assert!(trace_family_index(4, 0).is_err());
    }

    #[test]
    fn synthesize_two_fifths() {
        let s = synthesize(2, 5).unwrap();
        let placement = s.plan.placement.unwrap();
        assert_eq!((placement.order, placement.k, placement.index), (10, 30, 7));
        assert!(!placement.escalated);
        assert_eq!(s.plan.expr.to_unicode(), "((((((PI⊔2)⊕⊤)⊔2)⊕⊤)⊕⊤)⊕⊤)⊕⊤");
        let trace: Vec<u64> = s.plan.expr.degree_trace().iter().map(|r| r.pair_count).collect();
        assert_eq!(trace, vec![7, 14, 17, 28, 31, 34, 37, 40]);
        assert_eq!(s.report.degree, Ratio::new(2, 5).unwrap());
    }

    #[test]
    fn synthesize_edge_cases() {
        let one = synthesize(1, 1).unwrap();
        assert_eq!(one.algebra, tc());
        assert!(one.plan.placement.is_none());
        assert_eq!(synthesize(3, 3).unwrap().algebra, tc());

        let half = synthesize(1, 2).unwrap();
        let placement = half.plan.placement.unwrap();
        assert_eq!((placement.order, placement.k), (8, 16));
        assert!(placement.escalated);
        assert_eq!(half.report.degree, Ratio::new(1, 2).unwrap());

        // 4/10 reduces to 2/5 before placement.
        assert_eq!(synthesize(4, 10).unwrap().plan.placement.unwrap().order, 10);

        for (p, q) in [(0, 3), (3, 0), (4, 3)] {
            assert_eq!(synthesize(p, q).unwrap_err(), FamilyError::InvalidTarget { p, q });
        }
        assert!(matches!(plan_synthesis(1, u64::MAX - 1), Err(FamilyError::Overflow { .. })));
    }
}
