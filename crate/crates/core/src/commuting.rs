//! Commuting pairs and the commuting degree `|C(A)| / |A|²`.

use crate::algebra::BckAlgebra;
use crate::ratio::Ratio;

/// Exact count of ordered commuting pairs together with the reduced degree.
///
/// `pair_count` is kept unreduced: the union and extension transfer formulas
/// are stated on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CommutingReport {
    pub order: usize,
    pub pair_count: u64,
    pub degree: Ratio,
}

impl CommutingReport {
    pub fn of(algebra: &BckAlgebra) -> Self {
        let n = algebra.order();
        let mut pairs = n as u64;
        for x in 0..n {
            for y in x + 1..n {
                if algebra.commutes(x, y) {
                    pairs += 2;
                }
            }
        }
        Self::from_count(n, pairs)
    }

    /// Report for `pair_count` commuting pairs in an algebra of order `order`.
    ///
    /// Panics if `order²` overflows `u64`.
    pub fn from_count(order: usize, pair_count: u64) -> Self {
        let degree = Ratio::over_square(pair_count, order as u64).expect("order² fits in u64");
        CommutingReport {
            order,
            pair_count,
            degree,
        }
    }

    /// `n²`, the unreduced denominator.
    pub fn square(&self) -> u64 {
        let n = self.order as u64;
        n * n
    }

    pub fn is_commutative(&self) -> bool {
        self.pair_count == self.square()
    }

    /// `k/n^2 = p/q`, unreduced then reduced.
    pub fn describe(&self) -> String {
        format!("{}/{} = {}", self.pair_count, self.square(), self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{pi, tc, two};

    #[test]
    fn standard_degrees() {
        let r = pi().commuting_degree();
        assert_eq!(r.pair_count, 7);
        assert_eq!(r.degree.to_string(), "7/9");
        let r = two().commuting_degree();
        assert_eq!((r.pair_count, r.degree), (4, Ratio::ONE));
        assert!(tc().commuting_degree().is_commutative());
        assert_eq!(tc().commuting_degree().describe(), "9/9 = 1/1");
    }

    #[test]
    fn trivial_algebra() {
        let r = BckAlgebra::trivial().commuting_degree();
        assert_eq!((r.pair_count, r.degree), (1, Ratio::ONE));
    }
}
