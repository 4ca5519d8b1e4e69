//! Exact non-negative rationals in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("expected a fraction of the form P/Q, got {0:?}")]
    Syntax(String),
    #[error("arithmetic overflow")]
    Overflow,
}

/// A reduced fraction `numer / denom` with `denom > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    numer: u64,
    denom: u64,
}

impl Ratio {
    pub const ONE: Ratio = Ratio { numer: 1, denom: 1 };

    pub fn new(numer: u64, denom: u64) -> Result<Self, RatioError> {
        if denom == 0 {
            return Err(RatioError::ZeroDenominator);
        }
        let g = numer.gcd(&denom);
        Ok(Ratio {
            numer: numer / g,
            denom: denom / g,
        })
    }

    /// `count / n²`, the shape every commuting degree takes.
    pub fn over_square(count: u64, n: u64) -> Result<Self, RatioError> {
        let sq = n.checked_mul(n).ok_or(RatioError::Overflow)?;
        Ratio::new(count, sq)
    }

    #[inline]
    pub fn numer(self) -> u64 {
        self.numer
    }

    #[inline]
    pub fn denom(self) -> u64 {
        self.denom
    }

    pub fn is_one(self) -> bool {
        self.numer == self.denom
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numer as u128 * other.denom as u128;
        let rhs = other.numer as u128 * self.denom as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Ratio {
    type Err = RatioError;

    /// Accepts `P/Q` or a bare integer `P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || RatioError::Syntax(s.to_string());
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: u64 = p.parse().map_err(|_| syntax())?;
        let q: u64 = q.parse().map_err(|_| syntax())?;
        Ratio::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces() {
        let r = Ratio::new(10, 16).unwrap();
        assert_eq!((r.numer(), r.denom()), (5, 8));
        assert_eq!(Ratio::new(0, 7).unwrap(), Ratio::new(0, 1).unwrap());
        assert_eq!(Ratio::new(4, 4).unwrap(), Ratio::ONE);
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(Ratio::new(1, 0), Err(RatioError::ZeroDenominator));
        assert!("3/0".parse::<Ratio>().is_err());
    }

    #[test]
    fn parse_and_display() {
        let r: Ratio = " 4 / 10 ".parse().unwrap();
        assert_eq!(r.to_string(), "2/5");
        assert_eq!("3".parse::<Ratio>().unwrap().to_string(), "3/1");
        assert!("2/x".parse::<Ratio>().is_err());
        assert!("-1/2".parse::<Ratio>().is_err());
    }

    #[test]
    fn over_square_overflow() {
        assert_eq!(Ratio::over_square(1, u64::MAX), Err(RatioError::Overflow));
        assert_eq!(Ratio::over_square(23, 5).unwrap().to_string(), "23/25");
    }

    proptest! {
        #[test]
        fn always_lowest_terms(p in 0u64..1_000_000, q in 1u64..1_000_000) {
            let r = Ratio::new(p, q).unwrap();
            prop_assert_eq!(r.numer().gcd(&r.denom()), 1);
            prop_assert_eq!(r.numer() as u128 * q as u128, p as u128 * r.denom() as u128);
        }

        #[test]
        fn ordering_matches_cross_multiplication(a in 0u64..1000, b in 1u64..1000, c in 0u64..1000, d in 1u64..1000) {
            let x = Ratio::new(a, b).unwrap();
            let y = Ratio::new(c, d).unwrap();
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
        }
    }
}
