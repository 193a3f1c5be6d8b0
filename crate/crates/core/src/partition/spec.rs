use std::fmt;

use num::Integer;

use crate::error::{Error, Result};

/// Largest period accepted unless a caller raises the cap explicitly.
pub const DEFAULT_PERIOD_CAP: u64 = 10080;

/// A tuple `a = (a_1, ..., a_r)` of positive integers together with a
/// chosen common multiple `D` (the period) and the derived constants
/// `σ = ∑ a_i` and `d = rD - σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleSpec {
    parts: Vec<u64>,
    period: u64,
    sigma: u64,
    top: u64,
}

impl TupleSpec {
    /// Tuple with period `lcm(a)`.
    pub fn new(parts: &[u64]) -> Result<Self> {
        Self::with_period(parts, None)
    }

    /// Tuple with an optional period override, which must be a common
    /// multiple of every entry.
    pub fn with_period(parts: &[u64], period: Option<u64>) -> Result<Self> {
        Self::with_cap(parts, period, DEFAULT_PERIOD_CAP)
    }

    pub fn with_cap(parts: &[u64], period: Option<u64>, cap: u64) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyTuple);
        }
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        let lcm = checked_lcm(parts).ok_or(Error::PeriodTooLarge { period: u64::MAX, cap })?;
        let period = match period {
            None => lcm,
            Some(p) if p == 0 || p % lcm != 0 => return Err(Error::NotCommonMultiple { period: p }),
            Some(p) => p,
        };
        if period > cap {
            return Err(Error::PeriodTooLarge { period, cap });
        }
        let sigma: u64 = parts.iter().sum();
        let top = parts.len() as u64 * period - sigma;
        Ok(TupleSpec {
            parts: parts.to_vec(),
            period,
            sigma,
            top,
        })
    }

    /// Same tuple, different period.
    pub fn with_new_period(&self, period: u64) -> Result<Self> {
        Self::with_period(&self.parts, Some(period))
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of entries `r`.
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// The period `D`.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// Degree `d = rD - σ` of the f-polynomial.
    pub fn top_degree(&self) -> u64 {
        self.top
    }

    pub fn lcm(&self) -> u64 {
        checked_lcm(&self.parts).expect("checked at construction")
    }

    pub fn gcd(&self) -> u64 {
        self.parts.iter().fold(0, |g, &a| g.gcd(&a))
    }

    pub fn product(&self) -> u128 {
        self.parts.iter().map(|&a| a as u128).product()
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, a)| self.parts[i + 1..].iter().all(|b| a.gcd(b) == 1))
    }

    /// Number of entries divisible by `j`.
    pub fn multiplicity(&self, j: u64) -> usize {
        self.parts.iter().filter(|&&a| a % j == 0).count()
    }

    /// Every `j` dividing at least one entry, ascending.
    pub fn wave_indices(&self) -> Vec<u64> {
        let lcm = self.lcm();
        (1..=lcm).filter(|j| lcm % j == 0 && self.multiplicity(*j) > 0).collect()
    }
}

fn checked_lcm(parts: &[u64]) -> Option<u64> {
    parts.iter().try_fold(1u64, |acc, &a| {
        let g = acc.gcd(&a);
        (acc / g).checked_mul(a)
    })
}

impl fmt::Display for TupleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({}) with D = {}", parts.join(","), self.period)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants() {
        let s = TupleSpec::new(&[1, 2]).unwrap();
        assert_eq!((s.r(), s.period(), s.sigma(), s.top_degree()), (2, 2, 3, 1));
        let s = TupleSpec::new(&[2, 3]).unwrap();
        assert_eq!((s.r(), s.period(), s.sigma(), s.top_degree()), (2, 6, 5, 7));
        let s = TupleSpec::with_period(&[2, 3], Some(12)).unwrap();
        assert_eq!((s.period(), s.top_degree()), (12, 19));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(TupleSpec::new(&[]), Err(Error::EmptyTuple));
        assert_eq!(TupleSpec::new(&[0, 2]), Err(Error::NonPositivePart(0)));
        assert_eq!(
            TupleSpec::with_period(&[2, 3], Some(9)),
            Err(Error::NotCommonMultiple { period: 9 })
        );
        assert!(matches!(
            TupleSpec::new(&[101, 103]),
            Err(Error::PeriodTooLarge { .. })
        ));
        assert!(TupleSpec::with_cap(&[101, 103], None, 20_000).is_ok());
    }

    #[test]
    fn divisibility_helpers() {
        let s = TupleSpec::new(&[1, 2, 3]).unwrap();
        assert_eq!(s.multiplicity(1), 3);
        assert_eq!(s.multiplicity(2), 1);
        assert_eq!(s.multiplicity(5), 0);
        assert_eq!(s.wave_indices(), vec![1, 2, 3]);
        assert!(TupleSpec::new(&[2, 3, 5]).unwrap().is_pairwise_coprime());
        assert!(!TupleSpec::new(&[4, 6, 10]).unwrap().is_pairwise_coprime());
        assert_eq!(TupleSpec::new(&[4, 6, 10]).unwrap().gcd(), 2);
    }
}
