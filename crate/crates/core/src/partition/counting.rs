use num::{BigInt, Integer, One, Zero};

use super::{FVector, TupleSpec};
use crate::exact::{binomial, factorial};

/// `p_a(n)` for `n = 0..=nmax` by the coin-change recurrence.
pub fn oracle_table(spec: &TupleSpec, nmax: u64) -> Vec<BigInt> {
    let mut ways = vec![BigInt::zero(); nmax as usize + 1];
    ways[0] = BigInt::one();
    for &a in spec.parts() {
        let a = a as usize;
        for n in a..ways.len() {
            let prev = ways[n - a].clone();
            ways[n] += prev;
        }
    }
    ways
}

/// Number of non-negative solutions of `a_1 x_1 + ... + a_r x_r = n`,
/// counted directly.
pub fn oracle_count(spec: &TupleSpec, n: u64) -> BigInt {
    oracle_table(spec, n).pop().expect("table is non-empty")
}

/// `f(n) = ∑_j C(r, j) (-1)^j p_a(n - jD)`, from partition counts alone.
pub fn f_from_partition(spec: &TupleSpec, n: u64) -> BigInt {
    f_from_partition_table(spec, &oracle_table(spec, n), n)
}

/// As [`f_from_partition`], reading `p_a` from a precomputed table that
/// covers `0..=n`.
pub fn f_from_partition_table(spec: &TupleSpec, table: &[BigInt], n: u64) -> BigInt {
    let d = spec.period();
    let r = spec.r() as u64;
    (0..=n / d).fold(BigInt::zero(), |acc, j| {
        let term = binomial(r, j as i64) * &table[(n - j * d) as usize];
        if j.is_odd() {
            acc - term
        } else {
            acc + term
        }
    })
}

/// `p_a(n) = ∑_j C(r + j - 1, j) f(n - jD)`.
///
/// Only the `j` with `n - jD <= d` contribute, so at most `r` terms are
/// summed.
pub fn partition_from_f(fv: &FVector, n: u64) -> BigInt {
    let spec = fv.spec();
    let (d, top, r) = (spec.period(), spec.top_degree(), spec.r() as u64);
    let lo = if n > top { (n - top).div_ceil(d) } else { 0 };
    (lo..=n / d).fold(BigInt::zero(), |acc, j| {
        acc + binomial(r + j - 1, j as i64) * fv.get(n - j * d)
    })
}

/// `∏_{l=1}^{r-1} (x + l)`
fn rising_from_one(x: &BigInt, r: usize) -> BigInt {
    (1..r).fold(BigInt::one(), |acc, l| acc * (x + l))
}

/// `p_a(n) = (1/(r-1)!) ∑_{s ≡ n (mod D)} f(s) ∏_{l=1}^{r-1} ((n - s)/D + l)`.
///
/// Tuples of the box are grouped by their sum `s` through the f-vector.
pub fn partition_product_formula(fv: &FVector, n: u64) -> BigInt {
    let spec = fv.spec();
    let d = BigInt::from(spec.period());
    let n_big = BigInt::from(n);
    let sum = fv.residue_class(n).fold(BigInt::zero(), |acc, (s, c)| {
        let q = (&n_big - BigInt::from(s)) / &d;
        acc + c * rising_from_one(&q, spec.r())
    });
    let (quot, rem) = sum.div_rem(&factorial(spec.r() as u64 - 1));
    debug_assert!(rem.is_zero());
    quot
}

/// `f(n)` recovered by substituting the product formula into the
/// alternating sum: `(1/(r-1)!) ∑_j C(r,j)(-1)^j ∑_{s ≡ n} f(s) ∏_l ((n-s)/D + l - j)`.
pub fn f_by_alternating_product(fv: &FVector, n: u64) -> BigInt {
    let spec = fv.spec();
    let d = spec.period();
    let r = spec.r();
    let n_big = BigInt::from(n);
    let mut total = BigInt::zero();
    for j in 0..=n / d {
        let inner = fv.residue_class(n).fold(BigInt::zero(), |acc, (s, c)| {
            let q = (&n_big - BigInt::from(s)) / BigInt::from(d) - BigInt::from(j);
            acc + c * rising_from_one(&q, r)
        });
        let term = binomial(r as u64, j as i64) * inner;
        if j.is_odd() {
            total -= term;
        } else {
            total += term;
        }
    }
    total / factorial(r as u64 - 1)
}

/// Whether `p_a(n) = 0`, decided from the f-vector: true iff `n < s` for
/// every `s ≡ n (mod D)` with `f(s) > 0`.
pub fn vanishing_test(fv: &FVector, n: u64) -> bool {
    match fv.residue_min(n) {
        None => true,
        Some(s) => n < s,
    }
}

/// Divisibility data for `(r-1)! p_a(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    /// `⌊n/D⌋ - ⌈(n+σ)/D⌉ + r`
    pub k: i64,
    /// `∏_{t=⌊n/D⌋+1}^{⌈(n+σ)/D⌉-1} t`
    pub modulus: BigInt,
    /// `(r-1)! p_a(n)`
    pub value: BigInt,
}

impl Congruence {
    pub fn holds(&self) -> bool {
        (&self.value % &self.modulus).is_zero()
    }
}

/// The modulus is the run of consecutive integers shared by every factor
/// `(j+1)...(j+r-1)` in `(r-1)! p_a(n) = ∑_{j=⌈(n+σ)/D⌉-r}^{⌊n/D⌋} (j+1)...(j+r-1) f(n-jD)`.
/// `value` is computed from that sum.
pub fn congruence_data(fv: &FVector, n: u64) -> Congruence {
    let spec = fv.spec();
    let d = spec.period();
    let r = spec.r() as u64;
    let floor = n / d;
    let ceil = (n + spec.sigma()).div_ceil(d);
    let k = floor as i64 - ceil as i64 + r as i64;
    let modulus = (floor + 1..ceil).fold(BigInt::one(), |acc, t| acc * t);
    let lo = ceil.saturating_sub(r);
    let value = (lo..=floor).fold(BigInt::zero(), |acc, j| {
        let weight = (j + 1..j + r).fold(BigInt::one(), |w, t| w * t);
        acc + weight * fv.get(n - j * d)
    });
    Congruence { k, modulus, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::f_vector;

    fn spec(parts: &[u64]) -> TupleSpec {
        TupleSpec::new(parts).unwrap()
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    // Count solutions by nested enumeration, independent of the DP.
    fn brute_force(parts: &[u64], n: u64) -> u64 {
        match parts.split_first() {
            None => (n == 0) as u64,
            Some((&a, rest)) => (0..=n / a).map(|x| brute_force(rest, n - a * x)).sum(),
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_count(&spec(&[1]), 17), int(1));
        assert_eq!(oracle_count(&spec(&[1, 2]), 4), int(3));
        assert_eq!(oracle_count(&spec(&[3, 5]), 7), int(0));
    }

    #[test]
    fn oracle_matches_brute_force() {
        for parts in [&[1u64, 2][..], &[2, 3, 5], &[3, 5, 7], &[1, 2, 3, 4]] {
            let table = oracle_table(&spec(parts), 60);
            for n in 0..=60 {
                assert_eq!(table[n as usize], BigInt::from(brute_force(parts, n)));
            }
        }
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(f_from_partition(&spec(&[1, 2]), 4), int(0));
        assert_eq!(f_from_partition(&spec(&[1, 2]), 0), int(1));
        assert_eq!(f_from_partition(&spec(&[2, 3]), 7), int(1));
    }

    #[test]
    fn from_f_examples() {
        let fv = f_vector(&spec(&[1, 2]));
        assert_eq!(partition_from_f(&fv, 0), int(1));
        assert_eq!(partition_from_f(&fv, 4), int(3));
        assert_eq!(partition_from_f(&f_vector(&spec(&[2, 3])), 7), int(1));
    }

    #[test]
    fn product_formula_examples() {
        assert_eq!(partition_product_formula(&f_vector(&spec(&[1, 2])), 4), int(3));
        assert_eq!(partition_product_formula(&f_vector(&spec(&[1, 1])), 7), int(8));
        assert_eq!(partition_product_formula(&f_vector(&spec(&[3, 5])), 7), int(0));
    }

    #[test]
    fn vanishing_examples() {
        let fv = f_vector(&spec(&[3, 5]));
        assert!(vanishing_test(&fv, 7));
        assert!(!vanishing_test(&fv, 8));
        assert!(!vanishing_test(&f_vector(&spec(&[1, 2])), 0));
        // gcd 2: odd residues never get hit
        let fv = f_vector(&spec(&[2, 4]));
        assert!(vanishing_test(&fv, 101));
        assert!(!vanishing_test(&fv, 100));
    }

    #[test]
    fn congruence_examples() {
        let c = congruence_data(&f_vector(&spec(&[1, 1])), 5);
        assert_eq!((c.k, c.modulus.clone(), c.value.clone()), (0, int(6), int(6)));
        let c = congruence_data(&f_vector(&spec(&[1, 1, 1])), 4);
        assert_eq!((c.modulus.clone(), c.value.clone()), (int(30), int(30)));
        assert!(c.holds());
        let c = congruence_data(&f_vector(&spec(&[1, 2])), 4);
        assert_eq!((c.k, c.modulus.clone(), c.value.clone()), (0, int(3), int(3)));
    }

    #[test]
    fn alternating_product_reproduces_f() {
        for parts in [&[1u64, 2][..], &[2, 3], &[3, 5, 7], &[4, 6, 10]] {
            let fv = f_vector(&spec(parts));
            for n in 0..=fv.spec().top_degree() + 2 * fv.spec().period() {
                assert_eq!(&f_by_alternating_product(&fv, n), fv.get(n), "{parts:?} n={n}");
            }
        }
    }
}
