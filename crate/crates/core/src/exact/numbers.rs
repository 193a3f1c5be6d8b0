use std::sync::{Mutex, RwLock};

use num::{BigInt, One, Zero};

use super::Rational;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_l` for the generating function `t / (e^t - 1)`, so
/// `B_1 = -1/2`.
///
/// Values come from `sum_{k=0}^{m} C(m+1, k) B_k = 0` and are memoized.
pub fn bernoulli(l: usize) -> Rational {
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= l {
        let m = table.len() as u64;
        let sum = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| {
                acc + Rational::from_integer(binomial(m + 1, k as i64)) * b
            });
        table.push(-sum / Rational::from_integer(BigInt::from(m + 1)));
    }
    table[l].clone()
}

/// Lower-triangular table grown on demand by a two-term recurrence.
struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    step: fn(&[BigInt], usize, usize) -> BigInt,
}

impl Triangle {
    const fn new(step: fn(&[BigInt], usize, usize) -> BigInt) -> Self {
        Triangle {
            rows: RwLock::new(Vec::new()),
            step,
        }
    }

    fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        let k = k as usize;
        {
            let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().unwrap_or_else(|e| e.into_inner());
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= n {
            let i = rows.len();
            let prev = &rows[i - 1];
            let row: Vec<BigInt> = (0..=i).map(|j| (self.step)(prev, i, j)).collect();
            rows.push(row);
        }
        rows[n][k].clone()
    }
}

fn at(row: &[BigInt], j: usize) -> BigInt {
    row.get(j).cloned().unwrap_or_default()
}

static CYCLE: Triangle = Triangle::new(|prev, n, k| {
    // c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)
    let left = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
    left + at(prev, k) * (n - 1)
});

static PARTITION: Triangle = Triangle::new(|prev, _n, k| {
    // S(n, k) = k S(n-1, k) + S(n-1, k-1)
    let left = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
    at(prev, k) * k + left
});

/// Unsigned Stirling number of the first kind: permutations of `n`
/// elements with exactly `k` cycles.
pub fn stirling_cycle(n: usize, k: i64) -> BigInt {
    CYCLE.get(n, k)
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// nonempty blocks.
pub fn stirling_partition(n: usize, k: i64) -> BigInt {
    PARTITION.get(n, k)
}

/// Coefficients of `(x + 1)(x + 2)...(x + r - 1)`, lowest degree first.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn shifted_factorial_coeffs(r: usize) -> Vec<BigInt> {
    assert!(r >= 1, "r must be positive");
    let mut coeffs = vec![BigInt::one()];
    for l in 1..r {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c * l;
            next[i + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Integer;

    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let row = (0..=i)
                .map(|j| {
                    let l = if j == 0 { BigInt::zero() } else { prev[j - 1].clone() };
                    l + prev.get(j).cloned().unwrap_or_default()
                })
                .collect();
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal() {
        let rows = pascal(40);
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), v);
            }
        }
    }

    fn cycles_of(perm: &[usize]) -> usize {
        let mut seen = vec![false; perm.len()];
        let mut count = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        count
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn stirling_cycle_matches_permutation_enumeration() {
        for n in 0..=7 {
            let mut counts = vec![0u64; n + 1];
            for p in permutations(n) {
                counts[cycles_of(&p)] += 1;
            }
            for (k, &c) in counts.iter().enumerate() {
                assert_eq!(stirling_cycle(n, k as i64), BigInt::from(c), "c({n},{k})");
            }
        }
        assert_eq!(stirling_cycle(3, 2), BigInt::from(3));
        assert_eq!(stirling_cycle(2, 0), BigInt::zero());
        assert_eq!(stirling_cycle(9, 9), BigInt::one());
    }

    // Restricted growth strings enumerate set partitions.
    fn set_partition_counts(n: usize) -> Vec<u64> {
        fn rec(i: usize, n: usize, blocks: usize, counts: &mut Vec<u64>) {
            if i == n {
                counts[blocks] += 1;
                return;
            }
            for b in 0..=blocks {
                rec(i + 1, n, blocks.max(b + 1), counts);
            }
        }
        let mut counts = vec![0; n + 1];
        rec(0, n, 0, &mut counts);
        counts
    }

    #[test]
    fn stirling_partition_matches_enumeration() {
        for n in 0..=8 {
            for (k, &c) in set_partition_counts(n).iter().enumerate() {
                assert_eq!(stirling_partition(n, k as i64), BigInt::from(c), "S({n},{k})");
            }
        }
        assert_eq!(stirling_partition(0, 0), BigInt::one());
        assert_eq!(stirling_partition(3, 2), BigInt::from(3));
        for n in 1..12 {
            assert_eq!(stirling_partition(n, 1), BigInt::one());
        }
    }

    #[test]
    fn stirling_orthogonality() {
        for n in 0..=20usize {
            for m in 0..=20usize {
                let mut sum = BigInt::zero();
                for k in 0..=n {
                    let term = stirling_partition(n, k as i64) * stirling_cycle(k, m as i64);
                    if (k + m) % 2 == 0 {
                        sum += term;
                    } else {
                        sum -= term;
                    }
                }
                let expected = if n == m { BigInt::one() } else { BigInt::zero() };
                assert_eq!(sum, expected, "n={n} m={m}");
            }
        }
    }

    // Coefficients of (e^t - 1)/t, then invert the power series.
    fn bernoulli_by_series_inversion(count: usize) -> Vec<Rational> {
        let g: Vec<Rational> = (0..count)
            .map(|i| Rational::new(BigInt::one(), factorial(i as u64 + 1)))
            .collect();
        let mut inv = vec![Rational::zero(); count];
        inv[0] = Rational::one();
        for n in 1..count {
            let mut s = Rational::zero();
            for k in 1..=n {
                s += &g[k] * &inv[n - k];
            }
            inv[n] = -s;
        }
        inv.into_iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from_integer(factorial(i as u64)))
            .collect()
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), Rational::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!(bernoulli(2), Rational::new(BigInt::from(1), BigInt::from(6)));
    }

    #[test]
    fn bernoulli_matches_series_inversion() {
        for (l, b) in bernoulli_by_series_inversion(32).iter().enumerate() {
            assert_eq!(&bernoulli(l), b, "B_{l}");
            assert!(b.numer().gcd(b.denom()).is_one());
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for k in 1..=15 {
            assert!(bernoulli(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn shifted_factorial_examples() {
        let ints = |v: Vec<BigInt>| v.into_iter().map(|b| b.try_into().unwrap()).collect::<Vec<i64>>();
        assert_eq!(ints(shifted_factorial_coeffs(1)), vec![1]);
        assert_eq!(ints(shifted_factorial_coeffs(2)), vec![1, 1]);
        assert_eq!(ints(shifted_factorial_coeffs(3)), vec![2, 3, 1]);
    }

    #[test]
    fn shifted_factorial_is_shifted_stirling_row() {
        for r in 1..=12 {
            let coeffs = shifted_factorial_coeffs(r);
            assert_eq!(coeffs.len(), r);
            for (k, c) in coeffs.iter().enumerate() {
                assert_eq!(c, &stirling_cycle(r, k as i64 + 1));
            }
        }
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|t| {
                std::thread::spawn(move || {
                    let b: Vec<Rational> = (0..40).rev().map(|l| bernoulli((l + t) % 40)).collect();
                    let s: Vec<BigInt> = (0..30).map(|n| stirling_cycle(30 - n, 5) + stirling_partition(n, 3)).collect();
                    (t, b, s)
                })
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, b, s) in &results {
            for (i, v) in b.iter().enumerate() {
                let l = (39 - i + t) % 40;
                assert_eq!(v, &bernoulli(l));
            }
            assert_eq!(s, &results[0].2);
        }
    }
}
