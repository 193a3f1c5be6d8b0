//! Shared fixtures for the integration tests: the test corpus, a naive
//! enumeration count, and a partial fraction decomposition obtained by
//! plain linear algebra instead of through polynomial parts.

#![allow(dead_code)]

use num::{BigInt, BigRational, One, Zero};

use denumerant::cyclotomic::{field_degree, CyclotomicNumber, RootOfUnity};
use denumerant::partition::TupleSpec;

pub const CORPUS: &[&[u64]] = &[
    &[1],
    &[1, 1],
    &[1, 2],
    &[2, 3],
    &[3, 5],
    &[1, 2, 3],
    &[2, 3, 5],
    &[3, 5, 7],
    &[1, 2, 3, 4],
    &[4, 6, 10],
    &[6, 10, 15],
    &[1, 2, 3, 4, 5, 6],
];

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn label(parts: &[u64]) -> String {
    let s: Vec<String> = parts.iter().map(u64::to_string).collect();
    format!("({})", s.join(","))
}

/// Number of solutions by direct recursion over the first part.
pub fn enumerate_count(parts: &[u64], n: u64) -> u64 {
    match parts {
        [] => u64::from(n == 0),
        [a] => u64::from(n % a == 0),
        [a, rest @ ..] => (0..=n / a).map(|k| enumerate_count(rest, n - k * a)).sum(),
    }
}

type Poly = Vec<CyclotomicNumber>;

/// `P(z) / (λ - z)`, asserting the division is exact.
fn divide_by_linear(p: &Poly, lambda: &CyclotomicNumber) -> Poly {
    let n = p.len() - 1;
    let mut s = vec![CyclotomicNumber::zero(lambda.level()); n];
    // (λ - z) S(z): coefficient i is λ s_i - s_{i-1}
    s[n - 1] = -&p[n];
    for i in (1..n).rev() {
        s[i - 1] = &(lambda * &s[i]) - &p[i];
    }
    assert!((&(lambda * &s[0]) - &p[0]).is_zero(), "non-zero remainder");
    s
}

/// Solve `m x = b` over the rationals by Gauss–Jordan elimination. Panics
/// unless the solution is unique.
pub fn solve(mut m: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular system");
        m.swap(col, pivot);
        b.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        for row in 0..n {
            if row == col || m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone();
            let (pivot_row, bc) = (m[col].clone(), b[col].clone());
            for (x, p) in m[row].iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
            b[row] -= factor * bc;
        }
    }
    b
}

/// Every `c_{λ,l}` with `1/∏(1 - z^{a_i}) = ∑ c_{λ,l} / (λ - z)^l`, at level
/// `lcm(a)`, roots ordered by (order, exponent).
///
/// Clearing denominators gives `1 = ∑ c_{λ,l} Q(z)/(λ - z)^l` with
/// `Q = ∏(1 - z^{a_i})` of degree `σ`; matching `z^0..z^{σ-1}` and writing
/// each unknown in the power basis of the field yields a square rational
/// system.
pub fn linear_algebra_pfd(parts: &[u64]) -> Vec<(RootOfUnity, usize, CyclotomicNumber)> {
    let spec = TupleSpec::new(parts).unwrap();
    let level = spec.lcm();
    let phi = field_degree(level);
    let sigma = spec.sigma() as usize;

    let mut qz = vec![BigRational::one()];
    for &a in parts {
        let mut next = vec![BigRational::zero(); qz.len() + a as usize];
        for (i, c) in qz.iter().enumerate() {
            next[i] += c;
            next[i + a as usize] -= c;
        }
        qz = next;
    }
    let qz: Poly = qz.into_iter().map(|c| CyclotomicNumber::from_rational(level, c)).collect();

    // columns: (root, l, basis index k)
    let mut unknowns = Vec::new();
    let mut columns: Vec<Vec<BigRational>> = Vec::new();
    for j in (1..=level).filter(|j| level % j == 0) {
        let mult = parts.iter().filter(|&&a| a % j == 0).count();
        for root in RootOfUnity::all_primitive(j) {
            let lambda = root.value().lift(level).unwrap();
            let mut quotient = qz.clone();
            for l in 1..=mult {
                quotient = divide_by_linear(&quotient, &lambda);
                unknowns.push((root, l));
                for k in 0..phi {
                    let mut col = Vec::with_capacity(sigma * phi);
                    for i in 0..sigma {
                        let c = quotient.get(i).cloned().unwrap_or_else(|| CyclotomicNumber::zero(level));
                        col.extend(c.mul_root_power(k as i64).coeffs().iter().cloned());
                    }
                    columns.push(col);
                }
            }
        }
    }
    let size = sigma * phi;
    assert_eq!(columns.len(), size, "unknown count must equal σ·φ(L)");
    let matrix: Vec<Vec<BigRational>> = (0..size).map(|row| columns.iter().map(|c| c[row].clone()).collect()).collect();
    let mut rhs = vec![BigRational::zero(); size];
    rhs[0] = BigRational::one();
    let x = solve(matrix, rhs);

    unknowns
        .into_iter()
        .enumerate()
        .map(|(u, (root, l))| {
            let mut acc = CyclotomicNumber::zero(level);
            for k in 0..phi {
                acc = &acc + &CyclotomicNumber::root_power(level, k as i64).scale(&x[u * phi + k]);
            }
            (root, l, acc)
        })
        .collect()
}
