use num::{BigInt, One, Zero};

use super::{FVector, TupleSpec};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial, factorial, stirling_cycle, Rational};

/// `p_a(n) = ∑_{m=0}^{r-1} d_m(n mod D) n^m`, stored as the table
/// `d_m(v)` for `0 <= m < r`, `0 <= v < D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    spec: TupleSpec,
    rows: Vec<Vec<Rational>>,
}

/// Coefficient table from the f-vector:
///
/// `d_m(v) = (1/(r-1)!) ∑_{s ≡ v} f(s) ∑_{k=m}^{r-1} c(r, k+1) (-1)^{k-m} C(k, m) D^{-k} s^{k-m}`
///
/// where `c(r, k+1)`, the coefficient of `x^k` in `(x+1)...(x+r-1)`, is an
/// unsigned Stirling number of the first kind.
pub fn quasipolynomial(fv: &FVector) -> QuasiPolynomial {
    let spec = fv.spec();
    let r = spec.r();
    let period = spec.period();
    let d_big = BigInt::from(period);
    // Work with numerators scaled by (r-1)! D^(r-1) so the inner loop stays
    // in the integers.
    let d_pows: Vec<BigInt> = (0..r).map(|k| num::pow(d_big.clone(), k)).collect();
    // weight[m][k] = c(r,k+1) (-1)^(k-m) C(k,m) D^(r-1-k)
    let weight: Vec<Vec<BigInt>> = (0..r)
        .map(|m| {
            (0..r)
                .map(|k| {
                    if k < m {
                        return BigInt::zero();
                    }
                    let w = stirling_cycle(r, k as i64 + 1)
                        * binomial(k as u64, m as i64)
                        * &d_pows[r - 1 - k];
                    if (k - m) % 2 == 1 {
                        -w
                    } else {
                        w
                    }
                })
                .collect()
        })
        .collect();
    let mut numer = vec![vec![BigInt::zero(); period as usize]; r];
    for (s, c) in fv.support() {
        let v = (s % period) as usize;
        let s_big = BigInt::from(s);
        let s_pows: Vec<BigInt> = (0..r).map(|e| c * num::pow(s_big.clone(), e)).collect();
        for m in 0..r {
            let acc: BigInt = (m..r).map(|k| &weight[m][k] * &s_pows[k - m]).sum();
            numer[m][v] += acc;
        }
    }
    let denom = factorial(r as u64 - 1) * &d_pows[r - 1];
    let rows = numer
        .into_iter()
        .map(|row| row.into_iter().map(|x| Rational::new(x, denom.clone())).collect())
        .collect();
    QuasiPolynomial {
        spec: spec.clone(),
        rows,
    }
}

impl QuasiPolynomial {
    pub fn spec(&self) -> &TupleSpec {
        &self.spec
    }

    pub fn period(&self) -> u64 {
        self.spec.period()
    }

    /// `d_m(v)`
    pub fn coeff(&self, m: usize, v: u64) -> &Rational {
        &self.rows[m][(v % self.period()) as usize]
    }

    /// The row `d_m(0..D)`.
    pub fn row(&self, m: usize) -> &[Rational] {
        &self.rows[m]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn eval(&self, n: u64) -> Rational {
        let v = (n % self.period()) as usize;
        let n = Rational::from_integer(BigInt::from(n));
        self.rows
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, row| acc * &n + &row[v])
    }

    /// `(1/D) ∑_v d_m(v)`, the coefficient of `n^m` in the polynomial part.
    pub fn average(&self, m: usize) -> Rational {
        let sum: Rational = self.rows[m].iter().sum();
        sum / Rational::from_integer(BigInt::from(self.period()))
    }

    /// Restate the table with a shorter period `p` (which must divide the
    /// current period and be a common multiple of the tuple). Fails if the
    /// table does not actually repeat with period `p`.
    pub fn fold_period(&self, p: u64) -> Result<QuasiPolynomial> {
        let spec = self.spec.with_new_period(p)?;
        if self.period() % p != 0 {
            return Err(Error::NotCommonMultiple { period: p });
        }
        for row in &self.rows {
            for (v, x) in row.iter().enumerate() {
                if x != &row[v % p as usize] {
                    return Err(Error::audit(
                        "quasi-polynomial refold",
                        format!("entry {v} differs from entry {}", v % p as usize),
                    ));
                }
            }
        }
        let rows = self.rows.iter().map(|row| row[..p as usize].to_vec()).collect();
        Ok(QuasiPolynomial { spec, rows })
    }
}

/// `w[u] = ∑_{i_1+...+i_r=u} ∏_k B_{i_k} a_k^{i_k} / i_k!` for `u < len`,
/// i.e. the truncated product of the series `∑_i B_i (a_k t)^i / i!`.
pub(crate) fn bernoulli_weights(parts: &[u64], len: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); len];
    acc[0] = Rational::one();
    for &a in parts {
        let series: Vec<Rational> = (0..len)
            .map(|i| {
                bernoulli(i) * Rational::new(num::pow(BigInt::from(a), i), factorial(i as u64))
            })
            .collect();
        let mut next = vec![Rational::zero(); len];
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in series.iter().enumerate().take(len - i) {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    acc
}

/// Coefficients of the polynomial part `P_a(n)`, lowest degree first:
/// the coefficient of `n^{r-1-u}` is
/// `(-1)^u / (a_1...a_r (r-1-u)!) · ∑_{|i|=u} ∏ B_{i_k} a_k^{i_k} / i_k!`.
pub fn polynomial_part(spec: &TupleSpec) -> Vec<Rational> {
    let r = spec.r();
    let weights = bernoulli_weights(spec.parts(), r);
    let prod = BigInt::from(spec.product());
    (0..r)
        .map(|m| {
            let u = r - 1 - m;
            let c = &weights[u] / Rational::from_integer(&prod * factorial(m as u64));
            if u % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// Evaluate coefficients (lowest degree first) at `n`.
pub fn eval_polynomial(coeffs: &[Rational], n: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * n + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{f_vector, oracle_table};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qp(parts: &[u64]) -> QuasiPolynomial {
        quasipolynomial(&f_vector(&TupleSpec::new(parts).unwrap()))
    }

    #[test]
    fn table_examples() {
        let q = qp(&[1, 2]);
        assert_eq!(q.row(1), &[rat(1, 2), rat(1, 2)]);
        assert_eq!(q.row(0), &[rat(1, 1), rat(1, 2)]);
        assert_eq!(qp(&[1]).rows(), &[vec![rat(1, 1)]]);
        assert_eq!(qp(&[1, 1]).rows(), &[vec![rat(1, 1)], vec![rat(1, 1)]]);
    }

    // Fit each residue class by interpolating the oracle at r points of
    // that class, then compare with the closed form table.
    #[test]
    fn table_matches_interpolated_oracle() {
        for parts in [&[2u64, 3][..], &[1, 2, 3], &[3, 5, 7]] {
            let q = qp(parts);
            let spec = q.spec().clone();
            let (r, d) = (spec.r(), spec.period());
            let table = oracle_table(&spec, d * r as u64 + d);
            for v in 0..d {
                let xs: Vec<u64> = (0..r as u64).map(|i| v + i * d).collect();
                // Lagrange through (x, p(x)) and compare at x = v + r D.
                let target = v + r as u64 * d;
                let mut predicted = Rational::zero();
                for (i, &xi) in xs.iter().enumerate() {
                    let mut basis = Rational::one();
                    for (k, &xk) in xs.iter().enumerate() {
                        if k != i {
                            basis *= rat(target as i64 - xk as i64, xi as i64 - xk as i64);
                        }
                    }
                    predicted += basis * Rational::from_integer(table[xi as usize].clone());
                }
                assert_eq!(q.eval(target), predicted);
                assert_eq!(predicted, Rational::from_integer(table[target as usize].clone()));
            }
        }
    }

    #[test]
    fn polynomial_part_examples() {
        let pp = |parts: &[u64]| polynomial_part(&TupleSpec::new(parts).unwrap());
        assert_eq!(pp(&[1]), vec![rat(1, 1)]);
        assert_eq!(pp(&[1, 1]), vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(pp(&[1, 2]), vec![rat(3, 4), rat(1, 2)]);
    }

    #[test]
    fn polynomial_part_is_row_average() {
        for parts in [&[1u64, 2][..], &[2, 3, 5], &[4, 6, 10], &[1, 2, 3, 4]] {
            let q = qp(parts);
            let pp = polynomial_part(q.spec());
            for (m, c) in pp.iter().enumerate() {
                assert_eq!(c, &q.average(m), "{parts:?} m={m}");
            }
        }
    }

    #[test]
    fn folding_detects_true_period() {
        let spec = TupleSpec::with_period(&[2, 3], Some(12)).unwrap();
        let wide = quasipolynomial(&f_vector(&spec));
        let folded = wide.fold_period(6).unwrap();
        assert_eq!(folded, qp(&[2, 3]));
        assert!(wide.fold_period(4).is_err());
    }
}
