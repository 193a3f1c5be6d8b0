use std::fmt;
use std::ops::Mul;

use num::{BigInt, One, Signed, Zero};

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    /// `1 + x^step + x^(2 step) + ... + x^((count - 1) step)`
    pub fn geometric(step: usize, count: usize) -> Self {
        if count == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); step * (count - 1) + 1];
        for i in 0..count {
            coeffs[i * step] = BigInt::one();
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Product with `1 + x^step + ... + x^((count - 1) step)` in linear
    /// time, using a sliding window sum instead of a full convolution.
    pub fn mul_geometric(&self, step: usize, count: usize) -> Self {
        if self.is_zero() || count == 0 {
            return Self::zero();
        }
        let span = step * (count - 1);
        let len = self.coeffs.len() + span;
        let mut out = vec![BigInt::zero(); len];
        for n in 0..len {
            let mut acc = if n < self.coeffs.len() {
                self.coeffs[n].clone()
            } else {
                BigInt::zero()
            };
            if n >= step && step > 0 {
                acc += &out[n - step];
                if n >= step * count && n - step * count < self.coeffs.len() {
                    acc -= &self.coeffs[n - step * count];
                }
            } else if step == 0 {
                acc *= count;
            }
            out[n] = acc;
        }
        Self::new(out)
    }

    /// Quotient and remainder on division by a monic polynomial.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (k, dk) in divisor.coeffs[..dd].iter().enumerate() {
                if !dk.is_zero() {
                    rem[i - dd + k] -= &c * dk;
                }
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn geometric_product_matches_convolution() {
        let base = IntPolynomial::from_i64(&[1, 3, 0, -2, 5]);
        for step in 1..5 {
            for count in 1..6 {
                let fast = base.mul_geometric(step, count);
                let slow = &base * &IntPolynomial::geometric(step, count);
                assert_eq!(fast, slow, "step {step} count {count}");
            }
        }
    }

    #[test]
    fn exact_division() {
        let a = IntPolynomial::from_i64(&[-1, 1]);
        let b = IntPolynomial::from_i64(&[1, 1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, IntPolynomial::x_pow_minus_one(3));
        let (q, r) = prod.div_rem_monic(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(IntPolynomial::from_i64(&[-1, 1]).to_string(), "x - 1");
    }
}
