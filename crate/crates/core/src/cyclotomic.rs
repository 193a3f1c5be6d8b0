//! Exact arithmetic in cyclotomic fields `Q(ζ_D)`.
//!
//! An element is stored as its remainder modulo the `D`-th cyclotomic
//! polynomial `Φ_D`, written in powers of the generator `ζ_D = e^{2πi/D}`.
//! That remainder is unique, so equality and "is this rational?" are plain
//! coefficient comparisons.
//!
//! Elements of different levels never mix implicitly. An element of level
//! `j` can be lifted to any level `D` with `j | D` via `ζ_j ↦ ζ_D^{D/j}`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num::{Integer, One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{format_rational, serde_rational, IntPolynomial, Rational};

static PHI: RwLock<Option<HashMap<u64, Arc<IntPolynomial>>>> = RwLock::new(None);

fn phi(j: u64) -> Arc<IntPolynomial> {
    assert!(j >= 1, "cyclotomic index must be positive");
    if let Some(p) = PHI
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .as_ref()
        .and_then(|m| m.get(&j))
    {
        return Arc::clone(p);
    }
    let mut divisors_product = IntPolynomial::one();
    for d in 1..j {
        if j % d == 0 {
            divisors_product = &divisors_product * &phi(d);
        }
    }
    let (quot, rem) = IntPolynomial::x_pow_minus_one(j as usize).div_rem_monic(&divisors_product);
    debug_assert!(rem.is_zero());
    let quot = Arc::new(quot);
    PHI.write()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert(j, Arc::clone(&quot));
    quot
}

/// The `j`-th cyclotomic polynomial, `(x^j - 1) / ∏_{d | j, d < j} Φ_d`.
///
/// # Panics
///
/// Panics if `j == 0`.
pub fn cyclotomic_polynomial(j: u64) -> IntPolynomial {
    (*phi(j)).clone()
}

/// Degree of `Φ_level`, i.e. Euler's totient of `level`.
pub fn field_degree(level: u64) -> usize {
    phi(level).degree().unwrap_or(0)
}

/// Fold exponents modulo `level` (valid because `Φ_level | x^level - 1`),
/// then take the remainder modulo `Φ_level`.
fn reduce(level: u64, mut buf: Vec<Rational>) -> Vec<Rational> {
    let level_us = level as usize;
    if buf.len() > level_us {
        let tail = buf.split_off(level_us);
        for (i, c) in tail.into_iter().enumerate() {
            if !c.is_zero() {
                buf[i % level_us] += c;
            }
        }
    }
    let modulus = phi(level);
    let deg = modulus.degree().unwrap_or(0);
    let low = &modulus.coeffs()[..deg];
    for i in (deg..buf.len()).rev() {
        let c = std::mem::take(&mut buf[i]);
        if c.is_zero() {
            continue;
        }
        for (k, m) in low.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let slot = &mut buf[i - deg + k];
            if m.is_one() {
                *slot -= &c;
            } else if (-m).is_one() {
                *slot += &c;
            } else {
                *slot -= &c * Rational::from_integer(m.clone());
            }
        }
    }
    buf.resize(deg, Rational::zero());
    buf
}

/// An element of `Q(ζ_level)` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    level: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn zero(level: u64) -> Self {
        CyclotomicNumber {
            level,
            coeffs: vec![Rational::zero(); field_degree(level)],
        }
    }

    pub fn one(level: u64) -> Self {
        Self::from_rational(level, Rational::one())
    }

    pub fn from_rational(level: u64, q: Rational) -> Self {
        let mut x = Self::zero(level);
        x.coeffs[0] = q;
        x
    }

    /// `ζ_level^t`, with `t` taken modulo `level`.
    pub fn root_power(level: u64, t: i64) -> Self {
        let e = t.rem_euclid(level as i64) as usize;
        let mut buf = vec![Rational::zero(); e + 1];
        buf[e] = Rational::one();
        Self::from_group_ring(level, buf)
    }

    /// Canonical form of `∑_k terms[k] ζ_level^k` (any length).
    pub fn from_group_ring(level: u64, terms: Vec<Rational>) -> Self {
        CyclotomicNumber {
            level,
            coeffs: reduce(level, terms),
        }
    }

    /// Build from canonical coefficients, checking their count.
    pub fn from_coeffs(level: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let expected = field_degree(level);
        if coeffs.len() != expected {
            return Err(Error::BadCoefficientCount {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(CyclotomicNumber { level, coeffs })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if every coefficient beyond the constant term
    /// vanishes.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational { level: self.level })
        }
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicNumber { level: self.level, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicNumber { level: self.level, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let n = self.coeffs.len();
        let mut buf = vec![Rational::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    buf[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_group_ring(self.level, buf))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// `self · ζ_level^t`.
    pub fn mul_root_power(&self, t: i64) -> Self {
        let level = self.level as i64;
        let shift = t.rem_euclid(level) as usize;
        let mut buf = vec![Rational::zero(); self.coeffs.len() + shift];
        for (i, c) in self.coeffs.iter().enumerate() {
            buf[i + shift] = c.clone();
        }
        Self::from_group_ring(self.level, buf)
    }

    /// Image under `ζ_level ↦ ζ_to^{to / level}`; requires `level | to`.
    pub fn lift(&self, to: u64) -> Result<Self> {
        if to == 0 || to % self.level != 0 {
            return Err(Error::BadLift { from: self.level, to });
        }
        if to == self.level {
            return Ok(self.clone());
        }
        let step = (to / self.level) as usize;
        let mut buf = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            buf[i * step] = c.clone();
        }
        Ok(Self::from_group_ring(to, buf))
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    /// # Panics
    ///
    /// Panics on a level mismatch; use [`CyclotomicNumber::try_add`] to get
    /// an error instead.
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.try_add(rhs).expect("cyclotomic level mismatch")
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.try_sub(rhs).expect("cyclotomic level mismatch")
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.try_mul(rhs).expect("cyclotomic level mismatch")
    }
}

impl Mul<&Rational> for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: &Rational) -> CyclotomicNumber {
        self.scale(rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = format_rational(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{text}")?,
                1 => write!(f, "{text}*z{}", self.level)?,
                _ => write!(f, "{text}*z{}^{k}", self.level)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    level: u64,
    #[serde(with = "serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson {
            level: self.level,
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CyclotomicJson::deserialize(d)?;
        CyclotomicNumber::from_coeffs(raw.level, raw.coeffs).map_err(de::Error::custom)
    }
}

/// Accumulates `∑ x_i ζ_level^{t_i}` in the group ring `Q[x]/(x^level - 1)`
/// and reduces modulo `Φ_level` once at the end.
#[derive(Debug, Clone)]
pub struct GroupRingSum {
    level: u64,
    buf: Vec<Rational>,
}

impl GroupRingSum {
    pub fn new(level: u64) -> Self {
        GroupRingSum {
            level,
            buf: vec![Rational::zero(); level as usize],
        }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Add `q ζ_level^t`.
    pub fn add_rational(&mut self, t: i64, q: &Rational) {
        let e = t.rem_euclid(self.level as i64) as usize;
        self.buf[e] += q;
    }

    /// Add `scale · x · ζ_level^t`, lifting `x` from its own level, which
    /// must divide the accumulator's level.
    pub fn add_scaled(&mut self, x: &CyclotomicNumber, t: i64, scale: &Rational) -> Result<()> {
        if self.level % x.level != 0 {
            return Err(Error::BadLift {
                from: x.level,
                to: self.level,
            });
        }
        let step = (self.level / x.level) as i64;
        let level = self.level as i64;
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as i64 * step + t).rem_euclid(level) as usize;
            self.buf[e] += c * scale;
        }
        Ok(())
    }

    pub fn add(&mut self, x: &CyclotomicNumber, t: i64) -> Result<()> {
        self.add_scaled(x, t, &Rational::one())
    }

    pub fn finish(self) -> CyclotomicNumber {
        CyclotomicNumber::from_group_ring(self.level, self.buf)
    }
}

/// A root of unity `ζ_order^exponent` with `gcd(exponent, order) = 1`, so
/// `order` is its exact multiplicative order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { order: 1, exponent: 0 };

    /// `ζ_order^exponent`; fails unless it is primitive of that order.
    pub fn primitive(order: u64, exponent: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroLevel);
        }
        let exponent = exponent % order;
        if exponent.gcd(&order) != 1 {
            return Err(Error::NotARoot { period: order });
        }
        Ok(RootOfUnity { order, exponent })
    }

    /// `ζ_level^t`, reduced to lowest terms.
    pub fn from_level_power(level: u64, t: i64) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let e = t.rem_euclid(level as i64) as u64;
        let g = e.gcd(&level);
        Ok(RootOfUnity {
            order: level / g,
            exponent: e / g,
        })
    }

    /// Find `t` with `x = ζ_level^t`, where `level` is the level of `x`.
    pub fn identify(x: &CyclotomicNumber) -> Option<Self> {
        (0..x.level as i64)
            .find(|&t| CyclotomicNumber::root_power(x.level, t) == *x)
            .map(|t| Self::from_level_power(x.level, t).expect("positive level"))
    }

    /// All primitive roots of the given order, by increasing exponent.
    pub fn all_primitive(order: u64) -> impl Iterator<Item = RootOfUnity> {
        (0..order)
            .filter(move |e| e.gcd(&order) == 1)
            .map(move |exponent| RootOfUnity { order, exponent })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `t` such that this root equals `ζ_level^t`; requires `order | level`.
    pub fn power_at(&self, level: u64) -> Result<u64> {
        if level == 0 || level % self.order != 0 {
            return Err(Error::BadLift {
                from: self.order,
                to: level,
            });
        }
        Ok(self.exponent * (level / self.order))
    }

    /// The root as a field element at its own level.
    pub fn value(&self) -> CyclotomicNumber {
        CyclotomicNumber::root_power(self.order, self.exponent as i64)
    }

    /// This root raised to `k`, as an element at its own level.
    pub fn pow(&self, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_power(self.order, self.exponent as i64 * k)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}^{}", self.order, self.exponent)
    }
}
