use num::{BigInt, One, Zero};

use super::TupleSpec;
use crate::error::{Error, Result};
use crate::exact::IntPolynomial;

/// Coefficients `f(0..=d)` of
/// `F(z) = (1 - z^D)^r / ∏ (1 - z^{a_i}) = ∏ (1 + z^{a_i} + ... + z^{a_i (D/a_i - 1)})`.
///
/// `f(s)` counts tuples `0 <= j_i < D/a_i` with `∑ a_i j_i = s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    spec: TupleSpec,
    f: Vec<BigInt>,
    // smallest s with f(s) > 0 in each residue class mod D
    residue_min: Vec<Option<u64>>,
    zero: BigInt,
}

/// Expand `F(z)` one geometric factor at a time.
pub fn f_vector(spec: &TupleSpec) -> FVector {
    let d = spec.period();
    let poly = spec
        .parts()
        .iter()
        .fold(IntPolynomial::one(), |acc, &a| acc.mul_geometric(a as usize, (d / a) as usize));
    let mut f = poly.into_coeffs();
    f.resize(spec.top_degree() as usize + 1, BigInt::zero());
    FVector::assemble(spec.clone(), f)
}

impl FVector {
    fn assemble(spec: TupleSpec, f: Vec<BigInt>) -> Self {
        let period = spec.period() as usize;
        let mut residue_min = vec![None; period];
        for (s, c) in f.iter().enumerate() {
            let slot = &mut residue_min[s % period];
            if slot.is_none() && !c.is_zero() {
                *slot = Some(s as u64);
            }
        }
        FVector {
            spec,
            f,
            residue_min,
            zero: BigInt::zero(),
        }
    }

    /// Rebuild from stored coefficients, checking length, `f(0) = 1`,
    /// reciprocity and total mass.
    pub fn from_coeffs(spec: &TupleSpec, f: Vec<BigInt>) -> Result<Self> {
        let bad = |what: &str| Err(Error::audit("f-vector", what.to_string()));
        if f.len() as u64 != spec.top_degree() + 1 {
            return bad("wrong length");
        }
        if !f[0].is_one() {
            return bad("f(0) != 1");
        }
        if f.iter().zip(f.iter().rev()).any(|(x, y)| x != y) {
            return bad("not reciprocal");
        }
        if f.iter().sum::<BigInt>() != expected_mass(spec) {
            return bad("wrong total mass");
        }
        Ok(Self::assemble(spec.clone(), f))
    }

    pub fn spec(&self) -> &TupleSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.f
    }

    /// `f(s)`, zero beyond the top degree.
    pub fn get(&self, s: u64) -> &BigInt {
        self.f.get(s as usize).unwrap_or(&self.zero)
    }

    /// `(s, f(s))` for every `s` with `f(s) != 0`.
    pub fn support(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.f
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (s as u64, c))
    }

    /// `(s, f(s))` for every nonzero `f(s)` with `s ≡ n (mod D)`.
    pub fn residue_class(&self, n: u64) -> impl Iterator<Item = (u64, &BigInt)> {
        let period = self.spec.period();
        let start = n % period;
        (start..=self.spec.top_degree())
            .step_by(period as usize)
            .map(|s| (s, &self.f[s as usize]))
            .filter(|(_, c)| !c.is_zero())
    }

    /// Smallest `s ≡ n (mod D)` with `f(s) > 0`, if any.
    pub fn residue_min(&self, n: u64) -> Option<u64> {
        self.residue_min[(n % self.spec.period()) as usize]
    }
}

/// `∏ D / a_i`, the value `F(1)`.
pub fn expected_mass(spec: &TupleSpec) -> BigInt {
    spec.parts()
        .iter()
        .map(|&a| BigInt::from(spec.period() / a))
        .product()
}
