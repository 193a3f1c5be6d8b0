//! Sylvester waves: the splitting `p_a(n) = ∑_λ P_λ(n) λ^{-n}` over roots of
//! unity `λ`, where `P_λ` is the polynomial part of `λ^n p_a(n)`.
//!
//! Every root is handled at its own level (its multiplicative order), so a
//! root's coefficients do not depend on the period chosen for the tuple.
//! Sums that mix roots of different orders are lifted to the period `D`.
//!
//! Two groupings of the roots are offered. [`WaveMode::SingleRoot`] uses
//! only `ρ_j = e^{2πi/j}` for each index `j`. [`WaveMode::Sylvester`] sums
//! over all primitive `j`-th roots; that sum is rational, and summing it over
//! `j` gives back `p_a(n)`. The single-root values do not add up to `p_a(n)`
//! once some `j` has more than one primitive root contributing.

use num::{BigInt, One, Zero};
use rayon::prelude::*;

use crate::cyclotomic::{CyclotomicNumber, GroupRingSum, RootOfUnity};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, stirling_cycle, Rational};
use crate::partition::{eval_polynomial, polynomial_part, FVector, QuasiPolynomial, TupleSpec};

/// Number of entries of the tuple divisible by `j`; the pole order of the
/// generating function at a primitive `j`-th root of unity.
pub fn multiplicity(spec: &TupleSpec, j: u64) -> usize {
    spec.multiplicity(j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveMode {
    /// `P_{ρ_j}(n) ρ_j^{-n}` for the single root `ρ_j = ζ_j`.
    SingleRoot,
    /// Sum of `P_λ(n) λ^{-n}` over every primitive `j`-th root `λ`.
    Sylvester,
}

fn check_root(spec: &TupleSpec, root: RootOfUnity) -> Result<()> {
    if spec.period() % root.order() == 0 {
        Ok(())
    } else {
        Err(Error::NotARoot { period: spec.period() })
    }
}

fn rational(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `R_{λ,m} = (1/D) ∑_v λ^v d_{m-1}(v)` for `m = 1..=r`, at level
/// `order(λ)`.
fn all_root_coefficients(qp: &QuasiPolynomial, root: RootOfUnity) -> Vec<CyclotomicNumber> {
    let period = qp.period();
    let inv_period = Rational::new(BigInt::one(), BigInt::from(period));
    let step = root.exponent() as i64;
    qp.rows()
        .iter()
        .map(|row| {
            let mut acc = GroupRingSum::new(root.order());
            for (v, d) in row.iter().enumerate() {
                if !d.is_zero() {
                    acc.add_rational(step * v as i64, &(d * &inv_period));
                }
            }
            acc.finish()
        })
        .collect()
}

/// Polynomial part `P_λ(n) = R_{λ,1} + R_{λ,2} n + ...` of `λ^n p_a(n)`,
/// truncated to its `m(λ)` possibly nonzero coefficients. Returned values
/// live at level `order(λ)`.
///
/// Fails with an audit error if any coefficient past `m(λ)` is nonzero.
pub fn root_polynomial_part_of(qp: &QuasiPolynomial, root: RootOfUnity) -> Result<Vec<CyclotomicNumber>> {
    check_root(qp.spec(), root)?;
    let mut coeffs = all_root_coefficients(qp, root);
    let m = multiplicity(qp.spec(), root.order());
    if let Some(pos) = coeffs[m..].iter().position(|c| !c.is_zero()) {
        return Err(Error::audit(
            "polynomial-part degree bound",
            format!("R_{{{root},{}}} is nonzero but m = {m}", m + pos + 1),
        ));
    }
    coeffs.truncate(m);
    Ok(coeffs)
}

/// [`root_polynomial_part_of`] for a root given as a field element `γ`.
/// The coefficients are returned at the level of `γ`.
pub fn root_polynomial_part(qp: &QuasiPolynomial, gamma: &CyclotomicNumber) -> Result<Vec<CyclotomicNumber>> {
    let root = RootOfUnity::identify(gamma).ok_or(Error::NotARoot { period: qp.period() })?;
    root_polynomial_part_of(qp, root)?
        .iter()
        .map(|c| c.lift(gamma.level()))
        .collect()
}

/// Check the degree bound `deg P_λ <= m(λ) - 1` for every `D`-th root of
/// unity, including the roots where `m(λ) = 0` and `P_λ` must vanish.
pub fn check_degree_bounds(qp: &QuasiPolynomial) -> Result<()> {
    let period = qp.period();
    (0..period as i64).into_par_iter().try_for_each(|t| {
        let root = RootOfUnity::from_level_power(period, t)?;
        root_polynomial_part_of(qp, root).map(|_| ())
    })
}

/// Polynomial part of `λ^n p_a(n)` computed straight from the f-vector by
/// grouping the box sums by residue modulo `order(λ)`:
///
/// `R_{λ,m} = (1/(D (r-1)!)) ∑_{l mod j} λ^l ∑_{k=m-1}^{r-1} c(r,k+1) (-1)^{k-m+1} C(k,m-1) D^{-k} ∑_{s ≡ l (j)} f(s) s^{k-m+1}`
///
/// Returns the coefficients of `n^0 .. n^{max_terms-1}`, at level `order(λ)`.
pub fn residue_polynomial_part(fv: &FVector, root: RootOfUnity, max_terms: usize) -> Result<Vec<CyclotomicNumber>> {
    let spec = fv.spec();
    check_root(spec, root)?;
    let r = spec.r();
    let j = root.order();
    let period = BigInt::from(spec.period());
    // power_sums[l][e] = ∑_{s ≡ l (mod j)} f(s) s^e
    let mut power_sums = vec![vec![BigInt::zero(); r]; j as usize];
    for (s, c) in fv.support() {
        let slot = &mut power_sums[(s % j) as usize];
        let mut p = c.clone();
        for e in 0..r {
            slot[e] += &p;
            p *= s;
        }
    }
    let denom = factorial(r as u64 - 1) * num::pow(period.clone(), r);
    let step = root.exponent() as i64;
    let out = (1..=max_terms.min(r))
        .map(|m| {
            let mut acc = GroupRingSum::new(j);
            for (l, sums) in power_sums.iter().enumerate() {
                let mut numer = BigInt::zero();
                for k in m - 1..r {
                    let w = stirling_cycle(r, k as i64 + 1)
                        * binomial(k as u64, m as i64 - 1)
                        * num::pow(period.clone(), r - 1 - k)
                        * &sums[k + 1 - m];
                    if (k + 1 - m) % 2 == 1 {
                        numer -= w;
                    } else {
                        numer += w;
                    }
                }
                if !numer.is_zero() {
                    acc.add_rational(step * l as i64, &Rational::new(numer, denom.clone()));
                }
            }
            acc.finish()
        })
        .collect();
    Ok(out)
}

/// Coefficients (in `n`, lowest degree first, `r` of them) of the
/// polynomial attached to `ρ_j`, by residue grouping modulo `j`. The
/// wave itself is this polynomial times `ρ_j^{-n}`.
pub fn wave_closed_form(fv: &FVector, j: u64) -> Result<Vec<CyclotomicNumber>> {
    if j == 0 || multiplicity(fv.spec(), j) == 0 {
        return Err(Error::NotAWaveIndex(j));
    }
    residue_polynomial_part(fv, RootOfUnity::primitive(j, 1)?, fv.spec().r())
}

/// Polynomial-part coefficients for one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWave {
    pub root: RootOfUnity,
    /// `R_{λ,1}, ..., R_{λ,m(λ)}` at level `order(λ)`.
    pub coeffs: Vec<CyclotomicNumber>,
}

impl RootWave {
    pub fn multiplicity(&self) -> usize {
        self.coeffs.len()
    }

    /// Add `P_λ(n) λ^{-n}` into an accumulator whose level is a multiple of
    /// `order(λ)`.
    fn accumulate(&self, n: u64, acc: &mut GroupRingSum) -> Result<()> {
        let shift = acc.level() / self.root.order();
        let t = -((self.root.exponent() * shift) as i64) * (n % self.root.order()) as i64;
        let n = rational(n);
        let mut power = Rational::one();
        for c in &self.coeffs {
            acc.add_scaled(c, t, &power)?;
            power *= &n;
        }
        Ok(())
    }

    /// `P_λ(n) λ^{-n}` at level `order(λ)`.
    pub fn term(&self, n: u64) -> CyclotomicNumber {
        let mut acc = GroupRingSum::new(self.root.order());
        self.accumulate(n, &mut acc).expect("same level");
        acc.finish()
    }
}

/// Per-root polynomial parts for every root `λ` with `m(λ) >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaveTable {
    spec: TupleSpec,
    roots: Vec<RootWave>,
}

impl WaveTable {
    pub fn new(qp: &QuasiPolynomial) -> Result<Self> {
        let spec = qp.spec();
        let all: Vec<RootOfUnity> = spec
            .wave_indices()
            .into_iter()
            .flat_map(RootOfUnity::all_primitive)
            .collect();
        let roots = all
            .into_par_iter()
            .map(|root| {
                Ok(RootWave {
                    root,
                    coeffs: root_polynomial_part_of(qp, root)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WaveTable {
            spec: spec.clone(),
            roots,
        })
    }

    pub fn spec(&self) -> &TupleSpec {
        &self.spec
    }

    /// Roots ordered by (order, exponent).
    pub fn roots(&self) -> &[RootWave] {
        &self.roots
    }

    pub fn root(&self, root: RootOfUnity) -> Option<&RootWave> {
        self.roots.iter().find(|w| w.root == root)
    }

    fn roots_of_order(&self, j: u64) -> Result<impl Iterator<Item = &RootWave>> {
        if j == 0 || multiplicity(&self.spec, j) == 0 {
            return Err(Error::NotAWaveIndex(j));
        }
        Ok(self.roots.iter().filter(move |w| w.root.order() == j))
    }

    /// `W_j(n)` as a field element at level `j`. In Sylvester mode the value
    /// is checked to be rational.
    pub fn wave(&self, j: u64, n: u64, mode: WaveMode) -> Result<CyclotomicNumber> {
        match mode {
            WaveMode::SingleRoot => {
                let rho = RootOfUnity::primitive(j, 1)?;
                let w = self.roots_of_order(j)?.find(|w| w.root == rho).expect("ρ_j is primitive");
                Ok(w.term(n))
            }
            WaveMode::Sylvester => Ok(CyclotomicNumber::from_rational(j, self.sylvester(j, n)?)),
        }
    }

    /// Rational value of the Sylvester wave `W_j(n)`.
    pub fn sylvester(&self, j: u64, n: u64) -> Result<Rational> {
        let mut acc = GroupRingSum::new(j);
        for w in self.roots_of_order(j)? {
            w.accumulate(n, &mut acc)?;
        }
        acc.finish().as_rational()
    }

    /// `∑_j W_j(n)` over Sylvester waves.
    pub fn reconstruct(&self, n: u64) -> Result<Rational> {
        self.spec
            .wave_indices()
            .into_iter()
            .try_fold(Rational::zero(), |acc, j| Ok(acc + self.sylvester(j, n)?))
    }

    /// `∑_λ P_λ(n) λ^{-n}` with every term lifted to level `D` before the
    /// sum; the total must be rational.
    pub fn reconstruct_lifted(&self, n: u64) -> Result<Rational> {
        let mut acc = GroupRingSum::new(self.spec.period());
        for w in &self.roots {
            w.accumulate(n, &mut acc)?;
        }
        acc.finish().as_rational()
    }
}

/// `p_a(n)` for a pairwise coprime tuple as the polynomial part plus the
/// degree-zero Sylvester waves `j > 1`, whose constants come from the
/// residue grouping.
#[derive(Debug, Clone)]
pub struct PairwiseCoprimeForm {
    polynomial: Vec<Rational>,
    // per j > 1: the constant R_{λ,1} for each primitive j-th root
    waves: Vec<(u64, Vec<(RootOfUnity, CyclotomicNumber)>)>,
}

impl PairwiseCoprimeForm {
    pub fn new(fv: &FVector) -> Result<Self> {
        let spec = fv.spec();
        if !spec.is_pairwise_coprime() {
            return Err(Error::NotPairwiseCoprime);
        }
        let waves = spec
            .wave_indices()
            .into_iter()
            .filter(|&j| j != 1)
            .map(|j| {
                debug_assert_eq!(multiplicity(spec, j), 1);
                let consts = RootOfUnity::all_primitive(j)
                    .map(|root| {
                        let mut c = residue_polynomial_part(fv, root, 1)?;
                        Ok((root, c.remove(0)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((j, consts))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PairwiseCoprimeForm {
            polynomial: polynomial_part(spec),
            waves,
        })
    }

    pub fn eval(&self, n: u64) -> Result<BigInt> {
        let mut total = eval_polynomial(&self.polynomial, &rational(n));
        for (j, consts) in &self.waves {
            let mut acc = GroupRingSum::new(*j);
            for (root, c) in consts {
                let t = -(root.exponent() as i64) * (n % j) as i64;
                acc.add(c, t)?;
            }
            total += acc.finish().as_rational()?;
        }
        if !total.is_integer() {
            return Err(Error::audit(
                "pairwise coprime formula",
                format!("non-integral value at n = {n}"),
            ));
        }
        Ok(total.to_integer())
    }
}

/// One-shot [`PairwiseCoprimeForm`] evaluation.
pub fn pairwise_coprime_partition(fv: &FVector, n: u64) -> Result<BigInt> {
    PairwiseCoprimeForm::new(fv)?.eval(n)
}
