//! Partial fractions of the generating function
//!
//! `∑ p_a(n) z^n = 1/∏(1 - z^{a_i}) = ∑_λ ∑_{l=1}^{m(λ)} c_{λ,l} / (λ - z)^l`.
//!
//! Coefficients are derived from the per-root polynomial parts by a
//! Stirling inversion:
//! `c_{λ,m} = λ^m (m-1)! ∑_{l=m}^{m(λ)} (-1)^{l-m} S(l,m) R_{λ,l}`.
//!
//! The table uses the `(λ - z)^l` convention throughout. Rademacher's
//! coefficients for `a = (1, ..., r)` use `(z - ω)^l` and differ by `(-1)^l`.

use num::{BigInt, Integer, Zero};
use serde::Serialize;

use crate::cyclotomic::{CyclotomicNumber, GroupRingSum, RootOfUnity};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, stirling_partition, Rational};
use crate::partition::{bernoulli_weights, f_vector, quasipolynomial, FVector, TupleSpec};
use crate::waves::{residue_polynomial_part, WaveTable};

/// Stirling inversion from `R_{λ,1..m(λ)}` to `c_{λ,1..m(λ)}`.
fn invert(root: RootOfUnity, polys: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
    let mult = polys.len();
    (1..=mult)
        .map(|m| {
            let mut acc = CyclotomicNumber::zero(root.order());
            for (l, r_l) in polys.iter().enumerate().skip(m - 1) {
                let l = l + 1;
                let mut w = Rational::from_integer(stirling_partition(l, m as i64));
                if (l - m) % 2 == 1 {
                    w = -w;
                }
                acc = &acc + &r_l.scale(&w);
            }
            let scaled = acc.scale(&Rational::from_integer(factorial(m as u64 - 1)));
            &scaled * &root.pow(m as i64)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfdEntry {
    pub root: RootOfUnity,
    /// `c_{λ,1}, ..., c_{λ,m(λ)}` at level `order(λ)`.
    pub coeffs: Vec<CyclotomicNumber>,
}

/// Every coefficient `c_{λ,l}` of the decomposition, roots ordered by
/// (order, exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfdTable {
    spec: TupleSpec,
    entries: Vec<PfdEntry>,
}

pub fn pfd_coefficients(waves: &WaveTable) -> PfdTable {
    let entries = waves
        .roots()
        .iter()
        .map(|w| PfdEntry {
            root: w.root,
            coeffs: invert(w.root, &w.coeffs),
        })
        .collect();
    PfdTable {
        spec: waves.spec().clone(),
        entries,
    }
}

impl PfdTable {
    /// Build every intermediate table for `spec` and decompose.
    pub fn for_spec(spec: &TupleSpec) -> Result<Self> {
        let qp = quasipolynomial(&f_vector(spec));
        Ok(pfd_coefficients(&WaveTable::new(&qp)?))
    }

    pub fn spec(&self) -> &TupleSpec {
        &self.spec
    }

    pub fn entries(&self) -> &[PfdEntry] {
        &self.entries
    }

    /// `c_{λ,l}`, if `λ` is a pole and `1 <= l <= m(λ)`.
    pub fn get(&self, root: RootOfUnity, l: usize) -> Option<&CyclotomicNumber> {
        let entry = self.entries.iter().find(|e| e.root == root)?;
        l.checked_sub(1).and_then(|i| entry.coeffs.get(i))
    }

    /// Flattened rows for output: each coefficient lifted to level `lcm(a)`
    /// so the listing does not depend on the chosen period.
    pub fn rows(&self) -> Vec<PfdRow> {
        let level = self.spec.lcm();
        self.entries
            .iter()
            .flat_map(|e| {
                e.coeffs.iter().enumerate().map(move |(i, c)| PfdRow {
                    root: RootRef {
                        level,
                        power: e.root.power_at(level).expect("pole order divides lcm"),
                    },
                    order: i + 1,
                    coefficient: c.lift(level).expect("pole order divides lcm"),
                    convention: "lambda-minus-z",
                })
            })
            .collect()
    }
}

/// `{"level": L, "power": t}` naming the root `ζ_L^t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootRef {
    pub level: u64,
    pub power: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PfdRow {
    pub root: RootRef,
    pub order: usize,
    pub coefficient: CyclotomicNumber,
    pub convention: &'static str,
}

/// Coefficient of `z^n` in the decomposition:
/// `∑_λ λ^{-n} ∑_l c_{λ,l} λ^{-l} C(n+l-1, l-1)`, summed at level `D` and
/// checked to be rational.
pub fn reexpand(table: &PfdTable, n: u64) -> Result<Rational> {
    let period = table.spec.period();
    let mut acc = GroupRingSum::new(period);
    for e in &table.entries {
        let step = e.root.power_at(period)? as i64;
        for (i, c) in e.coeffs.iter().enumerate() {
            let l = i as u64 + 1;
            let w = Rational::from_integer(binomial(n + l - 1, l as i64 - 1));
            let shift = -step * ((n + l) % e.root.order()) as i64;
            acc.add_scaled(c, shift, &w)?;
        }
    }
    acc.finish().as_rational()
}

/// `c_{ρ_j,m}` from the f-vector alone: the Stirling inversion applied to
/// polynomial parts obtained by residue grouping modulo `j`.
pub fn pfd_closed_form(fv: &FVector, j: u64, m: usize) -> Result<CyclotomicNumber> {
    let mult = fv.spec().multiplicity(j);
    if j == 0 || mult == 0 {
        return Err(Error::NotAWaveIndex(j));
    }
    if m == 0 || m > mult {
        return Err(Error::IndexOutOfRange { index: m, max: mult });
    }
    let root = RootOfUnity::primitive(j, 1)?;
    let polys = residue_polynomial_part(fv, root, mult)?;
    Ok(invert(root, &polys).swap_remove(m - 1))
}

/// Sign rule in the closed form for the coefficients at `λ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitRootSign {
    /// `(-1)^{r-m}` for every term; agrees with the decomposition.
    Uniform,
    /// `(-1)^{l-m}` varying with the summation index; kept for comparison,
    /// it does not reproduce the decomposition (e.g. `-5/4` instead of
    /// `1/4` for `a = (1,2)`, `m = 1`).
    Alternating,
}

/// `c_{1,m}` in closed form:
///
/// `((m-1)!/(a_1...a_r)) (-1)^{r-m} ∑_{l=m}^{r} S(l,m)/(l-1)! ∑_{|i|=r-l} ∏ B_{i_k} a_k^{i_k}/i_k!`
pub fn c_unit_root(spec: &TupleSpec, m: usize) -> Result<Rational> {
    c_unit_root_with(spec, m, UnitRootSign::Uniform)
}

pub fn c_unit_root_with(spec: &TupleSpec, m: usize, sign: UnitRootSign) -> Result<Rational> {
    let r = spec.r();
    if m == 0 || m > r {
        return Err(Error::IndexOutOfRange { index: m, max: r });
    }
    let weights = bernoulli_weights(spec.parts(), r);
    let mut sum = Rational::zero();
    for l in m..=r {
        let mut term = Rational::new(stirling_partition(l, m as i64), factorial(l as u64 - 1)) * &weights[r - l];
        if sign == UnitRootSign::Alternating && (l - m) % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    let mut out = sum * Rational::new(factorial(m as u64 - 1), BigInt::from(spec.product()));
    if sign == UnitRootSign::Uniform && (r - m) % 2 == 1 {
        out = -out;
    }
    Ok(out)
}

/// Rademacher's coefficients `c_{hkl}(r)` of `1/((1-z)(1-z^2)...(1-z^r))`
/// in the `(z - ω_{hk})^l` convention, `ω_{hk} = e^{2πi h/k}`.
#[derive(Debug, Clone)]
pub struct RademacherTable {
    r: usize,
    table: PfdTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RademacherRow {
    pub h: u64,
    pub k: u64,
    pub l: usize,
    pub coefficient: CyclotomicNumber,
    /// Present when the coefficient is rational.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_rational")]
    pub value: Option<Rational>,
    pub convention: &'static str,
}

fn serialize_opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => crate::exact::serde_rational::serialize(q, s),
        None => s.serialize_none(),
    }
}

impl RademacherTable {
    pub fn new(r: usize) -> Result<Self> {
        Self::with_period(r, None)
    }

    pub fn with_period(r: usize, period: Option<u64>) -> Result<Self> {
        if r == 0 {
            return Err(Error::EmptyTuple);
        }
        let parts: Vec<u64> = (1..=r as u64).collect();
        let spec = TupleSpec::with_period(&parts, period)?;
        Ok(RademacherTable {
            r,
            table: PfdTable::for_spec(&spec)?,
        })
    }

    pub fn pfd(&self) -> &PfdTable {
        &self.table
    }

    /// `c_{hkl}(r) = (-1)^l c_{ω_{hk}, l}`.
    pub fn get(&self, h: u64, k: u64, l: usize) -> Result<CyclotomicNumber> {
        let r = self.r;
        let bad = Error::BadIndex { r, h, k, l };
        if k == 0 || h >= k || k > r as u64 || h.gcd(&k) != 1 || l == 0 || l > r / k as usize {
            return Err(bad);
        }
        let root = RootOfUnity::primitive(k, h).map_err(|_| bad.clone())?;
        let c = self.table.get(root, l).ok_or(bad)?;
        Ok(if l % 2 == 1 { -c } else { c.clone() })
    }

    /// Every coefficient, ordered by `k`, then `h`, then `l`, at level
    /// `lcm(1..r)`.
    pub fn rows(&self) -> Result<Vec<RademacherRow>> {
        let level = self.table.spec().lcm();
        let mut out = Vec::new();
        for k in 1..=self.r as u64 {
            for h in (0..k).filter(|h| h.gcd(&k) == 1) {
                for l in 1..=self.r / k as usize {
                    let c = self.get(h, k, l)?;
                    out.push(RademacherRow {
                        h,
                        k,
                        l,
                        value: c.as_rational().ok(),
                        coefficient: c.lift(level)?,
                        convention: "z-minus-omega",
                    });
                }
            }
        }
        Ok(out)
    }
}

/// `c_{hkl}(r)` for a single index triple.
pub fn rademacher(r: usize, h: u64, k: u64, l: usize) -> Result<CyclotomicNumber> {
    RademacherTable::new(r)?.get(h, k, l)
}

/// `c_{01m}(r) = ((-1)^r (m-1)!/r!) ∑_{l=m}^{r} S(l,m)/(l-1)! ∑_{|i|=r-l} ∏ B_{i_k} k^{i_k}/i_k!`
pub fn rademacher_unit_closed_form(r: usize, m: usize) -> Result<Rational> {
    if m == 0 || m > r {
        return Err(Error::IndexOutOfRange { index: m, max: r });
    }
    let parts: Vec<u64> = (1..=r as u64).collect();
    let weights = bernoulli_weights(&parts, r);
    let sum: Rational = (m..=r)
        .map(|l| Rational::new(stirling_partition(l, m as i64), factorial(l as u64 - 1)) * &weights[r - l])
        .sum();
    let out = sum * Rational::new(factorial(m as u64 - 1), factorial(r as u64));
    Ok(if r % 2 == 1 { -out } else { out })
}

/// `c_{λ,l} / λ^l`, used when re-expanding a single root.
pub fn normalized(root: RootOfUnity, l: usize, c: &CyclotomicNumber) -> CyclotomicNumber {
    c * &root.pow(-(l as i64))
}

impl PfdEntry {
    /// `P_λ(n) = ∑_l (c_{λ,l}/λ^l) C(n+l-1, l-1)` at level `order(λ)`.
    pub fn polynomial_at(&self, n: u64) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero(self.root.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            let l = i + 1;
            let w = Rational::from_integer(binomial(n + l as u64 - 1, l as i64 - 1));
            acc = &acc + &normalized(self.root, l, c).scale(&w);
        }
        acc
    }
}
