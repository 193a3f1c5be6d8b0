//! Cross-checks every closed form against the counting oracle and against
//! each other for one tuple. This is what `denumerant verify` runs.

use std::ops::RangeInclusive;

use num::{BigInt, One};
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::RootOfUnity;
use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};
use crate::frobenius::{frobenius_bound, frobenius_dual_closed_form, frobenius_number};
use crate::partition::{
    congruence_data, expected_mass, f_by_alternating_product, f_from_partition_table, f_vector,
    oracle_table, partition_from_f, partition_product_formula, polynomial_part, quasipolynomial,
    vanishing_test, FVector, QuasiPolynomial, TupleSpec,
};
use crate::pfd::{c_unit_root, pfd_closed_form, pfd_coefficients, rademacher_unit_closed_form, reexpand, PfdTable};
use crate::waves::{check_degree_bounds, wave_closed_form, PairwiseCoprimeForm, WaveTable};

/// Largest dual-tuple period for which the dual Frobenius check runs.
const DUAL_PERIOD_LIMIT: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply to this tuple.
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: Status,
    /// First `n` (or index) at which the identity failed, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub tuple: Vec<u64>,
    pub nmax: u64,
    pub checks: Vec<CheckOutcome>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Shared tables for all checks on one tuple.
struct Context {
    spec: TupleSpec,
    nmax: u64,
    fv: FVector,
    qp: QuasiPolynomial,
    waves: Result<WaveTable>,
    pfd: Result<PfdTable>,
    counts: Vec<BigInt>,
}

impl Context {
    fn new(spec: &TupleSpec, nmax: u64) -> Self {
        let fv = f_vector(spec);
        let qp = quasipolynomial(&fv);
        let waves = WaveTable::new(&qp);
        let pfd = waves.as_ref().map(pfd_coefficients).map_err(Clone::clone);
        let horizon = nmax.max(spec.top_degree() + 3 * spec.period());
        Context {
            spec: spec.clone(),
            nmax,
            counts: oracle_table(spec, horizon),
            fv,
            qp,
            waves,
            pfd,
        }
    }

    fn count(&self, n: u64) -> &BigInt {
        &self.counts[n as usize]
    }

    fn count_q(&self, n: u64) -> Rational {
        Rational::from_integer(self.count(n).clone())
    }
}

enum Verdict {
    Pass,
    Skip(String),
    FailAt(u64, String),
    Fail(String),
}

fn scan(range: RangeInclusive<u64>, mut ok: impl FnMut(u64) -> Result<Option<String>>) -> Verdict {
    for n in range {
        match ok(n) {
            Ok(None) => {}
            Ok(Some(msg)) => return Verdict::FailAt(n, msg),
            Err(e) => return Verdict::FailAt(n, e.to_string()),
        }
    }
    Verdict::Pass
}

fn mismatch<T: std::fmt::Display>(what: &str, got: &T, want: &T) -> Option<String> {
    Some(format!("{what}: got {got}, expected {want}"))
}

fn check_counting(cx: &Context) -> Verdict {
    scan(0..=cx.nmax, |n| {
        let want = cx.count(n);
        let product = partition_product_formula(&cx.fv, n);
        if &product != want {
            return Ok(mismatch("product formula", &product, want));
        }
        let from_f = partition_from_f(&cx.fv, n);
        if &from_f != want {
            return Ok(mismatch("from f-vector", &from_f, want));
        }
        let quasi = cx.qp.eval(n);
        if quasi != cx.count_q(n) {
            return Ok(mismatch("quasi-polynomial", &quasi, &cx.count_q(n)));
        }
        Ok(None)
    })
}

fn check_f_laws(cx: &Context) -> Verdict {
    let f = cx.fv.coeffs();
    if !f[0].is_one() {
        return Verdict::FailAt(0, "f(0) != 1".into());
    }
    if let Some(n) = (0..f.len()).find(|&n| f[n] != f[f.len() - 1 - n]) {
        return Verdict::FailAt(n as u64, "reciprocity".into());
    }
    let mass: BigInt = f.iter().sum();
    if mass != expected_mass(&cx.spec) {
        return Verdict::Fail(format!("mass {mass}, expected {}", expected_mass(&cx.spec)));
    }
    Verdict::Pass
}

fn check_f_round_trip(cx: &Context) -> Verdict {
    let top = cx.spec.top_degree() + 3 * cx.spec.period();
    scan(0..=top, |n| {
        let got = f_from_partition_table(&cx.spec, &cx.counts, n);
        Ok((&got != cx.fv.get(n)).then(|| format!("alternating sum gives {got}, f(n) = {}", cx.fv.get(n))))
    })
}

fn check_f_alternating_product(cx: &Context) -> Verdict {
    scan(0..=cx.spec.top_degree(), |n| {
        let got = f_by_alternating_product(&cx.fv, n);
        Ok(mismatch("expansion", &got, cx.fv.get(n)).filter(|_| &got != cx.fv.get(n)))
    })
}

fn check_polynomial_part(cx: &Context) -> Verdict {
    let waves = match &cx.waves {
        Ok(w) => w,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    let pp = polynomial_part(&cx.spec);
    let first = &waves.root(RootOfUnity::ONE).expect("λ = 1 is always a pole").coeffs;
    for (m, c) in pp.iter().enumerate() {
        if c != &cx.qp.average(m) {
            return Verdict::FailAt(m as u64, format!("average of d_{m} is {}", cx.qp.average(m)));
        }
        match first[m].as_rational() {
            Ok(w) if &w == c => {}
            _ => return Verdict::FailAt(m as u64, format!("first wave coefficient {}", first[m])),
        }
    }
    Verdict::Pass
}

fn check_degree(cx: &Context) -> Verdict {
    match check_degree_bounds(&cx.qp) {
        Ok(()) => Verdict::Pass,
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn check_reconstruction(cx: &Context) -> Verdict {
    let waves = match &cx.waves {
        Ok(w) => w,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    scan(0..=cx.nmax, |n| {
        let want = cx.count_q(n);
        let total = waves.reconstruct(n)?;
        if total != want {
            return Ok(mismatch("sum of Sylvester waves", &total, &want));
        }
        let lifted = waves.reconstruct_lifted(n)?;
        Ok(mismatch("sum over roots at level D", &lifted, &want).filter(|_| lifted != want))
    })
}

fn check_wave_closed_form(cx: &Context) -> Verdict {
    let waves = match &cx.waves {
        Ok(w) => w,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    for j in cx.spec.wave_indices() {
        let closed = match wave_closed_form(&cx.fv, j) {
            Ok(c) => c,
            Err(e) => return Verdict::FailAt(j, e.to_string()),
        };
        let rho = RootOfUnity::primitive(j, 1).expect("valid");
        let direct = &waves.root(rho).expect("pole").coeffs;
        let agrees = closed
            .iter()
            .enumerate()
            .all(|(i, c)| direct.get(i).map_or(c.is_zero(), |d| d == c));
        if !agrees {
            return Verdict::FailAt(j, "residue grouping disagrees with root averages".into());
        }
    }
    Verdict::Pass
}

fn check_reexpansion(cx: &Context) -> Verdict {
    let table = match &cx.pfd {
        Ok(t) => t,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    scan(0..=cx.nmax, |n| {
        let got = reexpand(table, n)?;
        Ok(mismatch("re-expansion", &got, &cx.count_q(n)).filter(|_| got != cx.count_q(n)))
    })
}

fn check_pfd_closed_form(cx: &Context) -> Verdict {
    let table = match &cx.pfd {
        Ok(t) => t,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    for j in cx.spec.wave_indices() {
        let rho = RootOfUnity::primitive(j, 1).expect("valid");
        for m in 1..=cx.spec.multiplicity(j) {
            match pfd_closed_form(&cx.fv, j, m) {
                Ok(c) if Some(&c) == table.get(rho, m) => {}
                Ok(c) => return Verdict::FailAt(j, format!("c_(rho_{j},{m}) = {c} by residues")),
                Err(e) => return Verdict::FailAt(j, e.to_string()),
            }
        }
    }
    Verdict::Pass
}

fn check_unit_root(cx: &Context) -> Verdict {
    let table = match &cx.pfd {
        Ok(t) => t,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    for m in 1..=cx.spec.r() {
        let closed = match c_unit_root(&cx.spec, m) {
            Ok(c) => c,
            Err(e) => return Verdict::FailAt(m as u64, e.to_string()),
        };
        let from_table = table.get(RootOfUnity::ONE, m).and_then(|c| c.as_rational().ok());
        if from_table.as_ref() != Some(&closed) {
            return Verdict::FailAt(m as u64, format!("closed form {closed}"));
        }
    }
    Verdict::Pass
}

fn check_rademacher(cx: &Context) -> Verdict {
    let r = cx.spec.r();
    let parts: Vec<u64> = (1..=r as u64).collect();
    let spec = match TupleSpec::new(&parts) {
        Ok(s) => s,
        Err(e) => return Verdict::Skip(e.to_string()),
    };
    for m in 1..=r {
        let (closed, unit) = match (rademacher_unit_closed_form(r, m), c_unit_root(&spec, m)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Verdict::FailAt(m as u64, e.to_string()),
        };
        let signed = if m % 2 == 1 { -unit } else { unit };
        if closed != signed {
            return Verdict::FailAt(m as u64, format!("{closed} vs {signed}"));
        }
    }
    Verdict::Pass
}

fn check_congruence(cx: &Context) -> Verdict {
    let scale = factorial(cx.spec.r() as u64 - 1);
    scan(0..=cx.nmax, |n| {
        let c = congruence_data(&cx.fv, n);
        let want = &scale * cx.count(n);
        if c.value != want {
            return Ok(mismatch("(r-1)! p(n)", &c.value, &want));
        }
        Ok((!c.holds()).then(|| format!("{} does not divide {}", c.modulus, c.value)))
    })
}

fn check_frobenius_bound(cx: &Context) -> Verdict {
    let bound = match frobenius_bound(&cx.spec) {
        Ok(b) => b,
        Err(Error::GcdNotOne(g)) => return Verdict::Skip(format!("gcd is {g}")),
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    let number = match frobenius_number(&cx.fv) {
        Ok(f) => f,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    if number > bound {
        return Verdict::Fail(format!("Frobenius number {number} exceeds bound {bound}"));
    }
    let start = (bound + 1).max(0) as u64;
    scan(start..=start + 2 * cx.spec.lcm(), |n| {
        Ok(vanishing_test(&cx.fv, n).then(|| "vanishes beyond the bound".to_string()))
    })
}

fn check_frobenius_dual(cx: &Context) -> Verdict {
    if !cx.spec.is_pairwise_coprime() {
        return Verdict::Skip("entries not pairwise coprime".into());
    }
    if cx.spec.product() > DUAL_PERIOD_LIMIT as u128 {
        return Verdict::Skip(format!("dual period exceeds {DUAL_PERIOD_LIMIT}"));
    }
    let (dual, closed) = match frobenius_dual_closed_form(cx.spec.parts()) {
        Ok(x) => x,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    match frobenius_number(&f_vector(&dual)) {
        Ok(f) if f == closed => Verdict::Pass,
        Ok(f) => Verdict::Fail(format!("closed form {closed}, scan {f}")),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn check_pairwise_formula(cx: &Context) -> Verdict {
    if !cx.spec.is_pairwise_coprime() {
        return Verdict::Skip("entries not pairwise coprime".into());
    }
    let form = match PairwiseCoprimeForm::new(&cx.fv) {
        Ok(f) => f,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    scan(0..=cx.nmax, |n| {
        let got = form.eval(n)?;
        Ok(mismatch("pairwise coprime formula", &got, cx.count(n)).filter(|_| &got != cx.count(n)))
    })
}

type Check = (&'static str, fn(&Context) -> Verdict);

const CHECKS: &[Check] = &[
    ("counting: oracle = product formula = from f-vector = quasi-polynomial", check_counting),
    ("f-vector: f(0) = 1, reciprocity, total mass", check_f_laws),
    ("f-vector: alternating sum of counts", check_f_round_trip),
    ("f-vector: alternating product expansion", check_f_alternating_product),
    ("polynomial part: Bernoulli form = row averages = first wave", check_polynomial_part),
    ("waves: degree bound at every root", check_degree),
    ("waves: reconstruction of p(n)", check_reconstruction),
    ("waves: residue grouping = root averages", check_wave_closed_form),
    ("partial fractions: re-expansion equals p(n)", check_reexpansion),
    ("partial fractions: residue closed form", check_pfd_closed_form),
    ("partial fractions: unit-root closed form", check_unit_root),
    ("rademacher: closed form = (-1)^m c_(1,m)", check_rademacher),
    ("congruence: modulus divides (r-1)! p(n)", check_congruence),
    ("frobenius: bound and vanishing beyond it", check_frobenius_bound),
    ("frobenius: dual closed form", check_frobenius_dual),
    ("pairwise coprime formula", check_pairwise_formula),
];

/// Run every check for `spec` with counts compared up to `nmax`. Checks run
/// in parallel; the report lists them in a fixed order.
pub fn verify(spec: &TupleSpec, nmax: u64) -> AuditReport {
    let cx = Context::new(spec, nmax);
    let checks = CHECKS
        .par_iter()
        .map(|(name, run)| {
            let (status, first_failure, detail) = match run(&cx) {
                Verdict::Pass => (Status::Pass, None, None),
                Verdict::Skip(why) => (Status::Skip, None, Some(why)),
                Verdict::FailAt(n, why) => (Status::Fail, Some(n), Some(why)),
                Verdict::Fail(why) => (Status::Fail, None, Some(why)),
            };
            CheckOutcome {
                name,
                status,
                first_failure,
                detail,
            }
        })
        .collect();
    AuditReport {
        tuple: spec.parts().to_vec(),
        nmax,
        checks,
    }
}
