//! The Frobenius number: the largest `n` with `p_a(n) = 0`.
//!
//! When every `n >= 0` is representable (for instance when `1` is an entry)
//! the Frobenius number is reported as `-1`.

use num::Zero;

use crate::error::{Error, Result};
use crate::partition::{f_vector, oracle_table, vanishing_test, FVector, TupleSpec};

fn require_gcd_one(spec: &TupleSpec) -> Result<()> {
    match spec.gcd() {
        1 => Ok(()),
        g => Err(Error::GcdNotOne(g)),
    }
}

/// `L (r - 1) - σ` with `L = lcm(a)`, an upper bound for the Frobenius
/// number. Uses the lcm even when the `TupleSpec` carries a larger period, so the
/// bound is a property of the tuple alone.
pub fn frobenius_bound(spec: &TupleSpec) -> Result<i64> {
    require_gcd_one(spec)?;
    Ok(spec.lcm() as i64 * (spec.r() as i64 - 1) - spec.sigma() as i64)
}

/// Scan down from the bound with the f-vector vanishing test, then confirm
/// the answer once against the counting oracle.
pub fn frobenius_number(fv: &FVector) -> Result<i64> {
    let spec = fv.spec();
    let bound = frobenius_bound(spec)?;
    let found = (0..=bound.max(-1))
        .rev()
        .find(|&n| vanishing_test(fv, n as u64))
        .unwrap_or(-1);
    if bound >= 0 {
        let table = oracle_table(spec, bound as u64);
        let found_vanishes = found < 0 || table[found as usize].is_zero();
        let above_positive = table.iter().skip((found + 1) as usize).all(|p| !p.is_zero());
        if !(found_vanishes && above_positive) {
            return Err(Error::audit(
                "frobenius scan",
                format!("vanishing test and counting oracle disagree near {found}"),
            ));
        }
    }
    Ok(found)
}

/// For pairwise coprime `a` with `D = a_1...a_r`, the dual tuple
/// `A_i = D / a_i` and its Frobenius number `D (r - 1) - ∑ A_i`.
pub fn frobenius_dual_closed_form(parts: &[u64]) -> Result<(TupleSpec, i64)> {
    let spec = TupleSpec::new(parts)?;
    if !spec.is_pairwise_coprime() {
        return Err(Error::NotPairwiseCoprime);
    }
    let product = spec.lcm();
    let dual_parts: Vec<u64> = parts.iter().map(|a| product / a).collect();
    let dual = TupleSpec::new(&dual_parts)?;
    let value = product as i64 * (parts.len() as i64 - 1) - dual.sigma() as i64;
    Ok((dual, value))
}

/// Convenience: Frobenius number of a tuple given by its entries.
pub fn frobenius_of(parts: &[u64]) -> Result<i64> {
    frobenius_number(&f_vector(&TupleSpec::new(parts)?))
}
