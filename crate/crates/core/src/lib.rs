//! Exact restricted partition functions.
//!
//! `p_a(n)` counts the non-negative solutions of `a_1 x_1 + ... + a_r x_r = n`.
//! This crate computes it, its quasi-polynomial coefficients, Sylvester
//! waves, partial fraction coefficients, divisibility congruences and
//! Frobenius numbers in exact arithmetic (big rationals and cyclotomic
//! fields). Every closed form can be cross-checked against a counting oracle
//! with [`audit::verify`].
//!
//! ```
//! use denumerant::partition::{f_vector, oracle_count, quasipolynomial, TupleSpec};
//!
//! let spec = TupleSpec::new(&[2, 3, 5]).unwrap();
//! let qp = quasipolynomial(&f_vector(&spec));
//! assert_eq!(qp.eval(37), oracle_count(&spec, 37).into());
//! ```
//!
//! The guide in `book/` walks through each module; its code blocks run as
//! doc-tests of this crate.

pub mod audit;
pub mod cache;
pub mod cyclotomic;
pub mod error;
pub mod exact;
pub mod frobenius;
pub mod partition;
pub mod pfd;
pub mod waves;

// Compile and run the book's code blocks with `cargo test --doc`. One module
// per chapter so a failure points at its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/quasi-polynomials.md")]
    mod quasi_polynomials {}
    #[doc = include_str!("../../../book/src/waves.md")]
    mod waves {}
    #[doc = include_str!("../../../book/src/partial-fractions.md")]
    mod partial_fractions {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
}
