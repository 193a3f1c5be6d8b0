//! Exact integer and rational arithmetic, plus the classical number
//! sequences (binomials, Bernoulli and Stirling numbers) used throughout
//! the crate.
//!
//! Nothing in this module touches floating point. Tables that grow with
//! use (Bernoulli numbers, Stirling triangles) are memoized behind locks
//! and may be queried from any thread.

mod numbers;
mod poly;
mod rational;

pub use numbers::{
    bernoulli, binomial, factorial, shifted_factorial_coeffs, stirling_cycle,
    stirling_partition,
};
pub use poly::IntPolynomial;
pub use rational::{format_rational, parse_rational, Rational};

pub(crate) use rational::serde_rational;
