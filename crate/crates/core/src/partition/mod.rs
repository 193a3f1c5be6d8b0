//! The restricted partition function `p_a(n)`: the counting oracle, the
//! f-vector of the box polynomial, and the closed forms built on it.

mod counting;
mod fvector;
mod quasi;
mod spec;

pub use counting::{
    congruence_data, f_by_alternating_product, f_from_partition, f_from_partition_table,
    oracle_count, oracle_table, partition_from_f, partition_product_formula, vanishing_test,
    Congruence,
};
pub use fvector::{expected_mass, f_vector, FVector};
pub use quasi::{eval_polynomial, polynomial_part, quasipolynomial, QuasiPolynomial};
pub use spec::{TupleSpec, DEFAULT_PERIOD_CAP};

pub(crate) use quasi::bernoulli_weights;
