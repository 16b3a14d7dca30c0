//! Exact computations around the k-fold tensor power of the adjoint module
//! of sl_n: closed-form multiplicities, derangement identities, the walled
//! Brauer algebra B_{k,k}(n) and its sandwich subalgebra, an explicit model of
//! V^{⊗k} ⊗ (V*)^{⊗k}, and a brute-force character oracle.
//!
//! All arithmetic is exact (`BigUint`, `BigInt`, `BigRational`).

pub mod character_oracle;
pub mod derangements;
pub mod error;
pub mod linalg;
pub mod multiplicity;
pub mod partitions;
pub mod symmetric_group;
pub mod tensor_model;
pub mod walled_brauer;

pub use error::{Error, Result};
pub use partitions::{Partition, StandardTableau};

use serde::Serializer;

/// Serializes any displayable number as a decimal string.
pub fn serialize_decimal<T: std::fmt::Display, S: Serializer>(value: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(value)
}
