//! Finite model workbench for involutive residuated lattices, De Morgan
//! monoids, Sugihara monoids and relevant algebras.
//!
//! Algebras are operation tables over `0..n`. The crate validates the axioms,
//! evaluates an equational term language over them, computes deductive
//! filters, congruences, quotients and homomorphisms, enumerates all small
//! De Morgan monoids up to isomorphism and re-checks the structure theorems of
//! the theory on the resulting catalogs.

pub mod algebra;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod filters;
pub mod relevant;
pub mod structure;
pub mod term;

pub use algebra::{Element, ElementSet, FiniteIrl};
pub use error::{Error, Result};
