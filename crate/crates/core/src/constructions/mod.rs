//! Named algebras and the closure constructions: products, subalgebras,
//! homomorphisms, isomorphism and membership in HS.

mod homs;
mod hs;
mod iso;
mod named;
mod product;
mod subalgebra;

pub use homs::{find_embedding, find_isomorphism, hom_violation, homs, Homomorphism};
pub use hs::hs_contains;
pub use iso::{canonical_form, canonical_labelling, canonicalize, is_isomorphic, CanonicalForm};
pub use named::{c4, d4, make_named, rigorous_extension, rigorous_extensions, sugihara, trivial, two, MINIMAL};
pub use product::direct_product;
pub use subalgebra::{is_zero_generated, sg, sg_universe, subalgebra_on, subuniverses, zero_generated, Subalgebra};

pub use crate::relevant::e_free_reduct;
