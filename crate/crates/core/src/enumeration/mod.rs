//! Exhaustive search for finite involutive residuated lattices up to
//! isomorphism, catalog files, and the theorem harness run over catalogs.

mod catalog;
mod fusion;
mod harness;
mod lattices;
mod search;

pub use catalog::{read_catalog, write_catalog, Catalog, CatalogHeader, ClassFlags, SearchSpec, PREDICATE_NAMES};
pub use harness::{
    axiomatization_check, theorem_harness, AxiomatizationReport, AxiomatizationRow, HarnessReport, TheoremResult,
};
pub use lattices::{antitone_involutions, lattices};
pub use search::{enumerate, enumerate_with, EnumerateOptions, EnumerationStats, DEFAULT_MAX_SIZE};
