//! Relevant algebras: the `e`-free reducts of De Morgan monoids, with their
//! own deductive filters and the reconstruction of a neutral element.

mod algebra;
mod filters;
mod io;
mod neutral;

pub use algebra::{e_free_reduct, validate_ra, FiniteRa};
pub use filters::{
    dfg_oracle, dfg_ra, dfg_ra_set, meet_property_check, ra_classify, ra_congruence_lattice, ra_congruence_violation,
    ra_filters, ra_omega, MeetPropertyReport, RaClassification, RaCongruenceLattice, RaDeductiveFilter,
};
pub use io::{ra_from_json, read_ra_file, write_ra_file, RaDoc};
pub use neutral::{contains_two_reduct, ra_subuniverses, reconstruct_neutral};
