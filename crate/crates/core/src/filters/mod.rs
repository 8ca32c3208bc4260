//! Deductive filters, congruences, quotients and the FSI / SI / simple
//! classification.

mod classify;
mod congruence;
mod filter;

pub use classify::{classify, order_criteria, Classification, OrderCriteria};
pub use congruence::{
    congruence_generated, congruence_lattice, congruence_violation, congruences_bruteforce, filter_of, omega, quotient,
    quotient_by, Congruence, CongruenceLattice, Quotient,
};
pub use filter::{deductive_filters, deductive_filters_principal, dfg, DeductiveFilter};
