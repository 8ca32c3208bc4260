//! Structure of finitely subdirectly irreducible De Morgan monoids as
//! executable checks: splitting around `e` and `f`, bounds of generated
//! subalgebras, the interval-plus-chains decomposition, the fusion pattern
//! above `f` and the odd Sugihara quotient.

mod checks;
mod hasse;

pub use checks::{
    bounds_of_generated, embed_c4_if_e_below_f, fusion_pattern_check, idempotent_order_facts, lollipop,
    odd_sugihara_quotient, onto_zero_generated_check, splitting_check, BoundsCertificate, Check, LollipopReport,
    OddSugiharaReport,
};
pub use hasse::{render_hasse, render_lollipop};
