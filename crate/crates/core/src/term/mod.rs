//! Equational language over the IRL signature: terms, (in)equations and
//! quasi-equations, with a parser, printer, evaluator and a library of named
//! laws and axioms.

mod ast;
mod eval;
mod library;
mod parse;
mod print;
mod random;

pub use ast::{Atom, Constant, Parsed, Relation, Statement, Term};
pub use eval::{evaluate, satisfies, satisfies_all, satisfies_capped, Satisfaction, DEFAULT_VARIABLE_LIMIT};
pub use library::{library, LawEntry, LawLibrary, Scope};
pub use parse::{parse, parse_statement, parse_statement_lines, parse_term};
pub use random::random_term;
