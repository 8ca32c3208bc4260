//! Named laws and axioms as parsed statements.
//!
//! Biconditional laws are stored as the list of quasi-equations they amount
//! to. Laws that quantify over filters or generated subalgebras have no
//! entry.

use std::sync::OnceLock;

use super::ast::Statement;
use super::parse::parse_statement;

#[derive(Clone, Debug)]
pub struct LawEntry {
    pub key: &'static str,
    pub description: &'static str,
    /// Source text, one string per statement.
    pub sources: Vec<&'static str>,
    pub statements: Vec<Statement>,
    /// Valid in every IRL (false: only in square-increasing IRLs, or an axiom).
    pub scope: Scope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Holds in every involutive residuated lattice.
    Irl,
    /// Holds in every square-increasing IRL.
    SquareIncreasing,
    /// An extra axiom; holds only in some algebras.
    Axiom,
}

const ENTRIES: &[(&str, Scope, &str, &[&str])] = &[
    ("law-1", Scope::Irl, "involution-fusion law", &["x * y <= z => ~z * y <= ~x", "~z * y <= ~x => x * y <= z"]),
    ("law-2", Scope::Irl, "residuation", &["x * y <= z => y <= x -> z", "y <= x -> z => x * y <= z"]),
    ("law-3", Scope::Irl, "negation via residual", &["~x = x -> f", "x -> y = ~y -> ~x", "x * y = ~(x -> ~y)"]),
    ("law-4", Scope::Irl, "modus ponens", &["x * (x -> y) <= y", "x <= (x -> y) -> y"]),
    ("law-5", Scope::Irl, "permutation", &["x * y -> z = y -> x -> z", "y -> x -> z = x -> y -> z"]),
    ("law-6", Scope::Irl, "transitivity", &["(x -> y) * (y -> z) <= x -> z"]),
    ("law-7", Scope::Irl, "fusion distributes over join", &["x * (y \\/ z) = x * y \\/ x * z"]),
    (
        "law-8",
        Scope::Irl,
        "isotonicity",
        &["x <= y => x * z <= y * z", "x <= y => z -> x <= z -> y", "x <= y => y -> z <= x -> z"],
    ),
    ("law-9", Scope::Irl, "order via e", &["x <= y => e <= x -> y", "e <= x -> y => x <= y"]),
    ("law-10", Scope::Irl, "equality via e", &["x = y => e <= x <-> y", "e <= x <-> y => x = y"]),
    ("law-11", Scope::Irl, "identity", &["e <= x -> x", "e -> x = x"]),
    ("law-12", Scope::Irl, "positive elements", &["e <= x => x -> x <= x", "x -> x <= x => e <= x"]),
    ("law-13", Scope::SquareIncreasing, "meet below fusion", &["x /\\ y <= x * y"]),
    ("law-14", Scope::SquareIncreasing, "fusion below e is meet", &["x <= e & y <= e => x * y = x /\\ y"]),
    ("law-15", Scope::SquareIncreasing, "excluded middle", &["e <= x \\/ ~x"]),
    ("law-16", Scope::SquareIncreasing, "above f", &["f <= x => x -> ~x <= x^2 -> x"]),
    ("lemma-cube", Scope::SquareIncreasing, "cubes above f", &["f <= x => x^3 = x^2"]),
    (
        "lemma-3-conditions",
        Scope::Irl,
        "three equivalent conditions",
        &[
            "e <= x & x^2 = x => x * ~x = ~x",
            "x * ~x = ~x => x = x -> x",
            "x = x -> x => e <= x",
            "x = x -> x => x^2 = x",
        ],
    ),
    ("de-morgan", Scope::Irl, "De Morgan laws", &["~(x /\\ y) = ~x \\/ ~y", "~(x \\/ y) = ~x /\\ ~y"]),
    ("ax-x-le-e", Scope::Axiom, "integrality", &["x <= e"]),
    ("ax-e-eq-f", Scope::Axiom, "oddness", &["e = f"]),
    ("ax-e-le-f", Scope::Axiom, "e below f", &["e <= f"]),
    ("ax-anti-idem", Scope::Axiom, "anti-idempotence", &["x <= f^2"]),
    ("ax-semilinear", Scope::Axiom, "semilinearity", &["e <= (x -> y) \\/ (y -> x)"]),
    ("ax-S3", Scope::Axiom, "S3 axiom", &["e <= (x -> (y \\/ ~y)) \\/ (y /\\ ~y)"]),
    ("ax-D41", Scope::Axiom, "Kleene condition", &["x /\\ ~x <= y"]),
    ("ax-D42", Scope::Axiom, "D4 axiom", &["e <= (f^2 -> x) \\/ (x -> e) \\/ ~x"]),
    ("ax-C41", Scope::Axiom, "first C4 axiom", &["x /\\ (x -> f) <= (f -> x) \\/ (x -> e)"]),
    ("ax-C42", Scope::Axiom, "second C4 axiom", &["x -> e <= x \\/ (f^2 -> ~x)"]),
];

/// Axiom sets that, added to the De Morgan monoid axioms, single out the
/// varieties generated by 2, S3, C4 and D4.
const AXIOM_SETS: &[(&str, &[&str])] = &[
    ("2", &["ax-x-le-e"]),
    ("S3", &["ax-e-eq-f", "ax-semilinear", "ax-S3"]),
    ("D4", &["ax-anti-idem", "ax-D41", "ax-D42"]),
    ("C4", &["ax-anti-idem", "ax-e-le-f", "ax-semilinear", "ax-C41", "ax-C42"]),
];

#[derive(Debug)]
pub struct LawLibrary {
    entries: Vec<LawEntry>,
}

impl LawLibrary {
    fn build() -> Self {
        let entries = ENTRIES
            .iter()
            .map(|&(key, scope, description, sources)| LawEntry {
                key,
                description,
                sources: sources.to_vec(),
                statements: sources
                    .iter()
                    .map(|s| parse_statement(s).unwrap_or_else(|e| panic!("library entry {key}: {e}")))
                    .collect(),
                scope,
            })
            .collect();
        LawLibrary { entries }
    }

    pub fn entries(&self) -> &[LawEntry] {
        &self.entries
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.key)
    }

    pub fn get(&self, key: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    /// The first statement of an entry. Panics on an unknown key.
    pub fn statement(&self, key: &str) -> &Statement {
        &self.get(key).unwrap_or_else(|| panic!("no library entry {key}")).statements[0]
    }

    /// All statements of the axiom set for `name` (one of 2, S3, C4, D4).
    pub fn axiom_set(&self, name: &str) -> Option<Vec<&Statement>> {
        let (_, keys) = AXIOM_SETS.iter().find(|(n, _)| *n == name)?;
        Some(keys.iter().flat_map(|k| self.get(k).expect("axiom key").statements.iter()).collect())
    }

    pub fn axiom_set_keys(&self, name: &str) -> Option<&'static [&'static str]> {
        AXIOM_SETS.iter().find(|(n, _)| *n == name).map(|(_, k)| *k)
    }

    /// Entries with the given scope.
    pub fn with_scope(&self, scope: Scope) -> impl Iterator<Item = &LawEntry> + '_ {
        self.entries.iter().filter(move |e| e.scope == scope)
    }
}

pub fn library() -> &'static LawLibrary {
    static LIB: OnceLock<LawLibrary> = OnceLock::new();
    LIB.get_or_init(LawLibrary::build)
}
