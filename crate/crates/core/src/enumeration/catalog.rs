use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{predicates, AlgebraDoc, FiniteIrl};
use crate::constructions::is_zero_generated;
use crate::error::{Error, Result};
use crate::filters::classify;

/// Which class of algebras to enumerate. `dmm` implies the other two
/// restrictions; `irl` is always on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub irl: bool,
    pub square_increasing: bool,
    pub distributive: bool,
    pub dmm: bool,
}

impl ClassFlags {
    pub const IRL: ClassFlags = ClassFlags { irl: true, square_increasing: false, distributive: false, dmm: false };
    pub const DMM: ClassFlags = ClassFlags { irl: true, square_increasing: true, distributive: true, dmm: true };

    /// `irl`, `square-increasing`, `distributive` or `dmm`.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "irl" => Ok(Self::IRL),
            "square-increasing" | "si-irl" => Ok(ClassFlags { square_increasing: true, ..Self::IRL }),
            "distributive" => Ok(ClassFlags { distributive: true, ..Self::IRL }),
            "dmm" | "de-morgan-monoid" => Ok(Self::DMM),
            _ => Err(Error::UnknownName(format!("class {name}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match (self.square_increasing, self.distributive) {
            (true, true) => "dmm",
            (true, false) => "square-increasing",
            (false, true) => "distributive",
            (false, false) => "irl",
        }
    }

    pub fn normalized(self) -> Self {
        if self.dmm || (self.square_increasing && self.distributive) {
            Self::DMM
        } else {
            ClassFlags { irl: true, dmm: false, ..self }
        }
    }
}

/// Predicate names accepted as catalog filters.
pub const PREDICATE_NAMES: &[&str] = &[
    "nontrivial",
    "fsi",
    "si",
    "simple",
    "idempotent",
    "non-idempotent",
    "odd",
    "anti-idempotent",
    "integral",
    "rigorously-compact",
    "semilinear",
    "zero-generated",
    "chain",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub size: usize,
    pub class: ClassFlags,
    #[serde(default)]
    pub predicates: Vec<String>,
    #[serde(default)]
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(size: usize, class: ClassFlags) -> Self {
        SearchSpec { size, class: class.normalized(), predicates: Vec::new(), limit: None }
    }

    pub fn dmm(size: usize) -> Self {
        Self::new(size, ClassFlags::DMM)
    }

    pub fn with_predicates(mut self, names: &[&str]) -> Self {
        self.predicates = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub(crate) fn check_predicates(&self) -> Result<()> {
        match self.predicates.iter().find(|p| !PREDICATE_NAMES.contains(&p.as_str())) {
            Some(p) => Err(Error::UnknownName(format!("predicate {p}"))),
            None => Ok(()),
        }
    }

    pub(crate) fn accepts(&self, a: &FiniteIrl) -> bool {
        if self.predicates.is_empty() {
            return true;
        }
        let p = predicates(a);
        let needs_classes = self.predicates.iter().any(|n| matches!(n.as_str(), "fsi" | "si" | "simple"));
        let c = needs_classes.then(|| classify(a));
        self.predicates.iter().all(|name| match name.as_str() {
            "nontrivial" => !a.is_trivial(),
            "fsi" => c.as_ref().is_some_and(|c| c.fsi),
            "si" => c.as_ref().is_some_and(|c| c.si),
            "simple" => c.as_ref().is_some_and(|c| c.simple),
            "idempotent" => p.idempotent,
            "non-idempotent" => !p.idempotent,
            "odd" => p.odd,
            "anti-idempotent" => p.anti_idempotent,
            "integral" => p.integral,
            "rigorously-compact" => p.rigorously_compact,
            "semilinear" => p.semilinear,
            "zero-generated" => is_zero_generated(a),
            "chain" => a.is_chain(),
            _ => false,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogHeader {
    pub spec: SearchSpec,
    pub version: String,
    /// The search space was exhausted (no limit was hit).
    pub complete: bool,
    pub count: usize,
}

/// Algebras in canonical form, sorted by canonical form, pairwise
/// non-isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub spec: SearchSpec,
    pub version: String,
    pub complete: bool,
    pub algebras: Vec<FiniteIrl>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Header { catalog: CatalogHeader },
    Algebra(AlgebraDoc),
}

impl Catalog {
    pub fn header(&self) -> CatalogHeader {
        CatalogHeader {
            spec: self.spec.clone(),
            version: self.version.clone(),
            complete: self.complete,
            count: self.algebras.len(),
        }
    }

    /// A JSON array whose first object is the header.
    pub fn to_json(&self) -> Result<String> {
        let mut entries = vec![Entry::Header { catalog: self.header() }];
        entries.extend(self.algebras.iter().map(|a| Entry::Algebra(AlgebraDoc::from(a))));
        Ok(serde_json::to_string_pretty(&entries)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<Entry> = serde_json::from_str(text)?;
        let mut header = None;
        let mut algebras = Vec::new();
        for entry in entries {
            match entry {
                Entry::Header { catalog } if header.is_none() => header = Some(catalog),
                Entry::Header { .. } => return Err(Error::MalformedTable("second catalog header".into())),
                Entry::Algebra(doc) => algebras.push(FiniteIrl::try_from(doc)?),
            }
        }
        let header = header.ok_or_else(|| Error::MalformedTable("catalog header missing".into()))?;
        if header.count != algebras.len() {
            return Err(Error::MalformedTable(format!(
                "header announces {} algebras, file holds {}",
                header.count,
                algebras.len()
            )));
        }
        Ok(Catalog { spec: header.spec, version: header.version, complete: header.complete, algebras })
    }

    /// Concatenates catalogs of the same class over several sizes.
    pub fn merge(parts: Vec<Catalog>) -> Result<Catalog> {
        let first = parts.first().ok_or(Error::IncompleteCatalog)?;
        let mut out =
            Catalog { spec: first.spec.clone(), version: first.version.clone(), complete: true, algebras: Vec::new() };
        for p in parts {
            if p.spec.class != out.spec.class || p.spec.predicates != out.spec.predicates {
                return Err(Error::MalformedTable("merging catalogs of different classes".into()));
            }
            out.spec.size = out.spec.size.max(p.spec.size);
            out.complete &= p.complete;
            out.algebras.extend(p.algebras);
        }
        Ok(out)
    }
}

pub fn read_catalog(path: impl AsRef<Path>) -> Result<Catalog> {
    Catalog::from_json(&std::fs::read_to_string(path)?)
}

pub fn write_catalog(path: impl AsRef<Path>, c: &Catalog) -> Result<()> {
    std::fs::write(path, c.to_json()?)?;
    Ok(())
}
