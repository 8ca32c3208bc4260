use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Element, FiniteIrl};
use crate::error::{Error, Result};

/// One algebra in the JSON file format. Arrays are row-major with the row
/// index as left argument. `labels` is optional display metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub size: usize,
    pub meet: Vec<Vec<Element>>,
    pub join: Vec<Vec<Element>>,
    pub fusion: Vec<Vec<Element>>,
    pub neg: Vec<Element>,
    pub e: Element,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&FiniteIrl> for AlgebraDoc {
    fn from(a: &FiniteIrl) -> Self {
        AlgebraDoc {
            name: a.name().to_string(),
            size: a.size(),
            meet: a.meet_table().rows(),
            join: a.join_table().rows(),
            fusion: a.fusion_table().rows(),
            neg: a.neg_table().to_vec(),
            e: a.e(),
            labels: a.labels().map(|l| l.to_vec()),
        }
    }
}

impl TryFrom<AlgebraDoc> for FiniteIrl {
    type Error = Error;

    fn try_from(d: AlgebraDoc) -> Result<Self> {
        if d.size != d.neg.len() {
            return Err(Error::MalformedTable(format!(
                "size {} disagrees with neg table of length {}",
                d.size,
                d.neg.len()
            )));
        }
        let a = FiniteIrl::from_rows(d.name, &d.meet, &d.join, &d.fusion, d.neg, d.e)?;
        Ok(match d.labels {
            Some(l) if l.len() == a.size() => a.with_labels(l),
            Some(_) => return Err(Error::MalformedTable("labels length disagrees with size".into())),
            None => a,
        })
    }
}

impl Serialize for FiniteIrl {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteIrl {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = AlgebraDoc::deserialize(d)?;
        FiniteIrl::try_from(doc).map_err(serde::de::Error::custom)
    }
}

fn is_algebra_object(v: &serde_json::Value) -> bool {
    v.get("meet").is_some() && v.get("signature").is_none()
}

/// Parses a JSON document holding either one algebra or a catalog array
/// (header objects in the array are skipped).
pub fn algebras_from_json(text: &str) -> Result<Vec<FiniteIrl>> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    match v {
        serde_json::Value::Array(items) => items
            .into_iter()
            .filter(is_algebra_object)
            .map(|item| Ok(serde_json::from_value::<FiniteIrl>(item)?))
            .collect(),
        obj => Ok(vec![serde_json::from_value::<FiniteIrl>(obj)?]),
    }
}

pub fn read_catalog_file(path: impl AsRef<Path>) -> Result<Vec<FiniteIrl>> {
    algebras_from_json(&std::fs::read_to_string(path)?)
}

/// Reads one algebra. `path#k` selects the `k`-th algebra of a catalog file.
pub fn read_algebra_file(spec: &str) -> Result<FiniteIrl> {
    let (path, index) = match spec.rsplit_once('#') {
        Some((p, k)) if k.parse::<usize>().is_ok() => (p, k.parse::<usize>().ok()),
        _ => (spec, None),
    };
    let mut all = read_catalog_file(path)?;
    match index {
        Some(k) if k < all.len() => Ok(all.swap_remove(k)),
        Some(k) => Err(Error::MalformedTable(format!("catalog has no entry {k}"))),
        None if all.len() == 1 => Ok(all.pop().expect("one entry")),
        None => {
            Err(Error::MalformedTable(format!("{path} holds {} algebras; select one with {path}#<index>", all.len())))
        }
    }
}

pub fn write_algebra_file(path: impl AsRef<Path>, a: &FiniteIrl) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(a)?)?;
    Ok(())
}
