use std::path::Path;

use serde::{Deserialize, Serialize};

use super::algebra::FiniteRa;
use crate::algebra::Element;
use crate::error::{Error, Result};

/// The algebra file format without `e`, marked with `"signature": "RA"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaDoc {
    pub signature: String,
    pub name: String,
    pub size: usize,
    pub meet: Vec<Vec<Element>>,
    pub join: Vec<Vec<Element>>,
    pub fusion: Vec<Vec<Element>>,
    pub neg: Vec<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&FiniteRa> for RaDoc {
    fn from(a: &FiniteRa) -> Self {
        RaDoc {
            signature: "RA".into(),
            name: a.name().to_string(),
            size: a.size(),
            meet: a.meet_table().rows(),
            join: a.join_table().rows(),
            fusion: a.fusion_table().rows(),
            neg: a.neg_table().to_vec(),
            labels: a.labels().map(|l| l.to_vec()),
        }
    }
}

impl TryFrom<RaDoc> for FiniteRa {
    type Error = Error;

    fn try_from(d: RaDoc) -> Result<Self> {
        if d.signature != "RA" {
            return Err(Error::MalformedTable(format!("unexpected signature {:?}", d.signature)));
        }
        if d.size != d.neg.len() {
            return Err(Error::MalformedTable(format!(
                "size {} disagrees with neg table of length {}",
                d.size,
                d.neg.len()
            )));
        }
        let a = FiniteRa::from_rows(d.name, &d.meet, &d.join, &d.fusion, d.neg)?;
        match d.labels {
            Some(l) if l.len() == a.size() => Ok(a.with_labels(l)),
            Some(_) => Err(Error::MalformedTable("labels length disagrees with size".into())),
            None => Ok(a),
        }
    }
}

impl Serialize for FiniteRa {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RaDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteRa {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FiniteRa::try_from(RaDoc::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// One relevant algebra, or every `"signature": "RA"` entry of an array.
pub fn ra_from_json(text: &str) -> Result<Vec<FiniteRa>> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    match v {
        serde_json::Value::Array(items) => items
            .into_iter()
            .filter(|item| item.get("signature").and_then(|s| s.as_str()) == Some("RA"))
            .map(|item| Ok(serde_json::from_value::<FiniteRa>(item)?))
            .collect(),
        obj => Ok(vec![serde_json::from_value::<FiniteRa>(obj)?]),
    }
}

pub fn read_ra_file(path: impl AsRef<Path>) -> Result<Vec<FiniteRa>> {
    ra_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_ra_file(path: impl AsRef<Path>, a: &FiniteRa) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(a)?)?;
    Ok(())
}
