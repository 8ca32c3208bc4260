use std::path::Path;

use dmm_core::algebra::read_algebra_file;
use dmm_core::constructions::make_named;
use dmm_core::relevant::{e_free_reduct, ra_from_json, FiniteRa};
use dmm_core::{Element, ElementSet, Error, FiniteIrl, Result};

/// A named algebra, or a JSON file (`path#k` selects a catalog entry). Names
/// win over files of the same name.
pub fn algebra(spec: &str) -> Result<FiniteIrl> {
    match make_named(spec) {
        Ok(a) => {
            if Path::new(spec).exists() {
                eprintln!("warning: `{spec}` is both a named algebra and a file; using the named algebra");
            }
            Ok(a)
        }
        Err(Error::UnknownName(_)) if Path::new(spec.rsplit_once('#').map_or(spec, |(p, _)| p)).exists() => {
            read_algebra_file(spec)
        }
        Err(e) => Err(e),
    }
}

/// A relevant algebra: the reduct of a named algebra or of an algebra file,
/// or an entry of an RA file (`path#k` selects one).
pub fn relevant(spec: &str) -> Result<FiniteRa> {
    if make_named(spec).is_ok() {
        return Ok(e_free_reduct(&algebra(spec)?));
    }
    let (path, index) = match spec.rsplit_once('#') {
        Some((p, k)) if k.parse::<usize>().is_ok() => (p, k.parse::<usize>().ok()),
        _ => (spec, None),
    };
    let text = std::fs::read_to_string(path)?;
    let v: serde_json::Value = serde_json::from_str(&text)?;
    let is_ra = |x: &serde_json::Value| x.get("signature").and_then(|s| s.as_str()) == Some("RA");
    let any_ra = match &v {
        serde_json::Value::Array(items) => items.iter().any(is_ra),
        x => is_ra(x),
    };
    if !any_ra {
        return Ok(e_free_reduct(&read_algebra_file(spec)?));
    }
    let mut all = ra_from_json(&text)?;
    match index {
        Some(k) if k < all.len() => Ok(all.swap_remove(k)),
        None if all.len() == 1 => Ok(all.pop().expect("one entry")),
        _ => Err(Error::MalformedTable(format!(
            "{path} holds {} relevant algebras; select one with {path}#<index>",
            all.len()
        ))),
    }
}

/// An element given by label or by index.
pub fn element(labels: impl Fn(&str) -> Option<Element>, size: usize, token: &str) -> Result<Element> {
    let token = token.trim();
    labels(token)
        .or_else(|| token.parse::<Element>().ok().filter(|&i| i < size))
        .ok_or_else(|| Error::MalformedTable(format!("no element `{token}`")))
}

pub fn elements(labels: impl Fn(&str) -> Option<Element>, size: usize, list: &str) -> Result<ElementSet> {
    list.split(',').filter(|t| !t.trim().is_empty()).map(|t| element(&labels, size, t)).collect()
}
