use std::io::Write;

use dmm_core::structure::render_hasse;
use dmm_core::{FiniteIrl, Result};

use crate::{Format, OutputOpts};

/// What a command produced: both renderings, the algebras worth drawing and
/// whether every check passed.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub passed: bool,
    pub diagrams: Vec<FiniteIrl>,
    /// Written to `--out` in place of the report (catalogs, algebras).
    pub artifact: Option<String>,
}

impl Report {
    pub fn new(text: String, json: serde_json::Value) -> Self {
        Report { text, json, passed: true, diagrams: Vec::new(), artifact: None }
    }

    pub fn passed(mut self, passed: bool) -> Self {
        self.passed = passed;
        self
    }

    pub fn with_artifact(mut self, body: String) -> Self {
        self.artifact = Some(body);
        self
    }

    pub fn draw(mut self, a: &FiniteIrl) -> Self {
        self.diagrams.push(a.clone());
        self
    }
}

pub fn emit(r: &Report, opts: &OutputOpts) -> Result<()> {
    let body = match opts.format {
        Format::Json => serde_json::to_string_pretty(&r.json)? + "\n",
        Format::Text => {
            let mut s = r.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            if opts.hasse {
                for a in &r.diagrams {
                    s.push_str(&format!("\n{}\n{}", a.name(), render_hasse(a)));
                }
            }
            s
        }
    };
    match (&opts.out, &r.artifact) {
        (Some(path), Some(artifact)) => {
            std::fs::write(path, artifact.clone() + "\n")?;
            std::io::stdout().write_all(body.as_bytes())?;
        }
        (Some(path), None) => std::fs::write(path, body)?,
        (None, _) => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}
