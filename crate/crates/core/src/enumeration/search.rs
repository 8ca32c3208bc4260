use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::{Catalog, SearchSpec};
use super::fusion::{fusion_tables, Counters, Frame};
use super::lattices::frames;
use crate::algebra::{AlgebraDoc, FiniteIrl};
use crate::constructions::canonical_labelling;
use crate::error::{Error, Result};

/// Largest size searched without `unsafe_size`.
pub const DEFAULT_MAX_SIZE: usize = 8;

/// Frames searched between two checkpoint writes.
const CHECKPOINT_CHUNK: usize = 64;

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub max_size: usize,
    /// Allow sizes above `max_size`.
    pub unsafe_size: bool,
    /// Resumable progress file, written after every chunk of frames.
    pub checkpoint: Option<PathBuf>,
    /// Print progress lines to standard error.
    pub progress: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            jobs: None,
            max_size: DEFAULT_MAX_SIZE,
            unsafe_size: false,
            checkpoint: None,
            progress: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub lattices: usize,
    pub involutions: usize,
    /// Lattice, negation and `e` combinations up to isomorphism.
    pub frames: usize,
    pub nodes: u64,
    pub pruned: u64,
    /// Tables found before isomorphism reduction.
    pub labelled: usize,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    spec: SearchSpec,
    done: usize,
    found: Vec<AlgebraDoc>,
}

pub fn enumerate(spec: &SearchSpec) -> Result<Catalog> {
    Ok(enumerate_with(spec, &EnumerateOptions::default())?.0)
}

/// Layered search: lattices, then antitone involutions and a choice of `e`,
/// then fusion tables; results are relabelled canonically, deduplicated and
/// sorted by canonical form.
pub fn enumerate_with(spec: &SearchSpec, opts: &EnumerateOptions) -> Result<(Catalog, EnumerationStats)> {
    let spec = SearchSpec { class: spec.class.normalized(), ..spec.clone() };
    let n = spec.size;
    if n == 0 {
        return Err(Error::MalformedTable("size must be positive".into()));
    }
    if n > opts.max_size && !opts.unsafe_size {
        return Err(Error::SizeTooLarge { size: n, max: opts.max_size });
    }
    if n > crate::algebra::MAX_SIZE {
        return Err(Error::SizeTooLarge { size: n, max: crate::algebra::MAX_SIZE });
    }
    spec.check_predicates()?;

    let (lattice_count, involutions, frames) = frames(n, spec.class.distributive);
    let mut stats =
        EnumerationStats { lattices: lattice_count, involutions, frames: frames.len(), ..Default::default() };
    let nodes = AtomicU64::new(0);
    let pruned = AtomicU64::new(0);

    let (mut done, mut found) = (0, Vec::new());
    if let Some(path) = opts.checkpoint.as_ref().filter(|p| p.exists()) {
        let cp: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if cp.spec != spec {
            return Err(Error::MalformedTable(format!("checkpoint {} belongs to another search", path.display())));
        }
        done = cp.done.min(frames.len());
        found = cp.found.into_iter().map(FiniteIrl::try_from).collect::<Result<Vec<_>>>()?;
    }

    let search_frame = |(l, neg, e): &(super::lattices::Lattice, Vec<usize>, usize)| -> Vec<FiniteIrl> {
        let frame = Frame { meet: &l.0, join: &l.1, neg, e: *e, square_increasing: spec.class.square_increasing };
        let mut c = Counters::default();
        let tables = fusion_tables(&frame, &mut c);
        nodes.fetch_add(c.nodes, Ordering::Relaxed);
        pruned.fetch_add(c.pruned, Ordering::Relaxed);
        tables
            .into_iter()
            .map(|t| {
                FiniteIrl::from_tables("candidate", l.0.clone(), l.1.clone(), t, neg.clone(), *e)
                    .expect("tables over the frame")
            })
            .collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::MalformedTable(format!("thread pool: {e}")))?;
    let chunk = if opts.checkpoint.is_some() { CHECKPOINT_CHUNK } else { frames.len().max(1) };
    while done < frames.len() {
        let end = (done + chunk).min(frames.len());
        let batch: Vec<Vec<FiniteIrl>> = pool.install(|| frames[done..end].par_iter().map(search_frame).collect());
        found.extend(batch.into_iter().flatten());
        done = end;
        if let Some(path) = &opts.checkpoint {
            let cp = Checkpoint { spec: spec.clone(), done, found: found.iter().map(AlgebraDoc::from).collect() };
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string(&cp)?)?;
            std::fs::rename(&tmp, path)?;
        }
        if opts.progress {
            eprintln!(
                "[enumerate n={n}] frames {done}/{} found {} nodes {} pruned {}",
                frames.len(),
                found.len(),
                nodes.load(Ordering::Relaxed),
                pruned.load(Ordering::Relaxed)
            );
        }
    }
    stats.nodes = nodes.into_inner();
    stats.pruned = pruned.into_inner();
    stats.labelled = found.len();

    let mut unique = BTreeMap::new();
    for a in found {
        let (form, perm) = canonical_labelling(&a);
        unique.entry(form).or_insert_with(|| a.relabel(&perm));
    }
    let mut algebras: Vec<FiniteIrl> = unique.into_values().filter(|a| spec.accepts(a)).collect();
    let mut complete = true;
    if let Some(limit) = spec.limit {
        if algebras.len() > limit {
            algebras.truncate(limit);
            complete = false;
        }
    }
    let prefix = spec.class.name();
    let algebras = algebras.into_iter().enumerate().map(|(i, a)| a.with_name(format!("{prefix}{n}_{i}"))).collect();
    let catalog = Catalog { spec, version: env!("CARGO_PKG_VERSION").to_string(), complete, algebras };
    Ok((catalog, stats))
}
