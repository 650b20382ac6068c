//! Parallel corpus scans with deterministic output.
//!
//! Graphs are scanned on a dedicated rayon pool and the results are sorted by
//! `(order, canonical form)` before aggregation, so the worker count never
//! changes what is written.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use pairwalk_core::algebra::HamiltonianKind;
use pairwalk_core::graph::canonical_form;
use pairwalk_core::survey::{scan_with, survey_rows, GraphScan, ScanConfig, SurveyRow};
use pairwalk_core::transfer::Analyzer;
use pairwalk_core::{Error, Graph, Result};
use rayon::prelude::*;

/// Analyzers shared between scans of the same graph under several
/// configurations. Lookups take a read lock; misses build outside any lock
/// and insert under a short write lock.
#[derive(Debug, Default)]
pub struct DecompositionCache {
    map: RwLock<HashMap<(Graph, HamiltonianKind), Arc<Analyzer>>>,
}

impl DecompositionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, g: &Graph, kind: HamiltonianKind) -> Result<Arc<Analyzer>> {
        if let Some(an) = self.map.read().expect("cache lock").get(&(*g, kind)) {
            return Ok(Arc::clone(an));
        }
        let an = Arc::new(Analyzer::new(g, kind)?);
        let mut map = self.map.write().expect("cache lock");
        Ok(Arc::clone(map.entry((*g, kind)).or_insert(an)))
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|_| Error::Parameter("could not start worker threads"))
}

/// Scans every graph on `jobs` workers; results sorted by order then
/// canonical form.
pub fn scan_corpus(corpus: &[Graph], cfg: &ScanConfig, jobs: usize, cache: &DecompositionCache) -> Result<Vec<GraphScan>> {
    cfg.validate()?;
    let mut scans = pool(jobs)?.install(|| {
        corpus
            .par_iter()
            .map(|g| cache.get(g, cfg.hamiltonian).and_then(|an| scan_with(&an, cfg)))
            .collect::<Result<Vec<_>>>()
    })?;
    scans.sort_by_cached_key(|s| (s.graph.order(), canonical_form(&s.graph)));
    Ok(scans)
}

/// Census rows and the sorted per-graph scans.
pub fn survey(corpus: &[Graph], cfg: &ScanConfig, jobs: usize) -> Result<(Vec<SurveyRow>, Vec<GraphScan>)> {
    let scans = scan_corpus(corpus, cfg, jobs, &DecompositionCache::new())?;
    Ok((survey_rows(&scans), scans))
}
