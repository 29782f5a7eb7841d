//! Parallel table construction and cached loading.

use ezeta_core::mean_square::{segment_integrals, ErrorTermTable, TablePlan, METHOD_VERSION};
use ezeta_core::zeta::ZetaEvalConfig;
use rayon::prelude::*;

use crate::cache::{CacheError, CacheHandle, CacheKey, Lookup};
use crate::format::{decode_table, encode_table, TABLE_FORMAT_VERSION};

/// Cache kind of E-tables.
pub const TABLE_KIND: &str = "e-table";

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Core(#[from] ezeta_core::Error),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Parameters of one E-table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSpec {
    pub x_max: f64,
    pub step: f64,
    pub tol: f64,
    pub cfg: ZetaEvalConfig,
}

impl TableSpec {
    pub fn new(x_max: f64, tol: f64) -> Self {
        Self {
            x_max,
            step: 1.0,
            tol,
            cfg: ZetaEvalConfig::default(),
        }
    }

    /// Canonical parameter string; floats in shortest round-trip form.
    pub fn cache_key(&self) -> CacheKey {
        CacheKey::new(
            TABLE_KIND,
            format!(
                "x_max={:?};step={:?};tol={:?};em_cutoff={:?};rs_terms={};target={:?}",
                self.x_max, self.step, self.tol, self.cfg.em_cutoff, self.cfg.rs_correction_terms, self.cfg.target_abs_err
            ),
        )
    }
}

/// Version tag for cache handles holding tables.
pub fn version_tag() -> String {
    format!("{METHOD_VERSION}/table-format-{TABLE_FORMAT_VERSION}")
}

/// Builds a table with segment quadratures spread over the current rayon
/// pool; the prefix pass is sequential, so the result does not depend on
/// the number of workers.
pub fn build_table(spec: &TableSpec) -> Result<ErrorTermTable, BuildError> {
    let plan = TablePlan::new(spec.x_max, spec.step)?;
    spec.cfg.validate()?;
    if !(spec.tol > 0.0 && spec.tol.is_finite()) {
        return Err(ezeta_core::Error::Config("quadrature tolerance must be positive").into());
    }
    let segs = plan.segments();
    let share = spec.tol / plan.x_max;
    let integrals = segs
        .par_iter()
        .map(|s| segment_integrals(s, &spec.cfg, share * (s.b - s.a)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ErrorTermTable::assemble(&plan, &spec.cfg, spec.tol, &segs, &integrals)?)
}

/// [`build_table`] on a pool of `workers` threads (0: rayon default).
pub fn build_table_with(spec: &TableSpec, workers: usize) -> Result<ErrorTermTable, BuildError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| BuildError::Pool(e.to_string()))?;
    pool.install(|| build_table(spec))
}

/// Returns the cached table or builds and stores it; the flag is true on a hit.
pub fn load_or_build(cache: &CacheHandle, spec: &TableSpec, workers: usize) -> Result<(ErrorTermTable, bool), BuildError> {
    let key = spec.cache_key();
    if let Lookup::Hit(bytes) = cache.get(&key)? {
        match decode_table(&bytes) {
            Ok(t) => return Ok((t, true)),
            Err(e) => log::warn!("cached table could not be decoded ({e}); rebuilding"),
        }
    }
    log::info!("building E-table x_max={} tol={:e}", spec.x_max, spec.tol);
    let table = build_table_with(spec, workers)?;
    cache.put(&key, &encode_table(&table))?;
    Ok((table, false))
}
