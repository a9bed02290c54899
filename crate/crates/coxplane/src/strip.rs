//! Multi-threaded strip projection.

use anyhow::{Context, Result};
use coxplane_core::quasilattice::{StripConfig, StripPlan};
use coxplane_core::PointSet2D;
use rayon::prelude::*;

/// Same result as [`coxplane_core::quasilattice::strip_project`], with the
/// leading coordinate split across `threads` workers (0 = rayon default).
pub fn strip_project_parallel(config: &StripConfig, threads: usize) -> Result<PointSet2D> {
    let plan = StripPlan::new(config)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().context("building thread pool")?;
    let accepted = pool.install(|| {
        let values: Vec<i64> = plan.leading_values().collect();
        values.par_iter().flat_map_iter(|&c| plan.scan(c)).collect::<Vec<_>>()
    });
    Ok(plan.finish(accepted))
}
