//! Rayon-backed executor.

use rayon::prelude::*;
use skewcode_core::Executor;

/// Runs probes on the current rayon pool.
#[derive(Debug, Clone, Copy, Default)]
pub struct Parallel;

impl Executor for Parallel {
    fn any(&self, tasks: usize, probe: &(dyn Fn(usize) -> bool + Sync)) -> bool {
        (0..tasks).into_par_iter().any(probe)
    }
}

/// Installs a global pool with `jobs` workers; 0 keeps rayon's default.
pub fn init_pool(jobs: usize) -> Result<(), rayon::ThreadPoolBuildError> {
    if jobs == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()
}
