//! Parallel search over a [`SearchSpace`] with seeded spot checks.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use skewcode_core::fqr::gray_image_matrix;
use skewcode_core::quantum::check_dual_containing;
use skewcode_core::search::{
    assemble_hit, certified_candidates, pair_block_params, rank_hits, x_block_params, SearchHit, SearchSpace,
};
use skewcode_core::{Error, Result, Sequential};

use crate::report::SearchRow;

/// Number of emitted hits re-verified by explicit Gray-image containment.
pub const SPOT_CHECKS: usize = 10;

pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub rows: Vec<SearchRow>,
    pub candidates: (usize, usize, usize),
    pub spot_checked: Vec<usize>,
}

/// Block distances run in parallel across candidates; each distance search
/// is sequential inside, so results do not depend on the worker count.
pub fn run_search(space: &SearchSpace, seed: u64, timing: bool) -> Result<SearchOutcome> {
    let cands = certified_candidates(space)?;
    let opts = space.distance;
    let xs: Vec<_> = cands
        .f
        .par_iter()
        .map(|f| {
            let t = Instant::now();
            (
                x_block_params(f, space.alpha, &opts, &Sequential),
                t.elapsed().as_secs_f64(),
            )
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..cands.g1.len())
        .flat_map(|i| (0..cands.g2.len()).map(move |j| (i, j)))
        .collect();
    let ys: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let t = Instant::now();
            let r = pair_block_params(
                &cands.g1[i],
                &cands.g2[j],
                space.beta,
                &space.gray,
                space.coords,
                &opts,
                &Sequential,
            );
            (r, t.elapsed().as_secs_f64())
        })
        .collect();
    let mut timed: Vec<(SearchHit, f64)> = Vec::with_capacity(xs.len() * ys.len());
    for (&(i, j), (pair, ty)) in pairs.iter().zip(&ys) {
        for (f, (x, tx)) in cands.f.iter().zip(&xs) {
            let hit = assemble_hit(space, f, &cands.g1[i], &cands.g2[j], x, pair);
            timed.push((hit, tx + ty));
        }
    }
    let mut hits: Vec<SearchHit> = timed.iter().map(|(h, _)| h.clone()).collect();
    rank_hits(&mut hits);
    let seconds: HashMap<_, f64> = timed.iter().map(|(h, s)| (key(h), *s)).collect();
    let seconds_of = |h: &SearchHit| seconds.get(&key(h)).copied().unwrap_or(0.0);
    let spot_checked = spot_check(space, &hits, seed)?;
    let rows = hits
        .iter()
        .map(|h| to_row(space, h, if timing { seconds_of(h) } else { 0.0 }))
        .collect();
    Ok(SearchOutcome {
        hits,
        rows,
        candidates: (cands.f.len(), cands.g1.len(), cands.g2.len()),
        spot_checked,
    })
}

fn key(h: &SearchHit) -> (String, String, String) {
    (h.f.to_ascending(), h.g1.to_ascending(), h.g2.to_ascending())
}

/// Re-verifies up to [`SPOT_CHECKS`] successful hits chosen with `seed`.
fn spot_check(space: &SearchSpace, hits: &[SearchHit], seed: u64) -> Result<Vec<usize>> {
    let ok: Vec<usize> = (0..hits.len()).filter(|&i| hits[i].outcome.is_ok()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: Vec<usize> = ok.choose_multiple(&mut rng, SPOT_CHECKS).copied().collect();
    chosen.sort_unstable();
    for &i in &chosen {
        let h = &hits[i];
        let spec = h.spec(space)?;
        let cert = check_dual_containing(&spec)?;
        let image = gray_image_matrix(&spec, &space.gray, space.coords)?;
        let explicit = image.contains(&image.dual())?;
        let params = h.outcome.as_ref().map_err(Clone::clone)?;
        if !cert.is_valid() || !explicit || image.dimension() != params.k {
            return Err(Error::InvalidParams(format!(
                "spot check failed for f={}, g1={}, g2={}",
                h.f, h.g1, h.g2
            )));
        }
    }
    Ok(chosen)
}

fn to_row(space: &SearchSpace, h: &SearchHit, seconds: f64) -> SearchRow {
    let (n, k, d, qn, qk, qd, error) = match &h.outcome {
        Ok(p) => (p.n, p.k, p.d, p.quantum.n, p.quantum.k, p.quantum.d, String::new()),
        Err(e) => (space.alpha + 2 * space.beta, 0, 0, 0, 0, 0, e.to_string()),
    };
    SearchRow {
        q: space.field.order(),
        alpha: space.alpha,
        beta: space.beta,
        f: h.f.to_ascending(),
        g1: h.g1.to_ascending(),
        g2: h.g2.to_ascending(),
        n,
        k,
        d,
        qn,
        qk,
        qd,
        dual_containing: true,
        seconds,
        error,
    }
}
