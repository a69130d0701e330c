//! Right-divisor enumeration and the quantum code search pipeline.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::fqr::{gray_pair_block, x_block_ring, CodeSpec, GrayCoords, GrayMatrix};
use crate::gf::{Fe, GaloisField};
use crate::lincode::{skew_code_matrix, DistanceOptions, GeneratorMatrix};
use crate::quantum::{check_dual_containing, css_params, route_for, QuantumParams, Route};
use crate::skewpoly::{SkewPoly, SkewRing};

/// Default cap on q^d candidates for [`right_divisors`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Replaces r = x^k mod g (from the right) by x^{k+1} mod g; `g` is monic
/// of degree r.len() ≥ 1.
fn times_x_mod(ring: &SkewRing, g: &[Fe], r: &mut [Fe]) {
    let field = ring.field();
    let d = r.len();
    let top = ring.theta_pow(1, r[d - 1]);
    for i in (1..d).rev() {
        r[i] = ring.theta_pow(1, r[i - 1]);
    }
    r[0] = Fe::ZERO;
    if !top.is_zero() {
        for i in 0..d {
            r[i] = field.sub(r[i], field.mul(top, g[i]));
        }
    }
}

fn x_mod(g: &[Fe]) -> Vec<Fe> {
    let mut r = vec![Fe::ZERO; g.len() - 1];
    r[0] = Fe::ONE;
    r
}

/// Whether x^n ≡ 1 modulo `g` from the right, for monic `g` of degree ≥ 1.
fn divides_x_pow_minus_one(ring: &SkewRing, g: &[Fe], n: usize) -> bool {
    let mut r = x_mod(g);
    for _ in 0..n {
        times_x_mod(ring, g, &mut r);
    }
    r[0] == Fe::ONE && r[1..].iter().all(|c| c.is_zero())
}

/// Smallest m < n with x^m − c a left multiple of `g` for a constant
/// c ≠ 0. The word x^m − c then lies in ⟨g⟩ and has Hamming weight 2.
pub fn binomial_multiple(g: &SkewPoly, n: usize) -> Result<Option<(usize, Fe)>> {
    let d = g.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(None);
    }
    let g = g.monic()?;
    let ring = g.ring();
    let mut r = x_mod(g.coeffs());
    for m in 1..n {
        times_x_mod(ring, g.coeffs(), &mut r);
        if m >= d && !r[0].is_zero() && r[1..].iter().all(|c| c.is_zero()) {
            return Ok(Some((m, r[0])));
        }
    }
    Ok(None)
}

fn enumeration_size(q: u32, d: usize) -> u128 {
    let mut c: u128 = 1;
    for _ in 0..d {
        c = c.saturating_mul(q as u128);
    }
    c
}

/// All monic g of degree `d` with g a right divisor of x^n − 1, in
/// lexicographic order of (g_0, ..., g_{d−1}) by element value.
pub fn right_divisors(ring: &Arc<SkewRing>, n: usize, d: usize, budget: u64) -> Result<Vec<SkewPoly>> {
    if d == 0 || d >= n {
        return Err(Error::DegreeOutOfRange { degree: d, n });
    }
    let q = ring.field().order();
    let candidates = enumeration_size(q, d);
    if candidates > budget as u128 {
        return Err(Error::EnumerationBudget { candidates, budget });
    }
    let mut out = Vec::new();
    let mut digits = vec![0u32; d];
    let mut coeffs = vec![Fe::ZERO; d + 1];
    coeffs[d] = Fe::ONE;
    loop {
        // a zero constant term makes x a right factor, which x^n − 1 lacks
        if digits[0] != 0 {
            for (c, &v) in coeffs.iter_mut().zip(&digits) {
                *c = Fe(v);
            }
            if divides_x_pow_minus_one(ring, &coeffs, n) {
                out.push(SkewPoly::new(ring, coeffs.clone()));
            }
        }
        let mut pos = d;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Search bounds: every f of degree 1..=max_deg_f dividing x^α − 1 in the
/// block ring, and g_i of degree 1..=max_deg_g_i dividing x^β − 1.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub field: Arc<GaloisField>,
    pub theta_exp: u32,
    pub alpha: usize,
    pub beta: usize,
    pub max_deg_f: usize,
    pub max_deg_g1: usize,
    pub max_deg_g2: usize,
    pub gray: GrayMatrix,
    pub coords: GrayCoords,
    pub distance: DistanceOptions,
    pub enumeration_budget: u64,
}

impl SearchSpace {
    pub fn validate(&self) -> Result<()> {
        let order = self.field.automorphism_order(self.theta_exp);
        if !self.beta.is_multiple_of(order as usize) {
            return Err(Error::OrderDoesNotDivideBeta { order, beta: self.beta });
        }
        route_for(self.alpha, order)?;
        for (deg, n) in [
            (self.max_deg_f, self.alpha),
            (self.max_deg_g1, self.beta),
            (self.max_deg_g2, self.beta),
        ] {
            if deg == 0 || deg >= n {
                return Err(Error::DegreeOutOfRange { degree: deg, n });
            }
        }
        Ok(())
    }

    fn x_ring(&self) -> Arc<SkewRing> {
        x_block_ring(&self.field, self.theta_exp, self.alpha)
    }

    fn y_ring(&self) -> Arc<SkewRing> {
        SkewRing::new(Arc::clone(&self.field), self.theta_exp)
    }
}

/// Divisors passing their own block's dual-containment test.
#[derive(Debug, Clone)]
pub struct Candidates {
    pub f: Vec<SkewPoly>,
    pub g1: Vec<SkewPoly>,
    pub g2: Vec<SkewPoly>,
}

impl Candidates {
    pub fn combinations(&self) -> usize {
        self.f.len() * self.g1.len() * self.g2.len()
    }
}

fn certified_up_to(
    space: &SearchSpace,
    ring: &Arc<SkewRing>,
    n: usize,
    max_deg: usize,
    keep: impl Fn(&SkewPoly) -> Result<bool>,
) -> Result<Vec<SkewPoly>> {
    let mut out = Vec::new();
    for d in 1..=max_deg {
        for g in right_divisors(ring, n, d, space.enumeration_budget)? {
            if keep(&g)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Enumerates and certifies the per-block candidates.
pub fn certified_candidates(space: &SearchSpace) -> Result<Candidates> {
    space.validate()?;
    let order = space.field.automorphism_order(space.theta_exp);
    let route = route_for(space.alpha, order)?;
    let xr = space.x_ring();
    let yr = space.y_ring();
    let one_y = SkewPoly::one(&yr);
    let one_x = SkewPoly::one(&xr);
    // each block is tested inside a spec whose other blocks are trivial
    let certify = |f: &SkewPoly, g1: &SkewPoly, g2: &SkewPoly| -> Result<bool> {
        let spec = CodeSpec::from_polys(
            Arc::clone(&space.field),
            space.theta_exp,
            space.alpha,
            space.beta,
            f.clone(),
            g1.clone(),
            g2.clone(),
        )?;
        let cert = check_dual_containing(&spec)?;
        debug_assert_eq!(cert.route, route);
        Ok(cert.is_valid())
    };
    let f = certified_up_to(space, &xr, space.alpha, space.max_deg_f, |f| certify(f, &one_y, &one_y))?;
    let g1 = certified_up_to(space, &yr, space.beta, space.max_deg_g1, |g| certify(&one_x, g, &one_y))?;
    let g2 = if space.max_deg_g2 == space.max_deg_g1 {
        g1.clone()
    } else {
        certified_up_to(space, &yr, space.beta, space.max_deg_g2, |g| certify(&one_x, &one_y, g))?
    };
    Ok(Candidates { f, g1, g2 })
}

/// Dimension and minimum distance of a linear code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockParams {
    pub k: usize,
    pub d: usize,
}

fn block_params(code: &GeneratorMatrix, opts: &DistanceOptions, exec: &dyn Executor) -> Result<Option<BlockParams>> {
    if code.dimension() == 0 {
        return Ok(None);
    }
    Ok(Some(BlockParams {
        k: code.dimension(),
        d: code.min_distance(opts, exec)?,
    }))
}

/// Parameters of the cyclic or skew cyclic code ⟨f⟩ of length α.
pub fn x_block_params(
    f: &SkewPoly,
    alpha: usize,
    opts: &DistanceOptions,
    exec: &dyn Executor,
) -> Result<Option<BlockParams>> {
    block_params(&skew_code_matrix(f, alpha)?, opts, exec)
}

/// Parameters of the Gray image of C₁ × C₂ (length 2β).
pub fn pair_block_params(
    g1: &SkewPoly,
    g2: &SkewPoly,
    beta: usize,
    gray: &GrayMatrix,
    coords: GrayCoords,
    opts: &DistanceOptions,
    exec: &dyn Executor,
) -> Result<Option<BlockParams>> {
    let block = gray_pair_block(&skew_code_matrix(g1, beta)?, &skew_code_matrix(g2, beta)?, gray, coords)?;
    block_params(&block, opts, exec)
}

/// [n, k, d] of φ(C) for a separable code: φ(C) is C′ ⊕ φ(C₁ × C₂) on
/// disjoint coordinates, so d is the smaller of the two block distances.
pub fn combine_blocks(n: usize, x: Option<BlockParams>, pair: Option<BlockParams>) -> Result<(usize, usize, usize)> {
    let k = x.map_or(0, |b| b.k) + pair.map_or(0, |b| b.k);
    let d = match (x, pair) {
        (Some(a), Some(b)) => a.d.min(b.d),
        (Some(a), None) | (None, Some(a)) => a.d,
        (None, None) => return Err(Error::EmptyCode),
    };
    Ok((n, k, d))
}

/// Classical [n, k, d] of φ(C) for a separable spec via the block split.
pub fn separable_gray_params(
    spec: &CodeSpec,
    gray: &GrayMatrix,
    coords: GrayCoords,
    opts: &DistanceOptions,
    exec: &dyn Executor,
) -> Result<(usize, usize, usize)> {
    let crate::fqr::Generators::Separable { f, g1, g2 } = spec.generators() else {
        return Err(Error::NotSeparable);
    };
    let x = x_block_params(f, spec.alpha(), opts, exec)?;
    let pair = pair_block_params(g1, g2, spec.beta(), gray, coords, opts, exec)?;
    combine_blocks(spec.length(), x, pair)
}

/// One evaluated (f, g₁, g₂).
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub f: SkewPoly,
    pub g1: SkewPoly,
    pub g2: SkewPoly,
    pub route: Route,
    pub outcome: core::result::Result<HitParams, Error>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HitParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub quantum: QuantumParams,
}

impl SearchHit {
    /// Rebuilds the code for this hit.
    pub fn spec(&self, space: &SearchSpace) -> Result<CodeSpec> {
        CodeSpec::from_polys(
            Arc::clone(&space.field),
            space.theta_exp,
            space.alpha,
            space.beta,
            self.f.clone(),
            self.g1.clone(),
            self.g2.clone(),
        )
    }

    fn sort_key(&self) -> (String, String, String) {
        (self.f.to_ascending(), self.g1.to_ascending(), self.g2.to_ascending())
    }
}

/// Assembles a hit from cached block results.
pub fn assemble_hit(
    space: &SearchSpace,
    f: &SkewPoly,
    g1: &SkewPoly,
    g2: &SkewPoly,
    x: &Result<Option<BlockParams>>,
    pair: &Result<Option<BlockParams>>,
) -> SearchHit {
    let order = space.field.automorphism_order(space.theta_exp);
    let route = route_for(space.alpha, order).unwrap_or(Route::Divides);
    let outcome = (|| {
        let x = x.clone()?;
        let pair = pair.clone()?;
        let (n, k, d) = combine_blocks(space.alpha + 2 * space.beta, x, pair)?;
        let quantum = css_params(n, k, d, space.field.order())?;
        Ok(HitParams { n, k, d, quantum })
    })();
    SearchHit {
        f: f.clone(),
        g1: g1.clone(),
        g2: g2.clone(),
        route,
        outcome,
    }
}

/// Deterministic order: successes by d desc, quantum rate desc, then
/// failures; ties broken by the ascending coefficient strings.
pub fn rank_hits(hits: &mut [SearchHit]) {
    hits.sort_by(|a, b| {
        use core::cmp::Ordering;
        let primary = match (&a.outcome, &b.outcome) {
            (Ok(x), Ok(y)) => y.quantum.d.cmp(&x.quantum.d).then_with(|| {
                ((y.quantum.k as u128) * (x.quantum.n as u128)).cmp(&((x.quantum.k as u128) * (y.quantum.n as u128)))
            }),
            (Ok(_), Err(_)) => Ordering::Less,
            (Err(_), Ok(_)) => Ordering::Greater,
            (Err(_), Err(_)) => Ordering::Equal,
        };
        primary.then_with(|| a.sort_key().cmp(&b.sort_key()))
    });
}

/// Full sequential pipeline: certified candidates, block distances (each
/// computed once), every combination, ranked.
pub fn search_quantum(space: &SearchSpace, exec: &dyn Executor) -> Result<Vec<SearchHit>> {
    let cands = certified_candidates(space)?;
    let opts = space.distance;
    let xs: Vec<Result<Option<BlockParams>>> = cands
        .f
        .iter()
        .map(|f| x_block_params(f, space.alpha, &opts, exec))
        .collect();
    let mut hits = Vec::with_capacity(cands.combinations());
    for g1 in &cands.g1 {
        for g2 in &cands.g2 {
            let pair = pair_block_params(g1, g2, space.beta, &space.gray, space.coords, &opts, exec);
            for (f, x) in cands.f.iter().zip(&xs) {
                hits.push(assemble_hit(space, f, g1, g2, x, &pair));
            }
        }
    }
    rank_hits(&mut hits);
    Ok(hits)
}
