//! Seeded consistency suites: ring axioms against a schoolbook product,
//! division, Gray isometry, certificate versus explicit containment, and
//! the two distance kernels against each other.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use skewcode_core::fqr::{gray_image_of, gray_map, mixed_dual_of, module_span, x_block_ring};
use skewcode_core::quantum::check_dual_containing;
use skewcode_core::search::right_divisors;
use skewcode_core::{
    CodeSpec, DistanceOptions, DistanceStrategy, Fe, GaloisField, GeneratorMatrix, GrayCoords, GrayMatrix, MixedWord,
    Result, RingR, Sequential, SkewPoly, SkewRing,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Cases run and cases that broke the property.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub cases: usize,
    pub failures: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.cases += 1;
        self.failures += usize::from(!ok);
    }

    pub fn clean(&self) -> bool {
        self.cases > 0 && self.failures == 0
    }
}

fn fe(f: &GaloisField, rng: &mut impl Rng) -> Fe {
    f.element(rng.gen_range(0..f.order())).expect("in range")
}

fn poly_upto(ring: &Arc<SkewRing>, max: usize, rng: &mut impl Rng) -> SkewPoly {
    let f = ring.field();
    let len = rng.gen_range(0..=max + 1);
    SkewPoly::new(ring, (0..len).map(|_| fe(f, rng)).collect())
}

/// Σ a_i Θ^i(b_j) x^{i+j}.
fn schoolbook(ring: &SkewRing, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let f = ring.field();
    let mut out = vec![Fe::ZERO; (a.len() + b.len()).saturating_sub(1)];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ai, ring.theta_pow(i, bj)));
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Associativity, both distributive laws, the product against
/// [`schoolbook`], and x·a = Θ(a)·x.
pub fn skew_ring_axioms(q: u32, triples: usize, seed: u64) -> Result<Tally> {
    let field = Arc::new(GaloisField::with_order(q)?);
    let ring = SkewRing::new(Arc::clone(&field), 1);
    let x = SkewPoly::monomial(&ring, Fe::ONE, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q as u64);
    let mut t = Tally::default();
    for _ in 0..triples {
        let a = poly_upto(&ring, 5, &mut rng);
        let b = poly_upto(&ring, 5, &mut rng);
        let c = poly_upto(&ring, 5, &mut rng);
        let ab = a.mul(&b)?;
        let s = fe(&field, &mut rng);
        let ok = ab.coeffs() == schoolbook(&ring, a.coeffs(), b.coeffs()).as_slice()
            && ab.mul(&c)? == a.mul(&b.mul(&c)?)?
            && a.mul(&b.add(&c)?)? == ab.add(&a.mul(&c)?)?
            && a.add(&b)?.mul(&c)? == a.mul(&c)?.add(&b.mul(&c)?)?
            && x.mul(&SkewPoly::monomial(&ring, s, 0))? == SkewPoly::monomial(&ring, field.frobenius(s, 1), 1);
        t.record(ok);
    }
    Ok(t)
}

/// a = q·b + r with known (q, r) must come back unchanged.
pub fn divmod_reconstruction(instances: usize, seed: u64) -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rings: Vec<_> = [9u32, 25, 49]
        .iter()
        .map(|&q| Ok(SkewRing::new(Arc::new(GaloisField::with_order(q)?), 1)))
        .collect::<Result<_>>()?;
    let mut t = Tally::default();
    for i in 0..instances {
        let ring = &rings[i % rings.len()];
        let f = ring.field();
        let db = 1 + i % 5;
        let mut bc: Vec<Fe> = (0..db).map(|_| fe(f, &mut rng)).collect();
        bc.push(f.element(rng.gen_range(1..f.order()))?);
        let b = SkewPoly::new(ring, bc);
        let q0 = poly_upto(ring, 6, &mut rng);
        let r0 = poly_upto(ring, db - 1, &mut rng);
        let a = q0.mul(&b)?.add(&r0)?;
        let (q, r) = a.right_divmod(&b)?;
        t.record(q == q0 && r == r0);
    }
    Ok(t)
}

/// d_H(φ(l), φ(l′)) = w_L(l − l′), with w_L read off the additive form.
pub fn gray_isometry(q: u32, pairs: usize, seed: u64) -> Result<Tally> {
    let field = Arc::new(GaloisField::with_order(q)?);
    let r = RingR::new(Arc::clone(&field));
    let m = GrayMatrix::hadamard(&field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((q as u64) << 8));
    let word = |alpha: usize, beta: usize, rng: &mut ChaCha8Rng| MixedWord {
        x: (0..alpha).map(|_| fe(&field, rng)).collect(),
        y: (0..beta)
            .map(|_| r.from_additive(fe(&field, rng), fe(&field, rng)))
            .collect(),
    };
    let mut t = Tally::default();
    for i in 0..pairs {
        let (alpha, beta) = (1 + i % 5, 1 + i % 7);
        let l1 = word(alpha, beta, &mut rng);
        let l2 = word(alpha, beta, &mut rng);
        let p1 = gray_map(&field, &l1, &m, GrayCoords::Idempotent);
        let p2 = gray_map(&field, &l2, &m, GrayCoords::Idempotent);
        let hamming = p1.iter().zip(&p2).filter(|(a, b)| a != b).count();
        let diff = l1.sub(&field, &l2)?;
        let mut lee = diff.x.iter().filter(|a| !a.is_zero()).count();
        for &y in &diff.y {
            let (a, b) = r.to_additive(y);
            let (s, u) = m.apply(&field, a, field.add(a, b));
            lee += usize::from(!s.is_zero()) + usize::from(!u.is_zero());
        }
        t.record(hamming == lee);
    }
    Ok(t)
}

/// Totals of the certificate sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SweepTally {
    pub cases: usize,
    pub certified: usize,
    pub agree: usize,
    pub dual_commutes: usize,
}

/// Shapes of the exhaustive sweep over GF(9) with Θ = Frobenius.
pub const SWEEP_SHAPES: [(usize, usize); 3] = [(3, 4), (5, 4), (3, 6)];

fn divisors_upto_two(ring: &Arc<SkewRing>, n: usize) -> Result<Vec<SkewPoly>> {
    let mut out = vec![SkewPoly::one(ring)];
    for d in 1..=2 {
        out.extend(right_divisors(ring, n, d, 1_000)?);
    }
    Ok(out)
}

/// Every monic right-divisor triple of degree ≤ 2: the certificate against
/// φ(C)⊥ ⊆ φ(C), and φ(C⊥) against φ(C)⊥.
pub fn certificate_sweep(alpha: usize, beta: usize) -> Result<SweepTally> {
    let field = Arc::new(GaloisField::with_order(9)?);
    let m = GrayMatrix::hadamard(&field)?;
    let fs = divisors_upto_two(&x_block_ring(&field, 1, alpha), alpha)?;
    let gs = divisors_upto_two(&SkewRing::new(Arc::clone(&field), 1), beta)?;
    let mut t = SweepTally::default();
    for f in &fs {
        for g1 in &gs {
            for g2 in &gs {
                let spec = CodeSpec::from_polys(Arc::clone(&field), 1, alpha, beta, f.clone(), g1.clone(), g2.clone())?;
                let cert = check_dual_containing(&spec)?;
                let basis = module_span(&spec)?;
                let image = gray_image_of(&basis, alpha, beta, &m, GrayCoords::Idempotent)?;
                let image_dual = image.dual();
                let explicit = image.contains(&image_dual)?;
                let dual_image = gray_image_of(
                    &mixed_dual_of(&basis, alpha, beta)?,
                    alpha,
                    beta,
                    &m,
                    GrayCoords::Idempotent,
                )?;
                t.cases += 1;
                t.certified += usize::from(cert.is_valid());
                t.agree += usize::from(cert.is_valid() == explicit && cert.witnesses_hold());
                t.dual_commutes += usize::from(dual_image.same_space(&image_dual)?);
            }
        }
    }
    Ok(t)
}

/// Random codes with n ≤ 12, k ≤ 6 over GF(3) and GF(9); a failure is any
/// disagreement between enumeration and column dependence.
pub fn distance_agreement(codes: usize, seed: u64) -> Result<Tally> {
    let fields = [
        Arc::new(GaloisField::with_order(3)?),
        Arc::new(GaloisField::with_order(9)?),
    ];
    let with = |strategy| DistanceOptions {
        strategy,
        ..DistanceOptions::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    while t.cases < codes {
        let f = &fields[t.cases % 2];
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=6.min(n));
        let rows: Vec<Vec<Fe>> = (0..k).map(|_| (0..n).map(|_| fe(f, &mut rng)).collect()).collect();
        let code = GeneratorMatrix::from_rows(Arc::clone(f), n, rows)?;
        if code.dimension() == 0 {
            continue;
        }
        let e = code.min_distance(&with(DistanceStrategy::Enumerate), &Sequential)?;
        let c = code.min_distance(&with(DistanceStrategy::ColumnDependence), &Sequential)?;
        t.record(e == c);
    }
    Ok(t)
}

/// Every suite at its full size.
#[derive(Debug, Clone, Serialize)]
pub struct SelfCheck {
    pub seed: u64,
    pub skew_axioms: Vec<(u32, Tally)>,
    pub divmod: Tally,
    pub gray_isometry: Vec<(u32, Tally)>,
    pub certificate: Vec<((usize, usize), SweepTally)>,
    pub distance: Tally,
}

impl SelfCheck {
    pub fn passed(&self) -> bool {
        self.skew_axioms.iter().all(|(_, t)| t.clean())
            && self.divmod.clean()
            && self.gray_isometry.iter().all(|(_, t)| t.clean())
            && self
                .certificate
                .iter()
                .all(|(_, t)| t.cases > 0 && t.agree == t.cases && t.dual_commutes == t.cases)
            && self.distance.clean()
    }
}

pub fn run_all(seed: u64) -> Result<SelfCheck> {
    let qs = [9u32, 25, 49];
    Ok(SelfCheck {
        seed,
        skew_axioms: qs
            .iter()
            .map(|&q| Ok((q, skew_ring_axioms(q, 10_000, seed)?)))
            .collect::<Result<_>>()?,
        divmod: divmod_reconstruction(1_000, seed)?,
        gray_isometry: qs
            .iter()
            .map(|&q| Ok((q, gray_isometry(q, 10_000, seed)?)))
            .collect::<Result<_>>()?,
        certificate: SWEEP_SHAPES
            .iter()
            .map(|&(a, b)| Ok(((a, b), certificate_sweep(a, b)?)))
            .collect::<Result<_>>()?,
        distance: distance_agreement(200, seed)?,
    })
}
