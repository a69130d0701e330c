#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewcode_core::{Fe, GaloisField, SkewPoly, SkewRing};

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

pub fn field(q: u32) -> Arc<GaloisField> {
    Arc::new(GaloisField::with_order(q).unwrap())
}

pub fn random_fe(f: &GaloisField, rng: &mut impl Rng) -> Fe {
    f.element(rng.gen_range(0..f.order())).unwrap()
}

pub fn random_nonzero(f: &GaloisField, rng: &mut impl Rng) -> Fe {
    f.element(rng.gen_range(1..f.order())).unwrap()
}

/// Random polynomial of degree exactly `deg` (or zero when `deg` is None).
pub fn random_poly(ring: &Arc<SkewRing>, deg: Option<usize>, rng: &mut impl Rng) -> SkewPoly {
    let f = ring.field();
    match deg {
        None => SkewPoly::zero(ring),
        Some(d) => {
            let mut c: Vec<Fe> = (0..d).map(|_| random_fe(f, rng)).collect();
            c.push(random_nonzero(f, rng));
            SkewPoly::new(ring, c)
        }
    }
}

pub fn random_poly_upto(ring: &Arc<SkewRing>, max: usize, rng: &mut impl Rng) -> SkewPoly {
    let d = rng.gen_range(0..=max + 1);
    random_poly(ring, d.checked_sub(1), rng)
}
