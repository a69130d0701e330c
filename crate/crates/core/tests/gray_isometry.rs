mod common;

use common::{field, random_fe, rng};
use proptest::prelude::*;
use skewcode_core::fqr::{gray_map, lee_weight, mixed_inner_product};
use skewcode_core::rring::RNotation;
use skewcode_core::{Fe, GaloisField, GrayCoords, GrayMatrix, MixedWord, RElement, RingR};

const PAIRS: usize = 10_000;

fn random_word(f: &GaloisField, r: &RingR, alpha: usize, beta: usize, rng: &mut impl rand::Rng) -> MixedWord {
    MixedWord {
        x: (0..alpha).map(|_| random_fe(f, rng)).collect(),
        y: (0..beta)
            .map(|_| r.from_additive(random_fe(f, rng), random_fe(f, rng)))
            .collect(),
    }
}

/// Lee weight from the additive form a + ub: the pair fed to M is
/// (a, a + b), and the weight is the Hamming weight of (a, a + b)·M.
fn lee_oracle(f: &GaloisField, r: &RingR, l: &MixedWord, m: &GrayMatrix) -> usize {
    let mut w = l.x.iter().filter(|a| !a.is_zero()).count();
    for &y in &l.y {
        let (a, b) = r.to_additive(y);
        let (c1, c2) = (a, f.add(a, b));
        let s = f.add(f.mul(c1, m.m[0][0]), f.mul(c2, m.m[1][0]));
        let t = f.add(f.mul(c1, m.m[0][1]), f.mul(c2, m.m[1][1]));
        w += usize::from(!s.is_zero()) + usize::from(!t.is_zero());
    }
    w
}

fn isometry(q: u32, salt: u64) {
    let f = field(q);
    let r = RingR::new(f.clone());
    let mut rng = rng(salt);
    let mats = [GrayMatrix::hadamard(&f).unwrap(), GrayMatrix::identity(&f)];
    for i in 0..PAIRS {
        let m = &mats[i % 2];
        let (alpha, beta) = (1 + i % 5, 1 + i % 7);
        let l1 = random_word(&f, &r, alpha, beta, &mut rng);
        let l2 = random_word(&f, &r, alpha, beta, &mut rng);
        let p1 = gray_map(&f, &l1, m, GrayCoords::Idempotent);
        let p2 = gray_map(&f, &l2, m, GrayCoords::Idempotent);
        let hamming = p1.iter().zip(&p2).filter(|(a, b)| a != b).count();
        let diff = l1.sub(&f, &l2).unwrap();
        assert_eq!(hamming, lee_oracle(&f, &r, &diff, m), "d_H(φ(l), φ(l')) = w_L(l − l')");
        assert_eq!(lee_weight(&f, &diff, m, GrayCoords::Idempotent), hamming);
    }
}

#[test]
fn isometry_f9() {
    isometry(9, 1);
}

#[test]
fn isometry_f25() {
    isometry(25, 2);
}

#[test]
fn isometry_f49() {
    isometry(49, 3);
}

/// For M·Mᵀ = γI, ⟨φ(l), φ(l')⟩ = ξ₁-part · γ + ξ₂-part · γ in CRT terms,
/// so orthogonal words map to orthogonal words.
#[test]
fn orthogonality_is_preserved() {
    let f = field(9);
    let r = RingR::new(f.clone());
    let m = GrayMatrix::hadamard(&f).unwrap();
    let mut rng = rng(4);
    for _ in 0..2_000 {
        let l1 = random_word(&f, &r, 0, 4, &mut rng);
        let l2 = random_word(&f, &r, 0, 4, &mut rng);
        let ip = mixed_inner_product(&f, &l1, &l2).unwrap();
        let p1 = gray_map(&f, &l1, &m, GrayCoords::Idempotent);
        let p2 = gray_map(&f, &l2, &m, GrayCoords::Idempotent);
        let dot = p1
            .iter()
            .zip(&p2)
            .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
        assert_eq!(dot, f.mul(m.gamma, f.add(ip.c1, ip.c2)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, rng_seed: proptest::test_runner::RngSeed::Fixed(common::SEED), ..ProptestConfig::default() })]

    #[test]
    fn r_additive_round_trip(a in 0u32..25, b in 0u32..25) {
        let f = field(25);
        let r = RingR::new(f.clone());
        let (a, b) = (f.element(a).unwrap(), f.element(b).unwrap());
        let x = r.from_additive(a, b);
        prop_assert_eq!(r.to_additive(x), (a, b));
        for notation in [RNotation::Crt, RNotation::Additive] {
            prop_assert_eq!(r.parse(&r.format(x, notation)).unwrap(), x);
        }
    }

    #[test]
    fn u_is_idempotent_and_xi_split(a in 0u32..49, b in 0u32..49) {
        let f = field(49);
        let r = RingR::new(f.clone());
        let x = RElement::new(f.element(a).unwrap(), f.element(b).unwrap());
        prop_assert_eq!(r.mul(RElement::U, RElement::U), RElement::U);
        let split = r.add(r.mul(RElement::XI1, x), r.mul(RElement::U, x));
        prop_assert_eq!(split, x);
        prop_assert_eq!(r.eta(x), x.c1);
    }
}
