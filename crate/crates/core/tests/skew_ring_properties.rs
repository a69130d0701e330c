mod common;

use common::{field, random_fe, random_poly, random_poly_upto, rng};
use skewcode_core::{Fe, GaloisField, SkewPoly, SkewRing};

const TRIPLES: usize = 10_000;
const DIVMOD: usize = 1_000;

/// Σ a_i x^i · Σ b_j x^j = Σ a_i Θ^i(b_j) x^{i+j}, straight from the definition.
fn naive_mul(f: &GaloisField, theta_exp: u32, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            let mut t = bj;
            for _ in 0..i {
                t = f.pow(t, f.characteristic().pow(theta_exp) as i64).unwrap();
            }
            out[i + j] = f.add(out[i + j], f.mul(ai, t));
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn axioms(q: u32, theta_exp: u32, salt: u64) {
    let f = field(q);
    let ring = SkewRing::new(f.clone(), theta_exp);
    let mut rng = rng(salt);
    for _ in 0..TRIPLES {
        let a = random_poly_upto(&ring, 5, &mut rng);
        let b = random_poly_upto(&ring, 5, &mut rng);
        let c = random_poly_upto(&ring, 5, &mut rng);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.coeffs(), naive_mul(&f, theta_exp, a.coeffs(), b.coeffs()).as_slice());
        assert_eq!(
            ab.mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap(),
            "associativity"
        );
        let bc = b.add(&c).unwrap();
        assert_eq!(
            a.mul(&bc).unwrap(),
            ab.add(&a.mul(&c).unwrap()).unwrap(),
            "left distributivity"
        );
        assert_eq!(
            a.add(&b).unwrap().mul(&c).unwrap(),
            a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap(),
            "right distributivity"
        );
        assert_eq!(a.mul(&SkewPoly::one(&ring)).unwrap(), a);
        assert_eq!(a.add(&a.neg()).unwrap(), SkewPoly::zero(&ring));
        let s = random_fe(&f, &mut rng);
        let x = SkewPoly::monomial(&ring, Fe::ONE, 1);
        let xs = x.mul(&SkewPoly::monomial(&ring, s, 0)).unwrap();
        assert_eq!(
            xs,
            SkewPoly::monomial(&ring, f.frobenius(s, theta_exp), 1),
            "x·a = Θ(a)·x"
        );
    }
}

#[test]
fn axioms_f9() {
    axioms(9, 1, 9);
}

#[test]
fn axioms_f25() {
    axioms(25, 1, 25);
}

#[test]
fn axioms_f49() {
    axioms(49, 1, 49);
}

#[test]
fn axioms_f81_theta_squared() {
    axioms(81, 2, 81);
}

#[test]
fn divmod_reconstruction() {
    let mut rng = rng(7);
    for (idx, q) in [9u32, 25, 49].into_iter().cycle().take(DIVMOD).enumerate() {
        let ring = SkewRing::new(field(q), 1);
        let b = random_poly(&ring, Some(1 + idx % 5), &mut rng);
        let db = b.degree().unwrap();
        let q0 = random_poly_upto(&ring, 6, &mut rng);
        let r0 = random_poly_upto(&ring, db - 1, &mut rng);
        let a = q0.mul(&b).unwrap().add(&r0).unwrap();
        let (qq, rr) = a.right_divmod(&b).unwrap();
        assert_eq!(qq, q0, "quotient is unique");
        assert_eq!(rr, r0, "remainder is unique");
        assert!(rr.degree().is_none_or(|d| d < db));
        assert_eq!(qq.mul(&b).unwrap().add(&rr).unwrap(), a);
        let exact = q0.mul(&b).unwrap().right_quotient(&b).unwrap();
        assert_eq!(exact, Some(q0));
    }
}

#[test]
fn dagger_matches_definition() {
    let f = field(9);
    let ring = SkewRing::new(f.clone(), 1);
    let mut rng = rng(11);
    for _ in 0..500 {
        let h = random_poly_upto(&ring, 7, &mut rng);
        if h.is_zero() {
            continue;
        }
        let d = h.degree().unwrap();
        let dag = h.dagger().unwrap();
        for j in 0..=d {
            assert_eq!(dag.coeff(j), f.frobenius(h.coeff(d - j), (j as u32) % 2));
        }
    }
}
