mod common;

use std::sync::Arc;

use common::field;
use skewcode_core::fqr::{gray_image_of, mixed_dual_of, module_span, x_block_ring};
use skewcode_core::quantum::check_dual_containing;
use skewcode_core::search::right_divisors;
use skewcode_core::{CodeSpec, GrayCoords, GrayMatrix, SkewPoly, SkewRing};

const SHAPES: [(usize, usize); 3] = [(3, 4), (5, 4), (3, 6)];

fn divisors_upto_two(ring: &Arc<SkewRing>, n: usize) -> Vec<SkewPoly> {
    let mut out = vec![SkewPoly::one(ring)];
    for d in 1..=2 {
        out.extend(right_divisors(ring, n, d, 1_000).unwrap());
    }
    out
}

#[derive(Default, Debug)]
struct Tally {
    cases: usize,
    certified: usize,
    agree: usize,
    dual_commutes: usize,
}

fn sweep(alpha: usize, beta: usize) -> Tally {
    let f = field(9);
    let m = GrayMatrix::hadamard(&f).unwrap();
    let fs = divisors_upto_two(&x_block_ring(&f, 1, alpha), alpha);
    let gs = divisors_upto_two(&SkewRing::new(f.clone(), 1), beta);
    let mut t = Tally::default();
    for fp in &fs {
        for g1 in &gs {
            for g2 in &gs {
                let spec = CodeSpec::from_polys(f.clone(), 1, alpha, beta, fp.clone(), g1.clone(), g2.clone()).unwrap();
                let cert = check_dual_containing(&spec).unwrap();
                assert!(cert.witnesses_hold());
                let basis = module_span(&spec).unwrap();
                let image = gray_image_of(&basis, alpha, beta, &m, GrayCoords::Idempotent).unwrap();
                let explicit = image.contains(&image.dual()).unwrap();
                let dual_image = gray_image_of(
                    &mixed_dual_of(&basis, alpha, beta).unwrap(),
                    alpha,
                    beta,
                    &m,
                    GrayCoords::Idempotent,
                )
                .unwrap();
                t.cases += 1;
                t.certified += usize::from(cert.is_valid());
                t.agree += usize::from(cert.is_valid() == explicit);
                t.dual_commutes += usize::from(dual_image.same_space(&image.dual()).unwrap());
            }
        }
    }
    t
}

#[test]
fn certificate_agrees_with_gray_image_containment() {
    for (alpha, beta) in SHAPES {
        let t = sweep(alpha, beta);
        eprintln!("({alpha},{beta}): {t:?}");
        assert!(t.cases > 0 && t.certified > 0, "{alpha},{beta}: {t:?}");
        assert_eq!(t.agree, t.cases, "{alpha},{beta}: {t:?}");
        assert_eq!(t.dual_commutes, t.cases, "φ(C⊥) = φ(C)⊥ at {alpha},{beta}: {t:?}");
    }
}
