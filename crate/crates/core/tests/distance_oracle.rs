mod common;

use common::{field, random_fe, rng};
use rand::Rng;
use skewcode_core::lincode::{hamming_weight, skew_code_matrix};
use skewcode_core::{DistanceOptions, DistanceStrategy, GeneratorMatrix, Sequential, SkewPoly, SkewRing};

const CODES: usize = 200;

fn with(strategy: DistanceStrategy) -> DistanceOptions {
    DistanceOptions {
        strategy,
        ..DistanceOptions::default()
    }
}

#[test]
fn enumerate_and_column_dependence_agree() {
    let mut rng = rng(200);
    let mut disagreements = 0;
    for i in 0..CODES {
        let f = field(if i % 2 == 0 { 3 } else { 9 });
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=6.min(n));
        let rows: Vec<_> = (0..k)
            .map(|_| (0..n).map(|_| random_fe(&f, &mut rng)).collect())
            .collect();
        let Ok(code) = GeneratorMatrix::from_rows(f.clone(), n, rows) else {
            continue;
        };
        if code.dimension() == 0 {
            continue;
        }
        let e = code
            .min_distance(&with(DistanceStrategy::Enumerate), &Sequential)
            .unwrap();
        let c = code
            .min_distance(&with(DistanceStrategy::ColumnDependence), &Sequential)
            .unwrap();
        let a = code.min_distance(&with(DistanceStrategy::Auto), &Sequential).unwrap();
        disagreements += usize::from(e != c || e != a);
        let row_min = code.canonical().iter().map(|r| hamming_weight(r)).min().unwrap();
        assert!(e <= row_min);
    }
    assert_eq!(disagreements, 0);
}

#[test]
fn known_codes() {
    // ternary Golay [11, 6, 5] from its generator polynomial
    let f = field(3);
    let ring = SkewRing::commutative(f.clone());
    let g = SkewPoly::new(
        &ring,
        [2u32, 0, 1, 2, 1, 1].iter().map(|&v| f.element(v).unwrap()).collect(),
    );
    let golay = skew_code_matrix(&g, 11).unwrap();
    assert_eq!(golay.dimension(), 6);
    for s in [DistanceStrategy::Enumerate, DistanceStrategy::ColumnDependence] {
        assert_eq!(golay.min_distance(&with(s), &Sequential).unwrap(), 5);
    }
    // [n, n, 1] and the repetition code
    assert_eq!(
        GeneratorMatrix::full_space(f.clone(), 7)
            .min_distance(&with(DistanceStrategy::Auto), &Sequential)
            .unwrap(),
        1
    );
    let rep = GeneratorMatrix::from_rows(f, 7, vec![vec![common::field(3).element(1).unwrap(); 7]]).unwrap();
    assert_eq!(
        rep.min_distance(&with(DistanceStrategy::ColumnDependence), &Sequential)
            .unwrap(),
        7
    );
}

#[test]
fn budget_is_reported() {
    let f = field(9);
    let mut rng = rng(9);
    let rows: Vec<_> = (0..10)
        .map(|_| (0..40).map(|_| random_fe(&f, &mut rng)).collect())
        .collect();
    let code = GeneratorMatrix::from_rows(f, 40, rows).unwrap();
    let opts = DistanceOptions {
        strategy: DistanceStrategy::ColumnDependence,
        budget: 10,
        ..DistanceOptions::default()
    };
    assert!(code.min_distance(&opts, &Sequential).is_err());
}
