//! One line per acceptance criterion. A criterion that misses its published
//! value is printed as FAIL with the reason; the process exits nonzero only
//! when a result is wrong without a recorded explanation.

use std::sync::Arc;
use std::time::{Duration, Instant};

use skewcode::parallel::Parallel;
use skewcode::selfcheck::{self, DEFAULT_SEED};
use skewcode::table1::{compare_with_existing, reproduce_row, ROWS};
use skewcode_core::fqr::{gray_image_matrix, x_block_ring};
use skewcode_core::quantum::{check_dual_containing, css_params, Route};
use skewcode_core::search::binomial_multiple;
use skewcode_core::skewpoly::parse_ascending;
use skewcode_core::{CodeSpec, DistanceOptions, Fe, GaloisField, GrayCoords, GrayMatrix, SkewPoly, SkewRing};

struct Line {
    id: &'static str,
    pass: bool,
    /// Set when a FAIL is accounted for by a verified structural reason.
    explained: bool,
    detail: String,
}

fn report(lines: &[Line]) -> bool {
    let mut clean = true;
    for l in lines {
        let tag = if l.pass { "PASS" } else { "FAIL" };
        println!("criterion {:<3} {tag}  {}", l.id, l.detail);
        clean &= l.pass || l.explained;
    }
    clean
}

/// Reads sums like `w^2x^{34} + 2x^{33} + wx + 1`.
fn poly(ring: &Arc<SkewRing>, s: &str) -> SkewPoly {
    let f = ring.field();
    let mut coeffs: Vec<Fe> = Vec::new();
    for term in s.split('+').map(|t| t.replace([' ', '{', '}'], "")) {
        let (c, e) = match term.find('x') {
            Some(i) => (
                &term[..i],
                term[i + 1..].strip_prefix('^').map_or(1, |e| e.parse().unwrap()),
            ),
            None => (term.as_str(), 0),
        };
        let c = if c.is_empty() { Fe::ONE } else { f.parse(c).unwrap() };
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Fe::ZERO);
        }
        coeffs[e] = f.add(coeffs[e], c);
    }
    SkewPoly::new(ring, coeffs)
}

const Q1: &str = "w^6x^{32} + w^5x^{31} + wx^{30} + w^6x^{29} + w^7x^{28} + w^2x^{27} + 2x^{26} + 2x^{25} + 2x^{24} + w^6x^{23} + w^7x^{22} + w^2x^{21} + wx^{20} + w^7x^{19} + w^6x^{18} + w^2x^{14} + wx^{13} + w^5x^{12} + w^2x^{11} + w^3x^{10} + w^6x^9 + x^8 + x^7 + x^6 + w^2x^5 + w^3x^4 + w^6x^3 + w^5x^2 + w^3x + w^2";

fn gray_params(spec: &CodeSpec) -> (usize, usize, usize) {
    let m = GrayMatrix::hadamard(spec.field()).unwrap();
    let image = gray_image_matrix(spec, &m, GrayCoords::Idempotent).unwrap();
    let d = image.min_distance(&DistanceOptions::default(), &Parallel).unwrap();
    (image.length(), image.dimension(), d)
}

/// Weight-2 word x^m − c in C′ when f right-divides it for some m < α.
fn binomial_note(f: &SkewPoly, alpha: usize) -> Option<String> {
    binomial_multiple(f, alpha).unwrap().map(|(m, c)| {
        format!(
            "f right-divides x^{m} - {} (weight 2), so d(C') = 2 bounds d",
            f.field().format(c)
        )
    })
}

fn criterion_1() -> Line {
    let start = Instant::now();
    let f = Arc::new(GaloisField::with_order(9).unwrap());
    let xr = x_block_ring(&f, 1, 18);
    let yr = SkewRing::new(f.clone(), 1);
    let fp = parse_ascending(&xr, "1,1,w^3,1").unwrap();
    let spec = CodeSpec::from_polys(
        f.clone(),
        1,
        18,
        36,
        fp.clone(),
        parse_ascending(&yr, "w^2,1").unwrap(),
        parse_ascending(&yr, "1,1,w^2").unwrap(),
    )
    .unwrap();
    let (n, k, d) = gray_params(&spec);
    let t = start.elapsed();
    let pass = (n, k, d) == (90, 84, 4) && t < Duration::from_secs(60);
    let note = binomial_note(&fp, 18);
    Line {
        id: "1",
        pass,
        explained: (n, k) == (90, 84) && d == 2 && note.is_some(),
        detail: format!(
            "gray example: [{n},{k},{d}]_9, expected [90,84,4]_9, {:.2}s (limit 60s){}",
            t.as_secs_f64(),
            note.map(|s| format!("; {s}")).unwrap_or_default()
        ),
    }
}

fn criterion_2() -> Vec<Line> {
    let start = Instant::now();
    let f = Arc::new(GaloisField::with_order(9).unwrap());
    let xr = x_block_ring(&f, 1, 49);
    let yr = SkewRing::new(f.clone(), 1);
    let fp = parse_ascending(&xr, "2,w^5,w^3,1").unwrap();
    let spec = CodeSpec::from_polys(
        f.clone(),
        1,
        49,
        36,
        fp.clone(),
        parse_ascending(&yr, "1,1,w^6").unwrap(),
        parse_ascending(&yr, "1,1,w^2").unwrap(),
    )
    .unwrap();
    let cert = check_dual_containing(&spec).unwrap();
    let a = cert.route == Route::Coprime && cert.f_check.passed && cert.f_check.witnesses_hold(Route::Coprime, 49);
    let q1 = cert.g1_check.quotient.clone();
    let b =
        cert.g1_check.passed && cert.g2_check.passed && cert.witnesses_hold() && q1.as_ref() == Some(&poly(&yr, Q1));
    let (n, k, d) = gray_params(&spec);
    let quantum = css_params(n, k, d, 9).unwrap();
    let t = start.elapsed();
    let c = (n, k, d) == (121, 114, 4)
        && (quantum.n, quantum.k, quantum.d) == (121, 107, 4)
        && t < Duration::from_secs(120);
    let note = binomial_note(&fp, 49);
    vec![
        Line {
            id: "2a",
            pass: a,
            explained: false,
            detail: format!("quantum example: f*f^* = {} divides x^49-1", cert.f_check.product),
        },
        Line {
            id: "2b",
            pass: b,
            explained: false,
            detail: format!(
                "quantum example: h1'h1 and h2'h2 right-divisible by x^36-1; h1 quotient (degree {}) {} the printed one",
                q1.as_ref().and_then(|q| q.degree()).map_or("-".into(), |d| d.to_string()),
                if b { "equals" } else { "differs from" }
            ),
        },
        Line {
            id: "2c",
            pass: c,
            explained: (n, k, quantum.k) == (121, 114, 107) && d == 2 && note.is_some(),
            detail: format!(
                "quantum example: [{n},{k},{d}]_9 / {quantum}, expected [121,114,4]_9 / [[121,107,4]]_9, {:.2}s (limit 120s){}",
                t.as_secs_f64(),
                note.map(|s| format!("; {s}")).unwrap_or_default()
            ),
        },
    ]
}

fn criterion_3() -> Line {
    let opts = DistanceOptions::default();
    let mut parts = Vec::new();
    let mut all = true;
    let mut explained = true;
    for row in &ROWS {
        let r = reproduce_row(row, "hadamard", GrayCoords::Idempotent, &opts, &Parallel, true).unwrap();
        let consistent = r.explicit_dual_containing == Some(r.dual_containing);
        let timely = row.index != 4 || r.seconds < 600.0;
        let pass = r.pass && consistent && timely;
        all &= pass;
        let d_note = r.notes.iter().any(|n| n.contains("weight 2"));
        explained &= pass || (consistent && timely && r.n == row.classical.0 && r.k == row.classical.1 && d_note);
        let got = if r.dual_containing {
            format!("[{},{},{}]/[[{},{},{}]]", r.n, r.k, r.d, r.qn, r.qk, r.qd)
        } else {
            format!("[{},{},{}]/not dual-containing", r.n, r.k, r.d)
        };
        parts.push(format!("row {} {got} ({:.2}s)", row.index, r.seconds));
        for n in &r.notes {
            if n.contains("alpha = 225") || n.contains("fails for") || n.contains("zero constant") {
                parts.push(format!("row {} note: {n}", row.index));
            }
        }
    }
    Line {
        id: "3",
        pass: all,
        explained,
        detail: format!("table rows: {}", parts.join("; ")),
    }
}

fn criterion_4() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for (a, b) in selfcheck::SWEEP_SHAPES {
        let t = selfcheck::certificate_sweep(a, b).unwrap();
        ok &= t.cases > 0 && t.agree == t.cases;
        parts.push(format!(
            "({a},{b}) {}/{} agree, {} certified",
            t.agree, t.cases, t.certified
        ));
    }
    Line {
        id: "4",
        pass: ok,
        explained: false,
        detail: format!("certificate vs explicit containment: {}", parts.join(", ")),
    }
}

fn criterion_5() -> Line {
    let s = selfcheck::run_all(DEFAULT_SEED).unwrap();
    let axioms: Vec<String> = s
        .skew_axioms
        .iter()
        .map(|(q, t)| format!("GF({q}) {}/{}", t.cases - t.failures, t.cases))
        .collect();
    let gray: Vec<String> = s
        .gray_isometry
        .iter()
        .map(|(q, t)| format!("GF({q}) {}/{}", t.cases - t.failures, t.cases))
        .collect();
    let dual: usize = s.certificate.iter().map(|(_, t)| t.dual_commutes).sum();
    let cases: usize = s.certificate.iter().map(|(_, t)| t.cases).sum();
    Line {
        id: "5",
        pass: s.passed(),
        explained: false,
        detail: format!(
            "seed {:#x}: axioms {}; divmod {}/{}; isometry {}; phi(C^perp) = phi(C)^perp {dual}/{cases}; distance kernels {} disagreements in {}",
            s.seed,
            axioms.join(", "),
            s.divmod.cases - s.divmod.failures,
            s.divmod.cases,
            gray.join(", "),
            s.distance.failures,
            s.distance.cases
        ),
    }
}

fn criterion_6() -> Line {
    let c = compare_with_existing().unwrap();
    let better = c.iter().filter(|r| r.judgment == "better").count();
    Line {
        id: "6",
        pass: c.len() == 7 && better == 7,
        explained: false,
        detail: format!(
            "comparisons: {better}/7 better ({})",
            c.iter()
                .map(|r| format!("{} vs {}", r.new, r.existing))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    skewcode::parallel::init_pool(0).ok();
    let mut lines = vec![criterion_1()];
    lines.extend(criterion_2());
    lines.push(criterion_3());
    lines.push(criterion_4());
    lines.push(criterion_5());
    lines.push(criterion_6());
    let passed = lines.iter().filter(|l| l.pass).count();
    let clean = report(&lines);
    println!("acceptance: {passed}/{} pass", lines.len());
    if !clean {
        println!("acceptance: unexplained failure");
        std::process::exit(1);
    }
}
