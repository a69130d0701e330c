//! F_qR-skew cyclic codes of length (α, β).
//!
//! Codes are handled as F_q-subspaces of F_q^(α+2β) in split coordinates:
//! the α field coordinates, then the β ξ₁-coordinates, then the β
//! ξ₂-coordinates of the R part. The Gray image interleaves the R part
//! instead: after the α field coordinates come the two images of y_0, then
//! the two images of y_1, and so on.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{gcd, Fe, GaloisField};
use crate::lincode::{rref, skew_code_matrix, GeneratorMatrix};
use crate::rring::{RElement, RingR};
use crate::skewpoly::{SkewPoly, SkewRing};

/// A word of F_q^α × R^β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedWord {
    pub x: Vec<Fe>,
    pub y: Vec<RElement>,
}

impl MixedWord {
    pub fn zero(alpha: usize, beta: usize) -> Self {
        MixedWord {
            x: vec![Fe::ZERO; alpha],
            y: vec![RElement::ZERO; beta],
        }
    }

    pub fn alpha(&self) -> usize {
        self.x.len()
    }

    pub fn beta(&self) -> usize {
        self.y.len()
    }

    /// `(x | c₁ of every y_j | c₂ of every y_j)`.
    pub fn to_split(&self) -> Vec<Fe> {
        let mut v = self.x.clone();
        v.extend(self.y.iter().map(|r| r.c1));
        v.extend(self.y.iter().map(|r| r.c2));
        v
    }

    pub fn from_split(v: &[Fe], alpha: usize, beta: usize) -> Result<Self> {
        if v.len() != alpha + 2 * beta {
            return Err(Error::ShapeMismatch {
                expected: alpha + 2 * beta,
                got: v.len(),
            });
        }
        Ok(MixedWord {
            x: v[..alpha].to_vec(),
            y: (0..beta)
                .map(|j| RElement::new(v[alpha + j], v[alpha + beta + j]))
                .collect(),
        })
    }

    fn check_shape(&self, other: &MixedWord) -> Result<()> {
        if self.x.len() != other.x.len() {
            return Err(Error::ShapeMismatch {
                expected: self.x.len(),
                got: other.x.len(),
            });
        }
        if self.y.len() != other.y.len() {
            return Err(Error::ShapeMismatch {
                expected: self.y.len(),
                got: other.y.len(),
            });
        }
        Ok(())
    }

    pub fn sub(&self, field: &GaloisField, other: &MixedWord) -> Result<MixedWord> {
        self.check_shape(other)?;
        let r = RingR::new(Arc::new(field.clone()));
        Ok(MixedWord {
            x: self.x.iter().zip(&other.x).map(|(&a, &b)| field.sub(a, b)).collect(),
            y: self.y.iter().zip(&other.y).map(|(&a, &b)| r.sub(a, b)).collect(),
        })
    }
}

/// s * (x, y) = (η(s)x, sy).
pub fn scalar_action(field: &GaloisField, s: RElement, l: &MixedWord) -> MixedWord {
    let eta = s.c1;
    MixedWord {
        x: l.x.iter().map(|&a| field.mul(eta, a)).collect(),
        y: l.y
            .iter()
            .map(|r| RElement::new(field.mul(s.c1, r.c1), field.mul(s.c2, r.c2)))
            .collect(),
    }
}

/// σ: rotate each block right by one and apply Θ (resp. θ) everywhere.
pub fn sigma_shift(field: &GaloisField, theta_exp: u32, l: &MixedWord) -> MixedWord {
    let th = |a: Fe| field.frobenius(a, theta_exp);
    let rotate = |len: usize| move |i: usize| (i + len - 1) % len;
    let a = l.x.len();
    let b = l.y.len();
    let prev_x = rotate(a);
    let prev_y = rotate(b);
    MixedWord {
        x: (0..a).map(|i| th(l.x[prev_x(i)])).collect(),
        y: (0..b)
            .map(|j| {
                let r = l.y[prev_y(j)];
                RElement::new(th(r.c1), th(r.c2))
            })
            .collect(),
    }
}

/// l·l' = u Σ x_i x'_i + Σ y_j y'_j, returned in CRT form.
pub fn mixed_inner_product(field: &GaloisField, l: &MixedWord, l2: &MixedWord) -> Result<RElement> {
    l.check_shape(l2)?;
    let mut c1 = Fe::ZERO;
    let mut c2 = Fe::ZERO;
    for (&a, &b) in l.x.iter().zip(&l2.x) {
        c2 = field.add(c2, field.mul(a, b));
    }
    for (r, s) in l.y.iter().zip(&l2.y) {
        c1 = field.add(c1, field.mul(r.c1, s.c1));
        c2 = field.add(c2, field.mul(r.c2, s.c2));
    }
    Ok(RElement::new(c1, c2))
}

/// Which pair of F_q coordinates of r ∈ R is fed to the Gray matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GrayCoords {
    /// (c₁, c₂) with r = ξ₁c₁ + ξ₂c₂.
    #[default]
    Idempotent,
    /// (a, b) with r = a + ub. Experimental.
    Additive,
}

/// A 2×2 matrix M over F_q with M·Mᵀ = γ·I₂, γ ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayMatrix {
    pub m: [[Fe; 2]; 2],
    pub gamma: Fe,
}

impl GrayMatrix {
    pub fn new(field: &GaloisField, m: [[Fe; 2]; 2]) -> Result<Self> {
        let det = field.sub(field.mul(m[0][0], m[1][1]), field.mul(m[0][1], m[1][0]));
        if det.is_zero() {
            return Err(Error::GrayMatrix("matrix is singular"));
        }
        let row_dot = |i: usize, j: usize| field.add(field.mul(m[i][0], m[j][0]), field.mul(m[i][1], m[j][1]));
        let gamma = row_dot(0, 0);
        if gamma.is_zero() || row_dot(1, 1) != gamma || !row_dot(0, 1).is_zero() {
            return Err(Error::GrayMatrix("M·Mᵀ is not a nonzero multiple of I₂"));
        }
        Ok(GrayMatrix { m, gamma })
    }

    pub fn identity(field: &GaloisField) -> Self {
        GrayMatrix::new(field, [[Fe::ONE, Fe::ZERO], [Fe::ZERO, Fe::ONE]]).expect("identity is orthogonal")
    }

    /// [[1, 1], [1, −1]], with M·Mᵀ = 2I₂.
    pub fn hadamard(field: &GaloisField) -> Result<Self> {
        let m1 = field.neg(Fe::ONE);
        GrayMatrix::new(field, [[Fe::ONE, Fe::ONE], [Fe::ONE, m1]])
    }

    /// `identity`, `hadamard`, or four row-major element tokens `a,b,c,d`.
    pub fn parse(field: &GaloisField, s: &str) -> Result<Self> {
        match s.trim() {
            "identity" => Ok(GrayMatrix::identity(field)),
            "hadamard" => GrayMatrix::hadamard(field),
            other => {
                let t = other
                    .split(',')
                    .map(|tok| field.parse(tok))
                    .collect::<Result<Vec<Fe>>>()?;
                if t.len() != 4 {
                    return Err(Error::Parse(format!("Gray matrix needs 4 entries, got {}", t.len())));
                }
                GrayMatrix::new(field, [[t[0], t[1]], [t[2], t[3]]])
            }
        }
    }

    /// Row-major entry tokens.
    pub fn tokens(&self, field: &GaloisField) -> String {
        let m = &self.m;
        format!(
            "{},{},{},{}",
            field.format(m[0][0]),
            field.format(m[0][1]),
            field.format(m[1][0]),
            field.format(m[1][1])
        )
    }

    /// (a, b)·M.
    #[inline]
    pub fn apply(&self, field: &GaloisField, a: Fe, b: Fe) -> (Fe, Fe) {
        let m = &self.m;
        (
            field.add(field.mul(a, m[0][0]), field.mul(b, m[1][0])),
            field.add(field.mul(a, m[0][1]), field.mul(b, m[1][1])),
        )
    }
}

fn gray_pair(field: &GaloisField, r: RElement, coords: GrayCoords) -> (Fe, Fe) {
    match coords {
        GrayCoords::Idempotent => (r.c1, r.c2),
        GrayCoords::Additive => (r.c1, field.sub(r.c2, r.c1)),
    }
}

/// φ(x, y) = (x, (r_{0,1}, r_{0,2})M, (r_{1,1}, r_{1,2})M, ...).
pub fn gray_map(field: &GaloisField, l: &MixedWord, m: &GrayMatrix, coords: GrayCoords) -> Vec<Fe> {
    let mut out = Vec::with_capacity(l.x.len() + 2 * l.y.len());
    out.extend_from_slice(&l.x);
    for &r in &l.y {
        let (a, b) = gray_pair(field, r, coords);
        let (s, t) = m.apply(field, a, b);
        out.push(s);
        out.push(t);
    }
    out
}

/// Lee weight: Hamming weight of the Gray image.
pub fn lee_weight(field: &GaloisField, l: &MixedWord, m: &GrayMatrix, coords: GrayCoords) -> usize {
    gray_map(field, l, m, coords).iter().filter(|x| !x.is_zero()).count()
}

/// Generators of an F_qR-skew cyclic code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generators {
    /// (f(x), 0) and (0, ξ₁g₁(x) + ξ₂g₂(x)).
    Separable { f: SkewPoly, g1: SkewPoly, g2: SkewPoly },
    /// Arbitrary generator words (k(x), t(x)); the code is their closure under
    /// σ, the R-action and F_q-linear combinations.
    General { words: Vec<MixedWord> },
}

/// An F_qR-skew cyclic code description.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    field: Arc<GaloisField>,
    theta_exp: u32,
    alpha: usize,
    beta: usize,
    generators: Generators,
}

/// Ring in which the length-α block lives: F_q[x;Θ] unless gcd(α, |Θ|) = 1,
/// where skew cyclic codes of length α are ordinary cyclic codes and the
/// block is generated in the commutative ring F_q[x].
pub fn x_block_ring(field: &Arc<GaloisField>, theta_exp: u32, alpha: usize) -> Arc<SkewRing> {
    let order = field.automorphism_order(theta_exp);
    if gcd(alpha as u64, order as u64) == 1 {
        SkewRing::commutative(Arc::clone(field))
    } else {
        SkewRing::new(Arc::clone(field), theta_exp)
    }
}

impl CodeSpec {
    /// Separable code from coefficient lists (ascending). `f` is placed in
    /// [`x_block_ring`], `g1` and `g2` in F_q[x;Θ].
    pub fn separable(
        field: Arc<GaloisField>,
        theta_exp: u32,
        alpha: usize,
        beta: usize,
        f: Vec<Fe>,
        g1: Vec<Fe>,
        g2: Vec<Fe>,
    ) -> Result<Self> {
        let xr = x_block_ring(&field, theta_exp, alpha);
        let yr = SkewRing::new(Arc::clone(&field), theta_exp);
        CodeSpec::from_polys(
            field,
            theta_exp,
            alpha,
            beta,
            SkewPoly::new(&xr, f),
            SkewPoly::new(&yr, g1),
            SkewPoly::new(&yr, g2),
        )
    }

    /// Separable code from polynomials already placed in their rings.
    pub fn from_polys(
        field: Arc<GaloisField>,
        theta_exp: u32,
        alpha: usize,
        beta: usize,
        f: SkewPoly,
        g1: SkewPoly,
        g2: SkewPoly,
    ) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, n: 0 });
        }
        let xr = x_block_ring(&field, theta_exp, alpha);
        let yr = SkewRing::new(Arc::clone(&field), theta_exp);
        if **f.ring() != *xr || **g1.ring() != *yr || **g2.ring() != *yr {
            return Err(Error::ContextMismatch);
        }
        for p in [&f, &g1, &g2] {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(CodeSpec {
            field,
            theta_exp,
            alpha,
            beta,
            generators: Generators::Separable { f, g1, g2 },
        })
    }

    /// General code from generator words.
    pub fn general(
        field: Arc<GaloisField>,
        theta_exp: u32,
        alpha: usize,
        beta: usize,
        words: Vec<MixedWord>,
    ) -> Result<Self> {
        for w in &words {
            if w.alpha() != alpha || w.beta() != beta {
                return Err(Error::ShapeMismatch {
                    expected: alpha + beta,
                    got: w.alpha() + w.beta(),
                });
            }
        }
        Ok(CodeSpec {
            field,
            theta_exp,
            alpha,
            beta,
            generators: Generators::General { words },
        })
    }

    /// Generator word (k(x), t₁ξ₁ + t₂ξ₂) from coefficient lists; each
    /// polynomial must have degree below its block length.
    pub fn word_from_polys(alpha: usize, beta: usize, k: &[Fe], t1: &[Fe], t2: &[Fe]) -> Result<MixedWord> {
        for (p, len) in [(k, alpha), (t1, beta), (t2, beta)] {
            if p.len() > len {
                return Err(Error::DegreeOutOfRange {
                    degree: p.len() - 1,
                    n: len,
                });
            }
        }
        let mut w = MixedWord::zero(alpha, beta);
        w.x[..k.len()].copy_from_slice(k);
        for (j, &c) in t1.iter().enumerate() {
            w.y[j].c1 = c;
        }
        for (j, &c) in t2.iter().enumerate() {
            w.y[j].c2 = c;
        }
        Ok(w)
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn theta_exp(&self) -> u32 {
        self.theta_exp
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// α + 2β.
    pub fn length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    /// |⟨θ⟩|.
    pub fn theta_order(&self) -> u32 {
        self.field.automorphism_order(self.theta_exp)
    }

    /// Whether the R part is a ring quotient (|θ| divides β).
    pub fn beta_is_ring(&self) -> bool {
        self.beta.is_multiple_of(self.theta_order() as usize)
    }

    /// (α − deg f) + (β − deg g₁) + (β − deg g₂) for separable specs.
    pub fn expected_dimension(&self) -> Option<usize> {
        match &self.generators {
            Generators::Separable { f, g1, g2 } => {
                Some((self.alpha - f.degree()?) + (self.beta - g1.degree()?) + (self.beta - g2.degree()?))
            }
            Generators::General { .. } => None,
        }
    }

    /// The three component codes C′ (length α), C₁ and C₂ (length β).
    pub fn separable_blocks(&self) -> Result<(GeneratorMatrix, GeneratorMatrix, GeneratorMatrix)> {
        match &self.generators {
            Generators::Separable { f, g1, g2 } => Ok((
                skew_code_matrix(f, self.alpha)?,
                skew_code_matrix(g1, self.beta)?,
                skew_code_matrix(g2, self.beta)?,
            )),
            Generators::General { .. } => Err(Error::NotSeparable),
        }
    }
}

/// F_q-basis of the code, in split coordinates.
pub fn module_span(spec: &CodeSpec) -> Result<GeneratorMatrix> {
    let (a, b) = (spec.alpha, spec.beta);
    let n = spec.length();
    match &spec.generators {
        Generators::Separable { .. } => {
            let (cx, c1, c2) = spec.separable_blocks()?;
            let mut rows = Vec::with_capacity(cx.dimension() + c1.dimension() + c2.dimension());
            for r in cx.rows() {
                let mut v = vec![Fe::ZERO; n];
                v[..a].copy_from_slice(r);
                rows.push(v);
            }
            for r in c1.rows() {
                let mut v = vec![Fe::ZERO; n];
                v[a..a + b].copy_from_slice(r);
                rows.push(v);
            }
            for r in c2.rows() {
                let mut v = vec![Fe::ZERO; n];
                v[a + b..].copy_from_slice(r);
                rows.push(v);
            }
            GeneratorMatrix::from_rows(Arc::clone(&spec.field), n, rows)
        }
        Generators::General { words } => general_closure(spec, words),
    }
}

/// Fixed point of span ∪ σ(span) ∪ u*(span).
fn general_closure(spec: &CodeSpec, words: &[MixedWord]) -> Result<GeneratorMatrix> {
    let f = &spec.field;
    let (a, b) = (spec.alpha, spec.beta);
    let n = spec.length();
    let cap = n * spec.theta_order() as usize * 4;
    let mut basis: Vec<Vec<Fe>> = Vec::new();
    let mut frontier: Vec<Vec<Fe>> = words.iter().map(|w| w.to_split()).collect();
    for _ in 0..cap {
        let mut grown = false;
        let mut next = Vec::new();
        for v in frontier {
            let mut probe = basis.clone();
            probe.push(v.clone());
            if rref(f, probe, n).0.len() > rref_len(f, &basis, n) {
                basis.push(v.clone());
                grown = true;
                let word = MixedWord::from_split(&v, a, b)?;
                next.push(sigma_shift(f, spec.theta_exp, &word).to_split());
                next.push(scalar_action(f, RElement::U, &word).to_split());
            }
        }
        if !grown {
            return GeneratorMatrix::from_rows(Arc::clone(f), n, basis);
        }
        frontier = next;
    }
    Err(Error::SpanDidNotConverge(cap))
}

fn rref_len(f: &GaloisField, rows: &[Vec<Fe>], n: usize) -> usize {
    rref(f, rows.to_vec(), n).0.len()
}

/// Dual under the mixed inner product, for an arbitrary code basis in split
/// coordinates. Each R-valued constraint splits into a ξ₁ and a ξ₂ equation.
pub fn mixed_dual_of(basis: &GeneratorMatrix, alpha: usize, beta: usize) -> Result<GeneratorMatrix> {
    let n = alpha + 2 * beta;
    if basis.length() != n {
        return Err(Error::ShapeMismatch {
            expected: n,
            got: basis.length(),
        });
    }
    let mut constraints = Vec::with_capacity(2 * basis.dimension());
    for v in basis.canonical() {
        // ξ₁: Σ c₁ c₁'
        let mut e1 = vec![Fe::ZERO; n];
        e1[alpha..alpha + beta].copy_from_slice(&v[alpha..alpha + beta]);
        // ξ₂: Σ x x' + Σ c₂ c₂'
        let mut e2 = vec![Fe::ZERO; n];
        e2[..alpha].copy_from_slice(&v[..alpha]);
        e2[alpha + beta..].copy_from_slice(&v[alpha + beta..]);
        constraints.push(e1);
        constraints.push(e2);
    }
    let (rows, _) = rref(basis.field(), constraints, n);
    Ok(GeneratorMatrix::from_rows(Arc::clone(basis.field()), n, rows)?.dual())
}

/// Dual of the code under the mixed inner product, with warnings when the
/// duality theorems do not apply.
pub fn mixed_dual(spec: &CodeSpec) -> Result<(GeneratorMatrix, Vec<String>)> {
    let mut warnings = Vec::new();
    if !spec.beta_is_ring() {
        warnings.push(format!(
            "|theta| = {} does not divide beta = {}: the dual need not be skew cyclic",
            spec.theta_order(),
            spec.beta
        ));
    }
    let basis = module_span(spec)?;
    Ok((mixed_dual_of(&basis, spec.alpha, spec.beta)?, warnings))
}

/// Applies φ to a split-coordinate vector.
pub fn gray_split(
    field: &GaloisField,
    v: &[Fe],
    alpha: usize,
    beta: usize,
    m: &GrayMatrix,
    coords: GrayCoords,
) -> Result<Vec<Fe>> {
    Ok(gray_map(field, &MixedWord::from_split(v, alpha, beta)?, m, coords))
}

/// Gray image of a split-coordinate code.
pub fn gray_image_of(
    basis: &GeneratorMatrix,
    alpha: usize,
    beta: usize,
    m: &GrayMatrix,
    coords: GrayCoords,
) -> Result<GeneratorMatrix> {
    let f = basis.field();
    let rows = basis
        .rows()
        .iter()
        .map(|v| gray_split(f, v, alpha, beta, m, coords))
        .collect::<Result<Vec<_>>>()?;
    GeneratorMatrix::from_rows(Arc::clone(f), alpha + 2 * beta, rows)
}

/// φ(C) as a linear code of length α + 2β.
pub fn gray_image_matrix(spec: &CodeSpec, m: &GrayMatrix, coords: GrayCoords) -> Result<GeneratorMatrix> {
    gray_image_of(&module_span(spec)?, spec.alpha, spec.beta, m, coords)
}

/// Image of C₁ × C₂ under the per-pair Gray transform (length 2β). φ(C) is
/// the direct sum of C′ on the first α coordinates and this code.
pub fn gray_pair_block(
    c1: &GeneratorMatrix,
    c2: &GeneratorMatrix,
    m: &GrayMatrix,
    coords: GrayCoords,
) -> Result<GeneratorMatrix> {
    let beta = c1.length();
    let f = c1.field();
    let mut rows = Vec::with_capacity(c1.dimension() + c2.dimension());
    for r in c1.rows() {
        let mut v = vec![Fe::ZERO; 2 * beta];
        v[..beta].copy_from_slice(r);
        rows.push(gray_split(f, &v, 0, beta, m, coords)?);
    }
    for r in c2.rows() {
        let mut v = vec![Fe::ZERO; 2 * beta];
        v[beta..].copy_from_slice(r);
        rows.push(gray_split(f, &v, 0, beta, m, coords)?);
    }
    GeneratorMatrix::from_rows(Arc::clone(f), 2 * beta, rows)
}
