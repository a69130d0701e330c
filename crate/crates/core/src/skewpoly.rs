//! The skew polynomial ring F_q[x;Θ] with Θ(a) = a^(p^i).
//!
//! Multiplication follows `(a x^i)(b x^j) = a Θ^i(b) x^(i+j)`. Only right
//! division is provided: every divisibility question asked by the code
//! constructions is "does `g` divide `f` from the right".

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};

/// F_q[x;Θ] for a fixed field and automorphism exponent.
#[derive(Debug)]
pub struct SkewRing {
    field: Arc<GaloisField>,
    theta_exp: u32,
    order: u32,
    /// `frob[j][a] = Θ^j(a)` for `j < order`.
    frob: Vec<Vec<Fe>>,
}

impl PartialEq for SkewRing {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.order == other.order && self.frob == other.frob
    }
}

impl Eq for SkewRing {}

impl SkewRing {
    pub fn new(field: Arc<GaloisField>, theta_exp: u32) -> Arc<Self> {
        let order = field.automorphism_order(theta_exp);
        let mut frob = Vec::with_capacity(order as usize);
        let mut layer: Vec<Fe> = field.elements().collect();
        for _ in 0..order {
            let next = layer.iter().map(|&a| field.frobenius(a, theta_exp)).collect();
            frob.push(core::mem::replace(&mut layer, next));
        }
        Arc::new(SkewRing {
            field,
            theta_exp,
            order,
            frob,
        })
    }

    /// The commutative polynomial ring F_q[x] (Θ = id).
    pub fn commutative(field: Arc<GaloisField>) -> Arc<Self> {
        SkewRing::new(field, 0)
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn theta_exp(&self) -> u32 {
        self.theta_exp
    }

    /// |⟨Θ⟩|.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_commutative(&self) -> bool {
        self.order == 1
    }

    /// Θ^j(a).
    #[inline]
    pub fn theta_pow(&self, j: usize, a: Fe) -> Fe {
        self.frob[j % self.order as usize][a.0 as usize]
    }

    /// `x^n - 1`; central whenever |Θ| divides n.
    pub fn x_pow_minus_one(self: &Arc<Self>, n: usize) -> SkewPoly {
        let mut c = vec![Fe::ZERO; n + 1];
        c[0] = self.field.neg(Fe::ONE);
        c[n] = self.field.add(c[n], Fe::ONE);
        SkewPoly::new(self, c)
    }
}

/// An element of F_q[x;Θ], ascending coefficients without trailing zeros.
#[derive(Clone)]
pub struct SkewPoly {
    ring: Arc<SkewRing>,
    coeffs: Vec<Fe>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for SkewPoly {}

fn same_ring(a: &Arc<SkewRing>, b: &Arc<SkewRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SkewPoly {
    pub fn new(ring: &Arc<SkewRing>, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last() == Some(&Fe::ZERO) {
            coeffs.pop();
        }
        SkewPoly {
            ring: Arc::clone(ring),
            coeffs,
        }
    }

    pub fn zero(ring: &Arc<SkewRing>) -> Self {
        SkewPoly::new(ring, Vec::new())
    }

    pub fn one(ring: &Arc<SkewRing>) -> Self {
        SkewPoly::new(ring, vec![Fe::ONE])
    }

    /// `c x^k`.
    pub fn monomial(ring: &Arc<SkewRing>, c: Fe, k: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = c;
        SkewPoly::new(ring, coeffs)
    }

    pub fn ring(&self) -> &Arc<SkewRing> {
        &self.ring
    }

    pub fn field(&self) -> &GaloisField {
        &self.ring.field
    }

    pub fn theta_exp(&self) -> u32 {
        self.ring.theta_exp
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Fe {
        self.coeffs.get(k).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fe::ONE)
    }

    fn check(&self, other: &SkewPoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let f = &self.ring.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| f.add(self.coeff(k), other.coeff(k))).collect();
        Ok(SkewPoly::new(&self.ring, c))
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let f = &self.ring.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| f.sub(self.coeff(k), other.coeff(k))).collect();
        Ok(SkewPoly::new(&self.ring, c))
    }

    pub fn neg(&self) -> SkewPoly {
        let f = &self.ring.field;
        SkewPoly::new(&self.ring, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    /// Left scalar multiple `c · self`.
    pub fn scale_left(&self, c: Fe) -> SkewPoly {
        let f = &self.ring.field;
        SkewPoly::new(&self.ring, self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// The monic left associate `lc⁻¹ · self`; it generates the same left module.
    pub fn monic(&self) -> Result<SkewPoly> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale_left(self.ring.field.inv(lc)))
    }

    /// Twisted product: coefficient k is Σ_{i+j=k} f_i Θ^i(g_j).
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &SkewPoly) -> SkewPoly {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(&self.ring);
        }
        let f = &self.ring.field;
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let table = &self.ring.frob[i % self.ring.order as usize];
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, table[b.0 as usize]));
            }
        }
        SkewPoly::new(&self.ring, out)
    }

    /// Right division: `self = quotient · divisor + remainder`, deg remainder < deg divisor.
    pub fn right_divmod(&self, divisor: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check(divisor)?;
        let dg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.ring.field;
        let mut rem = self.coeffs.clone();
        let len_q = rem.len().saturating_sub(dg);
        let mut quot = vec![Fe::ZERO; len_q];
        let lg = divisor.coeffs[dg];
        while rem.len() > dg {
            let dr = rem.len() - 1;
            let s = dr - dg;
            let lead = rem[dr];
            if !lead.is_zero() {
                // c · Θ^s(lc g) = lc(rem)
                let c = f.mul(lead, f.inv(self.ring.theta_pow(s, lg)));
                quot[s] = c;
                for (j, &gj) in divisor.coeffs.iter().enumerate() {
                    let t = f.mul(c, self.ring.theta_pow(s, gj));
                    rem[s + j] = f.sub(rem[s + j], t);
                }
            }
            rem.pop();
            while rem.last() == Some(&Fe::ZERO) {
                rem.pop();
            }
        }
        Ok((SkewPoly::new(&self.ring, quot), SkewPoly::new(&self.ring, rem)))
    }

    /// Whether `divisor` right-divides `self`; returns the quotient if so.
    pub fn right_quotient(&self, divisor: &SkewPoly) -> Result<Option<SkewPoly>> {
        let (q, r) = self.right_divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Whether this monic polynomial right-divides `x^n - 1`; the cofactor
    /// `h` with `x^n - 1 = h · self` is returned when it does.
    pub fn is_right_divisor(&self, n: usize) -> Result<Option<SkewPoly>> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        if d == 0 || d > n {
            return Err(Error::DegreeOutOfRange { degree: d, n });
        }
        self.ring.x_pow_minus_one(n).right_quotient(self)
    }

    /// h† = h_D + Θ(h_{D-1}) x + ... + Θ^D(h_0) x^D with D = deg h.
    pub fn dagger(&self) -> Result<SkewPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let c = (0..=d).map(|j| self.ring.theta_pow(j, self.coeffs[d - j])).collect();
        Ok(SkewPoly::new(&self.ring, c))
    }

    /// Coefficient reversal h* without any automorphism.
    pub fn reciprocal(&self) -> Result<SkewPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = self.coeffs.iter().rev().copied().collect();
        Ok(SkewPoly::new(&self.ring, c))
    }

    /// Canonical ascending token list, e.g. `2,w^5,w^3,1`.
    pub fn to_ascending(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.ring.field;
        let tokens: Vec<String> = self.coeffs.iter().map(|&c| f.format(c)).collect();
        tokens.join(",")
    }

    /// Compact descending string as printed in coefficient tables, e.g. `1w^3w^52`.
    /// Exponents of two or more digits are braced.
    pub fn to_compact(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.ring.field;
        let mut out = String::new();
        for &c in self.coeffs.iter().rev() {
            let t = f.format(c);
            match t.strip_prefix("w^") {
                Some(k) if k.len() > 1 => out.push_str(&format!("w^{{{k}}}")),
                _ => out.push_str(&t),
            }
        }
        out
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{}; theta^{}]", self.to_ascending(), self.ring.theta_exp)
    }
}

/// Descending display, e.g. `x^3 + w^3x^2 + w^5x + 2`.
impl fmt::Display for SkewPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let f = &self.ring.field;
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let coeff = if c == Fe::ONE && k > 0 {
                String::new()
            } else {
                f.format(c)
            };
            match k {
                0 => write!(out, "{coeff}")?,
                1 => write!(out, "{coeff}x")?,
                _ => write!(out, "{coeff}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Parses an ascending comma list of element tokens.
pub fn parse_ascending(ring: &Arc<SkewRing>, s: &str) -> Result<SkewPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    let coeffs = s.split(',').map(|t| ring.field.parse(t)).collect::<Result<Vec<Fe>>>()?;
    Ok(SkewPoly::new(ring, coeffs))
}

/// Result of parsing the compact descending notation.
#[derive(Debug, Clone)]
pub struct CompactParse {
    pub poly: SkewPoly,
    /// Human-readable notes about tokens whose split was not forced.
    pub warnings: Vec<String>,
}

/// Parses the compact descending notation (`1w^3w^52` is x³ + w³x² + w⁵x + 2).
///
/// Tokens are `0..p-1` (one digit), `w`, `w^{k}` or `w^k`. For an unbraced
/// exponent the longest digit prefix with value below q−1 is taken; if a
/// shorter prefix would also have been valid a warning is recorded.
pub fn parse_compact(ring: &Arc<SkewRing>, s: &str) -> Result<CompactParse> {
    let f = &ring.field;
    let max_exp = (f.order() - 1).max(1) as u64;
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut tokens: Vec<Fe> = Vec::new();
    let mut warnings = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_digit() {
            let v = c.to_digit(10).unwrap_or(0);
            if v >= f.characteristic() {
                return Err(Error::Parse(format!(
                    "digit `{c}` at position {i} is not in F_{}",
                    f.characteristic()
                )));
            }
            tokens.push(f.from_int(v as i64));
            i += 1;
        } else if c == 'w' {
            i += 1;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                if i < bytes.len() && bytes[i] == '{' {
                    let close = bytes[i..]
                        .iter()
                        .position(|&b| b == '}')
                        .ok_or_else(|| Error::Parse("unclosed `{` in exponent".to_string()))?;
                    let digits: String = bytes[i + 1..i + close].iter().collect();
                    let k: i64 = digits
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{digits}`")))?;
                    tokens.push(f.pow_w(k));
                    i += close + 1;
                } else {
                    let run_end = bytes[i..]
                        .iter()
                        .position(|b| !b.is_ascii_digit())
                        .map_or(bytes.len(), |e| i + e);
                    if run_end == i {
                        return Err(Error::Parse(format!("missing exponent at position {i}")));
                    }
                    let mut valid = Vec::new();
                    let mut value = 0u64;
                    for (len, &d) in bytes[i..run_end].iter().enumerate() {
                        value = value * 10 + d.to_digit(10).unwrap_or(0) as u64;
                        if value >= max_exp {
                            break;
                        }
                        valid.push((len + 1, value));
                    }
                    let &(len, k) = valid
                        .last()
                        .ok_or_else(|| Error::Parse(format!("exponent at position {i} exceeds q-2")))?;
                    if valid.len() > 1 && run_end - i > 1 {
                        let run: String = bytes[i..run_end].iter().collect();
                        warnings.push(format!("ambiguous exponent run `w^{run}`: read as w^{k}"));
                    }
                    tokens.push(f.pow_w(k as i64));
                    i += len;
                }
            } else {
                tokens.push(f.pow_w(1));
            }
        } else {
            return Err(Error::Parse(format!("unexpected `{c}` at position {i}")));
        }
    }
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    tokens.reverse();
    Ok(CompactParse {
        poly: SkewPoly::new(ring, tokens),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring9() -> Arc<SkewRing> {
        SkewRing::new(Arc::new(GaloisField::new(3, 2, None).unwrap()), 1)
    }

    fn p(ring: &Arc<SkewRing>, s: &str) -> SkewPoly {
        parse_ascending(ring, s).unwrap()
    }

    #[test]
    fn wx_squared() {
        let r = ring9();
        let wx = p(&r, "0,w");
        assert_eq!(wx.mul(&wx).unwrap(), p(&r, "0,0,2"));
    }

    #[test]
    fn noncommutative_witness() {
        let r = ring9();
        let x = p(&r, "0,1");
        let w = p(&r, "w");
        assert_eq!(x.mul(&w).unwrap(), p(&r, "0,w^3"));
        assert_ne!(x.mul(&w).unwrap(), w.mul(&x).unwrap());
    }

    #[test]
    fn identity_and_zero() {
        let r = ring9();
        let f = p(&r, "2,w^5,w^3,1");
        assert_eq!(f.mul(&SkewPoly::one(&r)).unwrap(), f);
        assert!(f.mul(&SkewPoly::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn x36_minus_one_by_x_plus_w2() {
        let r = ring9();
        let g = p(&r, "w^2,1");
        let (q, rem) = r.x_pow_minus_one(36).right_divmod(&g).unwrap();
        assert!(rem.is_zero());
        // quotient alternates 1, w^2 from the top: x^35 + w^2 x^34 + x^33 + ...
        let mut expected = Vec::new();
        for k in 0..36 {
            expected.push(if k % 2 == 1 { "1" } else { "w^2" });
        }
        assert_eq!(q, p(&r, &expected.join(",")));
    }

    #[test]
    fn self_division() {
        let r = ring9();
        let g = p(&r, "1,1,w^2");
        let (q, rem) = g.right_divmod(&g).unwrap();
        assert_eq!(q, SkewPoly::one(&r));
        assert!(rem.is_zero());
    }

    #[test]
    fn division_by_zero_polynomial() {
        let r = ring9();
        let f = p(&r, "1,1");
        assert_eq!(f.right_divmod(&SkewPoly::zero(&r)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn x_minus_one_divides_everything() {
        let r = ring9();
        let g = p(&r, "2,1");
        for n in 1..20 {
            let h = g.is_right_divisor(n).unwrap().unwrap();
            assert_eq!(h, p(&r, &vec!["1"; n].join(",")));
        }
    }

    #[test]
    fn divisor_w2x2_x_1() {
        let r = ring9();
        let g = p(&r, "1,1,w^2").monic().unwrap();
        assert!(g.is_right_divisor(36).unwrap().is_some());
    }

    #[test]
    fn non_monic_rejected() {
        let r = ring9();
        assert_eq!(p(&r, "1,w").is_right_divisor(4), Err(Error::NotMonic));
    }

    #[test]
    fn dagger_examples() {
        let r = ring9();
        assert_eq!(p(&r, "2,w").dagger().unwrap(), p(&r, "w,2"));
        assert_eq!(SkewPoly::one(&r).dagger().unwrap(), SkewPoly::one(&r));
        let c = SkewRing::commutative(Arc::clone(r.field()));
        let h = p(&c, "2,w^5,w^3,1");
        assert_eq!(h.dagger().unwrap(), h.reciprocal().unwrap());
        assert_eq!(SkewPoly::zero(&r).dagger(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocal_examples() {
        let r = ring9();
        assert_eq!(p(&r, "2,w^5,w^3,1").reciprocal().unwrap(), p(&r, "1,w^3,w^5,2"));
        assert_eq!(p(&r, "2,1").reciprocal().unwrap(), p(&r, "1,2"));
        let f = p(&r, "1,w,0,w^7");
        assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
    }

    #[test]
    fn mismatched_rings() {
        let r = ring9();
        let c = SkewRing::commutative(Arc::clone(r.field()));
        assert_eq!(p(&r, "1,1").mul(&p(&c, "1,1")).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn display_descending() {
        let r = ring9();
        assert_eq!(p(&r, "2,w^5,w^3,1").to_string(), "x^3 + w^3x^2 + w^5x + 2");
        assert_eq!(p(&r, "1,1,w^2").to_string(), "w^2x^2 + x + 1");
    }

    #[test]
    fn compact_notation() {
        let r = ring9();
        let parsed = parse_compact(&r, "1w^3w^52").unwrap();
        assert_eq!(parsed.poly, p(&r, "2,w^5,w^3,1"));
        assert!(parsed.warnings.is_empty());
        // exponents in F_9 are below 8, so `w^72` splits as w^7, 2
        assert_eq!(parse_compact(&r, "1ww^72").unwrap().poly, p(&r, "2,w^7,w,1"));
        assert_eq!(parse_compact(&r, "w^611").unwrap().poly, p(&r, "1,1,w^6"));
        assert_eq!(p(&r, "2,w^5,w^3,1").to_compact(), "1w^3w^52");
    }

    #[test]
    fn compact_braced_and_ambiguous() {
        let f49 = Arc::new(GaloisField::new(7, 2, None).unwrap());
        let r = SkewRing::new(f49, 1);
        let parsed = parse_compact(&r, "1ww^{9}6").unwrap();
        assert_eq!(parsed.poly, p(&r, "6,w^9,w,1"));
        let amb = parse_compact(&r, "w^211").unwrap();
        assert_eq!(amb.poly, p(&r, "1,w^21"));
        assert_eq!(amb.warnings.len(), 1);
        assert!(parse_compact(&r, "1x").is_err());
        assert!(parse_compact(&r, "18").is_err());
    }
}
