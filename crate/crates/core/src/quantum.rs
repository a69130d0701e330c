//! Dual-containment certificates and CSS parameters.

use alloc::format;

use crate::error::{Error, Result};
use crate::fqr::{CodeSpec, Generators};
use crate::gf::gcd;
use crate::skewpoly::SkewPoly;

/// Which divisibility criterion certifies the length-α block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// gcd(α, |Θ|) = 1: f·f* divides x^α − 1 in F_q[x].
    Coprime,
    /// |Θ| divides α: h†h is right-divisible by x^α − 1.
    Divides,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Coprime => "coprime",
            Route::Divides => "divides",
        }
    }
}

/// One divisibility test with its witnesses.
///
/// For the coprime route `product` is f·f* and `quotient` is
/// (x^α − 1)/(f·f*). Otherwise `cofactor` is h with x^n − 1 = h·g,
/// `product` is h†h and `quotient` is h†h / (x^n − 1) from the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCheck {
    pub passed: bool,
    pub cofactor: Option<SkewPoly>,
    pub product: SkewPoly,
    pub quotient: Option<SkewPoly>,
}

impl PolyCheck {
    /// Re-multiplies the witnesses. Returns false if they do not reproduce
    /// the product (or x^n − 1 for the coprime route).
    pub fn witnesses_hold(&self, route: Route, n: usize) -> bool {
        let ring = self.product.ring();
        let xn1 = ring.x_pow_minus_one(n);
        let Some(q) = &self.quotient else {
            return !self.passed;
        };
        match (route, &self.cofactor) {
            (Route::Coprime, _) => q.mul(&self.product).map(|p| p == xn1).unwrap_or(false),
            (Route::Divides, Some(_)) => q.mul(&xn1).map(|p| p == self.product).unwrap_or(false),
            (Route::Divides, None) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualContainCertificate {
    pub route: Route,
    pub alpha: usize,
    pub beta: usize,
    pub f_check: PolyCheck,
    pub g1_check: PolyCheck,
    pub g2_check: PolyCheck,
}

impl DualContainCertificate {
    pub fn is_valid(&self) -> bool {
        self.f_check.passed && self.g1_check.passed && self.g2_check.passed
    }

    pub fn witnesses_hold(&self) -> bool {
        self.f_check.witnesses_hold(self.route, self.alpha)
            && self.g1_check.witnesses_hold(Route::Divides, self.beta)
            && self.g2_check.witnesses_hold(Route::Divides, self.beta)
    }
}

/// h with x^n − 1 = h·g, h†h and its right quotient by x^n − 1.
fn dagger_check(g: &SkewPoly, n: usize) -> Result<PolyCheck> {
    let d = g.degree().ok_or(Error::ZeroPolynomial)?;
    let xn1 = g.ring().x_pow_minus_one(n);
    let h = xn1.right_quotient(g)?.ok_or(Error::NotRightDivisor { degree: d, n })?;
    let product = h.dagger()?.mul(&h)?;
    let quotient = product.right_quotient(&xn1)?;
    Ok(PolyCheck {
        passed: quotient.is_some(),
        cofactor: Some(h),
        product,
        quotient,
    })
}

fn reciprocal_check(f: &SkewPoly, n: usize) -> Result<PolyCheck> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let xn1 = f.ring().x_pow_minus_one(n);
    if xn1.right_quotient(f)?.is_none() {
        return Err(Error::NotRightDivisor { degree: d, n });
    }
    let product = f.mul(&f.reciprocal()?)?;
    let quotient = xn1.right_quotient(&product)?;
    Ok(PolyCheck {
        passed: quotient.is_some(),
        cofactor: None,
        product,
        quotient,
    })
}

/// Route used for the length-α block, or an error if neither applies.
pub fn route_for(alpha: usize, theta_order: u32) -> Result<Route> {
    if gcd(alpha as u64, theta_order as u64) == 1 {
        Ok(Route::Coprime)
    } else if alpha.is_multiple_of(theta_order as usize) {
        Ok(Route::Divides)
    } else {
        Err(Error::NoApplicableCriterion {
            alpha,
            order: theta_order,
        })
    }
}

/// Certifies C⊥ ⊆ C for a separable spec through polynomial divisibility.
pub fn check_dual_containing(spec: &CodeSpec) -> Result<DualContainCertificate> {
    let Generators::Separable { f, g1, g2 } = spec.generators() else {
        return Err(Error::NotSeparable);
    };
    let order = spec.theta_order();
    if !spec.beta_is_ring() {
        return Err(Error::OrderDoesNotDivideBeta {
            order,
            beta: spec.beta(),
        });
    }
    let route = route_for(spec.alpha(), order)?;
    let f_check = match route {
        Route::Coprime => reciprocal_check(f, spec.alpha())?,
        Route::Divides => dagger_check(f, spec.alpha())?,
    };
    Ok(DualContainCertificate {
        route,
        alpha: spec.alpha(),
        beta: spec.beta(),
        f_check,
        g1_check: dagger_check(g1, spec.beta())?,
        g2_check: dagger_check(g2, spec.beta())?,
    })
}

/// [[n, k, d]]_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
}

impl core::fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
    }
}

/// CSS construction from a dual-containing [n, k, d]_q code.
pub fn css_params(n: usize, k: usize, d: usize, q: u32) -> Result<QuantumParams> {
    if k > n {
        return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
    }
    if d == 0 {
        return Err(Error::InvalidParams("distance must be positive".into()));
    }
    if 2 * k < n {
        return Err(Error::NotDualContaining { n, k });
    }
    Ok(QuantumParams { n, k: 2 * k - n, d, q })
}

/// n + 2 − k − 2d; zero for quantum MDS codes.
pub fn singleton_defect(p: &QuantumParams) -> Result<usize> {
    (p.n + 2)
        .checked_sub(p.k + 2 * p.d)
        .ok_or_else(|| Error::InvalidParams(format!("{p} violates the quantum Singleton bound")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Better,
    Worse,
    Equal,
    Incomparable,
}

impl Comparison {
    pub fn name(self) -> &'static str {
        match self {
            Comparison::Better => "better",
            Comparison::Worse => "worse",
            Comparison::Equal => "equal",
            Comparison::Incomparable => "incomparable",
        }
    }
}

fn rate_cmp(a: &QuantumParams, b: &QuantumParams) -> core::cmp::Ordering {
    ((a.k as u128) * (b.n as u128)).cmp(&((b.k as u128) * (a.n as u128)))
}

fn dominates(a: &QuantumParams, b: &QuantumParams) -> bool {
    use core::cmp::Ordering::*;
    let rate = rate_cmp(a, b);
    (a.d > b.d && rate != Less) || (rate == Greater && a.d >= b.d)
}

/// Exact comparison by rate k/n and distance.
pub fn compare_codes(a: &QuantumParams, b: &QuantumParams) -> Comparison {
    if a.d == b.d && rate_cmp(a, b).is_eq() {
        Comparison::Equal
    } else if dominates(a, b) {
        Comparison::Better
    } else if dominates(b, a) {
        Comparison::Worse
    } else {
        Comparison::Incomparable
    }
}

/// [[n, 2k − n, d]] for a certified code with the given classical
/// parameters.
pub fn quantum_from_certificate(
    cert: &DualContainCertificate,
    n: usize,
    k: usize,
    d: usize,
    q: u32,
) -> Result<QuantumParams> {
    if !cert.is_valid() {
        return Err(Error::NotDualContaining { n, k });
    }
    css_params(n, k, d, q)
}
