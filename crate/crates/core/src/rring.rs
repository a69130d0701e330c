//! The ring R = F_q + uF_q with u² = u, in idempotent coordinates.
//!
//! With ξ₁ = 1 − u and ξ₂ = u every element is ξ₁c₁ + ξ₂c₂, and ring
//! operations act on (c₁, c₂) componentwise. The additive form a + ub maps
//! to (c₁, c₂) = (a, a + b).

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};

/// ξ₁c₁ + ξ₂c₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RElement {
    pub c1: Fe,
    pub c2: Fe,
}

impl RElement {
    pub const ZERO: RElement = RElement {
        c1: Fe::ZERO,
        c2: Fe::ZERO,
    };
    pub const ONE: RElement = RElement {
        c1: Fe::ONE,
        c2: Fe::ONE,
    };
    pub const XI1: RElement = RElement {
        c1: Fe::ONE,
        c2: Fe::ZERO,
    };
    /// u = ξ₂.
    pub const U: RElement = RElement {
        c1: Fe::ZERO,
        c2: Fe::ONE,
    };

    pub const fn new(c1: Fe, c2: Fe) -> Self {
        RElement { c1, c2 }
    }

    pub fn is_zero(self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }
}

/// Output convention for R elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RNotation {
    /// `(c1|c2)`
    #[default]
    Crt,
    /// `a+u*b`
    Additive,
}

/// Arithmetic context for R over a given field.
#[derive(Debug, Clone)]
pub struct RingR {
    field: Arc<GaloisField>,
}

impl RingR {
    pub fn new(field: Arc<GaloisField>) -> Self {
        RingR { field }
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    /// a + ub ↦ (a, a + b).
    pub fn from_additive(&self, a: Fe, b: Fe) -> RElement {
        RElement::new(a, self.field.add(a, b))
    }

    /// (c₁, c₂) ↦ (a, b) = (c₁, c₂ − c₁).
    pub fn to_additive(&self, r: RElement) -> (Fe, Fe) {
        (r.c1, self.field.sub(r.c2, r.c1))
    }

    pub fn add(&self, r: RElement, s: RElement) -> RElement {
        RElement::new(self.field.add(r.c1, s.c1), self.field.add(r.c2, s.c2))
    }

    pub fn sub(&self, r: RElement, s: RElement) -> RElement {
        RElement::new(self.field.sub(r.c1, s.c1), self.field.sub(r.c2, s.c2))
    }

    pub fn mul(&self, r: RElement, s: RElement) -> RElement {
        RElement::new(self.field.mul(r.c1, s.c1), self.field.mul(r.c2, s.c2))
    }

    /// Units are exactly the elements with both coordinates nonzero.
    pub fn is_unit(&self, r: RElement) -> bool {
        !r.c1.is_zero() && !r.c2.is_zero()
    }

    /// θ^i, Frobenius on both coordinates (θ fixes u).
    pub fn theta(&self, r: RElement, i: u32) -> RElement {
        RElement::new(self.field.frobenius(r.c1, i), self.field.frobenius(r.c2, i))
    }

    /// η(a + ub) = a.
    pub fn eta(&self, r: RElement) -> Fe {
        r.c1
    }

    pub fn elements(&self) -> impl Iterator<Item = RElement> + '_ {
        self.field
            .elements()
            .flat_map(move |a| self.field.elements().map(move |b| RElement::new(a, b)))
    }

    pub fn format(&self, r: RElement, notation: RNotation) -> String {
        match notation {
            RNotation::Crt => format!("({}|{})", self.field.format(r.c1), self.field.format(r.c2)),
            RNotation::Additive => {
                let (a, b) = self.to_additive(r);
                format!("{}+u*{}", self.field.format(a), self.field.format(b))
            }
        }
    }

    /// Accepts `(c1|c2)` or `a+u*b`.
    pub fn parse(&self, s: &str) -> Result<RElement> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("expected (c1|c2), got `{t}`")))?;
            return Ok(RElement::new(self.field.parse(a)?, self.field.parse(b)?));
        }
        let (a, b) = t
            .split_once("+u*")
            .ok_or_else(|| Error::Parse(format!("expected a+u*b or (c1|c2), got `{t}`")))?;
        Ok(self.from_additive(self.field.parse(a)?, self.field.parse(b)?))
    }
}
