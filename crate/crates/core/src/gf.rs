//! Table-driven arithmetic in GF(p^m).
//!
//! Elements are indices: the value `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` stands
//! for the residue class `c_0 + c_1 w + ... + c_{m-1} w^{m-1}` where `w` is
//! the class of `x` modulo the defining polynomial. The prime subfield is
//! therefore `0..p`. Multiplication uses discrete-log tables with respect to
//! `w`, which is required to be primitive; addition uses Zech logarithms.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// A field element, addressed by its index in the canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Arithmetic operations accepted by [`GaloisField::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(i64),
}

/// Conway polynomials, ascending coefficients, monic.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 1, &[9, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 1, &[11, 1]),
    (13, 2, &[2, 12, 1]),
];

/// Returns the built-in Conway polynomial for `(p, m)`, if any.
pub fn conway_polynomial(p: u32, m: u32) -> Option<&'static [u32]> {
    CONWAY
        .iter()
        .find(|(cp, cm, _)| *cp == p && *cm == m)
        .map(|(_, _, c)| *c)
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A concrete finite field GF(p^m).
#[derive(Clone)]
pub struct GaloisField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[k] = w^k`, doubled so that `exp[a + b]` needs no reduction.
    exp: Vec<u32>,
    /// `log[v]` for `v != 0`.
    log: Vec<u32>,
    /// `zech[k] = log(1 + w^k)`, or `u32::MAX` when `1 + w^k = 0`.
    zech: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

// polynomial helpers over F_p, ascending coefficients
fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv_lead = mod_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (r[dr] as u64 * inv_lead as u64 % p as u64) as u32;
        let shift = dr - db;
        for (j, &bj) in b.iter().enumerate() {
            let t = (c as u64 * bj as u64 % p as u64) as u32;
            r[shift + j] = (r[shift + j] + p - t) % p;
        }
        trim(&mut r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p is prime, Fermat
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Trial division by every monic polynomial of degree `1..=m/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                cand.push((t % p as u64) as u32);
                t /= p as u64;
            }
            cand.push(1);
            if poly_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    /// Builds GF(p^m). Without a modulus the built-in Conway polynomial is
    /// used. The class of `x` must be primitive either way.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q64 = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q64 > MAX_ORDER {
            return Err(Error::FieldTooLarge { p, m });
        }
        let q = q64 as u32;
        let modulus: Vec<u32> = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&v| v >= p) {
                    return Err(Error::BadModulus { p, m });
                }
                c.to_vec()
            }
            None => conway_polynomial(p, m)
                .ok_or(Error::NoDefaultModulus { p, m })?
                .to_vec(),
        };
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }

        // Powers of x modulo the modulus, as coefficient vectors.
        let mm = m as usize;
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = vec![0u32; mm];
        cur[0] = 1;
        let encode = |c: &[u32]| -> u32 { c.iter().rev().fold(0u32, |acc, &d| acc * p + d) };
        let mut primitive = true;
        for (k, slot) in exp.iter_mut().take(n).enumerate() {
            let v = encode(&cur);
            if v == 0 || log[v as usize] != u32::MAX {
                primitive = false;
                break;
            }
            *slot = v;
            log[v as usize] = k as u32;
            // multiply by x, reducing with the monic modulus
            let top = cur[mm - 1];
            for j in (1..mm).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..mm {
                    let t = (top as u64 * modulus[j] as u64 % p as u64) as u32;
                    cur[j] = (cur[j] + p - t) % p;
                }
            }
        }
        if !primitive || encode(&cur) != 1 {
            return Err(Error::NotPrimitive {
                order: multiplicative_order_of_x(&modulus, p),
                needed: n as u32,
            });
        }
        exp.copy_within(0..n, n);
        log[0] = u32::MAX;

        let mut field = GaloisField {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            zech: Vec::new(),
        };
        // Zech logarithms: 1 + w^k, with 1 added to the constant digit.
        field.zech = field.exp[..n]
            .iter()
            .map(|&v| {
                let c0 = v % p;
                let sum = v - c0 + (c0 + 1) % p;
                if sum == 0 {
                    u32::MAX
                } else {
                    field.log[sum as usize]
                }
            })
            .collect();
        Ok(field)
    }

    /// Parses `GF(<p>^<m>)` with an optional `;modulus=c0,c1,...,cm` suffix.
    /// `GF(<q>)` with q prime is accepted as `GF(q^1)`.
    pub fn from_descriptor(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, modulus) = match s.split_once(';') {
            Some((h, rest)) => {
                let rest = rest.trim();
                let list = rest
                    .strip_prefix("modulus=")
                    .ok_or_else(|| Error::Parse(format!("unknown field option `{rest}`")))?;
                let coeffs = list
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient `{t}`")))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                (h.trim(), Some(coeffs))
            }
            None => (s, None),
        };
        let inner = head
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected GF(p^m), got `{head}`")))?;
        let (p, m) = match inner.split_once('^') {
            Some((a, b)) => (parse_u32(a)?, parse_u32(b)?),
            None => (parse_u32(inner)?, 1),
        };
        GaloisField::new(p, m, modulus.as_deref())
    }

    /// Builds the field of order `q` with the default modulus.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::Parse(format!("{q} is not a prime power")))?;
        GaloisField::new(p, m, None)
    }

    /// Canonical descriptor, always listing the modulus.
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        format!("GF({}^{});modulus={}", self.p, self.m, coeffs.join(","))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `w`.
    pub fn generator(&self) -> Fe {
        Fe(self.exp[1 % (self.q as usize - 1).max(1)])
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    /// Element from its canonical index.
    pub fn element(&self, value: u32) -> Result<Fe> {
        if value < self.q {
            Ok(Fe(value))
        } else {
            Err(Error::ForeignElement { value, q: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.q
    }

    /// `w^k` for any integer `k`.
    pub fn pow_w(&self, k: i64) -> Fe {
        let n = (self.q - 1) as i64;
        Fe(self.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete log base `w`; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.q - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let k = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[k as usize];
        if z == u32::MAX {
            Fe::ZERO
        } else {
            Fe(self.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if a.0 == 0 || self.p == 2 {
            return a;
        }
        let half = (self.q - 1) / 2;
        Fe(self.exp[(self.log[a.0 as usize] + half) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse, panicking on zero. See [`GaloisField::try_inv`].
    #[inline]
    pub fn inv(&self, a: Fe) -> Fe {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn try_inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(Fe(self.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.try_inv(b)?))
    }

    /// `a^e`, negative exponents through the inverse. `0^0 = 1`.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe> {
        if a.0 == 0 {
            return match e {
                0 => Ok(Fe::ONE),
                e if e > 0 => Ok(Fe::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.q - 1) as i64;
        let l = self.log[a.0 as usize] as i64;
        let k = ((l as i128 * e as i128).rem_euclid(n as i128)) as usize;
        Ok(Fe(self.exp[k]))
    }

    /// Checked arithmetic entry point: every operand must belong to this field.
    pub fn arith(&self, op: FieldOp, a: Fe, b: Fe) -> Result<Fe> {
        for x in [a, b] {
            if !self.contains(x) {
                return Err(Error::ForeignElement { value: x.0, q: self.q });
            }
        }
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Sub => Ok(self.sub(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Div => self.div(a, b),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.try_inv(a),
            FieldOp::Pow(e) => self.pow(a, e),
        }
    }

    /// Θ^i(a) = a^(p^i).
    pub fn frobenius(&self, a: Fe, i: u32) -> Fe {
        if a.0 == 0 {
            return a;
        }
        let n = (self.q - 1) as u64;
        let mut e = 1u64;
        for _ in 0..(i % self.m) {
            e = e * self.p as u64 % n.max(1);
        }
        let l = self.log[a.0 as usize] as u64;
        Fe(self.exp[(l * e % n) as usize])
    }

    /// |⟨Θ⟩| = m / gcd(m, i).
    pub fn automorphism_order(&self, i: u32) -> u32 {
        self.m / gcd(self.m as u64, i as u64) as u32
    }

    /// Formats an element as `0`, a prime-subfield digit, `w` or `w^k`.
    pub fn format(&self, a: Fe) -> String {
        if a.0 < self.p {
            return a.0.to_string();
        }
        match self.log[a.0 as usize] {
            1 => "w".to_string(),
            k => format!("w^{k}"),
        }
    }

    /// Parses `0`, decimal digits (prime subfield), `w`, `w^k` or `w^{k}`.
    pub fn parse(&self, token: &str) -> Result<Fe> {
        let t = token.trim();
        if let Some(rest) = t.strip_prefix('w') {
            if rest.is_empty() {
                return Ok(self.pow_w(1));
            }
            let exp = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::Parse(format!("bad element token `{t}`")))?;
            let exp = exp.strip_prefix('{').and_then(|e| e.strip_suffix('}')).unwrap_or(exp);
            let k: i64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{t}`")))?;
            return Ok(self.pow_w(k));
        }
        let v: u32 = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad element token `{t}`")))?;
        if v >= self.p {
            return Err(Error::Parse(format!(
                "`{t}` is not an element of the prime subfield F_{}",
                self.p
            )));
        }
        Ok(Fe(v))
    }
}

fn parse_u32(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected an integer, got `{s}`")))
}

/// Splits `q = p^m`; `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

/// Order of `x` in the unit group of F_p[x]/(modulus), used for error reports.
fn multiplicative_order_of_x(modulus: &[u32], p: u32) -> u32 {
    let m = modulus.len() - 1;
    let n = (p as u64).pow(m as u32) - 1;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        // x^d mod modulus by square and multiply
        let mut result = vec![1u32];
        let mut base = vec![0u32, 1];
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                result = poly_rem(&poly_mul(&result, &base, p), modulus, p);
            }
            base = poly_rem(&poly_mul(&base, &base, p), modulus, p);
            e >>= 1;
        }
        if result == [1] {
            return d as u32;
        }
    }
    0
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    trim(&mut out);
    out
}
