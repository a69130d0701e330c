//! Linear codes over F_q as explicit matrices.
//!
//! A [`GeneratorMatrix`] keeps the rows it was built from together with the
//! reduced row echelon form of their span. Duals, containment tests and the
//! exact minimum distance are computed from the echelon form.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::gf::{Fe, GaloisField};
use crate::skewpoly::SkewPoly;

/// Default work budget for the column-dependence search (combination
/// lookups or subset reductions, whichever a level uses).
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Default cap on the number of codewords walked by `enumerate`.
pub const DEFAULT_ENUMERATE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistanceStrategy {
    #[default]
    Auto,
    Enumerate,
    ColumnDependence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceOptions {
    pub strategy: DistanceStrategy,
    /// Work budget for `column_dependence`.
    pub budget: u64,
    /// Maximum q^k for `enumerate`.
    pub enumerate_limit: u64,
    /// A known upper bound on the distance (a codeword of this weight exists);
    /// the search stops once it reaches it.
    pub upper_bound: Option<usize>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            strategy: DistanceStrategy::Auto,
            budget: DEFAULT_BUDGET,
            enumerate_limit: DEFAULT_ENUMERATE_LIMIT,
            upper_bound: None,
        }
    }
}

/// A k-dimensional subspace of F_q^n.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    field: Arc<GaloisField>,
    n: usize,
    rows: Vec<Vec<Fe>>,
    rref: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(field: &GaloisField, mut m: Vec<Vec<Fe>>, n: usize) -> (Vec<Vec<Fe>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m.len() {
            break;
        }
        let Some(found) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let inv = field.inv(m[r][col]);
        if inv != Fe::ONE {
            for v in &mut m[r][col..] {
                *v = field.mul(*v, inv);
            }
        }
        let (before, rest) = m.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("row r exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            let neg = field.neg(factor);
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !y.is_zero() {
                    *x = field.add(*x, field.mul(neg, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn hamming_weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn dot(field: &GaloisField, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

impl GeneratorMatrix {
    /// Span of `rows`; dependent rows are dropped from the stored generator list.
    pub fn from_rows(field: Arc<GaloisField>, n: usize, rows: Vec<Vec<Fe>>) -> Result<Self> {
        for r in &rows {
            if r.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            if let Some(bad) = r.iter().find(|v| !field.contains(**v)) {
                return Err(Error::ForeignElement {
                    value: bad.value(),
                    q: field.order(),
                });
            }
        }
        let (echelon, pivots) = rref(&field, rows.clone(), n);
        let kept = if echelon.len() == rows.len() {
            rows
        } else {
            // keep a maximal independent subset in the original order
            let mut kept = Vec::new();
            let mut span: Vec<Vec<Fe>> = Vec::new();
            for row in rows {
                let mut probe = span.clone();
                probe.push(row.clone());
                if rref(&field, probe, n).0.len() > span.len() {
                    span.push(row.clone());
                    kept.push(row);
                }
            }
            kept
        };
        Ok(GeneratorMatrix {
            field,
            n,
            rows: kept,
            rref: echelon,
            pivots,
        })
    }

    /// F_q^n.
    pub fn full_space(field: Arc<GaloisField>, n: usize) -> Self {
        let rows: Vec<Vec<Fe>> = (0..n)
            .map(|i| {
                let mut r = vec![Fe::ZERO; n];
                r[i] = Fe::ONE;
                r
            })
            .collect();
        GeneratorMatrix {
            field,
            n,
            rref: rows.clone(),
            rows,
            pivots: (0..n).collect(),
        }
    }

    pub fn zero_space(field: Arc<GaloisField>, n: usize) -> Self {
        GeneratorMatrix {
            field,
            n,
            rows: Vec::new(),
            rref: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rref.len()
    }

    /// Generator rows as supplied (independent).
    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    /// Canonical basis (reduced row echelon form).
    pub fn canonical(&self) -> &[Vec<Fe>] {
        &self.rref
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Whether `v` lies in the row space.
    pub fn contains_vector(&self, v: &[Fe]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &p) in self.rref.iter().zip(&self.pivots) {
            let c = r[p];
            if c.is_zero() {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = f.add(*x, f.mul(neg, y));
                }
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    fn check_compatible(&self, other: &GeneratorMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        if *self.field != *other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// Whether `inner` is a subspace of `self`.
    pub fn contains(&self, inner: &GeneratorMatrix) -> Result<bool> {
        self.check_compatible(inner)?;
        Ok(inner.rref.iter().all(|r| self.contains_vector(r)))
    }

    /// Equality of row spaces.
    pub fn same_space(&self, other: &GeneratorMatrix) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.rref == other.rref)
    }

    /// Euclidean dual: basis of the null space, one row per free column.
    pub fn dual(&self) -> GeneratorMatrix {
        let f = &self.field;
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows: Vec<Vec<Fe>> = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Fe::ZERO; self.n];
                v[free] = Fe::ONE;
                for (row, &p) in self.rref.iter().zip(&self.pivots) {
                    v[p] = f.neg(row[free]);
                }
                v
            })
            .collect();
        let (echelon, pivots) = rref(f, rows.clone(), self.n);
        GeneratorMatrix {
            field: Arc::clone(&self.field),
            n: self.n,
            rows,
            rref: echelon,
            pivots,
        }
    }

    /// Exact minimum Hamming weight of the nonzero codewords.
    pub fn min_distance(&self, opts: &DistanceOptions, exec: &dyn Executor) -> Result<usize> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::EmptyCode);
        }
        let q = self.field.order() as u64;
        let words = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        let enumerable = words <= opts.enumerate_limit as u128;
        match opts.strategy {
            DistanceStrategy::Enumerate => {
                if !enumerable {
                    return Err(Error::BudgetExceeded(format!(
                        "enumerate: q^k = {q}^{k} exceeds limit {}",
                        opts.enumerate_limit
                    )));
                }
                Ok(self.distance_by_enumeration(opts.upper_bound))
            }
            DistanceStrategy::ColumnDependence => self.distance_by_columns(opts, exec),
            DistanceStrategy::Auto => {
                let codim = self.n - k;
                if codim <= 8 || !enumerable {
                    match self.distance_by_columns(opts, exec) {
                        Ok(d) => Ok(d),
                        Err(Error::BudgetExceeded(_)) if enumerable => {
                            Ok(self.distance_by_enumeration(opts.upper_bound))
                        }
                        Err(Error::BudgetExceeded(msg)) => Err(Error::BudgetExceeded(format!(
                            "{msg}; enumerate: q^k = {q}^{k} exceeds limit {}",
                            opts.enumerate_limit
                        ))),
                        Err(e) => Err(e),
                    }
                } else {
                    Ok(self.distance_by_enumeration(opts.upper_bound))
                }
            }
        }
    }

    /// Walks all q^k − 1 nonzero codewords, one basis-row update per step.
    fn distance_by_enumeration(&self, upper_bound: Option<usize>) -> usize {
        let f = &self.field;
        let k = self.dimension();
        let q = f.order() as usize;
        let els: Vec<Fe> = f.elements().collect();
        // step[a] = els[a+1] - els[a]
        let steps: Vec<Fe> = (0..q).map(|a| f.sub(els[(a + 1) % q], els[a])).collect();
        // scaled[t][a] = steps[a] * row_t
        let scaled: Vec<Vec<Vec<Fe>>> = self
            .rref
            .iter()
            .map(|row| {
                steps
                    .iter()
                    .map(|&s| row.iter().map(|&x| f.mul(s, x)).collect())
                    .collect()
            })
            .collect();
        let mut digits = vec![0usize; k];
        let mut word = vec![Fe::ZERO; self.n];
        let mut best = upper_bound.unwrap_or(usize::MAX).min(self.n);
        loop {
            // odometer increment
            let mut t = 0;
            loop {
                if t == k {
                    return best;
                }
                let a = digits[t];
                for (x, &y) in word.iter_mut().zip(&scaled[t][a]) {
                    *x = f.add(*x, y);
                }
                digits[t] = (a + 1) % q;
                if digits[t] != 0 {
                    break;
                }
                t += 1;
            }
            let w = hamming_weight(&word);
            if w != 0 && w < best {
                best = w;
                if best == 1 {
                    return 1;
                }
            }
        }
    }

    /// Smallest s such that some s columns of the parity-check matrix are
    /// linearly dependent.
    fn distance_by_columns(&self, opts: &DistanceOptions, exec: &dyn Executor) -> Result<usize> {
        let f = &self.field;
        let h = self.dual();
        let r = h.dimension();
        let n = self.n;
        let q = f.order() as u128;
        let cap = opts.upper_bound.unwrap_or(usize::MAX);
        if q.checked_pow(r as u32).is_none() {
            return Err(Error::BudgetExceeded(format!(
                "column_dependence: codimension {r} too large to index columns over GF({q})"
            )));
        }
        let columns: Vec<Vec<Fe>> = (0..n).map(|j| h.rref.iter().map(|row| row[j]).collect()).collect();
        // s = 1: a zero column
        if columns.iter().any(|c| c.iter().all(|x| x.is_zero())) {
            return Ok(1);
        }
        if cap <= 2 {
            return Ok(cap);
        }
        let mut keys: Vec<u128> = columns.iter().map(|c| normalized_key(f, c, q)).collect();
        keys.sort_unstable();
        // s = 2: two proportional columns
        if keys.windows(2).any(|w| w[0] == w[1]) {
            return Ok(2);
        }
        let kernel = ColumnKernel {
            field: f,
            columns: &columns,
            keys: &keys,
            q,
        };
        let mut spent: u64 = 0;
        for s in 3..=r {
            if s >= cap {
                return Ok(cap);
            }
            let combos =
                binomial(n as u64, (s - 1) as u64).saturating_mul((q as u64 - 1).saturating_pow((s - 2) as u32));
            let subsets = binomial(n as u64, s as u64).saturating_mul(s as u64);
            spent = spent.saturating_add(combos.min(subsets));
            if spent > opts.budget {
                return Err(Error::BudgetExceeded(format!(
                    "column_dependence: s = {s} needs {spent} steps (budget {})",
                    opts.budget
                )));
            }
            let found = if combos <= subsets {
                exec.any(n, &|lead| kernel.search_from(lead, s - 1))
            } else {
                exec.any(n, &|lead| kernel.rank_from(lead, s))
            };
            if found {
                return Ok(s);
            }
        }
        // any r + 1 columns of an r-row matrix are dependent
        Ok((r + 1).min(cap))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Key of the projective point of a nonzero vector: scale the first nonzero
/// entry to one, then read the entries as base-q digits.
fn normalized_key(f: &GaloisField, v: &[Fe], q: u128) -> u128 {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return 0;
    };
    let inv = f.inv(*first);
    v.iter()
        .rev()
        .fold(0u128, |acc, &x| acc * q + f.mul(x, inv).value() as u128)
}

struct ColumnKernel<'a> {
    field: &'a GaloisField,
    columns: &'a [Vec<Fe>],
    /// Sorted normalized keys of all columns (pairwise distinct).
    keys: &'a [u128],
    q: u128,
}

impl ColumnKernel<'_> {
    /// Whether some `size`-subset with smallest index `lead` has rank below
    /// `size`, growing an echelon basis one column at a time.
    fn rank_from(&self, lead: usize, size: usize) -> bool {
        let mut basis = Vec::with_capacity(size);
        match self.reduce(&basis, &self.columns[lead]) {
            Some(b) => basis.push(b),
            None => return true,
        }
        self.rank_extend(&mut basis, lead, size - 1)
    }

    fn rank_extend(&self, basis: &mut Vec<(usize, Vec<Fe>)>, last: usize, remaining: usize) -> bool {
        let n = self.columns.len();
        for j in last + 1..n {
            if n - j < remaining {
                break;
            }
            match self.reduce(basis, &self.columns[j]) {
                None => return true,
                Some(b) if remaining > 1 => {
                    basis.push(b);
                    if self.rank_extend(basis, j, remaining - 1) {
                        return true;
                    }
                    basis.pop();
                }
                Some(_) => {}
            }
        }
        false
    }

    /// Reduces `v` against the basis; `None` when it lies in the span,
    /// otherwise its pivot and the reduced vector scaled to a unit pivot.
    fn reduce(&self, basis: &[(usize, Vec<Fe>)], v: &[Fe]) -> Option<(usize, Vec<Fe>)> {
        let f = self.field;
        let mut v = v.to_vec();
        for (p, b) in basis {
            let c = v[*p];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((p, v))
    }

    /// Whether column `lead` plus nonzero multiples of `depth - 1` later
    /// columns lands on the projective point of some other column.
    fn search_from(&self, lead: usize, depth: usize) -> bool {
        let partial = self.columns[lead].clone();
        self.extend(&partial, lead, depth - 1)
    }

    fn extend(&self, partial: &[Fe], last: usize, remaining: usize) -> bool {
        let f = self.field;
        if remaining == 0 {
            if partial.iter().all(|x| x.is_zero()) {
                return false;
            }
            let key = normalized_key(f, partial, self.q);
            return self.keys.binary_search(&key).is_ok();
        }
        let n = self.columns.len();
        let mut next = vec![Fe::ZERO; partial.len()];
        for j in last + 1..n {
            if n - j < remaining {
                break;
            }
            let col = &self.columns[j];
            for a in 1..f.order() {
                let a = Fe(a);
                for ((x, &p), &c) in next.iter_mut().zip(partial).zip(col) {
                    *x = f.add(p, f.mul(a, c));
                }
                if self.extend(&next, j, remaining - 1) {
                    return true;
                }
            }
        }
        false
    }
}

/// Generator matrix of the left module generated by `g` in
/// F_q[x;Θ]/⟨x^n − 1⟩: row j holds the coefficients of x^j·g.
///
/// `g` need not be monic, but it must right-divide x^n − 1.
pub fn skew_code_matrix(g: &SkewPoly, n: usize) -> Result<GeneratorMatrix> {
    let d = g.degree().ok_or(Error::ZeroPolynomial)?;
    if d > n {
        return Err(Error::DegreeOutOfRange { degree: d, n });
    }
    let ring = g.ring();
    if ring.x_pow_minus_one(n).right_quotient(g)?.is_none() {
        return Err(Error::NotRightDivisor { degree: d, n });
    }
    let field = Arc::clone(ring.field());
    let k = n - d;
    let rows: Vec<Vec<Fe>> = (0..k)
        .map(|j| {
            let mut row = vec![Fe::ZERO; n];
            for (t, &c) in g.coeffs().iter().enumerate() {
                row[j + t] = ring.theta_pow(j, c);
            }
            row
        })
        .collect();
    GeneratorMatrix::from_rows(field, n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Sequential;
    use crate::skewpoly::{parse_ascending, SkewRing};

    fn f9() -> Arc<GaloisField> {
        Arc::new(GaloisField::new(3, 2, None).unwrap())
    }

    fn f3() -> Arc<GaloisField> {
        Arc::new(GaloisField::new(3, 1, None).unwrap())
    }

    fn opts(strategy: DistanceStrategy) -> DistanceOptions {
        DistanceOptions {
            strategy,
            ..DistanceOptions::default()
        }
    }

    #[test]
    fn skew_rows_for_x_plus_w2() {
        let f = f9();
        let r = SkewRing::new(Arc::clone(&f), 1);
        let g = parse_ascending(&r, "w^2,1").unwrap();
        let m = skew_code_matrix(&g, 36).unwrap();
        assert_eq!(m.dimension(), 35);
        let row1 = &m.rows()[1];
        assert_eq!(row1[0], Fe::ZERO);
        assert_eq!(row1[1], f.pow_w(6));
        assert_eq!(row1[2], Fe::ONE);
        assert!(row1[3..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn unit_generator_is_full_space() {
        let f = f9();
        let r = SkewRing::new(Arc::clone(&f), 1);
        let m = skew_code_matrix(&SkewPoly::one(&r), 6).unwrap();
        assert_eq!(m.dimension(), 6);
        assert!(m.same_space(&GeneratorMatrix::full_space(f, 6)).unwrap());
    }

    #[test]
    fn not_a_divisor_rejected() {
        let r = SkewRing::new(f9(), 1);
        // x + 1 over F_3 never divides x^3 - 1 = (x - 1)^3
        let g = parse_ascending(&r, "1,1").unwrap();
        assert_eq!(
            skew_code_matrix(&g, 3).unwrap_err(),
            Error::NotRightDivisor { degree: 1, n: 3 }
        );
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let full = GeneratorMatrix::full_space(f9(), 5);
        assert_eq!(full.dual().dimension(), 0);
        assert_eq!(full.min_distance(&DistanceOptions::default(), &Sequential).unwrap(), 1);
    }

    #[test]
    fn repetition_and_sum_zero() {
        let f = f3();
        let rep = GeneratorMatrix::from_rows(Arc::clone(&f), 4, vec![vec![Fe::ONE; 4]]).unwrap();
        let d = rep.dual();
        assert_eq!(d.dimension(), 3);
        for row in d.canonical() {
            let s = row.iter().fold(Fe::ZERO, |a, &b| f.add(a, b));
            assert!(s.is_zero());
        }
        assert!(d.dual().same_space(&rep).unwrap());
        assert_eq!(
            rep.min_distance(&opts(DistanceStrategy::Enumerate), &Sequential)
                .unwrap(),
            4
        );
        assert_eq!(
            rep.min_distance(&opts(DistanceStrategy::ColumnDependence), &Sequential)
                .unwrap(),
            4
        );
        assert_eq!(d.min_distance(&DistanceOptions::default(), &Sequential).unwrap(), 2);
    }

    #[test]
    fn containment() {
        let f = f3();
        let rep = GeneratorMatrix::from_rows(Arc::clone(&f), 4, vec![vec![Fe::ONE; 4]]).unwrap();
        let full = GeneratorMatrix::full_space(Arc::clone(&f), 4);
        assert!(rep.contains(&rep).unwrap());
        assert!(!rep.contains(&full).unwrap());
        assert!(full.contains(&rep).unwrap());
        let short = GeneratorMatrix::full_space(f, 3);
        assert!(rep.contains(&short).is_err());
    }

    #[test]
    fn dependent_rows_are_dropped() {
        let f = f3();
        let a = vec![Fe(1), Fe(2), Fe(0)];
        let b = vec![Fe(2), Fe(1), Fe(0)];
        let c = vec![Fe(0), Fe(0), Fe(1)];
        let m = GeneratorMatrix::from_rows(f, 3, vec![a.clone(), b, c.clone()]).unwrap();
        assert_eq!(m.dimension(), 2);
        assert_eq!(m.rows(), &[a, c]);
    }

    #[test]
    fn empty_code_has_no_distance() {
        let z = GeneratorMatrix::zero_space(f9(), 3);
        assert_eq!(
            z.min_distance(&DistanceOptions::default(), &Sequential),
            Err(Error::EmptyCode)
        );
    }

    #[test]
    fn budget_errors_are_explicit() {
        let f = f9();
        let r = SkewRing::new(Arc::clone(&f), 1);
        let g = parse_ascending(&r, "w^2,1").unwrap();
        let m = skew_code_matrix(&g, 36).unwrap();
        let tight = DistanceOptions {
            strategy: DistanceStrategy::Enumerate,
            ..DistanceOptions::default()
        };
        assert!(matches!(
            m.min_distance(&tight, &Sequential),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn upper_bound_short_circuits() {
        let f = f3();
        let rep = GeneratorMatrix::from_rows(f, 6, vec![vec![Fe::ONE; 6]]).unwrap();
        let capped = DistanceOptions {
            strategy: DistanceStrategy::ColumnDependence,
            upper_bound: Some(3),
            ..DistanceOptions::default()
        };
        assert_eq!(rep.min_distance(&capped, &Sequential).unwrap(), 3);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(769, 2), 295_296);
        assert_eq!(binomial(3, 5), 0);
    }
}
