//! Exact linear algebra over prime fields F_p.
//!
//! Vectors are plain `Vec<u32>` with entries in `[0, p)`. Everything here is
//! deterministic: reduction picks the leftmost pivot and the first row holding
//! a nonzero entry in that column, so equal inputs always give equal outputs.

use crate::error::{Error, Result};

/// Default cap on the number of vectors a span enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    add_mod(a, p - b % p, p)
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p as u64 - 2, p)
}

/// Dot product of two F_p vectors.
pub fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
    let s = a
        .iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % p as u64);
    s as u32
}

/// `acc += c * v` over F_p.
pub(crate) fn axpy(acc: &mut [u32], c: u32, v: &[u32], p: u32) {
    if c == 0 {
        return;
    }
    for (x, &y) in acc.iter_mut().zip(v) {
        *x = add_mod(*x, mul_mod(c, y, p), p);
    }
}

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFp {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`MatrixFp::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatrixFp,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatrixFp {
    /// Builds a matrix from row-major data, reducing every entry mod `p`.
    pub fn new(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        let data = data.into_iter().map(|x| x % p).collect();
        Ok(Self { p, rows, cols, data })
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1 % p);
        }
        m
    }

    /// Stacks the given rows. Every row must have length `cols`.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|x| x % p));
        }
        Ok(Self {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v, self.p)).collect())
    }

    pub fn mul(&self, other: &MatrixFp) -> Result<MatrixFp> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = MatrixFp::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let c = self.get(r, k);
                if c != 0 {
                    let start = r * other.cols;
                    axpy(&mut out.data[start..start + other.cols], c, other.row(k), self.p);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with leftmost-first pivots.
    pub fn rref(&self) -> Rref {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(src) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(lead, src);
            let inv = inv_mod(m.get(lead, c), p);
            for x in &mut m.data[lead * m.cols..(lead + 1) * m.cols] {
                *x = mul_mod(*x, inv, p);
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r != lead {
                    let f = m.get(r, c);
                    if f != 0 {
                        let start = r * m.cols;
                        axpy(&mut m.data[start..start + m.cols], p - f, &pivot_row, p);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : M v = 0}`, one vector per free
    /// column in ascending order.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1 % p;
                for (row, &pc) in pivots.iter().enumerate() {
                    let e = matrix.get(row, free);
                    v[pc] = (p - e) % p;
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<MatrixFp> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = MatrixFp::zeros(self.p, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let red = aug.rref();
        if red.pivots.iter().take(n).copied().ne(0..n) || red.rank < n {
            return None;
        }
        let mut inv = MatrixFp::zeros(self.p, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.matrix.get(r, n + c));
            }
        }
        Some(inv)
    }
}

/// Canonical (rref, zero rows dropped) basis of the span of `rows`.
pub fn canonical_basis(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let red = MatrixFp::from_rows(p, cols, rows)?.rref();
    Ok((0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect())
}

fn check_lengths(basis: &[Vec<u32>], v: &[u32]) -> Result<()> {
    if let Some(bad) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(Error::DimensionMismatch {
            expected: v.len(),
            found: bad.len(),
        });
    }
    Ok(())
}

/// Coefficients `c` with `Σ c_i basis_i = v`, or `None` if `v` is outside
/// the span. The basis must be linearly independent.
pub fn solve_in_span(p: u32, basis: &[Vec<u32>], v: &[u32]) -> Result<Option<Vec<u32>>> {
    check_lengths(basis, v)?;
    let k = basis.len();
    // Columns are basis vectors, augmented by v.
    let mut m = MatrixFp::zeros(p, v.len(), k + 1);
    for (j, b) in basis.iter().enumerate() {
        for (i, &x) in b.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    for (i, &x) in v.iter().enumerate() {
        m.set(i, k, x);
    }
    let red = m.rref();
    if red.pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![0u32; k];
    for (row, &pc) in red.pivots.iter().enumerate() {
        coeffs[pc] = red.matrix.get(row, k);
    }
    // Dependent bases can leave free columns; verify the reconstruction.
    let mut check = vec![0u32; v.len()];
    for (c, b) in coeffs.iter().zip(basis) {
        axpy(&mut check, *c, b, p);
    }
    Ok((check == v).then_some(coeffs))
}

/// True iff `v` is an F_p-combination of `basis`.
pub fn in_span(p: u32, basis: &[Vec<u32>], v: &[u32]) -> Result<bool> {
    check_lengths(basis, v)?;
    if v.iter().all(|&x| x == 0) {
        return Ok(true);
    }
    let mut rows = basis.to_vec();
    let before = MatrixFp::from_rows(p, v.len(), &rows)?.rank();
    rows.push(v.to_vec());
    let after = MatrixFp::from_rows(p, v.len(), &rows)?.rank();
    Ok(before == after)
}

/// Basis of the intersection of two row spaces in F_p^cols.
pub fn intersect(p: u32, cols: usize, a: &[Vec<u32>], b: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    // x_A·A = x_B·B  <=>  (x_A, -x_B) lies in the left kernel of [A; B].
    let mut stacked = a.to_vec();
    stacked.extend(b.iter().cloned());
    let left = MatrixFp::from_rows(p, cols, &stacked)?.transpose().kernel();
    let common: Vec<Vec<u32>> = left
        .iter()
        .map(|x| {
            let mut v = vec![0u32; cols];
            for (c, row) in x.iter().zip(a) {
                axpy(&mut v, *c, row, p);
            }
            v
        })
        .collect();
    canonical_basis(p, cols, &common)
}

/// Vectors from `sup` that extend the independent set `sub` to a basis of
/// `span(sub) + span(sup)`, chosen greedily in order.
pub fn extend_basis(p: u32, cols: usize, sub: &[Vec<u32>], sup: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let mut current = sub.to_vec();
    let mut rank = MatrixFp::from_rows(p, cols, &current)?.rank();
    let mut extra = Vec::new();
    for v in sup {
        current.push(v.clone());
        let r = MatrixFp::from_rows(p, cols, &current)?.rank();
        if r > rank {
            rank = r;
            extra.push(v.clone());
        } else {
            current.pop();
        }
    }
    Ok(extra)
}

/// Number of elements `p^r`, checked against `budget`.
pub fn span_size(p: u32, r: usize, budget: u64) -> Result<u64> {
    let needed = (p as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as u64)
}

/// Odometer over coefficient tuples of a basis, maintaining the current span
/// element incrementally. Digit 0 turns fastest.
#[derive(Debug, Clone)]
pub struct Odometer<'a> {
    p: u32,
    basis: &'a [Vec<u32>],
    digits: Vec<u32>,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl<'a> Odometer<'a> {
    pub fn new(p: u32, cols: usize, basis: &'a [Vec<u32>]) -> Self {
        Self {
            p,
            basis,
            digits: vec![0; basis.len()],
            current: vec![0; cols],
            started: false,
            done: false,
        }
    }

    /// Moves to the next element. Returns `false` once every tuple was visited.
    /// The first call positions the odometer on the zero vector.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        for i in 0..self.digits.len() {
            // Adding basis[i] also handles the wrap p-1 -> 0 since p·v = 0.
            axpy(&mut self.current, 1, &self.basis[i], self.p);
            self.digits[i] += 1;
            if self.digits[i] < self.p {
                return true;
            }
            self.digits[i] = 0;
        }
        self.done = true;
        false
    }

    pub fn current(&self) -> &[u32] {
        &self.current
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }
}

/// Iterator over all `p^r` elements of the span of an independent basis,
/// in odometer order.
pub struct SpanIter<'a> {
    odo: Odometer<'a>,
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.odo.advance().then(|| self.odo.current().to_vec())
    }
}

/// Streams every element of the span of `basis` (assumed independent).
pub fn enumerate_span<'a>(p: u32, cols: usize, basis: &'a [Vec<u32>], budget: u64) -> Result<SpanIter<'a>> {
    span_size(p, basis.len(), budget)?;
    if let Some(bad) = basis.iter().find(|b| b.len() != cols) {
        return Err(Error::DimensionMismatch {
            expected: cols,
            found: bad.len(),
        });
    }
    Ok(SpanIter {
        odo: Odometer::new(p, cols, basis),
    })
}
