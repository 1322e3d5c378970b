//! Exact integer matrices and Smith normal form.
//!
//! All entries are arbitrary-precision integers. `smith` maintains the
//! invariant `p * a * q = d` with `p`, `q` unimodular and `d` diagonal with a
//! divisibility chain, which is enough for every lattice question the crate
//! asks: kernels, integer linear solves, column-lattice bases and membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (all of length
    /// `rows`). An empty list yields a `rows x 0` matrix.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = IntMat::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[i] += c * row[t]`
    fn add_row(&mut self, i: usize, t: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(i, j) + c * self.get(t, j);
            self.set(i, j, v);
        }
    }

    /// `col[j] += c * col[t]`
    fn add_col(&mut self, j: usize, t: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, j) + c * self.get(i, t);
            self.set(i, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
}

/// Smith normal form data: `p * a * q = d` with `p`, `q` unimodular, `d`
/// diagonal, nonnegative, and `d[i] | d[i+1]` along the diagonal. `p_inv` is
/// `p^-1`, maintained alongside so column-lattice bases come for free.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: IntMat,
    pub p: IntMat,
    pub p_inv: IntMat,
    pub q: IntMat,
    pub rank: usize,
}

impl Snf {
    /// Diagonal entries `d[0..rank]` (each positive).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Finds the position of a nonzero entry of minimal absolute value in the
/// trailing submatrix starting at `(t, t)`.
fn min_abs_pivot(d: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs: Option<BigInt> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best_abs.as_ref().map_or(true, |b| &a < b) {
                best = Some((i, j));
                best_abs = Some(a);
            }
        }
    }
    best
}

/// Computes the Smith normal form of `a`.
pub fn smith(a: &IntMat) -> Snf {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut p = IntMat::identity(m);
    let mut p_inv = IntMat::identity(m);
    let mut q = IntMat::identity(n);
    let mut rank = 0;

    for t in 0..m.min(n) {
        if min_abs_pivot(&d, t).is_none() {
            break;
        }
        'place: loop {
            let (pi, pj) = min_abs_pivot(&d, t).expect("nonzero entry exists");
            if pi != t {
                d.swap_rows(t, pi);
                p.swap_rows(t, pi);
                p_inv.swap_cols(t, pi);
            }
            if pj != t {
                d.swap_cols(t, pj);
                q.swap_cols(t, pj);
            }
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let c = -(d.get(i, t) / d.get(t, t));
                    d.add_row(i, t, &c);
                    p.add_row(i, t, &c);
                    p_inv.add_col(t, i, &(-&c));
                    if !d.get(i, t).is_zero() {
                        dirty = true; // remainder smaller than the pivot
                    }
                }
            }
            if dirty {
                continue 'place;
            }
            // clear row t right of the pivot
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let c = -(d.get(t, j) / d.get(t, t));
                    d.add_col(j, t, &c);
                    q.add_col(j, t, &c);
                    if !d.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'place;
            }
            // pivot must divide the whole trailing submatrix
            let pivot = d.get(t, t).clone();
            let mut fixed = true;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !(d.get(i, j) % &pivot).is_zero() {
                        d.add_row(t, i, &BigInt::from(1));
                        p.add_row(t, i, &BigInt::from(1));
                        p_inv.add_col(i, t, &BigInt::from(-1));
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'place;
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            p.negate_row(t);
            p_inv.negate_col(t);
        }
        rank += 1;
    }

    Snf {
        d,
        p,
        p_inv,
        q,
        rank,
    }
}

/// Invariant factors of `a` (positive diagonal of its Smith form, including
/// any leading 1s).
pub fn invariant_factors(a: &IntMat) -> Vec<BigInt> {
    smith(a).invariant_factors()
}

/// A basis of the integer kernel lattice of `a`, as matrix columns.
pub fn kernel_basis(a: &IntMat) -> IntMat {
    let s = smith(a);
    let n = a.cols();
    let cols: Vec<Vec<BigInt>> = (s.rank..n).map(|j| s.q.column(j)).collect();
    IntMat::from_columns(n, &cols)
}

/// Solves `a * x = b` over the integers, column by column. Returns `None`
/// when any column has no integral solution.
pub fn solve(a: &IntMat, b: &IntMat) -> Option<IntMat> {
    assert_eq!(a.rows(), b.rows());
    let s = smith(a);
    let pb = s.p.mul(b);
    let mut w = IntMat::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let rhs = pb.get(i, j);
            if i < s.rank {
                let di = s.d.get(i, i);
                let (quot, rem) = rhs.div_rem(di);
                if !rem.is_zero() {
                    return None;
                }
                if i < a.cols() {
                    w.set(i, j, quot);
                }
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(s.q.mul(&w))
}

/// An integer lattice given by spanning vectors, prepared for repeated
/// membership tests and coordinate solves.
pub struct Lattice {
    dim: usize,
    snf: Snf,
}

impl Lattice {
    /// `dim` is the ambient dimension; `gens` are spanning vectors (possibly
    /// dependent, possibly empty).
    pub fn new(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        let mat = IntMat::from_columns(dim, gens);
        Lattice {
            dim,
            snf: smith(&mat),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.snf.rank
    }

    /// Membership of `v` in the spanned lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let pv = self.snf.p.mul_vec(v);
        for (i, entry) in pv.iter().enumerate() {
            if i < self.snf.rank {
                if !(entry % self.snf.d.get(i, i)).is_zero() {
                    return false;
                }
            } else if !entry.is_zero() {
                return false;
            }
        }
        true
    }

    /// An independent basis of the lattice, as matrix columns.
    pub fn basis(&self) -> IntMat {
        let cols: Vec<Vec<BigInt>> = (0..self.snf.rank)
            .map(|i| {
                let mut c = self.snf.p_inv.column(i);
                let di = self.snf.d.get(i, i);
                for v in &mut c {
                    *v *= di;
                }
                c
            })
            .collect();
        IntMat::from_columns(self.dim, &cols)
    }
}
