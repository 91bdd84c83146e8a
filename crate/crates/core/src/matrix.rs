//! Dense matrices over F_p with exact elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`FMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl FMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    /// Build from signed integer rows. Panics if rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(p: u32, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| field::reduce(v, p)));
        }
        FMatrix { p, rows: rows.len(), cols, data }
    }

    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count");
        debug_assert!(data.iter().all(|&v| v < p));
        FMatrix { p, rows, cols, data }
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % p);
            }
        }
        FMatrix { p, rows, cols, data }
    }

    /// A single column.
    pub fn column(p: u32, v: &[u32]) -> Self {
        FMatrix::from_vec(p, v.len(), 1, v.to_vec())
    }

    /// Matrix whose columns are the given vectors (all of length `n`).
    pub fn from_columns(p: u32, n: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n, "column length");
            for i in 0..n {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    fn same_shape(&self, o: &FMatrix) {
        assert_eq!(self.p, o.p, "mixed moduli");
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
    }

    pub fn add(&self, o: &FMatrix) -> FMatrix {
        self.same_shape(o);
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| field::add(a, b, p)).collect();
        FMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &FMatrix) -> FMatrix {
        self.same_shape(o);
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| field::sub(a, b, p)).collect();
        FMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> FMatrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| field::mul(a, c, p)).collect();
        FMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> FMatrix {
        self.scale(self.p - 1)
    }

    /// `self += c * o`.
    pub fn axpy(&mut self, c: u32, o: &FMatrix) {
        self.same_shape(o);
        if c == 0 {
            return;
        }
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&o.data) {
            *a = field::add(*a, field::mul(c, b, p), p);
        }
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn try_mul(&self, o: &FMatrix) -> Result<FMatrix> {
        if self.p != o.p {
            return Err(Error::ModulusMismatch(self.p, o.p));
        }
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let p = self.p as u64;
        let n = o.cols;
        let mut out = vec![0u64; self.rows * n];
        // terms that fit in the accumulator before a reduction is needed
        let per = ((u64::MAX - p) / ((p - 1).max(1) * (p - 1).max(1))).max(1);
        for i in 0..self.rows {
            let acc = &mut out[i * n..(i + 1) * n];
            let mut count = 0u64;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &o.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b as u64;
                }
                count += 1;
                if count + 1 >= per {
                    for x in acc.iter_mut() {
                        *x %= p;
                    }
                    count = 0;
                }
            }
        }
        Ok(FMatrix {
            p: self.p,
            rows: self.rows,
            cols: n,
            data: out.into_iter().map(|v| (v % p) as u32).collect(),
        })
    }

    /// Product; panics on shape or modulus mismatch.
    pub fn mul(&self, o: &FMatrix) -> FMatrix {
        self.try_mul(o).unwrap_or_else(|e| panic!("matrix product: {e}"))
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let mut s = 0u32;
                for (j, &x) in v.iter().enumerate() {
                    let a = self.data[i * self.cols + j];
                    if a != 0 && x != 0 {
                        s = field::add(s, field::mul(a, x, p), p);
                    }
                }
                s
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> FMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut r = FMatrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    pub fn hstack(p: u32, rows: usize, parts: &[&FMatrix]) -> FMatrix {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = FMatrix::zeros(p, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack rows");
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn vstack(p: u32, cols: usize, parts: &[&FMatrix]) -> FMatrix {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols, "vstack cols");
            data.extend_from_slice(&m.data);
        }
        FMatrix { p, rows, cols, data }
    }

    pub fn block_diag(p: u32, parts: &[&FMatrix]) -> FMatrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = FMatrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &FMatrix) {
        assert!(r0 + m.rows <= self.rows && c0 + m.cols <= self.cols, "block out of range");
        for i in 0..m.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + m.cols].copy_from_slice(&m.data[i * m.cols..(i + 1) * m.cols]);
        }
    }

    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> FMatrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols, "block out of range");
        let mut out = FMatrix::zeros(self.p, r1 - r0, c1 - c0);
        for i in r0..r1 {
            out.data[(i - r0) * (c1 - c0)..(i - r0 + 1) * (c1 - c0)]
                .copy_from_slice(&self.data[i * self.cols + c0..i * self.cols + c1]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> FMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        FMatrix { p: self.p, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> FMatrix {
        FMatrix::from_fn(self.p, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(k) = (r..rows).find(|&k| self.data[k * cols + c] != 0) else {
                continue;
            };
            if k != r {
                for j in c..cols {
                    self.data.swap(k * cols + j, r * cols + j);
                }
            }
            let iv = field::inv(self.data[r * cols + c], p);
            for j in c..cols {
                self.data[r * cols + j] = field::mul(self.data[r * cols + j], iv, p);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let nf = p - f;
                    for j in c..cols {
                        if prow[j] != 0 {
                            row[j] = field::add(row[j], field::mul(nf, prow[j], p), p);
                        }
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Columns span the right null space; one per free column, free entry 1.
    pub fn kernel_basis(&self) -> FMatrix {
        let Rref { reduced, pivots, .. } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = FMatrix::zeros(p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.data[f * free.len() + j] = 1 % p;
            for (r, &pc) in pivots.iter().enumerate() {
                k.data[pc * free.len() + j] = field::neg(reduced.get(r, f), p);
            }
        }
        k
    }

    /// Particular solution of `self * x = b` with free variables zero.
    pub fn solve(&self, b: &FMatrix) -> Result<Option<FMatrix>> {
        if self.p != b.p {
            return Err(Error::ModulusMismatch(self.p, b.p));
        }
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} rows, right side {}",
                self.rows, b.rows
            )));
        }
        let aug = FMatrix::hstack(self.p, self.rows, &[self, b]);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = FMatrix::zeros(self.p, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = reduced.get(r, self.cols + j);
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = FMatrix::hstack(self.p, n, &[self, &FMatrix::identity(self.p, n)]);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.block(0, n, n, 2 * n))
    }

    /// Indices of a maximal independent set of columns (first-come).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Columns forming a basis of the column space, taken from `self`.
    pub fn image_basis(&self) -> FMatrix {
        self.select_cols(&self.independent_columns())
    }

    /// Rows of the reduced echelon form that are nonzero.
    pub fn row_space_basis(&self) -> FMatrix {
        let r = self.rref();
        r.reduced.block(0, r.rank, 0, self.cols)
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.row(i).iter().map(|&v| field::signed(v, self.p).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Coordinates with respect to a fixed family of independent columns.
///
/// Precomputes a left inverse so that membership tests and coordinate
/// extraction are a single product.
#[derive(Clone, Debug)]
pub struct Coords {
    basis: FMatrix,
    left_inv: FMatrix,
}

impl Coords {
    /// `basis` must have linearly independent columns.
    pub fn new(basis: FMatrix) -> Self {
        let p = basis.modulus();
        let k = basis.cols();
        let rows = basis.transpose().independent_columns();
        assert_eq!(rows.len(), k, "basis columns are dependent");
        let sq = basis.select_rows(&rows);
        let inv = sq.inverse().expect("square block invertible");
        let mut left_inv = FMatrix::zeros(p, k, basis.rows());
        for (j, &r) in rows.iter().enumerate() {
            for i in 0..k {
                left_inv.set(i, r, inv.get(i, j));
            }
        }
        Coords { basis, left_inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &FMatrix {
        &self.basis
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let x = self.left_inv.mul_vec(v);
        (self.basis.mul_vec(&x) == v).then_some(x)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coords(v).is_some()
    }
}

/// Decomposes vectors modulo a subspace.
///
/// Given a subspace `S` and a spanning family `B` of an ambient space
/// containing `S`, picks the members of `B` independent modulo `S` as
/// representatives and reports coordinates of vectors modulo `S`.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub_dim: usize,
    reps: Vec<usize>,
    solver: Coords,
}

impl Quotient {
    pub fn new(p: u32, n: usize, sub: &[Vec<u32>], span: &[Vec<u32>]) -> Self {
        let sub_m = FMatrix::from_columns(p, n, sub);
        let s_idx = sub_m.independent_columns();
        let sub_basis: Vec<Vec<u32>> = s_idx.iter().map(|&j| sub[j].clone()).collect();
        let mut all = sub_basis.clone();
        all.extend(span.iter().cloned());
        let m = FMatrix::from_columns(p, n, &all);
        let piv = m.independent_columns();
        let reps: Vec<usize> =
            piv.iter().filter(|&&c| c >= sub_basis.len()).map(|&c| c - sub_basis.len()).collect();
        let mut cols = sub_basis.clone();
        cols.extend(reps.iter().map(|&j| span[j].clone()));
        let solver = Coords::new(FMatrix::from_columns(p, n, &cols));
        Quotient { sub_dim: sub_basis.len(), reps, solver }
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_dim
    }

    /// Indices into the spanning family used as quotient representatives.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Coordinates modulo the subspace; `None` if `v` lies outside the ambient span.
    pub fn reduce(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.solver.coords(v).map(|x| x[self.sub_dim..].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = FMatrix::identity(5, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let m = FMatrix::from_rows(5, &[[1, 2], [2, 4]]);
        let r = m.rref();
        assert_eq!(r.reduced, FMatrix::from_rows(5, &[[1, 2], [0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank, 1);

        let m = FMatrix::from_rows(7, &[[0, 1], [1, 0]]);
        let r = m.rref();
        assert_eq!(r.reduced, FMatrix::identity(7, 2));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn solve_examples() {
        let b = FMatrix::from_rows(7, &[[3, 1], [5, 6]]);
        let x = FMatrix::identity(7, 2).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);

        let a = FMatrix::from_rows(3, &[[1, 1]]);
        let x = a.solve(&FMatrix::from_rows(3, &[[0]])).unwrap().unwrap();
        assert_eq!(x, FMatrix::from_rows(3, &[[0], [0]]));

        let a = FMatrix::from_rows(7, &[[1, 0], [0, 0]]);
        assert!(a.solve(&FMatrix::from_rows(7, &[[0], [1]])).unwrap().is_none());

        let bad = FMatrix::zeros(7, 3, 1);
        assert!(matches!(a.solve(&bad), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FMatrix::identity(5, 3).kernel_basis().cols(), 0);
        assert_eq!(FMatrix::zeros(5, 2, 3).kernel_basis(), FMatrix::identity(5, 3));
        let k = FMatrix::from_rows(5, &[[1, 2]]).kernel_basis();
        assert_eq!(k, FMatrix::from_rows(5, &[[3], [1]]));
    }

    #[test]
    fn empty_shapes() {
        let z = FMatrix::zeros(7, 0, 3);
        assert_eq!(z.rref().rank, 0);
        assert_eq!(z.kernel_basis().cols(), 3);
        let z = FMatrix::zeros(7, 3, 0);
        assert_eq!(z.kernel_basis().cols(), 0);
        assert_eq!(z.mul(&FMatrix::zeros(7, 0, 2)), FMatrix::zeros(7, 3, 2));
    }

    #[test]
    fn inverse_and_pow() {
        let m = FMatrix::from_rows(11, &[[2, 1], [1, 1]]);
        let i = m.inverse().unwrap();
        assert!(m.mul(&i).is_identity());
        assert!(FMatrix::from_rows(11, &[[1, 2], [2, 4]]).inverse().is_none());
        let n = FMatrix::from_rows(11, &[[0, 1], [0, 0]]);
        assert!(n.pow(2).is_zero());
        assert_eq!(m.pow(3), m.mul(&m).mul(&m));
    }

    #[test]
    fn large_modulus_products() {
        let p = crate::field::MAX_CHAR;
        let m = FMatrix::from_fn(p, 20, 20, |i, j| p - 1 - (i * j) as u32);
        let naive = FMatrix::from_fn(p, 20, 20, |i, j| {
            (0..20).fold(0u32, |s, k| {
                field::add(s, field::mul(m.get(i, k), m.get(k, j), p), p)
            })
        });
        assert_eq!(m.mul(&m), naive);
    }

    #[test]
    fn coords_and_quotient() {
        let b = FMatrix::from_rows(7, &[[1, 0], [1, 1], [0, 1]]);
        let c = Coords::new(b);
        assert_eq!(c.coords(&[2, 5, 3]), Some(vec![2, 3]));
        assert_eq!(c.coords(&[1, 0, 0]), None);

        let q = Quotient::new(7, 3, &[vec![1, 0, 0]], &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.representatives(), &[1, 2]);
        assert_eq!(q.reduce(&[5, 2, 1]), Some(vec![2, 1]));
    }
}
