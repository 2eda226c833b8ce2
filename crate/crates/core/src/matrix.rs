//! Dense matrices over an exact field, with the deterministic reductions
//! (RREF, nullspace, solve) everything else is built from.
//!
//! Conventions, used consistently across the crate:
//!   * endomorphisms act on column vectors, `m[(r, c)]` is the coefficient
//!     of `e_r` in the image of `e_c`;
//!   * an n×n endomorphism flattens to a length-n² vector in row-major
//!     order (`r * n + c`);
//!   * pivots are always the first available nonzero entry, free variables
//!     are set to zero, so every output is deterministic.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

pub type Vector<K> = Vec<K>;

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer-literal shorthand, mostly for tests and the example catalog.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&k| K::from_int(k)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vector<K> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + other[(r, c)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - other[(r, c)].clone()
        })
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() * k.clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, x: &[K]) -> Vector<K> {
        assert_eq!(
            self.cols,
            x.len(),
            "shape mismatch in matrix-vector product"
        );
        let mut out = vec![K::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if a.is_zero() || x[c].is_zero() {
                    continue;
                }
                out[r] = out[r].clone() + a.clone() * x[c].clone();
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row-major flattening of a square endomorphism matrix.
    pub fn flatten(&self) -> Vector<K> {
        self.data.clone()
    }

    pub fn unflatten(v: &[K], rows: usize, cols: usize) -> Self {
        assert_eq!(v.len(), rows * cols, "flat length mismatch");
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    /// Reduced row-echelon form with zero rows dropped, plus the pivot
    /// columns in increasing order. Idempotent; preserves the row space.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut ech = Echelon::new(self.cols);
        for r in 0..self.rows {
            ech.insert(self.row_vec(r));
        }
        ech.into_rref()
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}` as rows of a matrix in RREF.
    pub fn nullspace(&self) -> crate::subspace::Subspace<K> {
        let (rref, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![K::zero(); n];
            v[free] = K::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                let coeff = rref[(ri, free)].clone();
                if !coeff.is_zero() {
                    v[pc] = -coeff;
                }
            }
            basis.push(v);
        }
        crate::subspace::Subspace::from_rows(n, basis)
    }

    /// Inverse of a square matrix, when it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// One exact solution of `self · x = b` (free variables zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[K]) -> Option<Vector<K>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        let aug = self.hstack(&Matrix::from_rows(
            b.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>(),
        ));
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = rref[(ri, self.cols)].clone();
        }
        Some(x)
    }
}

impl<K> Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (r, c): (usize, usize)) -> &K {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<K> IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut K {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Incremental row reducer: rows are inserted one at a time and kept fully
/// reduced, so huge sparse systems never materialize as a dense matrix.
/// The final state is the unique RREF of the row space.
pub struct Echelon<K> {
    width: usize,
    // (pivot column, row normalized to a unit pivot), sorted by pivot column
    rows: Vec<(usize, Vec<K>)>,
}

impl<K: Field> Echelon<K> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the current basis; if independent, normalize,
    /// back-substitute into the stored rows and keep it. Returns true when
    /// the row enlarged the span.
    pub fn insert(&mut self, mut row: Vec<K>) -> bool {
        assert_eq!(row.len(), self.width);
        for (pc, prow) in &self.rows {
            let coeff = row[*pc].clone();
            if coeff.is_zero() {
                continue;
            }
            for (dst, src) in row.iter_mut().zip(prow.iter()) {
                if !src.is_zero() {
                    *dst = dst.clone() - coeff.clone() * src.clone();
                }
            }
        }
        let pivot = match row.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = row[pivot].inv();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for (_, prow) in self.rows.iter_mut() {
            let coeff = prow[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            for (dst, src) in prow.iter_mut().zip(row.iter()) {
                if !src.is_zero() {
                    *dst = dst.clone() - coeff.clone() * src.clone();
                }
            }
        }
        let at = self.rows.partition_point(|(pc, _)| *pc < pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    /// Insert a sparse row given as (column, value) pairs.
    pub fn insert_sparse(&mut self, entries: &[(usize, K)]) -> bool {
        if entries.iter().all(|(_, v)| v.is_zero()) {
            return false;
        }
        let mut row = vec![K::zero(); self.width];
        for (c, v) in entries {
            row[*c] = row[*c].clone() + v.clone();
        }
        self.insert(row)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Membership test for the row space.
    pub fn contains(&self, row: &[K]) -> bool {
        assert_eq!(row.len(), self.width);
        let mut row = row.to_vec();
        for (pc, prow) in &self.rows {
            let coeff = row[*pc].clone();
            if coeff.is_zero() {
                continue;
            }
            for (dst, src) in row.iter_mut().zip(prow.iter()) {
                if !src.is_zero() {
                    *dst = dst.clone() - coeff.clone() * src.clone();
                }
            }
        }
        row.iter().all(|x| x.is_zero())
    }

    pub fn into_rref(self) -> (Matrix<K>, Vec<usize>) {
        let pivots = self.pivots();
        let rows: Vec<Vec<K>> = self.rows.into_iter().map(|(_, r)| r).collect();
        let cols = self.width;
        if rows.is_empty() {
            (Matrix::zeros(0, cols), pivots)
        } else {
            (Matrix::from_rows(rows), pivots)
        }
    }

    /// Nullspace of the system whose equation rows were inserted.
    pub fn nullspace_basis(&self) -> Vec<Vec<K>> {
        let n = self.width;
        let mut is_pivot = vec![false; n];
        for (pc, _) in &self.rows {
            is_pivot[*pc] = true;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![K::zero(); n];
            v[free] = K::one();
            for (pc, prow) in &self.rows {
                let coeff = prow[free].clone();
                if !coeff.is_zero() {
                    v[*pc] = -coeff;
                }
            }
            basis.push(v);
        }
        basis
    }
}

pub fn vec_add<K: Field>(a: &[K], b: &[K]) -> Vector<K> {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn vec_sub<K: Field>(a: &[K], b: &[K]) -> Vector<K> {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn vec_scale<K: Field>(k: &K, a: &[K]) -> Vector<K> {
    a.iter().map(|x| k.clone() * x.clone()).collect()
}

pub fn vec_is_zero<K: Field>(a: &[K]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn unit_vector<K: Field>(n: usize, i: usize) -> Vector<K> {
    let mut v = vec![K::zero(); n];
    v[i] = K::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};

    #[test]
    fn rref_rank_one() {
        let m = Matrix::<Rat>::from_int_rows(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_int_rows(&[&[1, 2]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::<Rat>::identity(3);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_f2() {
        // Hand row-reduction over F_2: swap-free elimination gives the identity.
        let w = Fp::new(1, 2);
        let m = Matrix::from_fn(2, 2, |r, c| {
            Fp::from_int([[1, 1], [1, 0]][r][c]).promote(&w)
        });
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::<Rat>::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn nullspace_zero_matrix() {
        let m = Matrix::<Rat>::zeros(2, 3);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 3);
    }

    #[test]
    fn nullspace_identity() {
        let m = Matrix::<Rat>::identity(3);
        assert_eq!(m.nullspace().dim(), 0);
    }

    #[test]
    fn nullspace_row() {
        let m = Matrix::<Rat>::from_int_rows(&[&[1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 2);
        // The stated spanning vectors lie in the computed space.
        let v1: Vec<Rat> = [1, -1, 0].iter().map(|&k| Rat::from_int(k)).collect();
        let v2: Vec<Rat> = [0, 0, 1].iter().map(|&k| Rat::from_int(k)).collect();
        assert!(ns.contains_vector(&v1));
        assert!(ns.contains_vector(&v2));
        // And every basis vector is annihilated.
        for row in ns.basis_rows() {
            assert!(vec_is_zero(&m.apply(&row)));
        }
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::<Rat>::identity(2);
        let b = vec![Rat::from_int(3), Rat::from_int(-1)];
        assert_eq!(id.solve(&b).unwrap(), b);

        // Underdetermined: free variable pinned to zero.
        let m = Matrix::<Rat>::from_int_rows(&[&[1, 1]]);
        let sol = m.solve(&[Rat::from_int(2)]).unwrap();
        assert_eq!(sol, vec![Rat::from_int(2), Rat::from_int(0)]);

        // Inconsistent.
        let m = Matrix::<Rat>::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[Rat::from_int(0), Rat::from_int(1)]).is_none());
    }

    #[test]
    fn echelon_matches_rref() {
        let m = Matrix::<Rat>::from_int_rows(&[&[0, 2, 4], &[1, 1, 1], &[1, 3, 5]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.rows(), 2);
        // Row space membership survives reduction.
        let mut ech = Echelon::new(3);
        for i in 0..m.rows() {
            ech.insert(m.row_vec(i));
        }
        assert!(ech.contains(&m.row_vec(2)));
        assert!(!ech.contains(&unit_vector::<Rat>(3, 2)));
    }
}
