//! Linear subspaces of K^m in canonical form.
//!
//! A subspace is stored as the RREF basis of its row space, which makes
//! equality a plain matrix comparison and every lattice operation (sum,
//! intersection, complement) deterministic.

use crate::field::Field;
use crate::matrix::{unit_vector, Echelon, Matrix, Vector};

#[derive(Clone, PartialEq)]
pub struct Subspace<K> {
    ambient: usize,
    basis: Matrix<K>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_rows(ambient: usize, rows: Vec<Vector<K>>) -> Self {
        let mut ech = Echelon::new(ambient);
        for row in rows {
            assert_eq!(row.len(), ambient, "ambient dimension mismatch");
            ech.insert(row);
        }
        let (basis, _) = ech.into_rref();
        Subspace { ambient, basis }
    }

    pub fn from_matrix_rows(m: &Matrix<K>) -> Self {
        let (basis, _) = m.rref();
        Subspace {
            ambient: m.cols(),
            basis,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<K> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vector<K>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    fn echelon(&self) -> Echelon<K> {
        let mut ech = Echelon::new(self.ambient);
        for i in 0..self.dim() {
            ech.insert(self.basis.row_vec(i));
        }
        ech
    }

    pub fn contains_vector(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.echelon().contains(v)
    }

    pub fn contains(&self, other: &Subspace<K>) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let ech = self.echelon();
        (0..other.dim()).all(|i| ech.contains(other.basis.row(i)))
    }

    /// Canonical bases make equality literal.
    pub fn equals(&self, other: &Subspace<K>) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.basis == other.basis
    }

    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Exact intersection via the kernel of the stacked-basis relation:
    /// x ∈ U∩W iff x = a·U = b·W for some coefficient vectors (a, b).
    pub fn intersect(&self, other: &Subspace<K>) -> Subspace<K> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let k = self.dim();
        let l = other.dim();
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient);
        }
        // Columns: k coefficients on U's basis then l on W's; rows: ambient coords.
        let m = Matrix::from_fn(self.ambient, k + l, |r, c| {
            if c < k {
                self.basis[(c, r)].clone()
            } else {
                -other.basis[(c - k, r)].clone()
            }
        });
        let kernel = m.nullspace();
        let rows = kernel
            .basis_rows()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![K::zero(); self.ambient];
                for (i, a) in coeffs[..k].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient {
                        v[j] = v[j].clone() + a.clone() * self.basis[(i, j)].clone();
                    }
                }
                v
            })
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }

    pub fn is_direct_sum_with(&self, other: &Subspace<K>) -> bool {
        self.intersect(other).is_zero()
    }

    /// Deterministic complement: the standard basis vectors at the
    /// non-pivot coordinates of the canonical basis.
    pub fn complement(&self) -> Subspace<K> {
        let pivots: Vec<usize> = self.echelon().pivots();
        let mut is_pivot = vec![false; self.ambient];
        for p in pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.ambient)
            .filter(|&i| !is_pivot[i])
            .map(|i| unit_vector(self.ambient, i))
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }

    /// Alternative deterministic complement obtained by running the pivot
    /// rule with the coordinate order reversed. Generally a different
    /// choice than [`Subspace::complement`], which is exactly what
    /// choice-independence tests need.
    pub fn complement_reversed(&self) -> Subspace<K> {
        let n = self.ambient;
        let reversed = Matrix::from_fn(self.dim(), n, |r, c| self.basis[(r, n - 1 - c)].clone());
        let mut ech = Echelon::new(n);
        for i in 0..reversed.rows() {
            ech.insert(reversed.row_vec(i));
        }
        let mut is_pivot = vec![false; n];
        for p in ech.pivots() {
            is_pivot[n - 1 - p] = true;
        }
        let rows = (0..n)
            .filter(|&i| !is_pivot[i])
            .map(|i| unit_vector(n, i))
            .collect();
        Subspace::from_rows(n, rows)
    }

    /// Coefficients of `v` on this basis, when `v` lies in the space.
    pub fn coordinates_of(&self, v: &[K]) -> Option<Vector<K>> {
        assert_eq!(v.len(), self.ambient);
        self.basis.transpose().solve(v)
    }
}

impl<K: Field> std::fmt::Debug for Subspace<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of K^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}
