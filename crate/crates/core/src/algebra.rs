//! The Lie-Yamaguti algebra data model: structure constants for the binary
//! and ternary products, multilinear evaluation, the six defining axioms,
//! center/ideals/derived algebra, the left Leibniz skew-symmetrization
//! construction, perturbed products and the built-in example catalog.

use std::fmt;

use crate::field::Field;
use crate::matrix::{unit_vector, vec_is_zero, Matrix, Vector};
use crate::subspace::Subspace;

/// n×n×n structure tensor, `t[i][j][k]` = coefficient of `e_k` in a product
/// of `e_i` and `e_j`.
pub type Tensor3<K> = Vec<Vec<Vec<K>>>;
/// n×n×n×n tensor for the ternary product.
pub type Tensor4<K> = Vec<Vec<Vec<Vec<K>>>>;

#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraError {
    Shape(String),
    /// Skewness of the stored tensors in their first two slots is a
    /// structural invariant; violating data is rejected at construction.
    NotSkew(String),
    DuplicateEntry(String),
    LeibnizFails {
        triple: (usize, usize, usize),
    },
    BadCharacteristic(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Shape(s) => write!(f, "shape error: {s}"),
            AlgebraError::NotSkew(s) => write!(f, "skewness violated: {s}"),
            AlgebraError::DuplicateEntry(s) => write!(f, "conflicting duplicate entry: {s}"),
            AlgebraError::LeibnizFails { triple } => {
                write!(f, "left Leibniz identity fails on basis triple {triple:?}")
            }
            AlgebraError::BadCharacteristic(s) => write!(f, "characteristic not allowed: {s}"),
        }
    }
}

impl std::error::Error for AlgebraError {}

#[derive(Clone)]
pub struct LYAlgebra<K> {
    n: usize,
    labels: Vec<String>,
    /// A properly-formed 1 of the coefficient field (carries the modulus).
    one: K,
    c: Tensor3<K>,
    d: Tensor4<K>,
}

impl<K: Field> fmt::Debug for LYAlgebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LYAlgebra(dim {}, {}, basis [{}])",
            self.n,
            self.one.field_label(),
            self.labels.join(" ")
        )
    }
}

/// Outcome of checking one axiom: the first offending basis tuple and the
/// nonzero defect vector, if any.
#[derive(Clone, Debug)]
pub struct AxiomCheck<K> {
    pub pass: bool,
    pub counterexample: Option<(Vec<usize>, Vector<K>)>,
}

impl<K> AxiomCheck<K> {
    fn ok() -> Self {
        AxiomCheck {
            pass: true,
            counterexample: None,
        }
    }
    fn fail(tuple: Vec<usize>, defect: Vector<K>) -> Self {
        AxiomCheck {
            pass: false,
            counterexample: Some((tuple, defect)),
        }
    }
}

/// Per-axiom verdicts for the six defining identities.
#[derive(Clone, Debug)]
pub struct AxiomReport<K> {
    pub ly1: AxiomCheck<K>,
    pub ly2: AxiomCheck<K>,
    pub ly3: AxiomCheck<K>,
    pub ly4: AxiomCheck<K>,
    pub ly5: AxiomCheck<K>,
    pub ly6: AxiomCheck<K>,
}

impl<K> AxiomReport<K> {
    pub fn all_pass(&self) -> bool {
        self.ly1.pass
            && self.ly2.pass
            && self.ly3.pass
            && self.ly4.pass
            && self.ly5.pass
            && self.ly6.pass
    }

    pub fn failures(&self) -> Vec<(&'static str, &AxiomCheck<K>)> {
        [
            ("LY1", &self.ly1),
            ("LY2", &self.ly2),
            ("LY3", &self.ly3),
            ("LY4", &self.ly4),
            ("LY5", &self.ly5),
            ("LY6", &self.ly6),
        ]
        .into_iter()
        .filter(|(_, c)| !c.pass)
        .collect()
    }
}

impl<K: Field> LYAlgebra<K> {
    /// Construct from full tensors, enforcing the structural skewness of
    /// both products in their first two slots.
    pub fn new(
        one: K,
        labels: Vec<String>,
        c: Tensor3<K>,
        d: Tensor4<K>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let shape_ok = c.len() == n
            && c.iter()
                .all(|p| p.len() == n && p.iter().all(|q| q.len() == n))
            && d.len() == n
            && d.iter().all(|p| {
                p.len() == n
                    && p.iter()
                        .all(|q| q.len() == n && q.iter().all(|r| r.len() == n))
            });
        if !shape_ok {
            return Err(AlgebraError::Shape(format!(
                "tensors do not match dimension {n}"
            )));
        }
        let mut alg = LYAlgebra {
            n,
            labels,
            one,
            c,
            d,
        };
        // Stamp the field parameters onto every entry so characteristic
        // queries and mixed arithmetic are always well-defined.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    alg.c[i][j][k] = alg.c[i][j][k].promote(&alg.one);
                    for l in 0..n {
                        alg.d[i][j][k][l] = alg.d[i][j][k][l].promote(&alg.one);
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..=i {
                for k in 0..n {
                    let skew = alg.c[i][j][k].clone() + alg.c[j][i][k].clone();
                    if !skew.is_zero() {
                        return Err(AlgebraError::NotSkew(format!(
                            "[e{i}, e{j}] and [e{j}, e{i}] do not antisymmetrize at coordinate {k}"
                        )));
                    }
                    for l in 0..n {
                        let skew = alg.d[i][j][k][l].clone() + alg.d[j][i][k][l].clone();
                        if !skew.is_zero() {
                            return Err(AlgebraError::NotSkew(format!(
                                "{{e{i}, e{j}, e{k}}} and {{e{j}, e{i}, e{k}}} do not antisymmetrize \
                                 at coordinate {l}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Build from one-orientation sparse product lists; the unlisted
    /// orientation is filled by antisymmetry and everything else is zero.
    /// Conflicting double entries are errors.
    pub fn from_sparse(
        one: K,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, K)>)],
        triples: &[(usize, usize, usize, Vec<(usize, K)>)],
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mut c = vec![vec![vec![K::zero(); n]; n]; n];
        let mut cset = vec![vec![false; n]; n];
        for (i, j, targets) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || targets.iter().any(|(k, _)| *k >= n) {
                return Err(AlgebraError::Shape(format!(
                    "bracket index out of range ({i},{j})"
                )));
            }
            if i == j && targets.iter().any(|(_, v)| !v.is_zero()) {
                return Err(AlgebraError::NotSkew(format!("[e{i}, e{i}] must vanish")));
            }
            if cset[i][j] {
                return Err(AlgebraError::DuplicateEntry(format!(
                    "bracket (e{i}, e{j})"
                )));
            }
            cset[i][j] = true;
            cset[j][i] = true;
            for (k, v) in targets {
                c[i][j][*k] = v.clone();
                if i != j {
                    c[j][i][*k] = -v.clone();
                }
            }
        }
        let mut d = vec![vec![vec![vec![K::zero(); n]; n]; n]; n];
        let mut dset = vec![vec![vec![false; n]; n]; n];
        for (i, j, k, targets) in triples {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n || targets.iter().any(|(l, _)| *l >= n) {
                return Err(AlgebraError::Shape(format!(
                    "triple index out of range ({i},{j},{k})"
                )));
            }
            if i == j && targets.iter().any(|(_, v)| !v.is_zero()) {
                return Err(AlgebraError::NotSkew(format!(
                    "{{e{i}, e{i}, e{k}}} must vanish"
                )));
            }
            if dset[i][j][k] {
                return Err(AlgebraError::DuplicateEntry(format!(
                    "triple (e{i}, e{j}, e{k})"
                )));
            }
            dset[i][j][k] = true;
            dset[j][i][k] = true;
            for (l, v) in targets {
                d[i][j][k][*l] = v.clone();
                if i != j {
                    d[j][i][k][*l] = -v.clone();
                }
            }
        }
        Self::new(one, labels, c, d)
    }

    pub fn abelian(one: K, n: usize) -> Self {
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        Self::from_sparse(one, labels, &[], &[]).expect("abelian tables are trivially skew")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn field_one(&self) -> &K {
        &self.one
    }

    pub fn characteristic(&self) -> u64 {
        self.one.characteristic()
    }

    pub fn bracket_tensor(&self) -> &Tensor3<K> {
        &self.c
    }

    pub fn triple_tensor(&self) -> &Tensor4<K> {
        &self.d
    }

    /// [e_i, e_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector<K> {
        self.c[i][j].clone()
    }

    /// {e_i, e_j, e_k} as a coordinate vector.
    pub fn triple_basis(&self, i: usize, j: usize, k: usize) -> Vector<K> {
        self.d[i][j][k].clone()
    }

    /// Multilinear extension of the binary product.
    pub fn bracket(&self, x: &[K], y: &[K]) -> Vector<K> {
        assert_eq!(x.len(), self.n, "element dimension mismatch");
        assert_eq!(y.len(), self.n, "element dimension mismatch");
        let mut out = vec![K::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let coef = x[i].clone() * y[j].clone();
                for k in 0..self.n {
                    let s = &self.c[i][j][k];
                    if !s.is_zero() {
                        out[k] = out[k].clone() + coef.clone() * s.clone();
                    }
                }
            }
        }
        out
    }

    /// Multilinear extension of the ternary product.
    pub fn triple(&self, x: &[K], y: &[K], z: &[K]) -> Vector<K> {
        assert_eq!(x.len(), self.n, "element dimension mismatch");
        assert_eq!(y.len(), self.n, "element dimension mismatch");
        assert_eq!(z.len(), self.n, "element dimension mismatch");
        let mut out = vec![K::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let cij = x[i].clone() * y[j].clone();
                for k in 0..self.n {
                    if z[k].is_zero() {
                        continue;
                    }
                    let coef = cij.clone() * z[k].clone();
                    for l in 0..self.n {
                        let s = &self.d[i][j][k][l];
                        if !s.is_zero() {
                            out[l] = out[l].clone() + coef.clone() * s.clone();
                        }
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector<K> {
        unit_vector(self.n, i)
    }

    /// Matrix of `z ↦ {x, y, z}`.
    pub fn left_multiplication(&self, x: &[K], y: &[K]) -> Matrix<K> {
        let mut m = Matrix::zeros(self.n, self.n);
        for k in 0..self.n {
            let col = self.triple(x, y, &self.basis_vector(k));
            for r in 0..self.n {
                m[(r, k)] = col[r].clone();
            }
        }
        m
    }

    /// Check all six axioms on basis tuples (multilinearity makes this
    /// sufficient). Failures are recorded, never raised.
    pub fn check_axioms(&self) -> AxiomReport<K> {
        let n = self.n;
        // LY1/LY2 are structural invariants of the stored tensors; re-verify.
        let mut ly1 = AxiomCheck::ok();
        'ly1: for i in 0..n {
            let v = self.bracket_basis(i, i);
            if !vec_is_zero(&v) {
                ly1 = AxiomCheck::fail(vec![i, i], v);
                break 'ly1;
            }
        }
        let mut ly2 = AxiomCheck::ok();
        'ly2: for i in 0..n {
            for k in 0..n {
                let v = self.triple_basis(i, i, k);
                if !vec_is_zero(&v) {
                    ly2 = AxiomCheck::fail(vec![i, i, k], v);
                    break 'ly2;
                }
            }
        }

        // LY3: cyclic triple sum plus cyclic double brackets.
        let mut ly3 = AxiomCheck::ok();
        'ly3: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut defect = self.triple_basis(a, b, c);
                    acc(&mut defect, &self.triple_basis(b, c, a));
                    acc(&mut defect, &self.triple_basis(c, a, b));
                    acc(
                        &mut defect,
                        &self.bracket(&self.bracket_basis(a, b), &self.basis_vector(c)),
                    );
                    acc(
                        &mut defect,
                        &self.bracket(&self.bracket_basis(b, c), &self.basis_vector(a)),
                    );
                    acc(
                        &mut defect,
                        &self.bracket(&self.bracket_basis(c, a), &self.basis_vector(b)),
                    );
                    if !vec_is_zero(&defect) {
                        ly3 = AxiomCheck::fail(vec![a, b, c], defect);
                        break 'ly3;
                    }
                }
            }
        }

        // LY4: {[a,b],c,d} + {[b,c],a,d} + {[c,a],b,d} = 0.
        let mut ly4 = AxiomCheck::ok();
        'ly4: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = self.bracket_basis(a, b);
                    let bc = self.bracket_basis(b, c);
                    let ca = self.bracket_basis(c, a);
                    if vec_is_zero(&ab) && vec_is_zero(&bc) && vec_is_zero(&ca) {
                        continue;
                    }
                    for dd in 0..n {
                        let mut defect =
                            self.triple(&ab, &self.basis_vector(c), &self.basis_vector(dd));
                        acc(
                            &mut defect,
                            &self.triple(&bc, &self.basis_vector(a), &self.basis_vector(dd)),
                        );
                        acc(
                            &mut defect,
                            &self.triple(&ca, &self.basis_vector(b), &self.basis_vector(dd)),
                        );
                        if !vec_is_zero(&defect) {
                            ly4 = AxiomCheck::fail(vec![a, b, c, dd], defect);
                            break 'ly4;
                        }
                    }
                }
            }
        }

        // LY5/LY6 are linear in the operator L(a,b), so only pairs with a
        // nonzero operator can produce a defect.
        let lops: Vec<Vec<Matrix<K>>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.left_multiplication(&self.basis_vector(a), &self.basis_vector(b)))
                    .collect()
            })
            .collect();

        let mut ly5 = AxiomCheck::ok();
        'ly5: for a in 0..n {
            for b in 0..n {
                let l = &lops[a][b];
                if l.is_zero() {
                    continue;
                }
                for c in 0..n {
                    for dd in 0..n {
                        let lhs = l.apply(&self.bracket_basis(c, dd));
                        let mut defect = lhs;
                        let t1 =
                            self.bracket(&l.apply(&self.basis_vector(c)), &self.basis_vector(dd));
                        let t2 =
                            self.bracket(&self.basis_vector(c), &l.apply(&self.basis_vector(dd)));
                        sub(&mut defect, &t1);
                        sub(&mut defect, &t2);
                        if !vec_is_zero(&defect) {
                            ly5 = AxiomCheck::fail(vec![a, b, c, dd], defect);
                            break 'ly5;
                        }
                    }
                }
            }
        }

        let mut ly6 = AxiomCheck::ok();
        'ly6: for a in 0..n {
            for b in 0..n {
                let l = &lops[a][b];
                if l.is_zero() {
                    continue;
                }
                for c in 0..n {
                    for dd in 0..n {
                        for e in 0..n {
                            let mut defect = l.apply(&self.triple_basis(c, dd, e));
                            sub(
                                &mut defect,
                                &self.triple(
                                    &l.apply(&self.basis_vector(c)),
                                    &self.basis_vector(dd),
                                    &self.basis_vector(e),
                                ),
                            );
                            sub(
                                &mut defect,
                                &self.triple(
                                    &self.basis_vector(c),
                                    &l.apply(&self.basis_vector(dd)),
                                    &self.basis_vector(e),
                                ),
                            );
                            sub(
                                &mut defect,
                                &self.triple(
                                    &self.basis_vector(c),
                                    &self.basis_vector(dd),
                                    &l.apply(&self.basis_vector(e)),
                                ),
                            );
                            if !vec_is_zero(&defect) {
                                ly6 = AxiomCheck::fail(vec![a, b, c, dd, e], defect);
                                break 'ly6;
                            }
                        }
                    }
                }
            }
        }

        AxiomReport {
            ly1,
            ly2,
            ly3,
            ly4,
            ly5,
            ly6,
        }
    }

    /// Span of all products: [T,T] + {T,T,T}.
    pub fn derived_algebra(&self) -> Subspace<K> {
        let mut rows = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                rows.push(self.bracket_basis(i, j));
                for k in 0..self.n {
                    rows.push(self.triple_basis(i, j, k));
                }
            }
        }
        Subspace::from_rows(self.n, rows)
    }

    /// Span of brackets only: [T,T].
    pub fn bracket_span(&self) -> Subspace<K> {
        let mut rows = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                rows.push(self.bracket_basis(i, j));
            }
        }
        Subspace::from_rows(self.n, rows)
    }

    /// Span of ternary products only: {T,T,T}.
    pub fn triple_span(&self) -> Subspace<K> {
        let mut rows = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    rows.push(self.triple_basis(i, j, k));
                }
            }
        }
        Subspace::from_rows(self.n, rows)
    }

    /// Solution space of {x, a, y} = {y, a, x} = 0 for a in I, y in T,
    /// together with [x, y] = 0 quantified over all of T.
    pub fn centralizer(&self, ideal: &Subspace<K>) -> Subspace<K> {
        assert_eq!(ideal.ambient_dim(), self.n, "ambient dimension mismatch");
        let n = self.n;
        let mut ech = crate::matrix::Echelon::new(n);
        let mut push_rows = |rows: Vec<Vector<K>>| {
            for row in rows {
                ech.insert(row);
            }
        };
        // [x, e_j] = 0: for output coordinate k, row_i = c[i][j][k].
        for j in 0..n {
            for k in 0..n {
                let row: Vector<K> = (0..n).map(|i| self.c[i][j][k].clone()).collect();
                push_rows(vec![row]);
            }
        }
        // {x, a, e_y} = 0 and {e_y, a, x} = 0 for a in the basis of I.
        for a in ideal.basis_rows() {
            for y in 0..n {
                for k in 0..n {
                    let mut row1 = vec![K::zero(); n];
                    let mut row2 = vec![K::zero(); n];
                    for i in 0..n {
                        // coefficient of x_i in {e_i, a, e_y}_k resp. {e_y, a, e_i}_k
                        let mut c1 = K::zero();
                        let mut c2 = K::zero();
                        for (m, am) in a.iter().enumerate() {
                            if am.is_zero() {
                                continue;
                            }
                            c1 = c1 + am.clone() * self.d[i][m][y][k].clone();
                            c2 = c2 + am.clone() * self.d[y][m][i][k].clone();
                        }
                        row1[i] = c1;
                        row2[i] = c2;
                    }
                    push_rows(vec![row1, row2]);
                }
            }
        }
        Subspace::from_rows(n, ech.nullspace_basis())
    }

    pub fn center(&self) -> Subspace<K> {
        self.centralizer(&Subspace::full(self.n))
    }

    pub fn is_centerless(&self) -> bool {
        self.center().is_zero()
    }

    /// Closure of I under brackets with T and under the ternary product in
    /// every slot.
    pub fn is_ideal(&self, sub: &Subspace<K>) -> bool {
        assert_eq!(sub.ambient_dim(), self.n, "ambient dimension mismatch");
        let basis = sub.basis_rows();
        for v in &basis {
            for i in 0..self.n {
                let e = self.basis_vector(i);
                if !sub.contains_vector(&self.bracket(&e, v)) {
                    return false;
                }
                for j in 0..self.n {
                    let f = self.basis_vector(j);
                    if !sub.contains_vector(&self.triple(&e, &f, v))
                        || !sub.contains_vector(&self.triple(&e, v, &f))
                        || !sub.contains_vector(&self.triple(v, &e, &f))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Replace both products by `f` composed with them. Axiom validity is
    /// not asserted; run `check_axioms` on the result.
    pub fn perturb(&self, f: &Matrix<K>) -> Result<LYAlgebra<K>, AlgebraError> {
        if f.rows() != self.n || f.cols() != self.n {
            return Err(AlgebraError::Shape(format!(
                "perturbation map must be {0}x{0}",
                self.n
            )));
        }
        let n = self.n;
        let mut c = vec![vec![vec![K::zero(); n]; n]; n];
        let mut d = vec![vec![vec![vec![K::zero(); n]; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let fc = f.apply(&self.c[i][j]);
                c[i][j] = fc;
                for k in 0..n {
                    d[i][j][k] = f.apply(&self.d[i][j][k]);
                }
            }
        }
        LYAlgebra::new(self.one.clone(), self.labels.clone(), c, d)
    }

    /// LY-algebra obtained from a left Leibniz product table by
    /// skew-symmetrizing the bracket and taking −¼(x·y)·z as the ternary
    /// product. The Leibniz identity is checked on basis triples first.
    pub fn from_leibniz(
        one: K,
        labels: Vec<String>,
        table: &Tensor3<K>,
    ) -> Result<LYAlgebra<K>, AlgebraError> {
        let n = labels.len();
        if one.characteristic() == 2 {
            return Err(AlgebraError::BadCharacteristic(
                "the skew-symmetrization needs 1/2 and 1/4, so characteristic 2 is excluded".into(),
            ));
        }
        let ok_shape = table.len() == n
            && table
                .iter()
                .all(|p| p.len() == n && p.iter().all(|q| q.len() == n));
        if !ok_shape {
            return Err(AlgebraError::Shape(format!(
                "Leibniz table does not match dimension {n}"
            )));
        }
        let mut t = table.clone();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t[i][j][k] = t[i][j][k].promote(&one);
                }
            }
        }
        let prod = |x: usize, y: usize| -> Vector<K> { t[x][y].clone() };
        let prod_vec = |x: &[K], y: usize| -> Vector<K> {
            let mut out = vec![K::zero(); n];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let s = &t[i][y][k];
                    if !s.is_zero() {
                        out[k] = out[k].clone() + xi.clone() * s.clone();
                    }
                }
            }
            out
        };
        let prod_right = |x: usize, y: &[K]| -> Vector<K> {
            let mut out = vec![K::zero(); n];
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let s = &t[x][j][k];
                    if !s.is_zero() {
                        out[k] = out[k].clone() + yj.clone() * s.clone();
                    }
                }
            }
            out
        };
        // Left Leibniz: x·(y·z) = (x·y)·z + y·(x·z) on all basis triples.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = prod_right(x, &prod(y, z));
                    let mut rhs = prod_vec(&prod(x, y), z);
                    let t2 = prod_right(y, &prod(x, z));
                    acc(&mut rhs, &t2);
                    sub(&mut rhs, &lhs);
                    if !vec_is_zero(&rhs) {
                        return Err(AlgebraError::LeibnizFails { triple: (x, y, z) });
                    }
                }
            }
        }
        let two = (K::one() + K::one()).promote(&one);
        let four = (two.clone() * two.clone()).promote(&one);
        let mut c = vec![vec![vec![K::zero(); n]; n]; n];
        let mut d = vec![vec![vec![vec![K::zero(); n]; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // [x,y] = (x·y − y·x)/2
                    c[i][j][k] = (t[i][j][k].clone() - t[j][i][k].clone()) / two.clone();
                }
                // {x,y,z} = −(x·y)·z / 4
                let xy = prod(i, j);
                for z in 0..n {
                    let v = prod_vec(&xy, z);
                    for k in 0..n {
                        d[i][j][z][k] = -(v[k].clone() / four.clone());
                    }
                }
            }
        }
        LYAlgebra::new(one, labels, c, d)
    }
}

fn acc<K: Field>(dst: &mut [K], src: &[K]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.clone() + s.clone();
        }
    }
}

fn sub<K: Field>(dst: &mut [K], src: &[K]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.clone() - s.clone();
        }
    }
}

/// The two-dimensional example: [x, y] = y, {x, y, y} = y, {y, x, x} = 0,
/// all other products zero-completed.
pub fn example_2_9<K: Field>() -> LYAlgebra<K> {
    LYAlgebra::from_sparse(
        K::one(),
        vec!["x".into(), "y".into()],
        &[(0, 1, vec![(1, K::one())])],
        &[
            (0, 1, 1, vec![(1, K::one())]),
            // {y, x, x} = 0 is listed explicitly; zero-completion forces it anyway.
            (1, 0, 0, vec![]),
        ],
    )
    .expect("catalog table is skew by construction")
}

/// The six-dimensional example with basis x0..x5; unlisted products are
/// zero-completed and the first two slots antisymmetrized.
pub fn example_2_10<K: Field>() -> LYAlgebra<K> {
    let one = K::one;
    LYAlgebra::from_sparse(
        one(),
        (0..6).map(|i| format!("x{i}")).collect(),
        &[
            (0, 1, vec![(1, one())]),
            (0, 3, vec![(3, one())]),
            (0, 5, vec![(5, one())]),
            (1, 2, vec![(5, one())]),
            (3, 4, vec![(5, one())]),
        ],
        &[
            (0, 1, 0, vec![(1, one())]),
            (0, 3, 0, vec![(3, one())]),
            (0, 1, 1, vec![(5, one())]),
            (0, 1, 3, vec![(5, one())]),
            (0, 3, 1, vec![(5, one())]),
            (3, 1, 1, vec![(5, one())]),
            (1, 3, 3, vec![(5, one())]),
            (0, 3, 3, vec![(5, one())]),
            (1, 2, 0, vec![(5, one())]),
            (0, 1, 2, vec![(5, one())]),
            (3, 4, 0, vec![(5, one())]),
            (3, 0, 4, vec![(5, one())]),
        ],
    )
    .expect("catalog table is skew by construction")
}
