//! The six operator spaces attached to an LY-algebra, computed as exact
//! nullspaces of one uniform constraint system, plus the structural audits
//! over them.
//!
//! Everything is phrased through Δ(T): the set of 6-tuples
//! (f, f1, f2, f3, f4, f5) of endomorphisms with
//!
//!   [f(x), y] + [x, f1(y)] = f2([x, y])
//!   {f(x), y, z} + {x, f3(y), z} + {x, y, f4(z)} = f5({x, y, z})
//!
//! on all basis tuples. Each space picks a tuple pattern over a handful of
//! unknown blocks; the solver assembles the linear system with the f-block
//! coordinates ordered last, and the space is the projection of the
//! solution onto that block. The full solution space is kept as witness
//! data wherever witnesses exist (quasi- and generalized derivations, S).

use std::fmt;

use crate::algebra::LYAlgebra;
use crate::field::Field;
use crate::matrix::{Echelon, Matrix};
use crate::poly::minimal_polynomial;
use crate::subspace::Subspace;

/// Scaled reference to an unknown block inside a Δ-slot.
#[derive(Clone, Copy, Debug)]
pub struct SlotTerm {
    pub block: usize,
    pub num: i64,
    pub den: i64,
}

impl SlotTerm {
    fn coeff<K: Field>(&self, witness: &K) -> K {
        (K::from_int(self.num) / K::from_int(self.den)).promote(witness)
    }
}

/// One Δ-membership condition: how the six slots are filled from the
/// unknown blocks (an empty slot is the zero map).
#[derive(Clone, Debug)]
pub struct TupleShape {
    pub slots: [Vec<SlotTerm>; 6],
}

fn term(block: usize) -> Vec<SlotTerm> {
    vec![SlotTerm {
        block,
        num: 1,
        den: 1,
    }]
}

fn term_scaled(block: usize, num: i64, den: i64) -> Vec<SlotTerm> {
    vec![SlotTerm { block, num, den }]
}

fn term_neg(block: usize) -> Vec<SlotTerm> {
    term_scaled(block, -1, 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpaceKind {
    Der,
    ZDer,
    GDer,
    QDer,
    Centroid,
    QCentroid,
    SSpace,
}

impl SpaceKind {
    pub fn key(&self) -> &'static str {
        match self {
            SpaceKind::Der => "der",
            SpaceKind::ZDer => "zder",
            SpaceKind::GDer => "gder",
            SpaceKind::QDer => "qder",
            SpaceKind::Centroid => "centroid",
            SpaceKind::QCentroid => "qcentroid",
            SpaceKind::SSpace => "s_space",
        }
    }

    /// Number of unknown endomorphism blocks (the defining map first).
    pub fn blocks(&self) -> usize {
        match self {
            SpaceKind::Der | SpaceKind::ZDer | SpaceKind::Centroid | SpaceKind::QCentroid => 1,
            SpaceKind::SSpace => 2,
            SpaceKind::QDer => 3,
            SpaceKind::GDer => 6,
        }
    }

    pub fn shapes(&self) -> Vec<TupleShape> {
        let e = Vec::new;
        match self {
            SpaceKind::Der => vec![TupleShape {
                slots: [term(0), term(0), term(0), term(0), term(0), term(0)],
            }],
            SpaceKind::ZDer => vec![
                TupleShape {
                    slots: [term(0), e(), e(), e(), e(), e()],
                },
                TupleShape {
                    slots: [e(), e(), term(0), e(), e(), term(0)],
                },
            ],
            SpaceKind::Centroid => vec![TupleShape {
                slots: [term(0), e(), term(0), e(), e(), term(0)],
            }],
            SpaceKind::QCentroid => vec![
                TupleShape {
                    slots: [term(0), term_neg(0), e(), term_neg(0), e(), e()],
                },
                TupleShape {
                    slots: [term(0), term_neg(0), e(), e(), term_neg(0), e()],
                },
            ],
            SpaceKind::QDer => vec![TupleShape {
                slots: [term(0), term(0), term(1), term(0), term(0), term(2)],
            }],
            SpaceKind::GDer => vec![TupleShape {
                slots: [term(0), term(1), term(2), term(3), term(4), term(5)],
            }],
            SpaceKind::SSpace => vec![TupleShape {
                slots: [
                    term(0),
                    term(0),
                    term(1),
                    term(0),
                    term(0),
                    term_scaled(1, 3, 2),
                ],
            }],
        }
    }
}

/// A computed operator space: the defining block as a subspace of K^{n²}
/// (row-major flattened endomorphisms) plus, for multi-block kinds, the
/// full solution space with the f-block coordinates last.
#[derive(Clone)]
pub struct OperatorSpace<K> {
    pub kind: SpaceKind,
    pub space: Subspace<K>,
    pub witness_space: Option<Subspace<K>>,
    n: usize,
}

impl<K: Field> OperatorSpace<K> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_matrices(&self) -> Vec<Matrix<K>> {
        self.space
            .basis_rows()
            .into_iter()
            .map(|row| Matrix::unflatten(&row, self.n, self.n))
            .collect()
    }

    pub fn contains(&self, f: &Matrix<K>) -> bool {
        self.space.contains_vector(&f.flatten())
    }

    /// Recover one witness tuple for `f`: matrices for blocks 1.. of the
    /// defining pattern (e.g. (D', D'') for a quasi-derivation).
    pub fn witnesses_for(&self, f: &Matrix<K>) -> Option<Vec<Matrix<K>>> {
        let witness = self.witness_space.as_ref()?;
        let blocks = self.kind.blocks();
        let nn = self.n * self.n;
        // Find a combination of solution basis rows whose f-part equals f.
        let rows = witness.basis_rows();
        if rows.is_empty() {
            return if f.is_zero() {
                Some(vec![Matrix::zeros(self.n, self.n); blocks - 1])
            } else {
                None
            };
        }
        let f_cols = Matrix::from_fn(nn, rows.len(), |r, c| {
            rows[c][(blocks - 1) * nn + r].clone()
        });
        let coeffs = f_cols.solve(&f.flatten())?;
        let mut out = Vec::new();
        for b in 0..blocks - 1 {
            let mut m = Matrix::zeros(self.n, self.n);
            for r in 0..self.n {
                for c in 0..self.n {
                    let mut acc = K::zero();
                    for (row, co) in rows.iter().zip(&coeffs) {
                        if !co.is_zero() {
                            acc = acc + co.clone() * row[b * nn + r * self.n + c].clone();
                        }
                    }
                    m[(r, c)] = acc;
                }
            }
            out.push(m);
        }
        Some(out)
    }

    /// Expand `f` plus recovered witnesses into the six concrete slot maps
    /// of each defining condition.
    pub fn tuples_for(&self, alg: &LYAlgebra<K>, f: &Matrix<K>) -> Option<Vec<[Matrix<K>; 6]>> {
        let n = self.n;
        let blocks: Vec<Matrix<K>> = match self.kind.blocks() {
            1 => vec![f.clone()],
            _ => {
                let mut v = self.witnesses_for(f)?;
                v.insert(0, f.clone());
                v
            }
        };
        let one = alg.field_one();
        let mut tuples = Vec::new();
        for shape in self.kind.shapes() {
            let mut tuple: Vec<Matrix<K>> = Vec::with_capacity(6);
            for slot in &shape.slots {
                let mut m = Matrix::zeros(n, n);
                for t in slot {
                    m = m.add(&blocks[t.block].scale(&t.coeff(one)));
                }
                tuple.push(m);
            }
            tuples.push(tuple.try_into().ok().unwrap());
        }
        Some(tuples)
    }

    /// Independent re-verification: every basis element, with recovered
    /// witnesses, satisfies its defining identities on all basis tuples by
    /// direct tensor contraction.
    pub fn verify(&self, alg: &LYAlgebra<K>) -> Result<(), String> {
        for (idx, f) in self.basis_matrices().iter().enumerate() {
            let tuples = self.tuples_for(alg, f).ok_or_else(|| {
                format!("{}: no witness for basis element {idx}", self.kind.key())
            })?;
            for tuple in &tuples {
                if let Some(err) = delta_defect(alg, tuple) {
                    return Err(format!(
                        "{} basis element {idx} fails its defining identity at {err}",
                        self.kind.key()
                    ));
                }
            }
        }
        Ok(())
    }
}

/// First failing instance of the two Δ identities for a concrete 6-tuple,
/// evaluated directly through the multilinear products.
pub fn delta_defect<K: Field>(alg: &LYAlgebra<K>, t: &[Matrix<K>; 6]) -> Option<String> {
    let n = alg.dim();
    for i in 0..n {
        let ei = alg.basis_vector(i);
        let f0ei = t[0].apply(&ei);
        for j in 0..n {
            let ej = alg.basis_vector(j);
            let mut lhs = alg.bracket(&f0ei, &ej);
            let r = alg.bracket(&ei, &t[1].apply(&ej));
            for (a, b) in lhs.iter_mut().zip(&r) {
                *a = a.clone() + b.clone();
            }
            let rhs = t[2].apply(&alg.bracket_basis(i, j));
            if lhs != rhs {
                return Some(format!("binary identity on (e{i}, e{j})"));
            }
        }
    }
    for i in 0..n {
        let ei = alg.basis_vector(i);
        let f0ei = t[0].apply(&ei);
        for j in 0..n {
            let ej = alg.basis_vector(j);
            let f3ej = t[3].apply(&ej);
            for l in 0..n {
                let el = alg.basis_vector(l);
                let mut lhs = alg.triple(&f0ei, &ej, &el);
                let r1 = alg.triple(&ei, &f3ej, &el);
                let r2 = alg.triple(&ei, &ej, &t[4].apply(&el));
                for ((a, b), c) in lhs.iter_mut().zip(&r1).zip(&r2) {
                    *a = a.clone() + b.clone() + c.clone();
                }
                let rhs = t[5].apply(&alg.triple_basis(i, j, l));
                if lhs != rhs {
                    return Some(format!("ternary identity on (e{i}, e{j}, e{l})"));
                }
            }
        }
    }
    None
}

pub fn in_delta<K: Field>(alg: &LYAlgebra<K>, t: &[Matrix<K>; 6]) -> bool {
    delta_defect(alg, t).is_none()
}

/// Assemble and solve the stacked linear system for the given conditions.
/// Returns the full solution space over `blocks·n²` coordinates with the
/// f-block last.
fn solve_delta<K: Field>(alg: &LYAlgebra<K>, blocks: usize, shapes: &[TupleShape]) -> Subspace<K> {
    let n = alg.dim();
    let nn = n * n;
    let width = blocks * nn;
    let one = alg.field_one();
    let col = |b: usize, r: usize, c: usize| -> usize {
        let ord = if b == 0 { blocks - 1 } else { b - 1 };
        ord * nn + r * n + c
    };
    let c = alg.bracket_tensor();
    let d = alg.triple_tensor();
    let mut ech = Echelon::new(width);
    let mut row: Vec<(usize, K)> = Vec::new();
    for shape in shapes {
        // Binary identity rows, one per (i, j, output k).
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    row.clear();
                    for t in &shape.slots[0] {
                        let co = t.coeff(one);
                        for m in 0..n {
                            let s = &c[m][j][k];
                            if !s.is_zero() {
                                row.push((col(t.block, m, i), co.clone() * s.clone()));
                            }
                        }
                    }
                    for t in &shape.slots[1] {
                        let co = t.coeff(one);
                        for m in 0..n {
                            let s = &c[i][m][k];
                            if !s.is_zero() {
                                row.push((col(t.block, m, j), co.clone() * s.clone()));
                            }
                        }
                    }
                    for t in &shape.slots[2] {
                        let co = t.coeff(one);
                        for m in 0..n {
                            let s = &c[i][j][m];
                            if !s.is_zero() {
                                row.push((col(t.block, k, m), -(co.clone() * s.clone())));
                            }
                        }
                    }
                    if !row.is_empty() {
                        ech.insert_sparse(&row);
                    }
                }
            }
        }
        // Ternary identity rows, one per (i, j, l, output k).
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for k in 0..n {
                        row.clear();
                        for t in &shape.slots[0] {
                            let co = t.coeff(one);
                            for m in 0..n {
                                let s = &d[m][j][l][k];
                                if !s.is_zero() {
                                    row.push((col(t.block, m, i), co.clone() * s.clone()));
                                }
                            }
                        }
                        for t in &shape.slots[3] {
                            let co = t.coeff(one);
                            for m in 0..n {
                                let s = &d[i][m][l][k];
                                if !s.is_zero() {
                                    row.push((col(t.block, m, j), co.clone() * s.clone()));
                                }
                            }
                        }
                        for t in &shape.slots[4] {
                            let co = t.coeff(one);
                            for m in 0..n {
                                let s = &d[i][j][m][k];
                                if !s.is_zero() {
                                    row.push((col(t.block, m, l), co.clone() * s.clone()));
                                }
                            }
                        }
                        for t in &shape.slots[5] {
                            let co = t.coeff(one);
                            for m in 0..n {
                                let s = &d[i][j][l][m];
                                if !s.is_zero() {
                                    row.push((col(t.block, k, m), -(co.clone() * s.clone())));
                                }
                            }
                        }
                        if !row.is_empty() {
                            ech.insert_sparse(&row);
                        }
                    }
                }
            }
        }
    }
    Subspace::from_rows(width, ech.nullspace_basis())
}

fn compute<K: Field>(alg: &LYAlgebra<K>, kind: SpaceKind) -> OperatorSpace<K> {
    let n = alg.dim();
    let nn = n * n;
    let blocks = kind.blocks();
    let full = solve_delta(alg, blocks, &kind.shapes());
    if blocks == 1 {
        return OperatorSpace {
            kind,
            space: full,
            witness_space: None,
            n,
        };
    }
    // The projection of a span is the span of the projections.
    let f_parts = full
        .basis_rows()
        .into_iter()
        .map(|row| row[(blocks - 1) * nn..].to_vec())
        .collect();
    OperatorSpace {
        kind,
        space: Subspace::from_rows(nn, f_parts),
        witness_space: Some(full),
        n,
    }
}

pub fn der<K: Field>(alg: &LYAlgebra<K>) -> OperatorSpace<K> {
    compute(alg, SpaceKind::Der)
}

pub fn zder<K: Field>(alg: &LYAlgebra<K>) -> OperatorSpace<K> {
    compute(alg, SpaceKind::ZDer)
}

pub fn qder<K: Field>(alg: &LYAlgebra<K>) -> OperatorSpace<K> {
    compute(alg, SpaceKind::QDer)
}

pub fn gder<K: Field>(alg: &LYAlgebra<K>) -> OperatorSpace<K> {
    compute(alg, SpaceKind::GDer)
}

pub fn centroid<K: Field>(alg: &LYAlgebra<K>) -> OperatorSpace<K> {
    compute(alg, SpaceKind::Centroid)
}

pub fn qcentroid<K: Field>(alg: &LYAlgebra<K>) -> OperatorSpace<K> {
    compute(alg, SpaceKind::QCentroid)
}

/// The space S of maps with a witness tuple scaled by 3/2 in the last slot;
/// only defined in characteristic zero.
pub fn s_space<K: Field>(alg: &LYAlgebra<K>) -> Result<OperatorSpace<K>, String> {
    if alg.characteristic() != 0 {
        return Err(format!(
            "S is defined over characteristic zero, not {}",
            alg.field_one().field_label()
        ));
    }
    Ok(compute(alg, SpaceKind::SSpace))
}

/// Symmetrized composition D1·D2 + D2·D1.
pub fn jordan_product<K: Field>(d1: &Matrix<K>, d2: &Matrix<K>) -> Matrix<K> {
    d1.mul(d2).add(&d2.mul(d1))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AuditStatus {
    Pass,
    Fail,
    HypothesisUnmet,
}

impl fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditStatus::Pass => write!(f, "pass"),
            AuditStatus::Fail => write!(f, "FAIL"),
            AuditStatus::HypothesisUnmet => write!(f, "hypothesis unmet"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuditItem {
    pub name: String,
    pub status: AuditStatus,
    pub detail: String,
}

impl AuditItem {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        AuditItem {
            name: name.into(),
            status: if ok {
                AuditStatus::Pass
            } else {
                AuditStatus::Fail
            },
            detail: detail.into(),
        }
    }

    fn unmet(name: &str, detail: impl Into<String>) -> Self {
        AuditItem {
            name: name.into(),
            status: AuditStatus::HypothesisUnmet,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub items: Vec<AuditItem>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != AuditStatus::Fail)
    }

    pub fn item(&self, name: &str) -> Option<&AuditItem> {
        self.items.iter().find(|i| i.name == name)
    }

    fn push(&mut self, item: AuditItem) {
        self.items.push(item);
    }
}

/// All seven spaces of one algebra, computed once and shared by the audits.
#[derive(Clone)]
pub struct Spaces<K> {
    pub der: OperatorSpace<K>,
    pub zder: OperatorSpace<K>,
    pub qder: OperatorSpace<K>,
    pub gder: OperatorSpace<K>,
    pub centroid: OperatorSpace<K>,
    pub qcentroid: OperatorSpace<K>,
    pub s_space: Option<OperatorSpace<K>>,
}

pub fn all_spaces<K: Field>(alg: &LYAlgebra<K>) -> Spaces<K> {
    Spaces {
        der: der(alg),
        zder: zder(alg),
        qder: qder(alg),
        gder: gder(alg),
        centroid: centroid(alg),
        qcentroid: qcentroid(alg),
        s_space: s_space(alg).ok(),
    }
}

/// ZDer ⊆ Der ⊆ QDer ⊆ GDer ⊆ gl(T).
pub fn audit_inclusion_chain<K: Field>(alg: &LYAlgebra<K>, sp: &Spaces<K>) -> AuditReport {
    let mut rep = AuditReport::default();
    rep.push(AuditItem::new(
        "zder_in_der",
        sp.der.space.contains(&sp.zder.space),
        format!("dim ZDer = {}, dim Der = {}", sp.zder.dim(), sp.der.dim()),
    ));
    rep.push(AuditItem::new(
        "der_in_qder",
        sp.qder.space.contains(&sp.der.space),
        format!("dim Der = {}, dim QDer = {}", sp.der.dim(), sp.qder.dim()),
    ));
    rep.push(AuditItem::new(
        "qder_in_gder",
        sp.gder.space.contains(&sp.qder.space),
        format!("dim QDer = {}, dim GDer = {}", sp.qder.dim(), sp.gder.dim()),
    ));
    rep.push(AuditItem::new(
        "gder_in_gl",
        sp.gder.space.ambient_dim() == alg.dim() * alg.dim(),
        format!(
            "dim GDer = {} inside gl of dim {}",
            sp.gder.dim(),
            alg.dim() * alg.dim()
        ),
    ));
    rep
}

fn commutator_span<K: Field>(a: &[Matrix<K>], b: &[Matrix<K>], nn: usize) -> Subspace<K> {
    let mut rows = Vec::new();
    for x in a {
        for y in b {
            rows.push(x.commutator(y).flatten());
        }
    }
    Subspace::from_rows(nn, rows)
}

/// The six containments of the first structure lemma, checked on all pairs
/// of computed basis elements.
pub fn audit_lemma_3_1<K: Field>(alg: &LYAlgebra<K>, sp: &Spaces<K>) -> AuditReport {
    let nn = alg.dim() * alg.dim();
    let der_b = sp.der.basis_matrices();
    let qder_b = sp.qder.basis_matrices();
    let c_b = sp.centroid.basis_matrices();
    let qc_b = sp.qcentroid.basis_matrices();
    let mut rep = AuditReport::default();

    let dc = commutator_span(&der_b, &c_b, nn);
    rep.push(AuditItem::new(
        "item1_der_centroid_commutator_in_centroid",
        sp.centroid.space.contains(&dc),
        format!("dim [Der, C] = {}", dc.dim()),
    ));

    let qq = commutator_span(&qder_b, &qc_b, nn);
    rep.push(AuditItem::new(
        "item2_qder_qcentroid_commutator_in_qcentroid",
        sp.qcentroid.space.contains(&qq),
        format!("dim [QDer, QC] = {}", qq.dim()),
    ));

    let mut comp_rows = Vec::new();
    for c in &c_b {
        for d in &der_b {
            comp_rows.push(c.mul(d).flatten());
        }
    }
    let cd = Subspace::from_rows(nn, comp_rows);
    rep.push(AuditItem::new(
        "item3_centroid_compose_der_in_der",
        sp.der.space.contains(&cd),
        format!("dim C∘Der = {}", cd.dim()),
    ));

    rep.push(AuditItem::new(
        "item4_centroid_in_qder",
        sp.qder.space.contains(&sp.centroid.space),
        format!(
            "dim C = {}, dim QDer = {}",
            sp.centroid.dim(),
            sp.qder.dim()
        ),
    ));

    let qcqc = commutator_span(&qc_b, &qc_b, nn);
    rep.push(AuditItem::new(
        "item5_qcentroid_commutators_in_qder",
        sp.qder.space.contains(&qcqc),
        format!("dim [QC, QC] = {}", qcqc.dim()),
    ));

    let qder_plus_qc = sp.qder.space.sum(&sp.qcentroid.space);
    rep.push(AuditItem::new(
        "item6_qder_plus_qcentroid_in_gder",
        sp.gder.space.contains(&qder_plus_qc),
        format!("dim (QDer + QC) = {}", qder_plus_qc.dim()),
    ));

    // QC + [QC, QC] is closed under commutator inside GDer.
    let sub = sp.qcentroid.space.sum(&qcqc);
    let sub_b: Vec<Matrix<K>> = sub
        .basis_rows()
        .into_iter()
        .map(|r| Matrix::unflatten(&r, alg.dim(), alg.dim()))
        .collect();
    let closed = commutator_span(&sub_b, &sub_b, nn);
    rep.push(AuditItem::new(
        "prop_3_2_qc_plus_commutators_subalgebra",
        sub.contains(&closed) && sp.gder.space.contains(&sub),
        format!("dim (QC + [QC,QC]) = {}", sub.dim()),
    ));
    rep
}

/// [C(T), QC(T)] lands in Hom(T, Z(T)); for a centerless algebra every such
/// commutator vanishes outright.
pub fn audit_prop_3_3<K: Field>(alg: &LYAlgebra<K>, sp: &Spaces<K>) -> AuditReport {
    let center = alg.center();
    let mut rep = AuditReport::default();
    let mut ok = true;
    let mut detail = String::new();
    'outer: for c in sp.centroid.basis_matrices() {
        for q in sp.qcentroid.basis_matrices() {
            let comm = c.commutator(&q);
            for i in 0..alg.dim() {
                let image = comm.apply(&alg.basis_vector(i));
                if !center.contains_vector(&image) {
                    ok = false;
                    detail = format!("[c, q](e{i}) escapes the center");
                    break 'outer;
                }
            }
        }
    }
    let name = if center.is_zero() {
        "centroid_qcentroid_commutators_vanish"
    } else {
        "centroid_qcentroid_commutators_into_center"
    };
    let detail = if ok {
        format!("dim Z = {}", center.dim())
    } else {
        detail
    };
    rep.push(AuditItem::new(name, ok, detail));
    rep
}

/// Hypothesis: (D, D, D', D, D, 3D'/2), (D, -D, 0, -D, 0, 0) and
/// (D, -D, 0, 0, -D, 0) all lie in Δ(T). Conclusions: the two rewriting
/// identities, checked on all basis tuples.
pub fn audit_lemma_3_4<K: Field>(
    alg: &LYAlgebra<K>,
    d: &Matrix<K>,
    d_prime: &Matrix<K>,
) -> AuditReport {
    let mut rep = AuditReport::default();
    if alg.characteristic() != 0 {
        rep.push(AuditItem::unmet(
            "hypothesis",
            "characteristic must be zero",
        ));
        return rep;
    }
    let n = alg.dim();
    let zero = Matrix::zeros(n, n);
    let three_half = (K::from_int(3) / K::from_int(2)).promote(alg.field_one());
    let tuples: [[Matrix<K>; 6]; 3] = [
        [
            d.clone(),
            d.clone(),
            d_prime.clone(),
            d.clone(),
            d.clone(),
            d_prime.scale(&three_half),
        ],
        [
            d.clone(),
            d.neg(),
            zero.clone(),
            d.neg(),
            zero.clone(),
            zero.clone(),
        ],
        [
            d.clone(),
            d.neg(),
            zero.clone(),
            zero.clone(),
            d.neg(),
            zero.clone(),
        ],
    ];
    for (i, t) in tuples.iter().enumerate() {
        if let Some(err) = delta_defect(alg, t) {
            rep.push(AuditItem::unmet(
                "hypothesis",
                format!("tuple {} is not in Δ(T): {err}", i + 1),
            ));
            return rep;
        }
    }
    rep.push(AuditItem::new(
        "hypothesis",
        true,
        "all three tuples lie in Δ(T)",
    ));

    // [x, D([y, z])] = [x, [D(y), z]]
    let mut ok1 = true;
    let mut det1 = String::from("holds on all basis triples");
    'c1: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = alg.basis_vector(x);
                let lhs = alg.bracket(&ex, &d.apply(&alg.bracket_basis(y, z)));
                let rhs = alg.bracket(
                    &ex,
                    &alg.bracket(&d.apply(&alg.basis_vector(y)), &alg.basis_vector(z)),
                );
                if lhs != rhs {
                    ok1 = false;
                    det1 = format!("fails at (e{x}, e{y}, e{z})");
                    break 'c1;
                }
            }
        }
    }
    rep.push(AuditItem::new("bracket_rewrite", ok1, det1));

    // {D({u, v, y}), x, z} = {{D(u), v, y}, x, z}
    let mut ok2 = true;
    let mut det2 = String::from("holds on all basis 5-tuples");
    'c2: for u in 0..n {
        for v in 0..n {
            for y in 0..n {
                let uvy = alg.triple_basis(u, v, y);
                let lhs_arg = d.apply(&uvy);
                let rhs_arg = alg.triple(
                    &d.apply(&alg.basis_vector(u)),
                    &alg.basis_vector(v),
                    &alg.basis_vector(y),
                );
                if lhs_arg == rhs_arg {
                    continue;
                }
                for x in 0..n {
                    for z in 0..n {
                        let ex = alg.basis_vector(x);
                        let ez = alg.basis_vector(z);
                        if alg.triple(&lhs_arg, &ex, &ez) != alg.triple(&rhs_arg, &ex, &ez) {
                            ok2 = false;
                            det2 = format!("fails at (e{u}, e{v}, e{y}, e{x}, e{z})");
                            break 'c2;
                        }
                    }
                }
            }
        }
    }
    rep.push(AuditItem::new("triple_rewrite", ok2, det2));
    rep
}

/// For a centerless algebra in characteristic zero, C(T) = S ∩ QC(T).
pub fn audit_prop_3_5<K: Field>(alg: &LYAlgebra<K>, sp: &Spaces<K>) -> AuditReport {
    let mut rep = AuditReport::default();
    let s = match &sp.s_space {
        Some(s) => s,
        None => {
            rep.push(AuditItem::unmet(
                "centroid_eq_s_cap_qc",
                "characteristic must be zero",
            ));
            return rep;
        }
    };
    if !alg.center().is_zero() {
        rep.push(AuditItem::unmet(
            "centroid_eq_s_cap_qc",
            format!("center has dimension {}", alg.center().dim()),
        ));
        return rep;
    }
    let cap = s.space.intersect(&sp.qcentroid.space);
    rep.push(AuditItem::new(
        "centroid_eq_s_cap_qc",
        sp.centroid.space.equals(&cap),
        format!(
            "dim C = {}, dim S = {}, dim S∩QC = {}",
            sp.centroid.dim(),
            s.dim(),
            cap.dim()
        ),
    ));
    rep
}

/// QC(T) is closed under the symmetrized product and satisfies the Jordan
/// identity on computed basis pairs.
pub fn audit_jordan<K: Field>(alg: &LYAlgebra<K>, sp: &Spaces<K>) -> AuditReport {
    let _ = alg;
    let mut rep = AuditReport::default();
    let basis = sp.qcentroid.basis_matrices();
    let mut closed = true;
    let mut detail = String::from("all pairwise products stay inside QC");
    'cl: for a in &basis {
        for b in &basis {
            if !sp.qcentroid.contains(&jordan_product(a, b)) {
                closed = false;
                detail = "a symmetrized product escapes QC".into();
                break 'cl;
            }
        }
    }
    rep.push(AuditItem::new("jordan_closure", closed, detail));

    let mut identity = true;
    let mut detail = String::from("commutativity and the Jordan identity hold on basis pairs");
    'jd: for x in &basis {
        let xx = jordan_product(x, x);
        for y in &basis {
            if jordan_product(x, y) != jordan_product(y, x) {
                identity = false;
                detail = "commutativity fails".into();
                break 'jd;
            }
            let lhs = jordan_product(&jordan_product(x, y), &xx);
            let rhs = jordan_product(x, &jordan_product(y, &xx));
            if lhs != rhs {
                identity = false;
                detail = "(x∘y)∘(x∘x) = x∘(y∘(x∘x)) fails".into();
                break 'jd;
            }
        }
    }
    rep.push(AuditItem::new("jordan_identity", identity, detail));
    rep
}

/// (1) composition-closure of QC forces commutator-closure (char ≠ 2);
/// (2) for centerless T and char ∉ {2, 3}: QC is commutator-closed iff
/// every commutator vanishes.
pub fn audit_thm_3_9<K: Field>(alg: &LYAlgebra<K>, sp: &Spaces<K>) -> AuditReport {
    let mut rep = AuditReport::default();
    let ch = alg.characteristic();
    let basis = sp.qcentroid.basis_matrices();

    if ch == 2 {
        rep.push(AuditItem::unmet(
            "part1_composition_implies_lie",
            "characteristic 2",
        ));
    } else {
        let comp_closed = basis
            .iter()
            .all(|a| basis.iter().all(|b| sp.qcentroid.contains(&a.mul(b))));
        if !comp_closed {
            rep.push(AuditItem::unmet(
                "part1_composition_implies_lie",
                "QC is not closed under composition",
            ));
        } else {
            let comm_closed = basis.iter().all(|a| {
                basis
                    .iter()
                    .all(|b| sp.qcentroid.contains(&a.commutator(b)))
            });
            rep.push(AuditItem::new(
                "part1_composition_implies_lie",
                comm_closed,
                "QC closed under composition, so closed under commutator",
            ));
        }
    }

    if ch == 2 || ch == 3 {
        rep.push(AuditItem::unmet(
            "part2_lie_iff_commutators_vanish",
            "characteristic in {2, 3}",
        ));
    } else if !alg.center().is_zero() {
        rep.push(AuditItem::unmet(
            "part2_lie_iff_commutators_vanish",
            format!("center has dimension {}", alg.center().dim()),
        ));
    } else {
        let comm_closed = basis.iter().all(|a| {
            basis
                .iter()
                .all(|b| sp.qcentroid.contains(&a.commutator(b)))
        });
        let comm_zero = basis
            .iter()
            .all(|a| basis.iter().all(|b| a.commutator(b).is_zero()));
        rep.push(AuditItem::new(
            "part2_lie_iff_commutators_vanish",
            comm_closed == comm_zero,
            format!("commutator-closed: {comm_closed}, commutators vanish: {comm_zero}"),
        ));
    }
    rep
}

/// Kernel and image of a centroid element are ideals.
pub fn audit_prop_3_11_1<K: Field>(
    alg: &LYAlgebra<K>,
    sp: &Spaces<K>,
    d: &Matrix<K>,
) -> AuditReport {
    let mut rep = AuditReport::default();
    if !sp.centroid.contains(d) {
        rep.push(AuditItem::unmet(
            "kernel_image_ideals",
            "map is not in the centroid",
        ));
        return rep;
    }
    let ker = d.nullspace();
    let im = Subspace::from_matrix_rows(&d.transpose());
    let ok = alg.is_ideal(&ker) && alg.is_ideal(&im);
    rep.push(AuditItem::new(
        "kernel_image_ideals",
        ok,
        format!("dim Ker = {}, dim Im = {}", ker.dim(), im.dim()),
    ));
    rep
}

/// For centerless T and D in QC(T) whose minimal polynomial is not divided
/// by X³, the algebra splits as Ker(D) ⊕ Im(D).
pub fn audit_lemma_3_12<K: Field>(
    alg: &LYAlgebra<K>,
    sp: &Spaces<K>,
    d: &Matrix<K>,
) -> AuditReport {
    let mut rep = AuditReport::default();
    if !alg.center().is_zero() {
        rep.push(AuditItem::unmet("kernel_image_split", "center is nonzero"));
        return rep;
    }
    if !sp.qcentroid.contains(d) {
        rep.push(AuditItem::unmet(
            "kernel_image_split",
            "map is not in the quasi-centroid",
        ));
        return rep;
    }
    let pi = minimal_polynomial(d);
    if pi.order_at_zero() >= 3 {
        rep.push(AuditItem::unmet(
            "kernel_image_split",
            format!("X^3 divides the minimal polynomial {pi}"),
        ));
        return rep;
    }
    let ker = d.nullspace();
    let im = Subspace::from_matrix_rows(&d.transpose());
    let ok = ker.is_direct_sum_with(&im) && ker.sum(&im).is_full();
    rep.push(AuditItem::new(
        "kernel_image_split",
        ok,
        format!(
            "π = {pi}; dim Ker = {}, dim Im = {}, ambient = {}",
            ker.dim(),
            im.dim(),
            alg.dim()
        ),
    ));
    rep
}
