//! The graded enlargement Ť = Tt ⊕ Tt² ⊕ Tt³ in which quasi-derivations of
//! the base become derivations, together with the embedding map and the
//! mechanical verification of its two structure statements.
//!
//! Basis order of the total algebra: (e_1 t, …, e_n t, e_1 t², …, e_n t²,
//! e_1 t³, …, e_n t³). Products of homogeneous elements follow the grading:
//! brackets survive exactly in total degree 2, ternary products in total
//! degree 3, everything higher is zero.

use crate::algebra::{AxiomReport, LYAlgebra};
use crate::der_spaces::{
    self, delta_defect, AuditItem as Item, AuditReport, AuditStatus, OperatorSpace,
};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Clone)]
pub struct CheckAlgebra<K> {
    pub base: LYAlgebra<K>,
    pub total: LYAlgebra<K>,
    /// Complement of [T, T] in the base, from the pivot rule.
    pub u: Subspace<K>,
    /// Complement of {T, T, T} in the base, from the pivot rule.
    pub v: Subspace<K>,
    pub bracket_span: Subspace<K>,
    pub triple_span: Subspace<K>,
    pub total_axioms: AxiomReport<K>,
}

#[derive(Debug)]
pub enum EmbedError<K> {
    /// The enlarged tensors fail an axiom; for a base that is a genuine
    /// LY-algebra this cannot happen, so the failing report is returned.
    TotalAxiomsFail(AxiomReport<K>),
    TupleNotInDelta(String),
}

impl<K: std::fmt::Debug> std::fmt::Display for EmbedError<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbedError::TotalAxiomsFail(rep) => {
                write!(f, "enlarged algebra fails axioms:")?;
                for (name, check) in rep.failures() {
                    write!(
                        f,
                        " {name} at {:?}",
                        check.counterexample.as_ref().map(|c| &c.0)
                    )?;
                }
                Ok(())
            }
            EmbedError::TupleNotInDelta(s) => write!(f, "witness tuple not in Δ(T): {s}"),
        }
    }
}

impl<K: Field> CheckAlgebra<K> {
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn total_dim(&self) -> usize {
        self.total.dim()
    }

    /// Degree tag (1, 2 or 3) of a total-algebra basis index.
    pub fn degree(&self, index: usize) -> usize {
        index / self.base.dim() + 1
    }
}

/// Build the 3n-dimensional enlargement and run the axiom checker on it.
pub fn build_check<K: Field>(base: &LYAlgebra<K>) -> Result<CheckAlgebra<K>, EmbedError<K>> {
    let n = base.dim();
    let total_n = 3 * n;
    let zero = K::zero();
    let mut c = vec![vec![vec![zero.clone(); total_n]; total_n]; total_n];
    let mut d = vec![vec![vec![vec![zero.clone(); total_n]; total_n]; total_n]; total_n];
    let bc = base.bracket_tensor();
    let bd = base.triple_tensor();
    // Indexing: e_a t^deg sits at a + n*(deg-1). Brackets land in degree
    // i+j = 2, so only (1,1) pairs contribute; ternary products need
    // i+j+k = 3, so only (1,1,1) triples do.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !bc[i][j][k].is_zero() {
                    c[i][j][n + k] = bc[i][j][k].clone();
                }
                for l in 0..n {
                    if !bd[i][j][k][l].is_zero() {
                        d[i][j][k][2 * n + l] = bd[i][j][k][l].clone();
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(total_n);
    for deg in 1..=3usize {
        for i in 0..n {
            labels.push(format!("{}t{}", base.label(i), deg));
        }
    }
    let total =
        LYAlgebra::new(base.field_one().clone(), labels, c, d).expect("grading preserves skewness");
    let total_axioms = total.check_axioms();
    if !total_axioms.all_pass() {
        return Err(EmbedError::TotalAxiomsFail(total_axioms));
    }
    let bracket_span = base.bracket_span();
    let triple_span = base.triple_span();
    Ok(CheckAlgebra {
        u: bracket_span.complement(),
        v: triple_span.complement(),
        base: base.clone(),
        total,
        bracket_span,
        triple_span,
        total_axioms,
    })
}

/// Same enlargement with a caller-chosen pair of complements; used to
/// confirm that the verified statements do not depend on the pivot rule.
pub fn build_check_with<K: Field>(
    base: &LYAlgebra<K>,
    u: Subspace<K>,
    v: Subspace<K>,
) -> Result<CheckAlgebra<K>, EmbedError<K>> {
    let mut ca = build_check(base)?;
    assert!(
        u.is_direct_sum_with(&ca.bracket_span) && u.sum(&ca.bracket_span).is_full(),
        "U must complement the bracket span"
    );
    assert!(
        v.is_direct_sum_with(&ca.triple_span) && v.sum(&ca.triple_span).is_full(),
        "V must complement the ternary span"
    );
    ca.u = u;
    ca.v = v;
    Ok(ca)
}

/// Matrix of the projection of K^n onto `onto` along `along`
/// (requires K^n = onto ⊕ along).
fn projector<K: Field>(onto: &Subspace<K>, along: &Subspace<K>) -> Matrix<K> {
    let n = onto.ambient_dim();
    let onto_rows = onto.basis_rows();
    let along_rows = along.basis_rows();
    let k = onto_rows.len();
    let l = along_rows.len();
    assert_eq!(k + l, n, "not a direct-sum decomposition");
    // Columns are the concatenated basis vectors; solving against e_b gives
    // the unique coefficients of its decomposition.
    let m = Matrix::from_fn(n, n, |r, c| {
        if c < k {
            onto_rows[c][r].clone()
        } else {
            along_rows[c - k][r].clone()
        }
    });
    let mut p = Matrix::zeros(n, n);
    for b in 0..n {
        let mut e = vec![K::zero(); n];
        e[b] = K::one();
        let coef = m.solve(&e).expect("direct sum spans the ambient space");
        for r in 0..n {
            let mut acc = K::zero();
            for (i, row) in onto_rows.iter().enumerate() {
                if !coef[i].is_zero() {
                    acc = acc + coef[i].clone() * row[r].clone();
                }
            }
            p[(r, b)] = acc;
        }
    }
    p
}

/// The embedded endomorphism of the total algebra determined by a
/// quasi-derivation and a witness pair: it acts as D on Tt, as D' on the
/// bracket part of Tt², as D'' on the ternary part of Tt³, and kills the
/// chosen complements Ut² and Vt³.
pub fn phi<K: Field>(
    ca: &CheckAlgebra<K>,
    d: &Matrix<K>,
    d_prime: &Matrix<K>,
    d_second: &Matrix<K>,
) -> Result<Matrix<K>, EmbedError<K>> {
    let tuple = [
        d.clone(),
        d.clone(),
        d_prime.clone(),
        d.clone(),
        d.clone(),
        d_second.clone(),
    ];
    if let Some(err) = delta_defect(&ca.base, &tuple) {
        return Err(EmbedError::TupleNotInDelta(err));
    }
    Ok(phi_unchecked(ca, d, d_prime, d_second))
}

fn phi_unchecked<K: Field>(
    ca: &CheckAlgebra<K>,
    d: &Matrix<K>,
    d_prime: &Matrix<K>,
    d_second: &Matrix<K>,
) -> Matrix<K> {
    let n = ca.base.dim();
    let p_bracket = projector(&ca.bracket_span, &ca.u);
    let p_triple = projector(&ca.triple_span, &ca.v);
    let b1 = d.clone();
    let b2 = d_prime.mul(&p_bracket);
    let b3 = d_second.mul(&p_triple);
    let mut m = Matrix::zeros(3 * n, 3 * n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] = b1[(r, c)].clone();
            m[(n + r, n + c)] = b2[(r, c)].clone();
            m[(2 * n + r, 2 * n + c)] = b3[(r, c)].clone();
        }
    }
    m
}

/// Image of the whole quasi-derivation space under the embedding, as a
/// subspace of the flattened endomorphisms of the total algebra.
pub fn phi_image<K: Field>(
    ca: &CheckAlgebra<K>,
    qder: &OperatorSpace<K>,
) -> Result<Subspace<K>, EmbedError<K>> {
    let tn = ca.total.dim();
    let mut rows = Vec::new();
    for dmat in qder.basis_matrices() {
        let w = qder
            .witnesses_for(&dmat)
            .expect("computed basis elements always have witnesses");
        rows.push(phi(ca, &dmat, &w[0], &w[1])?.flatten());
    }
    Ok(Subspace::from_rows(tn * tn, rows))
}

/// Injectivity, witness-independence and landing inside the derivation
/// algebra of the enlargement.
pub fn verify_prop_4_1<K: Field>(
    ca: &CheckAlgebra<K>,
    qder: &OperatorSpace<K>,
) -> Result<AuditReport, EmbedError<K>> {
    let mut rep = AuditReport::default();
    let img = phi_image(ca, qder)?;
    rep_push(
        &mut rep,
        "injective",
        img.dim() == qder.dim(),
        format!("dim QDer = {}, dim φ(QDer) = {}", qder.dim(), img.dim()),
    );

    // Witness independence: shift a witness pair by maps killing [T,T]
    // resp. {T,T,T}; the embedded matrix must not move. The projectors
    // onto U along [T,T] (and V along {T,T,T}) are such maps, nonzero
    // whenever the derived parts are proper.
    let shift_b = projector(&ca.u, &ca.bracket_span);
    let shift_t = projector(&ca.v, &ca.triple_span);
    let mut independent = true;
    let mut nontrivial = false;
    let mut detail = String::new();
    for dmat in qder.basis_matrices() {
        let w = qder.witnesses_for(&dmat).expect("witness exists");
        let base_phi = phi(ca, &dmat, &w[0], &w[1])?;
        let alt_prime = w[0].add(&shift_b);
        let alt_second = w[1].add(&shift_t);
        // The shifted pair must again witness the quasi-derivation.
        let tuple = [
            dmat.clone(),
            dmat.clone(),
            alt_prime.clone(),
            dmat.clone(),
            dmat.clone(),
            alt_second.clone(),
        ];
        if delta_defect(&ca.base, &tuple).is_some() {
            independent = false;
            detail = "shifted witness pair left Δ(T)".into();
            break;
        }
        if !shift_b.is_zero() || !shift_t.is_zero() {
            nontrivial = true;
        }
        let alt_phi = phi(ca, &dmat, &alt_prime, &alt_second)?;
        if alt_phi != base_phi {
            independent = false;
            detail = "two witness pairs embed differently".into();
            break;
        }
    }
    if detail.is_empty() {
        detail = if nontrivial {
            "distinct witness pairs yield identical matrices".into()
        } else {
            "witness fiber is trivial (both complements are zero)".into()
        };
    }
    rep_push(&mut rep, "witness_independent", independent, detail);

    let mut lands = true;
    let mut detail = String::from("every embedded map satisfies both derivation identities");
    for dmat in qder.basis_matrices() {
        let w = qder.witnesses_for(&dmat).expect("witness exists");
        let p = phi(ca, &dmat, &w[0], &w[1])?;
        let tuple = [p.clone(), p.clone(), p.clone(), p.clone(), p.clone(), p];
        if let Some(err) = delta_defect(&ca.total, &tuple) {
            lands = false;
            detail = format!("an embedded map fails the {err}");
            break;
        }
    }
    rep_push(&mut rep, "lands_in_der", lands, detail);
    Ok(rep)
}

/// Outcome of the decomposition check, with the independently computed
/// dimensions exposed for reporting.
pub struct Prop42Outcome<K> {
    pub report: AuditReport,
    pub der_total: OperatorSpace<K>,
    pub zder_total: OperatorSpace<K>,
    pub phi_dim: usize,
}

/// Der(Ť) = φ(QDer(T)) ⊕ ZDer(Ť) for a centerless base, with Der(Ť) and
/// ZDer(Ť) computed by the direct kernel route on the enlargement.
pub fn verify_prop_4_2<K: Field>(
    ca: &CheckAlgebra<K>,
    qder: &OperatorSpace<K>,
) -> Result<Prop42Outcome<K>, EmbedError<K>> {
    let mut rep = AuditReport::default();
    let der_total = der_spaces::der(&ca.total);
    let zder_total = der_spaces::zder(&ca.total);
    let n = ca.base.dim();

    // Z(Ť) always contains Tt² + Tt³; equality characterizes centerless bases.
    let center_total = ca.total.center();
    let tail = Subspace::from_rows(
        3 * n,
        (n..3 * n)
            .map(|i| crate::matrix::unit_vector(3 * n, i))
            .collect(),
    );
    rep_push(
        &mut rep,
        "total_center_contains_tail",
        center_total.contains(&tail),
        format!("dim Z(total) = {}", center_total.dim()),
    );
    let base_centerless = ca.base.center().is_zero();
    rep_push(
        &mut rep,
        "total_center_eq_tail_iff_base_centerless",
        center_total.equals(&tail) == base_centerless,
        format!("base centerless: {base_centerless}"),
    );

    if !base_centerless {
        rep.items.push(Item {
            name: "decomposition".into(),
            status: AuditStatus::HypothesisUnmet,
            detail: format!("base center has dimension {}", ca.base.center().dim()),
        });
        return Ok(Prop42Outcome {
            report: rep,
            der_total,
            zder_total,
            phi_dim: 0,
        });
    }

    let img = phi_image(ca, qder)?;
    let sum = img.sum(&zder_total.space);
    rep_push(
        &mut rep,
        "decomposition",
        sum.equals(&der_total.space) && img.is_direct_sum_with(&zder_total.space),
        format!(
            "dim Der(total) = {}, dim φ(QDer) = {}, dim ZDer(total) = {}",
            der_total.dim(),
            img.dim(),
            zder_total.dim()
        ),
    );
    rep_push(
        &mut rep,
        "dimension_identity",
        der_total.dim() == qder.dim() + zder_total.dim(),
        format!(
            "{} = {} + {}",
            der_total.dim(),
            qder.dim(),
            zder_total.dim()
        ),
    );
    let phi_dim = img.dim();
    Ok(Prop42Outcome {
        report: rep,
        der_total,
        zder_total,
        phi_dim,
    })
}

fn rep_push(rep: &mut AuditReport, name: &str, ok: bool, detail: String) {
    rep.items.push(Item {
        name: name.into(),
        status: if ok {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        detail,
    });
}
