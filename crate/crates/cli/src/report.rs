//! Report data model: everything a run computed, serializable to JSON with
//! a stable field order (identical inputs and seed give byte-identical
//! output) and renderable as sectioned text.

use serde::{Deserialize, Serialize};

use lyat_core::algebra::{AxiomReport, LYAlgebra};
use lyat_core::der_spaces::{AuditReport, AuditStatus, OperatorSpace};
use lyat_core::field::Field;
use lyat_core::Matrix;

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct Report {
    pub command: String,
    pub algebra: AlgebraSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spaces: Option<SpacesSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audits: Option<AuditsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check_algebra: Option<EmbedSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deform: Option<DeformSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturb: Option<PerturbSection>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AlgebraSummary {
    pub source: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub axioms: AxiomsSummary,
    pub derived_algebra_dim: usize,
    pub center_dim: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AxiomsSummary {
    pub all_pass: bool,
    pub failures: Vec<AxiomFailure>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AxiomFailure {
    pub axiom: String,
    /// Basis indices of the first offending tuple.
    pub tuple: Vec<usize>,
    /// Nonzero defect vector, coordinates as exact scalars.
    pub defect: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct SpaceInfo {
    pub dim: usize,
    /// Basis endomorphisms, each flattened row-major to n² scalars.
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct SpacesSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub der: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zder: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qder: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gder: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centroid: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qcentroid: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_space: Option<SpaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_space_skipped: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AuditItemJson {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AuditsSection {
    pub inclusion_chain: Vec<AuditItemJson>,
    pub lemma_3_1: Vec<AuditItemJson>,
    pub prop_3_3: Vec<AuditItemJson>,
    pub prop_3_5: Vec<AuditItemJson>,
    pub cor_3_8_jordan: Vec<AuditItemJson>,
    pub thm_3_9: Vec<AuditItemJson>,
    /// One entry per centroid basis element.
    pub prop_3_11_1: Vec<Vec<AuditItemJson>>,
    /// One entry per quasi-centroid basis element.
    pub lemma_3_12: Vec<Vec<AuditItemJson>>,
    /// Rewrite lemma on (D, D') pairs from the S-space witness data.
    pub lemma_3_4: Vec<Vec<AuditItemJson>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct EmbedSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop_4_1: Option<Vec<AuditItemJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop_4_2: Option<Vec<AuditItemJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub der_total_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zder_total_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qder_base_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_image_dim: Option<usize>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct DeformSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace_dims: Option<Vec<(String, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_kernel_equals_der: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_5_4_1_elementary: Option<AuditItemJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_5_4_2_qder: Option<Vec<Vec<AuditItemJson>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop_5_6: Option<Vec<AuditItemJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub robustness: Option<RobustnessSection>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct RobustnessSection {
    pub qder_eq_der_plus_centroid: bool,
    pub prop_5_6_conclusion: bool,
    pub samples: usize,
    pub seed: u64,
    pub classifications: Vec<MapOutcome>,
    pub disclaimer: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct MapOutcome {
    pub label: String,
    pub nonsingular: bool,
    pub ly_valid: bool,
    pub inessential: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centroid_witness: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct PerturbSection {
    pub map: Vec<Vec<String>>,
    pub nonsingular: bool,
    pub ly_valid: bool,
    pub inessential: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centroid_witness: Option<Vec<String>>,
    /// Axiom validity versus the degree-2 identities on (f∘μ₁, 2f∘μ₂);
    /// informational (the full cocycle test is wider).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocycle_check: Option<Vec<AuditItemJson>>,
}

pub fn axioms_summary<K: Field>(rep: &AxiomReport<K>) -> AxiomsSummary {
    let failures = rep
        .failures()
        .into_iter()
        .map(|(name, check)| {
            let (tuple, defect) = check
                .counterexample
                .clone()
                .expect("failing axiom carries a counterexample");
            AxiomFailure {
                axiom: name.to_string(),
                tuple,
                defect: defect.iter().map(|x| x.to_string()).collect(),
            }
        })
        .collect();
    AxiomsSummary {
        all_pass: rep.all_pass(),
        failures,
    }
}

pub fn space_info<K: Field>(sp: &OperatorSpace<K>) -> SpaceInfo {
    SpaceInfo {
        dim: sp.dim(),
        basis: sp
            .space
            .basis_rows()
            .into_iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect(),
    }
}

pub fn audit_items(rep: &AuditReport) -> Vec<AuditItemJson> {
    rep.items
        .iter()
        .map(|i| AuditItemJson {
            name: i.name.clone(),
            status: match i.status {
                AuditStatus::Pass => "pass".into(),
                AuditStatus::Fail => "fail".into(),
                AuditStatus::HypothesisUnmet => "hypothesis-unmet".into(),
            },
            detail: i.detail.clone(),
        })
        .collect()
}

pub fn matrix_strings<K: Field>(m: &Matrix<K>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
        .collect()
}

pub fn algebra_summary<K: Field>(
    source: &str,
    alg: &LYAlgebra<K>,
    axioms: &AxiomReport<K>,
) -> AlgebraSummary {
    AlgebraSummary {
        source: source.to_string(),
        field: alg.field_one().field_label(),
        dim: alg.dim(),
        basis: alg.labels().to_vec(),
        axioms: axioms_summary(axioms),
        derived_algebra_dim: alg.derived_algebra().dim(),
        center_dim: alg.center().dim(),
    }
}

fn fmt_items(out: &mut String, title: &str, items: &[AuditItemJson]) {
    out.push_str(&format!("  {title}\n"));
    for i in items {
        out.push_str(&format!("    [{}] {} — {}\n", i.status, i.name, i.detail));
    }
}

/// Human-readable rendering; the JSON form is the machine interface.
pub fn render_text(rep: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", rep.command));
    let a = &rep.algebra;
    out.push_str(&format!(
        "algebra: {} over {}, dim {}, basis [{}]\n",
        a.source,
        a.field,
        a.dim,
        a.basis.join(" ")
    ));
    out.push_str(&format!(
        "derived algebra dim: {}, center dim: {}\n",
        a.derived_algebra_dim, a.center_dim
    ));
    if a.axioms.all_pass {
        out.push_str("axioms: all pass\n");
    } else {
        out.push_str("axioms: FAIL\n");
        for f in &a.axioms.failures {
            out.push_str(&format!(
                "  {} fails at basis tuple {:?}, defect ({})\n",
                f.axiom,
                f.tuple,
                f.defect.join(", ")
            ));
        }
    }
    if let Some(sp) = &rep.spaces {
        out.push_str("operator spaces:\n");
        for (name, info) in [
            ("der", &sp.der),
            ("zder", &sp.zder),
            ("qder", &sp.qder),
            ("gder", &sp.gder),
            ("centroid", &sp.centroid),
            ("qcentroid", &sp.qcentroid),
            ("s_space", &sp.s_space),
        ] {
            if let Some(info) = info {
                out.push_str(&format!("  dim {name} = {}\n", info.dim));
            }
        }
        if let Some(msg) = &sp.s_space_skipped {
            out.push_str(&format!("  s_space skipped: {msg}\n"));
        }
    }
    if let Some(au) = &rep.audits {
        out.push_str("audits:\n");
        fmt_items(&mut out, "inclusion chain", &au.inclusion_chain);
        fmt_items(&mut out, "lemma_3_1", &au.lemma_3_1);
        fmt_items(&mut out, "prop_3_3", &au.prop_3_3);
        fmt_items(&mut out, "prop_3_5", &au.prop_3_5);
        fmt_items(&mut out, "cor_3_8 (jordan)", &au.cor_3_8_jordan);
        fmt_items(&mut out, "thm_3_9", &au.thm_3_9);
        for (i, items) in au.prop_3_11_1.iter().enumerate() {
            fmt_items(
                &mut out,
                &format!("prop_3_11_1 (centroid basis {i})"),
                items,
            );
        }
        for (i, items) in au.lemma_3_12.iter().enumerate() {
            fmt_items(
                &mut out,
                &format!("lemma_3_12 (qcentroid basis {i})"),
                items,
            );
        }
        for (i, items) in au.lemma_3_4.iter().enumerate() {
            fmt_items(&mut out, &format!("lemma_3_4 (s-space basis {i})"), items);
        }
    }
    if let Some(em) = &rep.check_algebra {
        out.push_str("embedding:\n");
        if let Some(e) = &em.error {
            out.push_str(&format!("  construction failed: {e}\n"));
        } else {
            out.push_str(&format!(
                "  total dim = {}, dim U = {}, dim V = {}\n",
                em.total_dim.unwrap_or(0),
                em.u_dim.unwrap_or(0),
                em.v_dim.unwrap_or(0)
            ));
            if let (Some(d), Some(z), Some(q), Some(p)) = (
                em.der_total_dim,
                em.zder_total_dim,
                em.qder_base_dim,
                em.phi_image_dim,
            ) {
                out.push_str(&format!(
                    "  dim Der(total) = {d}, dim ZDer(total) = {z}, dim QDer(base) = {q}, dim φ(QDer) = {p}\n"
                ));
            }
            if let Some(items) = &em.prop_4_1 {
                fmt_items(&mut out, "prop_4_1", items);
            }
            if let Some(items) = &em.prop_4_2 {
                fmt_items(&mut out, "prop_4_2", items);
            }
        }
    }
    if let Some(df) = &rep.deform {
        out.push_str("deformation:\n");
        if let Some(msg) = &df.skipped {
            out.push_str(&format!("  skipped: {msg}\n"));
        }
        if let Some(dims) = &df.subspace_dims {
            for (name, d) in dims {
                out.push_str(&format!("  dim {name} = {d}\n"));
            }
        }
        if let Some(eq) = df.delta_kernel_equals_der {
            out.push_str(&format!("  kernel of delta equals der: {eq}\n"));
        }
        if let Some(item) = &df.lemma_5_4_1_elementary {
            fmt_items(
                &mut out,
                "lemma_5_4_1 (all elementary maps)",
                std::slice::from_ref(item),
            );
        }
        if let Some(groups) = &df.lemma_5_4_2_qder {
            for (i, items) in groups.iter().enumerate() {
                fmt_items(&mut out, &format!("lemma_5_4_2 (qder basis {i})"), items);
            }
        }
        if let Some(items) = &df.prop_5_6 {
            fmt_items(&mut out, "prop_5_6", items);
        }
        if let Some(rb) = &df.robustness {
            out.push_str(&format!(
                "  robustness ingredients: QDer = Der + C: {}, prop_5_6 conclusion: {}\n",
                rb.qder_eq_der_plus_centroid, rb.prop_5_6_conclusion
            ));
            for c in &rb.classifications {
                out.push_str(&format!(
                    "    {}: nonsingular: {}, LY: {}, inessential: {}{}\n",
                    c.label,
                    yn(c.nonsingular),
                    yn(c.ly_valid),
                    yn(c.inessential),
                    match &c.centroid_witness {
                        Some(w) => format!(" (c = {})", witness_label(w)),
                        None => String::new(),
                    }
                ));
            }
            out.push_str(&format!("  note: {}\n", rb.disclaimer));
        }
    }
    if let Some(p) = &rep.perturb {
        out.push_str(&format!(
            "perturb: LY: {}, inessential: {}{}\n",
            yn(p.ly_valid),
            yn(p.inessential),
            match &p.centroid_witness {
                Some(w) => format!(" (c = {})", witness_label(w)),
                None => String::new(),
            }
        ));
        if !p.nonsingular {
            out.push_str("  note: the supplied map is singular\n");
        }
        if let Some(items) = &p.cocycle_check {
            fmt_items(
                &mut out,
                "prop_5_2 (validity vs degree-2 identities)",
                items,
            );
        }
    }
    out
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Compact witness display: the identity matrix prints as `id`, anything
/// else as its flattened coordinates.
fn witness_label(flat: &[String]) -> String {
    let n2 = flat.len();
    let n = (1..).find(|k| k * k >= n2).unwrap_or(1);
    if n * n == n2 {
        let is_id = (0..n).all(|r| {
            (0..n).all(|c| {
                let v = &flat[r * n + c];
                if r == c {
                    v == "1"
                } else {
                    v == "0"
                }
            })
        });
        if is_id {
            return "id".into();
        }
    }
    format!("[{}]", flat.join(", "))
}

/// True when any asserted item failed (hypothesis-unmet does not count).
pub fn has_failures(rep: &Report) -> bool {
    let fail = |items: &[AuditItemJson]| items.iter().any(|i| i.status == "fail");
    let fail_groups = |groups: &[Vec<AuditItemJson>]| groups.iter().any(|g| fail(g));
    if let Some(au) = &rep.audits {
        if fail(&au.inclusion_chain)
            || fail(&au.lemma_3_1)
            || fail(&au.prop_3_3)
            || fail(&au.prop_3_5)
            || fail(&au.cor_3_8_jordan)
            || fail(&au.thm_3_9)
            || fail_groups(&au.prop_3_11_1)
            || fail_groups(&au.lemma_3_12)
            || fail_groups(&au.lemma_3_4)
        {
            return true;
        }
    }
    if let Some(em) = &rep.check_algebra {
        if em.prop_4_1.as_deref().is_some_and(fail) || em.prop_4_2.as_deref().is_some_and(fail) {
            return true;
        }
    }
    if let Some(df) = &rep.deform {
        if df.delta_kernel_equals_der == Some(false) {
            return true;
        }
        if df
            .lemma_5_4_1_elementary
            .as_ref()
            .is_some_and(|i| i.status == "fail")
        {
            return true;
        }
        if df.prop_5_6.as_deref().is_some_and(fail) {
            return true;
        }
        // The degree-2 identity evaluations report readings; they are
        // informational on tables that fail the axioms, so they do not
        // drive the exit code.
    }
    false
}
