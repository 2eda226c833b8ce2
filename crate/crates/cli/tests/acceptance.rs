//! Acceptance suite: the golden results for the two catalog tables, the
//! embedding decomposition, the structural containment battery on the
//! catalog plus random algebras, the cohomology consistency checks, and the
//! trivial-case sweep. Every check is exact (tolerance zero); each
//! criterion prints one PASS/FAIL line.
//!
//! Where a stated golden value disagrees with what the defining equations
//! force on the zero-completed input tables, the criterion is implemented
//! as stated and left to fail honestly; the failure message carries the
//! forced counterexample.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use lyat_core::algebra::{example_2_10, example_2_9, LYAlgebra};
use lyat_core::deformation::{
    b2b3_trivial, centroid_pairs, compose_mu1, compose_mu2, delta1, delta1_kernel, CochainPair,
};
use lyat_core::der_spaces::{all_spaces, jordan_product, AuditStatus};
use lyat_core::field::Field;
use lyat_core::matrix::unit_vector;
use lyat_core::sampling::{random_ly_algebra, seeded_rng};
use lyat_core::{Matrix, Rat, Subspace};

fn rat(k: i64) -> Rat {
    Rat::from_int(k)
}

fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn lyat_json(args: &[&str]) -> (serde_json::Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lyat"))
        .args(args)
        .arg("--format")
        .arg("json")
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("report is valid JSON");
    (v, code)
}

fn catalog() -> Vec<(String, LYAlgebra<Rat>)> {
    let mut cat: Vec<(String, LYAlgebra<Rat>)> = (2..=5)
        .map(|n| (format!("abelian{n}"), LYAlgebra::abelian(rat(1), n)))
        .collect();
    cat.push(("example_2_9".into(), example_2_9()));
    cat.push(("example_2_10".into(), example_2_10()));
    cat
}

fn named_map(entries: &[(usize, usize, i64)], n: usize) -> Matrix<Rat> {
    let mut m = Matrix::zeros(n, n);
    for &(r, c, v) in entries {
        m[(r, c)] = rat(v);
    }
    m
}

#[test]
fn criterion_1_example_2_10_golden() {
    let t0 = Instant::now();
    let (v, _code) = lyat_json(&["report", data_file("ly_2_10.alg").to_str().unwrap()]);
    let elapsed = t0.elapsed();

    let mut failures: Vec<String> = Vec::new();
    let dim_c = v["spaces"]["centroid"]["dim"].as_u64().unwrap();
    let dim_qc = v["spaces"]["qcentroid"]["dim"].as_u64().unwrap();

    // Stated golden data: dim C = 3 spanned by {id, f1, f2}, dim QC = 4
    // with the extra generator f3.
    let a = example_2_10::<Rat>();
    let sp = all_spaces(&a);
    let id = Matrix::<Rat>::identity(6);
    let f1 = named_map(&[(2, 0, 1), (5, 1, -1)], 6);
    let f2 = named_map(&[(4, 0, 1), (5, 3, -1)], 6);
    let f3 = named_map(&[(4, 1, -1), (2, 3, 1)], 6);
    let claimed_c = Subspace::from_rows(36, vec![id.flatten(), f1.flatten(), f2.flatten()]);
    let claimed_qc = Subspace::from_rows(
        36,
        vec![id.flatten(), f1.flatten(), f2.flatten(), f3.flatten()],
    );

    if dim_c != 3 {
        failures.push(format!(
            "dim C(T) = {dim_c}, stated 3: the maps f1, f2 violate the centroid \
             equation on the zero-completed table (e.g. {{f1(x1), x0, x0}} = 0 but \
             f1({{x1, x0, x0}}) = x5)"
        ));
    }
    if !sp.centroid.space.equals(&claimed_c) {
        failures.push("C(T) does not reduce to span{id, f1, f2}".into());
    }
    if dim_qc != 4 {
        failures.push(format!(
            "dim QC(T) = {dim_qc}, stated 4: f3 violates the quasi-centroid slide \
             at (x0, x1, x3), where slot 3 gives {{x0, x1, x2}} = x5 but slot 1 gives 0"
        ));
    }
    if !sp.qcentroid.space.equals(&claimed_qc) {
        failures.push("QC(T) does not extend C(T) by f3".into());
    }

    // Derived algebra span and the escape of f3.
    let derived = a.derived_algebra();
    let expect = Subspace::from_rows(
        6,
        vec![
            unit_vector::<Rat>(6, 1),
            unit_vector::<Rat>(6, 3),
            unit_vector::<Rat>(6, 5),
        ],
    );
    if !derived.equals(&expect) {
        failures.push("derived algebra is not span{x1, x3, x5}".into());
    }
    if v["algebra"]["derived_algebra_dim"].as_u64() != Some(3) {
        failures.push("report does not show a 3-dimensional derived algebra".into());
    }
    let escapes = derived
        .basis_rows()
        .iter()
        .any(|w| !derived.contains_vector(&f3.apply(w)));
    if !escapes {
        failures.push("f3 does not move the derived algebra out of itself".into());
    }

    if elapsed.as_secs_f64() >= 10.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 10 s"));
    }

    let pass = failures.is_empty();
    println!(
        "ACCEPTANCE 1 (example 2.10 golden data): {} in {elapsed:?}",
        if pass { "PASS" } else { "FAIL" }
    );
    for f in &failures {
        println!("  - {f}");
    }
    assert!(
        pass,
        "stated golden data for the six-dimensional table is not reproduced by \
         its zero-completion: {failures:?}"
    );
}

#[test]
fn criterion_2_example_2_9_golden() {
    let t0 = Instant::now();
    let a = example_2_9::<Rat>();
    let sp = all_spaces(&a);
    // D: x ↦ 0, y ↦ x.
    let d = named_map(&[(0, 1, 1)], 2);
    assert!(sp.qder.contains(&d), "D must be a quasi-derivation");
    assert!(!sp.der.contains(&d), "D must not be a derivation");
    let derived = a.derived_algebra();
    assert!(
        derived.equals(&Subspace::from_rows(2, vec![unit_vector::<Rat>(2, 1)])),
        "derived algebra must be span{{y}}"
    );
    let moved = d.apply(&a.basis_vector(1));
    assert!(
        !derived.contains_vector(&moved),
        "D must move the derived algebra out of itself"
    );
    let elapsed = t0.elapsed();
    println!("ACCEPTANCE 2 (example 2.9 golden data): PASS in {elapsed:?}");
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "runtime {elapsed:?} exceeds 1 s"
    );
}

#[test]
fn criterion_3_embedding_theorem() {
    let t0 = Instant::now();
    let (v, code) = lyat_json(&["embed", data_file("ly_2_9.alg").to_str().unwrap()]);
    let elapsed = t0.elapsed();
    let em = &v["check_algebra"];
    assert!(em["error"].is_null(), "construction must succeed: {em}");
    for item in em["prop_4_1"].as_array().unwrap() {
        assert_eq!(item["status"], "pass", "prop_4_1 item {item}");
    }
    for item in em["prop_4_2"].as_array().unwrap() {
        assert_eq!(item["status"], "pass", "prop_4_2 item {item}");
    }
    // Exact dimension identity via the direct-kernel route on the
    // 6-dimensional enlargement.
    let der_total = em["der_total_dim"].as_u64().unwrap();
    let zder_total = em["zder_total_dim"].as_u64().unwrap();
    let qder_base = em["qder_base_dim"].as_u64().unwrap();
    assert_eq!(der_total, qder_base + zder_total);
    assert_eq!((der_total, zder_total, qder_base), (19, 16, 3));
    // The input table breaks one axiom of the base, which the report
    // records; the embedding statements themselves all verify, so the
    // exit code reflects only the axiom status.
    assert_eq!(code, 2);
    println!(
        "ACCEPTANCE 3 (embedding decomposition {der_total} = {qder_base} + {zder_total}): \
         PASS in {elapsed:?}"
    );
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "runtime {elapsed:?} exceeds 10 s"
    );
}

#[test]
fn criterion_4_inclusion_chain_battery() {
    let t0 = Instant::now();
    let mut algebras = catalog();
    let mut rng = seeded_rng(20240601);
    for i in 0..50 {
        let (family, alg) = random_ly_algebra(&mut rng, &rat(1));
        algebras.push((format!("random{i}_{family}"), alg));
    }
    assert!(algebras.len() >= 56);
    for (name, alg) in &algebras {
        let sp = all_spaces(alg);
        // ZDer ⊆ Der ⊆ QDer ⊆ GDer.
        assert!(sp.der.space.contains(&sp.zder.space), "{name}: ZDer ⊄ Der");
        assert!(sp.qder.space.contains(&sp.der.space), "{name}: Der ⊄ QDer");
        assert!(
            sp.gder.space.contains(&sp.qder.space),
            "{name}: QDer ⊄ GDer"
        );
        // The six containments of the structure lemma.
        let rep = lyat_core::der_spaces::audit_lemma_3_1(alg, &sp);
        assert!(rep.passed(), "{name}: {:?}", rep);
        // C ⊆ QDer ∩ QC.
        assert!(
            sp.qder.space.contains(&sp.centroid.space)
                && sp.qcentroid.space.contains(&sp.centroid.space),
            "{name}: C ⊄ QDer ∩ QC"
        );
        // Commutators of centroid with quasi-centroid land in Hom(T, Z).
        let rep = lyat_core::der_spaces::audit_prop_3_3(alg, &sp);
        assert!(rep.passed(), "{name}: {:?}", rep);
        // Jordan closure of the quasi-centroid.
        let qb = sp.qcentroid.basis_matrices();
        for x in &qb {
            for y in &qb {
                assert!(
                    sp.qcentroid.contains(&jordan_product(x, y)),
                    "{name}: Jordan product escapes QC"
                );
            }
        }
    }
    println!(
        "ACCEPTANCE 4 (containment battery on {} algebras): PASS in {:?}",
        algebras.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_5_cohomology_consistency() {
    let t0 = Instant::now();
    // Kernel of δ equals the derivation space, and δ of a centroid element
    // is the centroid pair, on every catalog algebra.
    for (name, alg) in catalog() {
        let kernel = delta1_kernel(&alg, false).unwrap();
        let sp = all_spaces(&alg);
        assert!(kernel.equals(&sp.der.space), "{name}: ker δ ≠ Der");
        let two = rat(2);
        for c in sp.centroid.basis_matrices() {
            let pair = delta1(&alg, &c, false).unwrap();
            let expect =
                CochainPair::new(compose_mu1(&alg, &c), compose_mu2(&alg, &c.scale(&two))).unwrap();
            assert_eq!(
                pair.flatten(),
                expect.flatten(),
                "{name}: δ(c) ≠ (c∘μ₁, 2c∘μ₂)"
            );
        }
    }
    // Membership equivalence for all n² elementary endomorphisms on the
    // two printed tables.
    for (name, alg) in [
        ("example_2_9", example_2_9::<Rat>()),
        ("example_2_10", example_2_10::<Rat>()),
    ] {
        let sp = all_spaces(&alg);
        let trivial = b2b3_trivial(&alg);
        let n = alg.dim();
        for r in 0..n {
            for c in 0..n {
                let mut e = Matrix::<Rat>::zeros(n, n);
                e[(r, c)] = rat(1);
                let rep =
                    lyat_core::deformation::audit_lemma_5_4_1(&alg, &sp.qder, &trivial, &e, false)
                        .unwrap();
                assert!(rep.passed(), "{name}: elementary ({r},{c})");
            }
        }
    }
    println!(
        "ACCEPTANCE 5 (cohomology consistency): PASS in {:?}",
        t0.elapsed()
    );
}

#[test]
fn criterion_6_prop_5_6_audit() {
    let t0 = Instant::now();
    for (name, alg) in catalog() {
        let sp = all_spaces(&alg);
        let ds = lyat_core::deformation::deform_spaces(&alg, &sp.centroid, false).unwrap();
        let out = lyat_core::deformation::audit_prop_5_6(&alg, &sp, &ds);
        let dims: Vec<String> = out.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "  {name}: hypothesis={}, {}",
            out.hypothesis,
            dims.join(", ")
        );
        if out.hypothesis {
            assert!(
                out.conclusion,
                "{name}: hypothesis holds but the subspace equality fails"
            );
        }
        assert!(out.report.passed(), "{name}: {:?}", out.report);
    }
    println!(
        "ACCEPTANCE 6 (coboundary intersection audit): PASS in {:?}",
        t0.elapsed()
    );
}

#[test]
fn criterion_7_trivial_case_suite() {
    let t0 = Instant::now();
    for n in 2..=5usize {
        let alg = LYAlgebra::<Rat>::abelian(rat(1), n);
        let sp = all_spaces(&alg);
        for (space, label) in [
            (&sp.der, "Der"),
            (&sp.zder, "ZDer"),
            (&sp.qder, "QDer"),
            (&sp.gder, "GDer"),
            (&sp.centroid, "C"),
            (&sp.qcentroid, "QC"),
        ] {
            assert_eq!(space.dim(), n * n, "abelian{n}: {label} ≠ End(T)");
        }
        assert_eq!(sp.s_space.as_ref().unwrap().dim(), n * n);
        assert!(alg.center().is_full(), "abelian{n}: Z(T) ≠ T");
        let ds = lyat_core::deformation::deform_spaces(&alg, &sp.centroid, false).unwrap();
        assert_eq!(ds.b_regular.dim(), 0);
        assert_eq!(ds.b_regular_pairwise.dim(), 0);
        assert_eq!(ds.b_trivial.dim(), 0);
        assert_eq!(ds.centroid_pairs.dim(), 0);
        assert_eq!(centroid_pairs(&alg, &sp.centroid).dim(), 0);
    }
    println!(
        "ACCEPTANCE 7 (abelian trivial-case suite): PASS in {:?}",
        t0.elapsed()
    );
}

#[test]
fn criterion_8_solver_soundness_regression() {
    let t0 = Instant::now();
    let mut algebras = catalog();
    let mut rng = seeded_rng(777);
    for i in 0..10 {
        let (family, alg) = random_ly_algebra(&mut rng, &rat(1));
        algebras.push((format!("random{i}_{family}"), alg));
    }
    for (name, alg) in &algebras {
        let sp = all_spaces(alg);
        let mut spaces = vec![
            &sp.der,
            &sp.zder,
            &sp.qder,
            &sp.gder,
            &sp.centroid,
            &sp.qcentroid,
        ];
        if let Some(s) = &sp.s_space {
            spaces.push(s);
        }
        for space in spaces {
            space.verify(alg).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
    println!(
        "ACCEPTANCE 8 (independent re-verification of every operator space): PASS in {:?}",
        t0.elapsed()
    );
}

#[test]
fn criterion_status_overview() {
    // The audit trail of the one knowingly red criterion, in one place:
    // the printed golden spans for the six-dimensional table do not satisfy
    // their own defining equations on the zero-completed products, so the
    // solver cannot reproduce them. These direct evaluations justify that
    // the failure is forced, not a solver defect.
    let a = example_2_10::<Rat>();
    let f1 = named_map(&[(2, 0, 1), (5, 1, -1)], 6);
    let e = |i: usize| a.basis_vector(i);
    // Centroid equation at (x1, x0, x0).
    let lhs = a.triple(&f1.apply(&e(1)), &e(0), &e(0));
    let rhs = f1.apply(&a.triple_basis(1, 0, 0));
    assert_ne!(lhs, rhs, "f1 would need {{-x5, x0, x0}} = -x5");
    // The identity map is a centroid element on any table.
    let sp = all_spaces(&a);
    assert!(sp.centroid.contains(&Matrix::identity(6)));
    println!("criterion 1 failure is forced by direct evaluation; see the decision log");
}
