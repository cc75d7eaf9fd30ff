//! End-to-end certification of the holonomy chain and the pointwise
//! quadric content. The heavyweight artifact bundle is built once.

use std::sync::OnceLock;

use exholo_core::cert::Certificate;
use exholo_core::exact::{Scalar, Subspace};
use exholo_core::holo::{
    canonical_restriction_certificate, cor15_chain, cross_product_certificate, g2_certificate,
    holonomy_certificate, reductive_complement_certificate, triality_certificate, G2Artifacts,
};
use exholo_core::quadric::{
    curvature_space, is_isotropic, null_basis_vectors, obstruction_violation, prop21_case_i,
    prop21_case_ii, prop21_case_iii, quadratic_space, standard_isotropic_plane, QuadricError,
};

fn artifacts() -> &'static G2Artifacts {
    static ART: OnceLock<G2Artifacts> = OnceLock::new();
    ART.get_or_init(|| G2Artifacts::build().expect("artifact chain"))
}

fn assert_all_pass(name: &str, cert: &Certificate) {
    for c in cert.failed() {
        panic!(
            "{name}: check {} failed (expected {}, got {}) {}",
            c.name, c.expected, c.actual, c.details
        );
    }
}

#[test]
fn holonomy_representations_certify() {
    assert_all_pass("holonomy", &holonomy_certificate(artifacts()).unwrap());
}

#[test]
fn g2_stabilizer_certifies() {
    let art = artifacts();
    assert_all_pass("g2", &g2_certificate(art).unwrap());
    assert_eq!(art.g2_space.dim(), 14);
    assert!(art.g2.is_simple().unwrap());
    assert_eq!(art.g2.rank().unwrap(), 2);
}

#[test]
fn reductive_complement_certifies() {
    assert_all_pass("complement", &reductive_complement_certificate(artifacts()).unwrap());
}

#[test]
fn cross_product_certifies() {
    let art = artifacts();
    assert_all_pass("cross", &cross_product_certificate(art).unwrap());
    // x ^ x = 0 on every basis vector, by antisymmetry.
    for i in 0..7 {
        let mut e = vec![Scalar::zero(); 7];
        e[i] = Scalar::one();
        assert!(art.cross.tensor.apply(&e, &e).iter().all(Scalar::is_zero));
    }
    assert!(!art.cross.lambda.is_zero());
}

#[test]
fn triality_certificates() {
    assert_all_pass("triality", &triality_certificate().unwrap());
    assert_all_pass("restriction", &canonical_restriction_certificate().unwrap());
}

#[test]
fn subalgebra_chain_certifies() {
    let art = artifacts();
    let (chain, cert) = cor15_chain(art).unwrap();
    assert_all_pass("chain", &cert);
    assert_eq!(chain.so6_space.dim(), 15);
    assert_eq!(chain.so5_space.dim(), 10);
    assert_eq!(chain.g2_cap_so6.dim(), 8);
    assert_eq!(chain.sl3_cap_so5.dim(), 3);
}

#[test]
fn quadratic_spaces_and_isotropic_planes() {
    let art = artifacts();
    let q7 = quadratic_space(&art.vector_rep).unwrap();
    let q8 = quadratic_space(&art.spin_rep).unwrap();
    // Nonzero-weight basis vectors are null; the highest-weight one first.
    let nulls7 = null_basis_vectors(&q7.form);
    assert!(nulls7.contains(&0));
    assert_eq!(nulls7.len(), 6); // only the middle U_2 vector is non-null
    assert_eq!(null_basis_vectors(&q8.form).len(), 8);

    let p3 = standard_isotropic_plane(&q7.form, 3).unwrap();
    assert_eq!(p3.subspace.dim(), 3);
    assert!(is_isotropic(&q7.form, &p3.subspace));
    let p4 = standard_isotropic_plane(&q8.form, 4).unwrap();
    assert_eq!(p4.subspace.dim(), 4);
    assert!(is_isotropic(&q8.form, &p4.subspace));
    // No isotropic 4-plane exists in a 7-dimensional quadratic space.
    assert!(matches!(
        standard_isotropic_plane(&q7.form, 4),
        Err(QuadricError::Diagnostic(_))
    ));
}

#[test]
fn isotropy_comparisons_certify() {
    let art = artifacts();
    assert_all_pass("case_i", &prop21_case_i(art).unwrap());
    let (data, cert_ii) = prop21_case_ii(art).unwrap();
    assert_all_pass("case_ii", &cert_ii);
    assert_eq!(data.l.dim(), 9);
    assert_eq!(data.w_plane.dim(), 3);
    let (s, cert_iii) = prop21_case_iii(art, &data).unwrap();
    assert_all_pass("case_iii", &cert_iii);
    assert_eq!(s.dim(), 4);
}

#[test]
fn curvature_space_dimensions() {
    let art = artifacts();
    let q7 = quadratic_space(&art.vector_rep).unwrap();
    let k7 = curvature_space(&q7, &art.g2_on_v7.image_subspace()).unwrap();
    assert_eq!(k7.dim(), 77);
    assert_eq!(k7.constraint_rank(), 28);
    let k_full = curvature_space(&q7, &art.vector_rep.image_subspace()).unwrap();
    assert_eq!(k_full.dim(), 196);
    let k_zero = curvature_space(&q7, &Subspace::zero(49)).unwrap();
    assert_eq!(k_zero.dim(), 0);
    let q8 = quadratic_space(&art.spin_rep).unwrap();
    let k8 = curvature_space(&q8, &art.g2_on_v8.image_subspace()).unwrap();
    assert_eq!(k8.dim(), 77);
}

#[test]
fn ricci_flatness_and_negative_control() {
    let art = artifacts();
    let q7 = quadratic_space(&art.vector_rep).unwrap();
    let k7 = curvature_space(&q7, &art.g2_on_v7.image_subspace()).unwrap();
    for idx in 0..k7.dim() {
        assert!(k7.ricci(idx).is_zero(), "basis tensor {idx} is not Ricci-flat");
    }
    // The unrestricted curvature space contains non-Ricci-flat tensors
    // and violates the plane containment, with an explicit witness.
    let k_full = curvature_space(&q7, &art.vector_rep.image_subspace()).unwrap();
    let (data, _) = prop21_case_ii(art).unwrap();
    let plane = data.w_plane.orthocomplement(&art.b7);
    assert!(obstruction_violation(&k_full, &plane).is_some());
}

#[test]
fn diagonal_candidate_reports_a_verdict() {
    use exholo_core::holo::diagonal_candidate_certificate;
    let cert = diagonal_candidate_certificate().unwrap();
    assert_all_pass("diagonal", &cert);
    let closure = cert
        .checks
        .iter()
        .find(|c| c.name == "diagonal.candidate_bracket_closure")
        .unwrap();
    assert!(closure.actual == "\"closed\"" || closure.actual == "\"not closed\"");
}

#[test]
fn export_gram_matrices_are_symmetric() {
    let art = artifacts();
    let q7 = quadratic_space(&art.vector_rep).unwrap();
    let k7 = curvature_space(&q7, &art.g2_on_v7.image_subspace()).unwrap();
    for idx in [0, 38, 76] {
        let g = k7.wedge_gram(idx);
        assert_eq!((g.rows(), g.cols()), (21, 21));
        assert!(g.is_symmetric());
    }
}
