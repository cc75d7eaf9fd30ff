//! Classification integration: the Bianchi solution spaces single out
//! exactly the seven table multi-indices, and the built models carry
//! the advertised structure.

use exholo_core::exact::Scalar;
use exholo_core::lie::CartanLabel;
use exholo_core::symdec::{
    bianchi_solution_space, bianchi_solution_space_for_parts, build, classify, eta_tensor,
    identify, standard_model, MultiIndex, SymdecError,
};

#[test]
fn multi_index_validation() {
    assert!(matches!(MultiIndex::new(vec![]), Err(SymdecError::EmptyParts)));
    assert!(matches!(MultiIndex::new(vec![2, 0]), Err(SymdecError::ZeroPart)));
    assert!(matches!(MultiIndex::new(vec![2, 1]), Err(SymdecError::OddSum)));
    // Canonical ordering is non-increasing, whatever the input order.
    let mi = MultiIndex::new(vec![1, 3]).unwrap();
    assert_eq!(mi.parts(), &[3, 1]);
    assert_eq!(MultiIndex::parse("1.1.2").unwrap().parts(), &[2, 1, 1]);
}

#[test]
fn classification_at_table_bounds() {
    let entries = classify(16, 4, 4).unwrap();
    let labels: Vec<String> = entries.iter().map(|e| e.mi.label()).collect();
    assert_eq!(labels, vec!["2", "1.1", "4", "3.1", "2.2", "2.1.1", "1.1.1.1"]);
    assert!(entries.iter().all(|e| e.solution_dim == 1));
}

#[test]
fn classification_restricted_to_one_factor() {
    let entries = classify(5, 1, 8).unwrap();
    let labels: Vec<String> = entries.iter().map(|e| e.mi.label()).collect();
    assert_eq!(labels, vec!["2", "4"]);
}

#[test]
fn degree_six_candidate_has_no_bracket() {
    let mi = MultiIndex::parse("6").unwrap();
    assert_eq!(bianchi_solution_space(&mi).unwrap().dim(), 0);
    // Any nonzero coefficient therefore violates Jacobi.
    let sd = build(&mi, &[Scalar::one()]).unwrap();
    assert!(!sd.algebra().jacobi_defect().is_empty());
}

#[test]
fn zero_coefficients_give_zero_tensors() {
    let mi = MultiIndex::parse("3.1").unwrap();
    let eta = eta_tensor(&mi, &[Scalar::zero(), Scalar::zero()]).unwrap();
    assert!(eta.is_zero());
    let sd = build(&mi, &[Scalar::zero(), Scalar::zero()]).unwrap();
    assert!(sd.curvature_form().is_zero());
    // With a vanishing p-bracket the Jacobi identity holds trivially.
    assert!(sd.algebra().jacobi_defect().is_empty());
}

#[test]
fn jacobi_holds_exactly_on_the_solution_space() {
    // On-space coefficients give a Lie bracket; off-space ones do not.
    for label in ["1.1", "3.1", "2.1.1"] {
        let mi = MultiIndex::parse(label).unwrap();
        let sol = bianchi_solution_space(&mi).unwrap();
        assert!(sol.dim() >= 1, "{label}");
        let c = sol.basis().row_vec(0);
        let on = build(&mi, &c).unwrap();
        assert!(on.algebra().jacobi_defect().is_empty(), "{label} on-space");

        // Perturb the first coordinate away from the solution line.
        let mut off = c.clone();
        off[0] += &Scalar::one();
        if sol.coordinates(&off).is_none() {
            let bad = build(&mi, &off).unwrap();
            assert!(!bad.algebra().jacobi_defect().is_empty(), "{label} off-space");
        }
    }
}

#[test]
fn curvature_form_of_so4_model() {
    let sd = standard_model(CartanLabel::So4).unwrap();
    let r = sd.curvature_form();
    assert!(!r.is_zero());
    assert!(r.is_antisymmetric_in_arguments());
    // Direct cyclic-sum oracle on every basis triple.
    let p = sd.p_dim();
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                assert!(r.bianchi_sum(x, y, z).iter().all(Scalar::is_zero));
            }
        }
    }
}

#[test]
fn curvature_is_h_equivariant_for_small_models() {
    // Generator-wise derivation check of R as a (1,3)-tensor.
    for label in [CartanLabel::So4, CartanLabel::So5, CartanLabel::Sl3, CartanLabel::G2] {
        let sd = standard_model(label).unwrap();
        let r = sd.curvature_form();
        let p = sd.p_dim();
        for a in 0..sd.h_dim() {
            let act = sd.alpha(a);
            for x in 0..p {
                for y in 0..p {
                    for z in 0..p {
                        // (X.R)(x,y,z) = X R(x,y)z - R(Xx,y)z - R(x,Xy)z - R(x,y,Xz)
                        let rxyz: Vec<Scalar> =
                            (0..p).map(|w| r.entry(w, x, y, z).clone()).collect();
                        let mut defect = act.apply(&rxyz);
                        for w in 0..p {
                            for (src, slot) in [(x, 0), (y, 1), (z, 2)] {
                                let c = act.get(w, src);
                                if c.is_zero() {
                                    continue;
                                }
                                for out in 0..p {
                                    let term = match slot {
                                        0 => r.entry(out, w, y, z),
                                        1 => r.entry(out, x, w, z),
                                        _ => r.entry(out, x, y, w),
                                    };
                                    if !term.is_zero() {
                                        defect[out] -= &(c * term);
                                    }
                                }
                            }
                        }
                        assert!(
                            defect.iter().all(Scalar::is_zero),
                            "{} not equivariant at ({a},{x},{y},{z})",
                            label.as_str()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn solution_dimension_is_permutation_invariant() {
    for (canonical, permuted) in [
        (&[2usize, 1, 1][..], &[1usize, 2, 1][..]),
        (&[3, 1][..], &[1, 3][..]),
        (&[1, 1, 1, 1][..], &[1, 1, 1, 1][..]),
    ] {
        let a = bianchi_solution_space_for_parts(canonical).unwrap().dim();
        let b = bianchi_solution_space_for_parts(permuted).unwrap().dim();
        assert_eq!(a, b, "{canonical:?} vs {permuted:?}");
    }
}

#[test]
fn scaling_the_coefficients_gives_the_same_algebra_type() {
    let mi = MultiIndex::parse("3.1").unwrap();
    let sol = bianchi_solution_space(&mi).unwrap();
    let c = sol.basis().row_vec(0);
    let scaled: Vec<Scalar> = c.iter().map(|v| v * &Scalar::from_int(2)).collect();
    let a = build(&mi, &c).unwrap();
    let b = build(&mi, &scaled).unwrap();
    assert!(b.algebra().jacobi_defect().is_empty());
    assert_eq!(
        identify(a.algebra()).unwrap(),
        identify(b.algebra()).unwrap()
    );
}

#[test]
fn identify_handles_out_of_table_algebras() {
    use exholo_core::lie::LieAlgebra;
    assert_eq!(identify(&LieAlgebra::sl2()).unwrap(), CartanLabel::Unknown);
    assert_eq!(identify(&LieAlgebra::abelian(4)).unwrap(), CartanLabel::Unknown);
}

#[test]
fn standard_model_dimensions() {
    let g2 = standard_model(CartanLabel::G2).unwrap();
    assert_eq!((g2.h_dim(), g2.p_dim(), g2.algebra().dim()), (6, 8, 14));
    let so7 = standard_model(CartanLabel::So7).unwrap();
    assert_eq!((so7.h_dim(), so7.p_dim(), so7.algebra().dim()), (9, 12, 21));
    let so8 = standard_model(CartanLabel::So8).unwrap();
    assert_eq!((so8.h_dim(), so8.p_dim(), so8.algebra().dim()), (12, 16, 28));
}

#[test]
fn ranks_of_the_small_models() {
    assert_eq!(standard_model(CartanLabel::So5).unwrap().algebra().rank().unwrap(), 2);
    assert_eq!(standard_model(CartanLabel::So7).unwrap().algebra().rank().unwrap(), 3);
}

#[test]
fn so4_model_splits_into_two_ideals() {
    let sd = standard_model(CartanLabel::So4).unwrap();
    let adj = sd.algebra().adjoint_rep().unwrap();
    assert_eq!(adj.dim(), 6);
    assert_eq!(adj.commutant_dimension(), 2);
    assert!(!sd.algebra().is_simple().unwrap());
}
