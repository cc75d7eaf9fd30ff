//! Equivariant maps between sl(2)^k-modules.

use alloc::vec::Vec;

use crate::exact::intertwine::intertwiner_basis;
use crate::exact::Mat;

use super::{Sl2Error, Sl2kModule};

/// Basis of sl(2)^k-equivariant maps from `a` to `b`, computed as one
/// intertwining kernel over all 3k generator pairs.
pub fn equivariant_maps(a: &Sl2kModule, b: &Sl2kModule) -> Result<Vec<Mat>, Sl2Error> {
    if a.k() != b.k() {
        return Err(Sl2Error::FactorMismatch { left: a.k(), right: b.k() });
    }
    let pairs: Vec<(&Mat, &Mat)> = a
        .generator_actions()
        .into_iter()
        .zip(b.generator_actions())
        .collect();
    Ok(intertwiner_basis(b.dim(), a.dim(), &pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::module::FactorActions;

    #[test]
    fn schur_on_irreducibles() {
        for n in 0..=4 {
            let u = Sl2kModule::irrep(n);
            assert_eq!(equivariant_maps(&u, &u).unwrap().len(), 1);
        }
        let u3 = Sl2kModule::irrep(3);
        let u1 = Sl2kModule::irrep(1);
        assert_eq!(equivariant_maps(&u3, &u1).unwrap().len(), 0);
    }

    #[test]
    fn tensor_square_of_u1_maps_onto_adjoint() {
        let u1 = Sl2kModule::irrep(1);
        let sq = Sl2kModule::internal_tensor(&u1, &u1).unwrap();
        let u2 = Sl2kModule::irrep(2);
        assert_eq!(equivariant_maps(&sq, &u2).unwrap().len(), 1);
        let u0 = Sl2kModule::irrep(0);
        assert_eq!(equivariant_maps(&sq, &u0).unwrap().len(), 1);
    }

    #[test]
    fn adjoint_of_sl2_is_u2() {
        // The adjoint action matrices of sl(2) in the (E, F, H) basis
        // assemble into a module equivalent to U_2.
        let ad_e = Mat::from_ints(&[&[0, 0, -2], &[0, 0, 0], &[0, 1, 0]]);
        let ad_f = Mat::from_ints(&[&[0, 0, 0], &[0, 0, 2], &[-1, 0, 0]]);
        let ad_h = Mat::from_ints(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        let adjoint =
            Sl2kModule::new(1, 3, alloc::vec![FactorActions { e: ad_e, f: ad_f, h: ad_h }])
                .unwrap();
        let u2 = Sl2kModule::irrep(2);
        assert_eq!(equivariant_maps(&adjoint, &u2).unwrap().len(), 1);
    }

    #[test]
    fn clebsch_gordan_multiplicity_law() {
        // dim Hom(U_a (x) U_b, U_c) is 1 when |a-b| <= c <= a+b with
        // a+b+c even, and 0 otherwise.
        for a in 0..=6usize {
            let ua = Sl2kModule::irrep(a);
            for b in 0..=6usize {
                let prod = Sl2kModule::internal_tensor(&ua, &Sl2kModule::irrep(b)).unwrap();
                for c in 0..=(a + b + 2) {
                    let expected = if (a + b + c) % 2 == 0
                        && c >= a.abs_diff(b)
                        && c <= a + b
                    {
                        1
                    } else {
                        0
                    };
                    let got = equivariant_maps(&prod, &Sl2kModule::irrep(c)).unwrap().len();
                    assert_eq!(got, expected, "Hom(U{a}(x)U{b}, U{c})");
                }
            }
        }
    }
}
