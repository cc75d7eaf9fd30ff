//! The invariant projections from U_n (x) U_n onto U_2 and U_0.

use alloc::vec::Vec;

use crate::exact::Mat;

use super::equivariant::equivariant_maps;
use super::tensor::BilinearTensor;
use super::{Sl2Error, Sl2kModule};

/// Which projection to build: the invariant pairing onto U_0 or the
/// adjoint-valued projection onto U_2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClebschTarget {
    U0,
    U2,
}

impl ClebschTarget {
    pub fn degree(self) -> usize {
        match self {
            ClebschTarget::U0 => 0,
            ClebschTarget::U2 => 2,
        }
    }
}

/// The sl(2)-invariant projection U_n (x) U_n -> U_{target}, n >= 1.
///
/// Normalization: the coefficient of the highest-weight target vector on
/// the lexicographically first contributing source pair — (v_0, v_n) for
/// U_0 and (v_0, v_{n-1}) for U_2 — is +1.
pub fn clebsch_projection(n: usize, target: ClebschTarget) -> Result<BilinearTensor, Sl2Error> {
    assert!(n >= 1, "projections require n >= 1");
    let un = Sl2kModule::irrep(n);
    let square = Sl2kModule::internal_tensor(&un, &un)?;
    let target_module = Sl2kModule::irrep(target.degree());
    let maps: Vec<Mat> = equivariant_maps(&square, &target_module)?;
    if maps.len() != 1 {
        return Err(Sl2Error::MalformedModule(alloc::format!(
            "projection space U_{n}(x)U_{n} -> U_{} has dimension {}, expected 1",
            target.degree(),
            maps.len()
        )));
    }
    let map = &maps[0];
    let dim = n + 1;
    let anchor_col = match target {
        ClebschTarget::U0 => n,     // pair (v_0, v_n)
        ClebschTarget::U2 => n - 1, // pair (v_0, v_{n-1})
    };
    let anchor = map.get(0, anchor_col);
    if anchor.is_zero() {
        return Err(Sl2Error::MalformedModule(
            "projection vanishes on its normalization pair".into(),
        ));
    }
    let normalized = map.scale(&anchor.recip());
    BilinearTensor::from_map(dim, target.degree() + 1, &normalized).ok_or_else(|| {
        Sl2Error::MalformedModule("invariant projection has no definite symmetry type".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;
    use crate::sl2::tensor::Symmetry;

    /// Independent closed form of the invariant pairing on U_n:
    /// eps_n(v_i, v_j) = (-1)^i [i + j = n].
    fn epsilon_oracle(n: usize) -> BilinearTensor {
        let dim = n + 1;
        let mut t = BilinearTensor::zero(
            dim,
            1,
            if n % 2 == 0 { Symmetry::Symmetric } else { Symmetry::Antisymmetric },
        );
        for i in 0..dim {
            let j = n - i;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            t.set_entry(0, i, j, Scalar::from_int(sign));
        }
        t
    }

    #[test]
    fn epsilon_matches_closed_form() {
        for n in 1..=6 {
            let eps = clebsch_projection(n, ClebschTarget::U0).unwrap();
            let oracle = epsilon_oracle(n);
            assert_eq!(eps.symmetry(), oracle.symmetry(), "n = {n}");
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(eps.entry(0, i, j), oracle.entry(0, i, j), "n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn epsilon_1_is_standard_symplectic_form() {
        let eps = clebsch_projection(1, ClebschTarget::U0).unwrap();
        assert_eq!(eps.symmetry(), Symmetry::Antisymmetric);
        assert_eq!(*eps.entry(0, 0, 1), Scalar::one());
        assert_eq!(*eps.entry(0, 1, 0), Scalar::from_int(-1));
        assert!(eps.entry(0, 0, 0).is_zero() && eps.entry(0, 1, 1).is_zero());
    }

    #[test]
    fn pi_symmetry_parities() {
        // pi_n symmetric for odd n, antisymmetric for even n;
        // eps_n the other way round.
        for n in 1..=6 {
            let pi = clebsch_projection(n, ClebschTarget::U2).unwrap();
            let eps = clebsch_projection(n, ClebschTarget::U0).unwrap();
            if n % 2 == 1 {
                assert_eq!(pi.symmetry(), Symmetry::Symmetric, "pi_{n}");
                assert_eq!(eps.symmetry(), Symmetry::Antisymmetric, "eps_{n}");
            } else {
                assert_eq!(pi.symmetry(), Symmetry::Antisymmetric, "pi_{n}");
                assert_eq!(eps.symmetry(), Symmetry::Symmetric, "eps_{n}");
            }
        }
    }

    #[test]
    fn equivariance_defect_is_zero() {
        // Direct matrix identity: rho_target(g) M = M rho_square(g).
        for n in 1..=8 {
            let un = Sl2kModule::irrep(n);
            let square = Sl2kModule::internal_tensor(&un, &un).unwrap();
            for target in [ClebschTarget::U0, ClebschTarget::U2] {
                let t = clebsch_projection(n, target).unwrap();
                let m = t.as_map();
                let tm = Sl2kModule::irrep(target.degree());
                for (gs, gt) in square
                    .generator_actions()
                    .into_iter()
                    .zip(tm.generator_actions())
                {
                    assert_eq!(&(gt * &m), &(&m * gs), "defect for n={n}, {target:?}");
                }
            }
        }
    }
}
