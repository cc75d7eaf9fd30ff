//! The concrete module type and its constructors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Mat, Scalar, Subspace};

use super::Sl2Error;

/// Action matrices of one sl(2) factor.
#[derive(Clone, Debug)]
pub struct FactorActions {
    pub e: Mat,
    pub f: Mat,
    pub h: Mat,
}

impl FactorActions {
    fn zero(dim: usize) -> Self {
        FactorActions {
            e: Mat::zero(dim, dim),
            f: Mat::zero(dim, dim),
            h: Mat::zero(dim, dim),
        }
    }
}

/// A representation of sl(2)^k given by 3k action matrices.
///
/// Invariants, checked at construction: within each factor
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H, and all commutators between
/// matrices of distinct factors vanish.
#[derive(Clone, Debug)]
pub struct Sl2kModule {
    k: usize,
    dim: usize,
    factors: Vec<FactorActions>,
}

impl Sl2kModule {
    pub fn new(k: usize, dim: usize, factors: Vec<FactorActions>) -> Result<Self, Sl2Error> {
        assert_eq!(factors.len(), k, "one action triple per factor");
        let m = Sl2kModule { k, dim, factors };
        m.verify()?;
        Ok(m)
    }

    /// The irreducible sl(2)-module of degree `n` in the integral weight
    /// basis: H v_i = (n-2i) v_i, F v_i = v_{i+1}, E v_i = i(n+1-i) v_{i-1}.
    pub fn irrep(n: usize) -> Self {
        let dim = n + 1;
        let mut e = Mat::zero(dim, dim);
        let mut f = Mat::zero(dim, dim);
        let mut h = Mat::zero(dim, dim);
        for i in 0..dim {
            h.set(i, i, Scalar::from_int(n as i64 - 2 * i as i64));
            if i + 1 < dim {
                f.set(i + 1, i, Scalar::one());
            }
            if i > 0 {
                e.set(i - 1, i, Scalar::from_int((i as i64) * (n as i64 + 1 - i as i64)));
            }
        }
        Sl2kModule {
            k: 1,
            dim,
            factors: vec![FactorActions { e, f, h }],
        }
    }

    /// The one-dimensional trivial module over `k` factors.
    pub fn trivial(k: usize) -> Self {
        Sl2kModule {
            k,
            dim: 1,
            factors: (0..k).map(|_| FactorActions::zero(1)).collect(),
        }
    }

    /// External tensor product of U_{n_1}, ..., U_{n_k}.
    pub fn external_product(degrees: &[usize]) -> Self {
        let mut m = Sl2kModule::irrep(degrees[0]);
        for &n in &degrees[1..] {
            m = Sl2kModule::external_tensor(&m, &Sl2kModule::irrep(n));
        }
        m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factor(&self, j: usize) -> &FactorActions {
        &self.factors[j]
    }

    /// All 3k action matrices, ordered (E_0, F_0, H_0, E_1, ...).
    pub fn generator_actions(&self) -> Vec<&Mat> {
        let mut out = Vec::with_capacity(3 * self.k);
        for fa in &self.factors {
            out.push(&fa.e);
            out.push(&fa.f);
            out.push(&fa.h);
        }
        out
    }

    /// Exact verification of the defining identities.
    pub fn verify(&self) -> Result<(), Sl2Error> {
        for (j, fa) in self.factors.iter().enumerate() {
            let two_e = fa.e.scale(&Scalar::from_int(2));
            if fa.h.commutator(&fa.e) != two_e {
                return Err(Sl2Error::BracketIdentity { factor: j, identity: "[H,E]=2E" });
            }
            let minus_two_f = fa.f.scale(&Scalar::from_int(-2));
            if fa.h.commutator(&fa.f) != minus_two_f {
                return Err(Sl2Error::BracketIdentity { factor: j, identity: "[H,F]=-2F" });
            }
            if fa.e.commutator(&fa.f) != fa.h {
                return Err(Sl2Error::BracketIdentity { factor: j, identity: "[E,F]=H" });
            }
        }
        for j in 0..self.k {
            for jj in (j + 1)..self.k {
                for a in [&self.factors[j].e, &self.factors[j].f, &self.factors[j].h] {
                    for b in [&self.factors[jj].e, &self.factors[jj].f, &self.factors[jj].h] {
                        if !a.commutator(b).is_zero() {
                            return Err(Sl2Error::BracketIdentity {
                                factor: jj,
                                identity: "cross-factor commutativity",
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// External tensor product: factor lists concatenate, dimensions
    /// multiply, each action is a Kronecker product with an identity.
    pub fn external_tensor(a: &Sl2kModule, b: &Sl2kModule) -> Sl2kModule {
        let ia = Mat::identity(a.dim);
        let ib = Mat::identity(b.dim);
        let mut factors = Vec::with_capacity(a.k + b.k);
        for fa in &a.factors {
            factors.push(FactorActions {
                e: fa.e.kron(&ib),
                f: fa.f.kron(&ib),
                h: fa.h.kron(&ib),
            });
        }
        for fb in &b.factors {
            factors.push(FactorActions {
                e: ia.kron(&fb.e),
                f: ia.kron(&fb.f),
                h: ia.kron(&fb.h),
            });
        }
        Sl2kModule {
            k: a.k + b.k,
            dim: a.dim * b.dim,
            factors,
        }
    }

    /// Internal tensor product of two modules over the same factors:
    /// each generator acts by the Leibniz rule X (x) I + I (x) X.
    pub fn internal_tensor(a: &Sl2kModule, b: &Sl2kModule) -> Result<Sl2kModule, Sl2Error> {
        if a.k != b.k {
            return Err(Sl2Error::FactorMismatch { left: a.k, right: b.k });
        }
        let ia = Mat::identity(a.dim);
        let ib = Mat::identity(b.dim);
        let leibniz = |x: &Mat, y: &Mat| &x.kron(&ib) + &ia.kron(y);
        let factors = a
            .factors
            .iter()
            .zip(b.factors.iter())
            .map(|(fa, fb)| FactorActions {
                e: leibniz(&fa.e, &fb.e),
                f: leibniz(&fa.f, &fb.f),
                h: leibniz(&fa.h, &fb.h),
            })
            .collect();
        Ok(Sl2kModule {
            k: a.k,
            dim: a.dim * b.dim,
            factors,
        })
    }

    /// Direct sum of two modules over the same factors.
    pub fn direct_sum(a: &Sl2kModule, b: &Sl2kModule) -> Result<Sl2kModule, Sl2Error> {
        if a.k != b.k {
            return Err(Sl2Error::FactorMismatch { left: a.k, right: b.k });
        }
        let dim = a.dim + b.dim;
        let block = |x: &Mat, y: &Mat| {
            Mat::from_fn(dim, dim, |i, j| {
                if i < a.dim && j < a.dim {
                    x.get(i, j).clone()
                } else if i >= a.dim && j >= a.dim {
                    y.get(i - a.dim, j - a.dim).clone()
                } else {
                    Scalar::zero()
                }
            })
        };
        let factors = a
            .factors
            .iter()
            .zip(b.factors.iter())
            .map(|(fa, fb)| FactorActions {
                e: block(&fa.e, &fb.e),
                f: block(&fa.f, &fb.f),
                h: block(&fa.h, &fb.h),
            })
            .collect();
        Ok(Sl2kModule { k: a.k, dim, factors })
    }

    /// Pulls the module back along a diagonal morphism of sl(2)-products:
    /// `assignment[slot]` names the target generator, which then acts as
    /// the sum of the actions of all slots assigned to it.
    pub fn branch(&self, assignment: &[usize], k_target: usize) -> Result<Sl2kModule, Sl2Error> {
        if assignment.len() != self.k || assignment.iter().any(|&t| t >= k_target) {
            return Err(Sl2Error::BadAssignment);
        }
        let mut factors: Vec<FactorActions> =
            (0..k_target).map(|_| FactorActions::zero(self.dim)).collect();
        for (slot, &target) in assignment.iter().enumerate() {
            factors[target].e = &factors[target].e + &self.factors[slot].e;
            factors[target].f = &factors[target].f + &self.factors[slot].f;
            factors[target].h = &factors[target].h + &self.factors[slot].h;
        }
        Sl2kModule::new(k_target, self.dim, factors)
    }

    /// Restriction to an invariant subspace, in its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Sl2kModule, Sl2Error> {
        let factors = self
            .factors
            .iter()
            .map(|fa| {
                Ok(FactorActions {
                    e: restrict_action(&fa.e, s)?,
                    f: restrict_action(&fa.f, s)?,
                    h: restrict_action(&fa.h, s)?,
                })
            })
            .collect::<Result<Vec<_>, Sl2Error>>()?;
        Sl2kModule::new(self.k, s.dim(), factors)
    }

    /// The antisymmetric part of the internal square, spanned by
    /// e_i (x) e_j - e_j (x) e_i for i < j.
    pub fn antisymmetric_square(&self) -> Result<Sl2kModule, Sl2Error> {
        let square = Sl2kModule::internal_tensor(self, self)?;
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut v = vec![Scalar::zero(); n * n];
                v[i * n + j] = Scalar::one();
                v[j * n + i] = Scalar::from_int(-1);
                rows.push(v);
            }
        }
        let s = Subspace::from_vectors(n * n, &rows);
        square.restrict(&s)
    }
}

/// Matrix of `action` restricted to `s`, expressed in the canonical
/// basis of `s`. Fails if `s` is not invariant.
pub fn restrict_action(action: &Mat, s: &Subspace) -> Result<Mat, Sl2Error> {
    let d = s.dim();
    let mut out = Mat::zero(d, d);
    for l in 0..d {
        let image = action.apply(s.basis().row(l));
        let coords = s.coordinates(&image).ok_or(Sl2Error::NotInvariant)?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, l, c);
        }
    }
    Ok(out)
}

/// Human-readable name of a product of irreducibles, e.g. `U3(x)U1`.
pub fn product_label(weights: &[i64]) -> alloc::string::String {
    let parts: Vec<alloc::string::String> = weights.iter().map(|w| format!("U{w}")).collect();
    parts.join("(x)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irrep_invariants_hold() {
        for n in 0..=8 {
            Sl2kModule::irrep(n).verify().unwrap();
        }
    }

    #[test]
    fn irrep_low_degrees() {
        let u0 = Sl2kModule::irrep(0);
        assert_eq!(u0.dim(), 1);
        assert!(u0.factor(0).e.is_zero());
        assert!(u0.factor(0).f.is_zero());
        assert!(u0.factor(0).h.is_zero());

        let u1 = Sl2kModule::irrep(1);
        assert_eq!(u1.dim(), 2);
        assert_eq!(u1.factor(0).h, Mat::from_ints(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn external_tensor_dimensions() {
        let m = Sl2kModule::external_tensor(&Sl2kModule::irrep(1), &Sl2kModule::irrep(1));
        assert_eq!((m.k(), m.dim()), (2, 4));
        m.verify().unwrap();

        let p31 = Sl2kModule::external_product(&[3, 1]);
        assert_eq!((p31.k(), p31.dim()), (2, 8));

        let p211 = Sl2kModule::external_product(&[2, 1, 1]);
        assert_eq!((p211.k(), p211.dim()), (3, 12));
    }

    #[test]
    fn branch_identity_assignment_is_noop() {
        let m = Sl2kModule::external_product(&[2, 1]);
        let b = m.branch(&[0, 1], 2).unwrap();
        for j in 0..2 {
            assert_eq!(b.factor(j).e, m.factor(j).e);
            assert_eq!(b.factor(j).f, m.factor(j).f);
            assert_eq!(b.factor(j).h, m.factor(j).h);
        }
    }

    #[test]
    fn antisymmetric_square_has_binomial_dimension() {
        let m = Sl2kModule::external_product(&[1, 1]);
        let a = m.antisymmetric_square().unwrap();
        assert_eq!(a.dim(), 6);
        a.verify().unwrap();
    }
}
