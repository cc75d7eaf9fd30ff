//! Representations: action matrices satisfying the exact bracket
//! relation, plus commutants, intertwiners, invariant forms, and
//! restriction to subalgebras.

use alloc::vec::Vec;

use crate::exact::intertwine::intertwiner_basis;
use crate::exact::{kernel_rows, rref, Mat, Scalar, Subspace};

use super::algebra::LieAlgebra;
use super::LieError;

/// A representation of `algebra` on a `dim`-dimensional space; one
/// action matrix per basis element. The bracket relation
/// rho([b_i, b_j]) = rho(b_i) rho(b_j) - rho(b_j) rho(b_i) is verified
/// exactly at construction.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: LieAlgebra,
    dim: usize,
    actions: Vec<Mat>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, actions: Vec<Mat>) -> Result<Self, LieError> {
        assert_eq!(actions.len(), algebra.dim(), "one action per basis element");
        let dim = if actions.is_empty() { 0 } else { actions[0].rows() };
        for a in &actions {
            assert!(a.rows() == dim && a.cols() == dim, "square actions of equal size");
        }
        let rep = Representation { algebra, dim, actions };
        rep.verify_bracket_relation()?;
        Ok(rep)
    }

    fn verify_bracket_relation(&self) -> Result<(), LieError> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self.act(&self.algebra.bracket_basis(i, j));
                let rhs = self.actions[i].commutator(&self.actions[j]);
                if lhs != rhs {
                    return Err(LieError::BracketRelation { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Mat {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.actions
    }

    /// Action of an arbitrary algebra element (by coordinates).
    pub fn act(&self, x: &[Scalar]) -> Mat {
        assert_eq!(x.len(), self.algebra.dim());
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.actions[i].scale(xi);
            }
        }
        m
    }

    /// Dimension of {T : T rho(x) = rho(x) T for all x}.
    pub fn commutant_dimension(&self) -> usize {
        let pairs: Vec<(&Mat, &Mat)> = self.actions.iter().map(|a| (a, a)).collect();
        intertwiner_basis(self.dim, self.dim, &pairs).len()
    }

    /// Basis of equivariant maps from `self` to `other` (representations
    /// of the same algebra, matched basis by basis).
    pub fn intertwiners(&self, other: &Representation) -> Vec<Mat> {
        assert_eq!(
            self.algebra.dim(),
            other.algebra.dim(),
            "intertwiners need a common algebra"
        );
        let pairs: Vec<(&Mat, &Mat)> = self
            .actions
            .iter()
            .zip(other.actions.iter())
            .map(|(a, b)| (a, b))
            .collect();
        intertwiner_basis(other.dim, self.dim, &pairs)
    }

    /// Basis of invariant symmetric bilinear forms:
    /// {B symmetric : rho(x)^T B + B rho(x) = 0 for all x}.
    pub fn invariant_symmetric_forms(&self) -> Vec<Mat> {
        self.invariant_forms(true)
    }

    /// Basis of invariant antisymmetric bilinear forms.
    pub fn invariant_antisymmetric_forms(&self) -> Vec<Mat> {
        self.invariant_forms(false)
    }

    fn invariant_forms(&self, symmetric: bool) -> Vec<Mat> {
        let d = self.dim;
        // Parameter basis of (anti)symmetric matrices.
        let mut param: Vec<(usize, usize)> = Vec::new();
        for i in 0..d {
            for j in i..d {
                if !symmetric && i == j {
                    continue;
                }
                param.push((i, j));
            }
        }
        if param.is_empty() {
            return Vec::new();
        }
        let elementary = |&(i, j): &(usize, usize)| -> Mat {
            let mut b = Mat::zero(d, d);
            b.set(i, j, Scalar::one());
            if i != j {
                b.set(j, i, if symmetric { Scalar::one() } else { Scalar::from_int(-1) });
            }
            b
        };
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(param.len());
        for p in &param {
            let b = elementary(p);
            let mut col = Vec::with_capacity(self.actions.len() * d * d);
            for a in &self.actions {
                let defect = &(&a.transpose() * &b) + &(&b * a);
                col.extend(defect.vectorize());
            }
            columns.push(col);
        }
        let constraint = Mat::from_fn(columns[0].len(), param.len(), |r, c| columns[c][r].clone());
        let coeffs = kernel_rows(&constraint);
        let mut out = Vec::with_capacity(coeffs.rows());
        for s in 0..coeffs.rows() {
            let mut b = Mat::zero(d, d);
            for (t, p) in param.iter().enumerate() {
                let c = coeffs.get(s, t);
                if !c.is_zero() {
                    b = &b + &elementary(p).scale(c);
                }
            }
            out.push(b);
        }
        out
    }

    /// Common kernel of all actions: {v : rho(x) v = 0 for all x}.
    pub fn invariant_vectors(&self) -> Subspace {
        if self.actions.is_empty() {
            return Subspace::full(self.dim);
        }
        let mut stacked = self.actions[0].clone();
        for a in &self.actions[1..] {
            stacked = stacked.stack(a);
        }
        Subspace::kernel_of(&stacked)
    }

    /// Restriction to a bracket-closed subspace of the algebra: a
    /// representation of the extracted subalgebra.
    pub fn restrict_to(&self, s: &Subspace) -> Result<Representation, LieError> {
        assert_eq!(s.ambient_dim(), self.algebra.dim(), "subspace of the algebra");
        let sub = self.algebra.subalgebra_from_subspace(s)?;
        let actions: Vec<Mat> = s.basis_vectors().iter().map(|x| self.act(x)).collect();
        Representation::new(sub, actions)
    }

    /// Span of the vectorized action matrices: the image of the algebra
    /// inside gl(dim), as a canonical subspace of dimension-squared space.
    pub fn image_subspace(&self) -> Subspace {
        let rows: Vec<Vec<Scalar>> = self.actions.iter().map(|a| a.vectorize()).collect();
        Subspace::from_vectors(self.dim * self.dim, &rows)
    }

    /// The image of a subspace of the algebra inside gl(dim).
    pub fn image_of_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = s
            .basis_vectors()
            .iter()
            .map(|x| self.act(x).vectorize())
            .collect();
        Subspace::from_vectors(self.dim * self.dim, &rows)
    }
}

/// Normalizes a one-dimensional space of forms: first nonzero entry in
/// row-major order becomes +1.
pub fn normalize_form(form: &Mat) -> Mat {
    let lead = form.entries().iter().find(|s| !s.is_zero());
    match lead {
        None => form.clone(),
        Some(l) => form.scale(&l.recip()),
    }
}

/// Convenience: rank of a symmetric form (nondegenerate iff full rank).
pub fn form_rank(form: &Mat) -> usize {
    rref(form).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u1_rep() -> Representation {
        // sl(2) on U_1 in the (E, F, H) basis.
        let e = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let f = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        let h = Mat::from_ints(&[&[1, 0], &[0, -1]]);
        Representation::new(LieAlgebra::sl2(), vec![e, f, h]).unwrap()
    }

    #[test]
    fn defining_rep_of_sl2_is_irreducible() {
        let r = u1_rep();
        assert_eq!(r.commutant_dimension(), 1);
    }

    #[test]
    fn u1_has_symplectic_but_no_symmetric_invariant() {
        let r = u1_rep();
        assert_eq!(r.invariant_symmetric_forms().len(), 0);
        let anti = r.invariant_antisymmetric_forms();
        assert_eq!(anti.len(), 1);
    }

    #[test]
    fn bad_actions_are_rejected() {
        let e = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let f = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        let h = Mat::from_ints(&[&[2, 0], &[0, -2]]);
        assert!(Representation::new(LieAlgebra::sl2(), vec![e, f, h]).is_err());
    }

    #[test]
    fn adjoint_rep_of_sl2() {
        let adj = LieAlgebra::sl2().adjoint_rep().unwrap();
        assert_eq!(adj.dim(), 3);
        assert_eq!(adj.commutant_dimension(), 1);
        // The Killing form spans the invariant symmetric forms.
        assert_eq!(adj.invariant_symmetric_forms().len(), 1);
    }
}
