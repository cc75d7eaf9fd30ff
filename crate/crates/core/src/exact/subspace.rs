//! Linear subspaces in canonical form.
//!
//! A `Subspace` stores the unique reduced-row-echelon basis of its row
//! space, so two subspaces are equal exactly when their basis matrices
//! are identical. All the set-theoretic questions of the crate (ideal
//! membership, isotropy algebras, intersections like g2 with so(6))
//! funnel through this type.

use alloc::vec;
use alloc::vec::Vec;

use super::mat::{kernel_rows, rref, Mat};
use super::scalar::Scalar;
use super::ExactError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the rows of `m` (rows need not be independent).
    pub fn from_rows(m: &Mat) -> Self {
        let (r, pivots) = rref(m);
        let rank = pivots.len();
        let basis = Mat::from_fn(rank, m.cols(), |i, j| r.get(i, j).clone());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_rows(&Mat::from_rows(vectors.to_vec()))
    }

    /// Kernel of `m`, as a subspace of the column space.
    pub fn kernel_of(m: &Mat) -> Self {
        Subspace::from_rows(&kernel_rows(m))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Coordinates of `v` in the canonical basis, or None if `v` is
    /// outside the subspace. With an RREF basis the candidate
    /// coordinates are just the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.get(i, j);
                if !b.is_zero() {
                    residual[j] -= &(c * b);
                }
            }
        }
        if residual.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains(v))
    }

    /// Rows spanning {y : y . v = 0 for all v in self}.
    pub fn annihilator(&self) -> Mat {
        kernel_rows(&self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        Ok(Subspace::from_rows(&self.basis.stack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked dual constraints.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let a1 = self.annihilator();
        let a2 = other.annihilator();
        Ok(Subspace::kernel_of(&a1.stack(&a2)))
    }

    /// {v : B(b_i, v) = 0 for every basis row b_i}, for a bilinear form
    /// given by its Gram matrix.
    pub fn orthocomplement(&self, form: &Mat) -> Subspace {
        assert_eq!(form.rows(), self.ambient, "form must act on the ambient space");
        assert_eq!(form.cols(), self.ambient, "form must act on the ambient space");
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        Subspace::kernel_of(&(&self.basis * form))
    }

    /// Embeds coordinate vectors back into the ambient space:
    /// `coords` (in the canonical basis) to an ambient vector.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut out = vec![Scalar::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.get(i, j);
                if !b.is_zero() {
                    out[j] += &(c * b);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(&Mat::from_ints(rows))
    }

    #[test]
    fn canonical_equality() {
        let s1 = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let s2 = span(&[&[1, 1, 0], &[2, 1, 0]]);
        assert_eq!(s1, s2);
    }

    #[test]
    fn intersect_coordinate_planes() {
        let s1 = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let s2 = span(&[&[0, 1, 0], &[0, 0, 1]]);
        let i = s1.intersect(&s2).unwrap();
        assert_eq!(i, span(&[&[0, 1, 0]]));
    }

    #[test]
    fn sum_of_complements_is_full() {
        let s1 = span(&[&[1, 0, 0]]);
        let s2 = span(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(s1.sum(&s2).unwrap(), Subspace::full(3));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let s1 = span(&[&[1, 0]]);
        let s2 = span(&[&[1, 0, 0]]);
        assert!(s1.sum(&s2).is_err());
        assert!(s1.intersect(&s2).is_err());
    }

    #[test]
    fn membership_and_coordinates() {
        let s = span(&[&[1, 0, 2], &[0, 1, 3]]);
        let v = vec![Scalar::from_int(2), Scalar::from_int(-1), Scalar::from_int(1)];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(c, vec![Scalar::from_int(2), Scalar::from_int(-1)]);
        assert_eq!(s.lift(&c), v);
        assert!(!s.contains(&[Scalar::zero(), Scalar::zero(), Scalar::one()]));
    }
}
