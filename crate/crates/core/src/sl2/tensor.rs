//! Bilinear tensors with a definite symmetry type.

use alloc::vec::Vec;

use crate::exact::{Mat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
}

/// A bilinear map source x source -> target, stored entrywise:
/// `entry(t, i, j)` is the coefficient of target basis vector `t` in the
/// image of the source pair (i, j). Always symmetric or antisymmetric
/// in (i, j); the flag records which.
#[derive(Clone, Debug)]
pub struct BilinearTensor {
    source_dim: usize,
    target_dim: usize,
    entries: Vec<Scalar>,
    symmetry: Symmetry,
}

impl BilinearTensor {
    /// Builds from a matrix of shape target_dim x source_dim^2 whose
    /// column `i*source_dim + j` is the image of (i, j). Returns None
    /// if the map has no definite symmetry type.
    pub fn from_map(source_dim: usize, target_dim: usize, map: &Mat) -> Option<Self> {
        assert_eq!(map.rows(), target_dim);
        assert_eq!(map.cols(), source_dim * source_dim);
        let entries: Vec<Scalar> = (0..target_dim * source_dim * source_dim)
            .map(|idx| {
                let t = idx / (source_dim * source_dim);
                let rest = idx % (source_dim * source_dim);
                map.get(t, rest).clone()
            })
            .collect();
        let tensor = |sym| BilinearTensor {
            source_dim,
            target_dim,
            entries,
            symmetry: sym,
        };
        let symmetric = (0..target_dim).all(|t| {
            (0..source_dim).all(|i| {
                (0..source_dim).all(|j| {
                    map.get(t, i * source_dim + j) == map.get(t, j * source_dim + i)
                })
            })
        });
        if symmetric {
            return Some(tensor(Symmetry::Symmetric));
        }
        let antisymmetric = (0..target_dim).all(|t| {
            (0..source_dim).all(|i| {
                (0..source_dim).all(|j| {
                    (map.get(t, i * source_dim + j) + map.get(t, j * source_dim + i)).is_zero()
                })
            })
        });
        if antisymmetric {
            return Some(tensor(Symmetry::Antisymmetric));
        }
        None
    }

    pub fn zero(source_dim: usize, target_dim: usize, symmetry: Symmetry) -> Self {
        BilinearTensor {
            source_dim,
            target_dim,
            entries: alloc::vec![Scalar::zero(); target_dim * source_dim * source_dim],
            symmetry,
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn entry(&self, t: usize, i: usize, j: usize) -> &Scalar {
        &self.entries[(t * self.source_dim + i) * self.source_dim + j]
    }

    pub fn set_entry(&mut self, t: usize, i: usize, j: usize, v: Scalar) {
        self.entries[(t * self.source_dim + i) * self.source_dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Image of a pair of source basis vectors, as target coordinates.
    pub fn apply_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.target_dim).map(|t| self.entry(t, i, j).clone()).collect()
    }

    /// Image of a pair of source vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.source_dim);
        assert_eq!(y.len(), self.source_dim);
        let mut out = alloc::vec![Scalar::zero(); self.target_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (t, o) in out.iter_mut().enumerate() {
                    let e = self.entry(t, i, j);
                    if !e.is_zero() {
                        *o += &(e * &xy);
                    }
                }
            }
        }
        out
    }

    /// The tensor as a target_dim x source_dim^2 matrix.
    pub fn as_map(&self) -> Mat {
        Mat::from_fn(self.target_dim, self.source_dim * self.source_dim, |t, c| {
            self.entries[t * self.source_dim * self.source_dim + c].clone()
        })
    }

    /// Entrywise linear combination `self + c * other`.
    pub fn add_scaled(&self, other: &BilinearTensor, c: &Scalar) -> Option<BilinearTensor> {
        if self.source_dim != other.source_dim
            || self.target_dim != other.target_dim
            || self.symmetry != other.symmetry
        {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a + &(b * c))
            .collect();
        Some(BilinearTensor {
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            entries,
            symmetry: self.symmetry,
        })
    }
}
