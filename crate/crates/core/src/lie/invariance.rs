//! Isotropy subalgebras: elements whose infinitesimal action fixes a
//! vector, a line, a subspace, or a tensor.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Mat, Scalar, Subspace};

use super::rep::Representation;
use super::LieError;

/// A (1,2)-tensor T : V x V -> V, stored entrywise:
/// `entry(k, i, j)` is the coefficient of e_k in T(e_i, e_j).
#[derive(Clone, Debug)]
pub struct Tensor12 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor12 {
    pub fn zero(dim: usize) -> Self {
        Tensor12 {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.entries[(k * self.dim + i) * self.dim + j]
    }

    pub fn set_entry(&mut self, k: usize, i: usize, j: usize, v: Scalar) {
        self.entries[(k * self.dim + i) * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        for k in 0..self.dim {
            for i in 0..self.dim {
                for j in 0..=i {
                    if !(self.entry(k, i, j) + self.entry(k, j, i)).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// T(x, y) for coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for k in 0..self.dim {
                    let t = self.entry(k, i, j);
                    if !t.is_zero() {
                        out[k] += &(t * &xy);
                    }
                }
            }
        }
        out
    }

    /// T(e_i, e_j) as a coordinate vector.
    pub fn apply_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.entry(k, i, j).clone()).collect()
    }

    /// Derivation defect of a matrix A on T:
    /// (A.T)(i,j) = A T(e_i,e_j) - T(A e_i, e_j) - T(e_i, A e_j),
    /// flattened over (i, j, component).
    pub fn derivation_defect(&self, a: &Mat) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let t_ij = self.apply_basis(i, j);
                let first = a.apply(&t_ij);
                // T(A e_i, e_j): A e_i has coordinates = column i of A.
                let a_i = a.col_vec(i);
                let a_j = a.col_vec(j);
                let mut second = vec![Scalar::zero(); d];
                let mut third = vec![Scalar::zero(); d];
                for (w, c) in a_i.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let t = self.apply_basis(w, j);
                    for k in 0..d {
                        if !t[k].is_zero() {
                            second[k] += &(c * &t[k]);
                        }
                    }
                }
                for (w, c) in a_j.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let t = self.apply_basis(i, w);
                    for k in 0..d {
                        if !t[k].is_zero() {
                            third[k] += &(c * &t[k]);
                        }
                    }
                }
                for k in 0..d {
                    out.push(&(&first[k] - &second[k]) - &third[k]);
                }
            }
        }
        out
    }
}

/// The fixing conditions supported by `invariance_subalgebra`.
pub enum Constraint<'a> {
    /// {x : rho(x) v = 0}
    FixVector(&'a [Scalar]),
    /// {x : rho(x) v is proportional to v}
    FixLine(&'a [Scalar]),
    /// {x : rho(x) W is contained in W}
    FixSubspace(&'a Subspace),
    /// {x : rho(x) acts as a zero derivation on T}
    FixTensor(&'a Tensor12),
}

/// The subalgebra of elements fixing the given datum, returned as a
/// canonical subspace of the algebra. Bracket closure is asserted, not
/// assumed; a failure signals an implementation bug upstream.
pub fn invariance_subalgebra(
    rep: &Representation,
    constraint: Constraint<'_>,
) -> Result<Subspace, LieError> {
    let n = rep.algebra().dim();
    let columns: Vec<Vec<Scalar>> = match constraint {
        Constraint::FixVector(v) => {
            assert!(v.iter().any(|s| !s.is_zero()), "fix_vector needs v != 0");
            (0..n).map(|m| rep.action(m).apply(v)).collect()
        }
        Constraint::FixLine(v) => {
            assert!(v.iter().any(|s| !s.is_zero()), "fix_line needs v != 0");
            let d = rep.dim();
            (0..n)
                .map(|m| {
                    let w = rep.action(m).apply(v);
                    // All 2x2 minors of [w, v]: linear conditions on x.
                    let mut rows = Vec::with_capacity(d * (d - 1) / 2);
                    for a in 0..d {
                        for b in (a + 1)..d {
                            rows.push(&(&w[a] * &v[b]) - &(&w[b] * &v[a]));
                        }
                    }
                    rows
                })
                .collect()
        }
        Constraint::FixSubspace(w) => {
            assert_eq!(w.ambient_dim(), rep.dim(), "subspace of the module");
            (0..n)
                .map(|m| {
                    let mut rows = Vec::new();
                    for b in w.basis_vectors() {
                        let img = rep.action(m).apply(&b);
                        rows.extend(residual(w, &img));
                    }
                    rows
                })
                .collect()
        }
        Constraint::FixTensor(t) => {
            assert_eq!(t.dim(), rep.dim(), "tensor on the module space");
            (0..n).map(|m| t.derivation_defect(rep.action(m))).collect()
        }
    };
    let rows = columns[0].len();
    let constraint_mat = Mat::from_fn(rows, n, |r, c| columns[c][r].clone());
    let iso = Subspace::kernel_of(&constraint_mat);
    rep.algebra().check_closed(&iso).map_err(|e| {
        LieError::InternalInconsistency(alloc::format!(
            "isotropy subspace is not bracket-closed: {e}"
        ))
    })?;
    Ok(iso)
}

/// Residual of v modulo the subspace: v minus its projection along the
/// pivot coordinates. Zero exactly when v lies in the subspace, and
/// linear in v.
fn residual(s: &Subspace, v: &[Scalar]) -> Vec<Scalar> {
    let mut res = v.to_vec();
    for (i, &p) in s.pivots().iter().enumerate() {
        let c = v[p].clone();
        if c.is_zero() {
            continue;
        }
        for j in 0..s.ambient_dim() {
            let b = s.basis().get(i, j);
            if !b.is_zero() {
                res[j] -= &(&c * b);
            }
        }
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::LieAlgebra;

    fn u1_rep() -> Representation {
        let e = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let f = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        let h = Mat::from_ints(&[&[1, 0], &[0, -1]]);
        Representation::new(LieAlgebra::sl2(), vec![e, f, h]).unwrap()
    }

    #[test]
    fn annihilator_of_highest_weight_vector_is_nilradical() {
        let r = u1_rep();
        let v = [Scalar::one(), Scalar::zero()];
        let s = invariance_subalgebra(&r, Constraint::FixVector(&v)).unwrap();
        assert_eq!(s.dim(), 1); // span(E)
        assert!(s.contains(&[Scalar::one(), Scalar::zero(), Scalar::zero()]));
    }

    #[test]
    fn line_stabilizer_is_borel() {
        let r = u1_rep();
        let v = [Scalar::one(), Scalar::zero()];
        let s = invariance_subalgebra(&r, Constraint::FixLine(&v)).unwrap();
        assert_eq!(s.dim(), 2); // span(E, H)
    }

    #[test]
    fn full_space_stabilizer_is_everything() {
        let r = u1_rep();
        let w = Subspace::full(2);
        let s = invariance_subalgebra(&r, Constraint::FixSubspace(&w)).unwrap();
        assert_eq!(s.dim(), 3);
    }
}
