//! Structure constants, Jacobi defects, Killing form, simplicity, rank.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Mat, Scalar, Subspace};

use super::rep::Representation;
use super::LieError;

/// A finite-dimensional Lie algebra over the rationals, given by its
/// structure constants: [b_i, b_j] = sum_k c[i][j][k] b_k.
///
/// Antisymmetry of the constants is enforced at construction; the
/// Jacobi identity is not, so candidate brackets are representable and
/// `jacobi_defect` reports exactly where they fail.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    structure: Vec<Scalar>,
    labels: Option<Vec<String>>,
}

/// One failing Jacobi triple, with the nonzero defect vector.
#[derive(Clone, Debug)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vec<Scalar>,
}

impl LieAlgebra {
    pub fn new(dim: usize, structure: Vec<Scalar>, labels: Option<Vec<String>>) -> Result<Self, LieError> {
        assert_eq!(structure.len(), dim * dim * dim, "structure constant count");
        if let Some(l) = &labels {
            assert_eq!(l.len(), dim, "one label per basis element");
        }
        let alg = LieAlgebra { dim, structure, labels };
        for i in 0..dim {
            for j in 0..=i {
                for k in 0..dim {
                    if !(alg.c(i, j, k) + alg.c(j, i, k)).is_zero() {
                        return Err(LieError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Builds from the nonzero constants with i < j; the (j, i) entries
    /// are filled in by antisymmetry.
    pub fn from_sparse(
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut structure = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, v) in entries {
            assert!(i < j, "sparse entries must have i < j");
            structure[(i * dim + j) * dim + k] = v.clone();
            structure[(j * dim + i) * dim + k] = -v;
        }
        LieAlgebra { dim, structure, labels }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            structure: vec![Scalar::zero(); dim * dim * dim],
            labels: None,
        }
    }

    /// sl(2) in the (E, F, H) basis: [E,F] = H, [H,E] = 2E, [H,F] = -2F.
    pub fn sl2() -> Self {
        let one = Scalar::one;
        LieAlgebra::from_sparse(
            3,
            &[
                (0, 1, 2, one()),
                (0, 2, 0, Scalar::from_int(-2)),
                (1, 2, 1, Scalar::from_int(2)),
            ],
            Some(vec!["E".into(), "F".into(), "H".into()]),
        )
    }

    /// Direct sum of k copies of sl(2); basis ordered
    /// (E_0, F_0, H_0, E_1, ...).
    pub fn sl2k(k: usize) -> Self {
        let dim = 3 * k;
        let mut entries = Vec::new();
        for block in 0..k {
            let b = 3 * block;
            entries.push((b, b + 1, b + 2, Scalar::one()));
            entries.push((b, b + 2, b, Scalar::from_int(-2)));
            entries.push((b + 1, b + 2, b + 1, Scalar::from_int(2)));
        }
        let labels = (0..k)
            .flat_map(|j| {
                [
                    alloc::format!("E{j}"),
                    alloc::format!("F{j}"),
                    alloc::format!("H{j}"),
                ]
            })
            .collect();
        LieAlgebra::from_sparse(dim, &entries, Some(labels))
    }

    /// gl(n) with basis e_{ab} at index a*n + b and the commutator
    /// bracket [e_ab, e_cd] = [b=c] e_ad - [d=a] e_cb.
    pub fn gl(n: usize) -> Self {
        let dim = n * n;
        let mut structure = vec![Scalar::zero(); dim * dim * dim];
        let idx = |a: usize, b: usize| a * n + b;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let i = idx(a, b);
                        let j = idx(c, d);
                        if b == c {
                            structure[(i * dim + j) * dim + idx(a, d)] += &Scalar::one();
                        }
                        if d == a {
                            structure[(i * dim + j) * dim + idx(c, b)] -= &Scalar::one();
                        }
                    }
                }
            }
        }
        LieAlgebra { dim, structure, labels: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Bracket of basis elements, as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
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
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += &(c * &xy);
                    }
                }
            }
        }
        out
    }

    /// ad(x) as a matrix: column j is [x, b_j].
    pub fn ad(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        let cur = m.get(k, j) + &(c * xi);
                        m.set(k, j, cur);
                    }
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        Mat::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k).clone())
    }

    /// All basis triples violating the Jacobi identity; empty exactly
    /// when the bracket is a Lie bracket.
    pub fn jacobi_defect(&self) -> Vec<JacobiViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in (j + 1)..self.dim {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let mut defect = self.bracket_with_basis(&bij, k);
                    let t2 = self.bracket_with_basis(&bjk, i);
                    let t3 = self.bracket_with_basis(&bki, j);
                    for l in 0..self.dim {
                        defect[l] += &t2[l];
                        defect[l] += &t3[l];
                    }
                    if defect.iter().any(|s| !s.is_zero()) {
                        out.push(JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        out
    }

    /// [v, b_j] for a coordinate vector v and a basis element.
    fn bracket_with_basis(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                let c = self.c(i, j, k);
                if !c.is_zero() {
                    out[k] += &(c * vi);
                }
            }
        }
        out
    }

    /// K[i][j] = trace(ad b_i . ad b_j).
    pub fn killing_form(&self) -> Mat {
        let ads: Vec<Mat> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = Mat::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..=i {
                let t = ads[i].trace_of_product(&ads[j]);
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    /// Cartan's criterion: nondegenerate Killing form.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim
    }

    pub fn adjoint_rep(&self) -> Result<Representation, LieError> {
        let actions = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        Representation::new(self.clone(), actions)
    }

    /// Simple iff semisimple with an absolutely irreducible adjoint
    /// representation, detected by an adjoint commutant of dimension 1.
    pub fn is_simple(&self) -> Result<bool, LieError> {
        if self.dim == 0 || !self.is_semisimple() {
            return Ok(false);
        }
        let adj = self.adjoint_rep()?;
        Ok(adj.commutant_dimension() == 1)
    }

    /// {x : [x, y] = 0 for all y in the span of `rows`}.
    pub fn centralizer(&self, rows: &[Vec<Scalar>]) -> Subspace {
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        // Condition on x: for each generator y, sum_m x_m [b_m, y] = 0.
        let mut blocks: Vec<Mat> = Vec::with_capacity(rows.len());
        for y in rows {
            let cols: Vec<Vec<Scalar>> = (0..self.dim)
                .map(|m| {
                    let mut em = vec![Scalar::zero(); self.dim];
                    em[m] = Scalar::one();
                    self.bracket(&em, y)
                })
                .collect();
            blocks.push(Mat::from_fn(self.dim, self.dim, |k, m| cols[m][k].clone()));
        }
        let mut stacked = blocks[0].clone();
        for b in &blocks[1..] {
            stacked = stacked.stack(b);
        }
        Subspace::kernel_of(&stacked)
    }

    pub fn center_dimension(&self) -> usize {
        let all: Vec<Vec<Scalar>> = Mat::identity(self.dim)
            .vectorize()
            .chunks(self.dim)
            .map(|r| r.to_vec())
            .collect();
        self.centralizer(&all).dim()
    }

    /// Rank by deterministic trial elements x_t = sum_i i t^(i-1) b_i.
    /// Accepts the first trial whose centralizer is abelian and of
    /// minimal dimension among five consecutive trials.
    pub fn rank(&self) -> Result<usize, LieError> {
        if self.dim == 0 {
            return Ok(0);
        }
        const WINDOW: usize = 5;
        const BUDGET: i64 = 24;
        let centralizer_dim = |t: i64| -> (usize, Subspace) {
            let mut x = vec![Scalar::zero(); self.dim];
            let mut power = Scalar::one();
            let tv = Scalar::from_int(t);
            for (i, slot) in x.iter_mut().enumerate() {
                *slot = Scalar::from_int(i as i64 + 1) * &power;
                power *= &tv;
            }
            let c = Subspace::kernel_of(&self.ad(&x));
            (c.dim(), c)
        };
        let mut cache: Vec<(usize, Subspace)> = Vec::new();
        let ensure = |cache: &mut Vec<(usize, Subspace)>, upto: usize| {
            while cache.len() < upto {
                let t = cache.len() as i64 + 1;
                cache.push(centralizer_dim(t));
            }
        };
        for t in 0..(BUDGET as usize - WINDOW + 1) {
            ensure(&mut cache, t + WINDOW);
            let d = cache[t].0;
            let window_min = cache[t..t + WINDOW].iter().map(|(d, _)| *d).min().unwrap();
            if d == window_min && self.is_abelian_subspace(&cache[t].1) {
                return Ok(d);
            }
        }
        Err(LieError::NoRegularElement)
    }

    fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        for (a, x) in basis.iter().enumerate() {
            for y in basis.iter().skip(a + 1) {
                if self.bracket(x, y).iter().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks bracket closure of a subspace; on failure reports a
    /// witness pair of basis indices of `s`.
    pub fn check_closed(&self, s: &Subspace) -> Result<(), LieError> {
        let basis = s.basis_vectors();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate().skip(i + 1) {
                if !s.contains(&self.bracket(x, y)) {
                    return Err(LieError::NotClosed { i, j });
                }
            }
        }
        Ok(())
    }

    /// Structure constants of a bracket-closed subspace in its
    /// canonical basis.
    pub fn subalgebra_from_subspace(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        let d = s.dim();
        let basis = s.basis_vectors();
        let mut structure = vec![Scalar::zero(); d * d * d];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate().skip(i + 1) {
                let br = self.bracket(x, y);
                let coords = s.coordinates(&br).ok_or(LieError::NotClosed { i, j })?;
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        structure[(i * d + j) * d + k] = v.clone();
                        structure[(j * d + i) * d + k] = -v;
                    }
                }
            }
        }
        Ok(LieAlgebra { dim: d, structure, labels: None })
    }

    /// Ad-invariance defect of the Killing form on basis triples:
    /// K([x,y],z) + K(y,[x,z]); all zero for a Lie bracket.
    pub fn killing_invariance_holds(&self) -> bool {
        let k = self.killing_form();
        let pair = |u: &[Scalar], i: usize| -> Scalar {
            let mut acc = Scalar::zero();
            for (a, ua) in u.iter().enumerate() {
                if !ua.is_zero() {
                    acc += &(ua * k.get(a, i));
                }
            }
            acc
        };
        for x in 0..self.dim {
            for y in 0..self.dim {
                let bxy = self.bracket_basis(x, y);
                for z in 0..self.dim {
                    let bxz = self.bracket_basis(x, z);
                    let lhs = pair(&bxy, z) + pair(&bxz, y);
                    if !lhs.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The classical labels reachable in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CartanLabel {
    So4,
    So5,
    Sl3,
    G2,
    So6,
    So7,
    So8,
    Unknown,
}

impl CartanLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CartanLabel::So4 => "so(4)",
            CartanLabel::So5 => "so(5)",
            CartanLabel::Sl3 => "sl(3)",
            CartanLabel::G2 => "g2",
            CartanLabel::So6 => "so(6)",
            CartanLabel::So7 => "so(7)",
            CartanLabel::So8 => "so(8)",
            CartanLabel::Unknown => "unknown",
        }
    }
}

/// Lookup on (dim, rank, simple): sufficient because the listed triples
/// are pairwise distinct.
pub fn cartan_label(dim: usize, rank: usize, simple: bool) -> CartanLabel {
    match (dim, rank, simple) {
        (6, 2, false) => CartanLabel::So4,
        (10, 2, true) => CartanLabel::So5,
        (8, 2, true) => CartanLabel::Sl3,
        (14, 2, true) => CartanLabel::G2,
        (15, 3, true) => CartanLabel::So6,
        (21, 3, true) => CartanLabel::So7,
        (28, 4, true) => CartanLabel::So8,
        _ => CartanLabel::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_algebra_facts() {
        let a = LieAlgebra::abelian(3);
        assert!(a.jacobi_defect().is_empty());
        assert!(a.killing_form().is_zero());
        assert!(!a.is_semisimple());
        assert_eq!(a.center_dimension(), 3);
    }

    #[test]
    fn sl2_is_simple_of_rank_one() {
        let l = LieAlgebra::sl2();
        assert!(l.jacobi_defect().is_empty());
        assert!(l.is_semisimple());
        assert!(l.is_simple().unwrap());
        assert_eq!(l.rank().unwrap(), 1);
        assert_eq!(l.center_dimension(), 0);
        assert!(l.killing_invariance_holds());
    }

    #[test]
    fn sl2_plus_sl2_is_semisimple_not_simple() {
        let l = LieAlgebra::sl2k(2);
        assert!(l.jacobi_defect().is_empty());
        assert!(l.is_semisimple());
        assert!(!l.is_simple().unwrap());
        let adj = l.adjoint_rep().unwrap();
        assert_eq!(adj.commutant_dimension(), 2);
    }

    #[test]
    fn gl_bracket_satisfies_jacobi() {
        let l = LieAlgebra::gl(3);
        assert!(l.jacobi_defect().is_empty());
        // gl(n) has a one-dimensional center (the identity matrix).
        assert_eq!(l.center_dimension(), 1);
    }

    #[test]
    fn zero_dimensional_algebra_is_legal() {
        let l = LieAlgebra::abelian(0);
        assert!(l.jacobi_defect().is_empty());
        assert!(!l.is_simple().unwrap());
        assert_eq!(l.rank().unwrap(), 0);
    }

    #[test]
    fn subalgebra_of_full_space_is_isomorphic_copy() {
        let l = LieAlgebra::sl2();
        let s = Subspace::full(3);
        let sub = l.subalgebra_from_subspace(&s).unwrap();
        assert_eq!(sub.dim(), 3);
        assert!(sub.is_simple().unwrap());
    }

    #[test]
    fn single_element_subalgebra_is_abelian() {
        let l = LieAlgebra::sl2();
        let s = Subspace::from_vectors(
            3,
            &[vec![Scalar::one(), Scalar::zero(), Scalar::zero()]],
        );
        let sub = l.subalgebra_from_subspace(&s).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.killing_form().is_zero());
    }

    #[test]
    fn non_closed_subspace_reports_witness() {
        // span(E, F) is not closed in sl(2): [E, F] = H.
        let l = LieAlgebra::sl2();
        let s = Subspace::from_vectors(
            3,
            &[
                vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            ],
        );
        assert_eq!(l.check_closed(&s), Err(LieError::NotClosed { i: 0, j: 1 }));
        assert!(l.subalgebra_from_subspace(&s).is_err());
    }
}
