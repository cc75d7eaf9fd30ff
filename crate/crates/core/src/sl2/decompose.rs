//! Isotypic decomposition by simultaneous weight-space splitting and
//! greedy highest-weight peeling.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{kernel_rows, Mat, Scalar, Subspace};

use super::module::restrict_action;
use super::{Sl2Error, Sl2kModule};

/// Multiset of irreducible summands U_{m_1} (x) ... (x) U_{m_k}, keyed
/// by weight tuple, sorted lexicographically descending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotypicList {
    summands: Vec<(Vec<i64>, usize)>,
}

impl IsotypicList {
    pub fn from_counts(counts: BTreeMap<Vec<i64>, usize>) -> Self {
        let mut summands: Vec<(Vec<i64>, usize)> =
            counts.into_iter().filter(|(_, m)| *m > 0).collect();
        summands.sort_by(|a, b| b.0.cmp(&a.0));
        IsotypicList { summands }
    }

    /// Convenience constructor from (weights, multiplicity) pairs.
    pub fn from_pairs(pairs: &[(&[i64], usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for (w, m) in pairs {
            *counts.entry(w.to_vec()).or_insert(0) += m;
        }
        IsotypicList::from_counts(counts)
    }

    pub fn summands(&self) -> &[(Vec<i64>, usize)] {
        &self.summands
    }

    pub fn multiplicity(&self, weights: &[i64]) -> usize {
        self.summands
            .iter()
            .find(|(w, _)| w.as_slice() == weights)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// Sum over summands of multiplicity times product of (m_j + 1).
    pub fn total_dimension(&self) -> usize {
        self.summands
            .iter()
            .map(|(w, m)| m * w.iter().map(|&n| (n + 1) as usize).product::<usize>())
            .sum()
    }

    /// Number of distinct summand types.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Sum of multiplicities squared: the expected commutant dimension
    /// of a module with this decomposition.
    pub fn pair_count(&self) -> usize {
        self.summands.iter().map(|(_, m)| m * m).sum()
    }
}

/// Joint eigenspaces of one diagonalizable action on a subspace, with
/// integer eigenvalues required.
fn integer_eigenspaces(
    restricted: &Mat,
    bound: i64,
    context: &str,
) -> Result<Vec<(i64, Subspace)>, Sl2Error> {
    let d = restricted.rows();
    if d == 0 {
        return Ok(Vec::new());
    }
    if let Some(diag) = restricted.as_diagonal() {
        let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, w) in diag.iter().enumerate() {
            let v = w.to_i64().ok_or_else(|| {
                Sl2Error::MalformedModule(format!("non-integer eigenvalue {w:?} in {context}"))
            })?;
            groups.entry(v).or_default().push(i);
        }
        return Ok(groups
            .into_iter()
            .map(|(v, idxs)| {
                let rows: Vec<Vec<Scalar>> = idxs
                    .iter()
                    .map(|&i| {
                        let mut row = vec![Scalar::zero(); d];
                        row[i] = Scalar::one();
                        row
                    })
                    .collect();
                (v, Subspace::from_vectors(d, &rows))
            })
            .collect());
    }
    let mut out = Vec::new();
    let mut found = 0usize;
    for lambda in -bound..=bound {
        let shifted = restricted - &Mat::identity(d).scale(&Scalar::from_int(lambda));
        let k = kernel_rows(&shifted);
        if k.rows() > 0 {
            found += k.rows();
            out.push((lambda, Subspace::from_rows(&k)));
            if found == d {
                break;
            }
        }
    }
    if found != d {
        return Err(Sl2Error::MalformedModule(format!(
            "only {found} of {d} dimensions have integer eigenvalues in {context}"
        )));
    }
    Ok(out)
}

/// Isotypic decomposition of a module: split into joint H-eigenspaces,
/// then peel highest weights greedily using product characters.
pub fn decompose(m: &Sl2kModule) -> Result<IsotypicList, Sl2Error> {
    let bound = m.dim() as i64;
    let mut spaces: Vec<(Subspace, Vec<i64>)> = vec![(Subspace::full(m.dim()), Vec::new())];
    for j in 0..m.k() {
        let h = &m.factor(j).h;
        let mut next = Vec::new();
        for (s, prefix) in spaces {
            let restricted = restrict_action(h, &s).map_err(|_| {
                Sl2Error::MalformedModule(format!(
                    "H_{j} does not preserve a previously split weight space"
                ))
            })?;
            for (lambda, sub) in integer_eigenspaces(&restricted, bound, "weight splitting")? {
                let lifted = Subspace::from_rows(&(sub.basis() * s.basis()));
                let mut w = prefix.clone();
                w.push(lambda);
                next.push((lifted, w));
            }
        }
        spaces = next;
    }

    let mut character: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (s, w) in &spaces {
        *character.entry(w.clone()).or_insert(0) += s.dim() as i64;
    }

    let mut counts: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    loop {
        character.retain(|_, v| *v != 0);
        if character.is_empty() {
            break;
        }
        // Maximal total weight, ties by lexicographic order; this is
        // always the highest weight of a remaining summand.
        let mu = character
            .iter()
            .filter(|(_, &v)| v > 0)
            .max_by(|(wa, _), (wb, _)| {
                let ta: i64 = wa.iter().sum();
                let tb: i64 = wb.iter().sum();
                ta.cmp(&tb).then(wa.cmp(wb))
            })
            .map(|(w, _)| w.clone())
            .ok_or_else(|| {
                Sl2Error::MalformedModule("negative character during peeling".into())
            })?;
        if mu.iter().any(|&x| x < 0) {
            return Err(Sl2Error::MalformedModule(format!(
                "highest weight {mu:?} has a negative coordinate"
            )));
        }
        let mult = character[&mu];
        for nu in weight_tuples(&mu) {
            let e = character.entry(nu).or_insert(0);
            *e -= mult;
        }
        if character.values().any(|&v| v < 0) {
            return Err(Sl2Error::MalformedModule(
                "character is not a sum of product characters".into(),
            ));
        }
        *counts.entry(mu).or_insert(0) += mult as usize;
    }

    let list = IsotypicList::from_counts(counts);
    debug_assert_eq!(list.total_dimension(), m.dim());
    Ok(list)
}

/// All weight tuples of U_{mu_1} (x) ... (x) U_{mu_k}.
fn weight_tuples(mu: &[i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &m in mu {
        let mut next = Vec::with_capacity(out.len() * (m as usize + 1));
        for base in &out {
            let mut w = -m;
            while w <= m {
                let mut v = base.clone();
                v.push(w);
                next.push(v);
                w += 2;
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibles_decompose_to_themselves() {
        for n in 0..=5 {
            let list = decompose(&Sl2kModule::irrep(n)).unwrap();
            assert_eq!(list, IsotypicList::from_pairs(&[(&[n as i64], 1)]));
        }
    }

    #[test]
    fn internal_square_of_u1() {
        let u1 = Sl2kModule::irrep(1);
        let sq = Sl2kModule::internal_tensor(&u1, &u1).unwrap();
        let list = decompose(&sq).unwrap();
        assert_eq!(list, IsotypicList::from_pairs(&[(&[2], 1), (&[0], 1)]));
    }

    #[test]
    fn trivial_tensor_preserves_decomposition() {
        let m = Sl2kModule::irrep(3);
        let t = Sl2kModule::internal_tensor(&m, &Sl2kModule::irrep(0)).unwrap();
        assert_eq!(decompose(&t).unwrap(), decompose(&m).unwrap());
    }

    #[test]
    fn antisymmetric_square_of_u1_box_u1() {
        // Two-factor module U1 (x) U1; its antisymmetric square splits
        // as U2 (x) U0 + U0 (x) U2.
        let m = Sl2kModule::external_product(&[1, 1]);
        let a = m.antisymmetric_square().unwrap();
        let list = decompose(&a).unwrap();
        assert_eq!(
            list,
            IsotypicList::from_pairs(&[(&[2, 0], 1), (&[0, 2], 1)])
        );
    }

    #[test]
    fn bookkeeping_dimension_formula() {
        let m = Sl2kModule::external_product(&[3, 1]);
        let sq = Sl2kModule::internal_tensor(&m, &m).unwrap();
        let list = decompose(&sq).unwrap();
        assert_eq!(list.total_dimension(), 64);
    }
}
