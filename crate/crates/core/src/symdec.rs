//! Symmetric decompositions h + p built from a multi-index.
//!
//! For parts (n_1 ... n_k) with even sum, h is sl(2)^k, p is the outer
//! tensor product U_{n_1} (x) ... (x) U_{n_k}, and the candidate bracket
//! on p is a linear combination of the k tensors that apply the
//! adjoint-valued projection in one slot and the invariant pairing in
//! all others. The coefficients for which the first Bianchi identity
//! holds form a linear subspace of Q^k; solving it per multi-index and
//! sweeping the admissible multi-indices reproduces the classification
//! of the algebras that arise this way.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Mat, Scalar, Subspace};
use crate::lie::{cartan_label, CartanLabel, LieAlgebra, LieError};
use crate::sl2::{clebsch_projection, BilinearTensor, ClebschTarget, Sl2Error, Sl2kModule, Symmetry};

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymdecError {
    /// Multi-index parts must be at least 1.
    ZeroPart,
    /// The sum of the parts must be even.
    OddSum,
    EmptyParts,
    /// A coefficient vector of the wrong length.
    CoefficientCount { expected: usize, got: usize },
    /// The Bianchi solution space is empty where a model was requested.
    EmptySolutionSpace,
    Lie(LieError),
    Sl2(Sl2Error),
}

impl fmt::Display for SymdecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymdecError::ZeroPart => write!(f, "multi-index parts must be >= 1"),
            SymdecError::OddSum => write!(f, "the sum of the multi-index parts must be even"),
            SymdecError::EmptyParts => write!(f, "a multi-index needs at least one part"),
            SymdecError::CoefficientCount { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            SymdecError::EmptySolutionSpace => {
                write!(f, "no admissible coefficients for this multi-index")
            }
            SymdecError::Lie(e) => write!(f, "{e}"),
            SymdecError::Sl2(e) => write!(f, "{e}"),
        }
    }
}

impl From<LieError> for SymdecError {
    fn from(e: LieError) -> Self {
        SymdecError::Lie(e)
    }
}

impl From<Sl2Error> for SymdecError {
    fn from(e: Sl2Error) -> Self {
        SymdecError::Sl2(e)
    }
}

/// A symmetric multi-index (n_1 ... n_k): parts at least 1, stored in
/// non-increasing order, with even sum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MultiIndex {
    parts: Vec<usize>,
}

impl MultiIndex {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SymdecError> {
        if parts.is_empty() {
            return Err(SymdecError::EmptyParts);
        }
        if parts.iter().any(|&n| n == 0) {
            return Err(SymdecError::ZeroPart);
        }
        if parts.iter().sum::<usize>() % 2 != 0 {
            return Err(SymdecError::OddSum);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultiIndex { parts })
    }

    /// Parses the dotted form, e.g. `3.1` or `2.1.1`.
    pub fn parse(s: &str) -> Result<Self, SymdecError> {
        let parts: Vec<usize> = s
            .split('.')
            .map(|p| p.trim().parse::<usize>().map_err(|_| SymdecError::ZeroPart))
            .collect::<Result<_, _>>()?;
        MultiIndex::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn p_dim(&self) -> usize {
        self.parts.iter().map(|&n| n + 1).product()
    }

    pub fn h_dim(&self) -> usize {
        3 * self.parts.len()
    }

    pub fn total_dim(&self) -> usize {
        self.h_dim() + self.p_dim()
    }

    /// The dotted label, e.g. `3.1`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(|n| alloc::format!("{n}")).collect();
        parts.join(".")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// The k building-block tensors of the p-bracket: term j applies the
/// U_2-valued projection in slot j and the invariant pairing elsewhere,
/// then lands in the j-th sl(2) summand of h via the fixed equivariant
/// identification U_2 = sl(2) (weight-2 vector to E, weight-0 vector to
/// -H, lowest vector to -2F).
pub fn eta_terms(parts: &[usize]) -> Result<Vec<BilinearTensor>, SymdecError> {
    let k = parts.len();
    let p_dim: usize = parts.iter().map(|&n| n + 1).product();
    let h_dim = 3 * k;
    let eps: Vec<BilinearTensor> = parts
        .iter()
        .map(|&n| clebsch_projection(n, ClebschTarget::U0))
        .collect::<Result<_, _>>()?;
    let pis: Vec<BilinearTensor> = parts
        .iter()
        .map(|&n| clebsch_projection(n, ClebschTarget::U2))
        .collect::<Result<_, _>>()?;
    let dims: Vec<usize> = parts.iter().map(|&n| n + 1).collect();

    let unpack = |mut idx: usize| -> Vec<usize> {
        let mut multi = vec![0; k];
        for j in (0..k).rev() {
            multi[j] = idx % dims[j];
            idx /= dims[j];
        }
        multi
    };

    let mut terms = Vec::with_capacity(k);
    for j in 0..k {
        let mut t = BilinearTensor::zero(p_dim, h_dim, Symmetry::Antisymmetric);
        for x in 0..p_dim {
            let xi = unpack(x);
            for y in 0..p_dim {
                let yi = unpack(y);
                let mut scalar = Scalar::one();
                for l in 0..k {
                    if l == j {
                        continue;
                    }
                    let e = eps[l].entry(0, xi[l], yi[l]);
                    if e.is_zero() {
                        scalar = Scalar::zero();
                        break;
                    }
                    scalar *= e;
                }
                if scalar.is_zero() {
                    continue;
                }
                // U_2 coordinates of the slot-j projection.
                let w0 = pis[j].entry(0, xi[j], yi[j]);
                let w1 = pis[j].entry(1, xi[j], yi[j]);
                let w2 = pis[j].entry(2, xi[j], yi[j]);
                if !w0.is_zero() {
                    t.set_entry(3 * j, x, y, &scalar * w0);
                }
                if !w2.is_zero() {
                    t.set_entry(3 * j + 1, x, y, &scalar * &(w2 * &Scalar::from_int(-2)));
                }
                if !w1.is_zero() {
                    t.set_entry(3 * j + 2, x, y, &scalar * &(-w1));
                }
            }
        }
        if !t.is_antisymmetric_entrywise() {
            return Err(SymdecError::Lie(LieError::InternalInconsistency(
                "eta term is not antisymmetric".into(),
            )));
        }
        terms.push(t);
    }
    Ok(terms)
}

/// eta = sum_j c_j (eps (x) ... (x) pi_{n_j} (x) ... (x) eps).
pub fn eta_tensor(mi: &MultiIndex, c: &[Scalar]) -> Result<BilinearTensor, SymdecError> {
    if c.len() != mi.k() {
        return Err(SymdecError::CoefficientCount { expected: mi.k(), got: c.len() });
    }
    let terms = eta_terms(mi.parts())?;
    let mut eta = BilinearTensor::zero(mi.p_dim(), mi.h_dim(), Symmetry::Antisymmetric);
    for (t, cj) in terms.iter().zip(c.iter()) {
        eta = eta
            .add_scaled(t, cj)
            .ok_or_else(|| SymdecError::Lie(LieError::InternalInconsistency("eta shape".into())))?;
    }
    Ok(eta)
}

/// A symmetric decomposition: h = sl(2)^k acting on p, with a chosen
/// coefficient vector and the assembled bracket on h + p. The Jacobi
/// identity of the assembled bracket is equivalent to the coefficient
/// vector lying in the Bianchi solution space.
#[derive(Clone, Debug)]
pub struct SymmetricDecomposition {
    mi: MultiIndex,
    coefficients: Vec<Scalar>,
    p_module: Sl2kModule,
    eta: BilinearTensor,
    algebra: LieAlgebra,
}

impl SymmetricDecomposition {
    pub fn mi(&self) -> &MultiIndex {
        &self.mi
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn p_module(&self) -> &Sl2kModule {
        &self.p_module
    }

    pub fn eta(&self) -> &BilinearTensor {
        &self.eta
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn h_dim(&self) -> usize {
        self.mi.h_dim()
    }

    pub fn p_dim(&self) -> usize {
        self.mi.p_dim()
    }

    /// Action matrix of the a-th h-basis element on p.
    pub fn alpha(&self, a: usize) -> &Mat {
        let j = a / 3;
        match a % 3 {
            0 => &self.p_module.factor(j).e,
            1 => &self.p_module.factor(j).f,
            _ => &self.p_module.factor(j).h,
        }
    }

    /// The curvature form R(x, y)z composed from the action and the
    /// p-bracket, as a dense (1,3)-tensor on p.
    pub fn curvature_form(&self) -> CurvatureForm {
        let p = self.p_dim();
        let h = self.h_dim();
        let mut entries = vec![Scalar::zero(); p * p * p * p];
        for x in 0..p {
            for y in 0..p {
                let mut h_coords = Vec::with_capacity(h);
                for a in 0..h {
                    h_coords.push(self.eta.entry(a, x, y).clone());
                }
                if h_coords.iter().all(Scalar::is_zero) {
                    continue;
                }
                for z in 0..p {
                    for (a, ha) in h_coords.iter().enumerate() {
                        if ha.is_zero() {
                            continue;
                        }
                        let col = self.alpha(a);
                        for w in 0..p {
                            let m = col.get(w, z);
                            if !m.is_zero() {
                                entries[((w * p + x) * p + y) * p + z] += &(ha * m);
                            }
                        }
                    }
                }
            }
        }
        CurvatureForm { p_dim: p, entries }
    }
}

/// The (1,3) curvature tensor on p: entry (w, x, y, z) is the
/// w-component of R(e_x, e_y) e_z.
#[derive(Clone, Debug)]
pub struct CurvatureForm {
    p_dim: usize,
    entries: Vec<Scalar>,
}

impl CurvatureForm {
    pub fn p_dim(&self) -> usize {
        self.p_dim
    }

    pub fn entry(&self, w: usize, x: usize, y: usize, z: usize) -> &Scalar {
        &self.entries[((w * self.p_dim + x) * self.p_dim + y) * self.p_dim + z]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_antisymmetric_in_arguments(&self) -> bool {
        let p = self.p_dim;
        for w in 0..p {
            for x in 0..p {
                for y in 0..=x {
                    for z in 0..p {
                        if !(self.entry(w, x, y, z) + self.entry(w, y, x, z)).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Cyclic sum R(x,y)z + R(y,z)x + R(z,x)y on basis triples.
    pub fn bianchi_sum(&self, x: usize, y: usize, z: usize) -> Vec<Scalar> {
        let p = self.p_dim;
        (0..p)
            .map(|w| {
                let mut acc = self.entry(w, x, y, z).clone();
                acc += self.entry(w, y, z, x);
                acc += self.entry(w, z, x, y);
                acc
            })
            .collect()
    }
}

/// Assembles the candidate bracket on h + p for the given coefficients.
/// Antisymmetry holds by construction; Jacobi is checked separately.
pub fn build(mi: &MultiIndex, c: &[Scalar]) -> Result<SymmetricDecomposition, SymdecError> {
    if c.len() != mi.k() {
        return Err(SymdecError::CoefficientCount { expected: mi.k(), got: c.len() });
    }
    let k = mi.k();
    let h_dim = mi.h_dim();
    let p_dim = mi.p_dim();
    let dim = h_dim + p_dim;
    let p_module = Sl2kModule::external_product(mi.parts());
    let eta = eta_tensor(mi, c)?;
    let h_alg = LieAlgebra::sl2k(k);

    let mut structure = vec![Scalar::zero(); dim * dim * dim];
    let mut set = |i: usize, j: usize, kk: usize, v: Scalar| {
        structure[(i * dim + j) * dim + kk] = v;
    };
    // [h, h]: the sl(2)^k block.
    for i in 0..h_dim {
        for j in 0..h_dim {
            for l in 0..h_dim {
                let v = h_alg.c(i, j, l);
                if !v.is_zero() {
                    set(i, j, l, v.clone());
                }
            }
        }
    }
    // [h, p] = alpha(h) p and its antisymmetric mirror.
    for a in 0..h_dim {
        let j = a / 3;
        let fa = p_module.factor(j);
        let act = match a % 3 {
            0 => &fa.e,
            1 => &fa.f,
            _ => &fa.h,
        };
        for x in 0..p_dim {
            for w in 0..p_dim {
                let v = act.get(w, x);
                if !v.is_zero() {
                    set(a, h_dim + x, h_dim + w, v.clone());
                    set(h_dim + x, a, h_dim + w, -v);
                }
            }
        }
    }
    // [p, p] = eta, valued in h.
    for x in 0..p_dim {
        for y in 0..p_dim {
            for a in 0..h_dim {
                let v = eta.entry(a, x, y);
                if !v.is_zero() {
                    set(h_dim + x, h_dim + y, a, v.clone());
                }
            }
        }
    }

    let mut labels = Vec::with_capacity(dim);
    for j in 0..k {
        labels.push(alloc::format!("E{j}"));
        labels.push(alloc::format!("F{j}"));
        labels.push(alloc::format!("H{j}"));
    }
    for x in 0..p_dim {
        labels.push(alloc::format!("p{x}"));
    }
    let algebra = LieAlgebra::new(dim, structure, Some(labels))?;
    Ok(SymmetricDecomposition {
        mi: mi.clone(),
        coefficients: c.to_vec(),
        p_module,
        eta,
        algebra,
    })
}

/// The set of coefficient vectors whose curvature form satisfies the
/// first Bianchi identity. Linear in the coefficients, so one kernel.
pub fn bianchi_solution_space(mi: &MultiIndex) -> Result<Subspace, SymdecError> {
    bianchi_solution_space_for_parts(mi.parts())
}

/// Raw-parts variant (no canonical reordering), used to check that the
/// solution dimension is invariant under permutations of equal parts.
pub fn bianchi_solution_space_for_parts(parts: &[usize]) -> Result<Subspace, SymdecError> {
    let k = parts.len();
    let p_module = Sl2kModule::external_product(parts);
    let p_dim = p_module.dim();
    let terms = eta_terms(parts)?;
    let h_dim = 3 * k;

    // Echelon accumulator for constraint rows in Q^k.
    fn absorb(echelon: &mut Vec<Vec<Scalar>>, row: &mut Vec<Scalar>) -> bool {
        for b in echelon.iter() {
            let pivot = b.iter().position(|s| !s.is_zero()).unwrap();
            if !row[pivot].is_zero() {
                let f = &row[pivot] / &b[pivot];
                for (r, bb) in row.iter_mut().zip(b.iter()) {
                    *r -= &(&f * bb);
                }
            }
        }
        if row.iter().all(Scalar::is_zero) {
            return false;
        }
        echelon.push(row.clone());
        echelon.sort_by_key(|r| r.iter().position(|s| !s.is_zero()).unwrap());
        true
    }
    let mut echelon: Vec<Vec<Scalar>> = Vec::new();

    // alpha(eta_j(x, y)) z for basis indices, reused across the cyclic sum.
    let apply_term = |j: usize, x: usize, y: usize, z: usize| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); p_dim];
        for a in 0..h_dim {
            let ha = terms[j].entry(a, x, y);
            if ha.is_zero() {
                continue;
            }
            let fj = p_module.factor(a / 3);
            let act = match a % 3 {
                0 => &fj.e,
                1 => &fj.f,
                _ => &fj.h,
            };
            for w in 0..p_dim {
                let m = act.get(w, z);
                if !m.is_zero() {
                    out[w] += &(ha * m);
                }
            }
        }
        out
    };

    'outer: for x in 0..p_dim {
        for y in (x + 1)..p_dim {
            for z in (y + 1)..p_dim {
                let sums: Vec<Vec<Scalar>> = (0..k)
                    .map(|j| {
                        let mut s = apply_term(j, x, y, z);
                        let t2 = apply_term(j, y, z, x);
                        let t3 = apply_term(j, z, x, y);
                        for ((a, b), c) in s.iter_mut().zip(t2).zip(t3) {
                            *a += &b;
                            *a += &c;
                        }
                        s
                    })
                    .collect();
                for w in 0..p_dim {
                    let mut row: Vec<Scalar> = (0..k).map(|j| sums[j][w].clone()).collect();
                    if row.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    absorb(&mut echelon, &mut row);
                    if echelon.len() == k {
                        break 'outer;
                    }
                }
            }
        }
    }

    if echelon.is_empty() {
        return Ok(Subspace::full(k));
    }
    let constraint = Mat::from_rows(echelon);
    Ok(Subspace::kernel_of(&constraint))
}

/// One classification result: a multi-index whose Bianchi solution
/// space is nonzero, with the solution dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyEntry {
    pub mi: MultiIndex,
    pub p_dim: usize,
    pub solution_dim: usize,
}

/// All canonical multi-indices within the bounds, ordered by ascending
/// p-dimension then lexicographically on parts.
pub fn enumerate_multi_indices(max_p_dim: usize, max_k: usize, max_n: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    fn recurse(
        parts: &mut Vec<usize>,
        product: usize,
        max_p_dim: usize,
        max_k: usize,
        max_n: usize,
        out: &mut Vec<MultiIndex>,
    ) {
        if !parts.is_empty() && parts.iter().sum::<usize>() % 2 == 0 {
            out.push(MultiIndex { parts: parts.clone() });
        }
        if parts.len() == max_k {
            return;
        }
        let cap = parts.last().copied().unwrap_or(max_n);
        for n in (1..=cap).rev() {
            if product * (n + 1) > max_p_dim {
                continue;
            }
            parts.push(n);
            recurse(parts, product * (n + 1), max_p_dim, max_k, max_n, out);
            parts.pop();
        }
    }
    recurse(&mut parts, 1, max_p_dim, max_k, max_n, &mut out);
    out.sort_by(|a, b| a.p_dim().cmp(&b.p_dim()).then(a.parts.cmp(&b.parts)));
    out
}

/// Sweeps the admissible multi-indices and reports those with a nonzero
/// Bianchi solution space.
pub fn classify(max_p_dim: usize, max_k: usize, max_n: usize) -> Result<Vec<ClassifyEntry>, SymdecError> {
    let mut out = Vec::new();
    for mi in enumerate_multi_indices(max_p_dim, max_k, max_n) {
        let sol = bianchi_solution_space(&mi)?;
        if sol.dim() > 0 {
            out.push(ClassifyEntry {
                p_dim: mi.p_dim(),
                solution_dim: sol.dim(),
                mi,
            });
        }
    }
    Ok(out)
}

/// Identifies an algebra by (dim, rank, simple) against the classical
/// table; `Unknown` when no row matches.
pub fn identify(l: &LieAlgebra) -> Result<CartanLabel, SymdecError> {
    if !l.jacobi_defect().is_empty() {
        return Err(SymdecError::Lie(LieError::InternalInconsistency(
            "identify requires a Lie bracket".into(),
        )));
    }
    if !l.is_semisimple() {
        return Ok(CartanLabel::Unknown);
    }
    let rank = l.rank()?;
    let simple = l.is_simple()?;
    Ok(cartan_label(l.dim(), rank, simple))
}

/// The seven labels of the classification, in table order.
pub const STANDARD_MODELS: [(CartanLabel, &[usize]); 7] = [
    (CartanLabel::So4, &[2]),
    (CartanLabel::So5, &[1, 1]),
    (CartanLabel::Sl3, &[4]),
    (CartanLabel::G2, &[3, 1]),
    (CartanLabel::So6, &[2, 2]),
    (CartanLabel::So7, &[2, 1, 1]),
    (CartanLabel::So8, &[1, 1, 1, 1]),
];

/// Multi-index of a table label.
pub fn model_multi_index(label: CartanLabel) -> Option<MultiIndex> {
    STANDARD_MODELS
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, parts)| MultiIndex { parts: parts.to_vec() })
}

/// Builds the table model for a label with the canonical coefficient
/// vector: the first basis vector of the Bianchi solution space.
pub fn standard_model(label: CartanLabel) -> Result<SymmetricDecomposition, SymdecError> {
    let mi = model_multi_index(label).ok_or(SymdecError::EmptySolutionSpace)?;
    let sol = bianchi_solution_space(&mi)?;
    if sol.dim() == 0 {
        return Err(SymdecError::EmptySolutionSpace);
    }
    let c = sol.basis().row_vec(0);
    build(&mi, &c)
}

/// Certificate for the classification sweep: within the given bounds,
/// exactly the seven table multi-indices admit a nonzero Bianchi
/// solution space.
pub fn classification_certificate(
    max_p_dim: usize,
    max_k: usize,
    max_n: usize,
) -> Result<crate::cert::Certificate, SymdecError> {
    let mut cert = crate::cert::Certificate::new();
    let found = classify(max_p_dim, max_k, max_n)?;
    let labels: Vec<String> = found.iter().map(|e| e.mi.label()).collect();
    let expected: Vec<String> = STANDARD_MODELS
        .iter()
        .map(|(_, parts)| {
            let mi = MultiIndex { parts: parts.to_vec() };
            mi.label()
        })
        .collect();
    let mut expected_sorted: Vec<String> = expected.clone();
    expected_sorted.sort_by_key(|l| {
        let mi = MultiIndex::parse(l).unwrap();
        (mi.p_dim(), mi.parts().to_vec())
    });
    cert.check_with_details(
        "classify.survivors",
        expected_sorted,
        labels,
        alloc::format!("bounds: p_dim <= {max_p_dim}, k <= {max_k}, n <= {max_n}"),
    );
    for e in &found {
        cert.check_with_details(
            &alloc::format!("classify.solution_dim.{}", e.mi.label()),
            1,
            e.solution_dim,
            alloc::format!("p_dim {}", e.p_dim),
        );
    }
    Ok(cert)
}

/// Certificate for one table model: Jacobi holds, the center vanishes,
/// the Killing form is nondegenerate, simplicity matches the table, and
/// (dim, rank) identify the algebra.
pub fn model_certificate(label: CartanLabel) -> Result<crate::cert::Certificate, SymdecError> {
    let mut cert = crate::cert::Certificate::new();
    let mi = model_multi_index(label).ok_or(SymdecError::EmptySolutionSpace)?;
    let name = label.as_str();
    let sd = standard_model(label)?;
    let alg = sd.algebra();
    cert.check_eq(
        &alloc::format!("model.{name}.total_dim"),
        mi.total_dim(),
        alg.dim(),
    );
    cert.check_eq(&alloc::format!("model.{name}.jacobi_violations"), 0, alg.jacobi_defect().len());
    cert.check_eq(&alloc::format!("model.{name}.center_dim"), 0, alg.center_dimension());
    cert.check_true(&alloc::format!("model.{name}.killing_nondegenerate"), alg.is_semisimple());
    let expected_simple = label != CartanLabel::So4;
    cert.check_eq(&alloc::format!("model.{name}.simple"), expected_simple, alg.is_simple()?);
    let expected_rank = match label {
        CartanLabel::So4 | CartanLabel::So5 | CartanLabel::Sl3 | CartanLabel::G2 => 2,
        CartanLabel::So6 | CartanLabel::So7 => 3,
        CartanLabel::So8 => 4,
        CartanLabel::Unknown => 0,
    };
    cert.check_eq(&alloc::format!("model.{name}.rank"), expected_rank, alg.rank()?);
    cert.check_eq(
        &alloc::format!("model.{name}.identified"),
        name,
        identify(alg)?.as_str(),
    );
    cert.check_true(
        &alloc::format!("model.{name}.killing_ad_invariant"),
        alg.killing_invariance_holds(),
    );
    Ok(cert)
}

impl BilinearTensor {
    /// Entrywise antisymmetry, used as a construction-time check on the
    /// p-bracket tensors.
    pub fn is_antisymmetric_entrywise(&self) -> bool {
        for t in 0..self.target_dim() {
            for i in 0..self.source_dim() {
                for j in 0..=i {
                    if !(self.entry(t, i, j) + self.entry(t, j, i)).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}
