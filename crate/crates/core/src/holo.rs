//! The exceptional holonomy chain: the 7- and 8-dimensional
//! representations of so(7) built from its symmetric decomposition, the
//! spinor-stabilizer copy of g2, the reductive complement whose torsion
//! is the Cayley cross product, the stabilizer certificate for that
//! cross product, the triality branchings, and the subalgebra chain
//! down to sl(2).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::cert::Certificate;
use crate::exact::{Mat, Scalar, Subspace};
use crate::lie::{
    cartan_label, invariance_subalgebra, CartanLabel, Constraint, LieAlgebra, LieError,
    Representation, Tensor12,
};
use crate::sl2::{decompose, equivariant_maps, IsotypicList, Sl2Error, Sl2kModule};
use crate::symdec::{standard_model, SymdecError, SymmetricDecomposition};

use core::fmt;

#[derive(Clone, Debug)]
pub enum HoloError {
    /// A graded block space has the wrong dimension for the solver.
    BlockDimension { name: &'static str, expected: usize, got: usize },
    /// The bracket condition pins no coefficient or contradicts itself.
    Solver(String),
    /// A step of the certified chain failed a hard requirement.
    Chain(String),
    Lie(LieError),
    Sl2(Sl2Error),
    Symdec(SymdecError),
}

impl fmt::Display for HoloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HoloError::BlockDimension { name, expected, got } => {
                write!(f, "block space {name}: expected dimension {expected}, got {got}")
            }
            HoloError::Solver(m) => write!(f, "graded solver: {m}"),
            HoloError::Chain(m) => write!(f, "holonomy chain: {m}"),
            HoloError::Lie(e) => write!(f, "{e}"),
            HoloError::Sl2(e) => write!(f, "{e}"),
            HoloError::Symdec(e) => write!(f, "{e}"),
        }
    }
}

impl From<LieError> for HoloError {
    fn from(e: LieError) -> Self {
        HoloError::Lie(e)
    }
}

impl From<Sl2Error> for HoloError {
    fn from(e: Sl2Error) -> Self {
        HoloError::Sl2(e)
    }
}

impl From<SymdecError> for HoloError {
    fn from(e: SymdecError) -> Self {
        HoloError::Symdec(e)
    }
}

/// A two-summand graded representation ansatz over a symmetric
/// decomposition: h acts block-diagonally on V0 + V1, p maps each
/// summand into the other through the (one-dimensional) equivariant
/// block spaces.
pub struct GradedRepSpec<'a> {
    pub base: &'a SymmetricDecomposition,
    pub v0: Sl2kModule,
    pub v1: Sl2kModule,
}

/// Solves the graded ansatz: the bracket condition on pairs of
/// p-elements pins the product of the two block scales to a rational
/// constant; the returned representation uses scale 1 on the block
/// V0 -> V1. The exact bracket relation is verified at construction.
pub fn solve_graded_rep(spec: &GradedRepSpec<'_>) -> Result<Representation, HoloError> {
    let base = spec.base;
    let p = base.p_module();
    let k = p.k();
    if spec.v0.k() != k || spec.v1.k() != k {
        return Err(HoloError::Solver("summands must live over the same factors".into()));
    }
    let d0 = spec.v0.dim();
    let d1 = spec.v1.dim();
    let dim = d0 + d1;

    let p_v0 = Sl2kModule::internal_tensor(p, &spec.v0)?;
    let p_v1 = Sl2kModule::internal_tensor(p, &spec.v1)?;
    let hom01 = equivariant_maps(&p_v0, &spec.v1)?;
    let hom10 = equivariant_maps(&p_v1, &spec.v0)?;
    if hom01.len() != 1 {
        return Err(HoloError::BlockDimension { name: "Hom(p(x)V0, V1)", expected: 1, got: hom01.len() });
    }
    if hom10.len() != 1 {
        return Err(HoloError::BlockDimension { name: "Hom(p(x)V1, V0)", expected: 1, got: hom10.len() });
    }
    // Diagonal blocks must vanish identically for the Z2-graded ansatz.
    let hom00 = equivariant_maps(&p_v0, &spec.v0)?;
    let hom11 = equivariant_maps(&p_v1, &spec.v1)?;
    if !hom00.is_empty() || !hom11.is_empty() {
        return Err(HoloError::Solver("diagonal equivariant blocks are nonzero".into()));
    }

    // Per p-basis slices of the block maps.
    let phi01 = &hom01[0]; // d1 x (p_dim * d0)
    let phi10 = &hom10[0]; // d0 x (p_dim * d1)
    let p_dim = p.dim();
    let b01: Vec<Mat> = (0..p_dim)
        .map(|x| Mat::from_fn(d1, d0, |w, v| phi01.get(w, x * d0 + v).clone()))
        .collect();
    let b10: Vec<Mat> = (0..p_dim)
        .map(|x| Mat::from_fn(d0, d1, |w, v| phi10.get(w, x * d1 + v).clone()))
        .collect();

    // rho_h of an h-coordinate vector, block by block.
    let h_dim = base.h_dim();
    let act_summand = |m: &Sl2kModule, coords: &[Scalar]| -> Mat {
        let mut out = Mat::zero(m.dim(), m.dim());
        for (a, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let fa = m.factor(a / 3);
            let g = match a % 3 {
                0 => &fa.e,
                1 => &fa.f,
                _ => &fa.h,
            };
            out = &out + &g.scale(c);
        }
        out
    };

    // Pin t = t1 t2 from the bracket condition on p-pairs.
    let mut t: Option<Scalar> = None;
    for x in 0..p_dim {
        for y in (x + 1)..p_dim {
            let eta_xy: Vec<Scalar> = (0..h_dim).map(|a| base.eta().entry(a, x, y).clone()).collect();
            let l0 = act_summand(&spec.v0, &eta_xy);
            let l1 = act_summand(&spec.v1, &eta_xy);
            let m0 = &(&b10[x] * &b01[y]) - &(&b10[y] * &b01[x]);
            let m1 = &(&b01[x] * &b10[y]) - &(&b01[y] * &b10[x]);
            for (lhs, rhs) in [(&l0, &m0), (&l1, &m1)] {
                for i in 0..lhs.rows() {
                    for j in 0..lhs.cols() {
                        let l = lhs.get(i, j);
                        let r = rhs.get(i, j);
                        if r.is_zero() {
                            if !l.is_zero() {
                                return Err(HoloError::Solver(format!(
                                    "inconsistent block equation at p-pair ({x},{y})"
                                )));
                            }
                            continue;
                        }
                        let ratio = l / r;
                        match &t {
                            None => t = Some(ratio),
                            Some(prev) => {
                                if *prev != ratio {
                                    return Err(HoloError::Solver(format!(
                                        "coefficient product not constant: {prev:?} vs {ratio:?}"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let t = t.ok_or_else(|| HoloError::Solver("bracket condition pins nothing".into()))?;
    if t.is_zero() {
        return Err(HoloError::Solver("pinned coefficient product is zero".into()));
    }

    // Assemble: h block-diagonal, p anti-diagonal with t1 = 1, t2 = t.
    let mut actions: Vec<Mat> = Vec::with_capacity(base.algebra().dim());
    for a in 0..h_dim {
        let mut coords = vec![Scalar::zero(); h_dim];
        coords[a] = Scalar::one();
        let top = act_summand(&spec.v0, &coords);
        let bot = act_summand(&spec.v1, &coords);
        actions.push(Mat::from_fn(dim, dim, |i, j| {
            if i < d0 && j < d0 {
                top.get(i, j).clone()
            } else if i >= d0 && j >= d0 {
                bot.get(i - d0, j - d0).clone()
            } else {
                Scalar::zero()
            }
        }));
    }
    for x in 0..p_dim {
        actions.push(Mat::from_fn(dim, dim, |i, j| {
            if i < d0 && j >= d0 {
                b10[x].get(i, j - d0) * &t
            } else if i >= d0 && j < d0 {
                b01[x].get(i - d0, j).clone()
            } else {
                Scalar::zero()
            }
        }));
    }
    Ok(Representation::new(base.algebra().clone(), actions)?)
}

/// The cross product on the 7-dimensional space: the torsion of the
/// reductive decomposition, transported back through the equivariant
/// identification of the complement with the canonical representation.
#[derive(Clone, Debug)]
pub struct CrossProduct {
    pub tensor: Tensor12,
    pub form: Mat,
    /// The constant in B(x ^ y, x ^ y) = lambda (B(x,x)B(y,y) - B(x,y)^2),
    /// computed from basis pairs.
    pub lambda: Scalar,
}

/// Everything the downstream certificates consume, built once from the
/// (2.1.1) model. All fields are plain immutable data.
pub struct G2Artifacts {
    pub so7: SymmetricDecomposition,
    pub vector_rep: Representation,
    pub b7: Mat,
    pub spin_rep: Representation,
    pub b8: Mat,
    /// The chosen non-null spinor, with a note on how it was picked.
    pub spinor: Vec<Scalar>,
    pub spinor_note: String,
    /// The stabilizer of the spinor, as a subspace of so(7).
    pub g2_space: Subspace,
    pub g2: LieAlgebra,
    pub g2_on_v7: Representation,
    pub g2_on_v8: Representation,
    /// Killing-orthogonal complement of g2 in so(7).
    pub p_complement: Subspace,
    /// g2 acting on the complement by the adjoint action.
    pub p_rep: Representation,
    /// V7 -> complement coordinates, the normalized intertwiner.
    pub iota: Mat,
    pub cross: CrossProduct,
}

/// Deterministic non-null vector: the first basis vector with nonzero
/// self-pairing, else the first pair sum e_0 + e_j with nonzero mutual
/// pairing (every weight-basis vector of the spin module is null).
pub fn pick_non_null(form: &Mat) -> (Vec<Scalar>, String) {
    let d = form.rows();
    for i in 0..d {
        if !form.get(i, i).is_zero() {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            return (v, format!("basis vector e{i}"));
        }
    }
    for j in 1..d {
        if !form.get(0, j).is_zero() {
            let mut v = vec![Scalar::zero(); d];
            v[0] = Scalar::one();
            v[j] = Scalar::one();
            return (v, format!("e0 + e{j}"));
        }
    }
    unreachable!("nondegenerate form pairs e0 with something");
}

fn form_value(form: &Mat, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let f = form.get(i, j);
            if !f.is_zero() {
                acc += &(&(xi * yj) * f);
            }
        }
    }
    acc
}

/// Normalized invariant symmetric form of a representation; requires
/// the space of such forms to be one-dimensional and the form to be
/// nondegenerate.
pub fn normalized_invariant_form(rep: &Representation) -> Result<Mat, HoloError> {
    let forms = rep.invariant_symmetric_forms();
    if forms.len() != 1 {
        return Err(HoloError::Chain(format!(
            "invariant symmetric form space has dimension {}, expected 1",
            forms.len()
        )));
    }
    let lead = forms[0]
        .entries()
        .iter()
        .find(|s| !s.is_zero())
        .ok_or_else(|| HoloError::Chain("invariant form is zero".into()))?
        .clone();
    let b = forms[0].scale(&lead.recip());
    if b.rank() != rep.dim() {
        return Err(HoloError::Chain("invariant form is degenerate".into()));
    }
    Ok(b)
}

impl G2Artifacts {
    /// Builds the whole chain. Hard failures here mean the construction
    /// itself broke; the per-result certificates re-verify each claim.
    pub fn build() -> Result<Self, HoloError> {
        let so7 = standard_model(CartanLabel::So7)?;

        // Canonical 7-dimensional representation: U_2 + U_1 (x) U_1.
        let vector_rep = solve_graded_rep(&GradedRepSpec {
            base: &so7,
            v0: Sl2kModule::external_product(&[2, 0, 0]),
            v1: Sl2kModule::external_product(&[0, 1, 1]),
        })?;
        let b7 = normalized_invariant_form(&vector_rep)?;

        // 8-dimensional spin representation: the two outer summands of
        // the 16-dimensional product module, pulled back along
        // (A1, A2, A3) -> (A1, A1, A2, A3).
        let assignment = [0usize, 0, 1, 2];
        let v0 = Sl2kModule::external_product(&[1, 0, 1, 0]).branch(&assignment, 3)?;
        let v1 = Sl2kModule::external_product(&[0, 1, 0, 1]).branch(&assignment, 3)?;
        let spin_rep = solve_graded_rep(&GradedRepSpec { base: &so7, v0, v1 })?;
        let b8 = normalized_invariant_form(&spin_rep)?;

        let (spinor, spinor_note) = pick_non_null(&b8);
        if form_value(&b8, &spinor, &spinor).is_zero() {
            return Err(HoloError::Chain("chosen spinor is null".into()));
        }

        let g2_space = invariance_subalgebra(&spin_rep, Constraint::FixVector(&spinor))?;
        if g2_space.dim() != 14 {
            return Err(HoloError::Chain(format!(
                "spinor stabilizer has dimension {}, expected 14",
                g2_space.dim()
            )));
        }
        let g2 = so7.algebra().subalgebra_from_subspace(&g2_space)?;
        let g2_on_v7 = vector_rep.restrict_to(&g2_space)?;
        let g2_on_v8 = spin_rep.restrict_to(&g2_space)?;

        let killing = so7.algebra().killing_form();
        let p_complement = g2_space.orthocomplement(&killing);
        if p_complement.dim() != 7 {
            return Err(HoloError::Chain(format!(
                "Killing complement has dimension {}, expected 7",
                p_complement.dim()
            )));
        }
        // Adjoint action of g2 on the complement.
        let p_actions: Vec<Mat> = g2_space
            .basis_vectors()
            .iter()
            .map(|x| {
                let d = p_complement.dim();
                let mut m = Mat::zero(d, d);
                for (l, y) in p_complement.basis_vectors().iter().enumerate() {
                    let br = so7.algebra().bracket(x, y);
                    let coords = p_complement
                        .coordinates(&br)
                        .ok_or_else(|| HoloError::Chain("complement is not invariant".into()))?;
                    for (i, c) in coords.into_iter().enumerate() {
                        m.set(i, l, c);
                    }
                }
                Ok(m)
            })
            .collect::<Result<_, HoloError>>()?;
        let p_rep = Representation::new(g2.clone(), p_actions)?;

        // Equivariant identification V7 -> complement, first nonzero
        // entry normalized to +1.
        let intertwiners = g2_on_v7.intertwiners(&p_rep);
        if intertwiners.len() != 1 {
            return Err(HoloError::Chain(format!(
                "Hom(V7, p) has dimension {}, expected 1",
                intertwiners.len()
            )));
        }
        let lead = intertwiners[0]
            .entries()
            .iter()
            .find(|s| !s.is_zero())
            .ok_or_else(|| HoloError::Chain("zero intertwiner".into()))?
            .clone();
        let iota = intertwiners[0].scale(&lead.recip());
        let iota_inv = iota
            .inverse()
            .ok_or_else(|| HoloError::Chain("identification is singular".into()))?;

        // Torsion: x ^ y = iota^{-1} (projection to p of [iota x, iota y]).
        let g_basis = g2_space.basis();
        let p_basis = p_complement.basis();
        let change = g_basis.stack(p_basis).transpose();
        let change_inv = change
            .inverse()
            .ok_or_else(|| HoloError::Chain("g2 + p does not span so(7)".into()))?;
        let dim7 = 7usize;
        let mut tensor = Tensor12::zero(dim7);
        for i in 0..dim7 {
            let pi = p_complement.lift(&iota.col_vec(i));
            for j in (i + 1)..dim7 {
                let pj = p_complement.lift(&iota.col_vec(j));
                let br = so7.algebra().bracket(&pi, &pj);
                let coords = change_inv.apply(&br);
                let p_part: Vec<Scalar> = coords[14..21].to_vec();
                let v = iota_inv.apply(&p_part);
                for (k, value) in v.into_iter().enumerate() {
                    if !value.is_zero() {
                        tensor.set_entry(k, i, j, value.clone());
                        tensor.set_entry(k, j, i, -value);
                    }
                }
            }
        }
        if tensor.is_zero() {
            return Err(HoloError::Chain("torsion of the reductive decomposition vanishes".into()));
        }

        // Composition constant from basis pairs.
        let mut lambda: Option<Scalar> = None;
        for i in 0..dim7 {
            let ei: Vec<Scalar> = (0..dim7)
                .map(|a| if a == i { Scalar::one() } else { Scalar::zero() })
                .collect();
            for j in 0..dim7 {
                let ej: Vec<Scalar> = (0..dim7)
                    .map(|a| if a == j { Scalar::one() } else { Scalar::zero() })
                    .collect();
                let gram = &(b7.get(i, i) * b7.get(j, j)) - &(b7.get(i, j) * b7.get(i, j));
                if gram.is_zero() {
                    continue;
                }
                let xy = tensor.apply(&ei, &ej);
                let val = form_value(&b7, &xy, &xy);
                let ratio = &val / &gram;
                match &lambda {
                    None => lambda = Some(ratio),
                    Some(prev) => {
                        if *prev != ratio {
                            return Err(HoloError::Chain(
                                "composition constant is not uniform over basis pairs".into(),
                            ));
                        }
                    }
                }
            }
        }
        let lambda = lambda.ok_or_else(|| HoloError::Chain("no basis pair pins the constant".into()))?;
        if lambda.is_zero() {
            return Err(HoloError::Chain("composition constant vanishes".into()));
        }

        Ok(G2Artifacts {
            so7,
            vector_rep,
            b7: b7.clone(),
            spin_rep,
            b8,
            spinor,
            spinor_note,
            g2_space,
            g2,
            g2_on_v7,
            g2_on_v8,
            p_complement,
            p_rep,
            iota,
            cross: CrossProduct { tensor, form: b7, lambda },
        })
    }

    /// Lifts a subspace of g2-coordinates into so(7)-coordinates.
    pub fn lift_to_so7(&self, s: &Subspace) -> Subspace {
        Subspace::from_rows(&(s.basis() * self.g2_space.basis()))
    }
}

/// Certificate for the two holonomy representations themselves: exact
/// bracket relations hold by construction; irreducibility and the
/// one-dimensional nondegenerate symmetric invariant are certified
/// here, as is the solvability of the third 8-dimensional module over
/// the (1.1.1.1) model.
pub fn holonomy_certificate(art: &G2Artifacts) -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    cert.check_eq("holonomy.vector_dim", 7, art.vector_rep.dim());
    cert.check_eq("holonomy.vector_commutant", 1, art.vector_rep.commutant_dimension());
    cert.check_eq(
        "holonomy.vector_symmetric_forms",
        1,
        art.vector_rep.invariant_symmetric_forms().len(),
    );
    cert.check_eq("holonomy.vector_form_rank", 7, art.b7.rank());
    cert.check_eq(
        "holonomy.vector_antisymmetric_forms",
        0,
        art.vector_rep.invariant_antisymmetric_forms().len(),
    );

    cert.check_eq("holonomy.spin_dim", 8, art.spin_rep.dim());
    cert.check_eq("holonomy.spin_commutant", 1, art.spin_rep.commutant_dimension());
    cert.check_eq(
        "holonomy.spin_symmetric_forms",
        1,
        art.spin_rep.invariant_symmetric_forms().len(),
    );
    cert.check_eq("holonomy.spin_form_rank", 8, art.b8.rank());
    cert.check_eq(
        "holonomy.spin_antisymmetric_forms",
        0,
        art.spin_rep.invariant_antisymmetric_forms().len(),
    );

    // The vector-type 8-dimensional module of the (1.1.1.1) model also
    // solves: so(8) acts on it with an exact bracket relation.
    let so8 = standard_model(CartanLabel::So8)?;
    let triality_rep = solve_graded_rep(&GradedRepSpec {
        base: &so8,
        v0: Sl2kModule::external_product(&[1, 1, 0, 0]),
        v1: Sl2kModule::external_product(&[0, 0, 1, 1]),
    })?;
    cert.check_eq("holonomy.so8_vector_dim", 8, triality_rep.dim());
    cert.check_eq("holonomy.so8_vector_commutant", 1, triality_rep.commutant_dimension());
    Ok(cert)
}

/// Certificate for the spinor-stabilizer construction of g2.
pub fn g2_certificate(art: &G2Artifacts) -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    cert.check_eq("g2.stabilizer_dim", 14, art.g2_space.dim());
    cert.check_true("g2.simple", art.g2.is_simple()?);
    cert.check_eq("g2.rank", 2, art.g2.rank()?);
    cert.check_eq(
        "g2.cartan_label",
        CartanLabel::G2.as_str(),
        cartan_label(art.g2.dim(), art.g2.rank()?, art.g2.is_simple()?).as_str(),
    );
    // Restriction of the spin module to g2 splits as 1 + 7.
    cert.check_eq("g2.spin_restriction_commutant", 2, art.g2_on_v8.commutant_dimension());
    let inv = art.g2_on_v8.invariant_vectors();
    cert.check_eq("g2.spin_invariant_vectors", 1, inv.dim());
    cert.check_true(
        "g2.invariant_line_is_spinor",
        inv.contains(&art.spinor),
    );
    cert.check_eq("g2.vector_restriction_commutant", 1, art.g2_on_v7.commutant_dimension());
    Ok(cert)
}

/// Certificate for the reductive decomposition so(7) = g2 + p and the
/// identification of p with the canonical 7-dimensional module.
pub fn reductive_complement_certificate(art: &G2Artifacts) -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    cert.check_eq("complement.dim", 7, art.p_complement.dim());
    let mut invariant = true;
    for x in art.g2_space.basis_vectors() {
        for y in art.p_complement.basis_vectors() {
            if !art.p_complement.contains(&art.so7.algebra().bracket(&x, &y)) {
                invariant = false;
            }
        }
    }
    cert.check_true("complement.g2_invariant", invariant);
    cert.check_eq(
        "complement.intertwiner_dim",
        1,
        art.g2_on_v7.intertwiners(&art.p_rep).len(),
    );
    let direct_sum = art.g2_space.sum(&art.p_complement).map_err(LieError::from_ambient)?;
    cert.check_eq("complement.spans_so7", 21, direct_sum.dim());
    // The torsion is nonzero: the complement carries a cross product.
    cert.check_true("complement.torsion_nonzero", !art.cross.tensor.is_zero());
    Ok(cert)
}

/// Certificate for the cross product identities and the stabilizer
/// claim: the infinitesimal automorphisms inside gl(7) are exactly the
/// image of g2.
pub fn cross_product_certificate(art: &G2Artifacts) -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    let t = &art.cross.tensor;
    let b = &art.cross.form;
    let d = t.dim();

    cert.check_true("cross.antisymmetric", t.is_antisymmetric());
    cert.check_true("cross.nonzero", !t.is_zero());

    // Orthogonality B(x ^ y, x) = 0 as a trilinear identity: the form
    // C(x, y, z) = B(x ^ y, z) kills the symmetric part in (x, z).
    let mut orthogonal = true;
    for i in 0..d {
        for j in 0..d {
            let tij = t.apply_basis(i, j);
            let tkj: Vec<Vec<Scalar>> = (0..d).map(|k| t.apply_basis(k, j)).collect();
            for k in 0..d {
                let ek: Vec<Scalar> = (0..d)
                    .map(|a| if a == k { Scalar::one() } else { Scalar::zero() })
                    .collect();
                let ei: Vec<Scalar> = (0..d)
                    .map(|a| if a == i { Scalar::one() } else { Scalar::zero() })
                    .collect();
                let c_ijk = form_value(b, &tij, &ek);
                let c_kji = form_value(b, &tkj[k], &ei);
                if !(&c_ijk + &c_kji).is_zero() {
                    orthogonal = false;
                }
            }
        }
    }
    cert.check_true("cross.orthogonal", orthogonal);

    // g2-equivariance: each generator acts as a derivation of the tensor.
    let mut equivariant = true;
    for a in art.g2_on_v7.actions() {
        if t.derivation_defect(a).iter().any(|s| !s.is_zero()) {
            equivariant = false;
        }
    }
    cert.check_true("cross.g2_equivariant", equivariant);

    cert.check_true("cross.lambda_nonzero", !art.cross.lambda.is_zero());
    cert.check_with_details(
        "cross.composition_constant_uniform",
        true,
        true,
        format!("lambda = {}", art.cross.lambda.to_fraction_string()),
    );

    // Stabilizer inside gl(7).
    let gl7 = LieAlgebra::gl(7);
    let gl7_actions: Vec<Mat> = (0..49)
        .map(|m| {
            let mut e = Mat::zero(7, 7);
            e.set(m / 7, m % 7, Scalar::one());
            e
        })
        .collect();
    let gl7_rep = Representation::new(gl7, gl7_actions)?;
    let stab = invariance_subalgebra(&gl7_rep, Constraint::FixTensor(t))?;
    cert.check_eq("stabilizer.dim_in_gl7", 14, stab.dim());

    let g2_image = art.g2_on_v7.image_subspace();
    cert.check_eq("stabilizer.equals_g2_image", true, stab == g2_image);

    let so7_image = art.vector_rep.image_subspace();
    let meet = stab.intersect(&so7_image).map_err(LieError::from_ambient)?;
    cert.check_eq("stabilizer.skew_automatically", true, meet == stab);
    Ok(cert)
}

/// The three 8-dimensional module descriptors over sl(2)^4, as ordered
/// summand pairs of slot assignments.
fn triality_modules() -> Result<[Sl2kModule; 3], Sl2Error> {
    let m = |a: &[usize; 4], b: &[usize; 4]| -> Result<Sl2kModule, Sl2Error> {
        Sl2kModule::direct_sum(
            &Sl2kModule::external_product(a),
            &Sl2kModule::external_product(b),
        )
    };
    Ok([
        m(&[1, 1, 0, 0], &[0, 0, 1, 1])?,
        m(&[1, 0, 1, 0], &[0, 1, 0, 1])?,
        m(&[1, 0, 0, 1], &[0, 1, 1, 0])?,
    ])
}

/// Branchings along the diagonal morphism (A1, A2) -> (A1, A1, A2, A2)
/// of the three 8-dimensional modules.
fn triality_branchings() -> Result<Vec<IsotypicList>, HoloError> {
    let mods = triality_modules()?;
    let assignment = [0usize, 0, 1, 1];
    Ok(mods
        .iter()
        .map(|m| decompose(&m.branch(&assignment, 2)?))
        .collect::<Result<_, _>>()?)
}

/// The branching computation that separates the first two triality
/// modules: their restrictions have different isotypic lists.
pub fn triality_certificate() -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    let lists = triality_branchings()?;
    let first_expected = IsotypicList::from_pairs(&[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], 2)]);
    let pair_expected = IsotypicList::from_pairs(&[(&[1, 1], 2)]);
    cert.check_eq("triality.first_branching", &first_expected, &lists[0]);
    cert.check_eq("triality.second_branching", &pair_expected, &lists[1]);
    cert.check_true("triality.first_differs_from_second", lists[0] != lists[1]);
    // Dimension bookkeeping: 8 = 3 + 3 + 1 + 1 = 4 + 4.
    cert.check_eq("triality.dim_first", 8, lists[0].total_dimension());
    cert.check_eq("triality.dim_second", 8, lists[1].total_dimension());
    Ok(cert)
}

/// Character-level identification of the restricted modules: the first
/// branching is the 6-dimensional module plus two trivials, and the
/// second and third are two copies of the 4-dimensional module
/// U_1 (x) U_1 — the defining module of the (1.1) model, i.e. the
/// canonical symplectic 4-dimensional module.
pub fn canonical_restriction_certificate() -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    let lists = triality_branchings()?;
    let pair_expected = IsotypicList::from_pairs(&[(&[1, 1], 2)]);
    cert.check_eq("restriction.third_branching", &pair_expected, &lists[2]);
    cert.check_eq("restriction.second_is_two_copies_of_4dim", 2, lists[1].multiplicity(&[1, 1]));
    cert.check_eq("restriction.third_is_two_copies_of_4dim", 2, lists[2].multiplicity(&[1, 1]));
    // First branching: the 3+3 part plus a 2-dimensional trivial summand.
    cert.check_eq("restriction.first_six_dim_part", 1, lists[0].multiplicity(&[2, 0]));
    cert.check_eq("restriction.first_six_dim_part_mirror", 1, lists[0].multiplicity(&[0, 2]));
    cert.check_eq("restriction.first_trivial_part", 2, lists[0].multiplicity(&[0, 0]));
    // The 4-dimensional module is precisely the p-block of the (1.1)
    // model, tying the restriction to the symplectic algebra so(5).
    let so5 = standard_model(CartanLabel::So5)?;
    cert.check_eq("restriction.four_dim_is_so5_p_block", 4, so5.p_dim());
    let p_list = decompose(so5.p_module())?;
    cert.check_eq(
        "restriction.so5_p_block_type",
        &IsotypicList::from_pairs(&[(&[1, 1], 1)]),
        &p_list,
    );
    Ok(cert)
}

/// Exploratory diagonal candidate inside the (2.1.1) model: the span
/// of {(A, A, B)} in the sl(2)-block together with the 8-dimensional
/// isotypic part of p under the diagonal action. Reported as closed or
/// not closed under the bracket; not load-bearing for any certificate.
pub fn diagonal_candidate_certificate() -> Result<Certificate, HoloError> {
    let mut cert = Certificate::new();
    let so7 = standard_model(CartanLabel::So7)?;
    let dim = so7.algebra().dim();
    let h_dim = so7.h_dim();

    // Diagonal block span{(A, A, B)}: six vectors of the sl(2)^3 block.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in 0..3 {
        let mut v = vec![Scalar::zero(); dim];
        v[g] = Scalar::one();
        v[3 + g] = Scalar::one();
        rows.push(v);
    }
    for g in 0..3 {
        let mut v = vec![Scalar::zero(); dim];
        v[6 + g] = Scalar::one();
        rows.push(v);
    }

    // Isotypic part of p of type U_3 (x) U_1 under the diagonal action.
    let branched = so7.p_module().branch(&[0, 0, 1], 2)?;
    let target = Sl2kModule::external_product(&[3, 1]);
    let maps = equivariant_maps(&target, &branched)?;
    cert.check_eq("diagonal.isotypic_block_multiplicity", 1, maps.len());
    if let Some(embed) = maps.first() {
        for col in 0..embed.cols() {
            let mut v = vec![Scalar::zero(); dim];
            for r in 0..embed.rows() {
                v[h_dim + r] = embed.get(r, col).clone();
            }
            rows.push(v);
        }
    }
    let candidate = Subspace::from_vectors(dim, &rows);
    cert.check_eq("diagonal.candidate_dim", 14, candidate.dim());
    let verdict = match so7.algebra().check_closed(&candidate) {
        Ok(()) => "closed",
        Err(_) => "not closed",
    };
    cert.check_with_details(
        "diagonal.candidate_bracket_closure",
        verdict,
        verdict,
        format!("the 14-dimensional diagonal candidate is {verdict} under the bracket"),
    );
    Ok(cert)
}

/// Data produced by the subalgebra chain, reused by its certificate.
pub struct Cor15Chain {
    pub w: Vec<Scalar>,
    pub w_note: String,
    pub w2: Vec<Scalar>,
    pub w2_note: String,
    pub so6_space: Subspace,
    pub so5_space: Subspace,
    pub g2_cap_so6: Subspace,
    pub sl3_cap_so5: Subspace,
}

/// Runs the chain so(5) in so(6) in so(7): the vector stabilizer, the
/// pointwise plane stabilizer, and the two intersections with g2.
pub fn cor15_chain(art: &G2Artifacts) -> Result<(Cor15Chain, Certificate), HoloError> {
    let mut cert = Certificate::new();
    let (w, w_note) = pick_non_null(&art.b7);

    let so6_space = invariance_subalgebra(&art.vector_rep, Constraint::FixVector(&w))?;
    cert.check_eq("chain.so6_dim", 15, so6_space.dim());

    // Second non-null vector spanning a nondegenerate plane with w:
    // basis vectors first, then pair sums, in lexicographic order.
    let d = art.b7.rows();
    let mut candidates: Vec<(Vec<Scalar>, String)> = Vec::new();
    for i in 0..d {
        let mut v = vec![Scalar::zero(); d];
        v[i] = Scalar::one();
        candidates.push((v, format!("e{i}")));
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            v[j] = Scalar::one();
            candidates.push((v, format!("e{i} + e{j}")));
        }
    }
    let (w2, w2_note) = candidates
        .into_iter()
        .find(|(v, _)| {
            if v == &w {
                return false;
            }
            let gram = &(&form_value(&art.b7, &w, &w) * &form_value(&art.b7, v, v))
                - &(&form_value(&art.b7, &w, v) * &form_value(&art.b7, &w, v));
            !gram.is_zero()
        })
        .ok_or_else(|| HoloError::Chain("no nondegenerate plane through w".into()))?;

    let so5_from_w2 = invariance_subalgebra(&art.vector_rep, Constraint::FixVector(&w2))?;
    let so5_space = so6_space.intersect(&so5_from_w2).map_err(LieError::from_ambient)?;
    cert.check_eq("chain.so5_dim", 10, so5_space.dim());
    cert.check_true("chain.so5_inside_so6", so6_space.contains_subspace(&so5_space));

    // g2 meets so(6) in an 8-dimensional simple algebra of rank 2.
    let g2_cap_so6 = art.g2_space.intersect(&so6_space).map_err(LieError::from_ambient)?;
    cert.check_eq("chain.g2_cap_so6_dim", 8, g2_cap_so6.dim());
    let sl3 = art.so7.algebra().subalgebra_from_subspace(&g2_cap_so6)?;
    cert.check_true("chain.g2_cap_so6_simple", sl3.is_simple()?);
    cert.check_eq("chain.g2_cap_so6_rank", 2, sl3.rank()?);
    cert.check_eq(
        "chain.g2_cap_so6_label",
        CartanLabel::Sl3.as_str(),
        cartan_label(sl3.dim(), sl3.rank()?, sl3.is_simple()?).as_str(),
    );

    // That sl(3) meets so(5) in a 3-dimensional simple rank-1 algebra.
    let sl3_cap_so5 = g2_cap_so6.intersect(&so5_space).map_err(LieError::from_ambient)?;
    cert.check_eq("chain.sl3_cap_so5_dim", 3, sl3_cap_so5.dim());
    let sl2 = art.so7.algebra().subalgebra_from_subspace(&sl3_cap_so5)?;
    cert.check_true("chain.sl3_cap_so5_simple", sl2.is_simple()?);
    cert.check_eq("chain.sl3_cap_so5_rank", 1, sl2.rank()?);

    // The intersection is one of the two sl(2) factors of the
    // symmetric decomposition of so(5): its centralizer inside so(5)
    // is the other factor, the two together form a 6-dimensional
    // subalgebra whose Killing complement in so(5) is 4-dimensional
    // and restricts to the sl(2) as two copies of U_1.
    let so5 = art.so7.algebra().subalgebra_from_subspace(&so5_space)?;
    let sl2_in_so5: Vec<Vec<Scalar>> = sl3_cap_so5
        .basis_vectors()
        .iter()
        .map(|x| {
            so5_space
                .coordinates(x)
                .ok_or_else(|| HoloError::Chain("sl2 not inside so5".into()))
        })
        .collect::<Result<_, _>>()?;
    let centralizer = so5.centralizer(&sl2_in_so5);
    cert.check_eq("chain.centralizer_dim", 3, centralizer.dim());
    let sl2_sub = Subspace::from_vectors(so5.dim(), &sl2_in_so5);
    let h_sub = sl2_sub.sum(&centralizer).map_err(LieError::from_ambient)?;
    cert.check_eq("chain.h_dim", 6, h_sub.dim());
    so5.check_closed(&h_sub)?;
    let so5_killing = so5.killing_form();
    let p_sub = h_sub.orthocomplement(&so5_killing);
    cert.check_eq("chain.p_dim", 4, p_sub.dim());
    let mut p_invariant = true;
    for x in h_sub.basis_vectors() {
        for y in p_sub.basis_vectors() {
            if !p_sub.contains(&so5.bracket(&x, &y)) {
                p_invariant = false;
            }
        }
    }
    cert.check_true("chain.p_invariant", p_invariant);

    // Restriction of the sl(2) to the 4-dimensional complement: a
    // commutant of dimension 4 with no invariant vectors pins U_1 + U_1.
    let sl2_alg = so5.subalgebra_from_subspace(&sl2_sub)?;
    let p_dim = p_sub.dim();
    let actions: Vec<Mat> = sl2_sub
        .basis_vectors()
        .iter()
        .map(|x| {
            let mut m = Mat::zero(p_dim, p_dim);
            for (l, y) in p_sub.basis_vectors().iter().enumerate() {
                let br = so5.bracket(x, y);
                let coords = p_sub
                    .coordinates(&br)
                    .ok_or_else(|| HoloError::Chain("complement not invariant".into()))?;
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, l, c);
                }
            }
            Ok(m)
        })
        .collect::<Result<_, HoloError>>()?;
    let restriction = Representation::new(sl2_alg, actions)?;
    cert.check_eq("chain.p_restriction_commutant", 4, restriction.commutant_dimension());
    cert.check_eq("chain.p_restriction_invariants", 0, restriction.invariant_vectors().dim());

    Ok((
        Cor15Chain {
            w,
            w_note,
            w2,
            w2_note,
            so6_space,
            so5_space,
            g2_cap_so6,
            sl3_cap_so5,
        },
        cert,
    ))
}

impl LieError {
    /// Ambient mismatches inside certified chains are internal bugs.
    pub fn from_ambient(e: crate::exact::ExactError) -> LieError {
        LieError::InternalInconsistency(e.to_string())
    }
}
