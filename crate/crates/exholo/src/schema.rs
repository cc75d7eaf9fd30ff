//! JSON schemas for the algebraic objects: scalars as `num/den`
//! strings, matrices as row-major entry lists, algebras as sparse
//! bracket tables, isotypic lists, classification reports, and the
//! cross-product tensor.

use exholo_core::exact::{Mat, Scalar, Subspace};
use exholo_core::lie::{LieAlgebra, Representation, Tensor12};
use exholo_core::sl2::IsotypicList;
use exholo_core::symdec::ClassifyEntry;
use serde_json::{json, Value};

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_fraction_string())
}

pub fn mat_json(m: &Mat) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(scalar_json).collect::<Vec<_>>(),
    })
}

pub fn subspace_json(s: &Subspace) -> Value {
    mat_json(s.basis())
}

/// {dim, labels, brackets: [{i, j, k, value}]} with only the nonzero
/// constants with i < j, in lexicographic order.
pub fn lie_algebra_json(l: &LieAlgebra) -> Value {
    let mut brackets = Vec::new();
    for i in 0..l.dim() {
        for j in (i + 1)..l.dim() {
            for k in 0..l.dim() {
                let c = l.c(i, j, k);
                if !c.is_zero() {
                    brackets.push(json!({
                        "i": i,
                        "j": j,
                        "k": k,
                        "value": c.to_fraction_string(),
                    }));
                }
            }
        }
    }
    json!({
        "dim": l.dim(),
        "labels": l.labels().map(|ls| ls.to_vec()).unwrap_or_default(),
        "brackets": brackets,
    })
}

pub fn representation_json(algebra_ref: &str, r: &Representation) -> Value {
    json!({
        "algebra_ref": algebra_ref,
        "dim": r.dim(),
        "actions": r.actions().iter().map(mat_json).collect::<Vec<_>>(),
    })
}

/// Sorted (lexicographically descending) list of
/// {weights: [...], multiplicity} objects.
pub fn isotypic_json(list: &IsotypicList) -> Value {
    Value::Array(
        list.summands()
            .iter()
            .map(|(w, m)| json!({ "weights": w, "multiplicity": m }))
            .collect(),
    )
}

pub fn classify_json(entries: &[ClassifyEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| {
                json!({
                    "multi_index": e.mi.parts(),
                    "p_dim": e.p_dim,
                    "solution_dim": e.solution_dim,
                })
            })
            .collect(),
    )
}

/// {dim, entries: [{i, j, k, value}]} with the nonzero coefficients of
/// e_k in e_i x e_j, lexicographic in (i, j, k).
pub fn cross_product_json(t: &Tensor12) -> Value {
    let mut entries = Vec::new();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            for k in 0..t.dim() {
                let v = t.entry(k, i, j);
                if !v.is_zero() {
                    entries.push(json!({
                        "i": i,
                        "j": j,
                        "k": k,
                        "value": v.to_fraction_string(),
                    }));
                }
            }
        }
    }
    json!({ "dim": t.dim(), "entries": entries })
}

/// Pretty JSON with a trailing newline; deterministic for our values.
pub fn to_canonical_string(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json"))
}
