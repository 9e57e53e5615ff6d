//! JSON interchange format for metric Lie algebras.
//!
//! A document looks like
//!
//! ```json
//! {
//!   "dimension": 4,
//!   "brackets": [
//!     {"i": 1, "j": 2, "coeffs": {"2": "1", "4": "-1/2"}}
//!   ],
//!   "metric": [["1", "0", "0", "0"], ...],
//!   "complex_structures": [[ ... ], [ ... ], [ ... ]]
//! }
//! ```
//!
//! * indices are 1-based and bracket entries require `i < j`; the
//!   antisymmetric counterparts are filled in automatically,
//! * all numbers are rational strings (`"p/q"` or `"p"`), never floats,
//! * `metric` (a symmetric positive-definite Gram matrix) is optional and
//!   defaults to the identity,
//! * `complex_structures` optionally carries three candidate structure
//!   matrices; loading validates shapes only — axiom checking is a
//!   separate, reportable step.
//!
//! Loading distinguishes syntactic failures ([`Error::Parse`]: malformed
//! JSON, unknown fields, unparsable numbers) from semantic ones (bracket
//! indices out of range, bracket relations violating the Jacobi identity,
//! a metric that is not symmetric positive definite).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hypercomplex::{AlmostComplexStructure, HypercomplexTriple};
use crate::lie::{InnerProduct, LieAlgebra, MetricLieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    dimension: usize,
    brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complex_structures: Option<[Vec<Vec<String>>; 3]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    /// Output coefficients of `[e_i, e_j]`, keyed by 1-based basis index.
    coeffs: BTreeMap<usize, String>,
}

/// A fully validated document: the algebra-with-metric plus any candidate
/// structure triple it carried.
#[derive(Debug, Clone)]
pub struct LoadedDocument {
    pub data: MetricLieAlgebra,
    pub structures: Option<HypercomplexTriple>,
}

/// Parses and validates a JSON document.
pub fn load_document(json: &str) -> Result<LoadedDocument, Error> {
    let doc: Document =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    let dim = doc.dimension;
    if dim == 0 {
        return Err(Error::Document("dimension must be at least 1".to_string()));
    }

    let mut table = Vec::new();
    for entry in &doc.brackets {
        if entry.i == 0 || entry.j == 0 || entry.i > dim || entry.j > dim {
            return Err(Error::Document(format!(
                "bracket indices ({}, {}) out of range 1..={dim}",
                entry.i, entry.j
            )));
        }
        if entry.i >= entry.j {
            return Err(Error::Document(format!(
                "bracket entries require i < j, got ({}, {})",
                entry.i, entry.j
            )));
        }
        for (&k, value) in &entry.coeffs {
            if k == 0 || k > dim {
                return Err(Error::Document(format!(
                    "bracket coefficient index {k} out of range 1..={dim}"
                )));
            }
            let coeff: Rational = value.parse()?;
            if !coeff.is_zero() {
                table.push((entry.i - 1, entry.j - 1, k - 1, coeff));
            }
        }
    }
    let algebra = LieAlgebra::from_bracket_table(dim, &table)?;
    let validation = algebra.validate();
    if !validation.is_ok() {
        return Err(Error::Validation(validation));
    }

    let metric = match &doc.metric {
        None => InnerProduct::identity(dim),
        Some(rows) => {
            let gram = parse_matrix(rows, dim, "metric")?;
            InnerProduct::new(gram)?
        }
    };
    let data = MetricLieAlgebra::new(algebra, metric)?;

    let structures = match &doc.complex_structures {
        None => None,
        Some([a, b, c]) => {
            let j1 = AlmostComplexStructure::new(parse_matrix(a, dim, "complex structure 1")?)?;
            let j2 = AlmostComplexStructure::new(parse_matrix(b, dim, "complex structure 2")?)?;
            let j3 = AlmostComplexStructure::new(parse_matrix(c, dim, "complex structure 3")?)?;
            Some(HypercomplexTriple::new(j1, j2, j3)?)
        }
    };

    Ok(LoadedDocument { data, structures })
}

/// Parses a document and returns just the metric Lie algebra.
pub fn load_metric_lie_algebra(json: &str) -> Result<MetricLieAlgebra, Error> {
    Ok(load_document(json)?.data)
}

/// Serializes a metric Lie algebra (and optionally a structure triple)
/// back into the document format. The metric is written only when it
/// differs from the identity; brackets are listed for `i < j` with their
/// nonzero coefficients.
pub fn emit_document(m: &MetricLieAlgebra, structures: Option<&HypercomplexTriple>) -> String {
    let dim = m.dim();
    let algebra = m.algebra();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut coeffs = BTreeMap::new();
            for k in 0..dim {
                let c = algebra.structure_constant(i, j, k);
                if !c.is_zero() {
                    coeffs.insert(k + 1, c.to_string());
                }
            }
            if !coeffs.is_empty() {
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }
    let metric = if m.metric().is_identity() {
        None
    } else {
        Some(matrix_rows(m.metric().matrix()))
    };
    let complex_structures = structures.map(|t| {
        [
            matrix_rows(t.j1().matrix()),
            matrix_rows(t.j2().matrix()),
            matrix_rows(t.j3().matrix()),
        ]
    });
    let doc = Document {
        dimension: dim,
        brackets,
        metric,
        complex_structures,
    };
    serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, what: &str) -> Result<Matrix, Error> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Document(format!(
            "{what} must be a {dim}×{dim} matrix"
        )));
    }
    Matrix::from_str_rows(rows)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}
