//! Aggregated geometry reports with stable text and JSON renderings.
//!
//! [`ReportData`] bundles the computed objects (connection, curvature
//! tensor, operator, Ricci, scalar, sign class); [`Report`] is the
//! serializable summary whose JSON form round-trips every rational
//! bit-exactly as a `"p/q"` string, and whose text form prints the
//! tables in the order connection → curvature → sectional → Ricci →
//! scalar → classification. All indices in a `Report` are 1-based, in
//! lexicographic order, with `i < j` for antisymmetric slots, so the
//! rendering is deterministic byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, SignClass, Witness};
use crate::curvature::{
    curvature_operator, levi_civita, pair_basis, riemann, ricci, scalar, sectional, Connection,
    CurvatureOperator, CurvatureTensor,
};
use crate::error::Error;
use crate::hypercomplex::{full_report, HypercomplexTriple, StructureReport};
use crate::lie::{basis_vector, MetricLieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// The computed geometry of one metric Lie algebra, kept as live objects
/// for further queries.
pub struct ReportData {
    pub data: MetricLieAlgebra,
    pub connection: Connection,
    pub tensor: CurvatureTensor,
    pub operator: CurvatureOperator,
    pub ricci: Matrix,
    pub scalar: Rational,
    pub class: SignClass,
    pub structures: Option<StructureReport>,
}

impl ReportData {
    /// Runs the full pipeline; when a candidate structure triple is
    /// supplied its axiom report is included.
    pub fn compute(
        m: &MetricLieAlgebra,
        triple: Option<&HypercomplexTriple>,
    ) -> Result<ReportData, Error> {
        let connection = levi_civita(m);
        let tensor = riemann(&connection, m.algebra());
        let operator = curvature_operator(&tensor, m.metric());
        let ric = ricci(&tensor, m.metric());
        let s = scalar(&tensor, m.metric());
        let class = classify(&tensor, m.metric(), &operator);
        let structures = match triple {
            Some(t) => Some(full_report(m, t)?),
            None => None,
        };
        Ok(ReportData {
            data: m.clone(),
            connection,
            tensor,
            operator,
            ricci: ric,
            scalar: s,
            class,
            structures,
        })
    }
}

/// One sparse row of a bilinear table: the output coefficients of a
/// basis-pair operation, keyed by 1-based basis index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Rational>,
}

/// A nonzero applied curvature component: `R(e_i, e_j) e_k` as a sparse
/// coefficient map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureRow {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeffs: BTreeMap<usize, Rational>,
}

/// A nonzero lowered curvature component `g(R(e_i,e_j)e_k, e_l)` with
/// `i < j` and `k ≤ l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoweredComponent {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: Rational,
}

/// Sectional curvature of one basis plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionalValue {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
}

/// One axiom outcome in serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomOutcome {
    pub label: String,
    pub passed: bool,
}

/// A witness plane in serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPlane {
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
    pub value: Rational,
}

/// Witness planes accompanying a `Mixed` classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedWitnesses {
    pub positive: WitnessPlane,
    pub negative: WitnessPlane,
}

/// Serializable geometry summary of one source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub source: String,
    pub dimension: usize,
    /// Nonzero brackets `[e_i, e_j]`, `i < j`.
    pub brackets: Vec<PairRow>,
    /// Nonzero connection rows `∇_{e_i} e_j`.
    pub connection: Vec<PairRow>,
    /// Nonzero applied components `R(e_i, e_j) e_k`, `i < j`.
    pub curvature: Vec<CurvatureRow>,
    /// Nonzero lowered components, `i < j`, `k ≤ l`.
    pub curvature_lowered: Vec<LoweredComponent>,
    /// `K(e_i, e_j)` for every basis plane `i < j`.
    pub sectional: Vec<SectionalValue>,
    /// Full Ricci matrix, row by row.
    pub ricci: Vec<Vec<Rational>>,
    pub scalar: Rational,
    /// Variant name: `Flat`, `NonNegative`, `NonPositive`, `Mixed`,
    /// `Indeterminate`.
    pub sign_class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<MixedWitnesses>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structures: Option<Vec<AxiomOutcome>>,
}

/// Computes the full pipeline for `m` and flattens it into a [`Report`].
pub fn build_report(
    source: &str,
    m: &MetricLieAlgebra,
    triple: Option<&HypercomplexTriple>,
) -> Result<Report, Error> {
    let data = ReportData::compute(m, triple)?;
    Ok(render(source, &data))
}

/// Flattens already-computed geometry into a [`Report`].
pub fn render(source: &str, data: &ReportData) -> Report {
    let m = &data.data;
    let n = m.dim();
    let algebra = m.algebra();

    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let coeffs = sparse(&algebra.bracket_basis(i, j));
            if !coeffs.is_empty() {
                brackets.push(PairRow {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }

    let mut connection = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let coeffs = sparse(&data.connection.derivative_basis(i, j));
            if !coeffs.is_empty() {
                connection.push(PairRow {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }

    let mut curvature = Vec::new();
    let mut curvature_lowered = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let coeffs = sparse(&data.tensor.apply_basis(i, j, k));
                if !coeffs.is_empty() {
                    curvature.push(CurvatureRow {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        coeffs,
                    });
                }
                for l in k..n {
                    let value = data.tensor.lowered(m.metric(), i, j, k, l);
                    if !value.is_zero() {
                        curvature_lowered.push(LoweredComponent {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            l: l + 1,
                            value,
                        });
                    }
                }
            }
        }
    }

    let sectional_values = pair_basis(n)
        .into_iter()
        .map(|(i, j)| {
            let u = basis_vector(n, i);
            let v = basis_vector(n, j);
            let value = sectional(&data.tensor, m.metric(), &u, &v)
                .expect("independent basis vectors span a plane");
            SectionalValue {
                i: i + 1,
                j: j + 1,
                value,
            }
        })
        .collect();

    let ricci_rows = (0..n)
        .map(|i| (0..n).map(|j| data.ricci.at(i, j).clone()).collect())
        .collect();

    let witnesses = match &data.class {
        SignClass::Mixed { positive, negative } => Some(MixedWitnesses {
            positive: witness_plane(positive),
            negative: witness_plane(negative),
        }),
        _ => None,
    };

    let structures = data.structures.as_ref().map(|sr| {
        sr.checks
            .iter()
            .map(|c| AxiomOutcome {
                label: c.label.to_string(),
                passed: c.passed,
            })
            .collect()
    });

    Report {
        source: source.to_string(),
        dimension: n,
        brackets,
        connection,
        curvature,
        curvature_lowered,
        sectional: sectional_values,
        ricci: ricci_rows,
        scalar: data.scalar.clone(),
        sign_class: variant_name(&data.class).to_string(),
        witnesses,
        structures,
    }
}

fn witness_plane(w: &Witness) -> WitnessPlane {
    WitnessPlane {
        u: w.u.clone(),
        v: w.v.clone(),
        value: w.value.clone(),
    }
}

/// CamelCase variant name of a sign class, as printed by classification
/// commands.
pub fn variant_name(class: &SignClass) -> &'static str {
    match class {
        SignClass::Flat => "Flat",
        SignClass::NonNegative => "NonNegative",
        SignClass::NonPositive => "NonPositive",
        SignClass::Mixed { .. } => "Mixed",
        SignClass::Indeterminate => "Indeterminate",
    }
}

/// Basis labels shown alongside the e-notation: `X, Y, Z, W` up to
/// dimension four, plain `e`-notation beyond.
pub fn basis_labels(dim: usize) -> Vec<String> {
    const LETTERS: [&str; 4] = ["X", "Y", "Z", "W"];
    (0..dim)
        .map(|k| {
            if dim <= 4 {
                LETTERS[k].to_string()
            } else {
                format!("e{}", k + 1)
            }
        })
        .collect()
}

/// Formats a sparse coefficient map as a signed linear combination in
/// e-notation: `1/2 e4`, `-e3`, `e2 + 1/2 e4`, or `0` when empty.
pub fn combination(coeffs: &BTreeMap<usize, Rational>) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, (k, c)) in coeffs.iter().enumerate() {
        let negative = c.is_negative();
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = c.abs();
        if magnitude != Rational::one() {
            out.push_str(&magnitude.to_string());
            out.push(' ');
        }
        out.push_str(&format!("e{k}"));
    }
    out
}

/// Formats a dense coefficient vector the same way.
pub fn combination_dense(coeffs: &[Rational]) -> String {
    combination(&sparse(coeffs))
}

/// Bracket relation in display form: letter labels on the left, the
/// combination on the right, no spaces around `=` — e.g. `[Z,W]=1/2 e2`.
pub fn bracket_relation(labels: &[String], row: &PairRow) -> String {
    format!(
        "[{},{}]={}",
        labels[row.i - 1],
        labels[row.j - 1],
        combination(&row.coeffs)
    )
}

fn sparse(coeffs: &[Rational]) -> BTreeMap<usize, Rational> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k + 1, c.clone()))
        .collect()
}

impl Report {
    /// Deterministic text rendering: header, brackets, connection,
    /// curvature, sectional values, Ricci, scalar, classification, and
    /// the structure axioms when present.
    pub fn to_text(&self) -> String {
        let labels = basis_labels(self.dimension);
        let mut out = String::new();
        out.push_str(&format!("{}: dim {}\n", self.source, self.dimension));
        out.push_str("basis: ");
        let pairs: Vec<String> = labels
            .iter()
            .enumerate()
            .map(|(k, l)| format!("e{}={}", k + 1, l))
            .collect();
        out.push_str(&pairs.join(", "));
        out.push('\n');

        out.push_str("brackets:\n");
        if self.brackets.is_empty() {
            out.push_str("  (none)\n");
        }
        for row in &self.brackets {
            out.push_str(&format!("  {}\n", bracket_relation(&labels, row)));
        }

        out.push_str("connection:\n");
        if self.connection.is_empty() {
            out.push_str("  (none)\n");
        }
        for row in &self.connection {
            out.push_str(&format!(
                "  ∇_{{e{}}} e{} = {}\n",
                row.i,
                row.j,
                combination(&row.coeffs)
            ));
        }

        out.push_str("curvature:\n");
        if self.curvature.is_empty() {
            out.push_str("  (none)\n");
        }
        for row in &self.curvature {
            out.push_str(&format!(
                "  R(e{},e{}) e{} = {}\n",
                row.i,
                row.j,
                row.k,
                combination(&row.coeffs)
            ));
        }

        out.push_str("sectional:\n");
        for s in &self.sectional {
            out.push_str(&format!("  K(e{},e{}) = {}\n", s.i, s.j, s.value));
        }

        out.push_str("ricci:\n");
        for row in &self.ricci {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("  [{}]\n", cells.join(", ")));
        }

        out.push_str("scalar:\n");
        out.push_str(&format!("  S = {}\n", self.scalar));

        out.push_str("classification:\n");
        out.push_str(&format!("  {}\n", self.classification_line()));
        if let Some(w) = &self.witnesses {
            out.push_str(&format!(
                "  K = {} > 0 at u = {}, v = {}\n",
                w.positive.value,
                combination_dense(&w.positive.u),
                combination_dense(&w.positive.v)
            ));
            out.push_str(&format!(
                "  K = {} < 0 at u = {}, v = {}\n",
                w.negative.value,
                combination_dense(&w.negative.u),
                combination_dense(&w.negative.v)
            ));
        }

        if let Some(checks) = &self.structures {
            out.push_str("structures:\n");
            for c in checks {
                let mark = if c.passed { "pass" } else { "FAIL" };
                out.push_str(&format!("  {mark} {}\n", c.label));
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                out.push_str("  result: all axioms hold\n");
            } else {
                out.push_str(&format!("  result: {failed} axiom(s) failed\n"));
            }
        }
        out
    }

    fn classification_line(&self) -> String {
        match self.sign_class.as_str() {
            "Flat" => "flat: all curvature components vanish".to_string(),
            "NonNegative" => {
                "non-negative: sectional curvature K >= 0 on every plane".to_string()
            }
            "NonPositive" => {
                "non-positive: sectional curvature K <= 0 on every plane".to_string()
            }
            "Mixed" => "mixed: planes of both curvature signs exist".to_string(),
            _ => "indeterminate: no sign certificate was found".to_string(),
        }
    }
}
