//! Python bindings for the exact-arithmetic curvature engine.
//!
//! The module exposes one class, `MetricLieAlgebra`, wrapping a validated
//! metric Lie algebra (optionally with an attached triple of almost complex
//! structures). Every scalar crosses the boundary as an exact rational
//! string (`"p/q"` or an integer literal), so Python callers can feed the
//! values straight into `fractions.Fraction` without losing precision.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use liecurv::report::variant_name;
use liecurv::{
    build_report, catalog_by_name, classify, curvature_operator, emit_document, levi_civita,
    load_document, riemann, ricci, scalar, sectional, CatalogId, Error, HypercomplexTriple,
    Matrix, MetricLieAlgebra, Rational, SignClass,
};

fn to_py_err(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_rational(text: &str) -> PyResult<Rational> {
    text.parse::<Rational>().map_err(to_py_err)
}

fn parse_vector(coeffs: Vec<String>, dim: usize) -> PyResult<Vec<Rational>> {
    if coeffs.len() != dim {
        return Err(PyValueError::new_err(format!(
            "expected {dim} coefficients, got {}",
            coeffs.len()
        )));
    }
    coeffs.iter().map(|c| parse_rational(c)).collect()
}

fn render_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn render_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

/// A finite-dimensional Lie algebra with a positive-definite inner product,
/// plus the derived curvature data. All scalars are exact rational strings.
#[pyclass(name = "MetricLieAlgebra", frozen)]
struct PyMetricLieAlgebra {
    label: String,
    data: MetricLieAlgebra,
    structures: Option<HypercomplexTriple>,
}

#[pymethods]
impl PyMetricLieAlgebra {
    /// Loads one of the built-in examples by name (see `catalog_names()`).
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let entry = catalog_by_name(name).map_err(to_py_err)?;
        Ok(PyMetricLieAlgebra {
            label: name.to_string(),
            data: entry.data,
            structures: None,
        })
    }

    /// Parses and validates a JSON document (same schema as the CLI).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let loaded = load_document(text).map_err(to_py_err)?;
        Ok(PyMetricLieAlgebra {
            label: "document".to_string(),
            data: loaded.data,
            structures: loaded.structures,
        })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.data.dim()
    }

    /// The Lie bracket `[u, v]` of two coefficient vectors.
    fn bracket(&self, u: Vec<String>, v: Vec<String>) -> PyResult<Vec<String>> {
        let n = self.data.dim();
        let u = parse_vector(u, n)?;
        let v = parse_vector(v, n)?;
        let w = self.data.algebra().bracket(&u, &v).map_err(to_py_err)?;
        Ok(render_vector(&w))
    }

    /// The inner product `g(u, v)`.
    fn pairing(&self, u: Vec<String>, v: Vec<String>) -> PyResult<String> {
        let n = self.data.dim();
        let u = parse_vector(u, n)?;
        let v = parse_vector(v, n)?;
        Ok(self.data.metric().pairing(&u, &v).map_err(to_py_err)?.to_string())
    }

    /// Connection coefficients `table[i][j][k]`: the coefficient of `e_k`
    /// in the covariant derivative of `e_j` along `e_i` (0-based).
    fn connection(&self) -> Vec<Vec<Vec<String>>> {
        let n = self.data.dim();
        let conn = levi_civita(&self.data);
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| conn.gamma(i, j, k).to_string()).collect())
                    .collect()
            })
            .collect()
    }

    /// Curvature components `table[i][j][k][l]`: the coefficient of `e_l`
    /// in `R(e_i, e_j) e_k` (0-based).
    fn curvature(&self) -> Vec<Vec<Vec<Vec<String>>>> {
        let n = self.data.dim();
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                (0..n)
                                    .map(|l| tensor.component(i, j, k, l).to_string())
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Sectional curvature of the plane spanned by `u` and `v`.
    fn sectional(&self, u: Vec<String>, v: Vec<String>) -> PyResult<String> {
        let n = self.data.dim();
        let u = parse_vector(u, n)?;
        let v = parse_vector(v, n)?;
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        Ok(sectional(&tensor, self.data.metric(), &u, &v)
            .map_err(to_py_err)?
            .to_string())
    }

    /// The Ricci form as a square matrix of rational strings.
    fn ricci(&self) -> Vec<Vec<String>> {
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        render_matrix(&ricci(&tensor, self.data.metric()))
    }

    /// The scalar curvature.
    fn scalar(&self) -> String {
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        scalar(&tensor, self.data.metric()).to_string()
    }

    /// The curvature operator on bivectors, as a symmetric matrix over the
    /// lexicographic pair basis `(0,1), (0,2), ...`.
    fn curvature_operator(&self) -> Vec<Vec<String>> {
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        render_matrix(curvature_operator(&tensor, self.data.metric()).matrix())
    }

    /// Sign classification of sectional curvature: `"Flat"`,
    /// `"NonNegative"`, `"NonPositive"`, `"Mixed"`, or `"Indeterminate"`.
    fn classify(&self) -> String {
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        let operator = curvature_operator(&tensor, self.data.metric());
        let class = classify(&tensor, self.data.metric(), &operator);
        variant_name(&class).to_string()
    }

    /// For a mixed-sign algebra, the two witness planes as
    /// `(u, v, value)` tuples; `None` otherwise.
    #[allow(clippy::type_complexity)]
    fn witnesses(
        &self,
    ) -> Option<((Vec<String>, Vec<String>, String), (Vec<String>, Vec<String>, String))> {
        let tensor = riemann(&levi_civita(&self.data), self.data.algebra());
        let operator = curvature_operator(&tensor, self.data.metric());
        match classify(&tensor, self.data.metric(), &operator) {
            SignClass::Mixed { positive, negative } => Some((
                (
                    render_vector(&positive.u),
                    render_vector(&positive.v),
                    positive.value.to_string(),
                ),
                (
                    render_vector(&negative.u),
                    render_vector(&negative.v),
                    negative.value.to_string(),
                ),
            )),
            _ => None,
        }
    }

    /// The full report as pretty-printed JSON (same schema as the CLI).
    fn report_json(&self) -> PyResult<String> {
        let report = build_report(&self.label, &self.data, self.structures.as_ref())
            .map_err(to_py_err)?;
        serde_json::to_string_pretty(&report)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// The full report as human-readable text (same layout as the CLI).
    fn report_text(&self) -> PyResult<String> {
        let report = build_report(&self.label, &self.data, self.structures.as_ref())
            .map_err(to_py_err)?;
        Ok(report.to_text())
    }

    /// Verifies the attached almost complex structures against all eleven
    /// axioms; returns `(label, passed)` pairs. Errors when the document
    /// carried no structures.
    fn check_structures(&self) -> PyResult<Vec<(String, bool)>> {
        let triple = self.structures.as_ref().ok_or_else(|| {
            PyValueError::new_err("no complex structures attached to this algebra")
        })?;
        let report = liecurv::full_report(&self.data, triple).map_err(to_py_err)?;
        Ok(report
            .checks
            .iter()
            .map(|c| (c.label.to_string(), c.passed))
            .collect())
    }

    /// Searches signed-permutation candidates for triples satisfying all
    /// eleven axioms; returns each triple as three row-major matrices.
    #[allow(clippy::type_complexity)]
    fn find_structures(
        &self,
    ) -> PyResult<Vec<(Vec<Vec<String>>, Vec<Vec<String>>, Vec<Vec<String>>)>> {
        let triples = liecurv::search_hypercomplex_triples(&self.data).map_err(to_py_err)?;
        Ok(triples
            .iter()
            .map(|t| {
                (
                    render_matrix(t.j1().matrix()),
                    render_matrix(t.j2().matrix()),
                    render_matrix(t.j3().matrix()),
                )
            })
            .collect())
    }

    /// Serializes the algebra (and any attached structures) back to the
    /// JSON document format.
    fn to_json(&self) -> String {
        emit_document(&self.data, self.structures.as_ref())
    }

    fn __repr__(&self) -> String {
        format!(
            "MetricLieAlgebra(label='{}', dimension={})",
            self.label,
            self.data.dim()
        )
    }
}

/// Names of the built-in examples, in listing order.
#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    CatalogId::ALL.iter().map(|id| id.name()).collect()
}

#[pymodule]
fn liecurv_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMetricLieAlgebra>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    Ok(())
}
