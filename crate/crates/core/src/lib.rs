//! Exact-arithmetic curvature engine for metric Lie algebras.
//!
//! Everything in this crate is computed over arbitrary-precision rationals:
//! there is no floating point anywhere, every equality is exact, and every
//! printed value round-trips bit-for-bit.
//!
//! The pipeline goes from a Lie algebra given by structure constants and an
//! inner product on it, through the Levi-Civita connection (Koszul formula),
//! to the full curvature tensor and the derived invariants: sectional
//! curvature of planes, the Ricci form, scalar curvature, and the curvature
//! operator on the space of bivectors. On top of that sit two analyses:
//!
//! - [`classify`](classify::classify) decides the sign behaviour of
//!   sectional curvature (flat / non-negative / non-positive / mixed, with
//!   exact witnesses when mixed);
//! - [`hypercomplex`] verifies almost complex structures: squares,
//!   quaternion relations, Nijenhuis integrability, and compatibility with
//!   the metric.
//!
//! # Conventions
//!
//! Fixed once, used everywhere:
//!
//! - Structure constants: `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
//! - Koszul formula: `2 g(∇_U V, W) = g([U,V],W) − g([V,W],U) + g([W,U],V)`.
//! - Curvature: `R(U,V)W = ∇_U ∇_V W − ∇_V ∇_U W − ∇_{[U,V]} W`.
//! - Sectional curvature: `K(U,V) = g(R(V,U)U, V) / (|U|²|V|² − g(U,V)²)`.
//! - Scalar curvature: `S = Σ_j Ric(e_j, e_j)` in an orthonormal basis,
//!   equivalently `S = 2 Σ_{i<j} K(e_i, e_j)`; the g-trace in general.
//!
//! The built-in [`catalog`](catalog::catalog) carries five four-dimensional
//! metric Lie algebras (one abelian, four solvable/semisimple-factor cases)
//! that exercise every sign class the classifier can produce.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod classify;
pub mod curvature;
pub mod document;
pub mod error;
pub mod hypercomplex;
pub mod lie;
pub mod matrix;
pub mod rational;
pub mod report;

pub use catalog::{catalog, catalog_by_name, CatalogEntry, CatalogId};
pub use classify::{classify, is_semidefinite, Sign, SignClass, Witness};
pub use curvature::{
    curvature_operator, levi_civita, pair_basis, plucker, r_v_u_u, ricci, riemann, scalar,
    sectional, Connection, CurvatureOperator, CurvatureTensor,
};
pub use document::{emit_document, load_document, load_metric_lie_algebra, LoadedDocument};
pub use error::Error;
pub use hypercomplex::{
    full_report, is_hyper_hermitian, is_integrable, nijenhuis, quaternion_check,
    search_hypercomplex_triples, signed_permutation_complex_structures, square_check,
    AlmostComplexStructure, AxiomCheck, HypercomplexTriple, StructureReport,
};
pub use lie::{basis_vector, InnerProduct, LieAlgebra, MetricLieAlgebra, ValidationReport, Violation};
pub use matrix::Matrix;
pub use rational::Rational;
pub use report::{build_report, Report, ReportData};
