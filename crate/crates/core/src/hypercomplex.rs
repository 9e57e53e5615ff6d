//! Almost complex structures, integrability, and hypercomplex triples.
//!
//! An almost complex structure on the algebra is a linear map `J` with
//! `J² = −Id`. On a Lie algebra (left-invariant setting) integrability is
//! equivalent to the vanishing of the Nijenhuis tensor
//!
//! ```text
//! N(X, Y) = [JX, JY] − [X, Y] − J([X, JY]) − J([JX, Y])
//! ```
//!
//! on all pairs of basis vectors (it is bilinear and antisymmetric, so
//! basis pairs suffice). A hypercomplex triple is `(J1, J2, J3)` with each
//! `J_a² = −Id`, the quaternion relations `J1·J2 = J3 = −J2·J1`, and each
//! `J_a` integrable. A metric is hyper-Hermitian for the triple when every
//! `J_a` is an isometry: `g(J_a X, J_a Y) = g(X, Y)`, i.e. `J_aᵀ G J_a = G`.
//!
//! [`full_report`] evaluates all eleven axioms and reports each one by a
//! stable label, so a failing structure can be pinpointed exactly.
//! [`search_hypercomplex_triples`] enumerates the signed-permutation
//! candidates (`J e_i = ±e_{π(i)}`) and returns every triple that passes
//! the complete axiom list.

use crate::error::Error;
use crate::lie::{InnerProduct, LieAlgebra, MetricLieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// A linear endomorphism intended as an almost complex structure.
///
/// The constructor only requires squareness; whether `J² = −Id` actually
/// holds is a checkable axiom ([`square_check`]), not a precondition, so
/// user-supplied candidates can be loaded and then diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    matrix: Matrix,
}

impl AlmostComplexStructure {
    pub fn new(matrix: Matrix) -> Result<Self, Error> {
        if !matrix.is_square() {
            return Err(Error::Shape(format!(
                "complex structure must be square, got {}×{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(AlmostComplexStructure { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Applies `J` to a coefficient vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        self.matrix.apply(v)
    }
}

/// An ordered triple of candidate complex structures of equal dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercomplexTriple {
    j1: AlmostComplexStructure,
    j2: AlmostComplexStructure,
    j3: AlmostComplexStructure,
}

impl HypercomplexTriple {
    pub fn new(
        j1: AlmostComplexStructure,
        j2: AlmostComplexStructure,
        j3: AlmostComplexStructure,
    ) -> Result<Self, Error> {
        if j1.dim() != j2.dim() || j2.dim() != j3.dim() {
            return Err(Error::Shape(format!(
                "triple members must share one dimension, got {}, {}, {}",
                j1.dim(),
                j2.dim(),
                j3.dim()
            )));
        }
        Ok(HypercomplexTriple { j1, j2, j3 })
    }

    pub fn dim(&self) -> usize {
        self.j1.dim()
    }

    pub fn j1(&self) -> &AlmostComplexStructure {
        &self.j1
    }

    pub fn j2(&self) -> &AlmostComplexStructure {
        &self.j2
    }

    pub fn j3(&self) -> &AlmostComplexStructure {
        &self.j3
    }

    pub fn members(&self) -> [&AlmostComplexStructure; 3] {
        [&self.j1, &self.j2, &self.j3]
    }
}

/// `J² = −Id`.
pub fn square_check(j: &AlmostComplexStructure) -> bool {
    let m = j.matrix();
    m.mul(m).expect("structure matrices are square") == Matrix::identity(j.dim()).neg()
}

/// The quaternion relations between the members of a triple:
/// `J1·J2 = J3` and `J2·J1 = −J3` (anticommutation follows).
pub fn quaternion_check(triple: &HypercomplexTriple) -> bool {
    let (a, b, c) = (
        triple.j1().matrix(),
        triple.j2().matrix(),
        triple.j3().matrix(),
    );
    let ab = a.mul(b).expect("triple dimensions agree");
    let ba = b.mul(a).expect("triple dimensions agree");
    &ab == c && ba == c.neg()
}

/// The Nijenhuis tensor
/// `N(u, v) = [Ju, Jv] − [u, v] − J([u, Jv]) − J([Ju, v])`
/// as a coefficient vector.
pub fn nijenhuis(
    algebra: &LieAlgebra,
    j: &AlmostComplexStructure,
    u: &[Rational],
    v: &[Rational],
) -> Result<Vec<Rational>, Error> {
    let ju = j.apply(u)?;
    let jv = j.apply(v)?;
    let term1 = algebra.bracket(&ju, &jv)?;
    let term2 = algebra.bracket(u, v)?;
    let term3 = j.apply(&algebra.bracket(u, &jv)?)?;
    let term4 = j.apply(&algebra.bracket(&ju, v)?)?;
    Ok(term1
        .into_iter()
        .zip(term2)
        .zip(term3)
        .zip(term4)
        .map(|(((a, b), c), d)| a - b - c - d)
        .collect())
}

/// Whether the Nijenhuis tensor of `j` vanishes identically
/// (checked on basis pairs; `N` is bilinear and antisymmetric).
pub fn is_integrable(algebra: &LieAlgebra, j: &AlmostComplexStructure) -> Result<bool, Error> {
    let n = algebra.dim();
    if j.dim() != n {
        return Err(Error::Shape(format!(
            "structure dimension {} does not match algebra dimension {n}",
            j.dim()
        )));
    }
    for a in 0..n {
        for b in a + 1..n {
            let u = crate::lie::basis_vector(n, a);
            let v = crate::lie::basis_vector(n, b);
            if !nijenhuis(algebra, j, &u, &v)?.iter().all(Rational::is_zero) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `j` is an isometry of the inner product: `Jᵀ G J = G`.
pub fn is_hyper_hermitian(metric: &InnerProduct, j: &AlmostComplexStructure) -> Result<bool, Error> {
    if j.dim() != metric.dim() {
        return Err(Error::Shape(format!(
            "structure dimension {} does not match metric dimension {}",
            j.dim(),
            metric.dim()
        )));
    }
    let m = j.matrix();
    let conjugated = m.transpose().mul(metric.matrix())?.mul(m)?;
    Ok(&conjugated == metric.matrix())
}

/// One named axiom with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub label: &'static str,
    pub passed: bool,
}

/// Outcome of the full eleven-axiom evaluation of a triple:
/// squares, quaternion relations, integrability, and isometry, in a fixed
/// order with stable labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub checks: Vec<AxiomCheck>,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Squares, quaternion relations and integrability — the
    /// metric-independent part.
    pub fn is_hypercomplex(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| !c.label.starts_with("g("))
            .all(|c| c.passed)
    }

    /// The three isometry axioms.
    pub fn is_metric_compatible(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.label.starts_with("g("))
            .all(|c| c.passed)
    }
}

/// Evaluates every axiom of a candidate triple against a metric Lie
/// algebra and reports each outcome under a stable label:
///
/// `J1^2 = -Id`, `J2^2 = -Id`, `J3^2 = -Id`, `J1*J2 = J3`, `J2*J1 = -J3`,
/// `N(J1) = 0`, `N(J2) = 0`, `N(J3) = 0`, `g(J1.,J1.) = g`,
/// `g(J2.,J2.) = g`, `g(J3.,J3.) = g`.
pub fn full_report(
    m: &MetricLieAlgebra,
    triple: &HypercomplexTriple,
) -> Result<StructureReport, Error> {
    if triple.dim() != m.dim() {
        return Err(Error::Shape(format!(
            "triple dimension {} does not match algebra dimension {}",
            triple.dim(),
            m.dim()
        )));
    }
    let square_labels = ["J1^2 = -Id", "J2^2 = -Id", "J3^2 = -Id"];
    let nijenhuis_labels = ["N(J1) = 0", "N(J2) = 0", "N(J3) = 0"];
    let isometry_labels = ["g(J1.,J1.) = g", "g(J2.,J2.) = g", "g(J3.,J3.) = g"];
    let mut checks = Vec::with_capacity(11);
    for (j, label) in triple.members().into_iter().zip(square_labels) {
        checks.push(AxiomCheck {
            label,
            passed: square_check(j),
        });
    }
    checks.push(AxiomCheck {
        label: "J1*J2 = J3",
        passed: {
            let prod = triple.j1().matrix().mul(triple.j2().matrix())?;
            &prod == triple.j3().matrix()
        },
    });
    checks.push(AxiomCheck {
        label: "J2*J1 = -J3",
        passed: {
            let prod = triple.j2().matrix().mul(triple.j1().matrix())?;
            prod == triple.j3().matrix().neg()
        },
    });
    for (j, label) in triple.members().into_iter().zip(nijenhuis_labels) {
        checks.push(AxiomCheck {
            label,
            passed: is_integrable(m.algebra(), j)?,
        });
    }
    for (j, label) in triple.members().into_iter().zip(isometry_labels) {
        checks.push(AxiomCheck {
            label,
            passed: is_hyper_hermitian(m.metric(), j)?,
        });
    }
    Ok(StructureReport { checks })
}

/// All signed-permutation solutions of `J² = −Id`: maps with
/// `J e_a = ±e_{π(a)}` where `π` is a fixed-point-free involution and the
/// two signs of each 2-cycle multiply to −1. Empty in odd dimension.
///
/// In dimension 4 there are exactly 12 such structures (3 pairings × 2
/// sign choices per 2-cycle).
pub fn signed_permutation_complex_structures(dim: usize) -> Vec<AlmostComplexStructure> {
    if dim % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for matching in perfect_matchings(&(0..dim).collect::<Vec<_>>()) {
        let pairs = matching.len();
        for signs in 0..(1u32 << pairs) {
            let mut m = Matrix::zeros(dim, dim);
            for (idx, &(a, b)) in matching.iter().enumerate() {
                let s = if signs & (1 << idx) == 0 { 1 } else { -1 };
                // J e_a = s e_b and J e_b = −s e_a.
                m.set(b, a, Rational::int(s));
                m.set(a, b, Rational::int(-s));
            }
            out.push(AlmostComplexStructure { matrix: m });
        }
    }
    out
}

/// All partitions of `elems` into unordered pairs.
fn perfect_matchings(elems: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let mut out = Vec::new();
    for idx in 1..elems.len() {
        let partner = elems[idx];
        let rest: Vec<usize> = elems[1..]
            .iter()
            .copied()
            .filter(|&e| e != partner)
            .collect();
        for mut sub in perfect_matchings(&rest) {
            sub.insert(0, (first, partner));
            out.push(sub);
        }
    }
    out
}

/// Searches the signed-permutation candidates for complete hypercomplex
/// triples compatible with the metric.
///
/// Every returned triple satisfies all eleven axioms of [`full_report`]:
/// the members square to `−Id` by construction, `J3` is taken to be
/// `J1·J2` over anticommuting integrable pairs, and integrability and
/// isometry are verified for all three members.
pub fn search_hypercomplex_triples(
    m: &MetricLieAlgebra,
) -> Result<Vec<HypercomplexTriple>, Error> {
    let candidates = signed_permutation_complex_structures(m.dim());
    let mut admissible = Vec::new();
    for j in candidates {
        if is_integrable(m.algebra(), &j)? && is_hyper_hermitian(m.metric(), &j)? {
            admissible.push(j);
        }
    }
    let mut out = Vec::new();
    for (a, j1) in admissible.iter().enumerate() {
        for (b, j2) in admissible.iter().enumerate() {
            if a == b {
                continue;
            }
            let forward = j1.matrix().mul(j2.matrix())?;
            let backward = j2.matrix().mul(j1.matrix())?;
            if backward != forward.neg() {
                continue;
            }
            let j3 = AlmostComplexStructure { matrix: forward };
            let triple = HypercomplexTriple::new(j1.clone(), j2.clone(), j3)?;
            if full_report(m, &triple)?.all_passed() {
                out.push(triple);
            }
        }
    }
    Ok(out)
}
