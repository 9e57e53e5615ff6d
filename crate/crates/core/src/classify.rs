//! Sign classification of sectional curvature.
//!
//! The curvature operator `M` on bivectors satisfies
//! `pᵀ M p = K(u,v) · Gram(u,v)` for `p = u ∧ v`, and the Gram factor is
//! positive on every genuine plane. Hence:
//!
//! * `M` positive semidefinite  ⟹  `K ≥ 0` everywhere,
//! * `M` negative semidefinite  ⟹  `K ≤ 0` everywhere,
//! * `M = 0`                    ⟹  flat.
//!
//! These are sufficient conditions (the decomposable bivectors are a
//! proper subvariety for `dim ≥ 4`, so an indefinite `M` does not by
//! itself prove mixed signs). When `M` is indefinite the classifier
//! searches actual planes for sectional values of both signs and only
//! reports `Mixed` with explicit witnesses in hand; if the search budget
//! runs out first it returns `Indeterminate` rather than guess.
//!
//! Semidefiniteness itself is decided exactly from the characteristic
//! polynomial: a symmetric rational matrix is positive semidefinite iff
//! the coefficients of its characteristic polynomial alternate in sign
//! (equivalently, `(−1)^{n−k} c_k ≥ 0` for all `k`), because its
//! eigenvalues are real.

use crate::curvature::{sectional, CurvatureOperator, CurvatureTensor};
use crate::error::Error;
use crate::lie::InnerProduct;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Sign of a semidefiniteness test: `Positive` means "all eigenvalues ≥ 0".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Exact semidefiniteness test for a symmetric rational matrix.
///
/// Computes the characteristic polynomial `c_0 + c_1 λ + … + λ^n` and
/// checks the sign-alternation criterion `(−1)^{n−k} c_k ≥ 0`
/// (for `Sign::Negative` the matrix is negated first). Symmetry is a
/// precondition: the criterion relies on the eigenvalues being real.
pub fn is_semidefinite(matrix: &Matrix, sign: Sign) -> Result<bool, Error> {
    if !matrix.is_square() {
        return Err(Error::Shape(format!(
            "semidefiniteness requires a square matrix, got {}×{}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    if !matrix.is_symmetric() {
        return Err(Error::Shape(
            "semidefiniteness test requires a symmetric matrix".to_string(),
        ));
    }
    let target = match sign {
        Sign::Positive => matrix.clone(),
        Sign::Negative => matrix.neg(),
    };
    let coeffs = target.char_poly()?;
    let n = coeffs.len() - 1;
    // char_poly(λ) = Π (λ − λ_i); all λ_i ≥ 0 iff the coefficients
    // alternate starting from the (monic) leading one.
    Ok(coeffs.iter().enumerate().all(|(k, c)| {
        if (n - k) % 2 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    }))
}

/// A plane with a recorded sectional curvature value, reported as evidence
/// for a `Mixed` classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
    pub value: Rational,
}

/// Outcome of sectional-curvature sign classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignClass {
    /// All curvature components vanish.
    Flat,
    /// `K ≥ 0` on every plane (certified by the operator).
    NonNegative,
    /// `K ≤ 0` on every plane (certified by the operator).
    NonPositive,
    /// Witness planes with strictly positive and strictly negative
    /// sectional curvature were found.
    Mixed {
        positive: Witness,
        negative: Witness,
    },
    /// The operator is indefinite but the plane search exhausted its
    /// budget without producing both signs.
    Indeterminate,
}

impl SignClass {
    /// Short lowercase label used in reports.
    pub fn label(&self) -> &'static str {
        match self {
            SignClass::Flat => "flat",
            SignClass::NonNegative => "non-negative",
            SignClass::NonPositive => "non-positive",
            SignClass::Mixed { .. } => "mixed",
            SignClass::Indeterminate => "indeterminate",
        }
    }
}

/// Tuning knobs for the witness search in [`classify_with`].
#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    /// Coefficients of candidate vectors range over `−bound ..= bound`.
    pub coefficient_bound: i64,
    /// Upper bound on the number of candidate planes examined.
    pub max_candidates: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            coefficient_bound: 1,
            max_candidates: 20_000,
        }
    }
}

/// Classifies the sign of sectional curvature with default search options.
pub fn classify(
    tensor: &CurvatureTensor,
    metric: &InnerProduct,
    operator: &CurvatureOperator,
) -> SignClass {
    classify_with(tensor, metric, operator, ClassifyOptions::default())
}

/// Classifies the sign of sectional curvature.
///
/// Decision order: zero operator ⟹ `Flat`; positive/negative semidefinite
/// operator ⟹ `NonNegative`/`NonPositive`; otherwise enumerate candidate
/// planes over small-integer vectors (canonicalized so the first nonzero
/// coefficient is positive) looking for exact witnesses of both signs.
pub fn classify_with(
    tensor: &CurvatureTensor,
    metric: &InnerProduct,
    operator: &CurvatureOperator,
    options: ClassifyOptions,
) -> SignClass {
    let m = operator.matrix();
    if m.is_zero() {
        return SignClass::Flat;
    }
    // The operator matrix is symmetric by construction, so the exact
    // eigenvalue-sign tests apply directly.
    if is_semidefinite(m, Sign::Positive).expect("operator matrix is symmetric") {
        return SignClass::NonNegative;
    }
    if is_semidefinite(m, Sign::Negative).expect("operator matrix is symmetric") {
        return SignClass::NonPositive;
    }

    let candidates = candidate_vectors(tensor.dim(), options.coefficient_bound);
    let mut positive: Option<Witness> = None;
    let mut negative: Option<Witness> = None;
    let mut examined = 0usize;
    'outer: for (a, u) in candidates.iter().enumerate() {
        for v in candidates.iter().skip(a + 1) {
            if examined >= options.max_candidates {
                break 'outer;
            }
            examined += 1;
            let k = match sectional(tensor, metric, u, v) {
                Ok(k) => k,
                Err(_) => continue, // dependent pair spans no plane
            };
            if k.is_positive() && positive.is_none() {
                positive = Some(Witness {
                    u: u.clone(),
                    v: v.clone(),
                    value: k,
                });
            } else if k.is_negative() && negative.is_none() {
                negative = Some(Witness {
                    u: u.clone(),
                    v: v.clone(),
                    value: k,
                });
            }
            if positive.is_some() && negative.is_some() {
                break 'outer;
            }
        }
    }
    match (positive, negative) {
        (Some(p), Some(n)) => SignClass::Mixed {
            positive: p,
            negative: n,
        },
        _ => SignClass::Indeterminate,
    }
}

/// All nonzero vectors with coefficients in `−bound ..= bound`,
/// canonicalized so the first nonzero coefficient is positive (each line
/// through the origin is represented once).
fn candidate_vectors(dim: usize, bound: i64) -> Vec<Vec<Rational>> {
    let radix = 2 * bound + 1;
    let mut out = Vec::new();
    let total = (0..dim).fold(1i64, |acc, _| acc.saturating_mul(radix));
    'next: for code in 0..total {
        let mut rest = code;
        let mut coeffs = Vec::with_capacity(dim);
        for _ in 0..dim {
            coeffs.push(rest % radix - bound);
            rest /= radix;
        }
        for &c in &coeffs {
            if c > 0 {
                break;
            }
            if c < 0 {
                continue 'next; // mirror image of an already-listed vector
            }
        }
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        out.push(coeffs.into_iter().map(Rational::int).collect());
    }
    out
}
