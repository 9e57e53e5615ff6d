//! Lie algebras over the rationals, and inner products on them.
//!
//! A [`LieAlgebra`] is a finite-dimensional algebra described entirely by
//! its structure constants `c^k_{ij}` in the convention
//! `[e_i, e_j] = Σ_k c^k_{ij} e_k` (indices 0-based in code, printed
//! 1-based). Nothing is assumed about the table at construction time;
//! [`LieAlgebra::validate`] checks antisymmetry and the Jacobi identity and
//! reports every violation with its indices.

use std::fmt;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Lie algebra given by structure constants `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// Flat `(i, j, k)` table of size `dim³`.
    constants: Vec<Rational>,
}

impl LieAlgebra {
    /// Builds an algebra from a full `dim³` structure-constant table laid
    /// out as `constants[(i*dim + j)*dim + k] = c^k_{ij}`.
    pub fn new(dim: usize, constants: Vec<Rational>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "expected {} structure constants for dimension {dim}, got {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        Ok(LieAlgebra { dim, constants })
    }

    /// The abelian algebra: every bracket vanishes.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            constants: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Builds an algebra from sparse bracket components with `i < j`:
    /// each `(i, j, k, c)` entry declares that `[e_i, e_j]` has component
    /// `c` along `e_k`. The antisymmetric counterpart `c^k_{ji} = −c^k_{ij}`
    /// is filled in automatically. Indices are 0-based.
    pub fn from_bracket_table(
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
    ) -> Result<Self, Error> {
        let mut algebra = LieAlgebra::abelian(dim);
        if dim == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        for &(i, j, k, ref c) in entries {
            if i >= j {
                return Err(Error::Shape(format!(
                    "bracket entries must have i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if j >= dim || k >= dim {
                return Err(Error::Shape(format!(
                    "bracket index out of range for dimension {dim}: ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            let idx = algebra.index(i, j, k);
            algebra.constants[idx] = &algebra.constants[idx] + c;
            let idx = algebra.index(j, i, k);
            algebra.constants[idx] = &algebra.constants[idx] - c;
        }
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// The structure constant `c^k_{ij}`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[self.index(i, j, k)]
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| self.structure_constant(i, j, k).clone())
            .collect()
    }

    /// `[u, v]` for arbitrary coefficient vectors, by bilinear extension.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::Shape(format!(
                "bracket arguments must have length {}, got {} and {}",
                self.dim,
                u.len(),
                v.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let factor = ui * vj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *slot += c * &factor;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks antisymmetry (`c^k_{ij} = −c^k_{ji}`, in particular
    /// `[e_i, e_i] = 0`) and the Jacobi identity
    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0`
    /// on every index combination, collecting all violations in
    /// deterministic index order.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.dim;
        for i in 0..n {
            for j in 0..=i {
                for k in 0..n {
                    let sum = self.structure_constant(i, j, k) + self.structure_constant(j, i, k);
                    if !sum.is_zero() {
                        violations.push(Violation::Antisymmetry { i: j, j: i, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut cyclic = self
                        .bracket(&self.bracket_basis(i, j), &basis_vector(n, k))
                        .expect("dimensions agree");
                    let second = self
                        .bracket(&self.bracket_basis(j, k), &basis_vector(n, i))
                        .expect("dimensions agree");
                    let third = self
                        .bracket(&self.bracket_basis(k, i), &basis_vector(n, j))
                        .expect("dimensions agree");
                    for l in 0..n {
                        cyclic[l] = &cyclic[l] + &second[l] + &third[l];
                    }
                    for (l, value) in cyclic.iter().enumerate() {
                        if !value.is_zero() {
                            violations.push(Violation::Jacobi {
                                i,
                                j,
                                k,
                                l,
                                residual: value.clone(),
                            });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

/// Standard basis vector `e_k`.
pub fn basis_vector(dim: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[k] = Rational::one();
    v
}

/// A single failed identity found by [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `c^k_{ij} + c^k_{ji} ≠ 0`.
    Antisymmetry { i: usize, j: usize, k: usize },
    /// The cyclic Jacobi sum for `(e_i, e_j, e_k)` has a nonzero component
    /// along `e_l`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residual: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => write!(
                f,
                "antisymmetry violated at (i,j,k)=({},{},{})",
                i + 1,
                j + 1,
                k + 1
            ),
            Violation::Jacobi { i, j, k, l, residual } => write!(
                f,
                "Jacobi identity violated at (i,j,k)=({},{},{}): component e{} residual {}",
                i + 1,
                j + 1,
                k + 1,
                l + 1,
                residual
            ),
        }
    }
}

/// Outcome of [`LieAlgebra::validate`]: empty means the table is a genuine
/// Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first() {
            None => write!(f, "valid Lie algebra"),
            Some(first) => {
                write!(f, "{first}")?;
                if self.violations.len() > 1 {
                    write!(f, " (+{} more)", self.violations.len() - 1)?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for ValidationReport {}

/// Positive definite symmetric bilinear form, stored as its Gram matrix in
/// the chosen basis. Both properties are verified exactly at construction:
/// symmetry entrywise, definiteness through Sylvester's criterion (all
/// leading principal minors positive).
#[derive(Clone, PartialEq, Eq)]
pub struct InnerProduct {
    gram: Matrix,
}

impl InnerProduct {
    /// The standard inner product making the basis orthonormal.
    pub fn identity(dim: usize) -> Self {
        InnerProduct {
            gram: Matrix::identity(dim),
        }
    }

    pub fn new(gram: Matrix) -> Result<Self, Error> {
        if !gram.is_square() {
            return Err(Error::Shape("metric must be a square matrix".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::Shape("metric must be symmetric".into()));
        }
        for (idx, minor) in gram.leading_principal_minors()?.into_iter().enumerate() {
            if !minor.is_positive() {
                return Err(Error::NotPositiveDefinite {
                    order: idx + 1,
                    minor,
                });
            }
        }
        Ok(InnerProduct { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.gram
    }

    pub fn is_identity(&self) -> bool {
        self.gram == Matrix::identity(self.dim())
    }

    /// `g(u, v) = uᵀ G v`.
    pub fn pairing(&self, u: &[Rational], v: &[Rational]) -> Result<Rational, Error> {
        let gv = self.gram.apply(v)?;
        if u.len() != gv.len() {
            return Err(Error::Shape(format!(
                "pairing arguments must have length {}, got {}",
                self.dim(),
                u.len()
            )));
        }
        Ok(u.iter().zip(&gv).map(|(a, b)| a * b).sum())
    }
}

impl fmt::Debug for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InnerProduct({:?})", self.gram)
    }
}

/// A Lie algebra together with an inner product of matching dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    metric: InnerProduct,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, metric: InnerProduct) -> Result<Self, Error> {
        if algebra.dim() != metric.dim() {
            return Err(Error::Shape(format!(
                "algebra has dimension {} but metric has dimension {}",
                algebra.dim(),
                metric.dim()
            )));
        }
        Ok(MetricLieAlgebra { algebra, metric })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &InnerProduct {
        &self.metric
    }
}
