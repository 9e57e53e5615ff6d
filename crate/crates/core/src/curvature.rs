//! Levi-Civita connection and curvature of a metric Lie algebra.
//!
//! Everything here works on left-invariant data: a vector is a constant
//! coefficient vector in the chosen basis, so directional derivatives of
//! coefficients vanish and the Koszul formula collapses to an algebraic
//! expression in the structure constants and the Gram matrix:
//!
//! ```text
//! 2 g(∇_{e_i} e_j, e_k) = g([e_i,e_j],e_k) − g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
//! ```
//!
//! Curvature follows the sign convention
//! `R(U,V)W = ∇_U ∇_V W − ∇_V ∇_U W − ∇_{[U,V]} W`, under which the round
//! sphere has positive sectional curvature. Sectional curvature divides by
//! the plane's Gram determinant, Ricci is the trace `Σ_i ⟨R(e_i, ·) ·, e^i⟩`,
//! and scalar curvature is the g-trace of Ricci — equivalently twice the sum
//! of the sectional curvatures of the basis planes when the basis is
//! orthonormal.

use crate::error::Error;
use crate::lie::{InnerProduct, LieAlgebra, MetricLieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Levi-Civita connection in Christoffel form:
/// `∇_{e_i} e_j = Σ_k Γ^k_{ij} e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Connection {
    dim: usize,
    /// Flat `(i, j, k)` table of size `dim³`.
    gamma: Vec<Rational>,
}

impl Connection {
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// The Christoffel coefficient `Γ^k_{ij}`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.gamma[self.index(i, j, k)]
    }

    /// `∇_{e_i} e_j` as a coefficient vector.
    pub fn derivative_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| self.gamma(i, j, k).clone())
            .collect()
    }

    /// `∇_u v` for constant coefficient vectors, by bilinearity.
    pub fn derivative(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::Shape(format!(
                "connection arguments must have length {}, got {} and {}",
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
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        *slot += g * &factor;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Torsion-freeness on the frame: `Γ^k_{ij} − Γ^k_{ji} = c^k_{ij}`.
    pub fn is_torsion_free(&self, algebra: &LieAlgebra) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    &(self.gamma(i, j, k) - self.gamma(j, i, k))
                        == algebra.structure_constant(i, j, k)
                })
            })
        })
    }

    /// Metric compatibility on the frame:
    /// `g(∇_{e_i} e_j, e_k) + g(e_j, ∇_{e_i} e_k) = 0` for all `i, j, k`
    /// (the frame pairings are constant, so their derivative vanishes).
    pub fn is_metric_compatible(&self, metric: &InnerProduct) -> bool {
        let n = self.dim;
        let g = metric.matrix();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let mut sum = Rational::zero();
                    for l in 0..n {
                        sum += &(self.gamma(i, j, l) * g.at(l, k));
                        sum += &(self.gamma(i, k, l) * g.at(j, l));
                    }
                    sum.is_zero()
                })
            })
        })
    }
}

/// Computes the Levi-Civita connection of `m` through the Koszul formula.
///
/// For each pair `(i, j)` the formula gives the covector
/// `k ↦ 2 g(∇_{e_i} e_j, e_k)`; applying the inverse Gram matrix turns it
/// into the coefficients `Γ^k_{ij}`. With the identity metric this reduces
/// to `Γ^k_{ij} = (c^k_{ij} − c^i_{jk} + c^j_{ki}) / 2`.
pub fn levi_civita(m: &MetricLieAlgebra) -> Connection {
    let n = m.dim();
    let algebra = m.algebra();
    let g = m.metric().matrix();
    let g_inv = g
        .inverse()
        .expect("gram matrix is square")
        .expect("positive definite matrices are invertible");
    let half = Rational::new(1, 2);
    let mut gamma = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            // rhs[k] = g([e_i,e_j],e_k) − g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
            let mut rhs = vec![Rational::zero(); n];
            for (k, slot) in rhs.iter_mut().enumerate() {
                let mut sum = Rational::zero();
                for l in 0..n {
                    sum += &(algebra.structure_constant(i, j, l) * g.at(l, k));
                    sum -= &(algebra.structure_constant(j, k, l) * g.at(l, i));
                    sum += &(algebra.structure_constant(k, i, l) * g.at(l, j));
                }
                *slot = sum;
            }
            let coeffs = g_inv.apply(&rhs).expect("dimensions agree");
            for (k, value) in coeffs.into_iter().enumerate() {
                gamma[(i * n + j) * n + k] = value * &half;
            }
        }
    }
    Connection { dim: n, gamma }
}

/// Curvature tensor in components: `R(e_i, e_j) e_k = Σ_l R^l_{ijk} e_l`.
#[derive(Clone, PartialEq, Eq)]
pub struct CurvatureTensor {
    dim: usize,
    /// Flat `(i, j, k, l)` table of size `dim⁴`.
    r: Vec<Rational>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim + l
    }

    /// The component `R^l_{ijk}`.
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.r[self.index(i, j, k, l)]
    }

    /// `R(e_i, e_j) e_k` as a coefficient vector.
    pub fn apply_basis(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        (0..self.dim)
            .map(|l| self.component(i, j, k, l).clone())
            .collect()
    }

    /// `R(u, v) w` by trilinear extension.
    pub fn apply(
        &self,
        u: &[Rational],
        v: &[Rational],
        w: &[Rational],
    ) -> Result<Vec<Rational>, Error> {
        let n = self.dim;
        if u.len() != n || v.len() != n || w.len() != n {
            return Err(Error::Shape(format!(
                "curvature arguments must have length {n}, got {}, {} and {}",
                u.len(),
                v.len(),
                w.len()
            )));
        }
        let mut out = vec![Rational::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui * vj;
                for (k, wk) in w.iter().enumerate() {
                    if wk.is_zero() {
                        continue;
                    }
                    let factor = &uv * wk;
                    for (l, slot) in out.iter_mut().enumerate() {
                        let c = self.component(i, j, k, l);
                        if !c.is_zero() {
                            *slot += c * &factor;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The lowered component `R_{ijkl} = g(R(e_i, e_j) e_k, e_l)`.
    pub fn lowered(&self, metric: &InnerProduct, i: usize, j: usize, k: usize, l: usize) -> Rational {
        let g = metric.matrix();
        let mut sum = Rational::zero();
        for m in 0..self.dim {
            let c = self.component(i, j, k, m);
            if !c.is_zero() {
                sum += &(c * g.at(m, l));
            }
        }
        sum
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Rational::is_zero)
    }
}

/// Computes the curvature tensor from a connection and the bracket:
///
/// ```text
/// R^l_{ijk} = Σ_m ( Γ^m_{jk} Γ^l_{im} − Γ^m_{ik} Γ^l_{jm} − c^m_{ij} Γ^l_{mk} )
/// ```
///
/// which is `∇_{e_i}∇_{e_j}e_k − ∇_{e_j}∇_{e_i}e_k − ∇_{[e_i,e_j]}e_k`
/// written out in components.
pub fn riemann(conn: &Connection, algebra: &LieAlgebra) -> CurvatureTensor {
    let n = conn.dim();
    assert_eq!(
        n,
        algebra.dim(),
        "connection and algebra dimensions must agree"
    );
    let mut r = vec![Rational::zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let a = conn.gamma(j, k, m);
                    let b = conn.gamma(i, k, m);
                    let c = algebra.structure_constant(i, j, m);
                    if a.is_zero() && b.is_zero() && c.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        let mut term = Rational::zero();
                        if !a.is_zero() {
                            term += &(a * conn.gamma(i, m, l));
                        }
                        if !b.is_zero() {
                            term -= &(b * conn.gamma(j, m, l));
                        }
                        if !c.is_zero() {
                            term -= &(c * conn.gamma(m, k, l));
                        }
                        if !term.is_zero() {
                            let idx = ((i * n + j) * n + k) * n + l;
                            r[idx] = &r[idx] + &term;
                        }
                    }
                }
            }
        }
    }
    CurvatureTensor { dim: n, r }
}

/// `R(v, u) u` — the curvature applied in the arrangement whose pairing
/// with `v` gives the (unnormalized) sectional curvature of span(u, v).
pub fn r_v_u_u(
    tensor: &CurvatureTensor,
    u: &[Rational],
    v: &[Rational],
) -> Result<Vec<Rational>, Error> {
    tensor.apply(v, u, u)
}

/// Sectional curvature of the plane spanned by `u` and `v`:
/// `K(u, v) = g(R(v,u)u, v) / (g(u,u) g(v,v) − g(u,v)²)`.
///
/// Fails with [`Error::DegeneratePlane`] when the denominator vanishes,
/// i.e. when `u` and `v` are linearly dependent (the metric is positive
/// definite, so the Gram determinant vanishes only in that case).
pub fn sectional(
    tensor: &CurvatureTensor,
    metric: &InnerProduct,
    u: &[Rational],
    v: &[Rational],
) -> Result<Rational, Error> {
    let gram = &(&metric.pairing(u, u)? * &metric.pairing(v, v)?)
        - &{
            let uv = metric.pairing(u, v)?;
            &uv * &uv
        };
    if gram.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    let rvuu = r_v_u_u(tensor, u, v)?;
    Ok(metric.pairing(&rvuu, v)? / gram)
}

/// Ricci form `Ric(e_j, e_k) = Σ_i ⟨component i of R(e_i, e_j) e_k⟩`,
/// i.e. the trace of `v ↦ R(v, e_j) e_k`.
///
/// The contraction is metric-independent, but it coincides with the g-trace
/// `Σ g^{il} g(R(e_i,e_j)e_k, e_l)` used in the orthonormal definition;
/// `metric` is kept in the signature for the dimension check and symmetry
/// documentation.
pub fn ricci(tensor: &CurvatureTensor, metric: &InnerProduct) -> Matrix {
    let n = tensor.dim();
    assert_eq!(n, metric.dim(), "tensor and metric dimensions must agree");
    let mut out = Matrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let mut sum = Rational::zero();
            for i in 0..n {
                sum += tensor.component(i, j, k, i);
            }
            out.set(j, k, sum);
        }
    }
    out
}

/// Scalar curvature: the g-trace of the Ricci form,
/// `S = Σ_{jk} g^{jk} Ric(e_j, e_k)`.
///
/// In an orthonormal basis this is `Σ_j Ric(e_j, e_j)`, which also equals
/// `2 Σ_{i<j} K(e_i, e_j)` — twice the sum of the sectional curvatures of
/// the basis planes.
pub fn scalar(tensor: &CurvatureTensor, metric: &InnerProduct) -> Rational {
    let ric = ricci(tensor, metric);
    let g_inv = metric
        .matrix()
        .inverse()
        .expect("gram matrix is square")
        .expect("positive definite matrices are invertible");
    let mut sum = Rational::zero();
    for j in 0..metric.dim() {
        for k in 0..metric.dim() {
            let entry = ric.at(j, k);
            if !entry.is_zero() {
                sum += &(g_inv.at(j, k) * entry);
            }
        }
    }
    sum
}

/// Lexicographic list of index pairs `(i, j)` with `i < j` — the bivector
/// basis ordering used by [`CurvatureOperator`] and [`plucker`].
pub fn pair_basis(dim: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(dim * (dim - 1) / 2);
    for i in 0..dim {
        for j in i + 1..dim {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Plücker coordinates of the bivector `u ∧ v`:
/// `p_{ij} = u_i v_j − u_j v_i` listed over [`pair_basis`].
pub fn plucker(u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, Error> {
    if u.len() != v.len() {
        return Err(Error::Shape(format!(
            "plücker arguments must have equal length, got {} and {}",
            u.len(),
            v.len()
        )));
    }
    Ok(pair_basis(u.len())
        .into_iter()
        .map(|(i, j)| &(&u[i] * &v[j]) - &(&u[j] * &v[i]))
        .collect())
}

/// Curvature operator on bivectors: the symmetric `N × N` matrix `M`
/// (`N = dim·(dim−1)/2`) over the [`pair_basis`] ordering with
///
/// ```text
/// pᵀ M p = K(u, v) · (g(u,u) g(v,v) − g(u,v)²)    for p = plucker(u, v).
/// ```
///
/// Entrywise `M[(i,j),(k,l)] = −R_{ijkl}` (lowered components), so with an
/// orthonormal basis the diagonal entry at `(i, j)` is exactly
/// `K(e_i, e_j)`; in general it is `K(e_i,e_j)` times the Gram determinant
/// of the basis pair.
#[derive(Clone, PartialEq, Eq)]
pub struct CurvatureOperator {
    dim: usize,
    matrix: Matrix,
}

impl CurvatureOperator {
    /// Dimension of the underlying algebra (not of the operator matrix).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        pair_basis(self.dim)
    }

    /// Position of the basis pair `(i, j)`, `i < j`, in the operator's
    /// index ordering.
    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        pair_basis(self.dim).iter().position(|&p| p == (i, j))
    }

    /// Evaluates the quadratic form `pᵀ M p` on a bivector coordinate
    /// vector.
    pub fn quadratic_form(&self, p: &[Rational]) -> Result<Rational, Error> {
        let mp = self.matrix.apply(p)?;
        Ok(p.iter().zip(&mp).map(|(a, b)| a * b).sum())
    }
}

/// Assembles the curvature operator from the lowered tensor,
/// symmetrizing over the pair exchange `(i,j) ↔ (k,l)` (an exact identity
/// for genuine curvature tensors, kept explicit for robustness).
pub fn curvature_operator(tensor: &CurvatureTensor, metric: &InnerProduct) -> CurvatureOperator {
    let pairs = pair_basis(tensor.dim());
    let n = pairs.len();
    let half = Rational::new(1, 2);
    let mut m = Matrix::zeros(n, n);
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            let forward = tensor.lowered(metric, i, j, k, l);
            let backward = tensor.lowered(metric, k, l, i, j);
            m.set(a, b, -(&(forward + backward) * &half));
        }
    }
    CurvatureOperator {
        dim: tensor.dim(),
        matrix: m,
    }
}
