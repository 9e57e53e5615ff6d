//! Randomized invariant battery: generators for valid 3- and 4-dimensional
//! metric Lie algebras and the per-trial identity checks.
//!
//! Each family below satisfies the Jacobi identity by construction (abelian,
//! one-relator, the Euler rotation family, and semidirect sums whose derived
//! algebra is abelian), so every generated algebra passes validation and the
//! battery exercises the engine rather than the generator.

use liecurv::{
    basis_vector, levi_civita, pair_basis, ricci, riemann, scalar, sectional, CatalogId,
    InnerProduct, LieAlgebra, Matrix, MetricLieAlgebra, Rational,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x6c69_6563_7572_76)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(-3..=3), rng.random_range(1..=3))
}

fn nonzero_small_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    match rng.random_range(0..6u8) {
        0 => LieAlgebra::abelian(rng.random_range(3..=4)),
        // One nonzero bracket landing outside the span of its arguments.
        1 => LieAlgebra::from_bracket_table(3, &[(0, 1, 2, nonzero_small_rational(rng))])
            .expect("one-relator table is valid"),
        // Euler rotation family: [e1,e2]=c e3, [e2,e3]=a e1, [e3,e1]=b e2.
        2 => {
            let a = small_rational(rng);
            let b = small_rational(rng);
            let c = small_rational(rng);
            LieAlgebra::from_bracket_table(3, &[(0, 1, 2, c), (1, 2, 0, a), (0, 2, 1, -&b)])
                .expect("rotation table is valid")
        }
        // Plane semidirect line: e3 acts linearly on the abelian span(e1,e2).
        3 => {
            let mut entries = Vec::new();
            for target in 0..2 {
                for source in 0..2 {
                    let c = small_rational(rng);
                    if !c.is_zero() {
                        entries.push((source, 2, target, -c));
                    }
                }
            }
            LieAlgebra::from_bracket_table(3, &entries).expect("semidirect table is valid")
        }
        // Space semidirect line: e4 acts linearly on the abelian span(e1..e3).
        4 => {
            let mut entries = Vec::new();
            for target in 0..3 {
                for source in 0..3 {
                    let c = small_rational(rng);
                    if !c.is_zero() {
                        entries.push((source, 3, target, -c));
                    }
                }
            }
            LieAlgebra::from_bracket_table(4, &entries).expect("semidirect table is valid")
        }
        _ => {
            let id = CatalogId::ALL[rng.random_range(0..CatalogId::ALL.len())];
            liecurv::catalog(id).data.algebra().clone()
        }
    }
}

fn random_metric(rng: &mut ChaCha8Rng, dim: usize) -> InnerProduct {
    if rng.random_range(0..10u8) < 7 {
        return InnerProduct::identity(dim);
    }
    // A^T A plus a positive diagonal is symmetric positive definite for any
    // integer A.
    let entries: Vec<Rational> = (0..dim * dim)
        .map(|_| Rational::int(rng.random_range(-2..=2)))
        .collect();
    let a = Matrix::new(dim, dim, entries).expect("square by construction");
    let mut gram = a.transpose().mul(&a).expect("dimensions agree");
    for k in 0..dim {
        let bumped = gram.at(k, k) + &Rational::int(rng.random_range(1..=3));
        gram.set(k, k, bumped);
    }
    InnerProduct::new(gram).expect("positive definite by construction")
}

pub fn random_trial(rng: &mut ChaCha8Rng) -> MetricLieAlgebra {
    let algebra = random_algebra(rng);
    let metric = random_metric(rng, algebra.dim());
    MetricLieAlgebra::new(algebra, metric).expect("generated data is valid")
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rational> {
    (0..dim)
        .map(|_| Rational::int(rng.random_range(-2..=2)))
        .collect()
}

/// Runs every invariant check on one metric Lie algebra. Returns a
/// description of the first violated identity, if any.
pub fn run_trial(m: &MetricLieAlgebra, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = m.dim();
    let conn = levi_civita(m);
    if !conn.is_torsion_free(m.algebra()) {
        return Err(format!("torsion-free identity failed on {m:?}"));
    }
    if !conn.is_metric_compatible(m.metric()) {
        return Err(format!("metric compatibility failed on {m:?}"));
    }

    let tensor = riemann(&conn, m.algebra());
    let gram = m.metric().matrix();

    // Fully lowered components g(R(e_i,e_j)e_k, e_l).
    let mut low = vec![Rational::zero(); n * n * n * n];
    let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut sum = Rational::zero();
                    for s in 0..n {
                        let c = tensor.component(i, j, k, s);
                        if !c.is_zero() {
                            sum += &(c * gram.at(s, l));
                        }
                    }
                    low[idx(i, j, k, l)] = sum;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let r = &low[idx(i, j, k, l)];
                    if *r != -&low[idx(j, i, k, l)] {
                        return Err(format!("antisymmetry in the first pair failed on {m:?}"));
                    }
                    if *r != -&low[idx(i, j, l, k)] {
                        return Err(format!("antisymmetry in the second pair failed on {m:?}"));
                    }
                    if *r != low[idx(k, l, i, j)] {
                        return Err(format!("pair-exchange symmetry failed on {m:?}"));
                    }
                }
            }
        }
    }

    // First Bianchi identity on the raw components.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let sum = &(tensor.component(i, j, k, l) + tensor.component(j, k, i, l))
                        + tensor.component(k, i, j, l);
                    if !sum.is_zero() {
                        return Err(format!("first Bianchi identity failed on {m:?}"));
                    }
                }
            }
        }
    }

    // Sectional curvature depends only on the spanned plane.
    let u = random_vector(rng, n);
    let v = random_vector(rng, n);
    if let Ok(k_uv) = sectional(&tensor, m.metric(), &u, &v) {
        let lambda = small_rational(rng);
        let alpha = nonzero_small_rational(rng);
        let sheared: Vec<Rational> = u.iter().zip(&v).map(|(a, b)| a + &(&lambda * b)).collect();
        let scaled: Vec<Rational> = v.iter().map(|b| &alpha * b).collect();
        let k_swap = sectional(&tensor, m.metric(), &v, &u).expect("swap keeps the plane");
        let k_shear =
            sectional(&tensor, m.metric(), &sheared, &v).expect("shear keeps the plane");
        let k_scale =
            sectional(&tensor, m.metric(), &u, &scaled).expect("scaling keeps the plane");
        if k_swap != k_uv || k_shear != k_uv || k_scale != k_uv {
            return Err(format!("sectional plane invariance failed on {m:?}"));
        }
    }

    // Scalar curvature equals the metric trace of the Ricci form.
    let s = scalar(&tensor, m.metric());
    let ric = ricci(&tensor, m.metric());
    let g_inv = gram
        .inverse()
        .expect("square")
        .expect("positive definite metrics are invertible");
    let traced = g_inv.mul(&ric).expect("dimensions agree").trace().expect("square");
    if s != traced {
        return Err(format!("scalar-vs-Ricci-trace identity failed on {m:?}"));
    }

    // In an orthonormal basis the scalar curvature is twice the sum of the
    // basis-plane sectional curvatures.
    if m.metric().is_identity() {
        let mut sum = Rational::zero();
        for (i, j) in pair_basis(n) {
            let ei = basis_vector(n, i);
            let ej = basis_vector(n, j);
            sum += &sectional(&tensor, m.metric(), &ei, &ej).expect("orthonormal plane");
        }
        if s != &sum + &sum {
            return Err(format!("scalar-vs-sectional-sum identity failed on {m:?}"));
        }
    }

    Ok(())
}
