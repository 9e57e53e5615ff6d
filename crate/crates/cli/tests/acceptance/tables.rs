//! Frozen connection and curvature tables for the catalog entries.
//!
//! Indices are 1-based basis positions. A `GammaEntry` `(i, j, k, v)` says
//! the covariant derivative of `e_j` along `e_i` has coefficient `v` on
//! `e_k`; a `RiemannEntry` `(i, j, k, l, v)` says `R(e_i, e_j) e_k` has
//! coefficient `v` on `e_l`, listed for `i < j` only (antisymmetry in the
//! first slot pair supplies the rest). Every combination not listed is
//! exactly zero. These tables were verified by hand before being frozen;
//! the engine must reproduce them entry for entry, zeros included.

pub type GammaEntry = (usize, usize, usize, &'static str);
pub type RiemannEntry = (usize, usize, usize, usize, &'static str);

pub const ABELIAN_GAMMA: &[GammaEntry] = &[];

pub const CASE1_GAMMA: &[GammaEntry] = &[
    (2, 3, 4, "1/2"),
    (2, 4, 3, "-1/2"),
    (3, 2, 4, "-1/2"),
    (3, 4, 2, "1/2"),
    (4, 2, 3, "1/2"),
    (4, 3, 2, "-1/2"),
];

pub const CASE2_GAMMA: &[GammaEntry] = &[
    (1, 1, 3, "-1"),
    (1, 3, 1, "1"),
    (2, 2, 3, "-1"),
    (2, 3, 2, "1"),
    (4, 1, 2, "-1"),
    (4, 2, 1, "1"),
];

pub const CASE3_GAMMA: &[GammaEntry] = &[
    (2, 1, 2, "-1"),
    (2, 2, 1, "1"),
    (3, 1, 3, "-1"),
    (3, 3, 1, "1"),
    (4, 1, 4, "-1"),
    (4, 4, 1, "1"),
];

pub const CASE4_GAMMA: &[GammaEntry] = &[
    (2, 1, 2, "-1"),
    (2, 2, 1, "1"),
    (2, 3, 4, "-1/4"),
    (2, 4, 3, "1/4"),
    (3, 1, 3, "-1/2"),
    (3, 2, 4, "-1/4"),
    (3, 3, 1, "1/2"),
    (3, 4, 2, "1/4"),
    (4, 1, 4, "-1/2"),
    (4, 2, 3, "1/4"),
    (4, 3, 2, "-1/4"),
    (4, 4, 1, "1/2"),
];

pub const ABELIAN_RIEMANN: &[RiemannEntry] = &[];

pub const CASE1_RIEMANN: &[RiemannEntry] = &[
    (2, 3, 2, 3, "-1/4"),
    (2, 3, 3, 2, "1/4"),
    (2, 4, 2, 4, "-1/4"),
    (2, 4, 4, 2, "1/4"),
    (3, 4, 3, 4, "-1/4"),
    (3, 4, 4, 3, "1/4"),
];

pub const CASE2_RIEMANN: &[RiemannEntry] = &[
    (1, 2, 1, 2, "1"),
    (1, 2, 2, 1, "-1"),
    (1, 3, 1, 3, "1"),
    (1, 3, 3, 1, "-1"),
    (2, 3, 2, 3, "1"),
    (2, 3, 3, 2, "-1"),
];

pub const CASE3_RIEMANN: &[RiemannEntry] = &[
    (1, 2, 1, 2, "1"),
    (1, 2, 2, 1, "-1"),
    (1, 3, 1, 3, "1"),
    (1, 3, 3, 1, "-1"),
    (1, 4, 1, 4, "1"),
    (1, 4, 4, 1, "-1"),
    (2, 3, 2, 3, "1"),
    (2, 3, 3, 2, "-1"),
    (2, 4, 2, 4, "1"),
    (2, 4, 4, 2, "-1"),
    (3, 4, 3, 4, "1"),
    (3, 4, 4, 3, "-1"),
];

pub const CASE4_RIEMANN: &[RiemannEntry] = &[
    (1, 2, 1, 2, "1"),
    (1, 2, 2, 1, "-1"),
    (1, 2, 3, 4, "1/4"),
    (1, 2, 4, 3, "-1/4"),
    (1, 3, 1, 3, "1/4"),
    (1, 3, 2, 4, "1/8"),
    (1, 3, 3, 1, "-1/4"),
    (1, 3, 4, 2, "-1/8"),
    (1, 4, 1, 4, "1/4"),
    (1, 4, 2, 3, "-1/8"),
    (1, 4, 3, 2, "1/8"),
    (1, 4, 4, 1, "-1/4"),
    (2, 3, 1, 4, "-1/8"),
    (2, 3, 2, 3, "7/16"),
    (2, 3, 3, 2, "-7/16"),
    (2, 3, 4, 1, "1/8"),
    (2, 4, 1, 3, "1/8"),
    (2, 4, 2, 4, "7/16"),
    (2, 4, 3, 1, "-1/8"),
    (2, 4, 4, 2, "-7/16"),
    (3, 4, 1, 2, "1/4"),
    (3, 4, 2, 1, "-1/4"),
    (3, 4, 3, 4, "7/16"),
    (3, 4, 4, 3, "-7/16"),
];

pub fn gamma_table(name: &str) -> &'static [GammaEntry] {
    match name {
        "abelian" => ABELIAN_GAMMA,
        "case1" => CASE1_GAMMA,
        "case2" => CASE2_GAMMA,
        "case3" => CASE3_GAMMA,
        "case4" => CASE4_GAMMA,
        other => panic!("no frozen connection table for `{other}`"),
    }
}

pub fn riemann_table(name: &str) -> &'static [RiemannEntry] {
    match name {
        "abelian" => ABELIAN_RIEMANN,
        "case1" => CASE1_RIEMANN,
        "case2" => CASE2_RIEMANN,
        "case3" => CASE3_RIEMANN,
        "case4" => CASE4_RIEMANN,
        other => panic!("no frozen curvature table for `{other}`"),
    }
}
