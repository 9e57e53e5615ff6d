//! Built-in catalog of four-dimensional metric Lie algebras.
//!
//! Five entries, each equipped with the inner product that makes the basis
//! `(X, Y, Z, W) = (e1, e2, e3, e4)` orthonormal:
//!
//! - `abelian` — every bracket vanishes (the flat reference case);
//! - `case1` — `[Y,Z]=W, [Z,W]=Y, [W,Y]=Z`, `X` central (a line plus a
//!   compact three-dimensional factor);
//! - `case2` — `[X,Z]=X, [Y,Z]=Y, [X,W]=Y, [Y,W]=−X`;
//! - `case3` — `[X,Y]=Y, [X,Z]=Z, [X,W]=W` (a real hyperbolic-space type);
//! - `case4` — `[X,Y]=Y, [X,Z]=½Z, [X,W]=½W, [Z,W]=½Y` (a complex
//!   hyperbolic-space type).
//!
//! Together they realize every curvature sign class the classifier knows:
//! flat, non-negative, and non-positive in three distinct solvable flavours.

use std::fmt;

use crate::error::Error;
use crate::lie::{InnerProduct, LieAlgebra, MetricLieAlgebra};
use crate::rational::Rational;

/// Names of the built-in examples, in canonical listing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogId {
    Abelian,
    Case1,
    Case2,
    Case3,
    Case4,
}

impl CatalogId {
    pub const ALL: [CatalogId; 5] = [
        CatalogId::Abelian,
        CatalogId::Case1,
        CatalogId::Case2,
        CatalogId::Case3,
        CatalogId::Case4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::Abelian => "abelian",
            CatalogId::Case1 => "case1",
            CatalogId::Case2 => "case2",
            CatalogId::Case3 => "case3",
            CatalogId::Case4 => "case4",
        }
    }

    pub fn from_name(name: &str) -> Option<CatalogId> {
        CatalogId::ALL.iter().copied().find(|id| id.name() == name)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One catalog item: the metric Lie algebra plus a human-readable summary
/// of its bracket relations in the `X, Y, Z, W` labels.
#[derive(Clone)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub data: MetricLieAlgebra,
    pub description: &'static str,
}

/// Returns the catalog entry for `id`. Every entry passes
/// [`LieAlgebra::validate`] and carries the identity metric.
pub fn catalog(id: CatalogId) -> CatalogEntry {
    let half = || Rational::new(1, 2);
    let one = Rational::one;
    // Sparse bracket components (i, j, k, c) with 0-based indices, i < j.
    let (brackets, description): (Vec<(usize, usize, usize, Rational)>, _) = match id {
        CatalogId::Abelian => (vec![], "all brackets vanish"),
        CatalogId::Case1 => (
            vec![(1, 2, 3, one()), (2, 3, 1, one()), (1, 3, 2, -one())],
            "[Y,Z]=W, [Z,W]=Y, [W,Y]=Z, X central",
        ),
        CatalogId::Case2 => (
            vec![
                (0, 2, 0, one()),
                (1, 2, 1, one()),
                (0, 3, 1, one()),
                (1, 3, 0, -one()),
            ],
            "[X,Z]=X, [Y,Z]=Y, [X,W]=Y, [Y,W]=-X",
        ),
        CatalogId::Case3 => (
            vec![(0, 1, 1, one()), (0, 2, 2, one()), (0, 3, 3, one())],
            "[X,Y]=Y, [X,Z]=Z, [X,W]=W",
        ),
        CatalogId::Case4 => (
            vec![
                (0, 1, 1, one()),
                (0, 2, 2, half()),
                (0, 3, 3, half()),
                (2, 3, 1, half()),
            ],
            "[X,Y]=Y, [X,Z]=1/2 Z, [X,W]=1/2 W, [Z,W]=1/2 Y",
        ),
    };
    let algebra = LieAlgebra::from_bracket_table(4, &brackets)
        .expect("catalog bracket tables are well-formed");
    let data = MetricLieAlgebra::new(algebra, InnerProduct::identity(4))
        .expect("catalog dimensions agree");
    CatalogEntry { id, data, description }
}

/// Looks an entry up by its name (`"abelian"`, `"case1"`, …).
pub fn catalog_by_name(name: &str) -> Result<CatalogEntry, Error> {
    CatalogId::from_name(name)
        .map(catalog)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))
}
