//! Exhaustive exact search for N-tilings of a triangle by copies of a tile.
//!
//! The uncovered part of the triangle is a set of simple polygons
//! ([`Frontier`]s). Each step fills the sharpest corner of one of them with
//! every tile placement that fits, and the search backtracks over those
//! choices. All geometry is exact in Q(√3).

mod frontier;
mod region;
mod search;
mod verify;

pub use frontier::{placements_at_corner, Corner, Frontier, Geometry, Placement};
pub(crate) use frontier::apply_placement;
pub use region::{build_region, Region};
pub use search::{explore_levels, search, SearchConfig, SearchResult, SearchStatus};
pub use verify::{boundary_rows, verify_tiling, verify_tiling_detailed};

use crate::numerics::{ratio, AngleMeasure, Point2, Q3Scalar, Rotation};
use crate::numtheory::Triple;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TilerError {
    #[error("candidate is rejected ({0}) and is not a search hook")]
    NotAccepted(String),
    #[error("corner angles sum to {0}, expected (3,3)")]
    AngleSum(AngleMeasure),
    #[error("side lengths are not integral")]
    NonIntegral,
    #[error("side BC does not close the triangle")]
    SideMismatch,
}

/// One placed copy of the tile.
///
/// The γ vertex sits at `anchor`; the β vertex at `anchor + R·(a, 0)` and
/// the α vertex at `anchor + R·(−b/2, (b/2)√3)`, where `R` includes the
/// reflection when `rot.mirrored` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlacedTile {
    pub anchor: Point2,
    pub rot: Rotation,
    pub mirrored: bool,
    pub tile: Triple,
    /// Direction of `R·(1, 0)` as an angle measure.
    pub dir: AngleMeasure,
}

impl PlacedTile {
    /// `[γ, β, α]` vertices.
    pub fn vertices(&self) -> [Point2; 3] {
        let a = Q3Scalar::from_int(self.tile.a as i64);
        let b = self.tile.b as i64;
        let pb = Point2::new(a, Q3Scalar::zero());
        let pa = Point2::new(Q3Scalar::from_rational(ratio(-b, 2)), Q3Scalar::from_parts(0, 1, b, 2));
        [
            self.anchor.clone(),
            &self.anchor + &self.rot.apply(&pb),
            &self.anchor + &self.rot.apply(&pa),
        ]
    }

    /// Vertices in counterclockwise order.
    pub fn ccw_vertices(&self) -> [Point2; 3] {
        let [g, b, a] = self.vertices();
        if self.mirrored {
            [g, a, b]
        } else {
            [g, b, a]
        }
    }
}

/// Exact area of one tile, `ab·√3/4`.
pub fn tile_area(t: &Triple) -> Q3Scalar {
    Q3Scalar::from_parts(0, 1, (t.a * t.b) as i64, 4)
}

/// Twice the signed area of a polygon.
pub(crate) fn doubled_area(pts: &[Point2]) -> Q3Scalar {
    let mut acc = Q3Scalar::zero();
    for i in 0..pts.len() {
        let j = (i + 1) % pts.len();
        acc = acc + pts[i].cross(&pts[j]);
    }
    acc
}

pub fn polygon_area(pts: &[Point2]) -> Q3Scalar {
    doubled_area(pts).scale(&ratio(1, 2))
}
