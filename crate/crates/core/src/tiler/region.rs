use super::{polygon_area, TilerError};
use crate::numerics::{angle_trig, AngleMeasure, Point2, Q3Scalar, Rational};
use crate::numtheory::Triple;
use crate::shapes::{ShapeCandidate, Verdict};

/// A counterclockwise polygon to be tiled, with its corner angles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub vertices: Vec<Point2>,
    pub corner_angles: Vec<AngleMeasure>,
    /// The tile, normalized to `a < b`; angle measures refer to this frame.
    pub tile: Triple,
}

impl Region {
    /// Triangle with corners `A`, `B`, `C` of the given angles and the given
    /// `|BC|`, `|AC|`, `|AB|`. `A` is at the origin and `C` on the positive x-axis.
    pub fn triangle(
        tile: Triple,
        angles: [AngleMeasure; 3],
        sides: [u64; 3],
    ) -> Result<Region, TilerError> {
        let [ang_a, ang_b, ang_c] = angles;
        let sum = ang_a + ang_b + ang_c;
        if sum != AngleMeasure::PI {
            return Err(TilerError::AngleSum(sum));
        }
        let [bc, ac, ab] = sides;
        let a = Point2::origin();
        let c = Point2::new(Q3Scalar::from_int(ac as i64), Q3Scalar::zero());
        let b = angle_trig(ang_a, &tile).unit().scale(&Q3Scalar::from_int(ab as i64));
        let bc2 = (&b - &c).norm2();
        if bc2 != Q3Scalar::from_int((bc * bc) as i64) {
            return Err(TilerError::SideMismatch);
        }
        Ok(Region { vertices: vec![a, c, b], corner_angles: vec![ang_a, ang_c, ang_b], tile })
    }

    /// The triangle similar to the tile with ratio `k`.
    pub fn similar(tile: Triple, k: u64) -> Region {
        let (t, _) = tile.normalized();
        let angles = [AngleMeasure::ALPHA, AngleMeasure::BETA, AngleMeasure::GAMMA];
        Region::triangle(t, angles, [k * t.a, k * t.b, k * t.c]).expect("similar triangle closes")
    }

    pub fn area(&self) -> Q3Scalar {
        polygon_area(&self.vertices)
    }

    /// Largest side length, rounded up.
    pub fn max_side(&self) -> u64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let d = &self.vertices[(i + 1) % n] - &self.vertices[i];
                let l2 = d.norm2().to_f64();
                l2.sqrt().ceil() as u64 + 1
            })
            .max()
            .unwrap_or(0)
    }

    pub fn side_length(&self, i: usize) -> Option<Rational> {
        let n = self.vertices.len();
        let d = &self.vertices[(i + 1) % n] - &self.vertices[i];
        let l2 = d.norm2();
        let r = l2.as_rational()?;
        let (num, den) = (r.numer(), r.denom());
        let (sn, sd) = (num.sqrt(), den.sqrt());
        (&sn * &sn == *num && &sd * &sd == *den).then(|| Rational::new(sn, sd))
    }

    pub fn side_length_int(&self, i: usize) -> Option<u64> {
        let l = self.side_length(i)?;
        if l.is_integer() {
            u64::try_from(l.to_integer()).ok()
        } else {
            None
        }
    }
}

/// The triangle of an accepted candidate (or one whose rejection is a search hook).
pub fn build_region(c: &ShapeCandidate) -> Result<Region, TilerError> {
    if let Verdict::Reject(r) = &c.verdict {
        if !r.is_tiler_hook() {
            return Err(TilerError::NotAccepted(r.to_string()));
        }
    }
    if !c.sides_integral() {
        return Err(TilerError::NonIntegral);
    }
    let (bc, ac, ab) = c.side_lengths();
    Region::triangle(c.tile, c.angles(), [bc.to_integer(), ac.to_integer(), ab.to_integer()])
}
