//! Exact arithmetic over Q(√3): scalars, points, rotations and angle bookkeeping.
//!
//! Every value here is exact. Floating point appears only in the `to_f64`
//! helpers used for diagnostics and drawing.

mod angle;
mod point;
mod q3;

pub use angle::{
    angle_add, angle_sub, angle_trig, compare_angles, direction_cmp, AngleCalc, AngleMeasure,
    Rotation,
};
pub use point::{orientation, Point2};
pub use q3::{int, q3_sign, ratio, Q3Scalar};

/// Canonical arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("negative angle: {from} - {minus}")]
    NegativeAngle { from: AngleMeasure, minus: AngleMeasure },
}
