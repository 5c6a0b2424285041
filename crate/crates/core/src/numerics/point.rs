use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use super::{Q3Scalar, Rational};

/// A point (or vector) with exact Q(√3) coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Point2 {
    pub x: Q3Scalar,
    pub y: Q3Scalar,
}

impl Point2 {
    pub fn new(x: Q3Scalar, y: Q3Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn scale(&self, k: &Q3Scalar) -> Self {
        Point2 { x: &self.x * k, y: &self.y * k }
    }

    pub fn scale_rat(&self, k: &Rational) -> Self {
        Point2 { x: self.x.scale(k), y: self.y.scale(k) }
    }

    /// z-component of `self × o`.
    pub fn cross(&self, o: &Point2) -> Q3Scalar {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Point2) -> Q3Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm2(&self) -> Q3Scalar {
        self.dot(self)
    }

    /// Exact lexicographic order on (x, y).
    pub fn cmp_lex(&self, o: &Point2) -> Ordering {
        self.x.cmp_value(&o.x).then_with(|| self.y.cmp_value(&o.y))
    }

    /// Diagnostics only.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Sign of the turn `a → b → c` (+1 counterclockwise).
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> i32 {
    (b - a).cross(&(c - a)).sign()
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'a> Add<&'a Point2> for &'a Point2 {
    type Output = Point2;
    fn add(self, o: &Point2) -> Point2 {
        Point2 { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl<'a> Sub<&'a Point2> for &'a Point2 {
    type Output = Point2;
    fn sub(self, o: &Point2) -> Point2 {
        Point2 { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        &self + &o
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        &self - &o
    }
}
