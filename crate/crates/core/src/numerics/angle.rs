//! Angles of the form `m·α + n·β` and their exact rotations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{ratio, NumericsError, Point2, Q3Scalar};
use crate::numtheory::Triple;

/// The angle `m·α + n·β`, where α, β are the tile angles opposite `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AngleMeasure {
    pub m: i64,
    pub n: i64,
}

impl AngleMeasure {
    pub const ZERO: AngleMeasure = AngleMeasure { m: 0, n: 0 };
    pub const ALPHA: AngleMeasure = AngleMeasure { m: 1, n: 0 };
    pub const BETA: AngleMeasure = AngleMeasure { m: 0, n: 1 };
    /// 60°.
    pub const PI_3: AngleMeasure = AngleMeasure { m: 1, n: 1 };
    /// 120°, the third tile angle.
    pub const GAMMA: AngleMeasure = AngleMeasure { m: 2, n: 2 };
    pub const PI: AngleMeasure = AngleMeasure { m: 3, n: 3 };
    pub const FULL: AngleMeasure = AngleMeasure { m: 6, n: 6 };

    pub const fn new(m: i64, n: i64) -> Self {
        AngleMeasure { m, n }
    }

    pub fn is_nonneg(&self) -> bool {
        self.m >= 0 && self.n >= 0
    }

    /// Componentwise `self ≥ o`.
    pub fn dominates(&self, o: &AngleMeasure) -> bool {
        self.m >= o.m && self.n >= o.n
    }

    /// Subtraction for frontier bookkeeping: fails instead of going negative.
    pub fn checked_sub(self, o: AngleMeasure) -> Result<AngleMeasure, NumericsError> {
        let r = self - o;
        if r.is_nonneg() {
            Ok(r)
        } else {
            Err(NumericsError::NegativeAngle { from: self, minus: o })
        }
    }

    /// The same direction modulo a full turn, with `n` in `0..6`.
    pub fn canonical_direction(self) -> AngleMeasure {
        let q = self.n.div_euclid(6);
        AngleMeasure { m: self.m - 6 * q, n: self.n - 6 * q }
    }

    /// Swaps the roles of α and β.
    pub fn swapped(self) -> AngleMeasure {
        AngleMeasure { m: self.n, n: self.m }
    }

    /// Diagnostics only: value in radians.
    pub fn to_f64(&self, t: &Triple) -> f64 {
        let (a, b, c) = (t.a as f64, t.b as f64, t.c as f64);
        let alpha = (a * 3f64.sqrt() / (2.0 * c)).atan2((a + 2.0 * b) / (2.0 * c));
        let beta = (b * 3f64.sqrt() / (2.0 * c)).atan2((2.0 * a + b) / (2.0 * c));
        self.m as f64 * alpha + self.n as f64 * beta
    }
}

pub fn angle_add(x: AngleMeasure, y: AngleMeasure) -> AngleMeasure {
    x + y
}

pub fn angle_sub(x: AngleMeasure, y: AngleMeasure) -> Result<AngleMeasure, NumericsError> {
    x.checked_sub(y)
}

impl Add for AngleMeasure {
    type Output = AngleMeasure;
    fn add(self, o: AngleMeasure) -> AngleMeasure {
        AngleMeasure { m: self.m + o.m, n: self.n + o.n }
    }
}

impl Sub for AngleMeasure {
    type Output = AngleMeasure;
    fn sub(self, o: AngleMeasure) -> AngleMeasure {
        AngleMeasure { m: self.m - o.m, n: self.n - o.n }
    }
}

impl Neg for AngleMeasure {
    type Output = AngleMeasure;
    fn neg(self) -> AngleMeasure {
        AngleMeasure { m: -self.m, n: -self.n }
    }
}

impl fmt::Display for AngleMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A rotation by an angle with exact cosine and sine, optionally preceded by
/// the reflection `(x, y) ↦ (x, −y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub c: Q3Scalar,
    pub s: Q3Scalar,
    pub mirrored: bool,
}

impl Rotation {
    pub fn identity() -> Self {
        Rotation { c: Q3Scalar::one(), s: Q3Scalar::zero(), mirrored: false }
    }

    pub fn with_mirror(mut self, mirrored: bool) -> Self {
        self.mirrored = mirrored;
        self
    }

    /// `self` applied after `other`.
    pub fn compose(&self, other: &Rotation) -> Rotation {
        let (oc, os) = if self.mirrored {
            (other.c.clone(), -&other.s)
        } else {
            (other.c.clone(), other.s.clone())
        };
        Rotation {
            c: &self.c * &oc - &self.s * &os,
            s: &self.s * &oc + &self.c * &os,
            mirrored: self.mirrored ^ other.mirrored,
        }
    }

    pub fn inverse(&self) -> Rotation {
        if self.mirrored {
            self.clone()
        } else {
            Rotation { c: self.c.clone(), s: -&self.s, mirrored: false }
        }
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        let y = if self.mirrored { -&p.y } else { p.y.clone() };
        Point2 {
            x: &self.c * &p.x - &self.s * &y,
            y: &self.s * &p.x + &self.c * &y,
        }
    }

    /// Unit vector in the rotated x direction.
    pub fn unit(&self) -> Point2 {
        Point2 { x: self.c.clone(), y: self.s.clone() }
    }

    pub fn is_unit(&self) -> bool {
        &self.c * &self.c + &self.s * &self.s == Q3Scalar::one()
    }
}

fn base_alpha(t: &Triple) -> Rotation {
    let (a, b, c) = (t.a as i64, t.b as i64, t.c as i64);
    Rotation {
        c: Q3Scalar::from_rational(ratio(a + 2 * b, 2 * c)),
        s: Q3Scalar::new(Default::default(), ratio(a, 2 * c)),
        mirrored: false,
    }
}

fn base_beta(t: &Triple) -> Rotation {
    let (a, b, c) = (t.a as i64, t.b as i64, t.c as i64);
    Rotation {
        c: Q3Scalar::from_rational(ratio(2 * a + b, 2 * c)),
        s: Q3Scalar::new(Default::default(), ratio(b, 2 * c)),
        mirrored: false,
    }
}

/// Exact `(cos, sin)` of `m·α + n·β` by repeated angle addition.
pub fn angle_trig(am: AngleMeasure, t: &Triple) -> Rotation {
    let mut r = Rotation::identity();
    let mut step = |base: Rotation, k: i64| {
        let base = if k < 0 { base.inverse() } else { base };
        for _ in 0..k.unsigned_abs() {
            r = r.compose(&base);
        }
    };
    step(base_alpha(t), am.m);
    step(base_beta(t), am.n);
    r
}

/// Order of two directions by their angle in `[0, 2π)`.
pub fn direction_cmp(u: &Rotation, v: &Rotation) -> Ordering {
    fn half(r: &Rotation) -> u8 {
        let s = r.s.sign();
        if s > 0 || (s == 0 && r.c.sign() > 0) {
            0
        } else {
            1
        }
    }
    half(u).cmp(&half(v)).then_with(|| {
        let cross = &u.c * &v.s - &u.s * &v.c;
        0.cmp(&cross.sign())
    })
}

/// Exact comparison of angle values, with memoised rotations.
///
/// Angles are compared as real numbers (not modulo 2π) by counting how many
/// times the partial sums wrap past a full turn.
#[derive(Clone, Debug)]
pub struct AngleCalc {
    pub tile: Triple,
    alpha: Rotation,
    beta: Rotation,
    rot_cache: HashMap<AngleMeasure, Rotation>,
    lift_cache: HashMap<AngleMeasure, (i64, Rotation)>,
}

impl AngleCalc {
    pub fn new(tile: Triple) -> Self {
        AngleCalc {
            tile,
            alpha: base_alpha(&tile),
            beta: base_beta(&tile),
            rot_cache: HashMap::new(),
            lift_cache: HashMap::new(),
        }
    }

    /// Rotation of a direction; memoised modulo a full turn.
    pub fn rotation(&mut self, am: AngleMeasure) -> Rotation {
        let key = am.canonical_direction();
        if let Some(r) = self.rot_cache.get(&key) {
            return r.clone();
        }
        let r = angle_trig(key, &self.tile);
        self.rot_cache.insert(key, r.clone());
        r
    }

    pub fn unit(&mut self, am: AngleMeasure) -> Point2 {
        self.rotation(am).unit()
    }

    /// Whole turns and residual rotation of a nonnegative measure.
    fn lift(&mut self, am: AngleMeasure) -> (i64, Rotation) {
        debug_assert!(am.is_nonneg());
        if let Some(v) = self.lift_cache.get(&am) {
            return v.clone();
        }
        let mut wraps = 0;
        let mut cur = Rotation::identity();
        for (base, k) in [(self.alpha.clone(), am.m), (self.beta.clone(), am.n)] {
            for _ in 0..k {
                let next = cur.compose(&base);
                if direction_cmp(&next, &cur) == Ordering::Less {
                    wraps += 1;
                }
                cur = next;
            }
        }
        self.lift_cache.insert(am, (wraps, cur.clone()));
        (wraps, cur)
    }

    /// Sign of the real value `m·α + n·β`.
    pub fn value_sign(&mut self, am: AngleMeasure) -> Ordering {
        match (am.m.signum(), am.n.signum()) {
            (0, 0) => Ordering::Equal,
            (x, y) if x >= 0 && y >= 0 => Ordering::Greater,
            (x, y) if x <= 0 && y <= 0 => Ordering::Less,
            _ => {
                let pos = AngleMeasure::new(am.m.max(0), am.n.max(0));
                let neg = AngleMeasure::new((-am.m).max(0), (-am.n).max(0));
                let (wp, rp) = self.lift(pos);
                let (wn, rn) = self.lift(neg);
                wp.cmp(&wn).then_with(|| direction_cmp(&rp, &rn))
            }
        }
    }

    /// Exact order of two angle values.
    pub fn cmp(&mut self, x: AngleMeasure, y: AngleMeasure) -> Ordering {
        self.value_sign(x - y)
    }

    /// The representative of `am` modulo a full turn lying in `(0, 2π]`.
    pub fn normalize_open(&mut self, mut am: AngleMeasure) -> AngleMeasure {
        while self.value_sign(am) != Ordering::Greater {
            am = am + AngleMeasure::FULL;
        }
        while self.value_sign(am - AngleMeasure::FULL) == Ordering::Greater {
            am = am - AngleMeasure::FULL;
        }
        am
    }
}

/// Exact comparison of angle values for a given tile.
pub fn compare_angles(x: AngleMeasure, y: AngleMeasure, t: &Triple) -> Ordering {
    AngleCalc::new(*t).cmp(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t357() -> Triple {
        Triple::new(3, 5, 7).unwrap()
    }

    #[test]
    fn base_values() {
        let r = angle_trig(AngleMeasure::ALPHA, &t357());
        assert_eq!(r.c, Q3Scalar::from_parts(13, 14, 0, 1));
        assert_eq!(r.s, Q3Scalar::from_parts(0, 1, 3, 14));
        let r = angle_trig(AngleMeasure::PI_3, &t357());
        assert_eq!(r.c, Q3Scalar::from_parts(1, 2, 0, 1));
        assert_eq!(r.s, Q3Scalar::from_parts(0, 1, 1, 2));
        let r = angle_trig(AngleMeasure::GAMMA, &t357());
        assert_eq!(r.c, Q3Scalar::from_parts(-1, 2, 0, 1));
        // π/3 + 2β
        let r = angle_trig(AngleMeasure::new(1, 3), &t357());
        assert_eq!(r.s, Q3Scalar::from_parts(0, 1, 39, 98));
        // α + 2β
        let r = angle_trig(AngleMeasure::new(1, 2), &t357());
        assert_eq!(r.s, Q3Scalar::from_parts(0, 1, 4, 7));
    }

    #[test]
    fn sub_reports_negative() {
        assert_eq!(angle_sub(AngleMeasure::PI, AngleMeasure::GAMMA).unwrap(), AngleMeasure::PI_3);
        assert_eq!(angle_sub(AngleMeasure::FULL, AngleMeasure::GAMMA).unwrap(), AngleMeasure::new(4, 4));
        assert!(angle_sub(AngleMeasure::ALPHA, AngleMeasure::BETA).is_err());
    }

    #[test]
    fn value_order() {
        let mut calc = AngleCalc::new(t357());
        // α < β when a < b.
        assert_eq!(calc.cmp(AngleMeasure::ALPHA, AngleMeasure::BETA), Ordering::Less);
        assert_eq!(calc.cmp(AngleMeasure::new(4, 0), AngleMeasure::new(0, 3)), Ordering::Less);
        assert_eq!(calc.cmp(AngleMeasure::new(6, 0), AngleMeasure::new(0, 3)), Ordering::Greater);
        assert_eq!(calc.cmp(AngleMeasure::FULL, AngleMeasure::new(7, 5)), Ordering::Greater);
        assert_eq!(calc.normalize_open(AngleMeasure::new(-2, -2)), AngleMeasure::new(4, 4));
        assert_eq!(calc.normalize_open(AngleMeasure::new(9, 9)), AngleMeasure::PI);
    }
}
