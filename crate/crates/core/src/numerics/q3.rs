//! Numbers of the form `r + s·√3` with rational `r`, `s`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// An exact element of Q(√3). Equality is componentwise since √3 is irrational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Q3Scalar {
    pub rat: Rational,
    pub coef3: Rational,
}

/// Builds a rational from a numerator and a nonzero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact sign of `x.rat + x.coef3·√3`.
pub fn q3_sign(x: &Q3Scalar) -> i32 {
    let sr = sign_of(&x.rat);
    let ss = sign_of(&x.coef3);
    if ss == 0 {
        return sr;
    }
    if sr == 0 || sr == ss {
        return ss;
    }
    // Opposite signs: the larger of r² and 3s² wins.
    let r2 = &x.rat * &x.rat;
    let s2 = &x.coef3 * &x.coef3 * int(3);
    if r2 > s2 {
        sr
    } else {
        ss
    }
}

impl Q3Scalar {
    pub fn new(rat: Rational, coef3: Rational) -> Self {
        Q3Scalar { rat, coef3 }
    }

    pub fn from_rational(rat: Rational) -> Self {
        Q3Scalar { rat, coef3: Rational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(int(v))
    }

    /// `r + s√3` from two small fractions `(rn/rd) + (sn/sd)√3`.
    pub fn from_parts(rn: i64, rd: i64, sn: i64, sd: i64) -> Self {
        Q3Scalar { rat: ratio(rn, rd), coef3: ratio(sn, sd) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef3.is_zero()
    }

    pub fn sign(&self) -> i32 {
        q3_sign(self)
    }

    /// `r − s√3`.
    pub fn conjugate(&self) -> Self {
        Q3Scalar { rat: self.rat.clone(), coef3: -&self.coef3 }
    }

    /// The rational norm `r² − 3s²`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &self.coef3 * &self.coef3 * int(3)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Q3Scalar { rat: &self.rat / &n, coef3: -&self.coef3 / &n })
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self * &inv)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Q3Scalar { rat: &self.rat * k, coef3: &self.coef3 * k }
    }

    /// Rational value when the √3 part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coef3.is_zero().then_some(&self.rat)
    }

    /// Diagnostics only: nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        let s = self.coef3.to_f64().unwrap_or(f64::NAN);
        r + s * 3f64.sqrt()
    }

    /// Exact comparison of two values.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for Q3Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef3.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "{}·√3", self.coef3)
        } else {
            write!(f, "{} + {}·√3", self.rat, self.coef3)
        }
    }
}

impl<'a> Add<&'a Q3Scalar> for &'a Q3Scalar {
    type Output = Q3Scalar;
    fn add(self, o: &Q3Scalar) -> Q3Scalar {
        Q3Scalar { rat: &self.rat + &o.rat, coef3: &self.coef3 + &o.coef3 }
    }
}

impl<'a> Sub<&'a Q3Scalar> for &'a Q3Scalar {
    type Output = Q3Scalar;
    fn sub(self, o: &Q3Scalar) -> Q3Scalar {
        Q3Scalar { rat: &self.rat - &o.rat, coef3: &self.coef3 - &o.coef3 }
    }
}

impl<'a> Mul<&'a Q3Scalar> for &'a Q3Scalar {
    type Output = Q3Scalar;
    fn mul(self, o: &Q3Scalar) -> Q3Scalar {
        // Coordinates are usually purely rational or purely a multiple of √3.
        let prod = |x: &Rational, y: &Rational| {
            if x.is_zero() || y.is_zero() {
                Rational::zero()
            } else {
                x * y
            }
        };
        let ss = prod(&self.coef3, &o.coef3);
        let rat = if ss.is_zero() { prod(&self.rat, &o.rat) } else { prod(&self.rat, &o.rat) + ss * int(3) };
        let coef3 = prod(&self.rat, &o.coef3) + prod(&self.coef3, &o.rat);
        Q3Scalar { rat, coef3 }
    }
}

impl Neg for &Q3Scalar {
    type Output = Q3Scalar;
    fn neg(self) -> Q3Scalar {
        Q3Scalar { rat: -&self.rat, coef3: -&self.coef3 }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Q3Scalar> for Q3Scalar {
            type Output = Q3Scalar;
            fn $m(self, o: Q3Scalar) -> Q3Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Q3Scalar> for Q3Scalar {
            type Output = Q3Scalar;
            fn $m(self, o: &Q3Scalar) -> Q3Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Q3Scalar> for &'a Q3Scalar {
            type Output = Q3Scalar;
            fn $m(self, o: Q3Scalar) -> Q3Scalar {
                self.$m(&o)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Q3Scalar {
    type Output = Q3Scalar;
    fn neg(self) -> Q3Scalar {
        -&self
    }
}

impl One for Q3Scalar {
    fn one() -> Self {
        Q3Scalar::one()
    }
}
