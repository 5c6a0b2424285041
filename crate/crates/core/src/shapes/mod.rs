//! Candidate `(k, N, X, Y, Z)` tuples for each possible shape of the big triangle.
//!
//! Every analyzer works on an *oriented* tile: the pair `(a, b)` it is handed
//! may have `a > b`. Candidates store the tile normalized to `a < b` together
//! with a `swapped` flag, and their corner angles in the normalized frame.

mod analyzers;
mod report;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::boundary::SideName;
use crate::numerics::{AngleMeasure, Rational};
use crate::numtheory::Triple;

pub use analyzers::{
    analyze, analyze_alpha_2alpha, analyze_alpha_2beta, analyze_alpha_pi3, analyze_equilateral,
    analyze_isosceles, analyze_shape, analyze_two_alpha_two_beta, equilateral_table, Base,
    TableRow,
};
pub use report::{aggregate_report, all_candidates, Discrepancy, Report, ShapeSummary};

/// A side length; non-integral only on candidates rejected for divisibility.
pub type SideLen = Ratio<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeKind {
    Equilateral,
    IsoscelesBaseAlpha,
    IsoscelesBaseBeta,
    TwoAlphaTwoBeta,
    AlphaAndPiOver3,
    AlphaAnd2Alpha,
    AlphaAnd2Beta,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 7] = [
        ShapeKind::Equilateral,
        ShapeKind::IsoscelesBaseAlpha,
        ShapeKind::IsoscelesBaseBeta,
        ShapeKind::TwoAlphaTwoBeta,
        ShapeKind::AlphaAndPiOver3,
        ShapeKind::AlphaAnd2Alpha,
        ShapeKind::AlphaAnd2Beta,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ShapeKind::Equilateral => "equilateral",
            ShapeKind::IsoscelesBaseAlpha => "isosceles-alpha",
            ShapeKind::IsoscelesBaseBeta => "isosceles-beta",
            ShapeKind::TwoAlphaTwoBeta => "two-alpha-two-beta",
            ShapeKind::AlphaAndPiOver3 => "alpha-pi3",
            ShapeKind::AlphaAnd2Alpha => "alpha-2alpha",
            ShapeKind::AlphaAnd2Beta => "alpha-2beta",
        }
    }

    /// Corner angles `(A, B, C)` with the base angle of the shape written as α.
    pub fn oriented_angles(&self) -> [AngleMeasure; 3] {
        let am = AngleMeasure::new;
        match self {
            ShapeKind::Equilateral => [am(1, 1); 3],
            ShapeKind::IsoscelesBaseAlpha | ShapeKind::IsoscelesBaseBeta => {
                [am(1, 0), am(1, 0), am(1, 3)]
            }
            ShapeKind::TwoAlphaTwoBeta => [am(2, 0), am(1, 1), am(0, 2)],
            ShapeKind::AlphaAndPiOver3 => [am(1, 0), am(1, 1), am(1, 2)],
            ShapeKind::AlphaAnd2Alpha => [am(1, 0), am(2, 0), am(0, 3)],
            ShapeKind::AlphaAnd2Beta => [am(1, 0), am(0, 2), am(2, 1)],
        }
    }

    /// True for shapes that are their own mirror image under `a ↔ b`.
    pub fn is_symmetric(&self) -> bool {
        matches!(self, ShapeKind::Equilateral | ShapeKind::TwoAlphaTwoBeta)
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ShapeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ShapeKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown shape '{s}' (expected one of {})", names.join(", "))
            })
    }
}

/// Why a candidate was discarded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    /// `divisor` (named by `label`, e.g. `a+2b`) does not divide `N`.
    NotDivisible { label: &'static str, divisor: u64, n: u64 },
    /// `N < c`.
    BelowC { n: u64, c: u64 },
    /// No admissible row for this side.
    SideInfeasible { side: SideName },
    /// The α, π/3 program's side test failed at this side.
    Aux23 { side: SideName },
    /// `k = 1` with `b` not squarefree and the alternative case failing.
    NotSquarefree,
    /// `k = 1`, `b` and `a+2b` squarefree, and `(b−2)a < b+c`.
    SixtyFive,
    /// A case excluded by a hand argument; checkable with the tiler.
    KnownNoTiling { n: u64 },
}

impl RejectReason {
    /// Rejections that the exhaustive search can re-check independently.
    pub fn is_tiler_hook(&self) -> bool {
        matches!(self, RejectReason::KnownNoTiling { .. } | RejectReason::SixtyFive)
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NotDivisible { label, divisor, n } => {
                write!(f, "{label}={divisor} does not divide N={n}")
            }
            RejectReason::BelowC { n, c } => write!(f, "N={n} < c={c}"),
            RejectReason::SideInfeasible { side } => write!(f, "side {side} not composable"),
            RejectReason::Aux23 { side } => write!(f, "side {side} fails the two-c-edge test"),
            RejectReason::NotSquarefree => write!(f, "k=1 and b not squarefree"),
            RejectReason::SixtyFive => write!(f, "65-criterion: (b-2)a < b+c"),
            RejectReason::KnownNoTiling { n } => write!(f, "no {n}-tiling exists (tiler hook)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => f.write_str("accept"),
            Verdict::Reject(r) => write!(f, "reject: {r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeCandidate {
    /// The tile with `a < b`.
    pub tile: Triple,
    /// Whether the analyzer ran on `(b, a)`.
    pub swapped: bool,
    pub shape: ShapeKind,
    pub k: u64,
    pub n: u64,
    pub x: SideLen,
    pub y: SideLen,
    pub z: SideLen,
    pub verdict: Verdict,
    pub angle_a: AngleMeasure,
    pub angle_b: AngleMeasure,
    pub angle_c: AngleMeasure,
}

fn big(r: &SideLen) -> Rational {
    Rational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl ShapeCandidate {
    /// The tile the analyzer actually ran on.
    pub fn oriented_tile(&self) -> Triple {
        if self.swapped {
            self.tile.swapped()
        } else {
            self.tile
        }
    }

    pub fn angles(&self) -> [AngleMeasure; 3] {
        [self.angle_a, self.angle_b, self.angle_c]
    }

    /// Angles in the oriented frame.
    pub fn oriented_angles(&self) -> [AngleMeasure; 3] {
        self.shape.oriented_angles()
    }

    pub fn is_accepted(&self) -> bool {
        self.verdict.is_accept()
    }

    pub fn sides_integral(&self) -> bool {
        [self.x, self.y, self.z].iter().all(|s| s.is_integer())
    }

    /// `(|BC|, |AC|, |AB|)`.
    pub fn side_lengths(&self) -> (SideLen, SideLen, SideLen) {
        match self.shape {
            ShapeKind::AlphaAnd2Beta => (self.x, self.z, self.y),
            ShapeKind::IsoscelesBaseAlpha | ShapeKind::IsoscelesBaseBeta => {
                (self.x, self.x, self.z)
            }
            _ => (self.x, self.y, self.z),
        }
    }

    /// The exact area identities of the shape, each as `(lhs, rhs)`.
    pub fn area_identities(&self) -> Vec<(Rational, Rational)> {
        let t = self.oriented_tile();
        let i = |v: u64| Rational::from_integer(BigInt::from(v));
        let (a, b, c) = (i(t.a), i(t.b), i(t.c));
        let n = i(self.n);
        let (x, y, z) = (big(&self.x), big(&self.y), big(&self.z));
        let apb = &a + &b;
        let ap2b = &a + &b * i(2);
        let tap = &a * i(2) + &b;
        match self.shape {
            ShapeKind::Equilateral => vec![(&n * &a * &b, &x * &x)],
            ShapeKind::IsoscelesBaseAlpha | ShapeKind::IsoscelesBaseBeta => {
                vec![(&n * &b * &c * &c, &x * &x * &ap2b)]
            }
            ShapeKind::TwoAlphaTwoBeta => vec![
                (&n * &b * &c * &c, &y * &z * &ap2b),
                (&n * &a * &c * &c, &x * &y * &tap),
            ],
            ShapeKind::AlphaAndPiOver3 => vec![
                (&n * &b * &c, &y * &z),
                (&n * &a * &b, &x * &z),
                (&n * &a * &b * &c, &x * &y * &apb),
            ],
            ShapeKind::AlphaAnd2Alpha => vec![
                (&n * &b * &c, &z * &y),
                (&n * &c * &c * &c, &x * &y * &apb * i(3)),
            ],
            ShapeKind::AlphaAnd2Beta => vec![
                (&n * &b * &c, &z * &y),
                (&n * &a * &b * &c, &x * &z * &apb),
                (&n * &a * &c * &c, &x * &y * &tap),
            ],
        }
    }

    pub fn area_identities_hold(&self) -> bool {
        self.area_identities().iter().all(|(l, r)| l == r)
    }

    /// Diagnostics only: the largest relative gap between the nominal corner
    /// angles and the angles recovered from the side lengths.
    pub fn angle_mismatch(&self) -> f64 {
        let (bc, ac, ab) = self.side_lengths();
        let f = |r: SideLen| *r.numer() as f64 / *r.denom() as f64;
        let (bc, ac, ab) = (f(bc), f(ac), f(ab));
        let corner = |opp: f64, s1: f64, s2: f64| ((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)).acos();
        let measured = [corner(bc, ac, ab), corner(ac, bc, ab), corner(ab, ac, bc)];
        let nominal = self.oriented_angles().map(|am| am.to_f64(&self.oriented_tile()));
        measured
            .iter()
            .zip(nominal.iter())
            .map(|(m, n)| ((m - n) / n).abs())
            .fold(0.0, f64::max)
    }
}
