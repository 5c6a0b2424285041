//! Integer tiles `c² = a² + ab + b²`, their enumeration, and squarefree arithmetic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::{Integer, Roots};

/// An integer tile with sides `a`, `b` and `c` opposite the 120° angle.
///
/// No order between `a` and `b` is assumed; [`Triple::normalized`] gives `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripleError {
    #[error("{0}² + {0}·{1} + {1}² is not {2}²")]
    NotOnForm(u64, u64, u64),
    #[error("({0}, {1}, {2}) is not pairwise coprime")]
    NotPrimitive(u64, u64, u64),
    #[error("sides must be positive")]
    Zero,
    #[error("cannot parse tile '{0}', expected a,b,c")]
    Parse(String),
}

impl Triple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, TripleError> {
        if a == 0 || b == 0 || c == 0 {
            return Err(TripleError::Zero);
        }
        if a * a + a * b + b * b != c * c {
            return Err(TripleError::NotOnForm(a, b, c));
        }
        if a.gcd(&b) != 1 || a.gcd(&c) != 1 || b.gcd(&c) != 1 {
            return Err(TripleError::NotPrimitive(a, b, c));
        }
        Ok(Triple { a, b, c })
    }

    /// The tile with legs `a`, `b` if `a² + ab + b²` is a square and `gcd(a,b) = 1`.
    pub fn from_legs(a: u64, b: u64) -> Option<Self> {
        let c2 = a * a + a * b + b * b;
        let c = c2.sqrt();
        (c * c == c2 && a.gcd(&b) == 1 && a > 0 && b > 0).then_some(Triple { a, b, c })
    }

    pub fn swapped(&self) -> Triple {
        Triple { a: self.b, b: self.a, c: self.c }
    }

    /// `(min, max, c)` together with whether a swap happened.
    pub fn normalized(&self) -> (Triple, bool) {
        if self.a <= self.b {
            (*self, false)
        } else {
            (self.swapped(), true)
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl FromStr for Triple {
    type Err = TripleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<u64> = s
            .trim_matches(|ch| ch == '(' || ch == ')')
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| TripleError::Parse(s.to_string()))?;
        match parts[..] {
            [a, b, c] => Triple::new(a, b, c),
            _ => Err(TripleError::Parse(s.to_string())),
        }
    }
}

/// Branch of the parametrization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `a`, `b` both odd: `c = s² + 3t²`.
    OddOdd,
    /// one of `a`, `b` even: `c = s² − st + t²`.
    OneEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParamPair {
    pub s: u64,
    pub t: u64,
    pub branch: Branch,
}

impl ParamPair {
    /// The primitive triple this pair produces, normalized to `a < b`.
    pub fn triple(&self) -> Option<Triple> {
        let (s, t) = (self.s as i64, self.t as i64);
        if s <= 0 || t <= 0 || s.gcd(&t) != 1 {
            return None;
        }
        let (a, b) = match self.branch {
            Branch::OddOdd => {
                if (s + t) % 2 == 0 {
                    return None;
                }
                (2 * s * t + s * s - 3 * t * t, 2 * s * t - s * s + 3 * t * t)
            }
            Branch::OneEven => (2 * s * t - t * t, s * s - 2 * s * t),
        };
        if a <= 0 || b <= 0 {
            return None;
        }
        let (a, b) = (a.min(b) as u64, a.max(b) as u64);
        let tr = Triple::from_legs(a, b)?;
        let odd_odd = a % 2 == 1 && b % 2 == 1;
        (odd_odd == (self.branch == Branch::OddOdd)).then_some(tr)
    }
}

/// Prime factorization by trial division.
pub fn factorize(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x % p == 0 {
            let mut e = 0;
            while x % p == 0 {
                x /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

/// Product of the primes dividing `x` to an odd power.
pub fn sqfree(x: u64) -> u64 {
    assert!(x >= 1, "sqfree of zero");
    factorize(x).into_iter().filter(|&(_, e)| e % 2 == 1).map(|(p, _)| p).product()
}

/// Smallest `s` with `x | s²`.
pub fn sqdiv(x: u64) -> u64 {
    assert!(x >= 1, "sqdiv of zero");
    factorize(x).into_iter().map(|(p, e)| p.pow(e.div_ceil(2))).product()
}

pub fn is_squarefree(x: u64) -> bool {
    sqfree(x) == x
}

/// Largest `c` worth scanning for a given minimum leg `a`.
fn leg_bound(a: u64) -> u64 {
    (3 * a * a + 1) / 2
}

/// All primitive tiles with `a < b` and `a ≤ max_a`, ordered by `(a, b)`.
pub fn enumerate_triples_direct(max_a: u64) -> Vec<Triple> {
    enumerate_direct(max_a, u64::MAX)
}

/// The direct scan restricted to `c ≤ max_c`.
pub fn enumerate_triples_direct_upto_c(max_c: u64) -> Vec<Triple> {
    enumerate_direct(max_c, max_c)
}

fn enumerate_direct(max_a: u64, max_c: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 1..=max_a {
        if a >= max_c {
            break;
        }
        for b in a + 1..leg_bound(a) {
            let c2 = a * a + a * b + b * b;
            if c2 > max_c.saturating_mul(max_c) {
                break;
            }
            if a.gcd(&b) != 1 {
                continue;
            }
            let c = c2.sqrt();
            if c * c == c2 {
                out.push(Triple { a, b, c });
            }
        }
    }
    out
}

/// All primitive tiles with `c ≤ max_c` from the two-branch parametrization,
/// normalized to `a < b` and sorted by `(a, b)`.
pub fn enumerate_triples_param(max_c: u64) -> Vec<Triple> {
    let mut found = BTreeSet::new();
    let mut s = 1;
    while s * s <= 4 * max_c {
        for t in 1..=s.max(max_c.sqrt() + 1) {
            for (branch, c) in [
                (Branch::OddOdd, s * s + 3 * t * t),
                (Branch::OneEven, (s * s + t * t).saturating_sub(s * t)),
            ] {
                if c > max_c || c == 0 {
                    continue;
                }
                if let Some(tr) = (ParamPair { s, t, branch }).triple() {
                    found.insert((tr.a, tr.b, tr.c));
                }
            }
        }
        s += 1;
    }
    found.into_iter().map(|(a, b, c)| Triple { a, b, c }).collect()
}

/// `a + b ≡ 0 (mod 8)` whenever `a`, `b` are both odd.
pub fn mod8_check(t: &Triple) -> bool {
    !(t.a % 2 == 1 && t.b % 2 == 1) || (t.a + t.b) % 8 == 0
}
