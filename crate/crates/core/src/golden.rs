//! Re-implementations of the three printed search programs, with their
//! committed reference outputs.

use std::fmt::Write as _;
use std::str::FromStr;

use num_integer::{Integer, Roots};

use crate::numtheory::{sqdiv, sqfree, Triple};
use crate::shapes::{analyze_isosceles, Base, RejectReason, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenProgram {
    EquilateralBoundTable,
    IsoscelesLog,
    AlphaAndAlphaPlusBetaTable,
}

impl GoldenProgram {
    pub const ALL: [GoldenProgram; 3] = [
        GoldenProgram::EquilateralBoundTable,
        GoldenProgram::IsoscelesLog,
        GoldenProgram::AlphaAndAlphaPlusBetaTable,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GoldenProgram::EquilateralBoundTable => "equilateralboundtable",
            GoldenProgram::IsoscelesLog => "isosceles-log",
            GoldenProgram::AlphaAndAlphaPlusBetaTable => "alphaandalphaplusbetatable",
        }
    }

    pub fn run(&self) -> String {
        match self {
            GoldenProgram::EquilateralBoundTable => equilateral_bound_table(135),
            GoldenProgram::IsoscelesLog => isosceles_log(135),
            GoldenProgram::AlphaAndAlphaPlusBetaTable => alpha_and_alpha_plus_beta_table(160),
        }
    }

    /// The committed reference output.
    pub fn expected(&self) -> &'static str {
        match self {
            GoldenProgram::EquilateralBoundTable => {
                include_str!("../golden/equilateralboundtable.txt")
            }
            GoldenProgram::IsoscelesLog => include_str!("../golden/isosceles-log.txt"),
            GoldenProgram::AlphaAndAlphaPlusBetaTable => {
                include_str!("../golden/alphaandalphaplusbetatable.txt")
            }
        }
    }

    pub fn matches_expected(&self) -> bool {
        normalize(&self.run()) == normalize(self.expected())
    }
}

impl FromStr for GoldenProgram {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GoldenProgram::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<_> = GoldenProgram::ALL.iter().map(|p| p.name()).collect();
            format!("unknown program '{s}' (expected one of {})", names.join(", "))
        })
    }
}

/// Collapses whitespace runs inside lines and drops blank lines.
pub fn normalize(text: &str) -> String {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}

fn isqrt_exact(t: u64) -> Option<u64> {
    let c = t.sqrt();
    (c * c == t).then_some(c)
}

/// Coprime `a < b ≤ (3a²+1)/2` with integral `c`, in `(a, b)` order.
fn scan(amax: u64, mut f: impl FnMut(u64, u64, u64)) {
    for a in 1..=amax {
        for b in a + 1..=(3 * a * a + 1) / 2 {
            if a.gcd(&b) != 1 {
                continue;
            }
            if let Some(c) = isqrt_exact(a * a + a * b + b * b) {
                f(a, b, c);
            }
        }
    }
}

pub fn equilateral_bound_table(n: u64) -> String {
    let mut out = format!("{:<23}4d\n\n", "(a, b, c)");
    scan(n, |a, b, c| {
        let d = sqfree(a * b);
        if 4 * d <= n && c <= n {
            let _ = writeln!(out, "{:<23}{}", format!("({a}, {b}, {c})"), 4 * d);
        }
    });
    out
}

/// The isosceles program's log for tiles with `2a + b ≤ nmax`.
pub fn isosceles_log(nmax: u64) -> String {
    let mut out = String::new();
    let mut tiles = Vec::new();
    scan(nmax, |a, b, c| {
        if 2 * a + b <= nmax {
            tiles.push(Triple { a, b, c });
        }
    });
    for t in tiles {
        for base in [Base::Alpha, Base::Beta] {
            let (name, head, small, big) = match base {
                Base::Alpha => ("alpha", format!("b(a+2b)) = {}", sqfree(t.b * (t.a + 2 * t.b))), "b", "a+2b"),
                Base::Beta => ("beta", format!("a(b+2a)) = {}", sqfree(t.a * (t.b + 2 * t.a))), "a", "b+2a"),
            };
            let _ = writeln!(out, "Trying ({},{},{}) with base angles {name}", t.a, t.b, t.c);
            let _ = writeln!(out, "     sqfree({head}");
            for cand in analyze_isosceles(&t, base, nmax) {
                let k = cand.k;
                let _ = match &cand.verdict {
                    Verdict::Accept => writeln!(
                        out,
                        "     Trying k={k}\nPossible: ({}, {}, {}) with base angle {name} and N = {}",
                        t.a, t.b, t.c, cand.n
                    ),
                    Verdict::Reject(RejectReason::NotDivisible { divisor, n, .. }) => writeln!(
                        out,
                        "     Trying k={k}  Rejecting, because {big}={divisor} doesn't divide N = {n}"
                    ),
                    Verdict::Reject(RejectReason::SixtyFive) => {
                        writeln!(out, "     Trying k={k}         Rejecting, by the 65-lemma.")
                    }
                    Verdict::Reject(RejectReason::NotSquarefree) => {
                        let stop = if base == Base::Alpha { "." } else { "" };
                        writeln!(out, "     Trying k={k}         Rejecting, because {small} is not squarefree{stop}")
                    }
                    Verdict::Reject(r) => writeln!(out, "     Trying k={k}         Rejecting, {r}"),
                };
            }
        }
    }
    out
}

/// Smallest `v ≥ v0` with `v·c ≤ len` and `ok(len − v·c)`, or the first `v`
/// past `len` (the value the printed loops leave behind).
fn first_v(len: u64, c: u64, v0: u64, ok: impl Fn(u64) -> bool) -> (u64, bool) {
    let mut v = v0;
    while v * c <= len {
        if ok(len - v * c) {
            return (v, true);
        }
        v += 1;
    }
    (v, false)
}

fn aux23(out: &mut String, a: u64, b: u64, c: u64, d: u64, m: u64) {
    for k in 1.. {
        let nn = k * k * d;
        if nn > m {
            break;
        }
        if nn % (a + b) != 0 {
            continue;
        }
        let s = sqdiv(b * (a + b));
        let x = k * a * s / (a + b);
        let y = k * c * s / (a + b);
        let z = k * s;
        let _ = writeln!(out, "\nTrying  ({a},{b},{c}), k={k}, N={nn} and (X,Y,Z) = ({x},{y},{z})");
        let either = |t: u64| t % a == 0 || t % b == 0;
        if [x, y, z].iter().any(|&len| !first_v(len, c, 2, either).1) {
            continue;
        }
        let (v, x_ok) = first_v(x, c, 2, |t| t % b == 0);
        let _ = writeln!(out, "v = {v}");
        if !x_ok && !first_v(y, c, 1, |t| t % b == 0).1 {
            continue;
        }
        let _ = writeln!(out, "   Possible!");
    }
}

pub fn alpha_and_alpha_plus_beta_table(m: u64) -> String {
    let mut out = String::new();
    let mut tiles = Vec::new();
    scan(m, |a, b, c| {
        if a + b < m {
            tiles.push((a, b, c));
        }
    });
    for (a, b, c) in tiles {
        let d = sqfree(b * (a + b));
        if d <= m {
            aux23(&mut out, a, b, c, d, m);
        }
        let d = sqfree(a * (a + b));
        if d <= m {
            aux23(&mut out, b, a, c, d, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_collapses_runs() {
        assert_eq!(normalize("  x   y \n\n z\t\n"), "x y\nz");
    }

    #[test]
    fn parse_names() {
        for p in GoldenProgram::ALL {
            assert_eq!(p.name().parse::<GoldenProgram>(), Ok(p));
        }
        assert!("nope".parse::<GoldenProgram>().is_err());
    }
}
