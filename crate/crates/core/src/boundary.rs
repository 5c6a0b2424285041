//! How a side of the big triangle can be built from tile edges.
//!
//! A side of length `L` is a row `(p, d, e)` with `p·a + d·b + e·c = L`. Every
//! row has `e ≥ 1` and never mixes `a` and `b` edges.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::numtheory::Triple;

/// Counts of `a`, `b` and `c` edges along one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DRow {
    pub p: u64,
    pub d: u64,
    pub e: u64,
}

impl DRow {
    pub fn length(&self, t: &Triple) -> u64 {
        self.p * t.a + self.d * t.b + self.e * t.c
    }

    pub fn is_admissible(&self) -> bool {
        self.e >= 1 && (self.p == 0 || self.d == 0)
    }
}

impl fmt::Display for DRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.d, self.e)
    }
}

/// A side length with all of its admissible rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideComposition {
    pub length: u64,
    pub rows: Vec<DRow>,
}

/// Which side-feasibility rule to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FeasibilityMode {
    /// At least one `c` edge per side.
    #[default]
    Lemma,
    /// At least two `c` edges per side plus the X/Y check of the original search program.
    Appendix,
}

impl FromStr for FeasibilityMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lemma" => Ok(FeasibilityMode::Lemma),
            "appendix" => Ok(FeasibilityMode::Appendix),
            other => Err(format!("unknown mode '{other}' (expected lemma|appendix)")),
        }
    }
}

impl fmt::Display for FeasibilityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FeasibilityMode::Lemma => "lemma",
            FeasibilityMode::Appendix => "appendix",
        })
    }
}

/// Nonnegative `(u, v)` with `u·e1 + v·e2 = len` and `v ≥ min2`, ascending in `v`.
pub fn compositions(len: u64, e1: u64, e2: u64, min2: u64) -> Vec<(u64, u64)> {
    assert!(e1 >= 1 && e2 >= 1);
    let mut out = Vec::new();
    let mut v = min2;
    while v * e2 <= len {
        let rest = len - v * e2;
        if rest % e1 == 0 {
            out.push((rest / e1, v));
        }
        v += 1;
    }
    out
}

fn rows_with_min(len: u64, t: &Triple, min_c: u64) -> Vec<DRow> {
    let mut rows = BTreeSet::new();
    for (u, v) in compositions(len, t.a, t.c, min_c) {
        rows.insert(DRow { p: u, d: 0, e: v });
    }
    for (u, v) in compositions(len, t.b, t.c, min_c) {
        rows.insert(DRow { p: 0, d: u, e: v });
    }
    rows.into_iter().collect()
}

/// All admissible rows for a side of length `len`.
pub fn d_rows(len: u64, t: &Triple) -> Vec<DRow> {
    rows_with_min(len, t, 1)
}

pub fn side_composition(len: u64, t: &Triple, mode: FeasibilityMode) -> SideComposition {
    let rows = match mode {
        FeasibilityMode::Lemma => rows_with_min(len, t, 1),
        FeasibilityMode::Appendix => rows_with_min(len, t, 2),
    };
    SideComposition { length: len, rows }
}

pub fn side_feasible(len: u64, t: &Triple) -> bool {
    !d_rows(len, t).is_empty()
}

/// Name of a side of the big triangle in a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideName {
    X,
    Y,
    Z,
}

impl fmt::Display for SideName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideName::X => "X",
            SideName::Y => "Y",
            SideName::Z => "Z",
        })
    }
}

fn some_v(len: u64, c: u64, v0: u64, rest_ok: impl Fn(u64) -> bool) -> bool {
    let mut v = v0;
    while v * c <= len {
        if rest_ok(len - v * c) {
            return true;
        }
        v += 1;
    }
    false
}

/// The acceptance logic of the original α, π/3 search program.
///
/// Each of X, Y, Z needs at least two `c` edges with the rest a multiple of
/// `a` or of `b`. Then, if X is not `u·b + v·c` with `v ≥ 2`, Y must be
/// `u·b + v·c` with `v ≥ 1`.
pub fn aux23_filter(x: u64, y: u64, z: u64, t: &Triple) -> Result<(), SideName> {
    let (a, b, c) = (t.a, t.b, t.c);
    for (len, name) in [(x, SideName::X), (y, SideName::Y), (z, SideName::Z)] {
        if !some_v(len, c, 2, |r| r % a == 0 || r % b == 0) {
            return Err(name);
        }
    }
    if !some_v(x, c, 2, |r| r % b == 0) && !some_v(y, c, 1, |r| r % b == 0) {
        return Err(SideName::Y);
    }
    Ok(())
}
