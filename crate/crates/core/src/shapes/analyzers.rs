use num_rational::Ratio;

use super::{RejectReason, ShapeCandidate, ShapeKind, SideLen, Verdict};
use crate::boundary::{aux23_filter, side_feasible, FeasibilityMode, SideName};
use crate::numtheory::{enumerate_triples_param, is_squarefree, sqdiv, sqfree, Triple};

/// Which tile angle sits at the base of an isosceles triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Alpha,
    Beta,
}

fn candidate(
    oriented: Triple,
    shape: ShapeKind,
    k: u64,
    n: u64,
    sides: [SideLen; 3],
    verdict: Verdict,
) -> ShapeCandidate {
    let (tile, swapped) = oriented.normalized();
    let mut angles = shape.oriented_angles();
    if swapped {
        angles = angles.map(|a| a.swapped());
    }
    let [x, y, z] = sides;
    ShapeCandidate {
        tile,
        swapped,
        shape,
        k,
        n,
        x,
        y,
        z,
        verdict,
        angle_a: angles[0],
        angle_b: angles[1],
        angle_c: angles[2],
    }
}

fn int(v: u64) -> SideLen {
    Ratio::from_integer(v)
}

/// First side (in X, Y, Z order) without an admissible row.
fn first_infeasible(sides: &[(SideLen, SideName)], t: &Triple) -> Option<SideName> {
    sides
        .iter()
        .find(|(len, _)| !len.is_integer() || !side_feasible(len.to_integer(), t))
        .map(|&(_, name)| name)
}

fn side_verdict(sides: [SideLen; 3], names: [SideName; 3], t: &Triple) -> Verdict {
    let list: Vec<_> = sides.into_iter().zip(names).collect();
    match first_infeasible(&list, t) {
        Some(side) => Verdict::Reject(RejectReason::SideInfeasible { side }),
        None => Verdict::Accept,
    }
}

const XYZ: [SideName; 3] = [SideName::X, SideName::Y, SideName::Z];

/// Equilateral triangle: `N = k²d`, `X = ks` with `d`, `s` of `ab`, `k ≥ 2`.
pub fn analyze_equilateral(t: &Triple, nmax: u64) -> Vec<ShapeCandidate> {
    let (t, _) = t.normalized();
    let d = sqfree(t.a * t.b);
    let s = sqdiv(t.a * t.b);
    let mut out = Vec::new();
    let mut k = 2;
    while k * k * d <= nmax {
        let n = k * k * d;
        let x = k * s;
        let verdict = if !side_feasible(x, &t) {
            Verdict::Reject(RejectReason::SideInfeasible { side: SideName::X })
        } else if (t.a, t.b, t.c) == (3, 5, 7) && n == 60 {
            Verdict::Reject(RejectReason::KnownNoTiling { n })
        } else if n < t.c {
            Verdict::Reject(RejectReason::BelowC { n, c: t.c })
        } else {
            Verdict::Accept
        };
        out.push(candidate(t, ShapeKind::Equilateral, k, n, [int(x); 3], verdict));
        k += 1;
    }
    out
}

/// Isosceles triangle with base angles α of the oriented tile (`base = Beta`
/// runs on `(b, a)`): `N = k²d`, `X = kcs/(a+2b)`, `Z = ks`, with `d`, `s` of
/// `b(a+2b)`. `X` is each leg, `Z` the base.
pub fn analyze_isosceles(t: &Triple, base: Base, nmax: u64) -> Vec<ShapeCandidate> {
    let o = match base {
        Base::Alpha => *t,
        Base::Beta => t.swapped(),
    };
    let shape = if o.a < o.b { ShapeKind::IsoscelesBaseAlpha } else { ShapeKind::IsoscelesBaseBeta };
    let (a, b, c) = (o.a, o.b, o.c);
    let m = a + 2 * b;
    let d = sqfree(b * m);
    let s = sqdiv(b * m);
    let mut out = Vec::new();
    let mut k = 1;
    while k * k * d <= nmax {
        let n = k * k * d;
        let x = Ratio::new(k * c * s, m);
        let z = int(k * s);
        let verdict = if n % m != 0 {
            Verdict::Reject(RejectReason::NotDivisible { label: "a+2b", divisor: m, n })
        } else if k == 1 && is_squarefree(b) && (b as i64 - 2) * (a as i64) < (b + c) as i64 {
            Verdict::Reject(RejectReason::SixtyFive)
        } else if k == 1 && !is_squarefree(b) && !case_two(a, b, c, x) {
            Verdict::Reject(RejectReason::NotSquarefree)
        } else {
            side_verdict([x, x, z], [SideName::X, SideName::X, SideName::Z], &o)
        };
        out.push(candidate(o, shape, k, n, [x, x, z], verdict));
        k += 1;
    }
    out
}

/// `2a < b` and `X = ua + vc` with `u, v > 0`.
fn case_two(a: u64, b: u64, c: u64, x: SideLen) -> bool {
    if 2 * a >= b || !x.is_integer() {
        return false;
    }
    let x = x.to_integer();
    let mut v = 1;
    while v * c < x {
        if (x - v * c) % a == 0 {
            return true;
        }
        v += 1;
    }
    false
}

/// Angles 2α, π/3, 2β: `N = ℓ²(2a+b)(a+2b)`, `X = ℓa(a+2b)`, `Y = ℓc²`, `Z = ℓb(2a+b)`.
pub fn analyze_two_alpha_two_beta(t: &Triple, nmax: u64) -> Vec<ShapeCandidate> {
    let (a, b, c) = (t.a, t.b, t.c);
    let base = (2 * a + b) * (a + 2 * b);
    let mut out = Vec::new();
    let mut l = 1;
    while l * l * base <= nmax {
        let sides = [int(l * a * (a + 2 * b)), int(l * c * c), int(l * b * (2 * a + b))];
        let verdict = side_verdict(sides, XYZ, t);
        out.push(candidate(*t, ShapeKind::TwoAlphaTwoBeta, l, l * l * base, sides, verdict));
        l += 1;
    }
    out
}

/// Angles α, π/3, α+2β: `N = k²d`, `X = kas/(a+b)`, `Y = kcs/(a+b)`, `Z = ks`
/// with `d`, `s` of `b(a+b)`.
pub fn analyze_alpha_pi3(t: &Triple, nmax: u64, mode: FeasibilityMode) -> Vec<ShapeCandidate> {
    let (a, b, c) = (t.a, t.b, t.c);
    let m = a + b;
    let d = sqfree(b * m);
    let s = sqdiv(b * m);
    let mut out = Vec::new();
    let mut k = 1;
    while k * k * d <= nmax {
        let n = k * k * d;
        let sides = [Ratio::new(k * a * s, m), Ratio::new(k * c * s, m), int(k * s)];
        let verdict = if n % m != 0 {
            Verdict::Reject(RejectReason::NotDivisible { label: "a+b", divisor: m, n })
        } else {
            match mode {
                FeasibilityMode::Lemma => side_verdict(sides, XYZ, t),
                FeasibilityMode::Appendix => {
                    let [x, y, z] = sides.map(|v| v.to_integer());
                    match aux23_filter(x, y, z, t) {
                        Ok(()) => Verdict::Accept,
                        Err(side) => Verdict::Reject(RejectReason::Aux23 { side }),
                    }
                }
            }
        };
        out.push(candidate(*t, ShapeKind::AlphaAndPiOver3, k, n, sides, verdict));
        k += 1;
    }
    out
}

/// Angles α, 2α, 3β: `N = 3k²(a+2b)(a+b)`, `X = kc²`, `Y = kc(a+2b)`, `Z = 3kb(a+b)`.
pub fn analyze_alpha_2alpha(t: &Triple, nmax: u64) -> Vec<ShapeCandidate> {
    let (a, b, c) = (t.a, t.b, t.c);
    let base = 3 * (a + 2 * b) * (a + b);
    let mut out = Vec::new();
    let mut k = 1;
    while k * k * base <= nmax {
        let sides = [int(k * c * c), int(k * c * (a + 2 * b)), int(3 * k * b * (a + b))];
        let verdict = side_verdict(sides, XYZ, t);
        out.push(candidate(*t, ShapeKind::AlphaAnd2Alpha, k, k * k * base, sides, verdict));
        k += 1;
    }
    out
}

/// Angles α, 2β, 2α+β: `N = 4k²(a+b)(2a+b)`, `X = 2ack` opposite α,
/// `Y = 2kc(a+b)` opposite 2α+β, `Z = 2kb(2a+b)` opposite 2β.
pub fn analyze_alpha_2beta(t: &Triple, nmax: u64) -> Vec<ShapeCandidate> {
    let (a, b, c) = (t.a, t.b, t.c);
    let base = 4 * (a + b) * (2 * a + b);
    let mut out = Vec::new();
    let mut k = 1;
    while k * k * base <= nmax {
        let sides = [int(2 * a * c * k), int(2 * k * c * (a + b)), int(2 * k * b * (2 * a + b))];
        let verdict = side_verdict(sides, XYZ, t);
        out.push(candidate(*t, ShapeKind::AlphaAnd2Beta, k, k * k * base, sides, verdict));
        k += 1;
    }
    out
}

/// One analyzer on the tile exactly as oriented.
pub fn analyze_shape(
    shape: ShapeKind,
    t: &Triple,
    nmax: u64,
    mode: FeasibilityMode,
) -> Vec<ShapeCandidate> {
    match shape {
        ShapeKind::Equilateral => analyze_equilateral(t, nmax),
        ShapeKind::IsoscelesBaseAlpha => analyze_isosceles(t, Base::Alpha, nmax),
        ShapeKind::IsoscelesBaseBeta => analyze_isosceles(t, Base::Beta, nmax),
        ShapeKind::TwoAlphaTwoBeta => analyze_two_alpha_two_beta(t, nmax),
        ShapeKind::AlphaAndPiOver3 => analyze_alpha_pi3(t, nmax, mode),
        ShapeKind::AlphaAnd2Alpha => analyze_alpha_2alpha(t, nmax),
        ShapeKind::AlphaAnd2Beta => analyze_alpha_2beta(t, nmax),
    }
}

/// Every shape in every relevant orientation of the tile, ordered by
/// `(shape, swapped, k)`.
pub fn analyze(t: &Triple, nmax: u64, mode: FeasibilityMode) -> Vec<ShapeCandidate> {
    let (tn, _) = t.normalized();
    let mut out = analyze_equilateral(&tn, nmax);
    out.extend(analyze_isosceles(&tn, Base::Alpha, nmax));
    out.extend(analyze_isosceles(&tn, Base::Beta, nmax));
    out.extend(analyze_two_alpha_two_beta(&tn, nmax));
    for o in [tn, tn.swapped()] {
        out.extend(analyze_alpha_pi3(&o, nmax, mode));
    }
    for o in [tn, tn.swapped()] {
        out.extend(analyze_alpha_2alpha(&o, nmax));
    }
    for o in [tn, tn.swapped()] {
        out.extend(analyze_alpha_2beta(&o, nmax));
    }
    out.sort_by_key(|c| (c.shape, c.swapped, c.k));
    out
}

/// A row of the equilateral bound table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub tile: Triple,
    pub four_d: u64,
}

/// Tiles with `c ≤ nmax` and `4·sqfree(ab) ≤ nmax`.
pub fn equilateral_table(nmax: u64) -> Vec<TableRow> {
    if nmax < 7 {
        return Vec::new();
    }
    enumerate_triples_param(nmax)
        .into_iter()
        .map(|t| TableRow { tile: t, four_d: 4 * sqfree(t.a * t.b) })
        .filter(|r| r.four_d <= nmax)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u64, b: u64, c: u64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    #[test]
    fn equilateral_357() {
        let cs = analyze_equilateral(&t(3, 5, 7), 200);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].n, 60);
        assert_eq!(cs[0].verdict, Verdict::Reject(RejectReason::KnownNoTiling { n: 60 }));
        assert_eq!((cs[1].n, cs[1].x), (135, int(45)));
        assert!(cs[1].is_accepted());
    }

    #[test]
    fn equilateral_7813() {
        // 84 = 4·8 + 4·13, so N = 126 passes the side test.
        let cs = analyze_equilateral(&t(7, 8, 13), 224);
        let ns: Vec<_> = cs.iter().map(|c| (c.n, c.is_accepted())).collect();
        assert_eq!(ns, vec![(56, false), (126, true), (224, true)]);
    }

    #[test]
    fn isosceles_examples() {
        let a = analyze_isosceles(&t(3, 5, 7), Base::Alpha, 200);
        assert_eq!(a[0].verdict, Verdict::Reject(RejectReason::SixtyFive));
        let b = analyze_isosceles(&t(3, 5, 7), Base::Beta, 200);
        assert_eq!(b[0].verdict, Verdict::Reject(RejectReason::SixtyFive));
        assert_eq!((b[1].n, b[1].x, b[1].z), (132, int(42), int(66)));
        assert!(b[1].is_accepted());
        assert_eq!(b[1].angles(), [(0, 1), (0, 1), (3, 1)].map(|(m, n)| crate::numerics::AngleMeasure::new(m, n)));
        let c = analyze_isosceles(&t(5, 16, 19), Base::Beta, 200);
        assert_eq!((c[0].n, c[0].x, c[0].z), (130, int(95), int(130)));
        assert!(c[0].is_accepted());
        let d = analyze_isosceles(&t(5, 16, 19), Base::Alpha, 200);
        assert_eq!(d[0].verdict, Verdict::Reject(RejectReason::NotSquarefree));
    }

    #[test]
    fn closed_forms() {
        let c = &analyze_two_alpha_two_beta(&t(3, 5, 7), 600);
        assert_eq!((c[0].n, c[0].x, c[0].y, c[0].z), (143, int(39), int(49), int(55)));
        assert_eq!((c[1].n, c[1].x), (572, int(78)));
        let c = &analyze_alpha_2alpha(&t(3, 5, 7).swapped(), 300)[0];
        assert_eq!((c.n, c.x, c.y, c.z), (264, int(49), int(77), int(72)));
        let c = &analyze_alpha_2alpha(&t(3, 5, 7), 400)[0];
        assert_eq!((c.n, c.x, c.y, c.z), (312, int(49), int(91), int(120)));
        let c = &analyze_alpha_2beta(&t(3, 5, 7), 400)[0];
        assert_eq!((c.n, c.x, c.y, c.z), (352, int(42), int(112), int(110)));
        let c = &analyze_alpha_2beta(&t(3, 5, 7).swapped(), 500)[0];
        assert_eq!(c.n, 416);
    }

    #[test]
    fn table_small() {
        let rows = equilateral_table(20);
        assert_eq!(rows, vec![TableRow { tile: t(5, 16, 19), four_d: 20 }]);
        assert!(equilateral_table(0).is_empty());
    }
}
