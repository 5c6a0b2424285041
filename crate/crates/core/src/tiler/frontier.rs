//! The uncovered region as exact polygons, tile placements at a corner, and
//! the frontier update after a placement.
//!
//! Every point carries an `f64` shadow. Predicates are decided on the shadow
//! when the result is far from zero and recomputed exactly otherwise.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::{doubled_area, tile_area, PlacedTile, Region, SearchConfig};
use crate::numerics::{AngleCalc, AngleMeasure, Point2, Q3Scalar, Rational};
use crate::numtheory::Triple;

type F2 = (f64, f64);

/// A frontier corner: its point, interior angle, and the direction of the
/// edge leaving it counterclockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Corner {
    pub pt: Point2,
    pub angle: AngleMeasure,
    pub out_dir: AngleMeasure,
    pub(crate) approx: F2,
}

impl Corner {
    pub fn new(pt: Point2, angle: AngleMeasure, out_dir: AngleMeasure) -> Self {
        let approx = pt.to_f64();
        Corner { pt, angle, out_dir, approx }
    }

    fn v(&self) -> V<'_> {
        (&self.pt, self.approx)
    }
}

/// One simple counterclockwise polygon still to be tiled.
#[derive(Clone, Debug, PartialEq)]
pub struct Frontier {
    pub corners: Vec<Corner>,
    pub remaining: u64,
}

impl Frontier {
    /// The whole region as a single frontier.
    pub fn from_region(r: &Region, remaining: u64) -> Frontier {
        let n = r.vertices.len();
        let mut dir = AngleMeasure::ZERO;
        let mut corners = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                dir = (dir + AngleMeasure::PI - r.corner_angles[i]).canonical_direction();
            }
            corners.push(Corner::new(r.vertices[i].clone(), r.corner_angles[i], dir));
        }
        Frontier { corners, remaining }
    }

    pub fn points(&self) -> Vec<Point2> {
        self.corners.iter().map(|c| c.pt.clone()).collect()
    }

    pub fn doubled_area(&self) -> Q3Scalar {
        doubled_area(&self.points())
    }

    fn min_point(&self) -> &Point2 {
        self.corners
            .iter()
            .map(|c| &c.pt)
            .min_by(|a, b| a.cmp_lex(b))
            .expect("nonempty frontier")
    }

    /// Corner with the smallest angle, ties broken by the lexicographic point.
    pub fn select_corner(&self, geo: &mut Geometry) -> usize {
        let mut best = 0;
        for i in 1..self.corners.len() {
            let (ci, cb) = (&self.corners[i], &self.corners[best]);
            let ord = geo.angle_cmp(ci.angle, cb.angle).then_with(|| lex_cmp(ci.v(), cb.v()));
            if ord == Ordering::Less {
                best = i;
            }
        }
        best
    }
}

/// Per-search geometry: the tile, memoised trigonometry, and a table of
/// lengths expressible as `pa + db + ec`.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub tile: Triple,
    pub calc: AngleCalc,
    /// Twice the tile area.
    pub tile_area2: Q3Scalar,
    alpha: f64,
    beta: f64,
    composable: Vec<bool>,
}

impl Geometry {
    pub fn new(tile: Triple) -> Self {
        let (tile, _) = tile.normalized();
        Geometry {
            tile,
            calc: AngleCalc::new(tile),
            tile_area2: tile_area(&tile).scale(&crate::numerics::int(2)),
            alpha: AngleMeasure::ALPHA.to_f64(&tile),
            beta: AngleMeasure::BETA.to_f64(&tile),
            composable: vec![true],
        }
    }

    /// Whether `len` is a nonnegative integer combination of `a`, `b`, `c`.
    pub fn composable(&mut self, len: &Rational) -> bool {
        if !len.is_integer() {
            return false;
        }
        match len.to_integer().to_u64() {
            Some(l) => self.composable_int(l),
            None => false,
        }
    }

    pub fn composable_int(&mut self, l: u64) -> bool {
        let l = l as usize;
        while self.composable.len() <= l {
            let i = self.composable.len();
            let ok = [self.tile.a, self.tile.b, self.tile.c]
                .iter()
                .any(|&s| i >= s as usize && self.composable[i - s as usize]);
            self.composable.push(ok);
        }
        self.composable[l]
    }

    /// Exact order of angle values, settled in `f64` when clearly apart.
    pub fn angle_cmp(&mut self, x: AngleMeasure, y: AngleMeasure) -> Ordering {
        if x == y {
            return Ordering::Equal;
        }
        let d = x - y;
        let v = d.m as f64 * self.alpha + d.n as f64 * self.beta;
        if v.abs() > 1e-9 * (1.0 + (d.m.abs() + d.n.abs()) as f64) {
            return if v > 0.0 { Ordering::Greater } else { Ordering::Less };
        }
        self.calc.cmp(x, y)
    }

    fn unit(&mut self, dir: AngleMeasure) -> Point2 {
        self.calc.unit(dir)
    }

    fn interior_angle(&mut self, d_in: AngleMeasure, d_out: AngleMeasure) -> AngleMeasure {
        self.calc.normalize_open(AngleMeasure::PI - (d_out - d_in))
    }
}

type V<'a> = (&'a Point2, F2);

/// Hash key of a point: equal points have bit-identical shadows.
type Key = (u64, u64);

fn key(f: F2) -> Key {
    (f.0.to_bits(), f.1.to_bits())
}

/// Relative slack on `f64` products of coordinates.
const FILTER: f64 = 1e-11;

fn scale(fs: &[F2]) -> f64 {
    fs.iter().fold(1.0, |m, &(x, y)| m.max(x.abs()).max(y.abs()))
}

fn filtered(v: f64, s: f64, exact: impl FnOnce() -> i32) -> i32 {
    let tol = FILTER * s * s;
    if v > tol {
        1
    } else if v < -tol {
        -1
    } else {
        exact()
    }
}

fn same(p: V, q: V) -> bool {
    p.1 == q.1 && p.0 == q.0
}

/// Sign of `(b − a) × (c − a)`.
fn orient(a: V, b: V, c: V) -> i32 {
    if same(a, c) || same(b, c) || same(a, b) {
        return 0;
    }
    let (ab, ac) = ((b.1 .0 - a.1 .0, b.1 .1 - a.1 .1), (c.1 .0 - a.1 .0, c.1 .1 - a.1 .1));
    let v = ab.0 * ac.1 - ab.1 * ac.0;
    filtered(v, scale(&[a.1, b.1, c.1]), || (b.0 - a.0).cross(&(c.0 - a.0)).sign())
}

/// Sign of `(b − a) · (d − c)`.
fn dot_sign(a: V, b: V, c: V, d: V) -> i32 {
    if same(a, b) || same(c, d) {
        return 0;
    }
    let v = (b.1 .0 - a.1 .0) * (d.1 .0 - c.1 .0) + (b.1 .1 - a.1 .1) * (d.1 .1 - c.1 .1);
    filtered(v, scale(&[a.1, b.1, c.1, d.1]), || (b.0 - a.0).dot(&(d.0 - c.0)).sign())
}

fn lex_cmp(p: V, q: V) -> Ordering {
    let s = scale(&[p.1, q.1]);
    let by = |a: f64, b: f64, exact: &dyn Fn() -> Ordering| {
        let tol = FILTER * s;
        if a - b > tol {
            Ordering::Greater
        } else if b - a > tol {
            Ordering::Less
        } else {
            exact()
        }
    };
    by(p.1 .0, q.1 .0, &|| p.0.x.cmp_value(&q.0.x))
        .then_with(|| by(p.1 .1, q.1 .1, &|| p.0.y.cmp_value(&q.0.y)))
}

/// A tile placed at a frontier corner.
#[derive(Clone, Debug, PartialEq)]
pub struct Placement {
    pub tile: PlacedTile,
    /// Tile angle at the corner.
    pub tau: AngleMeasure,
    /// Counterclockwise tile vertices, starting at the corner.
    pub ccw: [Point2; 3],
    /// Direction of each counterclockwise edge `ccw[i] → ccw[i+1]`.
    pub dirs: [AngleMeasure; 3],
    approx: [F2; 3],
}

impl Placement {
    fn v(&self, i: usize) -> V<'_> {
        (&self.ccw[i], self.approx[i])
    }
}

const A: AngleMeasure = AngleMeasure::ALPHA;
const B: AngleMeasure = AngleMeasure::BETA;
const G: AngleMeasure = AngleMeasure::GAMMA;

/// All tile placements with a vertex at corner `idx` and an edge along the
/// frontier edge leaving it, that fit inside the frontier. Order: tile angle
/// α, β, γ; unmirrored before mirrored.
pub fn placements_at_corner(
    f: &Frontier,
    idx: usize,
    geo: &mut Geometry,
    cfg: &SearchConfig,
) -> Vec<Placement> {
    let corner = &f.corners[idx];
    let mut out = Vec::new();
    for tau in [A, B, G] {
        if !corner.angle.dominates(&tau) {
            continue;
        }
        for mirrored in [false, true] {
            if mirrored && !cfg.allow_mirror {
                continue;
            }
            let p = make_placement(corner, tau, mirrored, geo);
            if fits(f, &p) {
                out.push(p);
            }
        }
    }
    out
}

fn make_placement(corner: &Corner, tau: AngleMeasure, mirrored: bool, geo: &mut Geometry) -> Placement {
    let (v, d) = (&corner.pt, corner.out_dir.canonical_direction());
    let t = geo.tile;
    let am = AngleMeasure::new;
    // Counterclockwise from γ: vertex angles, edge lengths and tile-frame edge directions.
    let (angles, lens, dirs) = if mirrored {
        ([G, A, B], [t.b, t.c, t.a], [am(4, 4), am(0, 1), am(3, 3)])
    } else {
        ([G, B, A], [t.a, t.c, t.b], [am(0, 0), am(3, 2), am(5, 5)])
    };
    let start = angles.iter().position(|&x| x == tau).expect("tile angle present");
    let rho = (d - dirs[start]).canonical_direction();
    let k = |i: usize| (start + i) % 3;
    let dirs = [0, 1, 2].map(|i| (dirs[k(i)] + rho).canonical_direction());
    let step = |geo: &mut Geometry, i: usize| geo.unit(dirs[i]).scale(&Q3Scalar::from_int(lens[k(i)] as i64));
    let p1 = v + &step(geo, 0);
    let p2 = &p1 + &step(geo, 1);
    let approx = [corner.approx, p1.to_f64(), p2.to_f64()];
    let ccw = [v.clone(), p1, p2];
    let anchor = ccw[(3 - start) % 3].clone();
    let rot = geo.calc.rotation(rho).with_mirror(mirrored);
    let tile = PlacedTile { anchor, rot, mirrored, tile: t, dir: rho };
    Placement { tile, tau, ccw, dirs, approx }
}

/// The placement's vertices agree with the tile's own vertex formula.
pub(crate) fn audit_placement(p: &Placement) -> Result<(), String> {
    let mut got = p.tile.ccw_vertices().to_vec();
    let mut want = p.ccw.to_vec();
    got.sort_by(|a, b| a.cmp_lex(b));
    want.sort_by(|a, b| a.cmp_lex(b));
    if got != want {
        return Err(format!("placement at {} disagrees with its tile", p.ccw[0]));
    }
    Ok(())
}

fn bbox(fs: &[F2]) -> (f64, f64, f64, f64) {
    fs.iter().fold((f64::MAX, f64::MAX, f64::MIN, f64::MIN), |b, &(x, y)| {
        (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y))
    })
}

fn boxes_apart(p: (f64, f64, f64, f64), q: (f64, f64, f64, f64), tol: f64) -> bool {
    p.2 < q.0 - tol || q.2 < p.0 - tol || p.3 < q.1 - tol || q.3 < p.1 - tol
}

/// Whether the closed segment `s–e` meets the open triangle `tri`.
fn hits_open_triangle(s: V, e: V, tri: [V; 3]) -> bool {
    let sc = scale(&[s.1, e.1, tri[0].1, tri[1].1, tri[2].1]);
    if boxes_apart(bbox(&[s.1, e.1]), bbox(&[tri[0].1, tri[1].1, tri[2].1]), 1e-9 * sc) {
        return false;
    }
    let cross = |p: F2, q: F2, r: F2| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    let mut g0 = [0.0; 3];
    let mut g1 = [0.0; 3];
    let mut all0 = true;
    let mut all1 = true;
    for i in 0..3 {
        let (p, q) = (tri[i], tri[(i + 1) % 3]);
        g0[i] = cross(p.1, q.1, s.1);
        g1[i] = cross(p.1, q.1, e.1);
        let s0 = orient(p, q, s);
        let s1 = orient(p, q, e);
        if s0 <= 0 && s1 <= 0 {
            return false;
        }
        all0 &= s0 > 0;
        all1 &= s1 > 0;
    }
    if all0 || all1 {
        return true;
    }
    // Clip the parameter range in f64 while every crossing is well conditioned.
    let tol = FILTER * sc * sc;
    let (mut lo_min, mut lo_max, mut hi_min, mut hi_max) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    for i in 0..3 {
        let slope = g1[i] - g0[i];
        if slope.abs() <= 4.0 * tol {
            return hits_open_triangle_exact(s.0, e.0, [tri[0].0, tri[1].0, tri[2].0]);
        }
        let t = -g0[i] / slope;
        let err = 2.0 * tol * (1.0 + t.abs()) / slope.abs();
        if slope > 0.0 {
            lo_min = lo_min.max(t - err);
            lo_max = lo_max.max(t + err);
        } else {
            hi_min = hi_min.min(t - err);
            hi_max = hi_max.min(t + err);
        }
    }
    if lo_max < hi_min {
        true
    } else if lo_min > hi_max {
        false
    } else {
        hits_open_triangle_exact(s.0, e.0, [tri[0].0, tri[1].0, tri[2].0])
    }
}

/// Clips the segment against the three open half-planes.
fn hits_open_triangle_exact(s: &Point2, e: &Point2, tri: [&Point2; 3]) -> bool {
    let mut lo = Q3Scalar::zero();
    let mut hi = Q3Scalar::one();
    for i in 0..3 {
        let p = tri[i];
        let edge = tri[(i + 1) % 3] - p;
        let (g0, g1) = (edge.cross(&(s - p)), edge.cross(&(e - p)));
        let slope = &g1 - &g0;
        let sign = slope.sign();
        if sign == 0 {
            if g0.sign() <= 0 {
                return false;
            }
            continue;
        }
        let t = (-&g0).checked_div(&slope).expect("nonzero slope");
        if sign > 0 {
            if t.cmp_value(&lo) == Ordering::Greater {
                lo = t;
            }
        } else if t.cmp_value(&hi) == Ordering::Less {
            hi = t;
        }
    }
    lo.cmp_value(&hi) == Ordering::Less
}

fn fits(f: &Frontier, p: &Placement) -> bool {
    let n = f.corners.len();
    let tri = [p.v(0), p.v(1), p.v(2)];
    (0..n).all(|i| !hits_open_triangle(f.corners[i].v(), f.corners[(i + 1) % n].v(), tri))
}

#[derive(Clone, Debug)]
struct Seg {
    s: Point2,
    sf: F2,
    e: Point2,
    ef: F2,
    dir: AngleMeasure,
}

impl Seg {
    fn sv(&self) -> V<'_> {
        (&self.s, self.sf)
    }
    fn ev(&self) -> V<'_> {
        (&self.e, self.ef)
    }
}

/// Splits `seg` at every point of `pts` strictly inside it.
fn split(seg: Seg, pts: &[V], out: &mut Vec<Seg>) {
    let sc = scale(&[seg.sf, seg.ef]);
    let sb = bbox(&[seg.sf, seg.ef]);
    let mut cuts: Vec<V> = pts
        .iter()
        .copied()
        .filter(|&q| {
            !boxes_apart(sb, bbox(&[q.1]), 1e-9 * sc)
                && orient(seg.sv(), seg.ev(), q) == 0
                && dot_sign(seg.sv(), q, seg.sv(), seg.ev()) > 0
                && dot_sign(seg.ev(), q, seg.ev(), seg.sv()) > 0
        })
        .collect();
    if cuts.is_empty() {
        out.push(seg);
        return;
    }
    cuts.sort_by(|&p, &q| dot_sign(p, q, seg.sv(), seg.ev()).cmp(&0).reverse());
    cuts.dedup_by(|a, b| a.0 == b.0);
    let (mut start, mut sf) = (seg.s.clone(), seg.sf);
    for (q, qf) in cuts {
        out.push(Seg { s: start, sf, e: q.clone(), ef: qf, dir: seg.dir });
        start = q.clone();
        sf = qf;
    }
    out.push(Seg { s: start, sf, e: seg.e, ef: seg.ef, dir: seg.dir });
}

/// The frontiers left after placing `p` inside `f`, or `None` if the
/// result cannot be completed.
pub(crate) fn apply_placement(f: &Frontier, p: &Placement, geo: &mut Geometry) -> Option<Vec<Frontier>> {
    let n = f.corners.len();
    let tri = [p.v(0), p.v(1), p.v(2)];
    let mut segs: Vec<Seg> = Vec::with_capacity(n + 6);
    for i in 0..n {
        let (c, d) = (&f.corners[i], &f.corners[(i + 1) % n]);
        let seg = Seg { s: c.pt.clone(), sf: c.approx, e: d.pt.clone(), ef: d.approx, dir: c.out_dir };
        split(seg, &tri, &mut segs);
    }
    let region_count = segs.len();
    let fpts: Vec<V> = f.corners.iter().map(|c| c.v()).collect();
    for i in 0..3 {
        let (s, e) = (tri[(i + 1) % 3], tri[i]);
        let seg = Seg {
            s: s.0.clone(),
            sf: s.1,
            e: e.0.clone(),
            ef: e.1,
            dir: (p.dirs[i] + AngleMeasure::PI).canonical_direction(),
        };
        split(seg, &fpts, &mut segs);
    }

    // Cancel each reversed tile edge against the frontier edge it covers.
    let mut alive = vec![true; segs.len()];
    let mut by_ends: HashMap<(Key, Key), Vec<usize>> = HashMap::new();
    for (i, s) in segs[..region_count].iter().enumerate() {
        by_ends.entry((key(s.sf), key(s.ef))).or_default().push(i);
    }
    for j in region_count..segs.len() {
        let t = &segs[j];
        let Some(cands) = by_ends.get(&(key(t.ef), key(t.sf))) else { continue };
        if let Some(&i) = cands.iter().find(|&&i| alive[i] && segs[i].s == t.e && segs[i].e == t.s) {
            alive[i] = false;
            alive[j] = false;
        }
    }
    let live: Vec<usize> = (0..segs.len()).filter(|&i| alive[i]).collect();
    if live.is_empty() {
        return (f.remaining == 1).then(Vec::new);
    }

    // Link each edge to the outgoing edge that turns least to the left.
    let mut outgoing: HashMap<Key, Vec<usize>> = HashMap::new();
    for &i in &live {
        outgoing.entry(key(segs[i].sf)).or_default().push(i);
    }
    let mut next: HashMap<usize, usize> = HashMap::new();
    for &i in &live {
        let cands: Vec<usize> =
            outgoing.get(&key(segs[i].ef))?.iter().copied().filter(|&c| segs[c].s == segs[i].e).collect();
        if cands.is_empty() {
            return None;
        }
        let pick = if cands.len() == 1 {
            cands[0]
        } else {
            let mut best = cands[0];
            let mut best_angle = geo.interior_angle(segs[i].dir, segs[best].dir);
            for &c in &cands[1..] {
                let ang = geo.interior_angle(segs[i].dir, segs[c].dir);
                if geo.angle_cmp(ang, best_angle) == Ordering::Less {
                    best = c;
                    best_angle = ang;
                }
            }
            best
        };
        next.insert(i, pick);
    }

    let mut cycles = Vec::new();
    let mut seen = vec![false; segs.len()];
    for &start in &live {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(cur);
            cur = next[&cur];
        }
        if cur != start {
            return None;
        }
        cycles.push(cycle);
    }
    let single = cycles.len() == 1;
    let mut result = Vec::with_capacity(cycles.len());
    let mut total = 0u64;
    for cycle in &cycles {
        let count = if single { Some(f.remaining - 1) } else { None };
        let fr = build_frontier(&segs, cycle, count, geo)?;
        total += fr.remaining;
        result.push(fr);
    }
    (total + 1 == f.remaining).then_some(result)
}

/// Polygon of one traced cycle. `count` is the tile count when already
/// known from the parent; otherwise it comes from the exact area.
fn build_frontier(segs: &[Seg], cycle: &[usize], count: Option<u64>, geo: &mut Geometry) -> Option<Frontier> {
    // Runs of equal direction become single edges.
    let m = cycle.len();
    let mut corners = Vec::new();
    for k in 0..m {
        let d_in = segs[cycle[(k + m - 1) % m]].dir;
        let seg = &segs[cycle[k]];
        if d_in == seg.dir {
            continue;
        }
        let angle = geo.interior_angle(d_in, seg.dir);
        if !angle.is_nonneg() {
            return None;
        }
        corners.push(Corner { pt: seg.s.clone(), angle, out_dir: seg.dir, approx: seg.sf });
    }
    if corners.len() < 3 {
        return None;
    }
    let remaining = match count {
        Some(c) => c,
        None => {
            let area2 = doubled_area(&corners.iter().map(|c| c.pt.clone()).collect::<Vec<_>>());
            if area2.sign() <= 0 {
                return None;
            }
            let ratio = area2.checked_div(&geo.tile_area2)?;
            ratio.as_rational().filter(|r| r.is_integer())?.to_integer().to_u64()?
        }
    };
    if remaining == 0 {
        return None;
    }
    let fr = Frontier { corners, remaining };
    if !edges_composable(&fr, geo) {
        return None;
    }
    Some(fr)
}

/// Every edge between two corners below π must be a sum of tile sides.
/// Lengths are taken from the `f64` shadow: an edge is only rejected when
/// it is clearly not an integer or its integer is not composable.
pub(crate) fn edges_composable(f: &Frontier, geo: &mut Geometry) -> bool {
    let n = f.corners.len();
    let convex: Vec<bool> =
        f.corners.iter().map(|c| geo.angle_cmp(c.angle, AngleMeasure::PI) == Ordering::Less).collect();
    for i in 0..n {
        let j = (i + 1) % n;
        if !(convex[i] && convex[j]) {
            continue;
        }
        let (p, q) = (f.corners[i].approx, f.corners[j].approx);
        let len = (q.0 - p.0).hypot(q.1 - p.1);
        let r = len.round();
        if (len - r).abs() > 1e-6 || !geo.composable_int(r as u64) {
            return false;
        }
    }
    true
}

/// Sibling order on the stack: the smallest pocket ends up on top.
pub(crate) fn order_frontiers(v: &mut [Frontier]) {
    v.sort_by(|a, b| b.remaining.cmp(&a.remaining).then_with(|| b.min_point().cmp_lex(a.min_point())));
}

/// Diagnostics: exact area and numeric angle checks for one frontier.
pub(crate) fn audit(f: &Frontier, geo: &mut Geometry) -> Result<(), String> {
    let want = geo.tile_area2.scale(&Rational::from_integer(f.remaining.into()));
    if f.doubled_area() != want {
        return Err(format!("area of frontier with {} tiles is off", f.remaining));
    }
    let n = f.corners.len();
    for i in 0..n {
        let prev = &f.corners[(i + n - 1) % n].pt;
        let c = &f.corners[i];
        let next = &f.corners[(i + 1) % n].pt;
        if c.approx != c.pt.to_f64() {
            return Err(format!("corner {} has a stale approximation", c.pt));
        }
        let (px, py) = (prev - &c.pt).to_f64();
        let (nx, ny) = (next - &c.pt).to_f64();
        let mut geom = py.atan2(px) - ny.atan2(nx);
        while geom <= 0.0 {
            geom += std::f64::consts::TAU;
        }
        let nominal = c.angle.to_f64(&geo.tile);
        if (geom - nominal).abs() > 1e-9 * nominal.max(1.0) {
            return Err(format!("corner {} angle {} is {geom} geometrically", c.pt, c.angle));
        }
    }
    Ok(())
}
