use super::{tile_area, PlacedTile, Region};
use crate::boundary::DRow;
use crate::numerics::{Point2, Q3Scalar, Rational};

fn side_squares(v: &[Point2; 3]) -> [Q3Scalar; 3] {
    [0, 1, 2].map(|i| (&v[(i + 1) % 3] - &v[i]).norm2())
}

/// Counterclockwise order of three points, or `None` if collinear.
fn ccw(v: [Point2; 3]) -> Option<[Point2; 3]> {
    let o = (&v[1] - &v[0]).cross(&(&v[2] - &v[0])).sign();
    match o {
        1 => Some(v),
        -1 => Some([v[0].clone(), v[2].clone(), v[1].clone()]),
        _ => None,
    }
}

/// Some edge of `p` has all of `q` on its closed outer side.
fn separated(p: &[Point2; 3], q: &[Point2; 3]) -> bool {
    (0..3).any(|i| {
        let e = &p[(i + 1) % 3] - &p[i];
        q.iter().all(|x| e.cross(&(x - &p[i])).sign() <= 0)
    })
}

/// Checks that `tiles` are `n` congruent copies of the tile with disjoint
/// interiors inside the (convex) region and covering its area.
pub fn verify_tiling_detailed(region: &Region, tiles: &[PlacedTile], n: u64) -> Result<(), String> {
    if tiles.len() as u64 != n {
        return Err(format!("{} tiles, expected {n}", tiles.len()));
    }
    let t = region.tile;
    let mut want = [t.a, t.b, t.c].map(|s| Q3Scalar::from_int((s * s) as i64));
    want.sort_by(|x, y| x.cmp_value(y));
    let rv = &region.vertices;
    let m = rv.len();

    let mut tris = Vec::with_capacity(tiles.len());
    for (i, tile) in tiles.iter().enumerate() {
        let v = ccw(tile.vertices()).ok_or_else(|| format!("tile {i} is degenerate"))?;
        let mut got = side_squares(&v);
        got.sort_by(|x, y| x.cmp_value(y));
        if got != want {
            return Err(format!("tile {i} has the wrong side lengths"));
        }
        for p in &v {
            for j in 0..m {
                let e = &rv[(j + 1) % m] - &rv[j];
                if e.cross(&(p - &rv[j])).sign() < 0 {
                    return Err(format!("tile {i} vertex {p} lies outside the region"));
                }
            }
        }
        tris.push(v);
    }
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            if !separated(&tris[i], &tris[j]) && !separated(&tris[j], &tris[i]) {
                return Err(format!("tiles {i} and {j} overlap"));
            }
        }
    }
    let total = tile_area(&t).scale(&Rational::from_integer(n.into()));
    if total != region.area() {
        return Err("tile areas do not add up to the region area".into());
    }
    Ok(())
}

pub fn verify_tiling(region: &Region, tiles: &[PlacedTile], n: u64) -> bool {
    verify_tiling_detailed(region, tiles, n).is_ok()
}

/// For each region side (starting at `A`, counterclockwise), how many tile
/// edges of length `a`, `b`, `c` lie along it.
pub fn boundary_rows(region: &Region, tiles: &[PlacedTile]) -> Vec<DRow> {
    let t = region.tile;
    let sq = |s: u64| Q3Scalar::from_int((s * s) as i64);
    let (a2, b2, c2) = (sq(t.a), sq(t.b), sq(t.c));
    let rv = &region.vertices;
    let m = rv.len();
    (0..m)
        .map(|j| {
            let (p0, p1) = (&rv[j], &rv[(j + 1) % m]);
            let e = p1 - p0;
            let mut row = DRow { p: 0, d: 0, e: 0 };
            for tile in tiles {
                let v = tile.vertices();
                for k in 0..3 {
                    let (u, w) = (&v[k], &v[(k + 1) % 3]);
                    if !e.cross(&(u - p0)).is_zero() || !e.cross(&(w - p0)).is_zero() {
                        continue;
                    }
                    let l2 = (w - u).norm2();
                    if l2 == a2 {
                        row.p += 1;
                    } else if l2 == b2 {
                        row.d += 1;
                    } else if l2 == c2 {
                        row.e += 1;
                    }
                }
            }
            row
        })
        .collect()
}
