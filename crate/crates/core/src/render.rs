//! SVG drawings of a region and a list of placed tiles.

use std::fmt::Write as _;

use crate::numerics::Point2;
use crate::tiler::{PlacedTile, Region};

const UNIT: f64 = 10.0;
const MARGIN: f64 = 20.0;

/// Canvas mapping: region bounding box scaled by `UNIT`, y pointing up.
struct Canvas {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Canvas {
    fn new(region: &Region) -> Canvas {
        let pts: Vec<(f64, f64)> = region.vertices.iter().map(Point2::to_f64).collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| {
            pts.iter().map(pick).fold(init, f)
        };
        let min_x = fold(f64::min, f64::INFINITY, |p| p.0);
        let max_x = fold(f64::max, f64::NEG_INFINITY, |p| p.0);
        let min_y = fold(f64::min, f64::INFINITY, |p| p.1);
        let max_y = fold(f64::max, f64::NEG_INFINITY, |p| p.1);
        Canvas {
            min_x,
            max_y,
            width: (max_x - min_x) * UNIT + 2.0 * MARGIN,
            height: (max_y - min_y) * UNIT + 2.0 * MARGIN,
        }
    }

    fn map(&self, p: &Point2) -> (f64, f64) {
        let (x, y) = p.to_f64();
        ((x - self.min_x) * UNIT + MARGIN, (self.max_y - y) * UNIT + MARGIN)
    }

    fn points(&self, pts: &[Point2]) -> String {
        pts.iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{x:.6},{y:.6}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// SVG 1.1 document with one polygon per tile, then the region outline and,
/// when `labels` is set, the corner names `A`, `C`, `B` in vertex order.
pub fn render_svg(region: &Region, tiles: &[PlacedTile], labels: bool) -> String {
    let cv = Canvas::new(region);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.6}" height="{h:.6}" viewBox="0 0 {w:.6} {h:.6}">"#,
        w = cv.width,
        h = cv.height
    );
    for t in tiles {
        let fill = if t.mirrored { "#f2dfc4" } else { "#c9dcef" };
        let _ = writeln!(
            s,
            r#"  <polygon class="tile" points="{}" fill="{fill}" stroke="black" stroke-width="0.5"/>"#,
            cv.points(&t.vertices())
        );
    }
    let _ = writeln!(
        s,
        r#"  <polygon class="region" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        cv.points(&region.vertices)
    );
    if labels {
        for (p, name) in region.vertices.iter().zip(["A", "C", "B"]) {
            let (x, y) = cv.map(p);
            let _ = writeln!(
                s,
                r#"  <text x="{x:.6}" y="{y:.6}" font-family="serif" font-size="12" dx="-4" dy="-4">{name}</text>"#
            );
        }
    }
    s.push_str("</svg>\n");
    s
}
