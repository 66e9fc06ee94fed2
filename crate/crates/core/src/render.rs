//! Static pictures of regions, tilings and path families.
//!
//! SVG output uses the planar embedding of [`Point::planar`] scaled by
//! [`SCALE`], with `y` pointing down the page. Every triangle or lozenge is one
//! `<polygon>` element carrying a `class` attribute, so the output is easy to
//! inspect and to count. ASCII output places each triangle in one character
//! column, two columns per lattice unit.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::counting::{PathFamily, Tiling};
use crate::lattice::{LozengeKind, Point, Region, TriCoord};
use crate::region::reduce_forced;

pub const SCALE: f64 = 24.0;

const DENT_FILL: &str = "#222222";
const FORCED_FILL: &str = "#b8b8b8";

fn xy(pt: &Point) -> (f64, f64) {
    let (x, y) = pt.planar();
    (x * SCALE, -y * SCALE)
}

fn polygon(out: &mut String, pts: &[Point], class: &str, fill: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|p| {
            let (x, y) = xy(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    writeln!(
        out,
        r##"  <polygon class="{class}" points="{}" fill="{fill}" stroke="#555555" stroke-width="1"/>"##,
        coords.join(" ")
    )
    .expect("writing to a String");
}

fn document(cells: impl Iterator<Item = TriCoord>, body: &str) -> String {
    let pts: Vec<(f64, f64)> = cells.flat_map(|c| c.vertices()).map(|p| xy(&p)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = SCALE / 2.0;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">\n{body}</svg>\n",
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    )
}

/// Region triangles, with `dents` filled dark and forced lozenges shaded.
pub fn svg_region(region: &Region, dents: &[TriCoord]) -> String {
    let forced: BTreeSet<TriCoord> =
        reduce_forced(region).map(|red| red.forced.iter().flat_map(|l| l.cells()).collect()).unwrap_or_default();
    let mut body = String::new();
    for c in region.iter() {
        let orient = if c.is_up() { "up" } else { "down" };
        let (class, fill) = if forced.contains(c) {
            (format!("tri {orient} forced"), FORCED_FILL)
        } else {
            (format!("tri {orient}"), "#ffffff")
        };
        polygon(&mut body, &c.vertices(), &class, fill);
    }
    for d in dents {
        polygon(&mut body, &d.vertices(), "dent", DENT_FILL);
    }
    document(region.iter().chain(dents).copied(), &body)
}

fn kind_name(kind: LozengeKind) -> &'static str {
    match kind {
        LozengeKind::East => "east",
        LozengeKind::West => "west",
        LozengeKind::South => "south",
    }
}

fn kind_fill(kind: LozengeKind) -> &'static str {
    match kind {
        LozengeKind::East => "#f2f2f2",
        LozengeKind::West => "#9fb8d8",
        LozengeKind::South => "#e3c28f",
    }
}

/// One polygon per lozenge, shaded by direction, plus the dents.
pub fn svg_tiling(region: &Region, dents: &[TriCoord], tiling: &Tiling) -> String {
    let mut body = String::new();
    for l in tiling.lozenges() {
        let kind = l.kind();
        polygon(&mut body, &l.outline(), &format!("lozenge {}", kind_name(kind)), kind_fill(kind));
    }
    for d in dents {
        polygon(&mut body, &d.vertices(), "dent", DENT_FILL);
    }
    document(region.iter().chain(dents).copied(), &body)
}

/// Midpoint of the edge shared by `Up(y, p)` and `Down(y, p)`.
fn path_point(pt: (i64, i64)) -> (f64, f64) {
    let (p, y) = (pt.0 as i32, -pt.1 as i32);
    let (ax, ay) = xy(&Point::new(p, y - 1));
    let (bx, by) = xy(&Point::new(p + 1, y));
    ((ax + bx) / 2.0, (ay + by) / 2.0)
}

/// Region triangles with each path drawn through the edges it crosses.
/// Paths are in region coordinates, as returned by `tiling_to_paths`.
pub fn svg_paths(region: &Region, dents: &[TriCoord], family: &PathFamily) -> String {
    let mut body = String::new();
    for c in region.iter() {
        polygon(&mut body, &c.vertices(), if c.is_up() { "tri up" } else { "tri down" }, "#ffffff");
    }
    for d in dents {
        polygon(&mut body, &d.vertices(), "dent", DENT_FILL);
    }
    for path in &family.paths {
        let pts: Vec<String> = path
            .points()
            .into_iter()
            .map(|pt| {
                let (x, y) = path_point(pt);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            body,
            r##"  <polyline class="path" points="{}" fill="none" stroke="#c0392b" stroke-width="3"/>"##,
            pts.join(" ")
        )
        .expect("writing to a String");
    }
    document(region.iter().chain(dents).copied(), &body)
}

fn ascii_column(c: &TriCoord) -> i32 {
    2 * c.col - c.row + if c.is_up() { 1 } else { 2 }
}

fn ascii_grid(cells: &[(TriCoord, char)]) -> String {
    let Some(min_row) = cells.iter().map(|(c, _)| c.row).min() else {
        return String::new();
    };
    let max_row = cells.iter().map(|(c, _)| c.row).max().expect("non-empty");
    let min_col = cells.iter().map(|(c, _)| ascii_column(c)).min().expect("non-empty");
    let mut out = String::new();
    for r in min_row..=max_row {
        let mut row: Vec<(i32, char)> =
            cells.iter().filter(|(c, _)| c.row == r).map(|(c, ch)| (ascii_column(c) - min_col, *ch)).collect();
        row.sort();
        let mut line = String::new();
        for (col, ch) in row {
            while (line.len() as i32) < col {
                line.push(' ');
            }
            line.push(ch);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// `^` and `v` for triangles, `#` for dents.
pub fn ascii_region(region: &Region, dents: &[TriCoord]) -> String {
    let mut cells: Vec<(TriCoord, char)> = region.iter().map(|c| (*c, if c.is_up() { '^' } else { 'v' })).collect();
    cells.extend(dents.iter().map(|d| (*d, '#')));
    ascii_grid(&cells)
}

/// Each triangle marked by the direction of its lozenge: `e`, `w` or `s`.
pub fn ascii_tiling(region: &Region, dents: &[TriCoord], tiling: &Tiling) -> String {
    let mut cells: Vec<(TriCoord, char)> = Vec::new();
    for l in tiling.lozenges() {
        let ch = match l.kind() {
            LozengeKind::East => 'e',
            LozengeKind::West => 'w',
            LozengeKind::South => 's',
        };
        cells.extend(l.cells().map(|c| (c, ch)));
    }
    cells.extend(region.iter().filter(|c| tiling.covering(c).is_none()).map(|c| (*c, '?')));
    cells.extend(dents.iter().map(|d| (*d, '#')));
    ascii_grid(&cells)
}

/// `*` on triangles crossed by a path, `.` elsewhere.
pub fn ascii_paths(region: &Region, dents: &[TriCoord], family: &PathFamily) -> String {
    let mut on_path = BTreeSet::new();
    for path in &family.paths {
        for (p, negy) in path.points() {
            let (p, y) = (p as i32, -negy as i32);
            on_path.insert(TriCoord::up(y, p));
            on_path.insert(TriCoord::down(y, p));
        }
    }
    let mut cells: Vec<(TriCoord, char)> =
        region.iter().map(|c| (*c, if on_path.contains(c) { '*' } else { '.' })).collect();
    cells.extend(dents.iter().map(|d| (*d, '#')));
    ascii_grid(&cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{first_tiling, tiling_to_paths};
    use crate::region::{build_region, DentedHexParams};

    #[test]
    fn region_svg_has_one_polygon_per_triangle() {
        let r = build_region(&DentedHexParams::hexagon(3, 4, 2));
        let svg = svg_region(&r, &[]);
        assert_eq!(svg.matches("<polygon class=\"tri").count(), 52);
    }

    #[test]
    fn dents_are_drawn_dark() {
        let p = DentedHexParams::balanced(1, 2, 2, vec![2], vec![1]).unwrap();
        let svg = svg_region(&build_region(&p), &p.dent_cells());
        assert_eq!(svg.matches("class=\"dent\"").count(), 2);
        assert!(svg.contains(DENT_FILL));
    }

    #[test]
    fn unit_hexagon_tiling_has_three_lozenges() {
        let r = build_region(&DentedHexParams::hexagon(1, 1, 1));
        let t = first_tiling(&r).unwrap();
        assert_eq!(svg_tiling(&r, &[], &t).matches("class=\"lozenge").count(), 3);
    }

    #[test]
    fn ascii_unit_hexagon() {
        let r = build_region(&DentedHexParams::hexagon(1, 1, 1));
        assert_eq!(ascii_region(&r, &[]), "^v^\nv^v\n");
        let t = first_tiling(&r).unwrap();
        let f = tiling_to_paths(&r, &t);
        let pic = ascii_paths(&r, &[], &f);
        assert!(pic.contains('*') && pic.contains('.'));
        assert_eq!(pic, ascii_paths(&r, &[], &f));
    }
}
