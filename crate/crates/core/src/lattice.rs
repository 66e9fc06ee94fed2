//! Unit triangles on the triangular lattice.
//!
//! Horizontal lattice lines are numbered southward. Row `r` is the strip
//! between lines `r - 1` and `r`. A lattice point is written `(p, y)` for the
//! `p`-th point on line `y`; its planar position is `(p - y/2, -y * sqrt(3)/2)`,
//! so every line is shifted half a unit west of the one above it.
//!
//! Within row `r` the triangles alternate `Up(p), Down(p), Up(p + 1), ...`
//! from west to east:
//!
//! * `Up(r, p)` has apex `(p, r - 1)` and base `(p, r) - (p + 1, r)`.
//! * `Down(r, p)` has top `(p, r - 1) - (p + 1, r - 1)` and bottom vertex `(p + 1, r)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Orientation of a unit triangle. `Up` sorts before `Down` so that the derived
/// ordering of [`TriCoord`] is row-major from west to east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// A unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriCoord {
    pub row: i32,
    pub col: i32,
    pub orient: Orient,
}

impl TriCoord {
    pub const fn up(row: i32, col: i32) -> Self {
        TriCoord { row, col, orient: Orient::Up }
    }

    pub const fn down(row: i32, col: i32) -> Self {
        TriCoord { row, col, orient: Orient::Down }
    }

    pub fn is_up(&self) -> bool {
        self.orient == Orient::Up
    }

    /// The three edge-sharing triangles, in the order west, east, vertical.
    pub fn neighbors(&self) -> [TriCoord; 3] {
        let (r, p) = (self.row, self.col);
        match self.orient {
            Orient::Up => [TriCoord::down(r, p - 1), TriCoord::down(r, p), TriCoord::down(r + 1, p)],
            Orient::Down => [TriCoord::up(r, p), TriCoord::up(r, p + 1), TriCoord::up(r - 1, p)],
        }
    }

    pub fn is_adjacent(&self, other: &TriCoord) -> bool {
        self.neighbors().contains(other)
    }

    /// Corner points, listed counterclockwise.
    pub fn vertices(&self) -> [Point; 3] {
        let (r, p) = (self.row, self.col);
        match self.orient {
            Orient::Up => [Point::new(p, r), Point::new(p + 1, r), Point::new(p, r - 1)],
            Orient::Down => [Point::new(p, r - 1), Point::new(p + 1, r), Point::new(p + 1, r - 1)],
        }
    }

    /// Counterclockwise edges paired with the triangle on the other side.
    pub fn edges(&self) -> [(Point, Point, TriCoord); 3] {
        let [v0, v1, v2] = self.vertices();
        let (r, p) = (self.row, self.col);
        match self.orient {
            Orient::Up => {
                [(v0, v1, TriCoord::down(r + 1, p)), (v1, v2, TriCoord::down(r, p)), (v2, v0, TriCoord::down(r, p - 1))]
            }
            Orient::Down => {
                [(v0, v1, TriCoord::up(r, p)), (v1, v2, TriCoord::up(r, p + 1)), (v2, v0, TriCoord::up(r - 1, p))]
            }
        }
    }

    pub fn translated(&self, d_row: i32, d_col: i32) -> TriCoord {
        TriCoord { row: self.row + d_row, col: self.col + d_col, orient: self.orient }
    }

    /// Reflection across the vertical line `x = 0`.
    pub fn mirrored(&self) -> TriCoord {
        let (r, p) = (self.row, self.col);
        match self.orient {
            Orient::Up => TriCoord::up(r, r - 1 - p),
            Orient::Down => TriCoord::down(r, r - 2 - p),
        }
    }

    /// Planar centroid, in units of the triangle side.
    pub fn centroid(&self) -> (f64, f64) {
        let vs = self.vertices();
        let (mut x, mut y) = (0.0, 0.0);
        for v in vs {
            let (px, py) = v.planar();
            x += px;
            y += py;
        }
        (x / 3.0, y / 3.0)
    }
}

impl fmt::Display for TriCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = if self.is_up() { "U" } else { "D" };
        write!(f, "{}({},{})", o, self.row, self.col)
    }
}

/// A lattice point `(p, y)`: the `p`-th point on horizontal line `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub p: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(p: i32, y: i32) -> Self {
        Point { p, y }
    }

    pub fn planar(&self) -> (f64, f64) {
        (self.p as f64 - self.y as f64 / 2.0, -(self.y as f64) * 3f64.sqrt() / 2.0)
    }

    /// Direction to an adjacent lattice point as a multiple of 60 degrees,
    /// counterclockwise from east.
    pub fn direction_to(&self, other: &Point) -> Option<u8> {
        match (other.p - self.p, other.y - self.y) {
            (1, 0) => Some(0),
            (0, -1) => Some(1),
            (-1, -1) => Some(2),
            (-1, 0) => Some(3),
            (0, 1) => Some(4),
            (1, 1) => Some(5),
            _ => None,
        }
    }
}

/// Union of two adjacent unit triangles. Always stored with the up-pointing
/// triangle first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lozenge {
    up: TriCoord,
    down: TriCoord,
}

/// Position of the down-pointing half relative to the up-pointing half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LozengeKind {
    /// `Up(r, p) + Down(r, p)`.
    East,
    /// `Up(r, p) + Down(r, p - 1)`.
    West,
    /// `Up(r, p) + Down(r + 1, p)`.
    South,
}

impl Lozenge {
    /// Builds a lozenge from two triangles in either order; `None` unless they
    /// are adjacent.
    pub fn new(a: TriCoord, b: TriCoord) -> Option<Lozenge> {
        if !a.is_adjacent(&b) {
            return None;
        }
        let (up, down) = if a.is_up() { (a, b) } else { (b, a) };
        Some(Lozenge { up, down })
    }

    pub fn up(&self) -> TriCoord {
        self.up
    }

    pub fn down(&self) -> TriCoord {
        self.down
    }

    pub fn cells(&self) -> [TriCoord; 2] {
        [self.up, self.down]
    }

    pub fn kind(&self) -> LozengeKind {
        if self.down.row == self.up.row + 1 {
            LozengeKind::South
        } else if self.down.col == self.up.col {
            LozengeKind::East
        } else {
            LozengeKind::West
        }
    }

    /// Corner points counterclockwise, starting anywhere.
    pub fn outline(&self) -> [Point; 4] {
        let [a0, a1, a2] = self.up.vertices();
        match self.kind() {
            // shared edge is the right edge a1-a2 of the up triangle
            LozengeKind::East => [a0, a1, Point::new(a1.p, a2.y), a2],
            // shared edge a2-a0
            LozengeKind::West => [a0, a1, a2, Point::new(a2.p - 1, a2.y)],
            // shared base a0-a1
            LozengeKind::South => [a0, Point::new(a1.p, a1.y + 1), a1, a2],
        }
    }

    pub fn translated(&self, d_row: i32, d_col: i32) -> Lozenge {
        Lozenge { up: self.up.translated(d_row, d_col), down: self.down.translated(d_row, d_col) }
    }
}

impl fmt::Display for Lozenge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}]", self.up, self.down)
    }
}

/// A finite set of unit triangles. Connectivity is not required.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    cells: BTreeSet<TriCoord>,
}

impl FromIterator<TriCoord> for Region {
    fn from_iter<I: IntoIterator<Item = TriCoord>>(iter: I) -> Self {
        Region { cells: iter.into_iter().collect() }
    }
}

impl Region {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cells(&self) -> &BTreeSet<TriCoord> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = &TriCoord> {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, t: &TriCoord) -> bool {
        self.cells.contains(t)
    }

    pub fn insert(&mut self, t: TriCoord) -> bool {
        self.cells.insert(t)
    }

    pub fn remove(&mut self, t: &TriCoord) -> bool {
        self.cells.remove(t)
    }

    /// A copy of the region with the given cells taken out.
    pub fn without<'a, I: IntoIterator<Item = &'a TriCoord>>(&self, cells: I) -> Region {
        let mut out = self.clone();
        for c in cells {
            out.cells.remove(c);
        }
        out
    }

    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.cells.len() - self.up_count()
    }

    /// `#Up - #Down`.
    pub fn balance(&self) -> i64 {
        self.up_count() as i64 - self.down_count() as i64
    }

    pub fn is_balanced(&self) -> bool {
        self.balance() == 0
    }

    pub fn neighbors_in<'a>(&'a self, t: &TriCoord) -> impl Iterator<Item = TriCoord> + 'a {
        t.neighbors().into_iter().filter(move |n| self.cells.contains(n))
    }

    pub fn translated(&self, d_row: i32, d_col: i32) -> Region {
        self.cells.iter().map(|c| c.translated(d_row, d_col)).collect()
    }

    pub fn mirrored(&self) -> Region {
        self.cells.iter().map(TriCoord::mirrored).collect()
    }

    /// Translation that moves the least cell to row 0, column 0.
    pub fn canonical(&self) -> Region {
        match self.cells.first() {
            Some(first) => self.translated(-first.row, -first.col),
            None => Region::new(),
        }
    }

    /// True iff some lattice translation maps `self` exactly onto `other`.
    pub fn congruent(&self, other: &Region) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// Connected components under edge adjacency, in order of their least cell.
    pub fn components(&self) -> Vec<Region> {
        let mut seen: BTreeSet<TriCoord> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.cells {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Region::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(c) = queue.pop_front() {
                comp.insert(c);
                for n in self.neighbors_in(&c) {
                    if seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Cells with at least one edge on the region border.
    pub fn edge_boundary_cells(&self) -> BTreeSet<TriCoord> {
        self.cells.iter().filter(|c| c.neighbors().iter().any(|n| !self.cells.contains(n))).copied().collect()
    }

    /// Closed boundary walks, each a cyclic list of lattice points traversed
    /// with the region on the left. A simply connected region has exactly one.
    pub fn boundary_cycles(&self) -> Vec<Vec<Point>> {
        let mut outgoing: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
        for c in &self.cells {
            for (from, to, across) in c.edges() {
                if !self.cells.contains(&across) {
                    outgoing.entry(from).or_default().push(to);
                }
            }
        }
        let mut unused: BTreeSet<(Point, Point)> =
            outgoing.iter().flat_map(|(f, ts)| ts.iter().map(move |t| (*f, *t))).collect();
        let mut cycles = Vec::new();
        while !unused.is_empty() {
            // prefer a start vertex that is not a pinch point
            let &(start, first) = unused
                .iter()
                .find(|(f, _)| unused_from(&unused, *f).len() == 1)
                .unwrap_or_else(|| unused.iter().next().expect("non-empty"));
            unused.remove(&(start, first));
            let mut cycle = vec![start];
            let (mut prev, mut cur) = (start, first);
            while cur != start {
                cycle.push(cur);
                let din = prev.direction_to(&cur).expect("boundary edges join adjacent points");
                // sharpest left turn keeps the walk hugging the region at pinch points
                let next = unused_from(&unused, cur)
                    .into_iter()
                    .max_by_key(|nx| {
                        let dout = cur.direction_to(nx).expect("adjacent");
                        (dout as i32 - din as i32 + 9) % 6
                    })
                    .expect("boundary of a finite region is closed");
                unused.remove(&(cur, next));
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles
    }
}

fn unused_from(unused: &BTreeSet<(Point, Point)>, from: Point) -> Vec<Point> {
    unused
        .range((from, Point::new(i32::MIN, i32::MIN))..=(from, Point::new(i32::MAX, i32::MAX)))
        .map(|&(_, t)| t)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_hexagon() -> Region {
        [
            TriCoord::up(1, 0),
            TriCoord::down(1, 0),
            TriCoord::up(1, 1),
            TriCoord::down(2, 0),
            TriCoord::up(2, 1),
            TriCoord::down(2, 1),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn up_triangle_has_three_down_neighbors() {
        let t = TriCoord::up(3, -2);
        let ns = t.neighbors();
        assert!(ns.iter().all(|n| n.orient == Orient::Down));
        let distinct: BTreeSet<_> = ns.iter().collect();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn adjacency_is_symmetric() {
        for r in -2..3 {
            for p in -2..3 {
                for t in [TriCoord::up(r, p), TriCoord::down(r, p)] {
                    for n in t.neighbors() {
                        assert!(n.neighbors().contains(&t), "{t} -> {n}");
                        assert_ne!(n.orient, t.orient);
                    }
                }
            }
        }
    }

    #[test]
    fn neighbors_share_an_edge() {
        for t in [TriCoord::up(2, 5), TriCoord::down(-1, 4)] {
            for n in t.neighbors() {
                let a: BTreeSet<_> = t.vertices().into_iter().collect();
                let b: BTreeSet<_> = n.vertices().into_iter().collect();
                assert_eq!(a.intersection(&b).count(), 2);
            }
        }
    }

    #[test]
    fn lozenge_canonical_order() {
        let a = TriCoord::down(1, 0);
        let b = TriCoord::up(1, 0);
        let l = Lozenge::new(a, b).unwrap();
        assert_eq!(l, Lozenge::new(b, a).unwrap());
        assert_eq!(l.up(), b);
        assert_eq!(l.kind(), LozengeKind::East);
        assert!(Lozenge::new(TriCoord::up(1, 0), TriCoord::up(1, 1)).is_none());
        assert!(Lozenge::new(TriCoord::up(1, 0), TriCoord::down(1, 3)).is_none());
    }

    #[test]
    fn lozenge_outline_covers_both_triangles() {
        for (u, d) in [
            (TriCoord::up(2, 3), TriCoord::down(2, 3)),
            (TriCoord::up(2, 3), TriCoord::down(2, 2)),
            (TriCoord::up(2, 3), TriCoord::down(3, 3)),
        ] {
            let l = Lozenge::new(u, d).unwrap();
            let outline: BTreeSet<_> = l.outline().into_iter().collect();
            let mut verts: BTreeSet<_> = u.vertices().into_iter().collect();
            verts.extend(d.vertices());
            assert_eq!(outline, verts, "{l}");
        }
    }

    #[test]
    fn balance_and_empty() {
        assert!(Region::new().is_balanced());
        assert!(unit_hexagon().is_balanced());
        let mut r = unit_hexagon();
        r.remove(&TriCoord::down(1, 0));
        assert_eq!(r.balance(), 1);
    }

    #[test]
    fn translation_congruence() {
        let h = unit_hexagon();
        assert!(h.congruent(&h.translated(1, 0)));
        assert!(h.congruent(&h.translated(-3, 7)));
        let smaller = h.without(&[TriCoord::up(1, 0)]);
        assert!(!h.congruent(&smaller));
    }

    #[test]
    fn mirror_is_an_involution_and_keeps_adjacency() {
        let h = unit_hexagon();
        assert_eq!(h.mirrored().mirrored(), h);
        for t in h.iter() {
            for n in t.neighbors() {
                assert!(t.mirrored().is_adjacent(&n.mirrored()));
            }
        }
        // the unit hexagon is mirror symmetric up to translation
        assert!(h.mirrored().congruent(&h));
    }

    #[test]
    fn components_split_disconnected_cells() {
        let r: Region = [TriCoord::up(0, 0), TriCoord::down(0, 0), TriCoord::up(5, 5)].into_iter().collect();
        let comps = r.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 2);
    }

    #[test]
    fn boundary_of_unit_hexagon_is_one_hexagon() {
        let cycles = unit_hexagon().boundary_cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
    }
}
