//! The bijection between tilings and families of nonintersecting paths.
//!
//! A path lives on the edges shared by `Up(y, p)` and `Down(y, p)`, written
//! as the point `(p, -y)`. From such an edge the covering lozenge of
//! `Down(y, p)` decides the next step: pairing with `Up(y, p + 1)` is a step
//! `Right`, pairing with `Up(y - 1, p)` is a step `Up`. Paths start where
//! `Up(y, p)` is missing from the region and stop where `Down(y, p)` is.
//! Every triangle not on a path is covered by an `Up(r, p) + Down(r, p)`
//! lozenge.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Tiling;
use crate::lattice::{Lozenge, Region, TriCoord};
use crate::region::DentedHexParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Step {
    Right,
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut cur = self.start;
        let mut pts = vec![cur];
        for s in &self.steps {
            match s {
                Step::Right => cur.0 += 1,
                Step::Up => cur.1 += 1,
            }
            pts.push(cur);
        }
        pts
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points().last().expect("a path has at least its start")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn translated(&self, dx: i64, dy: i64) -> PathFamily {
        let paths = self
            .paths
            .iter()
            .map(|p| LatticePath { start: (p.start.0 + dx, p.start.1 + dy), steps: p.steps.clone() })
            .collect();
        PathFamily { paths }
    }

    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.paths.iter().flat_map(|p| p.points()).all(|pt| seen.insert(pt))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid path family: {0}")]
pub struct InvalidPaths(pub String);

/// Shift taking region path coordinates to the frame where the southwest
/// corner of `H(a, b, c, t, u, v)` is `(-b, 0)`.
pub fn path_frame(p: &DentedHexParams) -> (i64, i64) {
    (-(p.b() as i64), (p.b() + p.c() + p.t() + 1) as i64)
}

fn point(y: i32, p: i32) -> (i64, i64) {
    (p as i64, -(y as i64))
}

fn start_edges(r: &Region) -> Vec<(i32, i32)> {
    r.iter().filter(|c| !c.is_up() && !r.contains(&TriCoord::up(c.row, c.col))).map(|c| (c.row, c.col)).collect()
}

/// Paths of a tiling, one per start edge, ordered by start.
pub fn tiling_to_paths(r: &Region, t: &Tiling) -> PathFamily {
    let partner = |cell: &TriCoord| t.covering(cell).map(|l| if l.up() == *cell { l.down() } else { l.up() });
    let paths = start_edges(r)
        .into_iter()
        .map(|(y0, p0)| {
            let (mut y, mut p) = (y0, p0);
            let mut steps = Vec::new();
            while r.contains(&TriCoord::down(y, p)) {
                match partner(&TriCoord::down(y, p)) {
                    Some(u) if u == TriCoord::up(y, p + 1) => {
                        steps.push(Step::Right);
                        p += 1;
                    }
                    Some(u) if u == TriCoord::up(y - 1, p) => {
                        steps.push(Step::Up);
                        y -= 1;
                    }
                    other => panic!("not a tiling of the region: Down({y}, {p}) paired with {other:?}"),
                }
            }
            LatticePath { start: point(y0, p0), steps }
        })
        .collect();
    PathFamily { paths }
}

/// Rebuilds the tiling from its paths (given in region path coordinates).
pub fn paths_to_tiling(r: &Region, f: &PathFamily) -> Result<Tiling, InvalidPaths> {
    let starts: BTreeSet<(i64, i64)> = start_edges(r).into_iter().map(|(y, p)| point(y, p)).collect();
    let given: BTreeSet<(i64, i64)> = f.paths.iter().map(|p| p.start).collect();
    if given != starts || f.paths.len() != starts.len() {
        return Err(InvalidPaths("starts do not match the region's start edges".into()));
    }
    if !f.is_nonintersecting() {
        return Err(InvalidPaths("paths share a lattice point".into()));
    }
    let mut free = r.clone();
    let mut lozenges = Vec::new();
    let mut take = |a: TriCoord, b: TriCoord, free: &mut Region| -> Result<(), InvalidPaths> {
        if !free.remove(&a) || !free.remove(&b) {
            return Err(InvalidPaths(format!("step through {a}, {b} leaves the region or reuses a triangle")));
        }
        lozenges.push(Lozenge::new(a, b).expect("adjacent by construction"));
        Ok(())
    };
    for path in &f.paths {
        let (mut p, mut y) = (path.start.0 as i32, -path.start.1 as i32);
        for s in &path.steps {
            let next = match s {
                Step::Right => TriCoord::up(y, p + 1),
                Step::Up => TriCoord::up(y - 1, p),
            };
            take(TriCoord::down(y, p), next, &mut free)?;
            (p, y) = (next.col, next.row);
        }
        if r.contains(&TriCoord::down(y, p)) || !r.contains(&TriCoord::up(y, p)) {
            return Err(InvalidPaths(format!("path from {:?} does not stop on an end edge", path.start)));
        }
    }
    let rest: Vec<TriCoord> = free.iter().filter(|c| c.is_up()).copied().collect();
    for up in rest {
        take(up, TriCoord::down(up.row, up.col), &mut free)?;
    }
    if !free.is_empty() {
        return Err(InvalidPaths("triangles left uncovered".into()));
    }
    Ok(Tiling::new(lozenges))
}
