//! Dented hexagons, tileability and forced lozenges.
//!
//! `H(a, b, c, t)` has side lengths `a, b+t, c, a+t, b, c+t` clockwise from
//! the north side. Its north side lies on line 0 with the northwest corner at
//! point `(0, 0)`. The `k`-th up-pointing triangle along the northeast side,
//! counted from the north, is `Up(k, a + k - 1)`; along the northwest side it
//! is `Up(k, 0)`. Dents are removed from those positions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{Lozenge, Orient, Region, TriCoord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("northeast dents must be strictly increasing and lie in [1, b+t] = [1, {max}], got {dents:?}")]
    NortheastDents { dents: Vec<u32>, max: u32 },
    #[error("northwest dents must be strictly increasing and lie in [1, c+t] = [1, {max}], got {dents:?}")]
    NorthwestDents { dents: Vec<u32>, max: u32 },
    #[error("with a = 0 the first dents on both sides cannot both have index 1")]
    IllDefined,
    #[error("region is unbalanced: t = {t} but m + n = {dents}")]
    Unbalanced { t: u32, dents: u32 },
}

/// Parameters `(a, b, c, t, u, v)` of the dented hexagon `H(a,b,c,t,u,v)`.
///
/// `u` lists the removed northeast triangles and `v` the removed northwest
/// triangles, both indexed from the north starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DentedHexParams {
    a: u32,
    b: u32,
    c: u32,
    t: u32,
    u: Vec<u32>,
    v: Vec<u32>,
}

fn check_dents(dents: &[u32], max: u32) -> bool {
    dents.iter().all(|&d| (1..=max).contains(&d)) && dents.windows(2).all(|w| w[0] < w[1])
}

impl DentedHexParams {
    pub fn new(a: u32, b: u32, c: u32, t: u32, u: Vec<u32>, v: Vec<u32>) -> Result<Self, ParamError> {
        if !check_dents(&u, b + t) {
            return Err(ParamError::NortheastDents { dents: u, max: b + t });
        }
        if !check_dents(&v, c + t) {
            return Err(ParamError::NorthwestDents { dents: v, max: c + t });
        }
        if a == 0 && u.first() == Some(&1) && v.first() == Some(&1) {
            return Err(ParamError::IllDefined);
        }
        Ok(DentedHexParams { a, b, c, t, u, v })
    }

    /// Balanced dented hexagon with `t = m + n`.
    pub fn balanced(a: u32, b: u32, c: u32, u: Vec<u32>, v: Vec<u32>) -> Result<Self, ParamError> {
        let t = (u.len() + v.len()) as u32;
        Self::new(a, b, c, t, u, v)
    }

    /// The semiregular hexagon `H(a, b, c)`.
    pub fn hexagon(a: u32, b: u32, c: u32) -> Self {
        DentedHexParams { a, b, c, t: 0, u: vec![], v: vec![] }
    }

    /// `H(a, b, c, m+n, (u+i), (v+j))`: a block of `m` adjacent dents starting
    /// below northeast index `u` and `n` below northwest index `v`.
    pub fn block_dents(a: u32, b: u32, c: u32, u: u32, m: u32, v: u32, n: u32) -> Result<Self, ParamError> {
        Self::balanced(a, b, c, (1..=m).map(|i| u + i).collect(), (1..=n).map(|j| v + j).collect())
    }

    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn b(&self) -> u32 {
        self.b
    }
    pub fn c(&self) -> u32 {
        self.c
    }
    pub fn t(&self) -> u32 {
        self.t
    }
    pub fn u(&self) -> &[u32] {
        &self.u
    }
    pub fn v(&self) -> &[u32] {
        &self.v
    }
    pub fn m(&self) -> u32 {
        self.u.len() as u32
    }
    pub fn n(&self) -> u32 {
        self.v.len() as u32
    }

    pub fn is_balanced(&self) -> bool {
        self.t == self.m() + self.n()
    }

    pub fn ensure_balanced(&self) -> Result<(), ParamError> {
        if self.is_balanced() {
            Ok(())
        } else {
            Err(ParamError::Unbalanced { t: self.t, dents: self.m() + self.n() })
        }
    }

    /// `b + n + i - u_i` for the 0-based index `i - 1`: the undented up-pointing
    /// triangles southeast of that dent.
    pub fn u_under(&self, idx: usize) -> i64 {
        self.b as i64 + self.n() as i64 + idx as i64 + 1 - self.u[idx] as i64
    }

    /// `c + m + j - v_j` for the 0-based index `j - 1`.
    pub fn v_under(&self, idx: usize) -> i64 {
        self.c as i64 + self.m() as i64 + idx as i64 + 1 - self.v[idx] as i64
    }

    /// Same shape with a different north side.
    pub fn with_a(&self, a: u32) -> Result<Self, ParamError> {
        Self::new(a, self.b, self.c, self.t, self.u.clone(), self.v.clone())
    }

    /// Number of horizontal rows.
    pub fn height(&self) -> u32 {
        self.b + self.c + self.t
    }

    /// Westmost point index on line `y`.
    fn west(&self, y: i32) -> i32 {
        let knee = (self.c + self.t) as i32;
        if y <= knee {
            0
        } else {
            y - knee
        }
    }

    /// Eastmost point index on line `y`.
    fn east(&self, y: i32) -> i32 {
        let knee = (self.b + self.t) as i32;
        self.a as i32 + y.min(knee)
    }

    /// The `k`-th up-pointing triangle along the northeast side.
    pub fn northeast_cell(&self, k: u32) -> TriCoord {
        TriCoord::up(k as i32, self.a as i32 + k as i32 - 1)
    }

    /// The `k`-th up-pointing triangle along the northwest side.
    pub fn northwest_cell(&self, k: u32) -> TriCoord {
        TriCoord::up(k as i32, 0)
    }

    /// Cells of the undented hexagon `H(a, b, c, t)`.
    pub fn hexagon_cells(&self) -> Region {
        let mut cells = Region::new();
        for r in 1..=self.height() as i32 {
            let (w0, e0, w1, e1) = (self.west(r - 1), self.east(r - 1), self.west(r), self.east(r));
            for p in w0.min(w1)..=e0.max(e1) {
                // a triangle lies in the convex hexagon iff all of its corners do
                if w1 <= p && p < e1 && w0 <= p && p <= e0 {
                    cells.insert(TriCoord::up(r, p));
                }
                if w0 <= p && p < e0 && w1 <= p + 1 && p < e1 {
                    cells.insert(TriCoord::down(r, p));
                }
            }
        }
        cells
    }

    pub fn dent_cells(&self) -> Vec<TriCoord> {
        self.u.iter().map(|&k| self.northeast_cell(k)).chain(self.v.iter().map(|&k| self.northwest_cell(k))).collect()
    }

    /// Mirror image `H(a, c, b, t, v, u)`.
    pub fn mirrored(&self) -> Self {
        DentedHexParams { a: self.a, b: self.c, c: self.b, t: self.t, u: self.v.clone(), v: self.u.clone() }
    }
}

impl fmt::Display for DentedHexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "H({},{},{},{},({}),({}))", self.a, self.b, self.c, self.t, list(&self.u), list(&self.v))
    }
}

/// The region `H(a, b, c, t, u, v)`.
pub fn build_region(p: &DentedHexParams) -> Region {
    p.hexagon_cells().without(&p.dent_cells())
}

/// Dents lying strictly north of the `N`-th horizontal line.
pub fn mu(p: &DentedHexParams, line: u32) -> u32 {
    (p.u.iter().filter(|&&k| k <= line).count() + p.v.iter().filter(|&&k| k <= line).count()) as u32
}

/// First line `N` with more than `N` dents north of it, if any.
pub fn first_violation(p: &DentedHexParams) -> Result<Option<u32>, ParamError> {
    p.ensure_balanced()?;
    // mu is constant past the southmost dent
    let last = p.u.last().copied().unwrap_or(0).max(p.v.last().copied().unwrap_or(0));
    Ok((1..=last).find(|&n| mu(p, n) > n))
}

/// Balanced dented hexagons are tileable iff `mu(N) <= N` for every line.
pub fn is_tileable(p: &DentedHexParams) -> Result<bool, ParamError> {
    Ok(first_violation(p)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cell {cell} has no free neighbor, so the region has no tilings")]
pub struct DeadCell {
    pub cell: TriCoord,
}

/// Result of peeling forced lozenges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub region: Region,
    pub forced: Vec<Lozenge>,
}

/// Repeatedly removes lozenges covering a cell with exactly one neighbor.
///
/// Cells are scanned in row-major order; every pass removes all lozenges that
/// are forced at the start of that pass, lowest cell first, and the loop stops
/// at the first pass without a change. The tilings of the returned region are
/// in bijection with those of the input.
pub fn reduce_forced(r: &Region) -> Result<Reduction, DeadCell> {
    let mut region = r.clone();
    let mut forced = Vec::new();
    loop {
        let mut changed = false;
        let snapshot: Vec<TriCoord> = region.iter().copied().collect();
        for cell in snapshot {
            if !region.contains(&cell) {
                continue;
            }
            let ns: Vec<TriCoord> = region.neighbors_in(&cell).collect();
            match ns[..] {
                [] => return Err(DeadCell { cell }),
                [other] => {
                    region.remove(&cell);
                    region.remove(&other);
                    forced.push(Lozenge::new(cell, other).expect("neighbors are adjacent"));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return Ok(Reduction { region, forced });
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitVerdict {
    /// The tiling count factors over the two parts.
    Multiplicative,
    /// The splitting hypothesis holds and a part is unbalanced.
    Zero,
    NotApplicable,
}

/// Region splitting test for the partition `(part, r - part)`.
pub fn check_split(r: &Region, part: &BTreeSet<TriCoord>) -> SplitVerdict {
    let p_region: Region = part.iter().filter(|c| r.contains(c)).copied().collect();
    let q_region = r.without(part.iter());
    let contact: BTreeSet<Orient> =
        p_region.iter().filter(|c| c.neighbors().iter().any(|n| q_region.contains(n))).map(|c| c.orient).collect();
    if contact.len() > 1 {
        return SplitVerdict::NotApplicable;
    }
    if let Some(&o) = contact.iter().next() {
        let excess = match o {
            Orient::Up => p_region.balance(),
            Orient::Down => -p_region.balance(),
        };
        if excess > 0 {
            return SplitVerdict::NotApplicable;
        }
    }
    if !p_region.is_balanced() || !q_region.is_balanced() {
        SplitVerdict::Zero
    } else {
        SplitVerdict::Multiplicative
    }
}

/// Cells of `r` lying north of horizontal line `line`.
pub fn cells_above_line(r: &Region, line: u32) -> BTreeSet<TriCoord> {
    r.iter().filter(|c| c.row <= line as i32).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2b() -> DentedHexParams {
        DentedHexParams::new(4, 3, 2, 4, vec![1, 4], vec![3, 4]).unwrap()
    }

    #[test]
    fn rejects_bad_dents() {
        assert!(matches!(DentedHexParams::new(1, 2, 2, 1, vec![4], vec![]), Err(ParamError::NortheastDents { .. })));
        assert!(matches!(DentedHexParams::new(1, 2, 2, 2, vec![], vec![2, 2]), Err(ParamError::NorthwestDents { .. })));
        assert!(matches!(DentedHexParams::new(0, 2, 2, 2, vec![1], vec![1]), Err(ParamError::IllDefined)));
        assert!(DentedHexParams::new(1, 2, 2, 2, vec![1], vec![1]).is_ok());
    }

    #[test]
    fn hexagon_cell_counts() {
        let h = build_region(&DentedHexParams::hexagon(3, 4, 2));
        assert_eq!(h.len(), 52);
        assert!(h.is_balanced());
        let h0 = build_region(&DentedHexParams::hexagon(0, 1, 1));
        assert_eq!(h0.len(), 2);
        let h110 = build_region(&DentedHexParams::hexagon(1, 1, 0));
        assert_eq!(h110.len(), 2);
        for c in h110.iter() {
            assert_eq!(h110.neighbors_in(c).count(), 1);
        }
    }

    #[test]
    fn unbalanced_hexagon_has_t_excess_up() {
        for t in 0..4 {
            let p = DentedHexParams::new(2, 3, 1, t, vec![], vec![]).unwrap();
            assert_eq!(build_region(&p).balance(), t as i64);
        }
    }

    #[test]
    fn fig2b_has_four_dents_removed() {
        let p = fig2b();
        assert_eq!(build_region(&p).len(), p.hexagon_cells().len() - 4);
        assert!(build_region(&p).is_balanced());
        assert_eq!((p.u_under(0), p.u_under(1)), (5, 3));
        assert_eq!((p.v_under(0), p.v_under(1)), (2, 2));
    }

    #[test]
    fn dents_are_on_the_border() {
        let p = DentedHexParams::new(2, 3, 2, 0, vec![], vec![]).unwrap();
        let hex = p.hexagon_cells();
        for k in 1..=p.b() + p.t() {
            let c = p.northeast_cell(k);
            assert!(hex.contains(&c));
            assert!(!hex.contains(&TriCoord::down(c.row, c.col)), "east neighbor of {c} is outside");
        }
        for k in 1..=p.c() + p.t() {
            let c = p.northwest_cell(k);
            assert!(hex.contains(&c));
            assert!(!hex.contains(&TriCoord::down(c.row, c.col - 1)));
        }
    }

    #[test]
    fn mu_counts() {
        let p = fig2b();
        assert_eq!(mu(&p, 1), 1);
        assert_eq!(mu(&p, 3), 2);
        assert_eq!(mu(&p, 4), 4);
        let q = DentedHexParams::new(1, 2, 2, 2, vec![1], vec![1]).unwrap();
        assert_eq!(mu(&q, 1), 2);
        assert_eq!(mu(&DentedHexParams::hexagon(2, 2, 2), 5), 0);
    }

    #[test]
    fn tileability() {
        assert!(is_tileable(&fig2b()).unwrap());
        let q = DentedHexParams::new(1, 2, 2, 2, vec![1], vec![1]).unwrap();
        assert!(!is_tileable(&q).unwrap());
        assert_eq!(first_violation(&q).unwrap(), Some(1));
        let unbalanced = DentedHexParams::new(1, 2, 2, 3, vec![1], vec![1]).unwrap();
        assert!(matches!(is_tileable(&unbalanced), Err(ParamError::Unbalanced { t: 3, dents: 2 })));
    }

    #[test]
    fn mirror_params_match_mirror_region() {
        let p = fig2b();
        assert!(build_region(&p).mirrored().congruent(&build_region(&p.mirrored())));
    }

    #[test]
    fn reduce_single_lozenge() {
        let r: Region = [TriCoord::up(1, 0), TriCoord::down(1, 0)].into_iter().collect();
        let red = reduce_forced(&r).unwrap();
        assert!(red.region.is_empty());
        assert_eq!(red.forced, vec![Lozenge::new(TriCoord::up(1, 0), TriCoord::down(1, 0)).unwrap()]);
    }

    #[test]
    fn reduce_reports_dead_cell() {
        let r: Region = [TriCoord::up(1, 0), TriCoord::down(1, 0), TriCoord::up(4, 4)].into_iter().collect();
        assert_eq!(reduce_forced(&r).unwrap_err().cell, TriCoord::up(4, 4));
    }

    #[test]
    fn reduce_leaves_hexagon_alone() {
        let h = build_region(&DentedHexParams::hexagon(2, 2, 2));
        let red = reduce_forced(&h).unwrap();
        assert!(red.forced.is_empty());
        assert_eq!(red.region, h);
    }

    #[test]
    fn split_verdicts() {
        // too many dents above L_1
        let q = DentedHexParams::new(1, 2, 2, 2, vec![1], vec![1]).unwrap();
        let r = build_region(&q);
        assert_eq!(check_split(&r, &cells_above_line(&r, 1)), SplitVerdict::Zero);

        // mixed contact orientations along a vertical cut
        let h = build_region(&DentedHexParams::hexagon(2, 2, 2));
        let west: BTreeSet<_> = h.iter().filter(|c| c.centroid().0 < 0.5).copied().collect();
        assert_eq!(check_split(&h, &west), SplitVerdict::NotApplicable);
    }
}
