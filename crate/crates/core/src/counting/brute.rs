//! Transfer-matrix counting over a sliding window of covered cells.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Tiling;
use crate::lattice::{Lozenge, Region, TriCoord};
use crate::region::reduce_forced;

/// Triangles later in row-major order that can share a lozenge with `cell`.
fn later_partners(cell: &TriCoord) -> Vec<TriCoord> {
    if cell.is_up() {
        vec![TriCoord::down(cell.row, cell.col), TriCoord::down(cell.row + 1, cell.col)]
    } else {
        vec![TriCoord::up(cell.row, cell.col + 1)]
    }
}

trait Window: Clone + Eq + Hash {
    fn empty() -> Self;
    fn bit(&self, k: usize) -> bool;
    fn set(&self, k: usize) -> Self;
    fn shift(&self) -> Self;
}

impl Window for u128 {
    fn empty() -> Self {
        0
    }
    fn bit(&self, k: usize) -> bool {
        self >> k & 1 == 1
    }
    fn set(&self, k: usize) -> Self {
        self | 1 << k
    }
    fn shift(&self) -> Self {
        self >> 1
    }
}

impl Window for BigUint {
    fn empty() -> Self {
        BigUint::zero()
    }
    fn bit(&self, k: usize) -> bool {
        BigUint::bit(self, k as u64)
    }
    fn set(&self, k: usize) -> Self {
        let mut x = self.clone();
        x.set_bit(k as u64, true);
        x
    }
    fn shift(&self) -> Self {
        self >> 1u32
    }
}

fn sweep<W: Window>(offsets: &[Vec<usize>]) -> BigUint {
    let mut states: HashMap<W, BigUint> = HashMap::from([(W::empty(), BigUint::one())]);
    for offs in offsets {
        let mut next: HashMap<W, BigUint> = HashMap::with_capacity(states.len() * 2);
        for (mask, count) in states {
            if mask.bit(0) {
                *next.entry(mask.shift()).or_default() += count;
                continue;
            }
            for &d in offs {
                if !mask.bit(d) {
                    *next.entry(mask.set(d).shift()).or_default() += &count;
                }
            }
        }
        states = next;
        if states.is_empty() {
            return BigUint::zero();
        }
    }
    states.remove(&W::empty()).unwrap_or_default()
}

/// Runs the sweep on `region` as given, without removing forced lozenges or
/// splitting into components.
pub fn count_transfer(region: &Region) -> BigUint {
    if !region.is_balanced() {
        return BigUint::zero();
    }
    let cells: Vec<TriCoord> = region.iter().copied().collect();
    let index: BTreeMap<TriCoord, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let offsets: Vec<Vec<usize>> = cells
        .iter()
        .enumerate()
        .map(|(i, c)| later_partners(c).iter().filter_map(|p| index.get(p)).map(|&j| j - i).collect())
        .collect();
    let widest = offsets.iter().flatten().copied().max().unwrap_or(0);
    if widest < 128 {
        sweep::<u128>(&offsets)
    } else {
        sweep::<BigUint>(&offsets)
    }
}

/// Exact number of lozenge tilings of an arbitrary region.
///
/// Forced lozenges are removed first, the rest is split into connected
/// components, and each component is counted by a row-major sweep that
/// tracks which upcoming triangles are already covered.
pub fn count_bruteforce(region: &Region) -> BigUint {
    let Ok(reduced) = reduce_forced(region) else {
        return BigUint::zero();
    };
    reduced.region.components().iter().map(count_transfer).product()
}

/// Up to `limit` tilings, in the order produced by always covering the first
/// uncovered triangle and trying its partners east before south.
pub fn enumerate_tilings(region: &Region, limit: usize) -> Vec<Tiling> {
    let cells: Vec<TriCoord> = region.iter().copied().collect();
    let mut out = Vec::new();
    if limit == 0 || !region.is_balanced() {
        return out;
    }
    let mut free = region.clone();
    let mut chosen = Vec::new();
    backtrack(&cells, 0, &mut free, &mut chosen, &mut out, limit);
    out
}

fn backtrack(
    cells: &[TriCoord],
    mut pos: usize,
    free: &mut Region,
    chosen: &mut Vec<Lozenge>,
    out: &mut Vec<Tiling>,
    limit: usize,
) {
    while pos < cells.len() && !free.contains(&cells[pos]) {
        pos += 1;
    }
    if pos == cells.len() {
        out.push(Tiling::new(chosen.clone()));
        return;
    }
    let cell = cells[pos];
    for partner in later_partners(&cell) {
        if !free.contains(&partner) {
            continue;
        }
        free.remove(&cell);
        free.remove(&partner);
        chosen.push(Lozenge::new(cell, partner).expect("partners are adjacent"));
        backtrack(cells, pos + 1, free, chosen, out, limit);
        chosen.pop();
        free.insert(cell);
        free.insert(partner);
        if out.len() >= limit {
            return;
        }
    }
}

/// The first tiling in enumeration order, if the region has any.
pub fn first_tiling(region: &Region) -> Option<Tiling> {
    enumerate_tilings(region, 1).pop()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{build_region, DentedHexParams};

    #[test]
    fn empty_region_has_one_tiling() {
        assert_eq!(count_bruteforce(&Region::new()), BigUint::one());
        assert_eq!(enumerate_tilings(&Region::new(), 5).len(), 1);
    }

    #[test]
    fn small_hexagons() {
        let r = build_region(&DentedHexParams::hexagon(1, 1, 1));
        assert_eq!(count_bruteforce(&r), BigUint::from(2u32));
        let r = build_region(&DentedHexParams::hexagon(2, 2, 2));
        assert_eq!(count_bruteforce(&r), BigUint::from(20u32));
        assert_eq!(enumerate_tilings(&r, 100).len(), 20);
    }

    #[test]
    fn single_triangle_is_untileable() {
        let r: Region = [TriCoord::up(0, 0)].into_iter().collect();
        assert!(count_bruteforce(&r).is_zero());
        assert!(first_tiling(&r).is_none());
    }

    #[test]
    fn enumerated_tilings_are_valid_and_distinct() {
        let r = build_region(&DentedHexParams::hexagon(2, 2, 1));
        let all = enumerate_tilings(&r, 1000);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|t| t.validate(&r)));
        let distinct: std::collections::BTreeSet<_> = all.iter().map(|t| t.lozenges().to_vec()).collect();
        assert_eq!(distinct.len(), all.len());
    }
}
