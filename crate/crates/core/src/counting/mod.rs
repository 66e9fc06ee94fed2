//! Counting and enumerating lozenge tilings.

mod bareiss;
mod brute;
mod lgv;
mod paths;

use serde::{Deserialize, Serialize};

use crate::lattice::{Lozenge, Region, TriCoord};

pub use bareiss::{determinant, determinant_checked};
pub use brute::{count_bruteforce, count_transfer, enumerate_tilings, first_tiling};
pub use lgv::{binomial, build_lgv_matrix, count_lgv, lgv_endpoints, path_count, LgvMatrix};
pub use paths::{path_frame, paths_to_tiling, tiling_to_paths, InvalidPaths, LatticePath, PathFamily, Step};

/// A set of lozenges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    lozenges: Vec<Lozenge>,
}

impl Tiling {
    pub fn new(mut lozenges: Vec<Lozenge>) -> Self {
        lozenges.sort();
        Tiling { lozenges }
    }

    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    pub fn len(&self) -> usize {
        self.lozenges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lozenges.is_empty()
    }

    /// True when the lozenges are disjoint and cover exactly `region`.
    pub fn validate(&self, region: &Region) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for cell in self.lozenges.iter().flat_map(|l| l.cells()) {
            if !region.contains(&cell) || !seen.insert(cell) {
                return false;
            }
        }
        seen.len() == region.len()
    }

    /// The lozenge covering `cell`, if any.
    pub fn covering(&self, cell: &TriCoord) -> Option<&Lozenge> {
        self.lozenges.iter().find(|l| l.cells().contains(cell))
    }
}
