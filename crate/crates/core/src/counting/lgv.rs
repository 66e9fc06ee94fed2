//! Nonintersecting lattice paths counted by a determinant.

use num_bigint::{BigInt, BigUint};

use super::bareiss::determinant_checked;
use crate::region::{DentedHexParams, ParamError};

/// Path endpoints and the matrix of single-path counts between them.
///
/// Coordinates are those of the up-right path picture: the southwest corner
/// of the hexagon sits at `(-b, 0)` and every path step is `(1, 0)` or `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LgvMatrix {
    /// Start points, north to south.
    pub starts: Vec<(i64, i64)>,
    /// End points, north to south.
    pub ends: Vec<(i64, i64)>,
    pub entries: Vec<Vec<BigInt>>,
}

impl LgvMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self) -> BigInt {
        determinant_checked(&self.entries)
    }
}

/// `binomial(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub type LatticePoint = (i64, i64);

/// Number of up-right paths from `s` to `e`.
pub fn path_count(s: (i64, i64), e: (i64, i64)) -> BigInt {
    binomial(e.0 + e.1 - s.0 - s.1, e.1 - s.1)
}

/// Start and end points of the path family, in the frame of `path_frame`.
pub fn lgv_endpoints(p: &DentedHexParams) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    let (a, b, c, t) = (p.a() as i64, p.b() as i64, p.c() as i64, p.t() as i64);
    let top = b + c + t + 1;
    let mut starts: Vec<(i64, i64)> = p.v().iter().map(|&v| (-b, top - v as i64)).collect();
    starts.extend((1..=b).rev().map(|i| (-i, i)));
    let ends = (1..=b + t).filter(|j| !p.u().contains(&(*j as u32))).map(|j| (a - b - 1 + j, top - j)).collect();
    (starts, ends)
}

pub fn build_lgv_matrix(p: &DentedHexParams) -> Result<LgvMatrix, ParamError> {
    p.ensure_balanced()?;
    let (starts, ends) = lgv_endpoints(p);
    let entries = starts.iter().map(|&s| ends.iter().map(|&e| path_count(s, e)).collect()).collect();
    Ok(LgvMatrix { starts, ends, entries })
}

/// Tiling count of a balanced dented hexagon as a path-family determinant.
///
/// # Panics
///
/// If the determinant is negative, which would mean the endpoint ordering is
/// wrong.
pub fn count_lgv(p: &DentedHexParams) -> Result<BigUint, ParamError> {
    let det = build_lgv_matrix(p)?.determinant();
    Ok(det.to_biguint().unwrap_or_else(|| panic!("negative path determinant {det} for {p}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::from(0));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn unit_hexagon_matrix() {
        let m = build_lgv_matrix(&DentedHexParams::hexagon(1, 1, 1)).unwrap();
        assert_eq!(m.entries, vec![vec![BigInt::from(2)]]);
    }

    #[test]
    fn entry_shapes() {
        let p = DentedHexParams::new(3, 4, 2, 5, vec![3, 6], vec![2, 5, 6]).unwrap();
        let m = build_lgv_matrix(&p).unwrap();
        assert_eq!(m.dim(), 7);
        let (a, b, c, t) = (3i64, 4i64, 2i64, 5i64);
        let js: Vec<i64> = (1..=b + t).filter(|j| *j != 3 && *j != 6).collect();
        for (col, &j) in js.iter().enumerate() {
            for (row, &v) in [2i64, 5, 6].iter().enumerate() {
                assert_eq!(m.entries[row][col], binomial(a - 1 + v, v - j));
            }
            for (k, i) in (1..=b).rev().enumerate() {
                assert_eq!(m.entries[3 + k][col], binomial(a + c + t, b + c + t + 1 - j - i));
            }
        }
    }

    #[test]
    fn unbalanced_is_rejected() {
        let p = DentedHexParams::new(1, 2, 2, 2, vec![1], vec![]).unwrap();
        assert!(build_lgv_matrix(&p).is_err());
    }
}
