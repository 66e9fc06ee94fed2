//! Exact enumeration of lozenge tilings of dented hexagons.
//!
//! A dented hexagon `H(a, b, c, t, u, v)` is a hexagon on the triangular
//! lattice with unit triangles removed along its two northern slanted sides.
//! This crate counts its tilings in three independent ways:
//!
//! * [`counting::count_bruteforce`], a transfer-matrix sweep that works for any region,
//! * [`counting::count_lgv`], a determinant of binomial coefficients,
//! * [`formulas`], closed products in the parameters.
//!
//! [`verify`] runs them against each other and checks the algebraic
//! identities that connect them.
//!
//! ```
//! use lozenge::region::DentedHexParams;
//! use lozenge::counting::count_lgv;
//! use lozenge::formulas::macmahon;
//!
//! let p = DentedHexParams::hexagon(2, 2, 2);
//! assert_eq!(count_lgv(&p).unwrap(), macmahon(2, 2, 2));
//! ```

pub mod counting;
pub mod formulas;
pub mod lattice;
pub mod region;
pub mod render;
pub mod verify;

pub use counting::{count_bruteforce, count_lgv, Tiling};
pub use formulas::{BigCount, ExactRatio};
pub use lattice::{Lozenge, Orient, Region, TriCoord};
pub use region::{build_region, DentedHexParams, ParamError};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    pub mod geometry {}
    #[doc = include_str!("../../../book/src/counting.md")]
    pub mod counting {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    pub mod formulas {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
