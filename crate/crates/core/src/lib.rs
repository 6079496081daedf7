//! Exact cohomology calculator for vector bundles on Hirzebruch surfaces `F_e`.
//!
//! Everything here is numerical: divisor classes are integer pairs in the
//! basis `(h, f)` of `Pic(F_e)`, line-bundle cohomology is computed in closed
//! form, ideal sheaves of points are modeled through a genericity calculus,
//! and rank-2 extensions are handled through long-exact-sequence intervals.
//!
//! Modules:
//! - [`picard`]: intersection form, canonical class, positivity, `M` and `R`.
//! - [`cohomology`]: `h^0`, `h^1`, `h^2`, `chi` of line bundles plus a brute-force oracle.
//! - [`sheaves`]: twisted ideal sheaves `I_Z(ah+bf)` for points in general position,
//!   on the negative section, or on a fiber.
//! - [`natural`]: decision procedures for natural cohomology (`£`) and full
//!   `h^1`-vanishing (`££`) under twisting by a spanned class.
//! - [`bundles`]: rank-2 extension data, existence/nonexistence regions,
//!   interval cohomology and stability certificates.
//! - [`cli`]: the `hirz` command-line front end and the claim auditor.

pub mod bundles;
pub mod cli;
pub mod cohomology;
mod error;
pub mod natural;
pub mod picard;
pub mod sheaves;

pub use error::{Error, Result};
pub use picard::{DivisorClass, SurfaceGeometry};
