//! Exact computational algebra for local orientations and Chow–Witt cycles.
//!
//! The crate materializes, over ℚ, F_p (p odd) and simple extensions thereof:
//!
//! - exact field arithmetic with square-class machinery ([`scalars`]),
//! - multivariate polynomial ideals with a Gröbner engine supplying
//!   membership, colon ideals, heights and zero-dimensional decompositions
//!   ([`polyring`]),
//! - Koszul complexes with their self-duality chain maps, mapping cones and
//!   elementary-matrix conjugations ([`komplex`]),
//! - symmetric bilinear form classification: diagonalization, invariants,
//!   isometry decision, Witt-group arithmetic ([`witt`]),
//! - local orientations (I, ω), their validation, homotopy evaluation at
//!   T = 0, 1 and pointwise symmetric forms ([`orient`]),
//! - degree 1, 0 cycle groups with boundary maps and the homotopy-invariance
//!   verification pipeline ([`gersten`]).
//!
//! Everything is exact; there is no floating point anywhere.

pub mod error;
pub mod gersten;
pub mod komplex;
pub mod orient;
pub mod polyring;
pub mod scalars;
pub mod witt;

pub use error::{Error, Result};
