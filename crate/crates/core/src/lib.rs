//! Exact computations for the quantum general linear supergroup `U_q(gl(m|n))`:
//! root data, the Weyl group dot action, formal characters, Bott-Borel-Weil
//! cohomology of induced bundles, and a matrix model used to check the
//! defining relations, the Hopf structure and the translation actions.
//!
//! Every computation is exact: rationals are arbitrary precision and `q`
//! stays an indeterminate.

pub mod characters;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactring;
pub mod rootdata;
pub mod uqrep;
pub mod weyl;

pub use error::{Error, Result};
