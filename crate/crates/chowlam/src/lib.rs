//! Chow and Chow–Lam forms of subvarieties of Grassmannians.
//!
//! The crate computes, over the exact rationals: Gröbner bases and
//! elimination ideals, Plücker coordinate machinery, Chow–Lam loci and
//! forms (implicitly and parametrically), the recovered variety of a
//! Chow–Lam form with residual analysis, and Schubert-calculus predictions
//! of recovered components.
//!
//! See the crate examples for runnable walkthroughs of each capability,
//! and the `chowlam` binary for the JSON command-line interface.

pub mod chow;
pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod poly;
pub mod schubert;

pub use error::{Error, Result};

/// Version string embedded in every CLI output document.
pub fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}
