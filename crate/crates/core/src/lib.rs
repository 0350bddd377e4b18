//! Exact combinatorics of magic windows for quasi-symmetric representations.
//!
//! Zonotopes and GIT chambers, window bases of irreducibles, the rewriting
//! algorithm on K-theory classes, integer wall-crossing matrices, and the
//! groupoid of the complexified Kähler moduli space. All arithmetic is exact.

pub mod arrangement;
pub mod error;
pub mod exact;
pub mod groupoid;
pub mod io;
pub mod ktheory;
pub mod quiver;
pub mod report;
pub mod rep_weights;
pub mod root_datum;
pub mod windows;
pub mod zonotope;

pub use error::{Error, Result};
