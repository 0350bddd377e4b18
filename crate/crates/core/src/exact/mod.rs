//! Exact rational substrate: vectors, linear algebra, LP, lattice points, hyperplanes.

pub mod hyperplane;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rat;

pub use hyperplane::{segment_crossings, AffineHyperplane, Crossing};
pub use linalg::IntMatrix;
pub use lp::{lp_optimize, LpOutcome, Sense};
pub use polytope::{lattice_points, HalfSpace, HalfSpaceSystem};
pub use rat::{frac, parse_rat, rat, Rat, RatVec, Weight};
