//! Exact rational geometry on the torus: fixed points, the parallelogram
//! `P_RW` and periodic orbits crossing it.

mod orbits;
mod parallelogram;
mod point;
mod tangency;

pub use orbits::{enumerate_periodic_orbits, enumerate_periodic_orbits_capped, OrbitRecord, DEFAULT_MAX_POINTS};
pub use parallelogram::{
    build_parallelogram, formula_fixed_points, is_degenerate_word, locate_point, parallelogram_json,
    point_in_parallelogram, Containment, Embedding, FormulaFixedPoints, Location, ParallelogramData, Segment, Side,
};
pub use point::{PlanePoint, TorusPointQ};
pub use tangency::stable_tangency_count;
