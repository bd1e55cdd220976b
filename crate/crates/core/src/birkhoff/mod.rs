//! Birkhoff sections of toral suspension flows: Euler characteristic and
//! boundary bookkeeping, the first-return map, descent, and audits.

mod audit;
mod census;
mod descent;
mod first_return;
mod surface;

pub use audit::{fit_periods, lefschetz_audit, lefschetz_audit_capped, AuditRow, AuditTable, DEFAULT_AUDIT_CAP};
pub use census::{orbifold_section_census, OrbifoldCensus};
pub use descent::{descent_chain, minakawa_step, DescentChain, DescentStep, COST_PER_STEP};
pub use first_return::{first_return_matrix, FirstReturn};
pub use surface::{
    fried_sum_data, genus_one_section, pair_of_pants_data, pants_euler_routes, resolve_multicurve_on_torus,
    BoundaryEntry, Summand, SurfaceData, GAMMA_M, GAMMA_N, GAMMA_O,
};
