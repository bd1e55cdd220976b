//! Euler characteristic census of the genus-one section for the geodesic flow
//! of a hyperbolic orbifold of genus `g` with cone points of orders `k₁..kₙ`.
//!
//! The section is assembled from three pieces: one over the handles
//! (`χ = −4g`), one over the cone points (`χ = 1 − n`) and a connecting piece
//! (`χ = −4`). Every boundary circle lies on its own oriented geodesic.

use num_rational::Ratio;
use serde::Serialize;

use super::surface::{BoundaryEntry, SurfaceData};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct OrbifoldCensus {
    pub genus: u32,
    pub orders: Vec<u32>,
    pub chi_handles: i64,
    pub chi_cones: i64,
    pub chi_connector: i64,
    pub curve_count: u32,
    pub surface: SurfaceData,
}

pub fn orbifold_section_census(g: u32, orders: &[u32]) -> Result<OrbifoldCensus> {
    let n = orders.len() as i64;
    if g == 0 {
        return Err(Error::UnsupportedOrbifold("genus 0".into()));
    }
    if n == 0 {
        return Err(Error::UnsupportedOrbifold("no cone points".into()));
    }
    if let Some(k) = orders.iter().find(|&&k| k < 3) {
        return Err(Error::UnsupportedOrbifold(format!("cone point of order {k}")));
    }
    let orbifold_chi = orders
        .iter()
        .fold(Ratio::from_integer(2 - 2 * g as i64), |acc, &k| acc - (Ratio::from_integer(1) - Ratio::new(1, k as i64)));
    if orbifold_chi >= Ratio::from_integer(0) {
        return Err(Error::UnsupportedOrbifold(format!("orbifold Euler characteristic {orbifold_chi}")));
    }

    let (gi, chi_handles, chi_cones, chi_connector) = (g as i64, -4 * g as i64, 1 - n, -4);
    let euler = chi_handles + chi_cones + chi_connector;
    if euler != -(4 * gi + n + 3) {
        return Err(Error::Internal(format!("census identity fails for g = {g}, n = {n}")));
    }
    let curve_count = (4 * gi + n + 3) as u32;
    let boundary = (1..=curve_count)
        .map(|i| BoundaryEntry::new(&format!("c{i}"), 1, (1, 0)))
        .collect::<Result<Vec<_>>>()?;
    let surface = SurfaceData::new(euler, boundary)?;
    if surface.genus != 1 {
        return Err(Error::Internal(format!("census surface has genus {}", surface.genus)));
    }
    Ok(OrbifoldCensus { genus: g, orders: orders.to_vec(), chi_handles, chi_cones, chi_connector, curve_count, surface })
}
