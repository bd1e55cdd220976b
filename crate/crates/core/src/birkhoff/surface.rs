//! Euler characteristic and boundary bookkeeping for Birkhoff surfaces,
//! the pair of pants over `P_RW`, and its Fried sum with a horizontal torus.
//!
//! Boundary classes live on the blown-up boundary torus of an orbit, written
//! `(longitude, meridian)` with the longitude along the flow.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sl2z::RLWord;
use crate::torus::{build_parallelogram, stable_tangency_count, Embedding};

pub const GAMMA_O: &str = "γ_O";
pub const GAMMA_M: &str = "γ_M";
pub const GAMMA_N: &str = "γ_N";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryEntry {
    #[serde(rename = "orbit")]
    pub orbit_id: String,
    pub multiplicity: i64,
    #[serde(rename = "circles")]
    pub circle_count: u32,
    #[serde(rename = "class")]
    pub class_per_circle: (i64, i64),
}

impl BoundaryEntry {
    /// `circles` parallel copies of `class`; the class must be primitive.
    pub fn new(orbit: &str, circles: u32, class: (i64, i64)) -> Result<Self> {
        if circles == 0 || class.0.gcd(&class.1) != 1 {
            return Err(Error::InconsistentSurface(format!(
                "{circles} circles of class {class:?} on {orbit}"
            )));
        }
        Ok(BoundaryEntry {
            orbit_id: orbit.to_string(),
            multiplicity: circles as i64 * class.0,
            circle_count: circles,
            class_per_circle: class,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceData {
    #[serde(rename = "euler")]
    pub euler_blowup: i64,
    pub genus: i64,
    pub boundary: Vec<BoundaryEntry>,
}

impl SurfaceData {
    /// Derives the genus from `χ = 2 − 2g − (boundary circles)`.
    pub fn new(euler: i64, boundary: Vec<BoundaryEntry>) -> Result<Self> {
        let circles: i64 = boundary.iter().map(|b| b.circle_count as i64).sum();
        let twice_genus = 2 - euler - circles;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(Error::InconsistentSurface(format!(
                "χ = {euler} with {circles} boundary circles"
            )));
        }
        Ok(SurfaceData { euler_blowup: euler, genus: twice_genus / 2, boundary })
    }

    /// The empty surface, neutral for [`fried_sum_data`].
    pub fn empty() -> Self {
        SurfaceData { euler_blowup: 0, genus: 0, boundary: Vec::new() }
    }

    /// A closed torus transverse to the flow, e.g. the level `𝕋² × {2/3}`.
    pub fn horizontal_torus() -> Self {
        SurfaceData { euler_blowup: 0, genus: 1, boundary: Vec::new() }
    }

    pub fn boundary_circle_count(&self) -> u32 {
        self.boundary.iter().map(|b| b.circle_count).sum()
    }

    pub fn boundary_orbit_count(&self) -> usize {
        let mut orbits: Vec<&str> = self.boundary.iter().map(|b| b.orbit_id.as_str()).collect();
        orbits.sort();
        orbits.dedup();
        orbits.len()
    }

    pub fn entry(&self, orbit: &str) -> Option<&BoundaryEntry> {
        self.boundary.iter().find(|b| b.orbit_id == orbit)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

fn sign(x: i64) -> i64 {
    x.signum()
}

/// Oriented resolution of transverse essential curves on a torus: returns the
/// total class and the number of parallel circles it resolves into.
pub fn resolve_multicurve_on_torus(classes: &[(i64, i64)]) -> Result<((i64, i64), u32)> {
    if classes.is_empty() {
        return Err(Error::InvalidArgument("no curves to resolve".into()));
    }
    if let Some(c) = classes.iter().find(|c| **c == (0, 0)) {
        return Err(Error::InvalidArgument(format!("null class {c:?}")));
    }
    let mixed = |vals: Vec<i64>| vals.contains(&1) && vals.contains(&-1);
    let longs: Vec<i64> = classes.iter().map(|c| sign(c.0)).collect();
    if mixed(longs.clone()) {
        return Err(Error::IncoherentOrientation(format!("{classes:?}")));
    }
    if longs.iter().all(|&s| s == 0) && mixed(classes.iter().map(|c| sign(c.1)).collect()) {
        return Err(Error::IncoherentOrientation(format!("{classes:?}")));
    }
    let total = classes.iter().fold((0, 0), |acc, c| (acc.0 + c.0, acc.1 + c.1));
    if total == (0, 0) {
        return Err(Error::IncoherentOrientation(format!("{classes:?} cancel out")));
    }
    let count = total.0.gcd(&total.1) as u32;
    Ok((total, count))
}

/// Index of a surface in a puncture list passed to [`fried_sum_data`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Summand {
    First,
    Second,
}

/// Fried sum at the level of Euler characteristic and boundary.
///
/// Each puncture `(surface, orbit)` is a transverse intersection of that
/// surface with a boundary orbit of the other: a disc is removed, which lowers
/// χ by one and adds a meridian circle `(0, 1)` over the orbit. Boundary curves
/// over each orbit are then resolved together.
pub fn fried_sum_data(s1: &SurfaceData, s2: &SurfaceData, punctures: &[(Summand, &str)]) -> Result<SurfaceData> {
    let mut euler = s1.euler_blowup + s2.euler_blowup;
    let mut curves: Vec<(String, Vec<(i64, i64)>)> = Vec::new();
    let mut push = |orbit: &str, class: (i64, i64), copies: u32| {
        let slot = match curves.iter().position(|(o, _)| o == orbit) {
            Some(i) => i,
            None => {
                curves.push((orbit.to_string(), Vec::new()));
                curves.len() - 1
            }
        };
        curves[slot].1.extend(std::iter::repeat_n(class, copies as usize));
    };
    for b in s1.boundary.iter().chain(&s2.boundary) {
        push(&b.orbit_id, b.class_per_circle, b.circle_count);
    }
    for &(which, orbit) in punctures {
        let other = match which {
            Summand::First => s2,
            Summand::Second => s1,
        };
        if other.entry(orbit).is_none() {
            return Err(Error::InconsistentSurface(format!(
                "puncture at {orbit}, which is not a boundary orbit of the other surface"
            )));
        }
        euler -= 1;
        push(orbit, (0, 1), 1);
    }
    let mut boundary = Vec::new();
    for (orbit, classes) in curves {
        let (total, count) = resolve_multicurve_on_torus(&classes)?;
        let k = count as i64;
        boundary.push(BoundaryEntry::new(&orbit, count, (total.0 / k, total.1 / k))?);
    }
    SurfaceData::new(euler, boundary)
}

/// Two routes to `χ(ℙ)`: the cell count (three discs glued along four arcs)
/// and, for generic words, minus half the number of stable tangencies.
pub fn pants_euler_routes(w: &RLWord) -> Result<(i64, Option<i64>)> {
    let p = build_parallelogram(w)?;
    let cells = 3 - 4;
    let tangency = match p.embedding {
        Embedding::Generic => Some(-(stable_tangency_count(w)? as i64) / 2),
        Embedding::DegenerateMN => None,
    };
    Ok((cells, tangency))
}

/// The pair of pants `ℙ` with `i(∂ℙ) = −γ_M − γ_N + 2γ_O` (or `−2γ_M + 2γ_O`
/// when `M = N`). The circle over `γ_O` wraps twice along the flow; its
/// meridian coordinate is only fixed mod 2 and is stored as 1.
pub fn pair_of_pants_data(w: &RLWord) -> Result<SurfaceData> {
    let p = build_parallelogram(w)?;
    let (cells, tangency) = pants_euler_routes(w)?;
    if tangency.is_some_and(|t| t != cells) {
        return Err(Error::InconsistentSurface(format!(
            "pants for {w}: cell count gives χ = {cells}, tangencies give {tangency:?}"
        )));
    }
    let o = BoundaryEntry::new(GAMMA_O, 1, (2, 1))?;
    let boundary = match p.embedding {
        Embedding::Generic => vec![
            o,
            BoundaryEntry::new(GAMMA_M, 1, (-1, 0))?,
            BoundaryEntry::new(GAMMA_N, 1, (-1, 0))?,
        ],
        Embedding::DegenerateMN => vec![o, BoundaryEntry::new(GAMMA_M, 2, (-1, 0))?],
    };
    let s = SurfaceData::new(cells, boundary)?;
    if s.genus != 0 {
        return Err(Error::InconsistentSurface(format!("pants for {w} has genus {}", s.genus)));
    }
    Ok(s)
}

/// `𝕋²_{2/3}` Fried-summed with `ℙ`: the torus is punctured once at each
/// boundary orbit of the pants.
pub fn genus_one_section(w: &RLWord) -> Result<SurfaceData> {
    let pants = pair_of_pants_data(w)?;
    let mut orbits: Vec<&str> = pants.boundary.iter().map(|b| b.orbit_id.as_str()).collect();
    orbits.dedup();
    let punctures: Vec<(Summand, &str)> = orbits.iter().map(|o| (Summand::First, *o)).collect();
    let s = fried_sum_data(&SurfaceData::horizontal_torus(), &pants, &punctures)?;
    if s.genus != 1 || s.boundary_orbit_count() > 3 {
        return Err(Error::InconsistentSurface(format!(
            "section for {w}: genus {}, {} boundary orbits",
            s.genus,
            s.boundary_orbit_count()
        )));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> RLWord {
        s.parse().unwrap()
    }

    #[test]
    fn resolve_examples() {
        assert_eq!(resolve_multicurve_on_torus(&[(0, 1)]).unwrap(), ((0, 1), 1));
        assert_eq!(resolve_multicurve_on_torus(&[(2, 1), (0, 1)]).unwrap(), ((2, 2), 2));
        assert_eq!(resolve_multicurve_on_torus(&[(1, 0), (0, 1)]).unwrap(), ((1, 1), 1));
        assert_eq!(resolve_multicurve_on_torus(&[(-1, 0), (-1, 0), (0, 1)]).unwrap(), ((-2, 1), 1));
        assert!(matches!(
            resolve_multicurve_on_torus(&[(1, 0), (-1, 1)]),
            Err(Error::IncoherentOrientation(_))
        ));
        assert!(matches!(
            resolve_multicurve_on_torus(&[(0, 1), (0, -1)]),
            Err(Error::IncoherentOrientation(_))
        ));
        assert!(resolve_multicurve_on_torus(&[(0, 0)]).is_err());
    }

    #[test]
    fn pants() {
        let p = pair_of_pants_data(&w("RLRL")).unwrap();
        assert_eq!((p.euler_blowup, p.genus, p.boundary_circle_count(), p.boundary_orbit_count()), (-1, 0, 3, 3));
        let mults: Vec<i64> = p.boundary.iter().map(|b| b.multiplicity).collect();
        assert_eq!(mults, vec![2, -1, -1]);
        let p = pair_of_pants_data(&w("RL")).unwrap();
        assert_eq!((p.euler_blowup, p.boundary_circle_count(), p.boundary_orbit_count()), (-1, 3, 2));
        assert_eq!(p.entry(GAMMA_M).unwrap().multiplicity, -2);
        assert_eq!(pair_of_pants_data(&w("RRL")).unwrap().boundary_orbit_count(), 3);
        assert!(matches!(pair_of_pants_data(&w("RR")), Err(Error::NotMixed(_))));
    }

    #[test]
    fn fried_sums() {
        let pants = pair_of_pants_data(&w("RLRL")).unwrap();
        let three = [(Summand::First, GAMMA_O), (Summand::First, GAMMA_M), (Summand::First, GAMMA_N)];
        let s = fried_sum_data(&SurfaceData::horizontal_torus(), &pants, &three).unwrap();
        assert_eq!(s.euler_blowup, -4);
        let pants = pair_of_pants_data(&w("RL")).unwrap();
        let two = [(Summand::First, GAMMA_O), (Summand::First, GAMMA_M)];
        let s = fried_sum_data(&SurfaceData::horizontal_torus(), &pants, &two).unwrap();
        assert_eq!(s.euler_blowup, -3);
        assert_eq!(fried_sum_data(&pants, &SurfaceData::empty(), &[]).unwrap(), pants);
        assert!(fried_sum_data(&SurfaceData::empty(), &pants, &[(Summand::Second, GAMMA_O)]).is_err());
    }

    #[test]
    fn sections() {
        let s = genus_one_section(&w("RLRL")).unwrap();
        assert_eq!((s.euler_blowup, s.boundary_circle_count(), s.genus), (-4, 4, 1));
        assert_eq!(s.entry(GAMMA_O).unwrap().circle_count, 2);
        assert_eq!(s.entry(GAMMA_O).unwrap().class_per_circle, (1, 1));
        let s = genus_one_section(&w("RL")).unwrap();
        assert_eq!((s.euler_blowup, s.boundary_circle_count(), s.genus), (-3, 3, 1));
        assert_eq!(s.boundary_orbit_count(), 2);
        let s = genus_one_section(&w("RRLL")).unwrap();
        assert_eq!((s.euler_blowup, s.boundary_circle_count(), s.genus), (-4, 4, 1));
    }

    #[test]
    fn json_shape() {
        let s = genus_one_section(&w("RL")).unwrap();
        let v = s.to_json();
        assert_eq!(v["euler"], -3);
        assert_eq!(v["genus"], 1);
        assert_eq!(v["boundary"][0]["orbit"], GAMMA_O);
        assert_eq!(v["boundary"][0]["circles"], 2);
        assert_eq!(v["boundary"][0]["class"], serde_json::json!([1, 1]));
    }
}
