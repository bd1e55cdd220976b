//! Periodic orbits of `RW` and how often they cross the pair of pants built
//! on `P_RW`.
//!
//! An orbit point in the interior of `P_RW` is one crossing. A point on the
//! open side `r₁` (or `s₁`) runs along the tangent rectangle and comes back on
//! `r₀` (or `s₀`) one period later, since `RW` maps `r₁` onto `r₀`. After the
//! rectangles are tilted, that pair of visits is crossed exactly once whichever
//! way the tilt goes, so only the visits to `r₀` and `s₀` are counted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::parallelogram::FastQuad;
use super::point::TorusPointQ;
use crate::error::{Error, Result};
use crate::sl2z::{periodic_point_count, FixedPointGroup, IntMatrix2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub representative: TorusPointQ,
    pub period: u32,
    pub passes: u32,
    pub intersection: u32,
    pub boundary_flag: bool,
}

/// Default bound on the number of fixed points of `RWⁿ` walked per period.
pub const DEFAULT_MAX_POINTS: u64 = 1 << 26;

pub fn enumerate_periodic_orbits(rw: &IntMatrix2, max_period: u32) -> Result<Vec<OrbitRecord>> {
    enumerate_periodic_orbits_capped(rw, max_period, DEFAULT_MAX_POINTS)
}

/// Same as [`enumerate_periodic_orbits`] with an explicit point budget per period.
pub fn enumerate_periodic_orbits_capped(
    rw: &IntMatrix2,
    max_period: u32,
    max_points: u64,
) -> Result<Vec<OrbitRecord>> {
    if max_period == 0 {
        return Err(Error::InvalidArgument("max_period must be at least 1".into()));
    }
    let quad = FastQuad::from_rw(rw)?;
    let mut out = Vec::new();
    for n in 1..=max_period {
        out.extend(orbits_of_period(rw, n, &quad, max_points)?);
    }
    Ok(out)
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
}

fn orbits_of_period(rw: &IntMatrix2, n: u32, quad: &FastQuad, max_points: u64) -> Result<Vec<OrbitRecord>> {
    periodic_point_count(rw, n)?;
    let group = FixedPointGroup::new(&rw.pow(n), max_points)?;
    let den = group.den;
    let reduce = |x: &BigInt| x.mod_floor(&BigInt::from(den)).to_i64().expect("reduced");
    let (ra, rb, rc, rd) = (reduce(rw.a()), reduce(rw.b()), reduce(rw.c()), reduce(rw.d()));
    let den128 = den as i128;
    let step = |p: i64, q: i64| -> (i64, i64) {
        let x = (ra as i128 * p as i128 + rb as i128 * q as i128).rem_euclid(den128);
        let y = (rc as i128 * p as i128 + rd as i128 * q as i128).rem_euclid(den128);
        (x as i64, y as i64)
    };

    let mut seen = Bits::new(group.len());
    let mut records = Vec::new();
    let mut orbit = Vec::new();
    for idx in 0..group.len() {
        if seen.get(idx) {
            continue;
        }
        let start = group.point(idx);
        orbit.clear();
        let mut cur = start;
        loop {
            seen.set(group.index(cur.0, cur.1));
            orbit.push(cur);
            cur = step(cur.0, cur.1);
            if cur == start {
                break;
            }
            if orbit.len() > n as usize {
                return Err(Error::Internal(format!("orbit longer than {n} under RW^{n}")));
            }
        }
        if orbit.len() != n as usize {
            // recorded at its least period
            continue;
        }
        let rep = *orbit.iter().min().expect("nonempty orbit");
        let boundary = orbit.iter().any(|&(p, q)| quad.is_vertex(p, q, den));
        let mut passes = 0u32;
        if !boundary {
            for &(p, q) in &orbit {
                if crosses(quad, p, q, den).ok_or_else(|| Error::AmbiguousCrossing {
                    point: TorusPointQ::from_scaled(p, q, den).to_string(),
                    period: n,
                })? {
                    passes += 1;
                }
            }
        }
        records.push(OrbitRecord {
            representative: TorusPointQ::from_scaled(rep.0, rep.1, den),
            period: n,
            passes,
            intersection: n + passes,
            boundary_flag: boundary,
        });
    }
    records.sort_by(|x, y| x.representative.cmp(&y.representative));
    Ok(records)
}

/// Whether a non-vertex orbit point is counted as a crossing; `None` when its
/// lifts sit on two sides, or on a side and in the interior.
fn crosses(quad: &FastQuad, p: i64, q: i64, den: i64) -> Option<bool> {
    let loc = quad.locate(p, q, den);
    if loc.vertex {
        return None;
    }
    match (loc.interior, loc.sides.as_slice()) {
        (true, []) => Some(true),
        (false, []) => Some(false),
        (false, [side]) => Some(side.is_image_side()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2z::fixed_point_lattice;
    use crate::torus::{build_parallelogram, locate_point, Side};

    fn m(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
        IntMatrix2::new(a, b, c, d).unwrap()
    }

    fn tp(s: &str) -> TorusPointQ {
        s.parse().unwrap()
    }

    #[test]
    fn rlrl_fixed_orbits() {
        let recs = enumerate_periodic_orbits(&m(8, 5, 3, 2), 1).unwrap();
        assert_eq!(recs.len(), 8);
        let find = |s: &str| recs.iter().find(|r| r.representative == tp(s)).unwrap().clone();
        let half = find("1/2,1/2");
        assert_eq!((half.passes, half.intersection, half.boundary_flag), (0, 1, false));
        let inner = find("5/8,1/8");
        assert_eq!((inner.passes, inner.intersection, inner.boundary_flag), (1, 2, false));
        assert_eq!(recs.iter().filter(|r| r.boundary_flag).count(), 3);
        let interior: u32 = recs.iter().filter(|r| !r.boundary_flag).map(|r| r.intersection).sum();
        assert_eq!(interior, 3 + 4);
    }

    #[test]
    fn small_examples() {
        let recs = enumerate_periodic_orbits(&m(3, 2, 1, 1), 1).unwrap();
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|r| r.boundary_flag));
        let recs = enumerate_periodic_orbits(&m(2, 1, 1, 1), 1).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].representative, TorusPointQ::origin());
        assert!(recs[0].boundary_flag);
    }

    #[test]
    fn records_partition_the_lattice() {
        // exact slow path: walk orbits with rationals and the exact locator
        for word in ["RRLRL", "RLRL", "RRLL", "RLLL"] {
            let p = build_parallelogram(&word.parse().unwrap()).unwrap();
            let rw = &p.rw;
            let recs = enumerate_periodic_orbits(rw, 3).unwrap();
            for n in 1..=3u32 {
                let total: u64 = recs.iter().filter(|r| n % r.period == 0).map(|r| r.period as u64).sum();
                assert_eq!(total, fixed_point_lattice(rw, n).unwrap().len() as u64);
            }
            for r in &recs {
                let mut x = r.representative.clone();
                let (mut interior, mut hits) = (0, [0u32; 4]);
                for k in 0..r.period {
                    if k > 0 {
                        assert_ne!(x, r.representative, "period is not least");
                    }
                    let loc = locate_point(&p, &x);
                    if loc.interior {
                        interior += 1;
                    }
                    for side in &loc.sides {
                        hits[Side::CCW.iter().position(|s| s == side).unwrap()] += 1;
                    }
                    x = x.apply(rw);
                }
                assert_eq!(x, r.representative);
                if r.boundary_flag {
                    continue;
                }
                // r1 visits are followed by r0 visits, s1 by s0
                assert_eq!(hits[0], hits[1], "{word} {}", r.representative);
                assert_eq!(hits[2], hits[3], "{word} {}", r.representative);
                assert_eq!(r.passes, interior + hits[1] + hits[3]);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(enumerate_periodic_orbits(&m(1, 1, 0, 1), 1), Err(Error::NotHyperbolic(_))));
        assert!(enumerate_periodic_orbits(&m(2, 1, 1, 1), 0).is_err());
        assert!(matches!(
            enumerate_periodic_orbits_capped(&m(8, 5, 3, 2), 3, 100),
            Err(Error::TooLarge(_))
        ));
    }
}
