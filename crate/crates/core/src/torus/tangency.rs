//! Vertex sectors of `P_RW` met by the stable direction of `RW`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

use super::parallelogram::{build_parallelogram, Embedding};
use super::point::PlanePoint;
use crate::error::{Error, Result};
use crate::sl2z::{IntMatrix2, RLWord};

/// `α + β·√D` with `D` not a perfect square.
#[derive(Clone, Debug)]
pub(crate) struct Surd {
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl Surd {
    pub fn sign(&self, disc: &BigInt) -> Result<Ordering> {
        let sa = self.alpha.sign();
        let sb = self.beta.sign();
        let cmp = |s: num_bigint::Sign| match s {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        };
        if self.beta.is_zero() {
            return Ok(cmp(sa));
        }
        if self.alpha.is_zero() || sa == sb {
            return Ok(cmp(sb));
        }
        let lhs = &self.alpha * &self.alpha;
        let rhs = &self.beta * &self.beta * disc;
        match lhs.cmp(&rhs) {
            Ordering::Greater => Ok(cmp(sa)),
            Ordering::Less => Ok(cmp(sb)),
            Ordering::Equal => Err(Error::Internal(format!("discriminant {disc} is a perfect square"))),
        }
    }
}

/// The stable eigenvector `(2b, (d − a) − √D)` of a hyperbolic `m`, `D = t² − 4`.
/// `cross(e, v)` for an integer vector `e` is returned as a surd.
fn cross_with_stable(m: &IntMatrix2, e: (&BigInt, &BigInt)) -> Surd {
    let (ex, ey) = e;
    let two_b = m.b() * 2;
    Surd { alpha: ex * (m.d() - m.a()) - ey * two_b, beta: -ex }
}

fn scaled(p: &PlanePoint, den: &BigInt) -> (BigInt, BigInt) {
    let k = BigRational::from_integer(den.clone());
    ((&p.x * &k).to_integer(), (&p.y * &k).to_integer())
}

/// Counts the vertex sectors (two at `O`, one each at `M` and `N`) whose
/// interior contains the stable line of `RW`.
pub fn stable_tangency_count(w: &RLWord) -> Result<u32> {
    let p = build_parallelogram(w)?;
    if p.embedding != Embedding::Generic {
        return Err(Error::DegenerateEmbedding(w.to_string()));
    }
    let m = &p.rw;
    let t = m.trace();
    let disc: BigInt = &t * &t - 4;
    let root = disc.sqrt();
    if &root * &root == disc {
        return Err(Error::Internal(format!("t^2 - 4 = {disc} is a perfect square")));
    }
    let den: BigInt = &t - 2;
    let verts: Vec<(BigInt, BigInt)> = p.vertices_ccw().iter().map(|v| scaled(v, &den)).collect();

    let mut count = 0;
    for k in 0..4 {
        let (vx, vy) = &verts[k];
        let (nx, ny) = &verts[(k + 1) % 4];
        let (px, py) = &verts[(k + 3) % 4];
        let e1 = (nx - vx, ny - vy);
        let e2 = (px - vx, py - vy);
        // v inside the sector iff cross(e1, v) > 0 and cross(v, e2) > 0
        let c1 = cross_with_stable(m, (&e1.0, &e1.1)).sign(&disc)?;
        let c2 = cross_with_stable(m, (&e2.0, &e2.1)).sign(&disc)?.reverse();
        let inside_pos = c1 == Ordering::Greater && c2 == Ordering::Greater;
        let inside_neg = c1 == Ordering::Less && c2 == Ordering::Less;
        if inside_pos || inside_neg {
            count += 1;
        }
    }
    Ok(count)
}
