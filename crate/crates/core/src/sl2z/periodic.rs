//! Periodic points of toral automorphisms.
//!
//! The fixed points of `A` on `𝕋²` are `(A − I)⁻¹ℤ² / ℤ²`. With a Smith
//! decomposition `U (A − I) V = diag(e₁, e₂)`, `e₁ | e₂`, they are exactly
//! `V · (i/e₁, j/e₂)` for `0 ≤ i < e₁`, `0 ≤ j < e₂`, and every coordinate has
//! denominator dividing `e₂`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix2;
use crate::error::{Error, Result};
use crate::torus::TorusPointQ;

type Mat = [[BigInt; 2]; 2];

/// `U · N · V = diag(e1, e2)` with `U`, `V` unimodular, `0 < e1 | e2`.
#[derive(Clone, Debug)]
pub struct Smith2 {
    pub u: Mat,
    pub v: Mat,
    pub e1: BigInt,
    pub e2: BigInt,
}

fn ident() -> Mat {
    [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]]
}

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Smith normal form of a nonsingular 2×2 integer matrix.
pub fn smith_2x2(n: &Mat) -> Result<Smith2> {
    let det = &n[0][0] * &n[1][1] - &n[0][1] * &n[1][0];
    if det.is_zero() {
        return Err(Error::InvalidArgument("singular matrix has no finite Smith form".into()));
    }
    let mut a = n.clone();
    let mut u = ident();
    let mut v = ident();
    loop {
        // pivot: smallest nonzero entry moves to (0, 0)
        let (mut pi, mut pj) = (0, 0);
        let mut best: Option<BigInt> = None;
        for i in 0..2 {
            for j in 0..2 {
                if !a[i][j].is_zero() && best.as_ref().is_none_or(|b| a[i][j].abs() < *b) {
                    best = Some(a[i][j].abs());
                    (pi, pj) = (i, j);
                }
            }
        }
        if pi == 1 {
            a.swap(0, 1);
            u.swap(0, 1);
        }
        if pj == 1 {
            for row in a.iter_mut().chain(v.iter_mut()) {
                row.swap(0, 1);
            }
        }
        let p = a[0][0].clone();
        let q = a[1][0].div_floor(&p);
        for k in 0..2 {
            let t = &q * &a[0][k];
            a[1][k] -= t;
            let t = &q * &u[0][k];
            u[1][k] -= t;
        }
        let q = a[0][1].div_floor(&p);
        for row in a.iter_mut().chain(v.iter_mut()) {
            let t = &q * &row[0];
            row[1] -= t;
        }
        if !a[1][0].is_zero() || !a[0][1].is_zero() {
            continue;
        }
        if !a[1][1].is_multiple_of(&p) {
            for k in 0..2 {
                let t = a[1][k].clone();
                a[0][k] += t;
                let t = u[1][k].clone();
                u[0][k] += t;
            }
            continue;
        }
        break;
    }
    for i in 0..2 {
        if a[i][i].is_negative() {
            for k in 0..2 {
                a[i][k] = -&a[i][k];
                u[i][k] = -&u[i][k];
            }
        }
    }
    debug_assert_eq!(mat_mul(&mat_mul(&u, n), &v), [[a[0][0].clone(), BigInt::zero()], [BigInt::zero(), a[1][1].clone()]]);
    Ok(Smith2 { u, v, e1: a[0][0].clone(), e2: a[1][1].clone() })
}

/// `A − I` as a plain integer matrix.
fn minus_identity(m: &IntMatrix2) -> Mat {
    [[m.a() - 1, m.b().clone()], [m.c().clone(), m.d() - 1]]
}

/// `|det(mⁿ − I)|`, which for `det m = 1` equals `|tr(mⁿ) − 2|`.
pub fn periodic_point_count(m: &IntMatrix2, n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    let p = m.pow(n);
    let count: BigInt = p.det() - p.trace() + 1;
    let count = count.abs();
    if count.is_zero() {
        return Err(Error::NotHyperbolicPower { power: n });
    }
    Ok(count)
}

/// Every fixed point of `mⁿ` on the torus, sorted.
pub fn fixed_point_lattice(m: &IntMatrix2, n: u32) -> Result<Vec<TorusPointQ>> {
    periodic_point_count(m, n)?;
    let group = FixedPointGroup::new(&m.pow(n), u32::MAX as u64)?;
    let den = group.den;
    let mut pts: Vec<TorusPointQ> =
        (0..group.len()).map(|idx| {
            let (p, q) = group.point(idx);
            TorusPointQ::from_scaled(p, q, den)
        }).collect();
    pts.sort();
    Ok(pts)
}

/// Machine-integer view of the fixed-point group of a matrix, for bulk
/// enumeration. Points are `(p, q) / den` with `0 ≤ p, q < den`.
#[derive(Clone, Debug)]
pub(crate) struct FixedPointGroup {
    pub den: i64,
    e1: i64,
    step: i64,
    v: [[i64; 2]; 2],
    v_inv: [[i64; 2]; 2],
}

impl FixedPointGroup {
    /// Fails with `TooLarge` when the group has more than `max_points`
    /// elements or its denominator exceeds 2^40.
    pub fn new(a: &IntMatrix2, max_points: u64) -> Result<Self> {
        let snf = smith_2x2(&minus_identity(a))?;
        let order = &snf.e1 * &snf.e2;
        let too_large = || Error::TooLarge(format!("fixed-point set of size {order}"));
        if order > BigInt::from(max_points) || snf.e2 > BigInt::from(1i64 << 40) {
            return Err(too_large());
        }
        let den = snf.e2.to_i64().ok_or_else(too_large)?;
        let e1 = snf.e1.to_i64().ok_or_else(too_large)?;
        let reduce = |x: &BigInt| x.mod_floor(&snf.e2).to_i64().expect("reduced below den");
        let v = [[reduce(&snf.v[0][0]), reduce(&snf.v[0][1])], [reduce(&snf.v[1][0]), reduce(&snf.v[1][1])]];
        let det_v = &snf.v[0][0] * &snf.v[1][1] - &snf.v[0][1] * &snf.v[1][0];
        let s = if det_v.is_one() { BigInt::one() } else { -BigInt::one() };
        let v_inv = [
            [reduce(&(&s * &snf.v[1][1])), reduce(&(-&s * &snf.v[0][1]))],
            [reduce(&(-&s * &snf.v[1][0])), reduce(&(&s * &snf.v[0][0]))],
        ];
        Ok(FixedPointGroup { den, e1, step: den / e1, v, v_inv })
    }

    pub fn len(&self) -> usize {
        (self.e1 * self.den) as usize
    }

    fn mulmod(&self, x: i64, y: i64) -> i64 {
        ((x as i128 * y as i128).rem_euclid(self.den as i128)) as i64
    }

    /// The `idx`-th point, `0 ≤ idx < len()`.
    pub fn point(&self, idx: usize) -> (i64, i64) {
        let i = idx as i64 / self.den;
        let j = idx as i64 % self.den;
        let y1 = i * self.step;
        let p = (self.mulmod(self.v[0][0], y1) + self.mulmod(self.v[0][1], j)) % self.den;
        let q = (self.mulmod(self.v[1][0], y1) + self.mulmod(self.v[1][1], j)) % self.den;
        (p, q)
    }

    /// Inverse of [`FixedPointGroup::point`].
    pub fn index(&self, p: i64, q: i64) -> usize {
        let y1 = (self.mulmod(self.v_inv[0][0], p) + self.mulmod(self.v_inv[0][1], q)) % self.den;
        let y2 = (self.mulmod(self.v_inv[1][0], p) + self.mulmod(self.v_inv[1][1], q)) % self.den;
        debug_assert_eq!(y1 % self.step, 0);
        ((y1 / self.step) * self.den + y2) as usize
    }
}
