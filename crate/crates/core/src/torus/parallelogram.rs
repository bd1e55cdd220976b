//! The quadrilateral `P_RW` spanned by the fixed points `O`, `M`, `N` of `RW`.
//!
//! For `RW = (a b; c d)` with `t = a + d`, the plane lifts are
//! `O = (0,0)`, `O' = (1,0)`, `M = (d−1, −c)/(t−2)` and `N = (a−1, c)/(t−2)`.
//! Since `M + N = O'` the quadrilateral `O, M, O', N` is a parallelogram whose
//! diagonal `OO'` lies in its interior. Its sides are
//! `r₁ = [O, M]`, `r₀ = [O', M]`, `s₀ = [O, N]`, `s₁ = [O', N]`, and `RW`
//! maps `r₁` onto `r₀ − (1,0)` and `s₁` onto `s₀ + (a, c)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::point::{PlanePoint, TorusPointQ};
use crate::error::{Error, Result};
use crate::sl2z::{word_to_matrix, IntMatrix2, Letter, RLWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Embedding {
    /// `O`, `M`, `N` are three distinct torus points.
    Generic,
    /// `M` and `N` coincide on the torus (`W = RLⁿ` or `LⁿR`).
    DegenerateMN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Containment {
    Interior,
    Boundary,
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: PlanePoint,
    pub to: PlanePoint,
}

impl Segment {
    fn transform(&self, m: &IntMatrix2) -> Segment {
        Segment { from: self.from.transform(m), to: self.to.transform(m) }
    }

    fn translate(&self, v: &PlanePoint) -> Segment {
        Segment { from: self.from.add(v), to: self.to.add(v) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParallelogramData {
    pub word: RLWord,
    pub rw: IntMatrix2,
    #[serde(serialize_with = "ser_display")]
    pub trace: BigInt,
    pub lift_o: PlanePoint,
    pub lift_o2: PlanePoint,
    pub lift_m: PlanePoint,
    pub lift_n: PlanePoint,
    pub r0: Segment,
    pub r1: Segment,
    pub s0: Segment,
    pub s1: Segment,
    pub embedding: Embedding,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Plane lifts `[O, M, O', N]` (counter-clockwise) computed from `RW` alone.
pub(crate) fn vertex_lifts(rw: &IntMatrix2) -> Result<[PlanePoint; 4]> {
    rw.require_sl2()?;
    let t = rw.trace();
    if t < BigInt::from(3) {
        return Err(Error::NotHyperbolic(t.to_string()));
    }
    let den: BigInt = &t - 2;
    let q = |n: BigInt| BigRational::new(n, den.clone());
    let (a, c, d) = (rw.a(), rw.c(), rw.d());
    let m = PlanePoint::new(q(d - 1), q(-c));
    let n = PlanePoint::new(q(a - 1), q(c.clone()));
    Ok([PlanePoint::origin(), m, PlanePoint::from_ints(1, 0), n])
}

/// `W` equals `R·Lⁿ` or `Lⁿ·R` for some `n ≥ 1`.
pub fn is_degenerate_word(w: &RLWord) -> bool {
    let ls = w.letters();
    let n = ls.len();
    if n < 2 || w.count(Letter::R) != 1 {
        return false;
    }
    ls[0] == Letter::R || ls[n - 1] == Letter::R
}

/// Builds `P_RW` for a mixed word `W`, checking the vertex confinement, the
/// side identities and that the word-form and coordinate embedding tests agree.
pub fn build_parallelogram(w: &RLWord) -> Result<ParallelogramData> {
    w.require_mixed()?;
    let rw = &IntMatrix2::r() * &word_to_matrix(w);
    let [o, m, o2, n] = vertex_lifts(&rw)?;

    let zero = BigRational::zero();
    let one = BigRational::one();
    // N in the closed triangle (0,0),(1,0),(1,1); M + (0,1) in (0,0),(1,1),(0,1).
    let n_ok = zero <= n.y && n.y <= n.x && n.x <= one;
    let m_up = PlanePoint::new(m.x.clone(), &m.y + &one);
    let m_ok = zero <= m_up.x && m_up.x <= m_up.y && m_up.y <= one;
    if !(n_ok && m_ok) {
        return Err(Error::Internal(format!("vertices of P_RW for {w} escape their triangles")));
    }

    let r1 = Segment { from: o.clone(), to: m.clone() };
    let r0 = Segment { from: o2.clone(), to: m.clone() };
    let s0 = Segment { from: o.clone(), to: n.clone() };
    let s1 = Segment { from: o2.clone(), to: n.clone() };
    if r1.transform(&rw) != r0.translate(&PlanePoint::from_ints(-1, 0)) {
        return Err(Error::Internal(format!("RW does not map r1 onto r0 for {w}")));
    }
    let shift = PlanePoint::new(
        BigRational::from_integer(rw.a().clone()),
        BigRational::from_integer(rw.c().clone()),
    );
    if s1.transform(&rw) != s0.translate(&shift) {
        return Err(Error::Internal(format!("RW does not map s1 onto s0 for {w}")));
    }

    let (to, tm, tn) = (o.project(), m.project(), n.project());
    let distinct = to != tm && to != tn && tm != tn;
    let by_word = !is_degenerate_word(w);
    if distinct != by_word {
        return Err(Error::Internal(format!(
            "embedding tests disagree for {w}: coordinates say {distinct}, word form says {by_word}"
        )));
    }
    let embedding = if distinct { Embedding::Generic } else { Embedding::DegenerateMN };

    Ok(ParallelogramData {
        word: w.clone(),
        trace: rw.trace(),
        rw,
        lift_o: o,
        lift_o2: o2,
        lift_m: m,
        lift_n: n,
        r0,
        r1,
        s0,
        s1,
        embedding,
    })
}

impl ParallelogramData {
    /// Counter-clockwise plane vertices `[O, M, O', N]`.
    pub fn vertices_ccw(&self) -> [&PlanePoint; 4] {
        [&self.lift_o, &self.lift_m, &self.lift_o2, &self.lift_n]
    }

    pub fn torus_o(&self) -> TorusPointQ {
        self.lift_o.project()
    }

    pub fn torus_m(&self) -> TorusPointQ {
        self.lift_m.project()
    }

    pub fn torus_n(&self) -> TorusPointQ {
        self.lift_n.project()
    }

    /// The two triangles `O N O'` and `O O' M` meet only along the diagonal.
    pub fn triangles_disjoint(&self) -> bool {
        let diag = self.lift_o2.sub(&self.lift_o);
        let side_n = diag.cross(&self.lift_n.sub(&self.lift_o));
        let side_m = diag.cross(&self.lift_m.sub(&self.lift_o));
        side_n.is_positive() && side_m.is_negative()
    }
}

/// A side of `P_RW`. In counter-clockwise order the quadrilateral's edges are
/// `r₁ = O→M`, `r₀ = M→O'`, `s₁ = O'→N`, `s₀ = N→O`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    R1,
    R0,
    S1,
    S0,
}

impl Side {
    pub(crate) const CCW: [Side; 4] = [Side::R1, Side::R0, Side::S1, Side::S0];

    /// Sides that are images of the other pair under `RW`.
    pub fn is_image_side(self) -> bool {
        matches!(self, Side::R0 | Side::S0)
    }
}

/// Where a torus point sits relative to `P_RW`, collecting every lift.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Location {
    pub interior: bool,
    pub vertex: bool,
    /// Open sides containing some lift, sorted.
    pub sides: Vec<Side>,
}

impl Location {
    fn record_plane(&mut self, signs: [std::cmp::Ordering; 4]) {
        use std::cmp::Ordering::*;
        if signs.contains(&Less) {
            return;
        }
        let zeros: Vec<usize> = (0..4).filter(|&k| signs[k] == Equal).collect();
        match zeros.len() {
            0 => self.interior = true,
            1 => {
                let side = Side::CCW[zeros[0]];
                if !self.sides.contains(&side) {
                    self.sides.push(side);
                    self.sides.sort();
                }
            }
            _ => self.vertex = true,
        }
    }

    pub fn containment(&self) -> Containment {
        if self.interior {
            Containment::Interior
        } else if self.vertex || !self.sides.is_empty() {
            Containment::Boundary
        } else {
            Containment::Outside
        }
    }
}

/// Exact location of a torus point over all lifts with offsets in `{−1, 0, 1}²`.
pub fn locate_point(p: &ParallelogramData, q: &TorusPointQ) -> Location {
    let verts = p.vertices_ccw();
    let mut loc = Location::default();
    for i in -1..=1 {
        for j in -1..=1 {
            let x = q.lift().add(&PlanePoint::from_ints(i, j));
            let mut signs = [std::cmp::Ordering::Equal; 4];
            for k in 0..4 {
                let e = verts[(k + 1) % 4].sub(verts[k]);
                signs[k] = e.cross(&x.sub(verts[k])).cmp(&BigRational::zero());
            }
            loc.record_plane(signs);
        }
    }
    loc
}

/// JSON object with the plane vertices, torus vertices, sides and embedding tag.
pub fn parallelogram_json(p: &ParallelogramData) -> serde_json::Value {
    serde_json::json!({
        "word": p.word.to_string(),
        "rw": p.rw.to_string(),
        "trace": p.trace.to_string(),
        "vertices": {"O": &p.lift_o, "M": &p.lift_m, "O'": &p.lift_o2, "N": &p.lift_n},
        "torus": {"O": p.torus_o(), "M": p.torus_m(), "N": p.torus_n()},
        "sides": {"r0": &p.r0, "r1": &p.r1, "s0": &p.s0, "s1": &p.s1},
        "embedding": p.embedding,
    })
}

fn classify_plane(verts: [&PlanePoint; 4], x: &PlanePoint) -> Containment {
    let mut on_edge = false;
    for k in 0..4 {
        let v = verts[k];
        let e = verts[(k + 1) % 4].sub(v);
        let s = e.cross(&x.sub(v));
        if s.is_negative() {
            return Containment::Outside;
        }
        if s.is_zero() {
            on_edge = true;
        }
    }
    if on_edge {
        Containment::Boundary
    } else {
        Containment::Interior
    }
}

/// Classifies a torus point against `P_RW` by testing its lifts with integer
/// offsets in `{−1, 0, 1}²`. The open diagonal `OO'` counts as interior.
pub fn point_in_parallelogram(p: &ParallelogramData, q: &TorusPointQ) -> Containment {
    classify_lifts(p.vertices_ccw(), q)
}

pub(crate) fn classify_lifts(verts: [&PlanePoint; 4], q: &TorusPointQ) -> Containment {
    let mut best = Containment::Outside;
    for i in -1..=1 {
        for j in -1..=1 {
            let lift = q.lift().add(&PlanePoint::from_ints(i, j));
            match classify_plane(verts, &lift) {
                Containment::Interior => return Containment::Interior,
                Containment::Boundary => best = Containment::Boundary,
                Containment::Outside => {}
            }
        }
    }
    best
}

/// Integer version of the containment test for points `(p, q)/den`, used in
/// bulk orbit enumeration. Vertices are stored as numerators over `t − 2`.
#[derive(Clone, Debug)]
pub(crate) struct FastQuad {
    t2: i128,
    verts: [(i128, i128); 4],
}

impl FastQuad {
    pub fn from_rw(rw: &IntMatrix2) -> Result<Self> {
        let lifts = vertex_lifts(rw)?;
        let t2: BigInt = rw.trace() - 2;
        let too_large = || Error::TooLarge(format!("trace of {rw}"));
        if t2 > BigInt::from(1i64 << 40) {
            return Err(too_large());
        }
        let t2 = t2.to_i128().ok_or_else(too_large)?;
        let num = |r: &BigRational| -> i128 {
            (r * BigRational::from_integer(t2.into())).to_integer().to_i128().expect("bounded")
        };
        let mut verts = [(0, 0); 4];
        for (slot, v) in verts.iter_mut().zip(lifts.iter()) {
            *slot = (num(&v.x), num(&v.y));
        }
        Ok(FastQuad { t2, verts })
    }

    /// Integer counterpart of [`locate_point`].
    pub fn locate(&self, p: i64, q: i64, den: i64) -> Location {
        let (p, q, den) = (p as i128, q as i128, den as i128);
        let mut loc = Location::default();
        for i in -1..=1i128 {
            for j in -1..=1i128 {
                let (x, y) = (p + i * den, q + j * den);
                let mut signs = [std::cmp::Ordering::Equal; 4];
                for k in 0..4 {
                    let (vx, vy) = self.verts[k];
                    let (wx, wy) = self.verts[(k + 1) % 4];
                    let (dx, dy) = (x * self.t2 - vx * den, y * self.t2 - vy * den);
                    signs[k] = ((wx - vx) * dy - (wy - vy) * dx).cmp(&0);
                }
                loc.record_plane(signs);
            }
        }
        loc
    }

    /// Whether `(p, q)/den` is the torus projection of one of the vertices.
    pub fn is_vertex(&self, p: i64, q: i64, den: i64) -> bool {
        let (p, q, den) = (p as i128, q as i128, den as i128);
        self.verts.iter().any(|&(vx, vy)| {
            (p * self.t2 - vx.rem_euclid(self.t2) * den) == 0
                && (q * self.t2 - vy.rem_euclid(self.t2) * den) == 0
        })
    }
}

/// The fixed points `k/(t−2)·(d−1, −c)` named by the construction, deduplicated.
#[derive(Clone, Debug, Serialize)]
pub struct FormulaFixedPoints {
    pub points: Vec<TorusPointQ>,
    /// `t − 2`, the number of values of `k`.
    #[serde(serialize_with = "ser_display")]
    pub multiples: BigInt,
}

impl FormulaFixedPoints {
    /// Distinct points are fewer than `t − 2` (a common factor of `d − 1`,
    /// `c` and `t − 2`).
    pub fn collapsed(&self) -> bool {
        BigInt::from(self.points.len()) != self.multiples
    }
}

const MAX_FORMULA_POINTS: u64 = 1 << 22;

pub fn formula_fixed_points(rw: &IntMatrix2) -> Result<FormulaFixedPoints> {
    rw.require_sl2()?;
    let t = rw.trace();
    if t < BigInt::from(3) {
        return Err(Error::NotHyperbolic(t.to_string()));
    }
    let t2: BigInt = &t - 2;
    let count = t2.to_u64().filter(|&c| c <= MAX_FORMULA_POINTS).ok_or_else(|| {
        Error::TooLarge(format!("formula point list of length {t2}"))
    })?;
    let (dx, dy) = (rw.d() - 1, -rw.c());
    let mut points = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for k in 0..count {
        let k = BigInt::from(k);
        let p = TorusPointQ::new(
            BigRational::new(&k * &dx, t2.clone()),
            BigRational::new(&k * &dy, t2.clone()),
        );
        if !p.is_fixed_by(rw) {
            return Err(Error::Internal(format!("formula point {p} is not fixed by {rw}")));
        }
        if seen.insert(p.clone()) {
            points.push(p);
        }
    }
    Ok(FormulaFixedPoints { points, multiples: t2 })
}
