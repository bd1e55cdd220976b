use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sl2z::IntMatrix2;

/// A rational point of the plane (a lift of a torus point).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl PlanePoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        PlanePoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        PlanePoint { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()) }
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn add(&self, o: &PlanePoint) -> PlanePoint {
        PlanePoint { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn sub(&self, o: &PlanePoint) -> PlanePoint {
        PlanePoint { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn neg(&self) -> PlanePoint {
        PlanePoint { x: -&self.x, y: -&self.y }
    }

    pub fn cross(&self, o: &PlanePoint) -> BigRational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn transform(&self, m: &IntMatrix2) -> PlanePoint {
        let a = BigRational::from_integer(m.a().clone());
        let b = BigRational::from_integer(m.b().clone());
        let c = BigRational::from_integer(m.c().clone());
        let d = BigRational::from_integer(m.d().clone());
        PlanePoint { x: &a * &self.x + &b * &self.y, y: &c * &self.x + &d * &self.y }
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn project(&self) -> TorusPointQ {
        TorusPointQ::new(self.x.clone(), self.y.clone())
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A point of `ℚ²/ℤ²`, stored by its representative in `[0,1)²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPointQ {
    x: BigRational,
    y: BigRational,
}

fn frac(v: &BigRational) -> BigRational {
    v - v.floor()
}

impl TorusPointQ {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        TorusPointQ { x: frac(&x), y: frac(&y) }
    }

    /// The point `(p/den, q/den)`.
    pub fn from_scaled(p: impl Into<BigInt>, q: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        Self::new(BigRational::new(p.into(), den.clone()), BigRational::new(q.into(), den))
    }

    pub fn origin() -> Self {
        TorusPointQ { x: BigRational::zero(), y: BigRational::zero() }
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn lift(&self) -> PlanePoint {
        PlanePoint::new(self.x.clone(), self.y.clone())
    }

    /// Image under the toral automorphism `m`.
    pub fn apply(&self, m: &IntMatrix2) -> TorusPointQ {
        self.lift().transform(m).project()
    }

    pub fn is_fixed_by(&self, m: &IntMatrix2) -> bool {
        self.apply(m) == *self
    }

    /// Least common denominator of both coordinates.
    pub fn denominator(&self) -> BigInt {
        num_integer::lcm(self.x.denom().clone(), self.y.denom().clone())
    }
}

impl fmt::Display for TorusPointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// Text form `p/q,r/s`; integers and out-of-range values are accepted and reduced.
impl FromStr for TorusPointQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "torus point", input: s.to_string() };
        let (xs, ys) = s.split_once(',').ok_or_else(bad)?;
        let parse = |t: &str| -> Result<BigRational> {
            let t = t.trim();
            let v = match t.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
            };
            Ok(v)
        };
        Ok(TorusPointQ::new(parse(xs)?, parse(ys)?))
    }
}

impl serde::Serialize for TorusPointQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for PlanePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.x.to_string())?;
        t.serialize_element(&self.y.to_string())?;
        t.end()
    }
}

#[cfg(test)]
pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
pub(crate) fn is_unit_interval(v: &BigRational) -> bool {
    use num_traits::{One, Signed};
    !v.is_negative() && *v < BigRational::one()
}
