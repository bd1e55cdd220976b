//! Exact 2×2 integer matrices with determinant ±1.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The matrix `(a b; c d)` with arbitrary-precision entries and
/// `ad - bc = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl IntMatrix2 {
    /// Builds `(a b; c d)`, rejecting determinants other than ±1.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = IntMatrix2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        let det = m.det();
        if det.abs() != BigInt::one() {
            return Err(Error::InvalidDeterminant(det.to_string()));
        }
        Ok(m)
    }

    /// Same as [`IntMatrix2::new`] but additionally requires determinant +1.
    pub fn sl2(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Self::new(a, b, c, d)?;
        m.require_sl2()?;
        Ok(m)
    }

    // Products of unimodular matrices stay unimodular, so internal
    // constructors skip the determinant check.
    pub(crate) fn from_parts_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!((&a * &d - &b * &c).abs().is_one());
        IntMatrix2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::from_parts_unchecked(1.into(), 0.into(), 0.into(), 1.into())
    }

    /// `R = (1 1; 0 1)`.
    pub fn r() -> Self {
        Self::from_parts_unchecked(1.into(), 1.into(), 0.into(), 1.into())
    }

    /// `L = (1 0; 1 1)`.
    pub fn l() -> Self {
        Self::from_parts_unchecked(1.into(), 0.into(), 1.into(), 1.into())
    }

    /// `S = (0 -1; 1 0)`, the order-4 rotation.
    pub fn s() -> Self {
        Self::from_parts_unchecked(0.into(), (-1).into(), 1.into(), 0.into())
    }

    /// `(0 1; 1 0)`, the letter-swapping involution of GL(2,Z).
    pub fn swap() -> Self {
        Self::from_parts_unchecked(0.into(), 1.into(), 1.into(), 0.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn require_sl2(&self) -> Result<()> {
        if self.is_sl2() {
            Ok(())
        } else {
            Err(Error::NotSpecialLinear(self.det().to_string()))
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// True when every entry is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.entries().iter().all(|e| !e.is_negative())
    }

    /// True when every entry is `>= 1`.
    pub fn is_positive(&self) -> bool {
        self.entries().iter().all(|e| e.is_positive())
    }

    pub fn inverse(&self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        if self.is_sl2() {
            Self::from_parts_unchecked(d.clone(), -b, -c, a.clone())
        } else {
            Self::from_parts_unchecked(-d, b.clone(), c.clone(), -a)
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &IntMatrix2) -> Self {
        &(&g.inverse() * self) * g
    }

    /// Exact `n`-th power by repeated squaring; `n = 0` gives the identity.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies the matrix to an integer column vector.
    pub fn apply(&self, v: (&BigInt, &BigInt)) -> (BigInt, BigInt) {
        (&self.a * v.0 + &self.b * v.1, &self.c * v.0 + &self.d * v.1)
    }
}

/// Exact `n`-th power of `m`; see [`IntMatrix2::pow`].
pub fn mat_pow(m: &IntMatrix2, n: u32) -> Result<IntMatrix2> {
    if n == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    Ok(m.pow(n))
}

impl Mul for &IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2::from_parts_unchecked(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        &self * &o
    }
}

impl Neg for &IntMatrix2 {
    type Output = IntMatrix2;

    fn neg(self) -> IntMatrix2 {
        IntMatrix2::from_parts_unchecked(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for IntMatrix2 {
    type Output = IntMatrix2;

    fn neg(self) -> IntMatrix2 {
        -&self
    }
}

/// Text form `a,b;c,d`.
impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for IntMatrix2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "matrix", input: s.to_string() };
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(bad());
        }
        let mut vals = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(bad());
            }
            for c in cols {
                let v: BigInt = c.trim().parse().map_err(|_| bad())?;
                vals.push(v);
            }
        }
        let mut it = vals.into_iter();
        let (a, b, c, d) = (
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        );
        IntMatrix2::new(a, b, c, d)
    }
}

impl serde::Serialize for IntMatrix2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
