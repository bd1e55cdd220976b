//! Complete conjugacy invariants in SL(2,Z).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::rl_factorize;
use super::matrix::IntMatrix2;
use super::word::{word_to_matrix, RLWord};
use crate::error::{Error, Result};

/// Sign of the trace, `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, m: IntMatrix2) -> IntMatrix2 {
        match self {
            Sign::Plus => m,
            Sign::Minus => -m,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The conjugacy class of an element of SL(2,Z).
///
/// * `Hyperbolic(s, w)`: conjugate to `s · word_to_matrix(w)`, `w` mixed and canonical.
/// * `Parabolic(s, n)`: conjugate to `s · Rⁿ` with `n ≠ 0`. `Rⁿ` and `R⁻ⁿ` are
///   not conjugate in SL(2,Z) (`S·Rⁿ·S⁻¹ = L⁻ⁿ`), so the shear is signed.
/// * `Elliptic(m)`: `m` is one of `±I`, `±S`, `±ST`, `±(ST)⁻¹` with `T = R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConjClass {
    Hyperbolic(Sign, RLWord),
    Parabolic(Sign, BigInt),
    Elliptic(IntMatrix2),
}

impl ConjClass {
    /// The canonical representative matrix of the class.
    pub fn representative(&self) -> IntMatrix2 {
        match self {
            ConjClass::Hyperbolic(s, w) => s.apply(word_to_matrix(w)),
            ConjClass::Parabolic(s, n) => s.apply(IntMatrix2::from_parts_unchecked(
                BigInt::one(),
                n.clone(),
                BigInt::zero(),
                BigInt::one(),
            )),
            ConjClass::Elliptic(m) => m.clone(),
        }
    }

    pub fn trace(&self) -> BigInt {
        self.representative().trace()
    }
}

/// The eight finite-order classes, indexed by `(trace, sign of c)`.
fn elliptic_representative(trace: i32, c_positive: bool) -> IntMatrix2 {
    let st = &IntMatrix2::s() * &IntMatrix2::r(); // (0 -1; 1 1), order 6
    match (trace, c_positive) {
        (0, true) => IntMatrix2::s(),
        (0, false) => -IntMatrix2::s(),
        (1, true) => st,
        (1, false) => st.inverse(),
        (-1, false) => -st,
        (-1, true) => -st.inverse(),
        _ => unreachable!("elliptic trace is -1, 0 or 1"),
    }
}

/// Classifies `m ∈ SL(2,Z)` up to conjugacy.
pub fn classify_conjugacy(m: &IntMatrix2) -> Result<ConjClass> {
    m.require_sl2()?;
    let t = m.trace();
    let two = BigInt::from(2);
    if t.abs() > two {
        let (sign, pos) = if t.is_positive() { (Sign::Plus, m.clone()) } else { (Sign::Minus, -m) };
        let f = rl_factorize(&pos)?;
        return Ok(ConjClass::Hyperbolic(sign, f.word));
    }
    if t.abs() == two {
        let (sign, u) = if t.is_positive() { (Sign::Plus, m.clone()) } else { (Sign::Minus, -m) };
        if u.is_identity() {
            return Ok(ConjClass::Elliptic(sign.apply(IntMatrix2::identity())));
        }
        // u - I = k·(x, y)ᵀ(-y, x) with (x, y) primitive; k is the invariant.
        let (b, c) = (u.b(), u.c());
        let size = b.gcd(c);
        let k = if !b.is_zero() {
            if b.is_positive() { size } else { -size }
        } else if c.is_positive() {
            -size
        } else {
            size
        };
        return Ok(ConjClass::Parabolic(sign, k));
    }
    // |t| < 2: c ≠ 0 and its sign records the rotation direction.
    let trace: i32 = if t.is_zero() { 0 } else if t.is_positive() { 1 } else { -1 };
    Ok(ConjClass::Elliptic(elliptic_representative(trace, m.c().is_positive())))
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjClass::Hyperbolic(s, w) => write!(f, "{}{}", s.symbol(), w),
            ConjClass::Parabolic(s, n) => write!(f, "{}R^{}", s.symbol(), n),
            ConjClass::Elliptic(m) => write!(f, "E({m})"),
        }
    }
}

/// Parses the labels produced by `Display`: `+RRL`, `-R^3`, `E(0,-1;1,0)`.
impl FromStr for ConjClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "conjugacy class", input: s.to_string() };
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("E(").and_then(|r| r.strip_suffix(')')) {
            let m: IntMatrix2 = inner.parse().map_err(|_| bad())?;
            return match classify_conjugacy(&m)? {
                c @ ConjClass::Elliptic(_) if c == ConjClass::Elliptic(m.clone()) => Ok(c),
                _ => Err(bad()),
            };
        }
        let (sign, rest) = match s.chars().next() {
            Some('+') => (Sign::Plus, &s[1..]),
            Some('-') => (Sign::Minus, &s[1..]),
            _ => return Err(bad()),
        };
        if let Some(n) = rest.strip_prefix("R^") {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            if n.is_zero() {
                return Err(bad());
            }
            return Ok(ConjClass::Parabolic(sign, n));
        }
        let w: RLWord = rest.parse().map_err(|_| bad())?;
        if !w.is_mixed() || super::word::cyclic_normal_form(&w) != w {
            return Err(bad());
        }
        Ok(ConjClass::Hyperbolic(sign, w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
        IntMatrix2::new(a, b, c, d).unwrap()
    }

    /// Searches conjugators with entries in [-bound, bound].
    fn conjugate_within(x: &IntMatrix2, y: &IntMatrix2, bound: i64) -> bool {
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    for d in -bound..=bound {
                        if a * d - b * c != 1 {
                            continue;
                        }
                        let g = m(a, b, c, d);
                        if &x.conjugate_by(&g) == y {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn examples() {
        assert_eq!(
            classify_conjugacy(&m(2, 1, 1, 1)).unwrap(),
            ConjClass::Hyperbolic(Sign::Plus, "RL".parse().unwrap())
        );
        assert_eq!(classify_conjugacy(&m(0, -1, 1, 0)).unwrap(), ConjClass::Elliptic(IntMatrix2::s()));
        assert_eq!(
            classify_conjugacy(&m(-3, -2, -1, -1)).unwrap(),
            ConjClass::Hyperbolic(Sign::Minus, "RRL".parse().unwrap())
        );
    }

    #[test]
    fn parabolic_shear_is_signed() {
        // R^-3 is not conjugate to R^3 in SL(2,Z); a bounded search confirms it
        // while finding the conjugator to L^3.
        let r_minus3 = m(1, -3, 0, 1);
        assert_eq!(
            classify_conjugacy(&r_minus3).unwrap(),
            ConjClass::Parabolic(Sign::Plus, BigInt::from(-3))
        );
        assert!(!conjugate_within(&r_minus3, &m(1, 3, 0, 1), 4));
        assert!(conjugate_within(&r_minus3, &m(1, 0, 3, 1), 4));
        assert_eq!(
            classify_conjugacy(&m(1, 0, 3, 1)).unwrap(),
            ConjClass::Parabolic(Sign::Plus, BigInt::from(-3))
        );
        assert_eq!(
            classify_conjugacy(&m(-1, 2, 0, -1)).unwrap(),
            ConjClass::Parabolic(Sign::Minus, BigInt::from(-2))
        );
    }

    #[test]
    fn finite_order_classes_are_distinct() {
        let reps: Vec<IntMatrix2> = [(0, true), (0, false), (1, true), (1, false), (-1, true), (-1, false)]
            .iter()
            .map(|&(t, s)| elliptic_representative(t, s))
            .collect();
        for (i, x) in reps.iter().enumerate() {
            assert_eq!(classify_conjugacy(x).unwrap(), ConjClass::Elliptic(x.clone()));
            for y in &reps[i + 1..] {
                assert!(!conjugate_within(x, y, 3), "{x} ~ {y}");
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        for c in [
            ConjClass::Hyperbolic(Sign::Plus, "RRL".parse().unwrap()),
            ConjClass::Hyperbolic(Sign::Minus, "RL".parse().unwrap()),
            ConjClass::Parabolic(Sign::Minus, BigInt::from(-4)),
            ConjClass::Elliptic(IntMatrix2::identity()),
            ConjClass::Elliptic(-IntMatrix2::s()),
        ] {
            assert_eq!(c.to_string().parse::<ConjClass>().unwrap(), c);
        }
        assert!("+LR".parse::<ConjClass>().is_err());
        assert!("E(2,1;1,1)".parse::<ConjClass>().is_err());
    }
}
