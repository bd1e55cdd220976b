//! Factorization of hyperbolic matrices into cyclic `RL`-words.
//!
//! A hyperbolic `m = (a b; c d)` is first conjugated until its off-diagonal
//! entries share a sign. This is Gauss reduction of the fixed-point form
//! `c·x² + (d − a)·xy − b·y²`, whose discriminant is `tr(m)² − 4`: a form
//! with `A·C < 0` corresponds exactly to a matrix with `b·c > 0`, and such a
//! matrix has positive diagonal because `(d − a)² = tr² − 4 − 4bc < tr²`.
//! A positive matrix is then peeled letter by letter from the left.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix2;
use super::word::{least_rotation_index, word_to_matrix, Letter, RLWord};
use crate::error::{Error, Result};

/// A canonical word together with a conjugator `g` such that
/// `g · word_to_matrix(word) · g⁻¹` is the factored matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub word: RLWord,
    pub conjugator: IntMatrix2,
}

impl Factorization {
    /// Checks the conjugation identity exactly.
    pub fn verifies(&self, m: &IntMatrix2) -> bool {
        let g = &self.conjugator;
        &(g * &word_to_matrix(&self.word)) * &g.inverse() == *m
    }
}

const MAX_REDUCTION_STEPS: usize = 1 << 20;

/// Factors a hyperbolic `m ∈ SL(2,Z)` with `tr(m) ≥ 3`.
pub fn rl_factorize(m: &IntMatrix2) -> Result<Factorization> {
    m.require_sl2()?;
    let t = m.trace();
    if t.abs() <= BigInt::from(2) {
        return Err(Error::NotHyperbolic(t.to_string()));
    }
    if t.is_negative() {
        return Err(Error::NegativeTrace(t.to_string()));
    }

    let disc: BigInt = &t * &t - 4;
    let root = disc.sqrt();
    debug_assert!(&root * &root != disc, "t^2 - 4 is never a square for t >= 3");

    let mut cur = m.clone();
    let mut g = IntMatrix2::identity();
    let mut steps = 0usize;
    while !(cur.b() * cur.c()).is_positive() {
        steps += 1;
        if steps > MAX_REDUCTION_STEPS {
            return Err(Error::Internal(format!("reduction of {m} did not terminate")));
        }
        let (next, x) = reduction_step(&cur, &root);
        cur = next;
        g = &g * &x;
    }
    if cur.c().is_negative() {
        let s = IntMatrix2::s();
        cur = cur.conjugate_by(&s);
        g = &g * &s;
    }
    debug_assert!(cur.is_positive());

    let letters = peel_positive(&cur)?;
    let raw = RLWord::new(letters).map_err(|_| Error::Internal("empty peel".into()))?;
    if !raw.is_mixed() {
        return Err(Error::PowerOfOneGenerator(raw.to_string()));
    }
    let k = least_rotation_index(raw.letters());
    let prefix = word_to_matrix_slice(&raw.letters()[..k]);
    let word = raw.rotate(k);
    let conjugator = &g * &prefix;
    Ok(Factorization { word, conjugator })
}

/// One Gauss reduction step: conjugate by `S`, then by the power of `R` that
/// brings the middle form coefficient into the reduced window.
fn reduction_step(m: &IntMatrix2, root: &BigInt) -> (IntMatrix2, IntMatrix2) {
    let s = IntMatrix2::s();
    let m1 = m.conjugate_by(&s);
    let lead = m1.c().clone();
    let middle = m1.d() - m1.a();
    let width: BigInt = lead.abs() * 2;
    // sqrt(D) is irrational, so the open window bounds become integer ones.
    let lo = if lead.abs() > *root { -lead.abs() + 1 } else { root - &width + 1 };
    let offset: BigInt = &middle - &lo;
    let target = &lo + offset.mod_floor(&width);
    let n = (&target - &middle) / (&lead * 2);
    let shift = IntMatrix2::from_parts_unchecked(BigInt::one(), n, BigInt::zero(), BigInt::one());
    let m2 = m1.conjugate_by(&shift);
    (m2, &s * &shift)
}

/// Writes a nonnegative `SL(2,Z)` matrix as a positive word.
fn peel_positive(m: &IntMatrix2) -> Result<Vec<Letter>> {
    let mut letters = Vec::new();
    let (mut a, mut b, mut c, mut d) = (m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone());
    loop {
        if a.is_one() && b.is_zero() && c.is_zero() && d.is_one() {
            return Ok(letters);
        }
        if a >= c && b >= d {
            a -= &c;
            b -= &d;
            letters.push(Letter::R);
        } else if c >= a && d >= b {
            c -= &a;
            d -= &b;
            letters.push(Letter::L);
        } else {
            return Err(Error::Internal(format!("matrix {m} has no leading generator")));
        }
    }
}

fn word_to_matrix_slice(letters: &[Letter]) -> IntMatrix2 {
    letters.iter().fold(IntMatrix2::identity(), |acc, l| &acc * &l.matrix())
}
