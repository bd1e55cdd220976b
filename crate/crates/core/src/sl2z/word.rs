//! Positive words in the generators `R` and `L`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::matrix::IntMatrix2;
use crate::error::{Error, Result};

/// A generator. Declaration order fixes the canonical alphabet order `R < L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    R,
    L,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::R => Letter::L,
            Letter::L => Letter::R,
        }
    }

    pub fn matrix(self) -> IntMatrix2 {
        match self {
            Letter::R => IntMatrix2::r(),
            Letter::L => IntMatrix2::l(),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::L => 'L',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Which conjugacy relation identifies words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum ConjugacyGroup {
    /// Cyclic rotation only.
    Sl2,
    /// Cyclic rotation and exchange of `R` and `L`.
    #[default]
    Gl2,
}

/// A non-empty word over `{R, L}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RLWord(Vec<Letter>);

impl RLWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse { what: "word", input: String::new() });
        }
        Ok(RLWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Both letters occur.
    pub fn is_mixed(&self) -> bool {
        self.0.contains(&Letter::R) && self.0.contains(&Letter::L)
    }

    pub fn require_mixed(&self) -> Result<()> {
        if self.is_mixed() {
            Ok(())
        } else {
            Err(Error::NotMixed(self.to_string()))
        }
    }

    /// The word `letter · self`.
    pub fn prepend(&self, letter: Letter) -> RLWord {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        RLWord(v)
    }

    /// Left rotation by `k` positions.
    pub fn rotate(&self, k: usize) -> RLWord {
        let mut v = self.0.clone();
        let n = v.len();
        v.rotate_left(k % n);
        RLWord(v)
    }

    /// Exchange every `R` with `L`.
    pub fn swapped(&self) -> RLWord {
        RLWord(self.0.iter().map(|l| l.swapped()).collect())
    }

    /// Every length-`n` word over the alphabet, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = RLWord> {
        assert!((1..64).contains(&n));
        (0u64..(1u64 << n)).map(move |bits| {
            RLWord(
                (0..n)
                    .map(|i| if bits >> (n - 1 - i) & 1 == 0 { Letter::R } else { Letter::L })
                    .collect(),
            )
        })
    }

    /// Every mixed word of length `n` (there are `2^n - 2`).
    pub fn all_mixed_of_length(n: usize) -> impl Iterator<Item = RLWord> {
        Self::all_of_length(n).filter(RLWord::is_mixed)
    }
}

impl fmt::Display for RLWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for RLWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "word", input: s.to_string() };
        let letters = s
            .trim()
            .chars()
            .map(|ch| match ch.to_ascii_uppercase() {
                'R' => Ok(Letter::R),
                'L' => Ok(Letter::L),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        RLWord::new(letters).map_err(|_| bad())
    }
}

impl Serialize for RLWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Ordered product of the generator matrices.
pub fn word_to_matrix(w: &RLWord) -> IntMatrix2 {
    w.letters().iter().fold(IntMatrix2::identity(), |acc, l| &acc * &l.matrix())
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub(crate) fn least_rotation_index(s: &[Letter]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Lexicographically least rotation under `R < L`.
pub fn cyclic_normal_form(w: &RLWord) -> RLWord {
    w.rotate(least_rotation_index(w.letters()))
}

/// Canonical representative of the class of `w` under the given group.
pub fn class_normal_form(w: &RLWord, group: ConjugacyGroup) -> RLWord {
    let own = cyclic_normal_form(w);
    match group {
        ConjugacyGroup::Sl2 => own,
        ConjugacyGroup::Gl2 => own.min(cyclic_normal_form(&w.swapped())),
    }
}

/// Whether the two words represent conjugate matrices in the given group.
pub fn conjugacy_equal(w1: &RLWord, w2: &RLWord, group: ConjugacyGroup) -> bool {
    class_normal_form(w1, group) == class_normal_form(w2, group)
}
