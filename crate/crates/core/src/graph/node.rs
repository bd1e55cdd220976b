use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Result;
use crate::sl2z::{class_normal_form, classify_conjugacy, ConjClass, ConjugacyGroup, IntMatrix2, Letter, RLWord};

/// Which graph a node belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    /// Mixed words up to rotation (and letter swap in GL2 mode), joined when
    /// they differ by one inserted or deleted letter.
    Word,
    /// Conjugacy classes of SL(2,Z), joined through `R^±1`, `L^±1`.
    Conjugacy,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Word => "word",
            GraphKind::Conjugacy => "conj",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphNode {
    WordClass(RLWord),
    Conj(ConjClass),
}

impl GraphNode {
    pub fn kind(&self) -> GraphKind {
        match self {
            GraphNode::WordClass(_) => GraphKind::Word,
            GraphNode::Conj(_) => GraphKind::Conjugacy,
        }
    }

    /// Word class node in canonical form.
    pub fn word(w: &RLWord, group: ConjugacyGroup) -> Result<Self> {
        w.require_mixed()?;
        Ok(GraphNode::WordClass(class_normal_form(w, group)))
    }

    pub fn parse(kind: GraphKind, label: &str, group: ConjugacyGroup) -> Result<Self> {
        match kind {
            GraphKind::Word => GraphNode::word(&label.parse()?, group),
            GraphKind::Conjugacy => Ok(GraphNode::Conj(label.parse()?)),
        }
    }
}

impl fmt::Display for GraphNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphNode::WordClass(w) => write!(f, "{w}"),
            GraphNode::Conj(c) => write!(f, "{c}"),
        }
    }
}

/// Classes one letter insertion or deletion away from `w`, restricted to
/// mixed words. Inserting into every position of one representative covers
/// every rotation, since the result is read cyclically.
pub fn word_neighbors(w: &RLWord, group: ConjugacyGroup) -> BTreeSet<RLWord> {
    let letters = w.letters();
    let mut out = BTreeSet::new();
    let mut add = |v: Vec<Letter>| {
        if let Ok(word) = RLWord::new(v) {
            if word.is_mixed() {
                out.insert(class_normal_form(&word, group));
            }
        }
    };
    for i in 0..=letters.len() {
        for l in [Letter::R, Letter::L] {
            let mut v = letters.to_vec();
            v.insert(i, l);
            add(v);
        }
    }
    for i in 0..letters.len() {
        let mut v = letters.to_vec();
        v.remove(i);
        add(v);
    }
    out
}

/// Neighbors of a conjugacy class and how many were dropped by the trace cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjNeighbors {
    pub classes: BTreeSet<ConjClass>,
    pub pruned: usize,
}

pub const DEFAULT_TRACE_CAP: u64 = 200;

/// Classes of `m·s` for `s ∈ {R, R⁻¹, L, L⁻¹}`, where `m` is the canonical
/// representative of `c`. Products with `|tr| > trace_cap` are dropped.
pub fn conjugacy_neighbors(c: &ConjClass, trace_cap: u64) -> Result<ConjNeighbors> {
    let m = c.representative();
    let gens = [IntMatrix2::r(), IntMatrix2::r().inverse(), IntMatrix2::l(), IntMatrix2::l().inverse()];
    let cap = BigInt::from(trace_cap);
    let mut classes = BTreeSet::new();
    let mut pruned = 0;
    for s in &gens {
        let p = &m * s;
        if p.trace().abs() > cap {
            pruned += 1;
            continue;
        }
        classes.insert(classify_conjugacy(&p)?);
    }
    Ok(ConjNeighbors { classes, pruned })
}
