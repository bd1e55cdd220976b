//! Descent along Minakawa's reduction: peel one letter off a rotation of the
//! word while keeping it mixed, which lowers the trace.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sl2z::{cyclic_normal_form, word_to_matrix, Letter, RLWord};

/// Cost per peeled letter in the Ghys distance bound.
pub const COST_PER_STEP: u64 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub before: RLWord,
    pub generator: Letter,
    pub after: RLWord,
    #[serde(serialize_with = "ser_display")]
    pub trace_before: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub trace_after: BigInt,
}

fn ser_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DescentChain {
    pub steps: Vec<DescentStep>,
}

impl DescentChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Cumulative Ghys-distance bound, three per step.
    pub fn bound(&self) -> u64 {
        COST_PER_STEP * self.steps.len() as u64
    }
}

/// Returns `(g, w')` where `g·w'` is the leftmost rotation of the canonical
/// form of `w` whose remainder `w'` is still mixed; `w'` is returned canonical.
pub fn minakawa_step(w: &RLWord) -> Result<(Letter, RLWord)> {
    w.require_mixed()?;
    if w.len() == 2 {
        return Err(Error::AlreadyMinimal);
    }
    let canon = cyclic_normal_form(w);
    for k in 0..canon.len() {
        let rot = canon.rotate(k);
        let (head, rest) = rot.letters().split_first().expect("nonempty");
        let rest = RLWord::new(rest.to_vec())?;
        if rest.is_mixed() {
            let after = cyclic_normal_form(&rest);
            let (tb, ta) = (word_to_matrix(w).trace(), word_to_matrix(&after).trace());
            if !(ta < tb && ta >= BigInt::from(3)) {
                return Err(Error::Internal(format!("trace {tb} -> {ta} peeling {w}")));
            }
            return Ok((*head, after));
        }
    }
    Err(Error::Internal(format!("no mixed remainder for {w}")))
}

pub fn descent_chain(w: &RLWord) -> Result<DescentChain> {
    w.require_mixed()?;
    let mut cur = cyclic_normal_form(w);
    let mut steps = Vec::new();
    while cur.len() > 2 {
        let (generator, after) = minakawa_step(&cur)?;
        steps.push(DescentStep {
            trace_before: word_to_matrix(&cur).trace(),
            trace_after: word_to_matrix(&after).trace(),
            before: cur,
            generator,
            after: after.clone(),
        });
        cur = after;
    }
    Ok(DescentChain { steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> RLWord {
        s.parse().unwrap()
    }

    #[test]
    fn steps() {
        assert_eq!(minakawa_step(&w("RRL")).unwrap(), (Letter::R, w("RL")));
        assert_eq!(minakawa_step(&w("RRLL")).unwrap(), (Letter::R, w("RLL")));
        assert!(matches!(minakawa_step(&w("RL")), Err(Error::AlreadyMinimal)));
        assert!(matches!(minakawa_step(&w("RRR")), Err(Error::NotMixed(_))));
        // only the L-peel keeps RLL mixed
        assert_eq!(minakawa_step(&w("RLL")).unwrap(), (Letter::L, w("RL")));
    }

    #[test]
    fn chains() {
        let c = descent_chain(&w("RRLL")).unwrap();
        assert_eq!((c.len(), c.bound()), (2, 6));
        assert_eq!(c.steps.last().unwrap().after, w("RL"));
        let c = descent_chain(&w("RL")).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.bound(), 0);
        let c = descent_chain(&w("RRRL")).unwrap();
        let seq: Vec<String> = c.steps.iter().map(|s| s.after.to_string()).collect();
        assert_eq!(seq, ["RRL", "RL"]);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v[0]["generator"], "R");
        assert_eq!(v[0]["trace_before"], "5");
    }

    #[test]
    fn trace_drop_is_an_entry() {
        for len in 3..=9 {
            for word in RLWord::all_mixed_of_length(len) {
                let (g, rest) = minakawa_step(&word).unwrap();
                let drop = word_to_matrix(&word).trace() - word_to_matrix(&rest).trace();
                // some rotation of the word reads g followed by a rotation of rest
                let entry = (0..word.len())
                    .map(|k| word.rotate(k))
                    .find(|rot| {
                        let tail = RLWord::new(rot.letters()[1..].to_vec()).unwrap();
                        rot.letters()[0] == g && cyclic_normal_form(&tail) == rest
                    })
                    .map(|rot| {
                        let m = word_to_matrix(&rot);
                        match g {
                            Letter::R => m.c().clone(),
                            Letter::L => m.b().clone(),
                        }
                    })
                    .unwrap();
                assert_eq!(drop, entry, "{word}");
            }
        }
    }
}
