//! Upper bounds on the Ghys distance between suspension flows, three per
//! edge of the word graph on GL2 classes.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::node::word_neighbors;
use crate::birkhoff::COST_PER_STEP;
use crate::error::{Error, Result};
use crate::sl2z::{class_normal_form, ConjugacyGroup, RLWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GhysBound {
    Bound(u64),
    /// No path within the search radius.
    Unknown,
}

impl fmt::Display for GhysBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GhysBound::Bound(b) => write!(f, "{b}"),
            GhysBound::Unknown => write!(f, "unknown"),
        }
    }
}

/// Shortest word-graph path between the GL2 classes of `a` and `b`, if it has
/// length at most `max_radius`. Bidirectional BFS, always growing the smaller side.
pub fn word_graph_distance(a: &RLWord, b: &RLWord, max_radius: u32, node_budget: usize) -> Result<Option<u32>> {
    a.require_mixed()?;
    b.require_mixed()?;
    let group = ConjugacyGroup::Gl2;
    let (ca, cb) = (class_normal_form(a, group), class_normal_form(b, group));
    if ca == cb {
        return Ok(Some(0));
    }
    let mut seen: [HashMap<RLWord, u32>; 2] = [HashMap::from([(ca.clone(), 0)]), HashMap::from([(cb.clone(), 0)])];
    let mut frontier = [vec![ca], vec![cb]];
    let mut depth = [0u32; 2];
    while depth[0] + depth[1] < max_radius {
        if frontier[0].is_empty() || frontier[1].is_empty() {
            return Ok(None);
        }
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        let other = 1 - side;
        depth[side] += 1;
        let mut next = Vec::new();
        let mut best: Option<u32> = None;
        for u in &frontier[side] {
            for v in word_neighbors(u, group) {
                if let Some(&dv) = seen[other].get(&v) {
                    let total = depth[side] + dv;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                if !seen[side].contains_key(&v) {
                    seen[side].insert(v.clone(), depth[side]);
                    next.push(v);
                }
            }
        }
        if let Some(d) = best {
            return Ok((d <= max_radius).then_some(d));
        }
        if seen[0].len() + seen[1].len() > node_budget {
            return Err(Error::CapExceeded { what: "ghys search nodes", cap: node_budget });
        }
        frontier[side] = next;
    }
    Ok(None)
}

pub fn ghys_distance_upper_bound(a: &RLWord, b: &RLWord, max_radius: u32) -> Result<GhysBound> {
    let d = word_graph_distance(a, b, max_radius, super::ball::DEFAULT_NODE_BUDGET)?;
    Ok(match d {
        Some(d) => GhysBound::Bound(COST_PER_STEP * d as u64),
        None => GhysBound::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn w(s: &str) -> RLWord {
        s.parse().unwrap()
    }

    /// Plain one-sided BFS.
    fn slow_distance(a: &RLWord, b: &RLWord, max: u32) -> Option<u32> {
        let g = ConjugacyGroup::Gl2;
        let target = class_normal_form(b, g);
        let start = class_normal_form(a, g);
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([(start, 0)]);
        while let Some((u, d)) = queue.pop_front() {
            if u == target {
                return Some(d);
            }
            if d == max {
                continue;
            }
            for v in word_neighbors(&u, g) {
                if seen.insert(v.clone()) {
                    queue.push_back((v, d + 1));
                }
            }
        }
        None
    }

    #[test]
    fn examples() {
        assert_eq!(ghys_distance_upper_bound(&w("RL"), &w("RRLL"), 5).unwrap(), GhysBound::Bound(6));
        assert_eq!(ghys_distance_upper_bound(&w("RL"), &w("LR"), 5).unwrap(), GhysBound::Bound(0));
        assert_eq!(ghys_distance_upper_bound(&w("RRL"), &w("RLRL"), 5).unwrap(), GhysBound::Bound(3));
        assert_eq!(ghys_distance_upper_bound(&w("RL"), &w("RRRRRRL"), 2).unwrap(), GhysBound::Unknown);
        assert!(matches!(ghys_distance_upper_bound(&w("RR"), &w("RL"), 2), Err(Error::NotMixed(_))));
    }

    #[test]
    fn bidirectional_matches_plain_bfs() {
        let words: Vec<RLWord> = (2..=5).flat_map(RLWord::all_mixed_of_length).collect();
        for a in words.iter().step_by(3) {
            for b in words.iter().step_by(5) {
                for max in [1, 2, 4] {
                    assert_eq!(
                        word_graph_distance(a, b, max, 1 << 20).unwrap(),
                        slow_distance(a, b, max),
                        "{a} {b} {max}"
                    );
                }
            }
        }
    }
}
