//! Gromov four-point δ on the core of an explored ball.

use num_rational::Rational64;

use super::ball::ExploredBall;
use crate::error::{Error, Result};

/// Largest core on which the quadruple scan is attempted.
pub const MAX_CORE_NODES: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaEstimate {
    pub delta: Rational64,
    pub core_size: usize,
    pub core_radius: u32,
    /// Ball distances only bound true graph distances from above, so the
    /// estimate is not a bound on the global δ either way.
    pub within_ball: bool,
}

/// Four-point δ over quadruples of nodes at distance `≤ radius − margin`.
pub fn delta_hyperbolicity(ball: &ExploredBall, margin: u32) -> Result<DeltaEstimate> {
    if margin > ball.radius || ball.is_empty() {
        return Err(Error::BallTooSmall { radius: ball.radius, margin });
    }
    let core_radius = ball.radius - margin;
    let core: Vec<usize> = (0..ball.len()).filter(|&i| ball.distances[i] <= core_radius).collect();
    if core.len() > MAX_CORE_NODES {
        return Err(Error::CapExceeded { what: "delta core nodes", cap: MAX_CORE_NODES });
    }
    let d: Vec<Vec<i64>> = core
        .iter()
        .map(|&i| {
            let row = ball.bfs_from(i);
            core.iter().map(|&j| row[j].expect("ball is connected") as i64).collect()
        })
        .collect();
    let n = core.len();
    let mut best = 0i64;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for w in z + 1..n {
                    let mut s = [d[x][y] + d[z][w], d[x][z] + d[y][w], d[x][w] + d[y][z]];
                    s.sort_unstable();
                    best = best.max(s[2] - s[1]);
                }
            }
        }
    }
    Ok(DeltaEstimate { delta: Rational64::new(best, 2), core_size: n, core_radius, within_ball: true })
}

/// `δ` on the nested cores of radius `0..=ball.radius`.
pub fn delta_profile(ball: &ExploredBall) -> Result<Vec<DeltaEstimate>> {
    (0..=ball.radius).rev().map(|margin| delta_hyperbolicity(ball, margin)).collect()
}
