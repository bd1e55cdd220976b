//! On-disk cache of explored balls: one JSON object per line in
//! `balls.jsonl` under `$GHYS_CACHE_DIR` (default `./.ghys-cache`).

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::ball::{ExploreParams, ExploredBall};
use super::node::{GraphKind, GraphNode};
use crate::error::Result;
use crate::sl2z::ConjugacyGroup;

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "GHYS_CACHE_DIR";
const FILE_NAME: &str = "balls.jsonl";

#[derive(Serialize, Deserialize)]
struct Record {
    version: u32,
    kind: String,
    center: String,
    radius: u32,
    group: String,
    trace_cap: u64,
    nodes: Vec<String>,
    distances: Vec<u32>,
    adjacency: Vec<Vec<usize>>,
    complete: Vec<bool>,
    pruned: usize,
}

fn group_tag(g: ConjugacyGroup) -> &'static str {
    match g {
        ConjugacyGroup::Sl2 => "sl2",
        ConjugacyGroup::Gl2 => "gl2",
    }
}

/// Single writer, many readers; records are appended and never rewritten.
#[derive(Clone, Debug)]
pub struct BallCache {
    dir: PathBuf,
}

impl BallCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        BallCache { dir: dir.into() }
    }

    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".ghys-cache")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    fn matches(r: &Record, center: &GraphNode, radius: u32, params: &ExploreParams) -> bool {
        r.version == CACHE_VERSION
            && r.kind == center.kind().as_str()
            && r.center == center.to_string()
            && r.radius == radius
            && r.group == group_tag(params.group)
            && (center.kind() == GraphKind::Word || r.trace_cap == params.trace_cap)
    }

    /// Looks up a ball; unreadable lines and records of another version are skipped.
    pub fn load(&self, center: &GraphNode, radius: u32, params: &ExploreParams) -> Result<Option<ExploredBall>> {
        let file = match fs::File::open(self.path()) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        for line in BufReader::new(file).lines() {
            let line = line?;
            let Ok(r) = serde_json::from_str::<Record>(&line) else { continue };
            if !Self::matches(&r, center, radius, params) {
                continue;
            }
            let kind = center.kind();
            let nodes = r
                .nodes
                .iter()
                .map(|s| GraphNode::parse(kind, s, params.group))
                .collect::<Result<Vec<_>>>();
            let Ok(nodes) = nodes else { continue };
            return Ok(Some(ExploredBall {
                kind,
                center: Some(center.clone()),
                radius,
                nodes,
                distances: r.distances,
                adjacency: r.adjacency,
                complete: r.complete,
                pruned: r.pruned,
            }));
        }
        Ok(None)
    }

    pub fn store(&self, ball: &ExploredBall, params: &ExploreParams) -> Result<()> {
        let Some(center) = &ball.center else { return Ok(()) };
        fs::create_dir_all(&self.dir)?;
        let record = Record {
            version: CACHE_VERSION,
            kind: ball.kind.as_str().to_string(),
            center: center.to_string(),
            radius: ball.radius,
            group: group_tag(params.group).to_string(),
            trace_cap: params.trace_cap,
            nodes: ball.nodes.iter().map(|n| n.to_string()).collect(),
            distances: ball.distances.clone(),
            adjacency: ball.adjacency.clone(),
            complete: ball.complete.clone(),
            pruned: ball.pruned,
        };
        let mut line = serde_json::to_string(&record).expect("record serializes");
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(self.path())?;
        f.write_all(line.as_bytes())?;
        Ok(())
    }

    /// Cached ball if present, otherwise explore and store it.
    pub fn get_or_explore(&self, center: &GraphNode, radius: u32, params: &ExploreParams) -> Result<ExploredBall> {
        if let Some(b) = self.load(center, radius, params)? {
            return Ok(b);
        }
        let b = super::ball::explore_ball(center, radius, params)?;
        self.store(&b, params)?;
        Ok(b)
    }
}
