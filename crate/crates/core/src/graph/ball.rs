use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use super::node::{conjugacy_neighbors, word_neighbors, GraphKind, GraphNode, DEFAULT_TRACE_CAP};
use crate::error::{Error, Result};
use crate::sl2z::ConjugacyGroup;

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExploreParams {
    pub group: ConjugacyGroup,
    pub trace_cap: u64,
    pub node_budget: usize,
}

impl Default for ExploreParams {
    fn default() -> Self {
        ExploreParams { group: ConjugacyGroup::Gl2, trace_cap: DEFAULT_TRACE_CAP, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// A BFS ball. Nodes are ordered by distance from the center, then by their
/// canonical form. `adjacency[i]` lists the ball nodes joined to node `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploredBall {
    pub kind: GraphKind,
    pub center: Option<GraphNode>,
    pub radius: u32,
    pub nodes: Vec<GraphNode>,
    pub distances: Vec<u32>,
    pub adjacency: Vec<Vec<usize>>,
    /// Every neighbor of the node lies in the ball and none was pruned.
    pub complete: Vec<bool>,
    /// Neighbors dropped by the trace cap, over all nodes.
    pub pruned: usize,
}

fn neighbors(node: &GraphNode, params: &ExploreParams) -> Result<(Vec<GraphNode>, usize)> {
    match node {
        GraphNode::WordClass(w) => {
            Ok((word_neighbors(w, params.group).into_iter().map(GraphNode::WordClass).collect(), 0))
        }
        GraphNode::Conj(c) => {
            let n = conjugacy_neighbors(c, params.trace_cap)?;
            Ok((n.classes.into_iter().map(GraphNode::Conj).collect(), n.pruned))
        }
    }
}

impl ExploredBall {
    /// A ball with no nodes.
    pub fn empty(kind: GraphKind) -> Self {
        ExploredBall {
            kind,
            center: None,
            radius: 0,
            nodes: Vec::new(),
            distances: Vec::new(),
            adjacency: Vec::new(),
            complete: Vec::new(),
            pruned: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Undirected edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&&j| i < j).map(|&j| (i, j)));
        }
        out
    }

    pub fn index_of(&self, node: &GraphNode) -> Option<usize> {
        self.nodes.iter().position(|n| n == node)
    }

    /// Within-ball distances from node `src`.
    pub fn bfs_from(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued nodes have a distance");
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// BFS ball of the given radius. Edges are generated from each node's own
/// neighbor list and then read as undirected; for the conjugacy graph, where
/// that list depends on the canonical representative, this is the graph used.
pub fn explore_ball(center: &GraphNode, radius: u32, params: &ExploreParams) -> Result<ExploredBall> {
    let kind = center.kind();
    let mut found: BTreeMap<GraphNode, u32> = BTreeMap::new();
    let mut out_edges: BTreeMap<GraphNode, (Vec<GraphNode>, usize)> = BTreeMap::new();
    found.insert(center.clone(), 0);
    let mut frontier = vec![center.clone()];
    for depth in 0..=radius {
        let mut next = BTreeSet::new();
        for u in &frontier {
            let (nbrs, pruned) = neighbors(u, params)?;
            if depth < radius {
                for v in &nbrs {
                    if !found.contains_key(v) {
                        next.insert(v.clone());
                    }
                }
            }
            out_edges.insert(u.clone(), (nbrs, pruned));
        }
        for v in &next {
            found.insert(v.clone(), depth + 1);
        }
        if found.len() > params.node_budget {
            return Err(Error::CapExceeded { what: "ball nodes", cap: params.node_budget });
        }
        frontier = next.into_iter().collect();
    }

    let mut order: Vec<(u32, GraphNode)> = found.into_iter().map(|(n, d)| (d, n)).collect();
    order.sort();
    let index: BTreeMap<&GraphNode, usize> = order.iter().enumerate().map(|(i, (_, n))| (n, i)).collect();
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); order.len()];
    let mut complete = vec![true; order.len()];
    let mut pruned = 0;
    for (i, (_, u)) in order.iter().enumerate() {
        let (nbrs, p) = &out_edges[u];
        pruned += p;
        if *p > 0 {
            complete[i] = false;
        }
        for v in nbrs {
            match index.get(v) {
                Some(&j) if j != i => {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
                Some(_) => {}
                None => complete[i] = false,
            }
        }
    }
    let mut ball = ExploredBall {
        kind,
        center: Some(center.clone()),
        radius,
        distances: vec![0; order.len()],
        nodes: order.into_iter().map(|(_, n)| n).collect(),
        adjacency: adjacency.into_iter().map(|s| s.into_iter().collect()).collect(),
        complete,
        pruned,
    };
    // undirected reading can only shorten BFS distances
    ball.distances = ball.bfs_from(0).into_iter().map(|d| d.expect("ball is connected")).collect();
    Ok(ball.sorted())
}

impl ExploredBall {
    /// Reorders nodes by `(distance, node)`.
    fn sorted(self) -> Self {
        let mut perm: Vec<usize> = (0..self.nodes.len()).collect();
        perm.sort_by(|&i, &j| (self.distances[i], &self.nodes[i]).cmp(&(self.distances[j], &self.nodes[j])));
        if perm.iter().enumerate().all(|(k, &i)| k == i) {
            return self;
        }
        let mut inv = vec![0; perm.len()];
        for (k, &i) in perm.iter().enumerate() {
            inv[i] = k;
        }
        let adjacency = perm
            .iter()
            .map(|&i| {
                let mut a: Vec<usize> = self.adjacency[i].iter().map(|&j| inv[j]).collect();
                a.sort_unstable();
                a
            })
            .collect();
        ExploredBall {
            nodes: perm.iter().map(|&i| self.nodes[i].clone()).collect(),
            distances: perm.iter().map(|&i| self.distances[i]).collect(),
            complete: perm.iter().map(|&i| self.complete[i]).collect(),
            adjacency,
            ..self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn export_graph(ball: &ExploredBall, format: ExportFormat) -> String {
    let center = ball.center.as_ref().map(|c| c.to_string());
    match format {
        ExportFormat::Dot => {
            let mut s = String::from("graph ball {\n");
            if let Some(c) = &center {
                writeln!(s, "  // {} center {} radius {}", ball.kind.as_str(), c, ball.radius).unwrap();
            }
            for (i, n) in ball.nodes.iter().enumerate() {
                writeln!(s, "  n{i} [label=\"{n}\"];").unwrap();
            }
            for (i, j) in ball.edges() {
                writeln!(s, "  n{i} -- n{j};").unwrap();
            }
            s.push_str("}\n");
            s
        }
        ExportFormat::Json => {
            let v = serde_json::json!({
                "kind": ball.kind.as_str(),
                "center": center,
                "radius": ball.radius,
                "nodes": ball.nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
                "distances": ball.distances,
                "edges": ball.edges().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&v).expect("json");
            s.push('\n');
            s
        }
    }
}
