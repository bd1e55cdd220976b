//! The word graph on mixed `RL`-words, the conjugacy graph of SL(2,Z), BFS
//! balls, four-point δ estimates and Ghys-distance upper bounds.

mod ball;
mod cache;
mod delta;
mod ghys;
mod node;

pub use ball::{explore_ball, export_graph, ExploreParams, ExploredBall, ExportFormat, DEFAULT_NODE_BUDGET};
pub use cache::{BallCache, CACHE_ENV, CACHE_VERSION};
pub use delta::{delta_hyperbolicity, delta_profile, DeltaEstimate, MAX_CORE_NODES};
pub use ghys::{ghys_distance_upper_bound, word_graph_distance, GhysBound};
pub use node::{conjugacy_neighbors, word_neighbors, ConjNeighbors, GraphKind, GraphNode, DEFAULT_TRACE_CAP};
