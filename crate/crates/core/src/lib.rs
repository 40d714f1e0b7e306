//! Edge-deletion distance to `H`-freeness.
//!
//! `rem_H(G)` is the fewest edge deletions that leave `G` without a copy of
//! `H`, and `ex(G, H) = e(G) - rem_H(G)` is the most edges an `H`-free
//! subgraph of `G` can keep. This crate computes both exactly for small
//! inputs ([`oracle`]), in polynomial time when `H` is a star forest
//! ([`starforest`], built on [`factor`] and [`matching`]), and ships the
//! reduction gadgets and extremal checks around them ([`reductions`],
//! [`extremal`]).

pub mod canon;
pub mod cli;
pub mod extremal;
pub mod factor;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod reductions;
pub mod starforest;
pub mod subgraph;
pub mod tree;

pub use graph::{complement_components, Edge, Graph, GraphError};
pub use io::{parse_graph, serialize_graph, GraphFormat, ParseError};
pub use subgraph::contains_subgraph;
pub use tree::{classify_tree, decompose_star_forest, StarForestSpec, TreeSpec};
