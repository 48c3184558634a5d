//! Recognition of tree convex set collections.
//!
//! A collection of sets is tree convex when some tree on the union of its
//! elements makes every set a connected subtree. This holds exactly when
//! the dual hypergraph of the collection is α-acyclic, which restricted
//! maximum cardinality search ([`mcs`]) decides in linear time while also
//! producing a join forest that doubles as the witness tree.
//!
//! [`spanning`] holds the maximum-spanning-tree baseline, [`oracle`] an
//! exhaustive checker for small universes, and [`bench`] a harness that
//! compares the two recognizers on generated ([`gen`]) or parsed
//! ([`format`]) instances.

mod dsu;

pub mod bench;
pub mod error;
pub mod format;
pub mod gen;
pub mod mcs;
pub mod meter;
pub mod model;
pub mod oracle;
pub mod recognize;
pub mod spanning;

pub use error::{Error, Result};
pub use mcs::{gen_forest, instrumented_op_count, run_mcs, McsResult, TieBreak};
pub use model::{ElementId, Forest, Hypergraph, SetCollection, SymbolTable};
pub use oracle::{all_trees, brute_force_tree_convex, brute_force_witness};
pub use recognize::{is_tree_convex, row_convex_embed, tree_test, TreeConvexVerdict};
pub use spanning::{build_item_graph, max_spanning_tree, spanning_tree_verdict, WeightedItemGraph};
