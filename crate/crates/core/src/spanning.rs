//! Baseline recognizer: weighted item graph, maximum spanning tree, then
//! [`tree_test`] against that tree. `O(m·n²)` overall.
//!
//! The pair enumeration is deliberately unoptimized; the benchmark compares
//! against this construction as published.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, DefaultHasher};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dsu::Dsu;
use crate::meter::Meter;
use crate::model::{Forest, SetCollection};
use crate::recognize::{tree_test_metered, TreeConvexVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightedEdge {
    pub a: usize,
    pub b: usize,
    /// Number of sets containing both endpoints.
    pub weight: u32,
}

/// Graph on `U(S)` with an edge between every pair of elements that share
/// a set. Edges have `a < b` and are sorted by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedItemGraph {
    pub node_count: usize,
    pub edges: Vec<WeightedEdge>,
}

impl WeightedItemGraph {
    pub fn weight(&self, a: usize, b: usize) -> Option<u32> {
        let key = (a.min(b), a.max(b));
        self.edges
            .binary_search_by_key(&key, |e| (e.a, e.b))
            .ok()
            .map(|i| self.edges[i].weight)
    }
}

/// Order of equal-weight edges in Kruskal's scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MstTies {
    /// Weight descending, then smaller endpoint, then larger endpoint.
    #[default]
    Lexicographic,
    /// Equal-weight edges in a seeded random order.
    Seeded(u64),
}

pub fn build_item_graph(s: &SetCollection) -> WeightedItemGraph {
    build_item_graph_metered(s, &mut ())
}

pub fn build_item_graph_metered<M: Meter>(s: &SetCollection, meter: &mut M) -> WeightedItemGraph {
    // Fixed hasher keys keep the edge order, and so the operation count,
    // reproducible.
    let mut weights: HashMap<(usize, usize), u32, BuildHasherDefault<DefaultHasher>> =
        HashMap::default();
    for set in s.sets() {
        for (i, x) in set.iter().enumerate() {
            for y in &set[i + 1..] {
                let (a, b) = (x.index().min(y.index()), x.index().max(y.index()));
                *weights.entry((a, b)).or_insert(0) += 1;
                meter.tick(1);
            }
        }
    }
    let mut edges: Vec<WeightedEdge> = weights
        .into_iter()
        .map(|((a, b), weight)| WeightedEdge { a, b, weight })
        .collect();
    meter.tick(edges.len() as u64);
    edges.sort_unstable_by(|x, y| {
        meter.tick(1);
        (x.a, x.b).cmp(&(y.a, y.b))
    });
    WeightedItemGraph {
        node_count: s.universe_size(),
        edges,
    }
}

/// Maximum-weight spanning forest by Kruskal's algorithm: one tree per
/// connected component, isolated nodes stay isolated.
pub fn max_spanning_tree(g: &WeightedItemGraph) -> Forest {
    max_spanning_tree_with(g, MstTies::Lexicographic, &mut ())
}

pub fn max_spanning_tree_with<M: Meter>(
    g: &WeightedItemGraph,
    ties: MstTies,
    meter: &mut M,
) -> Forest {
    let mut order = g.edges.clone();
    meter.tick(order.len() as u64);
    match ties {
        MstTies::Lexicographic => order.sort_unstable_by(|x, y| {
            meter.tick(1);
            y.weight.cmp(&x.weight).then((x.a, x.b).cmp(&(y.a, y.b)))
        }),
        MstTies::Seeded(seed) => {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            order.sort_by_key(|e| std::cmp::Reverse(e.weight));
        }
    }
    let mut dsu = Dsu::new(g.node_count);
    let mut tree = Vec::with_capacity(g.node_count.saturating_sub(1));
    for e in order {
        meter.tick(1);
        if dsu.union(e.a, e.b) {
            tree.push((e.a, e.b));
            if tree.len() + 1 == g.node_count {
                break;
            }
        }
    }
    Forest::new(g.node_count, tree).expect("Kruskal output is acyclic")
}

/// Convex iff `S` is tree convex with respect to the maximum spanning tree
/// of its item graph; that tree is the witness.
pub fn spanning_tree_verdict(s: &SetCollection) -> TreeConvexVerdict {
    spanning_tree_verdict_with(s, MstTies::Lexicographic, &mut ())
}

pub fn spanning_tree_verdict_with<M: Meter>(
    s: &SetCollection,
    ties: MstTies,
    meter: &mut M,
) -> TreeConvexVerdict {
    let g = build_item_graph_metered(s, meter);
    let t = max_spanning_tree_with(&g, ties, meter);
    if tree_test_metered(s, &t, meter).expect("spanning tree covers U(S)") {
        TreeConvexVerdict::convex(t)
    } else {
        TreeConvexVerdict::not_convex()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(raw: &[&str]) -> SetCollection {
        SetCollection::intern(raw.iter().map(|s| s.chars().map(String::from))).unwrap()
    }

    fn weight(s: &SetCollection, g: &WeightedItemGraph, a: &str, b: &str) -> Option<u32> {
        let id = |l: &str| s.symbols().id(l).unwrap().index();
        g.weight(id(a), id(b))
    }

    #[test]
    fn triangle_weights_and_tree() {
        let s = sets(&["ab", "bc", "abc"]);
        let g = build_item_graph(&s);
        assert_eq!(weight(&s, &g, "a", "b"), Some(2));
        assert_eq!(weight(&s, &g, "b", "c"), Some(2));
        assert_eq!(weight(&s, &g, "a", "c"), Some(1));
        let t = max_spanning_tree(&g);
        assert_eq!(t.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn singleton_has_no_edges() {
        let s = sets(&["a"]);
        let g = build_item_graph(&s);
        assert!(g.edges.is_empty());
        assert!(max_spanning_tree(&g).edges().is_empty());
    }

    #[test]
    fn three_set_example_weights() {
        let s = sets(&["abc", "abde", "bcd"]);
        let g = build_item_graph(&s);
        let expect = [
            ("a", "b", 2),
            ("b", "c", 2),
            ("b", "d", 2),
            ("a", "c", 1),
            ("c", "d", 1),
            ("a", "d", 1),
            ("a", "e", 1),
            ("b", "e", 1),
            ("d", "e", 1),
        ];
        assert_eq!(g.edges.len(), expect.len());
        for (a, b, w) in expect {
            assert_eq!(weight(&s, &g, a, b), Some(w), "{a}{b}");
        }
    }

    #[test]
    fn tree_graph_is_its_own_spanning_tree() {
        let s = sets(&["ab", "bc", "bd"]);
        let g = build_item_graph(&s);
        let t = max_spanning_tree(&g);
        let mut got = t.edges().to_vec();
        got.sort();
        let mut want: Vec<_> = g.edges.iter().map(|e| (e.a, e.b)).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn disconnected_item_graph_gives_forest() {
        let s = sets(&["ab", "cd", "e"]);
        let t = max_spanning_tree(&build_item_graph(&s));
        assert_eq!(t.component_count(), 3);
        assert!(spanning_tree_verdict(&s).convex);
    }

    #[test]
    fn verdicts_on_fixtures() {
        assert!(!spanning_tree_verdict(&sets(&["aef", "cde", "abc", "ace"])).convex);
        assert!(spanning_tree_verdict(&sets(&["abc", "abd", "acd"])).convex);
        assert!(spanning_tree_verdict(&sets(&["abc", "abde", "bcd"])).convex);
    }
}
