//! Tree convexity recognition through acyclicity of the dual hypergraph,
//! and verification of a candidate forest.

use crate::error::{Error, Result};
use crate::mcs::{gen_forest_metered, run_mcs_with, TieBreak};
use crate::meter::Meter;
use crate::model::{Forest, SetCollection};

/// Outcome of a recognizer. `witness` is present iff `convex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeConvexVerdict {
    pub convex: bool,
    pub witness: Option<Forest>,
}

impl TreeConvexVerdict {
    pub fn not_convex() -> Self {
        TreeConvexVerdict {
            convex: false,
            witness: None,
        }
    }

    pub fn convex(witness: Forest) -> Self {
        TreeConvexVerdict {
            convex: true,
            witness: Some(witness),
        }
    }
}

/// Decides tree convexity in time linear in `Σ|S_i|`.
///
/// The witness is the join forest of the dual hypergraph with dual edge
/// `i` read as element `i`. With `as_tree` the forest components are joined
/// into a single tree; no set spans two components, so this is safe.
pub fn is_tree_convex(s: &SetCollection, as_tree: bool) -> TreeConvexVerdict {
    is_tree_convex_metered(s, as_tree, &mut ())
}

pub fn is_tree_convex_metered<M: Meter>(
    s: &SetCollection,
    as_tree: bool,
    meter: &mut M,
) -> TreeConvexVerdict {
    let dual = s.dual_metered(meter);
    let r = run_mcs_with(&dual, TieBreak::First, meter);
    if !r.acyclic {
        return TreeConvexVerdict::not_convex();
    }
    let forest = gen_forest_metered(&dual, &r, meter)
        .expect("acyclic search result always yields a join forest");
    let witness = if as_tree {
        forest.into_tree_metered(meter)
    } else {
        forest
    };
    TreeConvexVerdict::convex(witness)
}

/// True iff every set induces a connected subgraph of `t`.
///
/// For each set the forest edges with both endpoints in the set are
/// gathered and the set must form a single component over them. Runs in
/// `O(m·n)`.
pub fn tree_test(s: &SetCollection, t: &Forest) -> Result<bool> {
    tree_test_metered(s, t, &mut ())
}

pub fn tree_test_metered<M: Meter>(s: &SetCollection, t: &Forest, meter: &mut M) -> Result<bool> {
    let n = t.node_count();
    for (i, set) in s.sets().iter().enumerate() {
        if let Some(e) = set.iter().find(|e| e.index() >= n) {
            return Err(Error::UnknownElement {
                set: i,
                element: e.index(),
            });
        }
    }

    // member[v] == set index while that set is being checked.
    let mut member = vec![usize::MAX; n];
    // Scratch union-find over the nodes, reset per set on touched nodes only.
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, set) in s.sets().iter().enumerate() {
        for e in set {
            member[e.index()] = i;
        }
        meter.tick(set.len() as u64);
        let mut components = set.len();
        for &(a, b) in t.edges() {
            meter.tick(1);
            if member[a] == i && member[b] == i {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
        for e in set {
            parent[e.index()] = e.index();
        }
        meter.tick(set.len() as u64);
        if components != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The chain `0 - 1 - ... - (n-1)`.
pub fn row_convex_embed(n: usize) -> Forest {
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    Forest::new(n, edges).expect("a chain is acyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(raw: &[&str]) -> SetCollection {
        SetCollection::intern(raw.iter().map(|s| s.chars().map(String::from))).unwrap()
    }

    fn forest_by_label(s: &SetCollection, edges: &[(&str, &str)]) -> Forest {
        let id = |l: &str| s.symbols().id(l).unwrap().index();
        Forest::new(
            s.universe_size(),
            edges.iter().map(|&(a, b)| (id(a), id(b))).collect(),
        )
        .unwrap()
    }

    fn assert_convex_with_valid_witness(s: &SetCollection) {
        for as_tree in [false, true] {
            let v = is_tree_convex(s, as_tree);
            assert!(v.convex);
            let w = v.witness.unwrap();
            assert_eq!(w.node_count(), s.universe_size());
            assert!(tree_test(s, &w).unwrap());
            if as_tree {
                assert!(w.is_tree());
            }
        }
    }

    #[test]
    fn star_example_is_convex() {
        let s = sets(&["abc", "abd", "acd"]);
        assert_convex_with_valid_witness(&s);
        let star = forest_by_label(&s, &[("a", "b"), ("a", "c"), ("a", "d")]);
        assert!(tree_test(&s, &star).unwrap());
    }

    #[test]
    fn acyclic_primal_but_not_convex() {
        let s = sets(&["aef", "cde", "abc", "ace"]);
        let v = is_tree_convex(&s, false);
        assert!(!v.convex);
        assert!(v.witness.is_none());
    }

    #[test]
    fn cyclic_primal_but_convex() {
        assert_convex_with_valid_witness(&sets(&["abc", "abde", "bcd"]));
    }

    #[test]
    fn numeric_star_is_convex() {
        let s = SetCollection::intern([["1", "3"], ["1", "5"], ["1", "9"]]).unwrap();
        assert_convex_with_valid_witness(&s);
    }

    #[test]
    fn disjoint_singletons() {
        let s = sets(&["a", "b", "c"]);
        assert_convex_with_valid_witness(&s);
        assert!(tree_test(&s, &Forest::isolated(3)).unwrap());
    }

    #[test]
    fn empty_collection_is_vacuously_convex() {
        let v = is_tree_convex(&SetCollection::empty(), true);
        assert!(v.convex);
        assert_eq!(v.witness.unwrap().node_count(), 0);
    }

    #[test]
    fn tree_test_hand_checked_witness() {
        let s = sets(&["abc", "abde", "bcd"]);
        let t = forest_by_label(&s, &[("b", "a"), ("b", "c"), ("b", "d"), ("d", "e")]);
        assert!(tree_test(&s, &t).unwrap());
    }

    #[test]
    fn tree_test_rejects_gap_in_chain() {
        let s = SetCollection::intern([vec!["a", "c"], vec!["b"]]).unwrap();
        let chain = forest_by_label(&s, &[("a", "b"), ("b", "c")]);
        assert!(!tree_test(&s, &chain).unwrap());
    }

    #[test]
    fn tree_test_isolated_nodes_accept_only_singletons() {
        let s = sets(&["a", "b"]);
        assert!(tree_test(&s, &Forest::isolated(2)).unwrap());
        let s = sets(&["ab"]);
        assert!(!tree_test(&s, &Forest::isolated(2)).unwrap());
    }

    #[test]
    fn tree_test_unknown_element() {
        let s = sets(&["ab", "c"]);
        let err = tree_test(&s, &Forest::isolated(2)).unwrap_err();
        assert!(matches!(err, Error::UnknownElement { set: 1, element: 2 }));
    }

    #[test]
    fn chain_embedding() {
        assert_eq!(row_convex_embed(1).edges(), &[] as &[(usize, usize)]);
        assert_eq!(row_convex_embed(4).edges(), &[(0, 1), (1, 2), (2, 3)]);
        let intervals =
            SetCollection::from_dense(vec![vec![0, 1, 2], vec![2, 3], vec![1], vec![3, 4, 5]])
                .unwrap();
        assert!(tree_test(&intervals, &row_convex_embed(6)).unwrap());
    }
}
