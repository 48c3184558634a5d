//! Exhaustive ground truth for small universes: try every labelled tree.

use crate::error::{Error, Result};
use crate::model::{Forest, SetCollection};
use crate::recognize::tree_test;

/// Largest universe the brute force accepts (`9^7` trees).
pub const MAX_ORACLE_UNIVERSE: usize = 9;

/// Iterator over every labelled tree on `0..n`, decoded from Prüfer
/// sequences in lexicographic order.
#[derive(Debug, Clone)]
pub struct AllTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

pub fn all_trees(n: usize) -> Result<AllTrees> {
    if n > MAX_ORACLE_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            n,
            cap: MAX_ORACLE_UNIVERSE,
        });
    }
    Ok(AllTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    })
}

impl Iterator for AllTrees {
    type Item = Forest;

    fn next(&mut self) -> Option<Forest> {
        if self.done {
            return None;
        }
        let tree = decode_prufer(self.n, &self.seq);
        // Odometer increment; wraps to done after the last sequence.
        self.done = true;
        for digit in self.seq.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }
}

/// Tree on `0..n` encoded by a Prüfer sequence of length `n - 2`.
pub fn decode_prufer(n: usize, seq: &[usize]) -> Forest {
    if n <= 1 {
        return Forest::isolated(n);
    }
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Forest::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// True iff some tree on `U(S)` makes every set a subtree. Searching trees
/// alone is complete: a forest witness extends to a tree witness.
pub fn brute_force_tree_convex(s: &SetCollection) -> Result<bool> {
    Ok(brute_force_witness(s)?.is_some())
}

/// The first tree in Prüfer order that makes every set a subtree.
pub fn brute_force_witness(s: &SetCollection) -> Result<Option<Forest>> {
    for t in all_trees(s.universe_size())? {
        if tree_test(s, &t)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn canonical(f: &Forest) -> Vec<(usize, usize)> {
        let mut e = f.edges().to_vec();
        e.sort();
        e
    }

    #[test]
    fn tree_counts_follow_cayley() {
        assert_eq!(all_trees(1).unwrap().count(), 1);
        assert_eq!(all_trees(2).unwrap().count(), 1);
        assert_eq!(all_trees(3).unwrap().count(), 3);
        assert_eq!(all_trees(4).unwrap().count(), 16);
        for n in 2..=7usize {
            let trees: HashSet<_> = all_trees(n).unwrap().map(|t| canonical(&t)).collect();
            assert_eq!(trees.len(), n.pow(n as u32 - 2), "n={n}");
        }
    }

    #[test]
    fn small_cases() {
        let only: Vec<_> = all_trees(2).unwrap().collect();
        assert_eq!(only[0].edges(), &[(0, 1)]);
        let single: Vec<_> = all_trees(1).unwrap().collect();
        assert_eq!((single[0].node_count(), single[0].edges().len()), (1, 0));
        assert!(all_trees(4)
            .unwrap()
            .all(|t| t.is_tree() && t.edges().len() == 3));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            all_trees(10),
            Err(Error::UniverseTooLarge { n: 10, cap: 9 })
        ));
        let big = SetCollection::from_dense(vec![(0..10).collect()]).unwrap();
        assert!(brute_force_tree_convex(&big).is_err());
    }

    #[test]
    fn fixtures() {
        let sets = |raw: &[&str]| {
            SetCollection::intern(raw.iter().map(|s| s.chars().map(String::from))).unwrap()
        };
        assert!(!brute_force_tree_convex(&sets(&["aef", "cde", "abc", "ace"])).unwrap());
        assert!(brute_force_tree_convex(&sets(&["abc", "abde", "bcd"])).unwrap());
        assert!(brute_force_tree_convex(&sets(&["abcdef"])).unwrap());
        assert!(brute_force_tree_convex(&SetCollection::empty()).unwrap());
    }
}
