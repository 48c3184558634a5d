//! Set collections, hypergraphs and forests.
//!
//! A [`SetCollection`] owns a [`SymbolTable`] mapping external labels to
//! dense [`ElementId`]s `0..n`. Its primal hypergraph has the elements as
//! vertices and the sets as edges; its dual has the sets as vertices and
//! one edge per element, with dual edge `i` always standing for element `i`.

use std::collections::HashMap;
use std::fmt;

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::meter::Meter;

/// Dense index of an element in the universe of a [`SetCollection`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bidirectional label/id mapping in first-seen order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    labels: Vec<String>,
    ids: HashMap<String, ElementId>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, label: &str) -> ElementId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = ElementId(self.labels.len());
        self.labels.push(label.to_owned());
        self.ids.insert(label.to_owned(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<ElementId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: ElementId) -> &str {
        &self.labels[id.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// An ordered list of nonempty sets over a dense universe `0..n`.
///
/// Duplicate sets are kept as separate entries. Within a set each element
/// appears once, in first-seen order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCollection {
    sets: Vec<Vec<ElementId>>,
    symbols: SymbolTable,
}

impl SetCollection {
    /// Interns labelled sets, assigning ids in first-seen order and
    /// collapsing repeated labels inside a set.
    pub fn intern<S, L>(raw_sets: S) -> Result<Self>
    where
        S: IntoIterator,
        S::Item: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let mut symbols = SymbolTable::new();
        let mut sets = Vec::new();
        let mut stamp: Vec<usize> = Vec::new();
        for (index, raw) in raw_sets.into_iter().enumerate() {
            let mut set = Vec::new();
            for label in raw {
                let id = symbols.intern(label.as_ref());
                if stamp.len() <= id.0 {
                    stamp.resize(id.0 + 1, usize::MAX);
                }
                if stamp[id.0] != index {
                    stamp[id.0] = index;
                    set.push(id);
                }
            }
            if set.is_empty() {
                return Err(Error::EmptySet { index });
            }
            sets.push(set);
        }
        Ok(SetCollection { sets, symbols })
    }

    /// Builds a collection directly from dense ids; element `i` gets label
    /// `i.to_string()`. Every id in `0..max` must occur somewhere.
    pub fn from_dense(sets: Vec<Vec<usize>>) -> Result<Self> {
        let n = sets.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(sets.len());
        for (index, set) in sets.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::EmptySet { index });
            }
            let mut dedup = Vec::with_capacity(set.len());
            for v in set {
                if !dedup.contains(&ElementId(v)) {
                    dedup.push(ElementId(v));
                }
                seen[v] = true;
            }
            out.push(dedup);
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::BadConfig(format!(
                "dense id {missing} does not occur in any set"
            )));
        }
        let mut symbols = SymbolTable::new();
        for i in 0..n {
            symbols.intern(&i.to_string());
        }
        Ok(SetCollection { sets: out, symbols })
    }

    /// The collection with no sets over the empty universe.
    pub fn empty() -> Self {
        SetCollection {
            sets: Vec::new(),
            symbols: SymbolTable::new(),
        }
    }

    pub fn sets(&self) -> &[Vec<ElementId>] {
        &self.sets
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    /// `m`
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `n = |∪S|`
    pub fn universe_size(&self) -> usize {
        self.symbols.len()
    }

    /// `Σ|S_i|`, the problem size.
    pub fn problem_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    /// The sets with labels restored.
    pub fn labelled_sets(&self) -> Vec<Vec<&str>> {
        self.sets
            .iter()
            .map(|s| s.iter().map(|&e| self.symbols.label(e)).collect())
            .collect()
    }

    /// Hypergraph `(U(S), S)`.
    pub fn primal(&self) -> Hypergraph {
        let edges = self
            .sets
            .iter()
            .map(|s| s.iter().map(|e| e.0).collect())
            .collect();
        Hypergraph::from_parts(self.universe_size(), edges)
    }

    /// Dual hypergraph: one vertex per set, and edge `i` holds the sets
    /// containing element `i`.
    pub fn dual(&self) -> Hypergraph {
        self.dual_metered(&mut ())
    }

    pub fn dual_metered<M: Meter>(&self, meter: &mut M) -> Hypergraph {
        let mut edges: Vec<Vec<usize>> = vec![Vec::new(); self.universe_size()];
        meter.tick(edges.len() as u64);
        for (j, set) in self.sets.iter().enumerate() {
            for e in set {
                edges[e.0].push(j);
            }
            meter.tick(set.len() as u64);
        }
        Hypergraph::from_parts_metered(self.sets.len(), edges, meter)
    }
}

/// Vertices `0..vertex_count` and a list of nonempty edges, with the
/// vertex-to-edge incidence lists kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Edges must be nonempty with
    /// distinct in-range vertices, and every vertex must lie in some edge.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut stamp = vec![usize::MAX; vertex_count];
        for (i, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::InvalidHypergraph(format!("edge {i} is empty")));
            }
            for &v in edge {
                if v >= vertex_count {
                    return Err(Error::InvalidHypergraph(format!(
                        "edge {i} names vertex {v} but there are only {vertex_count}"
                    )));
                }
                if stamp[v] == i {
                    return Err(Error::InvalidHypergraph(format!(
                        "edge {i} repeats vertex {v}"
                    )));
                }
                stamp[v] = i;
            }
        }
        let h = Self::from_parts(vertex_count, edges);
        if let Some(v) = h.incidence.iter().position(Vec::is_empty) {
            return Err(Error::InvalidHypergraph(format!(
                "vertex {v} lies in no edge"
            )));
        }
        Ok(h)
    }

    fn from_parts(vertex_count: usize, edges: Vec<Vec<usize>>) -> Self {
        Self::from_parts_metered(vertex_count, edges, &mut ())
    }

    fn from_parts_metered<M: Meter>(
        vertex_count: usize,
        edges: Vec<Vec<usize>>,
        meter: &mut M,
    ) -> Self {
        let mut incidence = vec![Vec::new(); vertex_count];
        meter.tick(vertex_count as u64);
        for (i, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(i);
            }
            meter.tick(edge.len() as u64);
        }
        Hypergraph {
            vertex_count,
            edges,
            incidence,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges containing vertex `v`, in increasing edge order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// `Σ|E|` over all edges.
    pub fn size(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }
}

/// An acyclic simple graph on nodes `0..node_count`.
///
/// Edges are stored with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    node_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Forest {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut dsu = Dsu::new(node_count);
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= node_count || b >= node_count {
                return Err(Error::InvalidForest(format!(
                    "edge {{{a},{b}}} leaves the node range 0..{node_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidForest(format!("self-loop at {a}")));
            }
            // A repeated edge also closes a cycle, so one check covers both.
            if !dsu.union(a, b) {
                return Err(Error::InvalidForest(format!(
                    "edge {{{a},{b}}} closes a cycle or repeats an edge"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        Ok(Forest {
            node_count,
            edges: normalized,
        })
    }

    /// Nodes with no edges.
    pub fn isolated(node_count: usize) -> Self {
        Forest {
            node_count,
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn component_count(&self) -> usize {
        self.node_count - self.edges.len()
    }

    /// A single tree spanning every node (the empty graph counts as one).
    pub fn is_tree(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Component label for every node; labels are the smallest node id of
    /// the component.
    pub fn components(&self) -> Vec<usize> {
        let mut dsu = Dsu::new(self.node_count);
        for &(a, b) in &self.edges {
            dsu.union(a, b);
        }
        let mut rep = vec![usize::MAX; self.node_count];
        (0..self.node_count)
            .map(|v| {
                let r = dsu.find(v);
                if rep[r] == usize::MAX {
                    rep[r] = v;
                }
                rep[r]
            })
            .collect()
    }

    /// Joins the components into one tree by a path through their smallest
    /// nodes, taken in increasing order.
    pub fn into_tree(self) -> Forest {
        self.into_tree_metered(&mut ())
    }

    pub(crate) fn into_tree_metered<M: Meter>(mut self, meter: &mut M) -> Forest {
        let labels = self.components();
        meter.tick(self.node_count as u64 + self.edges.len() as u64);
        let mut prev: Option<usize> = None;
        for (v, &l) in labels.iter().enumerate() {
            if l == v {
                if let Some(p) = prev {
                    self.edges.push((p, v));
                }
                prev = Some(v);
            }
        }
        self
    }

    /// Node ids on the unique path from `from` to `to`, inclusive, or
    /// `None` when they lie in different components.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.node_count];
        parent[from] = from;
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                break;
            }
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}
