//! Hypergraphs on `{0, .., n-1}`, the level hypergraphs of a simple graph,
//! restriction/contraction splitting along flags, and the rank statistic
//! `n - c` feeding the hypergraph-side enumerator pipeline.
//!
//! Hyperedges of size at most one are never stored: a one-point simplex only
//! translates the associated polytope, so dropping singletons changes no
//! enumerator, no face count and no vertex poset. The component count
//! compensates by counting uncovered ground vertices as singleton
//! components.

use std::collections::BTreeSet;

use crate::decorated::Flag;
use crate::graph::SimpleGraph;
use crate::vset::VertexSet;

/// A set of vertex subsets of size >= 2 on the ground set `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize) -> Hypergraph {
        assert!(n <= crate::vset::MAX_VERTICES);
        Hypergraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a hypergraph, silently discarding subsets of size < 2.
    pub fn from_edges<I>(n: usize, edges: I) -> Hypergraph
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let full = VertexSet::full(n);
        let mut h = Hypergraph::new(n);
        for e in edges {
            assert!(e.is_subset(full), "hyperedge outside ground set");
            if e.len() >= 2 {
                h.edges.insert(e);
            }
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    /// Number of connected components of the overlap closure: two vertices
    /// share a component iff a chain of overlapping hyperedges links them;
    /// uncovered vertices are singleton components.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            let mut it = e.iter();
            let first = it.next().unwrap();
            for v in it {
                uf.union(first, v);
            }
        }
        uf.count()
    }

    /// `rank = n - component_count`.
    pub fn rank(&self) -> usize {
        self.n - self.component_count()
    }

    /// The blockwise splitting along a flag: per block, restrict to `F_i`,
    /// contract `F_{i-1}` out of each hyperedge, discard what shrinks below
    /// size 2; the result lives on the original ground set.
    pub fn split_by_flag(&self, flag: &Flag) -> Hypergraph {
        let cumulative = flag.cumulative();
        let mut out = Hypergraph::new(self.n);
        for &e in &self.edges {
            let mut prev = VertexSet::EMPTY;
            for &cur in &cumulative {
                if e.is_subset(cur) {
                    let contracted = e - prev;
                    if contracted.len() >= 2 {
                        out.edges.insert(contracted);
                    }
                    break;
                }
                prev = cur;
            }
        }
        out
    }

    /// Fused rank of the splitting along the flag given as cumulative-block
    /// sequence, avoiding the intermediate hypergraph. Agrees with
    /// `split_by_flag(..).rank()`.
    pub fn flag_rank(&self, blocks: &[VertexSet]) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &e in &self.edges {
            let mut prev = VertexSet::EMPTY;
            let mut cur = VertexSet::EMPTY;
            for &b in blocks {
                cur = cur | b;
                if e.is_subset(cur) {
                    let contracted = e - prev;
                    if contracted.len() >= 2 {
                        let mut it = contracted.iter();
                        let first = it.next().unwrap();
                        for v in it {
                            uf.union(first, v);
                        }
                    }
                    break;
                }
                prev = cur;
            }
        }
        self.n - uf.count()
    }
}

/// All connected subsets of size between 2 and `m + 1`.
pub fn level_hypergraph(g: &SimpleGraph, m: u64) -> Hypergraph {
    assert!(m >= 1);
    let mut h = Hypergraph::new(g.n());
    for s in g.vertices().subsets() {
        if s.len() >= 2 && (s.len() as u64) <= m + 1 && g.is_connected_on(s) {
            h.edges.insert(s);
        }
    }
    h
}

/// The subsets of size between 2 and `m + 1` inducing a path.
pub fn level_path_hypergraph(g: &SimpleGraph, m: u64) -> Hypergraph {
    assert!(m >= 1);
    let mut h = Hypergraph::new(g.n());
    for s in g.vertices().subsets() {
        if s.len() >= 2 && (s.len() as u64) <= m + 1 && g.induces_path(s) {
            h.edges.insert(s);
        }
    }
    h
}

/// Disjoint-set forest over `0..n`, used for hypergraph component counts.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&v| self.find(v) == v).count()
    }
}
