//! Simple graphs on `{0, .., n-1}` with the subset and connectivity
//! primitives the enumerators are built on, plus isomorphism
//! canonicalization by exhaustive relabeling (capped at 8 vertices) and
//! catalogs of connected graphs up to isomorphism.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Largest vertex count for which exhaustive canonicalization is offered.
pub const MAX_CANON_VERTICES: usize = 8;

/// An undirected simple graph with adjacency stored as one bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// The standard families used throughout the examples and searches.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GraphFamily {
    /// `L_n`: edges `{i, i+1}`.
    Path,
    /// `K_n`: all pairs.
    Complete,
    /// `S_n`: vertex 0 joined to all others.
    Star,
    /// No edges.
    Edgeless,
}

impl SimpleGraph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> SimpleGraph {
        assert!(n <= crate::vset::MAX_VERTICES, "vertex count out of range");
        SimpleGraph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> SimpleGraph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds the undirected edge `{u, v}`; self-loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn family(kind: GraphFamily, n: usize) -> SimpleGraph {
        assert!(n >= 1, "families need at least one vertex");
        let mut g = SimpleGraph::new(n);
        match kind {
            GraphFamily::Path => {
                for i in 0..n.saturating_sub(1) {
                    g.add_edge(i, i + 1);
                }
            }
            GraphFamily::Complete => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v);
                    }
                }
            }
            GraphFamily::Star => {
                for v in 1..n {
                    g.add_edge(0, v);
                }
            }
            GraphFamily::Edgeless => {}
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::family(GraphFamily::Path, n)
    }

    pub fn complete(n: usize) -> SimpleGraph {
        SimpleGraph::family(GraphFamily::Complete, n)
    }

    pub fn star(n: usize) -> SimpleGraph {
        SimpleGraph::family(GraphFamily::Star, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Whether the subgraph induced on `s` is connected. The empty set and
    /// singletons count as connected.
    pub fn is_connected_on(&self, s: VertexSet) -> bool {
        let s = s & self.vertices();
        let start = match s.min_elem() {
            None => return true,
            Some(v) => v,
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | (self.adj[v] & s);
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen == s
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(self.vertices())
    }

    /// Number of connected components of the subgraph induced on `s`.
    pub fn component_count_on(&self, s: VertexSet) -> usize {
        let mut rest = s & self.vertices();
        let mut count = 0;
        while let Some(start) = rest.min_elem() {
            count += 1;
            let mut seen = VertexSet::singleton(start);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | (self.adj[v] & rest);
                }
                frontier = next - seen;
                seen = seen | next;
            }
            rest = rest - seen;
        }
        count
    }

    /// The subgraph induced on `s`, with vertices relabeled `0..|s|` in
    /// increasing order of their original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> SimpleGraph {
        let s = s & self.vertices();
        let verts: Vec<usize> = s.iter().collect();
        let mut g = SimpleGraph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Whether the subgraph induced on `s` is a path on `|s|` vertices.
    /// Singletons count as one-vertex paths; the empty set does not.
    pub fn induces_path(&self, s: VertexSet) -> bool {
        let s = s & self.vertices();
        let k = s.len();
        if k == 0 {
            return false;
        }
        if k == 1 {
            return true;
        }
        let mut edge_count = 0;
        let mut endpoints = 0;
        for v in s.iter() {
            let d = (self.adj[v] & s).len();
            if d == 0 || d > 2 {
                return false;
            }
            if d == 1 {
                endpoints += 1;
            }
            edge_count += d;
        }
        edge_count / 2 == k - 1 && endpoints == 2 && self.is_connected_on(s)
    }

    /// Size of a largest vertex subset inducing a path.
    pub fn longest_induced_path(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 1;
        for s in self.vertices().subsets() {
            if s.len() > best && self.induces_path(s) {
                best = s.len();
            }
        }
        Ok(best)
    }

    /// Relabel-invariant encoding; two graphs on at most
    /// [`MAX_CANON_VERTICES`] vertices have equal forms iff isomorphic.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        if self.n > MAX_CANON_VERTICES {
            return Err(Error::TooManyVertices {
                max: MAX_CANON_VERTICES,
                got: self.n,
            });
        }
        let mut best = u64::MAX;
        for_each_class_permutation(&vertex_classes(self), |perm| {
            let code = self.edge_code(perm);
            if code < best {
                best = code;
            }
        });
        if self.n == 0 {
            best = 0;
        }
        Ok(CanonicalForm {
            n: self.n as u8,
            edge_code: best,
        })
    }

    /// Edge-set code under the relabeling `perm[old] = new`.
    fn edge_code(&self, perm: &[usize]) -> u64 {
        let n = self.n;
        let mut code = 0u64;
        for u in 0..n {
            for v in self.adj[u].iter() {
                if v > u {
                    let (a, b) = {
                        let (pa, pb) = (perm[u], perm[v]);
                        if pa < pb {
                            (pa, pb)
                        } else {
                            (pb, pa)
                        }
                    };
                    code |= 1 << pair_index(n, a, b);
                }
            }
        }
        code
    }
}

/// Index of the pair `(a, b)` with `a < b` in row-major order over `[n]`.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Canonical form of a simple graph: the minimal edge-set code over all
/// relabelings (restricted to an isomorphism-invariant vertex partition,
/// which does not change the minimum).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    edge_code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn edge_code(&self) -> u64 {
        self.edge_code
    }

    /// The representative graph carrying the canonical labeling.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.n as usize;
        let mut g = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if self.edge_code & (1 << pair_index(n, a, b)) != 0 {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

/// Partitions the vertices into classes by the invariant
/// `(degree, sorted neighbor degrees)`. Isomorphisms preserve classes, so
/// minimizing the edge code over class-respecting relabelings only is still
/// a complete isomorphism invariant.
fn vertex_classes(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut keyed: Vec<(Vec<usize>, usize)> = (0..g.n)
        .map(|v| {
            let mut key = vec![g.degree(v)];
            let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nbr.sort_unstable();
            key.extend(nbr);
            (key, v)
        })
        .collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last_key: Option<&[usize]> = None;
    for (key, v) in &keyed {
        if last_key != Some(key.as_slice()) {
            classes.push(Vec::new());
        }
        classes.last_mut().unwrap().push(*v);
        last_key = Some(key.as_slice());
    }
    classes
}

/// Calls `f` with every relabeling `perm[old] = new` that assigns the
/// vertices of each class to that class's block of consecutive positions.
pub(crate) fn for_each_class_permutation(classes: &[Vec<usize>], mut f: impl FnMut(&[usize])) {
    let n: usize = classes.iter().map(|c| c.len()).sum();
    let mut perm = vec![0usize; n];
    let mut order: Vec<Vec<usize>> = classes.to_vec();

    fn rec(
        classes: &mut [Vec<usize>],
        idx: usize,
        base: usize,
        pos_in_class: usize,
        perm: &mut [usize],
        f: &mut impl FnMut(&[usize]),
    ) {
        if idx == classes.len() {
            f(perm);
            return;
        }
        let size = classes[idx].len();
        if pos_in_class == size {
            rec(classes, idx + 1, base + size, 0, perm, f);
            return;
        }
        for i in pos_in_class..size {
            classes[idx].swap(pos_in_class, i);
            perm[classes[idx][pos_in_class]] = base + pos_in_class;
            rec(classes, idx, base, pos_in_class + 1, perm, f);
            classes[idx].swap(pos_in_class, i);
        }
    }

    rec(&mut order, 0, 0, 0, &mut perm, &mut f);
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical labeling, ordered by edge count then code.
pub fn connected_catalog(n: usize) -> Result<Vec<SimpleGraph>> {
    if !(1..=7).contains(&n) {
        return Err(Error::OutOfRange {
            what: "catalog vertex count",
            min: 1,
            max: 7,
            got: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut forms: Vec<CanonicalForm> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut g = SimpleGraph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v);
            }
        }
        if !g.is_connected() {
            continue;
        }
        let form = g.canonical_form()?;
        if seen.insert(form.edge_code()) {
            forms.push(form);
        }
    }
    forms.sort_by_key(|f| (f.edge_code().count_ones(), f.edge_code()));
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}
