//! Edge-weighted ("decorated") graphs and the operations that make their
//! span a graded Hopf algebra for each level `m`: restriction (ripping),
//! contraction with shortest-path reweighting (sewing), the truncation
//! `pr_m`, disjoint-union products, the subset coproduct and the Takeuchi
//! antipode.
//!
//! A decorated graph produced by ripping or sewing keeps its original
//! vertex labels: the ground set is a [`VertexSet`] inside a fixed ambient
//! `0..ambient`. Labels are only compressed away during canonicalization.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{for_each_class_permutation, SimpleGraph, MAX_CANON_VERTICES};
use crate::qsym::Composition;
use crate::vset::VertexSet;

const INF: u64 = u64::MAX / 4;

/// A simple graph with a positive integer weight on every edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecoratedGraph {
    ambient: usize,
    ground: VertexSet,
    // Row-major ambient x ambient matrix; 0 encodes an absent edge.
    w: Vec<u64>,
}

impl DecoratedGraph {
    /// The empty decorated graph, the unit of the Hopf algebra.
    pub fn empty() -> DecoratedGraph {
        DecoratedGraph {
            ambient: 0,
            ground: VertexSet::EMPTY,
            w: Vec::new(),
        }
    }

    /// All-ones decoration of a simple graph.
    pub fn uniform(g: &SimpleGraph) -> DecoratedGraph {
        let n = g.n();
        let mut dg = DecoratedGraph {
            ambient: n,
            ground: VertexSet::full(n),
            w: vec![0; n * n],
        };
        for (u, v) in g.edges() {
            dg.set_weight(u, v, 1);
        }
        dg
    }

    pub fn from_weighted_edges<I>(n: usize, edges: I) -> DecoratedGraph
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut dg = DecoratedGraph {
            ambient: n,
            ground: VertexSet::full(n),
            w: vec![0; n * n],
        };
        for (u, v, weight) in edges {
            assert!(u < n && v < n && u != v, "invalid edge ({u},{v})");
            assert!((1..INF).contains(&weight), "decoration out of range");
            dg.set_weight(u, v, weight);
        }
        dg
    }

    fn set_weight(&mut self, u: usize, v: usize, weight: u64) {
        self.w[u * self.ambient + v] = weight;
        self.w[v * self.ambient + u] = weight;
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Number of ground vertices.
    pub fn order(&self) -> usize {
        self.ground.len()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        if u >= self.ambient || v >= self.ambient {
            return None;
        }
        match self.w[u * self.ambient + v] {
            0 => None,
            x => Some(x),
        }
    }

    /// Weighted edges `(u, v, w)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for u in self.ground.iter() {
            for v in self.ground.iter() {
                if v > u {
                    if let Some(w) = self.weight(u, v) {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }

    fn neighbors_in_ground(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for u in self.ground.iter() {
            if u != v && self.w[v * self.ambient + u] != 0 {
                s.insert(u);
            }
        }
        s
    }

    /// Number of connected components of the ground graph; isolated ground
    /// vertices count, the empty graph has none.
    pub fn components(&self) -> usize {
        let mut rest = self.ground;
        let mut count = 0;
        while let Some(start) = rest.min_elem() {
            count += 1;
            let mut seen = VertexSet::singleton(start);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | (self.neighbors_in_ground(v) & rest);
                }
                frontier = next - seen;
                seen = seen | next;
            }
            rest = rest - seen;
        }
        count
    }

    /// Ripping: the induced decorated subgraph on `s`.
    pub fn rip(&self, s: VertexSet) -> DecoratedGraph {
        let keep = self.ground & s;
        let mut out = self.clone();
        out.ground = keep;
        for u in 0..self.ambient {
            for v in 0..self.ambient {
                if !(keep.contains(u) && keep.contains(v)) {
                    out.w[u * self.ambient + v] = 0;
                }
            }
        }
        out
    }

    /// Sewing: the decorated graph on `ground \ s` where `u` and `v` are
    /// joined iff some edge path with all interior vertices in `s` connects
    /// them, weighted by the minimal sum of decorations over such paths.
    /// A direct edge is a path with empty interior and takes part in the
    /// minimum, so `sew(EMPTY)` is the identity.
    pub fn sew(&self, s: VertexSet) -> DecoratedGraph {
        let s = s & self.ground;
        let keep = self.ground - s;
        let a = self.ambient;
        let mut dist: Vec<u64> = self.w.iter().map(|&w| if w == 0 { INF } else { w }).collect();
        for k in s.iter() {
            for u in self.ground.iter() {
                if u == k || dist[u * a + k] >= INF {
                    continue;
                }
                for v in self.ground.iter() {
                    if v == u || v == k {
                        continue;
                    }
                    let through = dist[u * a + k].saturating_add(dist[k * a + v]);
                    if through < dist[u * a + v] {
                        dist[u * a + v] = through;
                    }
                }
            }
        }
        let mut out = DecoratedGraph {
            ambient: a,
            ground: keep,
            w: vec![0; a * a],
        };
        for u in keep.iter() {
            for v in keep.iter() {
                if v > u && dist[u * a + v] < INF {
                    out.set_weight(u, v, dist[u * a + v]);
                }
            }
        }
        out
    }

    /// Deletes every edge whose decoration exceeds `m`.
    pub fn pr(&self, m: u64) -> DecoratedGraph {
        let mut out = self.clone();
        for w in out.w.iter_mut() {
            if *w > m {
                *w = 0;
            }
        }
        out
    }

    /// Disjoint union of two graphs living on disjoint grounds of the same
    /// ambient set, keeping all labels. This is the product in the form it
    /// is used by flag splittings and the antipode.
    pub fn disjoint_union(&self, other: &DecoratedGraph) -> DecoratedGraph {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        assert!(
            !self.ground.intersects(other.ground),
            "grounds must be disjoint"
        );
        let mut out = self.clone();
        out.ground = self.ground | other.ground;
        for (u, v, w) in other.edges() {
            out.set_weight(u, v, w);
        }
        out
    }

    /// Product: disjoint union with `other`'s labels shifted past this
    /// graph's ambient set.
    pub fn product(&self, other: &DecoratedGraph) -> DecoratedGraph {
        let (a1, a2) = (self.ambient, other.ambient);
        let a = a1 + a2;
        assert!(a <= crate::vset::MAX_VERTICES, "product exceeds vertex cap");
        let mut ground = self.ground;
        for v in other.ground.iter() {
            ground.insert(v + a1);
        }
        let mut out = DecoratedGraph {
            ambient: a,
            ground,
            w: vec![0; a * a],
        };
        for (u, v, w) in self.edges() {
            out.set_weight(u, v, w);
        }
        for (u, v, w) in other.edges() {
            out.set_weight(u + a1, v + a1, w);
        }
        out
    }

    /// The blockwise splitting of the graph along a flag of its ground set:
    /// block `i` is `pr_m` of the graph ripped to `F_i` and sewn by
    /// `F_{i-1}`, living on `F_i \ F_{i-1}`.
    pub fn split_by_flag(&self, flag: &Flag, m: u64) -> Vec<DecoratedGraph> {
        let mut prev = VertexSet::EMPTY;
        let mut out = Vec::with_capacity(flag.blocks().len());
        for &b in flag.blocks() {
            let cur = prev | b;
            out.push(self.rip(cur).sew(prev).pr(m));
            prev = cur;
        }
        out
    }

    /// `rk_m` of the graph split along the flag given by `blocks`:
    /// the ground size minus the total component count of the blockwise
    /// splittings. Fused equivalent of summing `components()` over
    /// [`DecoratedGraph::split_by_flag`]; this is the hot loop of the
    /// enumerator pipeline.
    pub fn flag_rank(&self, blocks: &[VertexSet], m: u64) -> usize {
        let a = self.ambient;
        let mut prev = VertexSet::EMPTY;
        let mut components = 0usize;

        let mut verts = [0usize; 16];
        let mut local = [usize::MAX; 16];
        let mut d = [[INF; 16]; 16];

        for &block in blocks {
            let fi = prev | block;
            let t = fi.len();
            for (i, v) in fi.iter().enumerate() {
                verts[i] = v;
                local[v] = i;
            }
            for i in 0..t {
                for j in 0..t {
                    let w = self.w[verts[i] * a + verts[j]];
                    d[i][j] = if w == 0 { INF } else { w };
                }
            }
            // Shortest paths with interior vertices restricted to F_{i-1}.
            for k_abs in prev.iter() {
                let k = local[k_abs];
                for i in 0..t {
                    if d[i][k] >= INF {
                        continue;
                    }
                    for j in 0..t {
                        let through = d[i][k] + d[k][j];
                        if through < d[i][j] {
                            d[i][j] = through;
                        }
                    }
                }
            }
            // Count components of the block under the `<= m` threshold.
            let mut unseen = block;
            while let Some(start) = unseen.min_elem() {
                components += 1;
                let mut frontier = VertexSet::singleton(start);
                unseen.remove(start);
                while let Some(v) = frontier.min_elem() {
                    frontier.remove(v);
                    let lv = local[v];
                    for u in unseen.iter() {
                        if d[lv][local[u]] <= m {
                            frontier.insert(u);
                        }
                    }
                    unseen = unseen - frontier;
                }
            }
            prev = fi;
        }
        debug_assert_eq!(prev, self.ground, "blocks must partition the ground set");
        self.ground.len() - components
    }

    /// The coproduct at level `m`: one ordered pair per subset `S` of the
    /// ground set, ripped to `S` on the left and sewn by `S` on the right.
    pub fn coproduct(&self, m: u64) -> Vec<(DecoratedGraph, DecoratedGraph)> {
        assert!(m >= 1);
        self.ground
            .subsets()
            .map(|s| (self.rip(s).pr(m), self.sew(s).pr(m)))
            .collect()
    }

    /// Antipode by the Takeuchi expansion: the alternating sum over flags of
    /// the ground set of the products of blockwise splittings, aggregated by
    /// isomorphism class.
    pub fn takeuchi_antipode(&self, m: u64) -> Result<DecoratedSum> {
        if self.ground.is_empty() {
            return Err(Error::EmptyGraph);
        }
        assert!(m >= 1);
        let mut sum = DecoratedSum::zero();
        let mut err = None;
        visit_flags(self.ground, &mut |blocks: &[VertexSet]| {
            if err.is_some() {
                return;
            }
            let flag = Flag::from_blocks_unchecked(blocks.to_vec());
            let parts = self.split_by_flag(&flag, m);
            let mut term = parts[0].clone();
            for part in &parts[1..] {
                term = term.disjoint_union(part);
            }
            let sign = if blocks.len() % 2 == 0 { 1 } else { -1 };
            match term.canonical() {
                Ok(canon) => sum.add_term(canon, sign),
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(sum),
        }
    }

    /// Isomorphism-class key: ground compressed to `0..k`, edge list
    /// minimized over all relabelings (restricted to the weight-invariant
    /// vertex partition). Capped at 8 ground vertices.
    pub fn canonical(&self) -> Result<CanonicalDecorated> {
        let k = self.ground.len();
        if k > MAX_CANON_VERTICES {
            return Err(Error::TooManyVertices {
                max: MAX_CANON_VERTICES,
                got: k,
            });
        }
        let verts: Vec<usize> = self.ground.iter().collect();
        // Invariant classes by the multiset of incident weights.
        let mut keyed: Vec<(Vec<u64>, usize)> = (0..k)
            .map(|i| {
                let mut incident: Vec<u64> = verts
                    .iter()
                    .filter_map(|&u| self.weight(verts[i], u))
                    .collect();
                incident.sort_unstable();
                (incident, i)
            })
            .collect();
        keyed.sort();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut last: Option<&[u64]> = None;
        for (key, i) in &keyed {
            if last != Some(key.as_slice()) {
                classes.push(Vec::new());
            }
            classes.last_mut().unwrap().push(*i);
            last = Some(key.as_slice());
        }

        let mut best: Option<Vec<(u8, u8, u64)>> = None;
        for_each_class_permutation(&classes, |perm| {
            let mut edges: Vec<(u8, u8, u64)> = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    if let Some(w) = self.weight(verts[i], verts[j]) {
                        let (a, b) = {
                            let (pa, pb) = (perm[i] as u8, perm[j] as u8);
                            if pa < pb {
                                (pa, pb)
                            } else {
                                (pb, pa)
                            }
                        };
                        edges.push((a, b, w));
                    }
                }
            }
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        });
        Ok(CanonicalDecorated {
            n: k as u8,
            edges: best.unwrap_or_default(),
        })
    }
}

/// Canonical form of a decorated graph; equal iff isomorphic with matching
/// decorations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalDecorated {
    n: u8,
    edges: Vec<(u8, u8, u64)>,
}

impl CanonicalDecorated {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn edges(&self) -> &[(u8, u8, u64)] {
        &self.edges
    }

    /// The representative decorated graph carrying the canonical labeling.
    pub fn to_graph(&self) -> DecoratedGraph {
        DecoratedGraph::from_weighted_edges(
            self.n as usize,
            self.edges
                .iter()
                .map(|&(u, v, w)| (u as usize, v as usize, w)),
        )
    }
}

/// A flag of subsets, stored by its blocks: the flag
/// `F_1 c F_2 c ... c F_k` corresponds to blocks `F_i \ F_{i-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Flag {
    blocks: Vec<VertexSet>,
}

impl Flag {
    /// Builds a flag from disjoint nonempty blocks.
    pub fn new(blocks: Vec<VertexSet>) -> Result<Flag> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::Internal("flag blocks must be nonempty".into()));
            }
            if seen.intersects(b) {
                return Err(Error::Internal("flag blocks must be disjoint".into()));
            }
            seen = seen | b;
        }
        Ok(Flag { blocks })
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<VertexSet>) -> Flag {
        Flag { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// The union of all blocks, i.e. the top set `F_k`.
    pub fn ground(&self) -> VertexSet {
        self.blocks
            .iter()
            .fold(VertexSet::EMPTY, |acc, &b| acc | b)
    }

    /// The cumulative sets `F_1 c ... c F_k`.
    pub fn cumulative(&self) -> Vec<VertexSet> {
        let mut acc = VertexSet::EMPTY;
        self.blocks
            .iter()
            .map(|&b| {
                acc = acc | b;
                acc
            })
            .collect()
    }

    /// The composition `(|F_1|, |F_2| - |F_1|, ...)`.
    pub fn type_composition(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u8).collect())
            .expect("flag blocks are nonempty")
    }
}

/// Calls `f` with the block sequence of every flag of `ground`, i.e. every
/// ordered set partition. The empty ground set has exactly one (empty) flag.
pub(crate) fn visit_flags(ground: VertexSet, f: &mut impl FnMut(&[VertexSet])) {
    fn rec(remaining: VertexSet, stack: &mut Vec<VertexSet>, f: &mut impl FnMut(&[VertexSet])) {
        if remaining.is_empty() {
            f(stack);
            return;
        }
        let mut sub = remaining.bits();
        loop {
            let block = VertexSet::from_bits(sub);
            stack.push(block);
            rec(remaining - block, stack, f);
            stack.pop();
            sub = (sub - 1) & remaining.bits();
            if sub == 0 {
                break;
            }
        }
    }
    rec(ground, &mut Vec::new(), f);
}

/// A formal integer combination of isomorphism classes of decorated graphs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DecoratedSum {
    terms: BTreeMap<CanonicalDecorated, i64>,
}

impl DecoratedSum {
    pub fn zero() -> DecoratedSum {
        DecoratedSum::default()
    }

    /// The class of a single decorated graph with coefficient 1.
    pub fn from_graph(g: &DecoratedGraph) -> Result<DecoratedSum> {
        let mut s = DecoratedSum::zero();
        s.add_term(g.canonical()?, 1);
        Ok(s)
    }

    pub fn add_term(&mut self, key: CanonicalDecorated, coeff: i64) {
        if coeff == 0 {
            return;
        }
        debug_assert!(
            self.terms.keys().all(|k| k.n() == key.n()),
            "terms must share vertex count"
        );
        let entry = self.terms.entry(key).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&mut self, other: &DecoratedSum) {
        for (k, &c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn coefficient(&self, key: &CanonicalDecorated) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalDecorated, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
