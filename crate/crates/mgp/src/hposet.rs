//! Vertex posets of hypergraphic polytopes.
//!
//! A 1-orientation roots every hyperedge at one of its members; when the
//! induced directed multigraph (root to every other member) is acyclic, its
//! transitive closure is a poset whose restriction to each hyperedge is a
//! rooted tree. These posets index the vertices (equivalently, the maximal
//! normal cones) of the polytope, so enumerating them gives vertex counts,
//! normal-equivalence certificates and the P-partition decomposition of the
//! `q = 0` enumerator.
//!
//! Posets are compared on the labeled ground set: normal fans live in a
//! fixed coordinate space, so isomorphism would identify cones that are
//! genuinely distinct.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::hyper::Hypergraph;
use crate::qsym::{Composition, QPolynomial, QSymElement};
use crate::vset::VertexSet;

/// A strict partial order on `{0, .., n-1}`, stored as the set of elements
/// strictly below each vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Poset {
    n: usize,
    below: Vec<VertexSet>,
}

impl Poset {
    /// The order with no relations.
    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            below: vec![VertexSet::EMPTY; n],
        }
    }

    /// Builds the transitive closure of the relation `{i < j}` over the
    /// given pairs; fails if the closure is not antisymmetric.
    pub fn from_relations<I>(n: usize, relations: I) -> Result<Poset>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut below = vec![VertexSet::EMPTY; n];
        for (i, j) in relations {
            assert!(i < n && j < n && i != j, "invalid relation ({i},{j})");
            below[j].insert(i);
        }
        close_transitively(&mut below);
        for (j, b) in below.iter().enumerate() {
            if b.contains(j) {
                return Err(Error::CyclicOrientation);
            }
            for i in b.iter() {
                if below[i].contains(j) {
                    return Err(Error::CyclicOrientation);
                }
            }
        }
        Ok(Poset { n, below })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `i < j` in the order.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    /// Elements strictly below `j`.
    pub fn strictly_below(&self, j: usize) -> VertexSet {
        self.below[j]
    }

    /// Elements strictly above `i`.
    pub fn strictly_above(&self, i: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for j in 0..self.n {
            if self.below[j].contains(i) {
                s.insert(j);
            }
        }
        s
    }

    /// All relations `(i, j)` with `i < j` in the order, lexicographically.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn relation_count(&self) -> usize {
        self.below.iter().map(|b| b.len()).sum()
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for i in self.below[j].iter() {
                if (self.below[j] & self.strictly_above(i)).is_empty() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Adds `i < j` and closes transitively; fails if `j <= i` already
    /// holds.
    pub fn with_relation(&self, i: usize, j: usize) -> Result<Poset> {
        if i == j || self.lt(j, i) {
            return Err(Error::CyclicOrientation);
        }
        let mut out = self.clone();
        out.below[j].insert(i);
        close_transitively(&mut out.below);
        Ok(out)
    }

    /// The unique maximal element of the restriction to `h`, if there is
    /// exactly one.
    pub fn restriction_root(&self, h: VertexSet) -> Option<usize> {
        self.unique_max_on(h)
    }

    fn unique_max_on(&self, h: VertexSet) -> Option<usize> {
        let mut max = None;
        for x in h.iter() {
            if (self.strictly_above(x) & h).is_empty() {
                if max.is_some() {
                    return None;
                }
                max = Some(x);
            }
        }
        max
    }

    /// Whether the Hasse diagram of the restriction to `h` is a rooted
    /// tree: a unique maximal element, and every other element covered by
    /// exactly one element inside `h`. One-element restrictions qualify.
    pub fn restriction_is_rooted_tree(&self, h: VertexSet) -> bool {
        let root = match self.unique_max_on(h) {
            Some(r) => r,
            None => return h.is_empty(),
        };
        for x in h.iter() {
            if x == root {
                continue;
            }
            let above_in_h = self.strictly_above(x) & h;
            let mut parents = 0;
            for y in above_in_h.iter() {
                if (self.below[y] & above_in_h).is_empty() {
                    parents += 1;
                }
            }
            if parents != 1 {
                return false;
            }
        }
        true
    }
}

fn close_transitively(below: &mut [VertexSet]) {
    let n = below.len();
    for k in 0..n {
        for j in 0..n {
            if below[j].contains(k) {
                below[j] = below[j] | below[k];
            }
        }
    }
}

/// A choice of root element for every hyperedge of a hypergraph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Orientation {
    n: usize,
    roots: BTreeMap<VertexSet, usize>,
}

impl Orientation {
    pub fn new(n: usize) -> Orientation {
        Orientation {
            n,
            roots: BTreeMap::new(),
        }
    }

    pub fn from_roots<I>(n: usize, roots: I) -> Orientation
    where
        I: IntoIterator<Item = (VertexSet, usize)>,
    {
        let mut o = Orientation::new(n);
        for (edge, root) in roots {
            o.set_root(edge, root);
        }
        o
    }

    pub fn set_root(&mut self, edge: VertexSet, root: usize) {
        assert!(edge.contains(root), "root must belong to its hyperedge");
        self.roots.insert(edge, root);
    }

    pub fn root(&self, edge: VertexSet) -> Option<usize> {
        self.roots.get(&edge).copied()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> impl Iterator<Item = (VertexSet, usize)> + '_ {
        self.roots.iter().map(|(&e, &r)| (e, r))
    }

    /// The arcs root -> member of the induced directed multigraph, as
    /// adjacency sets.
    fn arcs(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.n];
        for (&edge, &root) in &self.roots {
            out[root] = out[root] | (edge - VertexSet::singleton(root));
        }
        out
    }

    /// Whether the induced directed multigraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        reachability(&self.arcs()).is_some()
    }
}

/// Transitive reachability of a DAG given by arc sets, or `None` on a
/// cycle. `reach[v]` excludes `v` itself.
fn reachability(arcs: &[VertexSet]) -> Option<Vec<VertexSet>> {
    let n = arcs.len();
    let mut reach = arcs.to_vec();
    for k in 0..n {
        for v in 0..n {
            if reach[v].contains(k) {
                reach[v] = reach[v] | reach[k];
            }
        }
    }
    for (v, r) in reach.iter().enumerate() {
        if r.contains(v) {
            return None;
        }
    }
    Some(reach)
}

/// The poset obtained by transitively closing the directed multigraph of an
/// acyclic orientation; arcs point from roots down, so the root of a
/// hyperedge ends up above its other members.
pub fn transitive_closure(o: &Orientation) -> Result<Poset> {
    let reach = reachability(&o.arcs()).ok_or(Error::CyclicOrientation)?;
    // Everything a vertex reaches lies strictly below it.
    Ok(Poset {
        n: o.n(),
        below: reach,
    })
}

/// Every root assignment whose directed multigraph is acyclic, found by
/// backtracking over hyperedges in decreasing size order with an
/// incrementally maintained closure.
pub fn acyclic_orientations(h: &Hypergraph) -> Vec<Orientation> {
    let mut edges: Vec<VertexSet> = h.edges().collect();
    edges.sort_by_key(|e| (std::cmp::Reverse(e.len()), e.bits()));
    let n = h.n();

    struct State {
        edges: Vec<VertexSet>,
        // desc[v] is the set of vertices reachable from v by arcs chosen so
        // far, excluding v.
        desc: Vec<VertexSet>,
        roots: Vec<usize>,
        out: Vec<Orientation>,
        n: usize,
    }

    fn rec(st: &mut State, i: usize) {
        if i == st.edges.len() {
            st.out.push(Orientation::from_roots(
                st.n,
                st.edges.iter().copied().zip(st.roots.iter().copied()),
            ));
            return;
        }
        let edge = st.edges[i];
        for r in edge.iter() {
            let targets = edge - VertexSet::singleton(r);
            // An arc r -> t closes a cycle iff t already reaches r.
            if targets.iter().any(|t| st.desc[t].contains(r)) {
                continue;
            }
            let saved = st.desc.clone();
            let mut gained = targets;
            for t in targets.iter() {
                gained = gained | st.desc[t];
            }
            for v in 0..st.n {
                if v == r || st.desc[v].contains(r) {
                    st.desc[v] = st.desc[v] | gained;
                }
            }
            st.roots[i] = r;
            rec(st, i + 1);
            st.desc = saved;
        }
    }

    let count = edges.len();
    let mut st = State {
        edges,
        desc: vec![VertexSet::EMPTY; n],
        roots: vec![0; count],
        out: Vec::new(),
        n,
    };
    rec(&mut st, 0);
    st.out
}

/// Whether `p` is a vertex poset of `h`: every hyperedge restriction has a
/// rooted-tree Hasse diagram, and every cover relation is generated by some
/// hyperedge containing the pair and rooted at the cover's upper element.
///
/// The rooting requirement on the witness is what makes the
/// closure-of-orientations characterization an equivalence: a cover whose
/// witnesses are all rooted elsewhere cannot arise from any root arc, so
/// the plain containment condition admits posets that are not closures
/// (smallest case: the total order 0 < 1 < 2 against the hyperedges
/// {02, 12, 012} of the 3-path centered at 2).
pub fn is_hposet(p: &Poset, h: &Hypergraph) -> bool {
    if p.n() != h.n() {
        return false;
    }
    for e in h.edges() {
        if !p.restriction_is_rooted_tree(e) {
            return false;
        }
    }
    covers_witnessed(p, h)
}

fn covers_witnessed(p: &Poset, h: &Hypergraph) -> bool {
    p.covers().iter().all(|&(i, j)| {
        let pair = VertexSet::from_iter([i, j]);
        h.edges()
            .any(|e| pair.is_subset(e) && p.unique_max_on(e) == Some(j))
    })
}

/// All vertex posets of `h`: the deduplicated transitive closures of its
/// acyclic orientations.
pub fn enumerate_hposets(h: &Hypergraph) -> BTreeSet<Poset> {
    let mut out = BTreeSet::new();
    for o in acyclic_orientations(h) {
        let p = transitive_closure(&o).expect("orientation was enumerated as acyclic");
        debug_assert!(is_hposet(&p, h));
        out.insert(p);
    }
    out
}

/// Lifts a vertex poset of a coarser level into `h_next` by repeatedly
/// picking a hyperedge whose restriction is not yet a rooted tree, ordering
/// one of its unordered pairs of top violators both ways, re-closing, and
/// discarding branches whose covers leave the hypergraph. Returns every
/// vertex poset of `h_next` reachable this way (the poset itself when it
/// already qualifies).
pub fn lift_hposets(p: &Poset, h_next: &Hypergraph) -> Result<BTreeSet<Poset>> {
    if p.n() != h_next.n() {
        return Err(Error::GroundMismatch {
            left: p.n(),
            right: h_next.n(),
        });
    }
    if !covers_witnessed(p, h_next) {
        return Err(Error::UndefinedLiftInput {
            reason: "a cover relation lies in no hyperedge",
        });
    }

    let mut edges: Vec<VertexSet> = h_next.edges().collect();
    edges.sort_by_key(|e| (e.len(), e.bits()));

    let mut out = BTreeSet::new();
    let mut seen: HashSet<Poset> = HashSet::new();
    let mut stack = vec![p.clone()];
    while let Some(q) = stack.pop() {
        if !seen.insert(q.clone()) {
            continue;
        }
        if is_hposet(&q, h_next) {
            out.insert(q);
            continue;
        }
        let edge = edges
            .iter()
            .copied()
            .find(|&e| !q.restriction_is_rooted_tree(e));
        let edge = match edge {
            Some(e) => e,
            // Covers stay witnessed along every branch, so a non-poset can
            // only fail through some restriction.
            None => {
                return Err(Error::Internal(
                    "lift reached a poset violating no restriction".into(),
                ))
            }
        };
        for v1 in edge.iter() {
            for v2 in edge.iter() {
                if v2 <= v1 || q.lt(v1, v2) || q.lt(v2, v1) {
                    continue;
                }
                let rest = edge - VertexSet::from_iter([v1, v2]);
                let blocked = rest
                    .iter()
                    .any(|v3| q.lt(v1, v3) || q.lt(v2, v3));
                if blocked {
                    continue;
                }
                for (a, b) in [(v1, v2), (v2, v1)] {
                    if let Ok(q2) = q.with_relation(a, b) {
                        if covers_witnessed(&q2, h_next) {
                            stack.push(q2);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The quasisymmetric enumerator of strict order-preserving maps: the
/// coefficient of the monomial element at a composition with parts
/// `(a_1, .., a_k)` counts the ordered set partitions with those block
/// sizes whose level map satisfies `level(i) < level(j)` whenever `i < j`
/// in the poset.
pub fn strict_ppartition_enumerator(p: &Poset) -> QSymElement {
    let n = p.n();
    assert!(
        (1..=crate::qsym::MAX_FLAG_VERTICES).contains(&n),
        "ground size out of range for flag enumeration"
    );
    let relations = p.relations();
    let mut out = QSymElement::zero(n);
    crate::decorated::visit_flags(VertexSet::full(n), &mut |blocks: &[VertexSet]| {
        let mut level = [0usize; 16];
        for (idx, b) in blocks.iter().enumerate() {
            for v in b.iter() {
                level[v] = idx;
            }
        }
        if relations.iter().all(|&(i, j)| level[i] < level[j]) {
            let comp = Composition::new(blocks.iter().map(|b| b.len() as u8).collect())
                .expect("flag blocks are nonempty");
            out.add_coefficient(comp, &QPolynomial::constant(1));
        }
    });
    out
}

/// Per-vertex integer coordinates of the polytope vertex selected by a
/// vertex poset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexCoordinates {
    coords: Vec<u64>,
}

impl VertexCoordinates {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// Coordinates of the vertex of the Minkowski sum picked out by the normal
/// cone of `p`: each hyperedge contributes one unit at the root of its
/// restriction, since a generic functional interior to the cone is
/// maximized there over the hyperedge's simplex.
pub fn vertex_coordinates(p: &Poset, h: &Hypergraph) -> Result<VertexCoordinates> {
    if !is_hposet(p, h) {
        return Err(Error::NotHPoset);
    }
    let mut coords = vec![0u64; h.n()];
    for e in h.edges() {
        let root = p
            .unique_max_on(e)
            .expect("restrictions of a vertex poset are rooted trees");
        coords[root] += 1;
    }
    Ok(VertexCoordinates { coords })
}

/// Whether two hypergraphs on the same ground set have identical vertex
/// poset sets, i.e. identical maximal normal cones and hence identical
/// normal fans.
pub fn normally_equivalent(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    if h1.n() != h2.n() {
        return Err(Error::GroundMismatch {
            left: h1.n(),
            right: h2.n(),
        });
    }
    Ok(enumerate_hposets(h1) == enumerate_hposets(h2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::hyper::{level_hypergraph, level_path_hypergraph};
    use crate::qsym::psi;

    fn vs(elems: &[usize]) -> VertexSet {
        VertexSet::from_iter(elems.iter().copied())
    }

    fn h2_l4() -> Hypergraph {
        level_hypergraph(&SimpleGraph::path(4), 2)
    }

    /// The worked 1-orientation of the level-2 hypergraph of the 4-path:
    /// each edge rooted at its smallest element.
    fn o1() -> Orientation {
        Orientation::from_roots(
            4,
            [
                (vs(&[0, 1]), 0),
                (vs(&[1, 2]), 1),
                (vs(&[2, 3]), 2),
                (vs(&[0, 1, 2]), 0),
                (vs(&[1, 2, 3]), 1),
            ],
        )
    }

    #[test]
    fn orientation_acyclicity_examples() {
        assert!(o1().is_acyclic());

        let o2 = Orientation::from_roots(
            4,
            [
                (vs(&[0, 1]), 0),
                (vs(&[1, 2]), 1),
                (vs(&[2, 3]), 2),
                (vs(&[0, 1, 2]), 2),
                (vs(&[1, 2, 3]), 3),
            ],
        );
        assert!(!o2.is_acyclic());
        assert!(transitive_closure(&o2).is_err());

        let single = Hypergraph::from_edges(2, [vs(&[0, 1])]);
        let orientations = acyclic_orientations(&single);
        assert_eq!(orientations.len(), 2);
        assert!(orientations.iter().all(Orientation::is_acyclic));
    }

    #[test]
    fn enumeration_contains_and_excludes_the_worked_orientations() {
        let all = acyclic_orientations(&h2_l4());
        assert!(all.contains(&o1()));
        let o2 = Orientation::from_roots(
            4,
            [
                (vs(&[0, 1]), 0),
                (vs(&[1, 2]), 1),
                (vs(&[2, 3]), 2),
                (vs(&[0, 1, 2]), 2),
                (vs(&[1, 2, 3]), 3),
            ],
        );
        assert!(!all.contains(&o2));
    }

    #[test]
    fn closure_of_the_worked_orientation_is_the_total_order() {
        let p = transitive_closure(&o1()).unwrap();
        assert_eq!(
            p.relations(),
            vec![(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]
        );

        let arrow = transitive_closure(&Orientation::from_roots(
            2,
            [(vs(&[0, 1]), 0)],
        ))
        .unwrap();
        assert_eq!(arrow.relations(), vec![(1, 0)]);

        let chain = Poset::from_relations(3, [(1, 0), (2, 1)]).unwrap();
        assert_eq!(chain.relations(), vec![(1, 0), (2, 0), (2, 1)]);
    }

    #[test]
    fn is_hposet_examples() {
        let h = h2_l4();
        let total = transitive_closure(&o1()).unwrap();
        assert!(is_hposet(&total, &h));

        let h1 = level_hypergraph(&SimpleGraph::path(4), 1);
        assert!(!is_hposet(&Poset::antichain(4), &h1));

        let chain = Poset::from_relations(3, [(0, 1), (1, 2)]).unwrap();
        let hh = Hypergraph::from_edges(3, [vs(&[0, 1]), vs(&[1, 2])]);
        assert!(is_hposet(&chain, &hh));
    }

    #[test]
    fn hposet_counts_for_the_path() {
        let l4 = SimpleGraph::path(4);
        let counts: Vec<usize> = (1..=3)
            .map(|m| enumerate_hposets(&level_hypergraph(&l4, m)).len())
            .collect();
        assert_eq!(counts, vec![8, 12, 14]);
    }

    #[test]
    fn strict_ppartition_examples() {
        let antichain = Poset::antichain(2);
        let e = strict_ppartition_enumerator(&antichain);
        assert_eq!(
            e.coefficient(&Composition::new(vec![2]).unwrap()),
            QPolynomial::constant(1)
        );
        assert_eq!(
            e.coefficient(&Composition::new(vec![1, 1]).unwrap()),
            QPolynomial::constant(2)
        );

        let chain = Poset::from_relations(2, [(0, 1)]).unwrap();
        let e = strict_ppartition_enumerator(&chain);
        assert_eq!(e.term_count(), 1);
        assert_eq!(
            e.coefficient(&Composition::new(vec![1, 1]).unwrap()),
            QPolynomial::constant(1)
        );
    }

    #[test]
    fn ppartition_sum_decomposes_the_specialized_enumerator() {
        let l4 = SimpleGraph::path(4);
        for m in 1..=3 {
            let mut total = QSymElement::zero(4);
            for p in enumerate_hposets(&level_hypergraph(&l4, m)) {
                total.add_assign(&strict_ppartition_enumerator(&p));
            }
            assert_eq!(total, psi(&l4, m).specialize_q(0).unwrap());
        }
    }

    #[test]
    fn vertex_coordinate_examples() {
        let h = h2_l4();
        let total = transitive_closure(&o1()).unwrap();
        let coords = vertex_coordinates(&total, &h).unwrap();
        assert_eq!(coords.coords(), &[2, 2, 1, 0]);

        let single = Hypergraph::from_edges(2, [vs(&[0, 1])]);
        let p = Poset::from_relations(2, [(1, 0)]).unwrap();
        assert_eq!(vertex_coordinates(&p, &single).unwrap().coords(), &[1, 0]);

        assert_eq!(
            vertex_coordinates(&Poset::antichain(2), &single),
            Err(Error::NotHPoset)
        );

        for p in enumerate_hposets(&h) {
            let c = vertex_coordinates(&p, &h).unwrap();
            assert_eq!(c.coords().iter().sum::<u64>(), h.edge_count() as u64);
        }
    }

    #[test]
    fn lifting_the_path_levels() {
        let l4 = SimpleGraph::path(4);
        let h1 = level_hypergraph(&l4, 1);
        let h2 = level_hypergraph(&l4, 2);
        let h3 = level_hypergraph(&l4, 3);

        let mut lifted = BTreeSet::new();
        for p in enumerate_hposets(&h1) {
            lifted.extend(lift_hposets(&p, &h2).unwrap());
        }
        assert_eq!(lifted, enumerate_hposets(&h2));

        let mut lifted3 = BTreeSet::new();
        for p in &lifted {
            lifted3.extend(lift_hposets(p, &h3).unwrap());
        }
        assert_eq!(lifted3, enumerate_hposets(&h3));

        // A poset that already qualifies lifts to itself.
        for p in enumerate_hposets(&h3) {
            assert_eq!(lift_hposets(&p, &h3).unwrap(), BTreeSet::from([p]));
        }
    }

    #[test]
    fn lift_rejects_foreign_posets() {
        let h1 = level_hypergraph(&SimpleGraph::path(4), 1);
        // A cover between the endpoints lies in no hyperedge of the path.
        let stranger = Poset::from_relations(4, [(0, 3)]).unwrap();
        assert!(matches!(
            lift_hposets(&stranger, &h1),
            Err(Error::UndefinedLiftInput { .. })
        ));
    }

    #[test]
    fn normal_equivalence_examples() {
        let l4 = SimpleGraph::path(4);
        let h1 = level_hypergraph(&l4, 1);
        let h2 = level_hypergraph(&l4, 2);
        assert!(!normally_equivalent(&h1, &h2).unwrap());

        let star = SimpleGraph::star(5);
        for m in 1..=4 {
            assert!(normally_equivalent(
                &level_hypergraph(&star, m),
                &level_path_hypergraph(&star, m)
            )
            .unwrap());
        }

        assert!(normally_equivalent(&h1, &Hypergraph::new(3)).is_err());
    }
}
