//! Homogeneous quasisymmetric functions in the monomial basis with exact
//! integer q-polynomial coefficients, and the two enumerator pipelines that
//! produce them:
//!
//! * [`psi`] sums `q^rank * M_type(F)` over all flags, with the rank taken
//!   from blockwise splittings of the all-ones decorated graph;
//! * [`fq_oracle`] does the same with ranks taken from hypergraph
//!   splittings.
//!
//! The two pipelines share nothing but the flag enumeration; their equality
//! on level hypergraphs is exercised heavily by the test suites. Principal
//! specialization turns either output into the f-polynomial of the
//! underlying polytope.

use std::collections::BTreeMap;
use std::fmt;

use crate::decorated::{visit_flags, DecoratedGraph, Flag};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hyper::Hypergraph;
use crate::vset::VertexSet;

/// Largest ground set for which flag enumeration is offered; the flag count
/// is the ordered Bell number and passes 7 million at 9.
pub const MAX_FLAG_VERTICES: usize = 9;

/// A composition: a nonempty sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Composition> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::Internal("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A polynomial in `q` with exact integer coefficients, stored ascending
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> QPolynomial {
        QPolynomial::default()
    }

    pub fn constant(c: i64) -> QPolynomial {
        QPolynomial::from_coeffs(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> QPolynomial {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> QPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Coefficients ascending in the exponent; empty means zero.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_assign(&mut self, other: &QPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add_monomial(&mut self, k: usize, c: i64) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Exact evaluation; fails on 64-bit overflow.
    pub fn eval(&self, q: i64) -> Result<i64> {
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(q)
                .and_then(|x| x.checked_add(c))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// The substitution `q -> -q`.
    pub fn negate_variable(&self) -> QPolynomial {
        QPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 0 { c } else { -c })
                .collect(),
        )
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A homogeneous quasisymmetric function of fixed degree, written in the
/// monomial basis with q-polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement {
    degree: usize,
    terms: BTreeMap<Composition, QPolynomial>,
}

impl QSymElement {
    pub fn zero(degree: usize) -> QSymElement {
        QSymElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Inserts or accumulates a coefficient; zero polynomials are dropped.
    pub fn add_coefficient(&mut self, comp: Composition, poly: &QPolynomial) {
        debug_assert_eq!(comp.degree(), self.degree, "composition degree mismatch");
        if poly.is_zero() {
            return;
        }
        let entry = self.terms.entry(comp).or_default();
        entry.add_assign(poly);
        if entry.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &QSymElement) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for (comp, poly) in &other.terms {
            self.add_coefficient(comp.clone(), poly);
        }
    }

    /// The coefficient of the monomial basis element at `comp`.
    pub fn coefficient(&self, comp: &Composition) -> QPolynomial {
        self.terms.get(comp).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic composition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates every coefficient at `q0`, dropping vanishing terms.
    pub fn specialize_q(&self, q0: i64) -> Result<QSymElement> {
        let mut out = QSymElement::zero(self.degree);
        for (comp, poly) in &self.terms {
            let v = poly.eval(q0)?;
            if v != 0 {
                out.terms.insert(comp.clone(), QPolynomial::constant(v));
            }
        }
        Ok(out)
    }

    /// Sum of all coefficients evaluated at `q0`; at `q0 = 1` this counts
    /// flags.
    pub fn total_at(&self, q0: i64) -> Result<i64> {
        let mut acc = 0i64;
        for poly in self.terms.values() {
            acc = acc.checked_add(poly.eval(q0)?).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

/// Face-count polynomial: `coeffs[i]` is the number of `i`-dimensional
/// faces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FPolynomial {
    coeffs: Vec<i64>,
}

impl FPolynomial {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The number of vertices, i.e. the constant coefficient.
    pub fn vertex_count(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    /// The alternating sum `sum_i (-1)^i f_i`; equals 1 for every nonempty
    /// polytope.
    pub fn euler_sum(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c } else { -c })
            .sum()
    }

    pub fn eval(&self, q: i64) -> Result<i64> {
        QPolynomial::from_coeffs(self.coeffs.clone()).eval(q)
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", QPolynomial::from_coeffs(self.coeffs.clone()))
    }
}

/// Iterator over all flags of `{0, .., n-1}`.
pub struct Flags {
    stack: Vec<(VertexSet, VertexSet)>, // (remaining before choosing, chosen block)
    ground: VertexSet,
    started: bool,
}

impl Flags {
    fn descend(&mut self) {
        // Choosing the whole remainder as the next block empties it, so a
        // single push completes the branch.
        let remaining = match self.stack.last() {
            None => self.ground,
            Some(&(rem, block)) => rem - block,
        };
        if !remaining.is_empty() {
            self.stack.push((remaining, remaining));
        }
    }

    fn current(&self) -> Flag {
        Flag::new(self.stack.iter().map(|&(_, b)| b).collect())
            .expect("stack blocks are disjoint and nonempty")
    }
}

impl Iterator for Flags {
    type Item = Flag;

    fn next(&mut self) -> Option<Flag> {
        if !self.started {
            self.started = true;
            if self.ground.is_empty() {
                return None;
            }
            self.descend();
            return Some(self.current());
        }
        loop {
            let (remaining, block) = self.stack.pop()?;
            let next_bits = (block.bits().wrapping_sub(1)) & remaining.bits();
            if next_bits != 0 {
                self.stack.push((remaining, VertexSet::from_bits(next_bits)));
                self.descend();
                return Some(self.current());
            }
        }
    }
}

/// Streams every flag of `{0, .., n-1}` exactly once; the count is the
/// ordered Bell number.
pub fn enumerate_flags(n: usize) -> Result<Flags> {
    if !(1..=MAX_FLAG_VERTICES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "flag ground size",
            min: 1,
            max: MAX_FLAG_VERTICES,
            got: n,
        });
    }
    Ok(Flags {
        stack: Vec::new(),
        ground: VertexSet::full(n),
        started: false,
    })
}

/// Shared accumulation: a map from composition parts to rank histograms.
struct Accumulator {
    degree: usize,
    acc: BTreeMap<Vec<u8>, Vec<i64>>,
}

impl Accumulator {
    fn new(degree: usize) -> Accumulator {
        Accumulator {
            degree,
            acc: BTreeMap::new(),
        }
    }

    fn record(&mut self, blocks: &[VertexSet], rank: usize) {
        let mut parts = [0u8; 16];
        for (i, b) in blocks.iter().enumerate() {
            parts[i] = b.len() as u8;
        }
        let key = &parts[..blocks.len()];
        match self.acc.get_mut(key) {
            Some(hist) => {
                if hist.len() <= rank {
                    hist.resize(rank + 1, 0);
                }
                hist[rank] += 1;
            }
            None => {
                let mut hist = vec![0; rank + 1];
                hist[rank] = 1;
                self.acc.insert(key.to_vec(), hist);
            }
        }
    }

    fn finish(self) -> QSymElement {
        let mut out = QSymElement::zero(self.degree);
        for (parts, hist) in self.acc {
            let comp = Composition::new(parts).expect("flag blocks are nonempty");
            out.terms.insert(comp, QPolynomial::from_coeffs(hist));
        }
        out
    }
}

/// The weighted enumerator of the level-`m` polytope of `g`, computed
/// through the decorated-graph pipeline: for every flag, `q^rank` is added
/// to the coefficient of the flag's type, where the rank comes from
/// component counts of the blockwise rip/sew/pr splittings of the all-ones
/// decoration.
pub fn psi(g: &SimpleGraph, m: u64) -> QSymElement {
    let n = g.n();
    assert!(m >= 1, "level must be at least 1");
    assert!(
        (1..=MAX_FLAG_VERTICES).contains(&n),
        "vertex count out of range for flag enumeration"
    );
    let decorated = DecoratedGraph::uniform(g);
    let mut acc = Accumulator::new(n);
    visit_flags(VertexSet::full(n), &mut |blocks: &[VertexSet]| {
        acc.record(blocks, decorated.flag_rank(blocks, m));
    });
    acc.finish()
}

/// The weighted integer-point enumerator of the polytope of an arbitrary
/// hypergraph, computed through hypergraph splitting and the rank `n - c`.
/// Independent of the decorated-graph pipeline.
pub fn fq_oracle(h: &Hypergraph) -> QSymElement {
    let n = h.n();
    assert!(
        (1..=MAX_FLAG_VERTICES).contains(&n),
        "vertex count out of range for flag enumeration"
    );
    let mut acc = Accumulator::new(n);
    visit_flags(VertexSet::full(n), &mut |blocks: &[VertexSet]| {
        acc.record(blocks, h.flag_rank(blocks));
    });
    acc.finish()
}

/// Extracts the f-polynomial from a weighted enumerator by principal
/// specialization: with `ps1(M_alpha)` evaluated at -1 contributing
/// `(-1)^len(alpha)`, the face polynomial is
/// `(-1)^degree * sum_alpha c_alpha(-q) * (-1)^len(alpha)`.
/// Face counts must come out as nonnegative integers; anything else signals
/// an upstream bug.
pub fn f_polynomial(e: &QSymElement) -> Result<FPolynomial> {
    let n = e.degree;
    let mut acc = QPolynomial::zero();
    for (comp, poly) in e.terms() {
        let mut contrib = poly.negate_variable();
        let sign = (n + comp.len()) % 2 == 1;
        if sign {
            contrib = QPolynomial::from_coeffs(contrib.coeffs().iter().map(|&c| -c).collect());
        }
        acc.add_assign(&contrib);
    }
    if acc.coeffs().iter().any(|&c| c < 0) {
        return Err(Error::Internal(format!(
            "face counts must be nonnegative, got {:?}",
            acc.coeffs()
        )));
    }
    Ok(FPolynomial {
        coeffs: acc.coeffs().to_vec(),
    })
}

/// The level past which the enumerators of a connected graph stop changing:
/// one less than the size of a largest induced path. The contract is
/// `psi(g, k) = psi(g, index)` for every `k > index`.
pub fn stabilization_index(g: &SimpleGraph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::OutOfRange {
            what: "vertex count",
            min: 2,
            max: crate::vset::MAX_VERTICES,
            got: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.longest_induced_path()? - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_catalog;
    use crate::hyper::level_hypergraph;

    fn comp(parts: &[u8]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    /// Ordered Bell numbers by the binomial recurrence
    /// `a(n) = sum_k C(n, k) a(n - k)`.
    fn fubini(n: usize) -> u64 {
        let mut a = vec![1u64; n + 1];
        let mut binom = vec![vec![0u64; n + 1]; n + 1];
        for i in 0..=n {
            binom[i][0] = 1;
            for j in 1..=i {
                binom[i][j] = binom[i - 1][j - 1] + binom[i - 1].get(j).copied().unwrap_or(0);
            }
        }
        for i in 1..=n {
            a[i] = (1..=i).map(|k| binom[i][k] * a[i - k]).sum();
        }
        a[n]
    }

    #[test]
    fn flag_iterator_counts() {
        assert_eq!(enumerate_flags(1).unwrap().count(), 1);
        assert_eq!(enumerate_flags(2).unwrap().count(), 3);
        assert_eq!(enumerate_flags(4).unwrap().count(), 75);
        for n in 1..=6 {
            assert_eq!(enumerate_flags(n).unwrap().count() as u64, fubini(n));
        }
        assert!(enumerate_flags(0).is_err());
        assert!(enumerate_flags(10).is_err());
    }

    #[test]
    fn flag_iterator_agrees_with_visitor() {
        for n in 1..=5 {
            let mut visited = Vec::new();
            visit_flags(VertexSet::full(n), &mut |blocks: &[VertexSet]| {
                visited.push(blocks.to_vec());
            });
            let iterated: Vec<Vec<VertexSet>> = enumerate_flags(n)
                .unwrap()
                .map(|f| f.blocks().to_vec())
                .collect();
            assert_eq!(visited, iterated);
            let unique: std::collections::HashSet<_> = iterated.iter().cloned().collect();
            assert_eq!(unique.len(), iterated.len());
        }
    }

    #[test]
    fn psi_single_vertex() {
        let e = psi(&SimpleGraph::new(1), 1);
        assert_eq!(e.term_count(), 1);
        assert_eq!(e.coefficient(&comp(&[1])), poly(&[1]));
    }

    #[test]
    fn psi_edge() {
        let e = psi(&SimpleGraph::complete(2), 1);
        assert_eq!(e.coefficient(&comp(&[2])), poly(&[0, 1]));
        assert_eq!(e.coefficient(&comp(&[1, 1])), poly(&[2]));
        assert_eq!(e.term_count(), 2);
    }

    #[test]
    fn psi_line4_level1_expansion() {
        let e = psi(&SimpleGraph::path(4), 1);
        assert_eq!(e.coefficient(&comp(&[4])), poly(&[0, 0, 0, 1]));
        assert_eq!(e.coefficient(&comp(&[1, 3])), poly(&[0, 2, 2]));
        assert_eq!(e.coefficient(&comp(&[3, 1])), poly(&[0, 2, 2]));
        assert_eq!(e.coefficient(&comp(&[2, 2])), poly(&[2, 2, 2]));
        assert_eq!(e.coefficient(&comp(&[2, 1, 1])), poly(&[6, 6]));
        assert_eq!(e.coefficient(&comp(&[1, 2, 1])), poly(&[6, 6]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 2])), poly(&[6, 6]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 1, 1])), poly(&[24]));
        assert_eq!(e.term_count(), 8);
        assert_eq!(e.total_at(1).unwrap(), 75);
    }

    #[test]
    fn psi_line4_level2_expansion() {
        let e = psi(&SimpleGraph::path(4), 2);
        assert_eq!(e.coefficient(&comp(&[4])), poly(&[0, 0, 0, 1]));
        assert_eq!(e.coefficient(&comp(&[1, 3])), poly(&[0, 0, 4]));
        assert_eq!(e.coefficient(&comp(&[3, 1])), poly(&[0, 2, 2]));
        assert_eq!(e.coefficient(&comp(&[2, 2])), poly(&[0, 4, 2]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 2])), poly(&[2, 10]));
        assert_eq!(e.coefficient(&comp(&[1, 2, 1])), poly(&[4, 8]));
        assert_eq!(e.coefficient(&comp(&[2, 1, 1])), poly(&[6, 6]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 1, 1])), poly(&[24]));
        assert_eq!(e.total_at(1).unwrap(), 75);
    }

    #[test]
    fn psi_line4_level3_expansion() {
        // Frozen from the two agreeing pipelines; cross-checked against the
        // published f-polynomial below.
        let e = psi(&SimpleGraph::path(4), 3);
        assert_eq!(e.coefficient(&comp(&[4])), poly(&[0, 0, 0, 1]));
        assert_eq!(e.coefficient(&comp(&[1, 3])), poly(&[0, 0, 4]));
        assert_eq!(e.coefficient(&comp(&[3, 1])), poly(&[0, 2, 2]));
        assert_eq!(e.coefficient(&comp(&[2, 2])), poly(&[0, 3, 3]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 2])), poly(&[0, 12]));
        assert_eq!(e.coefficient(&comp(&[1, 2, 1])), poly(&[4, 8]));
        assert_eq!(e.coefficient(&comp(&[2, 1, 1])), poly(&[6, 6]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 1, 1])), poly(&[24]));
        assert_eq!(e.total_at(1).unwrap(), 75);
    }

    #[test]
    fn full_flag_coefficient_is_factorial() {
        for n in 1..=5usize {
            for (i, g) in connected_catalog(n).unwrap().into_iter().enumerate() {
                let e = psi(&g, 1);
                let ones = comp(&vec![1u8; n]);
                let expected: i64 = (1..=n as i64).product();
                assert_eq!(e.coefficient(&ones), poly(&[expected]), "graph {i} at n={n}");
            }
        }
    }

    #[test]
    fn one_part_coefficient_is_graph_rank() {
        for n in 2..=5usize {
            for g in connected_catalog(n).unwrap() {
                for m in 1..=2u64 {
                    let e = psi(&g, m);
                    assert_eq!(
                        e.coefficient(&comp(&[n as u8])),
                        QPolynomial::monomial(n - 1)
                    );
                }
            }
        }
    }

    #[test]
    fn fq_oracle_on_level_hypergraphs_of_the_path() {
        let l4 = SimpleGraph::path(4);
        assert_eq!(fq_oracle(&level_hypergraph(&l4, 1)), psi(&l4, 1));
        let e = fq_oracle(&level_hypergraph(&l4, 2));
        assert_eq!(e.coefficient(&comp(&[3, 1])), poly(&[0, 2, 2]));
        assert_eq!(e, psi(&l4, 2));
    }

    #[test]
    fn fq_oracle_of_empty_hypergraph_counts_flags_by_type() {
        // With no hyperedges every rank is 0, so each composition ends up
        // with the number of flags of that type, a multinomial coefficient.
        let e = fq_oracle(&Hypergraph::new(3));
        assert_eq!(e.coefficient(&comp(&[3])), poly(&[1]));
        assert_eq!(e.coefficient(&comp(&[1, 2])), poly(&[3]));
        assert_eq!(e.coefficient(&comp(&[2, 1])), poly(&[3]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 1])), poly(&[6]));
        assert_eq!(e.total_at(1).unwrap(), 13);
    }

    #[test]
    fn oracle_equivalence_small_sweep() {
        for n in 2..=4 {
            for g in connected_catalog(n).unwrap() {
                for m in 1..=(n as u64 - 1) {
                    assert_eq!(psi(&g, m), fq_oracle(&level_hypergraph(&g, m)));
                }
            }
        }
    }

    #[test]
    fn f_polynomial_of_the_path() {
        let l4 = SimpleGraph::path(4);
        let f1 = f_polynomial(&psi(&l4, 1)).unwrap();
        assert_eq!(f1.coeffs(), &[8, 12, 6, 1]);
        let f2 = f_polynomial(&psi(&l4, 2)).unwrap();
        assert_eq!(f2.coeffs(), &[12, 18, 8, 1]);
        let f3 = f_polynomial(&psi(&l4, 3)).unwrap();
        assert_eq!(f3.coeffs(), &[14, 21, 9, 1]);
        for f in [&f1, &f2, &f3] {
            assert_eq!(f.euler_sum(), 1);
        }
    }

    #[test]
    fn f_polynomial_of_a_point() {
        let f = f_polynomial(&psi(&SimpleGraph::new(1), 1)).unwrap();
        assert_eq!(f.coeffs(), &[1]);
    }

    #[test]
    fn f_polynomial_is_monotone_across_levels() {
        // Adding Minkowski summands refines the normal fan, so face counts
        // can only grow with the level.
        for n in 2..=5usize {
            for g in connected_catalog(n).unwrap() {
                let mut prev: Option<FPolynomial> = None;
                for m in 1..=(n as u64 - 1) {
                    let f = f_polynomial(&psi(&g, m)).unwrap();
                    if let Some(p) = &prev {
                        for i in 0..p.coeffs().len().max(f.coeffs().len()) {
                            let lo = p.coeffs().get(i).copied().unwrap_or(0);
                            let hi = f.coeffs().get(i).copied().unwrap_or(0);
                            assert!(hi >= lo, "face counts shrank at n={n} m={m}");
                        }
                    }
                    prev = Some(f);
                }
            }
        }
    }

    #[test]
    fn specialization_examples() {
        let l4 = SimpleGraph::path(4);
        let e = psi(&l4, 1).specialize_q(0).unwrap();
        assert_eq!(e.coefficient(&comp(&[2, 2])), poly(&[2]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 2])), poly(&[6]));
        assert_eq!(e.coefficient(&comp(&[1, 2, 1])), poly(&[6]));
        assert_eq!(e.coefficient(&comp(&[2, 1, 1])), poly(&[6]));
        assert_eq!(e.coefficient(&comp(&[1, 1, 1, 1])), poly(&[24]));
        assert_eq!(e.coefficient(&comp(&[4])), QPolynomial::zero());
        assert_eq!(e.term_count(), 5);

        // At q = 1 every flag contributes exactly 1.
        for m in 1..=3 {
            assert_eq!(psi(&l4, m).total_at(1).unwrap(), 75);
        }

        // Specializing a constant-coefficient element changes nothing.
        let constant = e.clone();
        assert_eq!(constant.specialize_q(17).unwrap(), constant);
    }

    #[test]
    fn stabilization_examples() {
        assert_eq!(stabilization_index(&SimpleGraph::complete(5)).unwrap(), 1);
        assert_eq!(stabilization_index(&SimpleGraph::star(5)).unwrap(), 2);
        for n in 2..=6 {
            assert_eq!(stabilization_index(&SimpleGraph::path(n)).unwrap(), n - 1);
        }
        let disconnected = SimpleGraph::from_edges(4, [(0, 1)]);
        assert_eq!(stabilization_index(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn psi_stabilizes_beyond_the_index() {
        for n in 2..=5 {
            for g in connected_catalog(n).unwrap() {
                let idx = stabilization_index(&g).unwrap() as u64;
                let stable = psi(&g, idx);
                for k in idx + 1..=(n as u64) {
                    assert_eq!(psi(&g, k), stable);
                }
            }
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(poly(&[2, 2, 2]).to_string(), "2q^2 + 2q + 2");
        assert_eq!(poly(&[0, -1, 0, 1]).to_string(), "q^3 - q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(comp(&[1, 2, 1]).to_string(), "(1,2,1)");
    }
}
