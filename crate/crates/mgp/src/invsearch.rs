//! Exhaustive collision searches for the `q = 0` specializations of the
//! level enumerators over the catalogs of small connected graphs: level 1
//! gives the chromatic symmetric function, level `n - 1` the chromatic
//! quasisymmetric function.

use crate::error::{Error, Result};
use crate::graph::{connected_catalog, SimpleGraph};
use crate::qsym::{psi, QSymElement};

/// Which specialized invariant to compare.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum InvariantLevel {
    /// Level 1 at `q = 0`: the chromatic symmetric function.
    ChromaticSymmetric,
    /// Level `n - 1` at `q = 0`: the chromatic quasisymmetric function.
    ChromaticQuasisymmetric,
    /// A fixed level at `q = 0`.
    Level(u64),
}

impl InvariantLevel {
    pub fn resolve(self, n: usize) -> u64 {
        match self {
            InvariantLevel::ChromaticSymmetric => 1,
            InvariantLevel::ChromaticQuasisymmetric => (n as u64 - 1).max(1),
            InvariantLevel::Level(m) => m,
        }
    }
}

/// Two non-isomorphic graphs sharing an invariant value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollisionPair {
    pub left: SimpleGraph,
    pub right: SimpleGraph,
    pub invariant: QSymElement,
}

/// Outcome of a collision search over one catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantReport {
    pub n: usize,
    pub level: InvariantLevel,
    pub resolved_m: u64,
    pub pairs: Vec<CollisionPair>,
}

/// Groups the connected catalog of `n`-vertex graphs by the chosen
/// invariant and reports every unordered pair within a group. Ordering
/// follows the canonical catalog order, so reports are reproducible.
pub fn collision_search(n: usize, level: InvariantLevel) -> Result<InvariantReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange {
            what: "search vertex count",
            min: 2,
            max: 6,
            got: n,
        });
    }
    let m = level.resolve(n);
    if m < 1 {
        return Err(Error::OutOfRange {
            what: "level",
            min: 1,
            max: usize::MAX,
            got: m as usize,
        });
    }
    let catalog = connected_catalog(n)?;
    let values: Vec<QSymElement> = catalog
        .iter()
        .map(|g| {
            psi(g, m)
                .specialize_q(0)
                .expect("evaluation at 0 cannot overflow")
        })
        .collect();

    let mut pairs = Vec::new();
    for i in 0..catalog.len() {
        for j in i + 1..catalog.len() {
            if values[i] == values[j] {
                pairs.push(CollisionPair {
                    left: catalog[i].clone(),
                    right: catalog[j].clone(),
                    invariant: values[i].clone(),
                });
            }
        }
    }
    Ok(InvariantReport {
        n,
        level,
        resolved_m: m,
        pairs,
    })
}

/// The smallest level at which the `q = 0` enumerators of two graphs on a
/// common vertex count differ, or `None` when they agree at every level up
/// to `n - 1`.
pub fn separating_level(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<u64>> {
    if g1.n() != g2.n() {
        return Err(Error::GroundMismatch {
            left: g1.n(),
            right: g2.n(),
        });
    }
    let top = (g1.n() as u64 - 1).max(1);
    for m in 1..=top {
        let a = psi(g1, m).specialize_q(0).expect("evaluation at 0 cannot overflow");
        let b = psi(g2, m).specialize_q(0).expect("evaluation at 0 cannot overflow");
        if a != b {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_catalogs_have_no_collisions() {
        for n in 2..=4 {
            let report = collision_search(n, InvariantLevel::ChromaticSymmetric).unwrap();
            assert!(report.pairs.is_empty(), "unexpected pair at n={n}");
        }
    }

    #[test]
    fn isomorphic_inputs_never_separate() {
        let a = SimpleGraph::path(4);
        let b = SimpleGraph::from_edges(4, [(1, 3), (3, 0), (0, 2)]);
        assert_eq!(separating_level(&a, &b).unwrap(), None);
    }

    #[test]
    fn different_graphs_separate_at_level_one() {
        let path = SimpleGraph::path(4);
        let star = SimpleGraph::star(4);
        assert_eq!(separating_level(&path, &star).unwrap(), Some(1));
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        let a = SimpleGraph::path(3);
        let b = SimpleGraph::path(4);
        assert!(separating_level(&a, &b).is_err());
        assert!(collision_search(7, InvariantLevel::ChromaticSymmetric).is_err());
    }
}
