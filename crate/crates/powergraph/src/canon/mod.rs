//! Graph canonical forms and isomorphism decisions via iterated color
//! refinement plus individualization-refinement backtracking.
//!
//! The certificate of a graph is the serialized adjacency matrix under a
//! canonical vertex ordering; two graphs are isomorphic exactly when their
//! certificates are byte-identical. The search individualizes vertices of the
//! first largest non-singleton color class, prunes by a refinement-trace node
//! invariant, and skips vertices that are twins of an already-tried branch
//! (swapping twins is an automorphism, so those branches are equivalent).

mod refine;
mod search;

pub use refine::{color_refinement, Coloring};

use thiserror::Error;

use crate::power_graph::PowerGraph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum CanonError {
    #[error("canonical search exceeded the node budget of {0}")]
    SearchBudgetExceeded(u64),
}

/// Byte-sequence canonical certificate: `n` as a fixed-width prefix, then the
/// adjacency bits of the canonically ordered graph (upper triangle row-major
/// for graphs, full matrix for digraphs).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
}

pub fn canonical_form(p: &PowerGraph) -> Result<CanonicalForm, CanonError> {
    Ok(canonical_labeling(p)?.0)
}

/// Canonical certificate plus the canonical ordering that produced it
/// (`perm[v]` is the canonical position of vertex `v`).
pub fn canonical_labeling(p: &PowerGraph) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    canonical_labeling_with_budget(p, DEFAULT_NODE_BUDGET)
}

pub fn canonical_labeling_with_budget(
    p: &PowerGraph,
    budget: u64,
) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    search::run(p, budget)
}

/// Decide isomorphism; on success returns the vertex bijection (a vertex `v`
/// of `p1` maps to `result[v]` in `p2`), verified edge-for-edge before
/// returning.
pub fn are_isomorphic_graphs(
    p1: &PowerGraph,
    p2: &PowerGraph,
) -> Result<Option<Vec<usize>>, CanonError> {
    if p1.n() != p2.n() || p1.is_directed() != p2.is_directed() {
        return Ok(None);
    }
    let (c1, perm1) = canonical_labeling(p1)?;
    let (c2, perm2) = canonical_labeling(p2)?;
    if c1 != c2 {
        return Ok(None);
    }
    // Compose the canonical orderings into an explicit bijection.
    let mut position_to_v2 = vec![0usize; p2.n()];
    for (v, &pos) in perm2.iter().enumerate() {
        position_to_v2[pos] = v;
    }
    let mapping: Vec<usize> = perm1.iter().map(|&pos| position_to_v2[pos]).collect();
    for u in 0..p1.n() {
        for v in 0..p1.n() {
            assert_eq!(
                p1.has_edge(u, v),
                p2.has_edge(mapping[u], mapping[v]),
                "canonical forms matched but the composed bijection is not an isomorphism"
            );
        }
    }
    Ok(Some(mapping))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::power_graph::PowerGraph;

    fn k(n: usize) -> PowerGraph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        PowerGraph::from_edges(n, &edges, false)
    }

    fn path(n: usize) -> PowerGraph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        PowerGraph::from_edges(n, &edges, false)
    }

    #[test]
    fn relabeling_invariance_k3() {
        let g = k(3);
        let c = canonical_form(&g).unwrap();
        for perm in [[1, 2, 0], [2, 0, 1], [0, 2, 1]] {
            let c2 = canonical_form(&g.relabel(&perm)).unwrap();
            assert_eq!(c, c2);
        }
    }

    #[test]
    fn distinguishes_k3_from_p3() {
        assert_ne!(canonical_form(&k(3)).unwrap(), canonical_form(&path(3)).unwrap());
    }

    #[test]
    fn bijection_is_returned_and_valid() {
        let g = path(5);
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        let mapping = are_isomorphic_graphs(&g, &h).unwrap().unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), h.has_edge(mapping[u], mapping[v]));
            }
        }
    }

    #[test]
    fn directed_cycle_vs_reversal() {
        // A directed 3-cycle is isomorphic to its reversal (rotate + flip),
        // but not to the path with both arcs one way.
        let c3 = PowerGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)], true);
        let c3r = PowerGraph::from_edges(3, &[(1, 0), (2, 1), (0, 2)], true);
        assert!(are_isomorphic_graphs(&c3, &c3r).unwrap().is_some());
        let p = PowerGraph::from_edges(3, &[(0, 1), (1, 2)], true);
        assert!(are_isomorphic_graphs(&c3, &p).unwrap().is_none());
        // Orientation matters: one arc reversed breaks isomorphism.
        let mixed = PowerGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], true);
        assert!(are_isomorphic_graphs(&c3, &mixed).unwrap().is_none());
    }

    #[test]
    fn power_graph_witness_pair_separated() {
        let a = construct::abelian(&[4, 4]).unwrap();
        let b = construct::cyclic(2)
            .unwrap()
            .direct_product(&construct::generalized_quaternion(8).unwrap())
            .unwrap();
        let pa = PowerGraph::of_group(&a, false);
        let pb = PowerGraph::of_group(&b, false);
        assert!(are_isomorphic_graphs(&pa, &pb).unwrap().is_none());
    }

    #[test]
    fn complete_graph_with_many_automorphisms_is_fast() {
        let g = k(64);
        let c1 = canonical_form(&g).unwrap();
        let perm: Vec<usize> = (0..64).map(|i| (i * 37 + 5) % 64).collect();
        let c2 = canonical_form(&g.relabel(&perm)).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn budget_is_enforced() {
        let g = k(20);
        assert!(matches!(
            canonical_labeling_with_budget(&g, 3),
            Err(CanonError::SearchBudgetExceeded(3))
        ));
    }
}
