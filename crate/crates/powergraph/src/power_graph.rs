//! Power graphs of finite groups.
//!
//! The directed power graph has an arc `a -> b` whenever `b = a^m` for some
//! `m >= 1` and `a != b`; the undirected power graph is its symmetrization.
//! Root-profile diagnostics (square-root counts, roots by order) support the
//! distinguishing arguments for conformal but non-isomorphic groups, and a
//! specialized product construction computes `P(G x A)` for a 2-group `G`
//! and elementary abelian 2-group `A` without building the product's power
//! graph directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bitmat::BitMatrix;
use crate::group::Group;

#[derive(Debug, Error)]
pub enum PowerGraphError {
    #[error("group of order {0} is not a 2-group")]
    NotTwoGroup(usize),
    #[error("group of order {0} is not an elementary abelian 2-group")]
    NotElementaryAbelianTwoGroup(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Adjacency (or arc) bit-matrix over the elements of a group, with element
/// orders kept as vertex labels for exports and diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerGraph {
    n: usize,
    directed: bool,
    adj: BitMatrix,
    orders: Vec<u32>,
}

impl PowerGraph {
    /// Build the power graph of `g` by orbit walks: for each element `a`,
    /// every member of the cyclic subgroup generated by `a` (except `a`
    /// itself) receives an arc from `a`.
    pub fn of_group(g: &Group, directed: bool) -> PowerGraph {
        let n = g.n();
        let mut adj = BitMatrix::new(n);
        for a in 0..n {
            for b in g.cyclic_subgroup(a) {
                if b != a {
                    adj.set(a, b, true);
                    if !directed {
                        adj.set(b, a, true);
                    }
                }
            }
        }
        let orders = (0..n).map(|x| g.element_order(x) as u32).collect();
        PowerGraph {
            n,
            directed,
            adj,
            orders,
        }
    }

    /// A plain graph from an edge (or arc) list; vertex labels default to 0.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], directed: bool) -> PowerGraph {
        let mut adj = BitMatrix::new(n);
        for &(u, v) in edges {
            adj.set(u, v, true);
            if !directed {
                adj.set(v, u, true);
            }
        }
        PowerGraph {
            n,
            directed,
            adj,
            orders: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn vertex_order(&self, v: usize) -> u32 {
        self.orders[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count_ones(v)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adj.get(u, v)).count()
    }

    /// Undirected edges `(u, v)` with `u < v`, ascending; for digraphs, all
    /// arcs `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj.row_iter(u) {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// The undirected graph with an edge wherever either arc is present.
    pub fn symmetrized(&self) -> PowerGraph {
        let mut adj = BitMatrix::new(self.n);
        for u in 0..self.n {
            for v in self.adj.row_iter(u) {
                adj.set(u, v, true);
                adj.set(v, u, true);
            }
        }
        PowerGraph {
            n: self.n,
            directed: false,
            adj,
            orders: self.orders.clone(),
        }
    }

    /// Apply a vertex bijection `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> PowerGraph {
        assert_eq!(perm.len(), self.n);
        let mut adj = BitMatrix::new(self.n);
        let mut orders = vec![0; self.n];
        for u in 0..self.n {
            orders[perm[u]] = self.orders[u];
            for v in self.adj.row_iter(u) {
                adj.set(perm[u], perm[v], true);
            }
        }
        PowerGraph {
            n: self.n,
            directed: self.directed,
            adj,
            orders,
        }
    }

    pub fn is_complete(&self) -> bool {
        !self.directed && (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if !seen[v] && (self.adj.get(u, v) || self.adj.get(v, u)) {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// One `u v` pair per line, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// DOT export with element orders as vertex labels.
    pub fn to_dot(&self, name: &str) -> String {
        let (kind, arrow) = if self.directed {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let mut out = String::new();
        writeln!(out, "{kind} {name} {{").unwrap();
        for v in 0..self.n {
            writeln!(out, "  {v} [label=\"{}\"];", self.orders[v]).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} {arrow} {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Number of elements `y` with `y^2 = x`.
pub fn square_root_count(g: &Group, x: usize) -> usize {
    (0..g.n()).filter(|&y| g.mul(y, y) == x).count()
}

/// For each element `x`, the roots of `x` (elements `y != x` with `x` a
/// positive power of `y`) counted by the order of `y`.
pub fn root_profile(g: &Group) -> Vec<BTreeMap<u32, u32>> {
    let mut profiles = vec![BTreeMap::new(); g.n()];
    for y in 0..g.n() {
        let order = g.element_order(y) as u32;
        for x in g.cyclic_subgroup(y) {
            if x != y {
                *profiles[x].entry(order).or_insert(0) += 1;
            }
        }
    }
    profiles
}

/// Multiset of `(element order, square-root count)` pairs; invariant under
/// group isomorphism, and a cheap pre-filter for power-graph isomorphism.
pub fn square_root_signature(g: &Group) -> Vec<(u32, u32)> {
    let mut sig: Vec<(u32, u32)> = (0..g.n())
        .map(|x| {
            (
                g.element_order(x) as u32,
                square_root_count(g, x) as u32,
            )
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// Adjacency of `P(G x A)` for a 2-group `G` and an elementary abelian
/// 2-group `A`, decided case by case without constructing the product's
/// power graph:
///
/// 1. `x = y = 1` and one of `a`, `b` is a power of the other;
/// 2. `x = y != 1` and one of `a`, `b` is an odd power of the other;
/// 3. `x != 1`, `y = 1` and `b` is an even power of `a`;
/// 4. symmetric to 3.
///
/// Vertices are encoded as `a * |A| + x`, matching
/// [`Group::direct_product`].
pub fn product_adjacency_2group(
    g: &Group,
    a: &Group,
) -> Result<PowerGraph, PowerGraphError> {
    if !g.n().is_power_of_two() {
        return Err(PowerGraphError::NotTwoGroup(g.n()));
    }
    if !a.n().is_power_of_two() || (1..a.n()).any(|x| a.element_order(x) != 2) {
        return Err(PowerGraphError::NotElementaryAbelianTwoGroup(a.n()));
    }
    let gn = g.n();
    let an = a.n();
    let n = gn * an;

    // Powers of each group element, split by exponent parity. For an element
    // of odd order every power has representatives of both parities.
    let mut odd_powers = BitMatrix::new(gn);
    let mut even_powers = BitMatrix::new(gn);
    for e in 0..gn {
        let order = g.element_order(e);
        let mut cur = e; // e^m starting at m = 1
        for m in 1..=order {
            if order % 2 == 1 || m % 2 == 1 {
                odd_powers.set(e, cur, true);
            }
            if order % 2 == 1 || m % 2 == 0 {
                even_powers.set(e, cur, true);
            }
            cur = g.mul(cur, e);
        }
    }

    let mut adj = BitMatrix::new(n);
    let mut connect = |u: usize, v: usize| {
        adj.set(u, v, true);
        adj.set(v, u, true);
    };
    for ga in 0..gn {
        for gb in 0..gn {
            for x in 0..an {
                for y in 0..an {
                    let u = ga * an + x;
                    let v = gb * an + y;
                    if u >= v {
                        continue;
                    }
                    let adjacent = if x == 0 && y == 0 {
                        odd_powers.get(ga, gb)
                            || even_powers.get(ga, gb)
                            || odd_powers.get(gb, ga)
                            || even_powers.get(gb, ga)
                    } else if x == y {
                        odd_powers.get(ga, gb) || odd_powers.get(gb, ga)
                    } else if y == 0 {
                        even_powers.get(ga, gb)
                    } else if x == 0 {
                        even_powers.get(gb, ga)
                    } else {
                        false
                    };
                    if adjacent {
                        connect(u, v);
                    }
                }
            }
        }
    }

    let mut orders = vec![0u32; n];
    for ga in 0..gn {
        for x in 0..an {
            let og = g.element_order(ga) as u32;
            let oa = a.element_order(x) as u32;
            orders[ga * an + x] = og * oa / gcd(og, oa);
        }
    }
    Ok(PowerGraph {
        n,
        directed: false,
        adj,
        orders,
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    /// Pairwise oracle: adjacency iff some exponent maps one onto the other.
    fn brute_force_power_graph(g: &Group, directed: bool) -> PowerGraph {
        let n = g.n();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let forward = (1..=n).any(|m| g.power(a, m) == b);
                if directed {
                    if forward {
                        edges.push((a, b));
                    }
                } else if a < b && (forward || (1..=n).any(|m| g.power(b, m) == a)) {
                    edges.push((a, b));
                }
            }
        }
        let mut p = PowerGraph::from_edges(n, &edges, directed);
        p.orders = (0..n).map(|x| g.element_order(x) as u32).collect();
        p
    }

    #[test]
    fn matches_brute_force_oracle() {
        for g in [
            construct::cyclic(12).unwrap(),
            construct::dihedral(8).unwrap(),
            construct::generalized_quaternion(8).unwrap(),
            construct::abelian(&[4, 4]).unwrap(),
            construct::dihedral(18).unwrap(),
            construct::heisenberg(3).unwrap(),
        ] {
            for directed in [false, true] {
                let fast = PowerGraph::of_group(&g, directed);
                let brute = brute_force_power_graph(&g, directed);
                assert_eq!(fast, brute, "{:?} directed={directed}", g.label());
            }
        }
    }

    #[test]
    fn symmetrization_invariant() {
        for g in [
            construct::cyclic(6).unwrap(),
            construct::dihedral(8).unwrap(),
            construct::generalized_quaternion(16).unwrap(),
        ] {
            let directed = PowerGraph::of_group(&g, true);
            let undirected = PowerGraph::of_group(&g, false);
            assert_eq!(directed.symmetrized(), undirected);
        }
    }

    #[test]
    fn identity_adjacent_to_all_and_no_self_loops() {
        let g = construct::dihedral(18).unwrap();
        let p = PowerGraph::of_group(&g, false);
        for v in 1..p.n() {
            assert!(p.has_edge(0, v));
        }
        for v in 0..p.n() {
            assert!(!p.has_edge(v, v));
        }
        assert!(p.is_connected());
    }

    #[test]
    fn complete_iff_cyclic_prime_power() {
        let k5 = PowerGraph::of_group(&construct::cyclic(5).unwrap(), false);
        assert!(k5.is_complete());
        assert_eq!(k5.edge_count(), 10);
        let c9 = PowerGraph::of_group(&construct::cyclic(9).unwrap(), false);
        assert!(c9.is_complete());
        let c6 = PowerGraph::of_group(&construct::cyclic(6).unwrap(), false);
        assert!(!c6.is_complete());
        let v4 = PowerGraph::of_group(&construct::abelian(&[2, 2]).unwrap(), false);
        assert!(!v4.is_complete());
    }

    #[test]
    fn dihedral_six_edge_set() {
        let p = PowerGraph::of_group(&construct::dihedral(6).unwrap(), false);
        // Identity to all five, plus the rotation pair {r, r^2}.
        assert_eq!(p.edge_count(), 6);
        assert!(p.has_edge(1, 2));
    }

    #[test]
    fn square_roots_in_conformal_pair() {
        let a = construct::abelian(&[4, 4]).unwrap();
        let mut counts: Vec<usize> = (0..a.n())
            .filter(|&x| a.element_order(x) == 2)
            .map(|x| square_root_count(&a, x))
            .collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![4, 4, 4]);

        let b = construct::cyclic(2)
            .unwrap()
            .direct_product(&construct::generalized_quaternion(8).unwrap())
            .unwrap();
        let mut counts: Vec<usize> = (0..b.n())
            .filter(|&x| b.element_order(x) == 2)
            .map(|x| square_root_count(&b, x))
            .collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![0, 0, 12]);
    }

    #[test]
    fn root_profile_counts_roots_by_order() {
        let c4 = construct::cyclic(4).unwrap();
        let profiles = root_profile(&c4);
        // The involution 2 has roots 1 and 3, both of order 4.
        assert_eq!(profiles[2].get(&4), Some(&2));
        // The identity is a power of everything.
        assert_eq!(profiles[0].values().sum::<u32>(), 3);
    }

    #[test]
    fn lemma_product_matches_direct_construction() {
        let d8 = construct::dihedral(8).unwrap();
        let c2 = construct::cyclic(2).unwrap();
        let fast = product_adjacency_2group(&d8, &c2).unwrap();
        let direct =
            PowerGraph::of_group(&d8.direct_product(&c2).unwrap(), false);
        assert_eq!(fast, direct);
    }

    #[test]
    fn lemma_case_examples() {
        // G = C4 (r = index 1), A = C2 (t = index 1).
        let c4 = construct::cyclic(4).unwrap();
        let c2 = construct::cyclic(2).unwrap();
        let p = product_adjacency_2group(&c4, &c2).unwrap();
        let v = |g: usize, x: usize| g * 2 + x;
        // (r, t) ~ (r^3, t): odd power.
        assert!(p.has_edge(v(1, 1), v(3, 1)));
        // (r, t) ~ (r^2, 1): even power.
        assert!(p.has_edge(v(1, 1), v(2, 0)));
        // (r, t) !~ (r^3, 1): r^3 is an odd power of r.
        assert!(!p.has_edge(v(1, 1), v(3, 0)));
    }

    #[test]
    fn lemma_rejects_bad_inputs() {
        let c3 = construct::cyclic(3).unwrap();
        let c2 = construct::cyclic(2).unwrap();
        assert!(matches!(
            product_adjacency_2group(&c3, &c2),
            Err(PowerGraphError::NotTwoGroup(3))
        ));
        let c4 = construct::cyclic(4).unwrap();
        assert!(matches!(
            product_adjacency_2group(&c2, &c4),
            Err(PowerGraphError::NotElementaryAbelianTwoGroup(4))
        ));
    }

    #[test]
    fn exports() {
        let p = PowerGraph::of_group(&construct::cyclic(5).unwrap(), false);
        let edges = p.to_edge_list();
        assert_eq!(edges.lines().count(), 10);
        let dot = p.to_dot("P");
        assert!(dot.starts_with("graph P {"));
        assert!(dot.contains("0 [label=\"1\"];"));
    }
}
