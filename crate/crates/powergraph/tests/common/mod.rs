//! Independent oracles shared by the integration suites. Everything here is
//! deliberately naive: results are trusted because the code is simple, not
//! because it is fast.
#![allow(dead_code)] // each suite uses its own subset of the oracles

use powergraph::{Group, PowerGraph};

/// Power graph by the definition, one pair at a time: `a ~ b` iff some
/// exponent maps one onto the other.
pub fn brute_force_power_graph(g: &Group, directed: bool) -> PowerGraph {
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
    PowerGraph::from_edges(n, &edges, directed)
}

/// Graph isomorphism by exhaustive permutation search; practical to about 8
/// vertices.
pub fn brute_force_graph_iso(p1: &PowerGraph, p2: &PowerGraph) -> bool {
    if p1.n() != p2.n() || p1.is_directed() != p2.is_directed() {
        return false;
    }
    let n = p1.n();
    assert!(n <= 8, "exhaustive search is meant for tiny graphs");
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |perm| {
        (0..n).all(|u| (0..n).all(|v| p1.has_edge(u, v) == p2.has_edge(perm[u], perm[v])))
    })
}

/// Heap-style enumeration; returns true as soon as `accept` does.
fn permutations(perm: &mut Vec<usize>, k: usize, accept: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return accept(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, accept) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Deterministic xorshift64* stream, independent of the library's RNG-free
/// internals.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (self.next() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }
}
