//! Individualization-refinement search for the canonical labeling.
//!
//! Besides the usual trace-based pruning, the search learns automorphisms:
//! whenever a leaf reproduces the current best certificate, the composition
//! of the two leaf orderings is a candidate automorphism. Verified
//! automorphisms are used in two ways. First, a branch whose candidate vertex
//! is the image of an already-explored candidate under an automorphism fixing
//! the current branching prefix is skipped. Second, on discovering such a
//! leaf the search jumps back to the depth where its branch diverged from the
//! best leaf's branch: the automorphism maps the diverged subtree onto an
//! already-explored one, so nothing new can be found below.

use super::refine::{color_refinement, Coloring};
use super::{CanonError, CanonicalForm};
use crate::power_graph::PowerGraph;

const MAX_STORED_AUTOMORPHISMS: usize = 64;

pub(super) fn run(
    p: &PowerGraph,
    budget: u64,
) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    let initial = color_refinement(p, &Coloring::by_degree(p));
    let mut search = Search {
        graph: p,
        best: None,
        best_path: Vec::new(),
        autos: Vec::new(),
        backjump: None,
        nodes: 0,
        budget,
    };
    let mut path = Vec::new();
    search.dfs(initial, Vec::new(), &mut path)?;
    let leaf = search.best.expect("search always reaches a leaf");
    let perm = leaf.perm.iter().map(|&x| x as usize).collect();
    Ok((CanonicalForm { bytes: leaf.bytes }, perm))
}

struct Leaf {
    trace: Vec<u64>,
    bytes: Vec<u8>,
    perm: Vec<u32>,
}

struct Search<'a> {
    graph: &'a PowerGraph,
    best: Option<Leaf>,
    /// Vertices individualized along the best leaf's branch.
    best_path: Vec<usize>,
    /// Verified graph automorphisms learned from equal-certificate leaves.
    autos: Vec<Vec<usize>>,
    /// Unwind-to depth after an equal-certificate leaf.
    backjump: Option<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn dfs(
        &mut self,
        coloring: Coloring,
        mut trace: Vec<u64>,
        path: &mut Vec<usize>,
    ) -> Result<(), CanonError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(CanonError::SearchBudgetExceeded(self.budget));
        }
        let stable = color_refinement(self.graph, &coloring);
        trace.push(node_invariant(self.graph, &stable));
        if let Some(best) = &self.best {
            let min = trace.len().min(best.trace.len());
            match trace[..min].cmp(&best.trace[..min]) {
                std::cmp::Ordering::Greater => return Ok(()),
                std::cmp::Ordering::Equal if trace.len() > best.trace.len() => return Ok(()),
                _ => {}
            }
        }
        if stable.is_discrete() {
            self.visit_leaf(trace, stable, path);
            return Ok(());
        }
        // Target cell: the first largest non-singleton class.
        let classes = stable.classes();
        let mut target: Option<&Vec<usize>> = None;
        for class in &classes {
            // First largest non-singleton class (first wins ties).
            if class.len() > 1 && target.is_none_or(|t| class.len() > t.len()) {
                target = Some(class);
            }
        }
        let target = target.expect("non-discrete coloring has a non-singleton class");
        let mut tried: Vec<usize> = Vec::new();
        for &v in target {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if self.orbit_of_tried(v, &tried, path) {
                continue;
            }
            tried.push(v);
            path.push(v);
            let result = self.dfs(stable.individualize(v), trace.clone(), path);
            path.pop();
            result?;
            if let Some(depth) = self.backjump {
                if path.len() > depth {
                    // Still unwinding toward the divergence point.
                    return Ok(());
                }
                self.backjump = None;
            }
        }
        Ok(())
    }

    fn visit_leaf(&mut self, trace: Vec<u64>, stable: Coloring, path: &[usize]) {
        let bytes = serialize(self.graph, &stable.color);
        let better = match &self.best {
            None => true,
            Some(best) => (&trace, &bytes) < (&best.trace, &best.bytes),
        };
        if better {
            self.best = Some(Leaf {
                trace,
                bytes,
                perm: stable.color.clone(),
            });
            self.best_path = path.to_vec();
            return;
        }
        let best = self.best.as_ref().expect("non-better leaf implies a best");
        if trace != best.trace || bytes != best.bytes {
            return;
        }
        // Same certificate from a different branch: the orderings compose to
        // an automorphism. Verify before trusting it.
        let n = self.graph.n();
        let mut current_at = vec![0usize; n];
        for (v, &pos) in stable.color.iter().enumerate() {
            current_at[pos as usize] = v;
        }
        let sigma: Vec<usize> = (0..n).map(|v| current_at[best.perm[v] as usize]).collect();
        if !self.is_automorphism(&sigma) {
            return;
        }
        let divergence = path
            .iter()
            .zip(&self.best_path)
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| path.len().min(self.best_path.len()));
        // The jump is only sound if sigma fixes the shared prefix pointwise
        // and maps the best branch's diverging choice to ours.
        let shared_fixed = (0..divergence).all(|i| sigma[path[i]] == path[i]);
        let maps_divergence = divergence < path.len()
            && divergence < self.best_path.len()
            && sigma[self.best_path[divergence]] == path[divergence];
        if self.autos.len() < MAX_STORED_AUTOMORPHISMS {
            self.autos.push(sigma);
        }
        if shared_fixed && maps_divergence {
            self.backjump = Some(divergence);
        }
    }

    /// True when a stored automorphism fixing the branching prefix maps `v`
    /// into the tried set (in either direction), so `v`'s subtree repeats an
    /// explored one.
    fn orbit_of_tried(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        self.autos.iter().any(|sigma| {
            path.iter().all(|&p| sigma[p] == p)
                && (tried.contains(&sigma[v]) || tried.iter().any(|&u| sigma[u] == v))
        })
    }

    fn is_automorphism(&self, sigma: &[usize]) -> bool {
        let n = self.graph.n();
        for u in 0..n {
            for v in 0..n {
                if self.graph.has_edge(u, v) != self.graph.has_edge(sigma[u], sigma[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// True when swapping `u` and `v` is an automorphism; individualizing one
    /// twin explores the same subtree as the other.
    fn twins(&self, u: usize, v: usize) -> bool {
        let adj = self.graph.adjacency();
        if !adj.rows_equal_ignoring(u, v) {
            return false;
        }
        if self.graph.is_directed() {
            for c in 0..self.graph.n() {
                if c == u || c == v {
                    continue;
                }
                if adj.get(c, u) != adj.get(c, v) {
                    return false;
                }
            }
            if adj.get(u, v) != adj.get(v, u) {
                return false;
            }
        }
        true
    }
}

/// Label-invariant hash of a stable coloring: class sizes plus the class
/// adjacency signature (edge counts from a class representative into every
/// class; well defined by stability).
fn node_invariant(p: &PowerGraph, stable: &Coloring) -> u64 {
    let mut h = Fnv::new();
    h.write(stable.num_classes as u64);
    let classes = stable.classes();
    for class in &classes {
        h.write(class.len() as u64);
        let rep = class[0];
        let mut counts = vec![0u32; stable.num_classes as usize];
        for u in p.adjacency().row_iter(rep) {
            counts[stable.color[u] as usize] += 1;
        }
        for c in counts {
            h.write(c as u64);
        }
        if p.is_directed() {
            let mut in_counts = vec![0u32; stable.num_classes as usize];
            for u in 0..p.n() {
                if p.has_edge(u, rep) {
                    in_counts[stable.color[u] as usize] += 1;
                }
            }
            for c in in_counts {
                h.write(c as u64);
            }
        }
    }
    h.finish()
}

/// Certificate bytes: `n` as a big-endian u64, then row-major adjacency bits
/// of the reordered graph (upper triangle for graphs, full matrix for
/// digraphs), packed most-significant-bit first.
fn serialize(p: &PowerGraph, position_of: &[u32]) -> Vec<u8> {
    let n = p.n();
    let mut vertex_at = vec![0usize; n];
    for (v, &pos) in position_of.iter().enumerate() {
        vertex_at[pos as usize] = v;
    }
    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(n as u64).to_be_bytes());
    let mut acc = 0u8;
    let mut nbits = 0;
    let mut push_bit = |bit: bool, bytes: &mut Vec<u8>| {
        acc = (acc << 1) | u8::from(bit);
        nbits += 1;
        if nbits == 8 {
            bytes.push(acc);
            acc = 0;
            nbits = 0;
        }
    };
    for i in 0..n {
        let start = if p.is_directed() { 0 } else { i + 1 };
        for j in start..n {
            if i != j {
                push_bit(p.has_edge(vertex_at[i], vertex_at[j]), &mut bytes);
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    bytes
}

/// FNV-1a, fixed keys, deterministic across runs and platforms.
struct Fnv(u64);

impl Fnv {
    fn new() -> Fnv {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn write(&mut self, value: u64) {
        for b in value.to_le_bytes() {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}
