//! Iterated color refinement with a canonical class order.
//!
//! Two vertices stay in the same class only if they have identical multisets
//! of neighbor colors (for digraphs, identical in- and out-multisets). New
//! class ids are assigned by sorted signature, so the ordered partition
//! depends only on the graph and the initial coloring, not on vertex order.

use crate::power_graph::PowerGraph;

/// Vertex coloring with contiguous class ids `0..num_classes`, ordered
/// canonically under refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<u32>,
    pub num_classes: u32,
}

impl Coloring {
    pub fn uniform(n: usize) -> Coloring {
        Coloring {
            color: vec![0; n],
            num_classes: 1,
        }
    }

    /// Initial coloring by degree (digraphs: by out/in degree pair), classes
    /// ordered by ascending key.
    pub fn by_degree(p: &PowerGraph) -> Coloring {
        let keys: Vec<(usize, usize)> = (0..p.n())
            .map(|v| {
                if p.is_directed() {
                    (p.degree(v), p.in_degree(v))
                } else {
                    (p.degree(v), 0)
                }
            })
            .collect();
        let mut sorted: Vec<(usize, usize)> = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let color: Vec<u32> = keys
            .iter()
            .map(|k| sorted.binary_search(k).unwrap() as u32)
            .collect();
        Coloring {
            color,
            num_classes: sorted.len() as u32,
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.num_classes as usize == self.color.len()
    }

    /// Class members grouped by class id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes as usize];
        for (v, &c) in self.color.iter().enumerate() {
            out[c as usize].push(v);
        }
        out
    }

    /// Split `vertex` off into its own class, placed immediately before the
    /// remainder of its old class.
    pub fn individualize(&self, vertex: usize) -> Coloring {
        let old = self.color[vertex];
        let color = self
            .color
            .iter()
            .enumerate()
            .map(|(v, &c)| {
                if v == vertex {
                    old
                } else if c >= old {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        Coloring {
            color,
            num_classes: self.num_classes + 1,
        }
    }
}

/// Refine to the coarsest stable coloring at least as fine as `initial`.
/// Idempotent: refining a stable coloring returns it unchanged.
pub fn color_refinement(p: &PowerGraph, initial: &Coloring) -> Coloring {
    let n = p.n();
    let mut current = initial.clone();
    loop {
        // Signature: current color plus sorted neighbor-color multisets.
        let mut signatures: Vec<(u32, Vec<u32>, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut out_colors: Vec<u32> =
                p.adjacency().row_iter(v).map(|u| current.color[u]).collect();
            out_colors.sort_unstable();
            let mut in_colors = Vec::new();
            if p.is_directed() {
                in_colors = (0..n)
                    .filter(|&u| p.has_edge(u, v))
                    .map(|u| current.color[u])
                    .collect();
                in_colors.sort_unstable();
            }
            signatures.push((current.color[v], out_colors, in_colors));
        }
        let mut sorted = signatures.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() as u32 == current.num_classes {
            return current;
        }
        let color = signatures
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u32)
            .collect();
        current = Coloring {
            color,
            num_classes: sorted.len() as u32,
        };
    }
}
