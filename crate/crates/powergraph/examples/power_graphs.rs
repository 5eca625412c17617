//! Construct power graphs and read off their structure.

use powergraph::construct;
use powergraph::power_graph::{root_profile, square_root_count};
use powergraph::PowerGraph;

fn main() {
    // P(C5) is complete: in a cyclic group of prime order, every non-identity
    // element generates the whole group.
    let c5 = construct::cyclic(5).unwrap();
    let p5 = PowerGraph::of_group(&c5, false);
    println!("P(C5): {} vertices, {} edges, complete={}", p5.n(), p5.edge_count(), p5.is_complete());

    // P(D8) is a star plus one triangle-ish patch: reflections attach only to
    // the identity.
    let d8 = construct::dihedral(8).unwrap();
    let p8 = PowerGraph::of_group(&d8, false);
    println!("P(D8): {} edges, connected={}, complete={}", p8.edge_count(), p8.is_connected(), p8.is_complete());
    for v in 0..p8.n() {
        println!("  vertex {v} (order {}): degree {}", p8.vertex_order(v), p8.degree(v));
    }

    // Directed variant: an arc a -> b says b is a power of a.
    let directed = PowerGraph::of_group(&d8, true);
    println!("directed P(D8) arcs:\n{}", directed.to_edge_list());

    // Square-root diagnostics distinguish groups with equal spectra.
    let q8 = construct::generalized_quaternion(8).unwrap();
    for (name, g) in [("D8", &d8), ("Q8", &q8)] {
        let counts: Vec<usize> = (0..g.n())
            .filter(|&x| g.element_order(x) == 2)
            .map(|x| square_root_count(g, x))
            .collect();
        println!("{name}: square-root counts at involutions {counts:?}");
    }

    // Root profiles: how many roots of each order an element has.
    let profiles = root_profile(&q8);
    println!("Q8 root profile of the central involution: {:?}", profiles[
        (0..q8.n()).find(|&x| q8.element_order(x) == 2).unwrap()
    ]);

    // DOT export for visualization.
    println!("\n{}", p5.to_dot("P_C5"));
}
