//! The separation hierarchy: isomorphic > power-graph isomorphic > conformal,
//! with the witness pairs that make each inclusion strict.

use powergraph::canon::are_isomorphic_graphs;
use powergraph::construct;
use powergraph::group::are_isomorphic_groups;
use powergraph::power_graph::square_root_count;
use powergraph::scan::verify::{
    realize_presentation, PRESENTATION_ORDER72_A, PRESENTATION_ORDER72_B,
};
use powergraph::{Group, PowerGraph};

fn report(name: &str, a: &Group, b: &Group) {
    let conformal = a.order_spectrum() == b.order_spectrum();
    let pg = are_isomorphic_graphs(
        &PowerGraph::of_group(a, false),
        &PowerGraph::of_group(b, false),
    )
    .unwrap()
    .is_some();
    let iso = are_isomorphic_groups(a, b).is_some();
    println!("{name:40} conformal={conformal:5} pg-iso={pg:5} iso={iso:5}");
}

fn main() {
    // Conformal but the power graphs already differ.
    let c4x4 = construct::abelian(&[4, 4]).unwrap();
    let c2q8 = construct::cyclic(2)
        .unwrap()
        .direct_product(&construct::generalized_quaternion(8).unwrap())
        .unwrap();
    report("C4xC4 vs C2xQ8 (order 16)", &c4x4, &c2q8);
    let counts = |g: &Group| -> Vec<usize> {
        (0..g.n())
            .filter(|&x| g.element_order(x) == 2)
            .map(|x| square_root_count(g, x))
            .collect()
    };
    println!("    square roots at involutions: {:?} vs {:?}", counts(&c4x4), counts(&c2q8));

    // Power graphs agree but the groups differ.
    let e27 = construct::abelian(&[3, 3, 3]).unwrap();
    let h27 = construct::heisenberg(3).unwrap();
    report("C3^3 vs Heisenberg(3) (order 27)", &e27, &h27);

    // The same collapse, pushed through a coprime direct product.
    let c2 = construct::cyclic(2).unwrap();
    report(
        "C3^3 x C2 vs Heis(3) x C2 (order 54)",
        &e27.direct_product(&c2).unwrap(),
        &h27.direct_product(&c2).unwrap(),
    );

    // Conformal order-72 pair where even the power graphs tell them apart.
    let g = realize_presentation(PRESENTATION_ORDER72_A, "order72:a").unwrap();
    let h = realize_presentation(PRESENTATION_ORDER72_B, "order72:b").unwrap();
    report("the order-72 presentation pair", &g, &h);
    println!("    shared spectrum: {}", g.order_spectrum());
}
