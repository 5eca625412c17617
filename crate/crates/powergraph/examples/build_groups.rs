//! Build groups from the standard construction families and inspect them.

use powergraph::construct;

fn main() {
    let specs = [
        "cyclic:12",
        "abelian:2x2x4",
        "dihedral:8",
        "quaternion:16",
        "heisenberg:3",
        "gendihedral:3x3",
        "product:(cyclic:3,dihedral:6)",
    ];
    for spec in specs {
        let g = construct::parse_construction(spec).unwrap();
        println!(
            "{spec:32} order {:4}  abelian={:5}  cyclic={:5}  spectrum {}",
            g.n(),
            g.is_abelian(),
            g.is_cyclic(),
            g.order_spectrum()
        );
    }

    // Every group is validated on construction: Latin-square table, identity
    // at index 0, associativity, inverses.
    let d8 = construct::dihedral(8).unwrap();
    println!("\nD8 element orders: {:?}", (0..8).map(|x| d8.element_order(x)).collect::<Vec<_>>());
    println!("D8 center size: {}", d8.center().len());
    println!("D8 generators (greedy): {:?}", d8.greedy_generators());
}
