//! Group isomorphism by backtracking over generator images.

use powergraph::construct;
use powergraph::group::are_isomorphic_groups;

fn main() {
    // C6 is C2 x C3 in disguise.
    let c6 = construct::cyclic(6).unwrap();
    let c2x3 = construct::cyclic(2)
        .unwrap()
        .direct_product(&construct::cyclic(3).unwrap())
        .unwrap();
    let mapping = are_isomorphic_groups(&c6, &c2x3).unwrap();
    println!("C6 = C2 x C3, element mapping: {mapping:?}");

    // D8 and Q8 have the same order and both are non-abelian 2-groups, but
    // their spectra differ (5 vs 1 involutions).
    let d8 = construct::dihedral(8).unwrap();
    let q8 = construct::generalized_quaternion(8).unwrap();
    println!("D8 spectrum {}", d8.order_spectrum());
    println!("Q8 spectrum {}", q8.order_spectrum());
    println!("D8 = Q8? {}", are_isomorphic_groups(&d8, &q8).is_some());

    // The generalized dihedral group of a cyclic group is the ordinary
    // dihedral group.
    let gd = construct::parse_construction("gendihedral:6").unwrap();
    let d12 = construct::dihedral(12).unwrap();
    println!("Dih(C6) = D12? {}", are_isomorphic_groups(&gd, &d12).is_some());
}
