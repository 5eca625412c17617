//! Property-based invariants over randomly chosen groups and graphs.

mod common;

use proptest::prelude::*;

use powergraph::canon::canonical_form;
use powergraph::construct;
use powergraph::group::cayley::{parse_cayley, to_cayley_string};
use powergraph::{Group, PowerGraph};

/// Strategy: a modest group from the construction families.
fn small_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..=24).prop_map(|n| construct::cyclic(n).unwrap()),
        (3usize..=12).prop_map(|m| construct::dihedral(2 * m).unwrap()),
        (2usize..=4).prop_map(|k| construct::generalized_quaternion(1 << (k + 1)).unwrap()),
        proptest::collection::vec(2usize..=6, 1..=3)
            .prop_map(|fs| construct::abelian(&fs).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectrum_counts_every_element(g in small_group()) {
        let s = g.order_spectrum();
        prop_assert_eq!(s.total() as usize, g.n());
        // Element orders divide the group order.
        for &(order, _) in &s.entries {
            prop_assert_eq!(g.n() % order as usize, 0);
        }
    }

    #[test]
    fn cayley_roundtrip(g in small_group()) {
        let text = to_cayley_string(&g);
        let back = parse_cayley(&text).unwrap();
        prop_assert_eq!(g.n(), back.n());
        for i in 0..g.n() {
            for j in 0..g.n() {
                prop_assert_eq!(g.mul(i, j), back.mul(i, j));
            }
        }
    }

    #[test]
    fn power_graph_structural_invariants(g in small_group()) {
        let p = PowerGraph::of_group(&g, false);
        prop_assert!(p.is_connected());
        // The identity is adjacent to every other element.
        if g.n() > 1 {
            prop_assert_eq!(p.degree(0), g.n() - 1);
        }
        // Elements of the same cyclic subgroup are mutually adjacent.
        for x in 0..g.n() {
            for y in g.cyclic_subgroup(x) {
                if x != y {
                    prop_assert!(p.has_edge(x, y));
                }
            }
        }
        // The directed variant symmetrizes to the undirected one.
        prop_assert_eq!(PowerGraph::of_group(&g, true).symmetrized(), p);
    }

    #[test]
    fn power_graph_matches_oracle(g in small_group()) {
        for directed in [false, true] {
            let fast = PowerGraph::of_group(&g, directed);
            let brute = common::brute_force_power_graph(&g, directed);
            prop_assert_eq!(fast.adjacency(), brute.adjacency());
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        g in small_group(),
        seed in any::<u64>(),
    ) {
        let p = PowerGraph::of_group(&g, false);
        let reference = canonical_form(&p).unwrap();
        let mut rng = common::Rng(seed | 1);
        for _ in 0..3 {
            let perm = rng.permutation(p.n());
            prop_assert_eq!(canonical_form(&p.relabel(&perm)).unwrap(), reference.clone());
        }
    }

    #[test]
    fn direct_product_spectrum_composes_by_lcm(
        a in 1usize..=8,
        b in 1usize..=8,
    ) {
        fn lcm(a: usize, b: usize) -> usize {
            fn gcd(a: usize, b: usize) -> usize {
                if b == 0 { a } else { gcd(b, a % b) }
            }
            a / gcd(a, b) * b
        }
        let ga = construct::cyclic(a).unwrap();
        let gb = construct::cyclic(b).unwrap();
        let p = ga.direct_product(&gb).unwrap();
        for i in 0..ga.n() {
            for j in 0..gb.n() {
                let e = i * gb.n() + j;
                prop_assert_eq!(
                    p.element_order(e),
                    lcm(ga.element_order(i), gb.element_order(j))
                );
            }
        }
    }

    #[test]
    fn isomorphism_mapping_preserves_products(g in small_group(), seed in any::<u64>()) {
        // A group is isomorphic to its own relabeling, and the mapping
        // returned is a homomorphism on the full table.
        let mut rng = common::Rng(seed | 1);
        let perm = rng.permutation(g.n());
        // Relabel the Cayley table with the identity kept at index 0.
        let mut perm = perm;
        let zero_pos = perm.iter().position(|&x| x == 0).unwrap();
        perm.swap(0, zero_pos);
        let inv: Vec<usize> = {
            let mut inv = vec![0; g.n()];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            inv
        };
        let mut flat = vec![0u32; g.n() * g.n()];
        for i in 0..g.n() {
            for j in 0..g.n() {
                flat[i * g.n() + j] = inv[g.mul(perm[i], perm[j])] as u32;
            }
        }
        let h = Group::validate_flat(g.n(), flat).unwrap();
        let mapping = powergraph::group::are_isomorphic_groups(&g, &h).unwrap();
        for x in 0..g.n() {
            for y in 0..g.n() {
                prop_assert_eq!(
                    mapping[g.mul(x, y)] as usize,
                    h.mul(mapping[x] as usize, mapping[y] as usize)
                );
            }
        }
    }
}
