//! Classify an order into the sets S (conformal implies isomorphic) and
//! Sbar (power-graph isomorphic implies isomorphic), relative to a corpus.

use powergraph::construct::parse_construction;
use powergraph::scan::verify::{realize_presentation, PRESENTATION_D8_CIRC_C4};
use powergraph::scan::{classify_order, Catalog, CatalogEntry};

fn entry(id: &str, spec: &str) -> CatalogEntry {
    let group = parse_construction(spec).unwrap();
    CatalogEntry {
        id: id.to_string(),
        order: group.n(),
        source: spec.to_string(),
        group,
    }
}

fn main() {
    // The complete corpus of the five groups of order 8.
    let mut catalog = Catalog::default();
    catalog.entries = vec![
        entry("c8", "cyclic:8"),
        entry("c2x4", "abelian:2x4"),
        entry("e8", "abelian:2x2x2"),
        entry("d8", "dihedral:8"),
        entry("q8", "quaternion:8"),
    ];
    catalog.complete_orders.insert(8);
    print!("{}", classify_order(&catalog, 8).unwrap());

    // An order-16 corpus containing a witness pair: the classification drops
    // 16 from Sbar.
    let d8c4 = realize_presentation(PRESENTATION_D8_CIRC_C4, "central:d8.c4").unwrap();
    let mut catalog = Catalog::default();
    catalog.entries = vec![
        entry("c2x2x4", "abelian:2x2x4"),
        CatalogEntry {
            id: "d8.c4".into(),
            order: d8c4.n(),
            source: "embedded presentation".into(),
            group: d8c4,
        },
        entry("c16", "cyclic:16"),
        entry("c4x4", "abelian:4x4"),
    ];
    print!("\n{}", classify_order(&catalog, 16).unwrap());
}
