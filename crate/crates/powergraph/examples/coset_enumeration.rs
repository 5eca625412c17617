//! Realize finitely presented groups by Todd-Coxeter coset enumeration.

use powergraph::fp::{parse_presentation, realize, todd_coxeter, DEFAULT_MAX_COSETS};
use powergraph::scan::verify::{PRESENTATION_ORDER72_A, PRESENTATION_ORDER72_B};

fn main() {
    let s4 = "\
gens: a b
rel: a^4
rel: b^2
rel: (a b)^3
";
    let p = parse_presentation(s4).unwrap();
    let table = todd_coxeter(&p, DEFAULT_MAX_COSETS).unwrap();
    println!("<a, b | a^4, b^2, (ab)^3> closes with {} cosets", table.rows.len());
    let g = realize(&table).unwrap();
    println!("realized group: order {}, spectrum {}", g.n(), g.order_spectrum());

    // The two embedded order-72 presentations: same order, same spectrum,
    // different groups (see the conformal_witnesses example).
    for (name, text) in [("first", PRESENTATION_ORDER72_A), ("second", PRESENTATION_ORDER72_B)] {
        let p = parse_presentation(text).unwrap();
        let t = todd_coxeter(&p, DEFAULT_MAX_COSETS).unwrap();
        let g = realize(&t).unwrap();
        println!("{name} order-72 presentation: order {}, spectrum {}", g.n(), g.order_spectrum());
    }
}
