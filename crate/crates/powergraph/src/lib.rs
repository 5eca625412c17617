//! Finite groups and their power graphs.
//!
//! The power graph of a finite group `G` has the elements of `G` as vertices,
//! with `a ~ b` whenever one of the two is a positive power of the other.
//! This crate builds finite groups (multiplication tables, standard
//! constructions, finite presentations realized by coset enumeration),
//! constructs their directed and undirected power graphs, and decides both
//! group isomorphism and power-graph isomorphism, the latter through a
//! canonical-labeling kernel.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run --release --example build_groups
//! cargo run --release --example coset_enumeration
//! cargo run --release --example power_graphs
//! cargo run --release --example canonical_forms
//! cargo run --release --example group_isomorphism
//! cargo run --release --example conformal_witnesses
//! cargo run --release --example order_classification
//! ```
//!
//! A thin CLI named `pg` wraps the same entry points (`pg spectrum`,
//! `pg graph`, `pg pgiso`, `pg coset`, `pg scan`, `pg verify-paper`, ...).

pub mod bitmat;
pub mod canon;
pub mod construct;
pub mod fp;
pub mod group;
pub mod power_graph;
pub mod scan;

pub use canon::{are_isomorphic_graphs, canonical_form, CanonicalForm, Coloring};
pub use group::{are_isomorphic_groups, Group, OrderSpectrum, Subgroup};
pub use power_graph::PowerGraph;

use std::sync::OnceLock;

/// Default cap on group orders, overridable through the `PG_CAP` env var.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Maximum group order accepted by constructors and products.
pub fn order_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("PG_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_ORDER_CAP)
    })
}
