//! File formats and the `pg` command-line surface, exercised end to end
//! through the compiled binary.

use std::process::{Command, Output};

use powergraph::group::cayley::{parse_cayley, to_cayley_string};
use powergraph::scan::{load_catalog, load_group, parse_perm};
use powergraph::construct;

fn pg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn pg_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pg"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn cayley_format_roundtrip_and_strictness() {
    let g = construct::dihedral(8).unwrap();
    let text = to_cayley_string(&g);
    let back = parse_cayley(&text).unwrap();
    assert_eq!(back.n(), 8);
    assert_eq!(back.order_spectrum(), g.order_spectrum());

    // Ragged rows and out-of-range entries are rejected.
    assert!(parse_cayley("2\n0 1\n1").is_err());
    assert!(parse_cayley("2\n0 1\n1 5").is_err());
    // Identity must be element 0.
    assert!(parse_cayley("2\n1 0\n0 1").is_err());
}

#[test]
fn perm_format_closure() {
    // A 3-cycle generates C3.
    let g = parse_perm("3\n1 2 0\n").unwrap();
    assert_eq!(g.n(), 3);
    // Two generators: a 4-cycle and a transposition generate S4.
    let s4 = parse_perm("4\n1 2 3 0\n1 0 2 3\n").unwrap();
    assert_eq!(s4.n(), 24);
    // Not a permutation: repeated image.
    assert!(parse_perm("3\n1 1 0\n").is_err());
    // Wrong length.
    assert!(parse_perm("3\n1 0\n").is_err());
}

#[test]
fn load_group_resolves_files_and_expressions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.cayley");
    std::fs::write(&path, to_cayley_string(&construct::dihedral(8).unwrap())).unwrap();
    let from_file = load_group(path.to_str().unwrap()).unwrap();
    assert_eq!(from_file.n(), 8);
    let from_expr = load_group("quaternion:8").unwrap();
    assert_eq!(from_expr.n(), 8);
    assert!(load_group("no-such-thing").is_err());
}

#[test]
fn catalog_manifest_loading() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("c4.cayley"),
        to_cayley_string(&construct::cyclic(4).unwrap()),
    )
    .unwrap();
    std::fs::write(
        dir.path().join("v.fp"),
        "gens: a b\nrel: a^2\nrel: b^2\nrel: a b = b a\n",
    )
    .unwrap();
    let manifest = dir.path().join("groups.manifest");
    std::fs::write(
        &manifest,
        "# order-4 corpus\ncomplete-order 4\nC4 c4.cayley\nV4 v.fp\nbroken missing.cayley\n",
    )
    .unwrap();
    let catalog = load_catalog(&manifest).unwrap();
    assert_eq!(catalog.entries.len(), 2);
    assert!(catalog.complete_orders.contains(&4));
    assert_eq!(catalog.errors.len(), 1);
    assert_eq!(catalog.errors[0].0, "broken");

    // Duplicate ids are a manifest error.
    let dup = dir.path().join("dup.manifest");
    std::fs::write(&dup, "A cyclic:2\nA cyclic:3\n").unwrap();
    assert!(load_catalog(&dup).is_err());
}

#[test]
fn cli_spectrum_and_conformal() {
    let out = pg(&["spectrum", "dihedral:8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("{1:1, 2:5, 4:2}"));

    assert_eq!(pg(&["conformal", "abelian:4x4", "product:(cyclic:2,quaternion:8)"])
        .status
        .code(), Some(0));
    assert_eq!(pg(&["conformal", "cyclic:8", "dihedral:8"]).status.code(), Some(1));
    assert_eq!(pg(&["conformal", "cyclic:8", "bogus"]).status.code(), Some(2));
}

#[test]
fn cli_pgiso_and_giso_exit_codes() {
    // Isomorphic power graphs: exit 0 and a printed bijection.
    let out = pg(&["pgiso", "abelian:3x3x3", "heisenberg:3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("power graphs isomorphic"));
    assert!(text.contains("0->"));

    assert_eq!(pg(&["pgiso", "abelian:4x4", "product:(cyclic:2,quaternion:8)"])
        .status
        .code(), Some(1));

    assert_eq!(pg(&["giso", "cyclic:6", "product:(cyclic:2,cyclic:3)"]).status.code(), Some(0));
    assert_eq!(pg(&["giso", "dihedral:8", "quaternion:8"]).status.code(), Some(1));
}

#[test]
fn cli_graph_exports() {
    // P(C5) is complete: 10 edges.
    let out = pg(&["graph", "cyclic:5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 10);

    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("c5.dot");
    let out = pg(&["graph", "cyclic:5", "--dot", dot.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches(" -- ").count(), 10);

    let directed = pg(&["graph", "cyclic:3", "--directed"]);
    assert!(stdout(&directed).lines().count() > 0);
}

#[test]
fn cli_coset_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let fp = dir.path().join("s3.fp");
    std::fs::write(&fp, "gens: r s\nrel: r^3\nrel: s^2\nrel: (r s)^2\n").unwrap();
    let cayley = dir.path().join("s3.cayley");
    let out = pg(&[
        "coset",
        fp.to_str().unwrap(),
        "--out",
        cayley.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("6 live cosets"));
    let g = parse_cayley(&std::fs::read_to_string(&cayley).unwrap()).unwrap();
    assert_eq!(g.n(), 6);
    assert!(!g.is_abelian());

    // Overflow is an error (free abelian group on two generators).
    let free = dir.path().join("free.fp");
    std::fs::write(&free, "gens: a b\nrel: a b a^-1 b^-1\n").unwrap();
    let out = pg(&["coset", free.to_str().unwrap(), "--limit", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_scan_order_classification() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("order8.manifest");
    std::fs::write(
        &manifest,
        "complete-order 8\n\
         c8 cyclic:8\n\
         c2x4 abelian:2x4\n\
         e8 abelian:2x2x2\n\
         d8 dihedral:8\n\
         q8 quaternion:8\n",
    )
    .unwrap();
    let json = dir.path().join("report.json");
    let out = pg(&[
        "scan",
        "--order",
        "8",
        "--manifest",
        manifest.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("corpus-complete: yes"));
    assert!(text.contains("in_S=true in_Sbar=true"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["order"], 8);
    assert_eq!(report["in_s"], true);
    assert_eq!(report["in_sbar"], true);
    assert_eq!(report["pairs"].as_array().unwrap().len(), 10);
}

#[test]
fn cli_order_cap_env_var() {
    let out = pg_env(&["spectrum", "cyclic:64"], "PG_CAP", "32");
    assert_eq!(out.status.code(), Some(2));
    let ok = pg_env(&["spectrum", "cyclic:64"], "PG_CAP", "128");
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn cli_verify_paper_negative_control() {
    let out = pg(&["verify-paper", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL order72-reference-spectra"));
}

#[test]
fn dot_export_labels_orders() {
    let g = construct::cyclic(4).unwrap();
    let p = powergraph::PowerGraph::of_group(&g, false);
    let dot = p.to_dot("c4");
    assert!(dot.contains("label=\"1\""));
    assert!(dot.contains("label=\"4\""));
}
