//! Self-contained verification battery over a built-in corpus of groups.
//!
//! Each check re-derives a structural fact from scratch (spectra, canonical
//! forms, isomorphisms, series) and compares it against pinned expectations.
//! The report lists one PASS/FAIL line per check; `corrupt_reference` flips a
//! reference table so the battery demonstrably fails when fed bad data.

use std::collections::BTreeMap;

use crate::canon::canonical_form;
use crate::construct::parse_construction;
use crate::fp::{parse_presentation, realize, todd_coxeter, DEFAULT_MAX_COSETS};
use crate::group::{are_isomorphic_groups, Group, OrderSpectrum};
use crate::power_graph::{product_adjacency_2group, square_root_count, PowerGraph};
use crate::scan::ScanError;

/// Central product of a dihedral group of order 8 with a cyclic group of
/// order 4, amalgamating the centers; order 16.
pub const PRESENTATION_D8_CIRC_C4: &str = "\
gens: a b c
rel: a^4
rel: b^2
rel: (a b)^2
rel: c^2 = a^2
rel: a c = c a
rel: b c = c b
";

/// Order 72: (C3 x C3) semidirect a dihedral group of order 8, where x
/// inverts both translations and y centralizes them.
pub const PRESENTATION_ORDER72_A: &str = "\
gens: a b x y
rel: a^3
rel: b^3
rel: x^2
rel: y^2
rel: (x a)^2
rel: (x b)^2
rel: a b = b a
rel: a y = y a
rel: b y = y b
rel: (x y)^4
";

/// Order 72: (C3 x C3) semidirect a dihedral group of order 8, where y swaps
/// the two translations and the central involution inverts both.
pub const PRESENTATION_ORDER72_B: &str = "\
gens: a b x y z
rel: a^3
rel: b^3
rel: x^2
rel: y^2
rel: z^2
rel: (x y)^2 = z
rel: a b = b a
rel: x a x = a^-1
rel: x b x = b
rel: y a y = b
rel: y b y = a
rel: z a z = a^-1
rel: z b z = b^-1
";

pub fn realize_presentation(text: &str, label: &str) -> Result<Group, ScanError> {
    let p = parse_presentation(text)?;
    let t = todd_coxeter(&p, DEFAULT_MAX_COSETS)?;
    Ok(realize(&t)?.with_label(label))
}

/// The built-in corpus: every construction family at small orders plus the
/// realized presentations used by the checks.
pub fn standard_corpus() -> Result<Vec<(String, Group)>, ScanError> {
    let mut corpus: Vec<(String, Group)> = Vec::new();
    let mut push = |id: &str, g: Group| corpus.push((id.to_string(), g));
    for spec in [
        "cyclic:1",
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "cyclic:5",
        "cyclic:6",
        "cyclic:7",
        "cyclic:8",
        "cyclic:9",
        "cyclic:10",
        "cyclic:11",
        "cyclic:12",
        "cyclic:16",
        "cyclic:18",
        "cyclic:27",
        "abelian:2x2",
        "abelian:2x4",
        "abelian:2x2x2",
        "abelian:3x3",
        "abelian:4x4",
        "abelian:2x2x4",
        "abelian:3x6",
        "abelian:3x3x3",
        "abelian:3x9",
        "dihedral:6",
        "dihedral:8",
        "dihedral:12",
        "dihedral:16",
        "dihedral:18",
        "quaternion:8",
        "quaternion:16",
        "heisenberg:3",
        "gendihedral:3x3",
        "product:(cyclic:3,dihedral:6)",
        "product:(cyclic:2,quaternion:8)",
        "product:(cyclic:2,abelian:3x3x3)",
        "product:(cyclic:2,heisenberg:3)",
    ] {
        push(spec, parse_construction(spec)?);
    }
    push(
        "central:d8.c4",
        realize_presentation(PRESENTATION_D8_CIRC_C4, "central:d8.c4")?,
    );
    push(
        "order72:a",
        realize_presentation(PRESENTATION_ORDER72_A, "order72:a")?,
    );
    push(
        "order72:b",
        realize_presentation(PRESENTATION_ORDER72_B, "order72:b")?,
    );
    Ok(corpus)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn add(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        writeln!(
            f,
            "{}/{} checks passed",
            self.checks.len() - failed,
            self.checks.len()
        )
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Deliberately corrupt the reference spectrum table; the first check must
    /// then report FAIL. Used as a negative control.
    pub corrupt_reference: bool,
}

pub fn verify_paper() -> Result<VerifyReport, ScanError> {
    verify_with_options(VerifyOptions::default())
}

fn spectrum_of(entries: &[(u32, u32)]) -> OrderSpectrum {
    OrderSpectrum {
        entries: entries.to_vec(),
    }
}

fn involution_square_root_counts(g: &Group) -> Vec<usize> {
    let mut counts: Vec<usize> = (0..g.n())
        .filter(|&x| g.element_order(x) == 2)
        .map(|x| square_root_count(g, x))
        .collect();
    counts.sort_unstable();
    counts
}

/// Deterministic xorshift64* stream for relabeling permutations.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (self.next() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }
}

pub fn verify_with_options(options: VerifyOptions) -> Result<VerifyReport, ScanError> {
    let mut report = VerifyReport::default();
    let corpus = standard_corpus()?;
    let find = |id: &str| -> &Group {
        &corpus
            .iter()
            .find(|(name, _)| name == id)
            .unwrap_or_else(|| panic!("corpus is missing {id}"))
            .1
    };

    let g72a = find("order72:a");
    let g72b = find("order72:b");

    // 1. The order-72 pair matches the reference order statistics.
    {
        let mut reference = spectrum_of(&[(1, 1), (2, 21), (3, 8), (4, 18), (6, 24)]);
        if options.corrupt_reference {
            reference = spectrum_of(&[(1, 1), (2, 20), (3, 9), (4, 18), (6, 24)]);
        }
        let (sa, sb) = (g72a.order_spectrum(), g72b.order_spectrum());
        let pass = g72a.n() == 72 && g72b.n() == 72 && sa == reference && sb == reference;
        report.add(
            "order72-reference-spectra",
            pass,
            format!("spectra {sa} and {sb}, reference {reference}"),
        );
    }

    // 2. The order-72 groups are conformal yet not isomorphic.
    {
        let conformal = g72a.order_spectrum() == g72b.order_spectrum();
        let iso = are_isomorphic_groups(g72a, g72b).is_some();
        report.add(
            "order72-conformal-not-isomorphic",
            conformal && !iso,
            format!("conformal={conformal} isomorphic={iso}"),
        );
    }

    // 3. Their power graphs are not isomorphic, so conformality cannot force
    // power-graph isomorphism; witnessed concretely by square-root counts at
    // involutions.
    {
        let ca = canonical_form(&PowerGraph::of_group(g72a, false))?;
        let cb = canonical_form(&PowerGraph::of_group(g72b, false))?;
        let ra = involution_square_root_counts(g72a);
        let rb = involution_square_root_counts(g72b);
        let pass = ca != cb && ra != rb;
        report.add(
            "order72-power-graphs-differ",
            pass,
            format!("involution square-root counts {ra:?} vs {rb:?}"),
        );
    }

    // 4. Where the two groups do agree: every order-3 element carries the
    // same number of roots of each order in both groups.
    {
        let profile_on_order3 = |g: &Group| -> Vec<BTreeMap<u32, u32>> {
            let profiles = crate::power_graph::root_profile(g);
            let mut out: Vec<BTreeMap<u32, u32>> = (0..g.n())
                .filter(|&x| g.element_order(x) == 3)
                .map(|x| profiles[x].clone())
                .collect();
            out.sort();
            out
        };
        let (pa, pb) = (profile_on_order3(g72a), profile_on_order3(g72b));
        report.add(
            "order72-order3-root-profiles-agree",
            pa == pb,
            format!("{} order-3 elements, profiles equal: {}", pa.len(), pa == pb),
        );
    }

    // 5. Order 16, conformal pair with distinct power graphs: C4 x C4 versus
    // C2 x Q8. Squaring tells them apart: every involution of C4 x C4 has 4
    // square roots, while in C2 x Q8 one involution absorbs all 12.
    {
        let a = find("abelian:4x4");
        let b = find("product:(cyclic:2,quaternion:8)");
        let conformal = a.order_spectrum() == b.order_spectrum();
        let ca = canonical_form(&PowerGraph::of_group(a, false))?;
        let cb = canonical_form(&PowerGraph::of_group(b, false))?;
        let ra = involution_square_root_counts(a);
        let rb = involution_square_root_counts(b);
        let pass = conformal && ca != cb && ra == vec![4, 4, 4] && rb == vec![0, 0, 12];
        report.add(
            "order16-conformal-distinct-graphs",
            pass,
            format!("conformal={conformal} square roots {ra:?} vs {rb:?}"),
        );
    }

    // 6. Order 16, power-graph collapse: C2 x C2 x C4 and the central product
    // of D8 with C4 have isomorphic power graphs but are not isomorphic.
    let o16a = find("abelian:2x2x4");
    let o16b = find("central:d8.c4");
    {
        let pg = canonical_form(&PowerGraph::of_group(o16a, false))?
            == canonical_form(&PowerGraph::of_group(o16b, false))?;
        let iso = are_isomorphic_groups(o16a, o16b).is_some();
        report.add(
            "order16-collapse-pair",
            pg && !iso,
            format!("pg-isomorphic={pg} isomorphic={iso}"),
        );
    }

    // 7. The collapse survives direct products with elementary abelian
    // 2-groups, pushing witnesses into orders 32 and 64.
    {
        let mut pass = true;
        let mut details = Vec::new();
        for a_spec in ["cyclic:2", "abelian:2x2"] {
            let a = find(a_spec);
            let prod_a = o16a.direct_product(a)?;
            let prod_b = o16b.direct_product(a)?;
            let pg = canonical_form(&PowerGraph::of_group(&prod_a, false))?
                == canonical_form(&PowerGraph::of_group(&prod_b, false))?;
            let iso = are_isomorphic_groups(&prod_a, &prod_b).is_some();
            pass &= pg && !iso;
            details.push(format!(
                "x {a_spec}: order {} pg-isomorphic={pg} isomorphic={iso}",
                prod_a.n()
            ));
        }
        report.add("order16-collapse-products", pass, details.join("; "));
    }

    // 8. Order 27, exponent three: the elementary abelian group and the
    // Heisenberg group share the power graph (a friendship graph) but differ.
    {
        let a = find("abelian:3x3x3");
        let b = find("heisenberg:3");
        let conformal = a.order_spectrum() == b.order_spectrum()
            && a.order_spectrum() == spectrum_of(&[(1, 1), (3, 26)]);
        let pg = canonical_form(&PowerGraph::of_group(a, false))?
            == canonical_form(&PowerGraph::of_group(b, false))?;
        let iso = are_isomorphic_groups(a, b).is_some();
        report.add(
            "order27-exponent-three-collapse",
            conformal && pg && !iso,
            format!("conformal={conformal} pg-isomorphic={pg} isomorphic={iso}"),
        );
    }

    // 9. Coprime factors propagate the order-27 collapse to order 54.
    {
        let a = find("product:(cyclic:2,abelian:3x3x3)");
        let b = find("product:(cyclic:2,heisenberg:3)");
        let pg = canonical_form(&PowerGraph::of_group(a, false))?
            == canonical_form(&PowerGraph::of_group(b, false))?;
        let iso = are_isomorphic_groups(a, b).is_some();
        report.add(
            "order54-coprime-propagation",
            pg && !iso,
            format!("pg-isomorphic={pg} isomorphic={iso}"),
        );
    }

    // 10. The case-split adjacency rule for P(G x A), G a 2-group and A
    // elementary abelian, agrees edge-for-edge with direct construction.
    {
        let two_groups = [
            "cyclic:2",
            "cyclic:4",
            "abelian:2x2",
            "cyclic:8",
            "abelian:2x4",
            "abelian:2x2x2",
            "dihedral:8",
            "quaternion:8",
            "cyclic:16",
            "dihedral:16",
            "quaternion:16",
            "abelian:4x4",
            "abelian:2x2x4",
        ];
        let mut pass = true;
        let mut tested = 0;
        for g_spec in two_groups {
            let g = find(g_spec);
            for a_spec in ["cyclic:2", "abelian:2x2"] {
                let a = find(a_spec);
                let by_cases = product_adjacency_2group(g, a)
                    .expect("corpus entries satisfy the preconditions");
                let direct = PowerGraph::of_group(&g.direct_product(a)?, false);
                pass &= by_cases.adjacency() == direct.adjacency();
                tested += 1;
            }
        }
        report.add(
            "product-adjacency-case-rule",
            pass,
            format!("{tested} products compared edge-for-edge"),
        );
    }

    // 11. Completeness and connectivity laws over the corpus (order <= 64):
    // every power graph is connected, and completeness happens exactly for
    // cyclic groups of prime-power order.
    {
        let mut pass = true;
        let mut counted = 0;
        for (id, g) in corpus.iter().filter(|(_, g)| g.n() <= 64) {
            let p = PowerGraph::of_group(g, false);
            let expect_complete = g.is_cyclic() && is_prime_power_or_one(g.n());
            if !p.is_connected() || p.is_complete() != expect_complete {
                pass = false;
                report.add(
                    "completeness-connectivity-laws",
                    false,
                    format!("violated at {id}"),
                );
            }
            counted += 1;
        }
        if pass {
            report.add(
                "completeness-connectivity-laws",
                true,
                format!("{counted} groups checked"),
            );
        }
    }

    // 12. Orders 8 and 18: the corpus groups are pairwise non-conformal, so
    // the order spectrum alone separates them.
    for (order, ids) in [
        (
            8usize,
            vec![
                "cyclic:8",
                "abelian:2x4",
                "abelian:2x2x2",
                "dihedral:8",
                "quaternion:8",
            ],
        ),
        (
            18usize,
            vec![
                "cyclic:18",
                "abelian:3x6",
                "dihedral:18",
                "gendihedral:3x3",
                "product:(cyclic:3,dihedral:6)",
            ],
        ),
    ] {
        let groups: Vec<&Group> = ids.iter().map(|id| find(id)).collect();
        let mut pass = groups.iter().all(|g| g.n() == order);
        for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                pass &= groups[i].order_spectrum() != groups[j].order_spectrum();
            }
        }
        report.add(
            &format!("order{order}-pairwise-non-conformal"),
            pass,
            format!("{} groups, all spectra distinct", groups.len()),
        );
    }

    // 13. Nilpotency is computed twice, by the upper central series and by
    // counting prime-power-order elements; the routes must agree everywhere,
    // and the order-72 pair is solvable, non-nilpotent, with a normal
    // subgroup of order 9.
    {
        let mut routes_agree = true;
        for (_, g) in &corpus {
            routes_agree &= g.is_nilpotent() == g.is_nilpotent_by_sylow_count();
        }
        let structural = [g72a, g72b].iter().all(|g| {
            g.is_solvable()
                && !g.is_nilpotent()
                && g.normal_hall_subgroup(9)
                    .is_ok_and(|h| h.is_some_and(|s| s.members.len() == 9))
        });
        report.add(
            "nilpotency-and-series",
            routes_agree && structural,
            format!(
                "dual nilpotency routes agree on {} groups; order-72 pair solvable, \
                 non-nilpotent, with a normal order-9 subgroup",
                corpus.len()
            ),
        );
    }

    // 14. Canonical forms are invariant under relabeling: 20 pseudorandom
    // relabelings of every corpus power graph reproduce the certificate.
    {
        let mut rng = Rng(0x9e37_79b9_7f4a_7c15);
        let mut pass = true;
        let mut trials = 0;
        for (_, g) in &corpus {
            let p = PowerGraph::of_group(g, false);
            let reference = canonical_form(&p)?;
            for _ in 0..20 {
                let perm = rng.permutation(p.n());
                pass &= canonical_form(&p.relabel(&perm))? == reference;
                trials += 1;
            }
        }
        report.add(
            "canonical-relabeling-stability",
            pass,
            format!("{trials} relabelings certified"),
        );
    }

    // 15. Pipeline monotonicity over every same-order corpus pair: group
    // isomorphism forces power-graph isomorphism, which forces conformality.
    {
        let mut pass = true;
        let mut pairs = 0;
        for i in 0..corpus.len() {
            for j in (i + 1)..corpus.len() {
                let (a, b) = (&corpus[i].1, &corpus[j].1);
                if a.n() != b.n() {
                    continue;
                }
                let conformal = a.order_spectrum() == b.order_spectrum();
                let pg = canonical_form(&PowerGraph::of_group(a, false))?
                    == canonical_form(&PowerGraph::of_group(b, false))?;
                let iso = are_isomorphic_groups(a, b).is_some();
                if (iso && !pg) || (pg && !conformal) {
                    pass = false;
                    report.add(
                        "pipeline-monotonicity",
                        false,
                        format!("violated at {} vs {}", corpus[i].0, corpus[j].0),
                    );
                }
                pairs += 1;
            }
        }
        if pass {
            report.add(
                "pipeline-monotonicity",
                true,
                format!("{pairs} same-order pairs checked"),
            );
        }
    }

    Ok(report)
}

fn is_prime_power_or_one(n: usize) -> bool {
    crate::group::factorize_order(n).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentations_realize_expected_orders() {
        assert_eq!(
            realize_presentation(PRESENTATION_D8_CIRC_C4, "t").unwrap().n(),
            16
        );
        assert_eq!(
            realize_presentation(PRESENTATION_ORDER72_A, "t").unwrap().n(),
            72
        );
        assert_eq!(
            realize_presentation(PRESENTATION_ORDER72_B, "t").unwrap().n(),
            72
        );
    }

    #[test]
    fn corrupt_reference_is_detected() {
        let report = verify_with_options(VerifyOptions {
            corrupt_reference: true,
        })
        .unwrap();
        let first = &report.checks[0];
        assert_eq!(first.name, "order72-reference-spectra");
        assert!(!first.pass);
    }
}
