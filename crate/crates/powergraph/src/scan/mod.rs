//! Catalog ingestion and order classification.
//!
//! A catalog manifest lists groups of interest; [`classify_order`] runs the
//! pairwise pipeline (conformality, then power-graph isomorphism, then group
//! isomorphism) over all groups of one order and reports whether the corpus
//! certifies the order's membership in the sets
//!
//! * `S`: every two conformal groups of this order are isomorphic, and
//! * `Sbar`: every two groups of this order with isomorphic power graphs are
//!   isomorphic.
//!
//! Verdicts are always relative to the supplied corpus; the report carries a
//! completeness flag straight from the manifest and never infers it.

pub mod verify;

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, CanonError, CanonicalForm};
use crate::construct::{parse_construction, ConstructError};
use crate::fp::{parse_presentation, realize, todd_coxeter, FpError, DEFAULT_MAX_COSETS};
use crate::group::{are_isomorphic_groups, cayley, Group, GroupError};
use crate::order_cap;
use crate::power_graph::PowerGraph;

pub const REPORT_SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("manifest {path}, line {line}: {message}")]
    Manifest {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("cannot load {0:?}: not a file and not a construction expression")]
    UnknownSource(String),
    #[error("permutation file: {0}")]
    Perm(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Fp(#[from] FpError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// One catalog entry: a validated group plus where it came from.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub order: usize,
    pub source: String,
    pub group: Group,
}

#[derive(Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    /// Orders for which the manifest declares the corpus complete.
    pub complete_orders: BTreeSet<usize>,
    /// Per-entry load failures (id, message); other entries still load.
    pub errors: Vec<(String, String)>,
}

impl Catalog {
    pub fn of_order(&self, n: usize) -> Vec<&CatalogEntry> {
        self.entries.iter().filter(|e| e.order == n).collect()
    }
}

/// Load a group from a file path (`.cayley`, `.perm`, `.fp`) or a
/// construction expression like `dihedral:8`.
pub fn load_group(source: &str) -> Result<Group, ScanError> {
    load_group_relative(source, None)
}

fn load_group_relative(source: &str, base: Option<&Path>) -> Result<Group, ScanError> {
    let path = match base {
        Some(dir) => dir.join(source),
        None => PathBuf::from(source),
    };
    let by_extension = path
        .extension()
        .and_then(|e| e.to_str())
        .filter(|e| matches!(*e, "cayley" | "perm" | "fp"));
    if let Some(ext) = by_extension {
        let text = std::fs::read_to_string(&path).map_err(|source| ScanError::Io {
            path: path.clone(),
            source,
        })?;
        let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or(source);
        let g = match ext {
            "cayley" => cayley::parse_cayley(&text)?,
            "perm" => parse_perm(&text)?,
            "fp" => {
                let p = parse_presentation(&text)?;
                let t = todd_coxeter(&p, DEFAULT_MAX_COSETS)?;
                realize(&t)?
            }
            _ => unreachable!(),
        };
        return Ok(g.with_label(label));
    }
    if source.contains(':') {
        return Ok(parse_construction(source)?);
    }
    Err(ScanError::UnknownSource(source.to_string()))
}

/// `.perm` format: first line the degree, then one generator per line as a
/// space-separated image list (0-based). The group is the permutation closure,
/// realized as a Cayley table with the identity at index 0.
pub fn parse_perm(text: &str) -> Result<Group, ScanError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let degree: usize = lines
        .next()
        .ok_or_else(|| ScanError::Perm("empty input".into()))?
        .parse()
        .map_err(|_| ScanError::Perm("first line must be the degree".into()))?;
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for line in lines {
        let perm: Vec<u32> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| ScanError::Perm(format!("bad image {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        if perm.len() != degree {
            return Err(ScanError::Perm(format!(
                "generator has {} images, expected {degree}",
                perm.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &x in &perm {
            if x as usize >= degree || seen[x as usize] {
                return Err(ScanError::Perm("generator is not a permutation".into()));
            }
            seen[x as usize] = true;
        }
        gens.push(perm);
    }
    if gens.is_empty() {
        gens.push((0..degree as u32).collect());
    }

    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        for g in &gens {
            let prod: Vec<u32> = elements[head].iter().map(|&x| g[x as usize]).collect();
            if !index.contains_key(&prod) {
                if elements.len() >= order_cap() {
                    return Err(ScanError::Perm(format!(
                        "closure exceeds order cap {}",
                        order_cap()
                    )));
                }
                index.insert(prod.clone(), elements.len());
                elements.push(prod);
            }
        }
        head += 1;
    }
    let m = elements.len();
    let mut flat = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            let prod: Vec<u32> = elements[i]
                .iter()
                .map(|&x| elements[j][x as usize])
                .collect();
            flat[i * m + j] = index[&prod] as u32;
        }
    }
    Ok(Group::from_valid_flat(m, flat, format!("perm:{m}")))
}

/// Load a catalog manifest. Lines are either `complete-order <n>` or
/// `<id> <source>`; `#` starts a comment. Sources are resolved relative to
/// the manifest's directory. Per-entry load errors are collected, manifest
/// syntax errors are fatal.
pub fn load_catalog(path: &Path) -> Result<Catalog, ScanError> {
    let text = std::fs::read_to_string(path).map_err(|source| ScanError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let base = path.parent().map(Path::to_path_buf);
    let mut catalog = Catalog::default();
    let mut seen_ids = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let first = parts.next().unwrap();
        if first == "complete-order" {
            let n: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| ScanError::Manifest {
                    path: path.to_path_buf(),
                    line: line_no,
                    message: "complete-order needs an integer".into(),
                })?;
            catalog.complete_orders.insert(n);
            continue;
        }
        let id = first.to_string();
        let source = parts.collect::<Vec<_>>().join(" ");
        if source.is_empty() {
            return Err(ScanError::Manifest {
                path: path.to_path_buf(),
                line: line_no,
                message: format!("entry {id:?} has no source"),
            });
        }
        if !seen_ids.insert(id.clone()) {
            return Err(ScanError::Manifest {
                path: path.to_path_buf(),
                line: line_no,
                message: format!("duplicate id {id:?}"),
            });
        }
        match load_group_relative(&source, base.as_deref()) {
            Ok(group) => catalog.entries.push(CatalogEntry {
                id,
                order: group.n(),
                source,
                group,
            }),
            Err(e) => catalog.errors.push((id, e.to_string())),
        }
    }
    Ok(catalog)
}

/// Pairwise comparison of two catalog entries. `pg_isomorphic` and
/// `group_isomorphic` are `None` when skipped by an earlier stage of the
/// pipeline (skipped implies false).
#[derive(Debug, Clone, Serialize)]
pub struct PairResult {
    pub a: String,
    pub b: String,
    pub conformal: bool,
    pub pg_isomorphic: Option<bool>,
    pub group_isomorphic: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    pub schema_version: String,
    pub order: usize,
    pub corpus_complete: bool,
    pub group_ids: Vec<String>,
    pub pairs: Vec<PairResult>,
    /// Conformal-implies-isomorphic holds over this corpus.
    pub in_s: bool,
    /// Power-graph-isomorphic-implies-isomorphic holds over this corpus.
    pub in_sbar: bool,
    pub s_witnesses: Vec<(String, String)>,
    pub sbar_witnesses: Vec<(String, String)>,
    /// Necessary conditions: 16 | n or an odd cube factor force n out of Sbar.
    pub predicted_not_in_sbar: bool,
    pub defects: Vec<String>,
}

/// Classify one order over the catalog's groups of that order.
///
/// Per pair: spectrum equality first, canonical power-graph forms only for
/// conformal pairs, group isomorphism only for pairs with isomorphic power
/// graphs. Deterministic: entries sorted by id, pairs lexicographic.
pub fn classify_order(catalog: &Catalog, n: usize) -> Result<OrderReport, ScanError> {
    let mut entries = catalog.of_order(n);
    assert!(
        !entries.is_empty(),
        "catalog has no groups of order {n}"
    );
    entries.sort_by(|a, b| a.id.cmp(&b.id));

    let mut canon_cache: Vec<Option<CanonicalForm>> = vec![None; entries.len()];
    fn canon_of(
        cache: &mut [Option<CanonicalForm>],
        entries: &[&CatalogEntry],
        i: usize,
    ) -> Result<CanonicalForm, ScanError> {
        if cache[i].is_none() {
            let c = canonical_form(&PowerGraph::of_group(&entries[i].group, false))?;
            cache[i] = Some(c);
        }
        Ok(cache[i].clone().unwrap())
    }

    let spectra: Vec<_> = entries.iter().map(|e| e.group.order_spectrum()).collect();
    let mut pairs = Vec::new();
    let mut s_witnesses = Vec::new();
    let mut sbar_witnesses = Vec::new();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let (a, b) = (entries[i], entries[j]);
            let conformal = spectra[i] == spectra[j];
            let mut pg_isomorphic = None;
            let mut group_isomorphic = None;
            if conformal {
                let pg = canon_of(&mut canon_cache, &entries, i)?
                    == canon_of(&mut canon_cache, &entries, j)?;
                pg_isomorphic = Some(pg);
                if pg {
                    let iso = are_isomorphic_groups(&a.group, &b.group).is_some();
                    group_isomorphic = Some(iso);
                    if !iso {
                        s_witnesses.push((a.id.clone(), b.id.clone()));
                        sbar_witnesses.push((a.id.clone(), b.id.clone()));
                    }
                } else {
                    // Conformal but distinct power graphs: the groups cannot
                    // be isomorphic, so this is already an S-witness.
                    s_witnesses.push((a.id.clone(), b.id.clone()));
                }
            }
            pairs.push(PairResult {
                a: a.id.clone(),
                b: b.id.clone(),
                conformal,
                pg_isomorphic,
                group_isomorphic,
            });
        }
    }

    let corpus_complete = catalog.complete_orders.contains(&n);
    let in_s = s_witnesses.is_empty();
    let in_sbar = sbar_witnesses.is_empty();
    let predicted_not_in_sbar = predicted_not_in_sbar(n);
    let mut defects = Vec::new();
    if !in_s && in_sbar {
        // S subset of Sbar must survive any corpus: an S-witness that is not
        // an Sbar-witness is fine, but in_s false with in_sbar true is the
        // expected shape; nothing to flag.
    }
    if corpus_complete && in_sbar && predicted_not_in_sbar {
        defects.push(format!(
            "order {n} is predicted outside Sbar (16 | n or odd cube factor) \
             but the complete corpus found no witness pair"
        ));
    }
    Ok(OrderReport {
        schema_version: REPORT_SCHEMA_VERSION.into(),
        order: n,
        corpus_complete,
        group_ids: entries.iter().map(|e| e.id.clone()).collect(),
        pairs,
        in_s,
        in_sbar,
        s_witnesses,
        sbar_witnesses,
        predicted_not_in_sbar,
        defects,
    })
}

/// Necessary condition for membership in Sbar: orders divisible by 16 or by
/// the cube of an odd prime always admit witness pairs.
pub fn predicted_not_in_sbar(n: usize) -> bool {
    if n % 16 == 0 {
        return true;
    }
    crate::group::factorize_order(n)
        .into_iter()
        .any(|(p, a)| p % 2 == 1 && a >= 3)
}

pub fn report_to_json(report: &OrderReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

impl std::fmt::Display for OrderReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "order {}", self.order)?;
        writeln!(
            f,
            "  corpus-complete: {}",
            if self.corpus_complete { "yes" } else { "no" }
        )?;
        writeln!(f, "  groups: {}", self.group_ids.join(", "))?;
        for p in &self.pairs {
            let fmt_opt = |o: Option<bool>| match o {
                Some(true) => "yes",
                Some(false) => "no",
                None => "skipped",
            };
            writeln!(
                f,
                "  {} vs {}: conformal={} pg-iso={} group-iso={}",
                p.a,
                p.b,
                if p.conformal { "yes" } else { "no" },
                fmt_opt(p.pg_isomorphic),
                fmt_opt(p.group_isomorphic),
            )?;
        }
        writeln!(
            f,
            "  verdict: in_S={} in_Sbar={} (relative to this corpus)",
            self.in_s, self.in_sbar
        )?;
        if self.predicted_not_in_sbar {
            writeln!(f, "  note: {} cannot lie in Sbar (16 | n or odd cube factor)", self.order)?;
        }
        for d in &self.defects {
            writeln!(f, "  DEFECT: {d}")?;
        }
        Ok(())
    }
}
