//! Persisted graphs, reports and certificates under one directory.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use linkforge::family::{
    certify_nil, generate_s, generate_t, glue_structure, recipe_for, seed_c, seed_k5, seed_t, seed_t10,
    verify_family, verify_graph, CheckResult, FamilyError, NilCertificate, Property, Status, VerificationReport,
    VerifyOptions,
};
use linkforge::graph6::{graph6_decode, graph6_encode};
use linkforge::minor::petersen_family;
use linkforge::Graph;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const INDEX_FILE: &str = "index.json";
pub const CATALOG_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {message}", path.display())]
    Corrupt { path: PathBuf, message: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CatalogError + '_ {
    move |source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "T_n")]
    T,
    #[serde(rename = "S_n")]
    S,
    #[serde(rename = "seed")]
    Seed,
    #[serde(rename = "petersen-member")]
    PetersenMember,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub role: Role,
    pub graph6: String,
    pub graph_file: String,
    pub report_file: Option<String>,
    pub certificate_file: Option<String>,
    /// SHA-256 of the recipe JSON that builds the graph.
    pub recipe_hash: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogIndex {
    pub version: u32,
    pub max_order: usize,
    pub direct_minor_up_to: usize,
    pub entries: Vec<CatalogEntry>,
}

/// Outcome of building a catalog.
#[derive(Debug, Clone)]
pub struct CatalogSummary {
    pub index: CatalogIndex,
    pub reports: Vec<VerificationReport>,
}

impl CatalogSummary {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.reports.iter().any(|r| r.budget_exceeded)
    }
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CatalogError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err(path))?;
    tmp.write_all(bytes).map_err(io_err(path))?;
    tmp.persist(path).map_err(|e| CatalogError::Io {
        path: path.to_path_buf(),
        source: e.error,
    })?;
    Ok(())
}

pub fn recipe_hash(n: usize) -> Result<String, FamilyError> {
    let digest = Sha256::digest(recipe_for(n)?.to_json().as_bytes());
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn graph_entry(dir: &Path, name: &str, role: Role, g: &Graph) -> Result<CatalogEntry, CatalogError> {
    let graph6 = graph6_encode(g).map_err(FamilyError::from)?;
    let graph_file = format!("{name}.g6");
    write_atomic(&dir.join(&graph_file), format!("{graph6}\n").as_bytes())?;
    Ok(CatalogEntry {
        name: name.to_string(),
        order: g.order(),
        role,
        graph6,
        graph_file,
        report_file: None,
        certificate_file: None,
        recipe_hash: None,
    })
}

/// Generates, verifies and persists everything for orders 14..=max_order,
/// plus the seeds and the Petersen family.
pub fn build_catalog(dir: &Path, max_order: usize, direct_minor_up_to: usize) -> Result<CatalogSummary, CatalogError> {
    if max_order < 14 {
        return Err(FamilyError::NotAvailable("catalog orders start at 14".into()).into());
    }
    std::fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut entries = Vec::new();
    let seeds = [
        ("seed-t10", seed_t10()),
        ("seed-c", seed_c()),
        ("seed-k5", seed_k5()),
        ("seed-t", seed_t()?),
    ];
    for (name, g) in &seeds {
        entries.push(graph_entry(dir, name, Role::Seed, g)?);
    }
    for m in petersen_family() {
        entries.push(graph_entry(dir, &format!("petersen-{}", m.id), Role::PetersenMember, &m.graph)?);
    }
    let reports: Vec<VerificationReport> = verify_family(max_order, direct_minor_up_to)
        .into_iter()
        .collect::<Result<_, _>>()?;
    for report in &reports {
        let n = report.order;
        let hash = recipe_hash(n)?;
        let mut entry = graph_entry(dir, &format!("t{n}"), Role::T, &generate_t(n)?)?;
        let report_file = format!("t{n}.report.json");
        write_atomic(&dir.join(&report_file), pretty(report).as_bytes())?;
        entry.report_file = Some(report_file);
        if let Ok(cert) = certify_nil(n) {
            let cert_file = format!("t{n}.cert.json");
            write_atomic(&dir.join(&cert_file), pretty(&cert).as_bytes())?;
            entry.certificate_file = Some(cert_file);
        }
        entry.recipe_hash = Some(hash.clone());
        entries.push(entry);
        if let Ok(s) = generate_s(n) {
            let mut s_entry = graph_entry(dir, &format!("s{n}"), Role::S, &s)?;
            s_entry.recipe_hash = Some(hash);
            entries.push(s_entry);
        }
    }
    let index = CatalogIndex {
        version: CATALOG_VERSION,
        max_order,
        direct_minor_up_to,
        entries,
    };
    write_atomic(&dir.join(INDEX_FILE), pretty(&index).as_bytes())?;
    Ok(CatalogSummary { index, reports })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|e| CatalogError::Corrupt {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

pub fn load_index(dir: &Path) -> Result<CatalogIndex, CatalogError> {
    read_json(&dir.join(INDEX_FILE))
}

/// Result of re-checking one stored entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Recomputes a `T_n` report from the stored graph and certificate only.
/// graph6 drops labels, so label-dependent checks run on the certificate's
/// copy of the graph once its encoding matches the stored one.
fn recompute(g: &Graph, stored: &VerificationReport, cert: Option<NilCertificate>) -> VerificationReport {
    let opts = VerifyOptions {
        direct_minor: stored.status(Property::PetersenExcluded) == Some(Status::Pass)
            || stored.status(Property::PetersenExcluded) == Some(Status::Fail),
        ..VerifyOptions::default()
    };
    let n = stored.order;
    let labeled = cert
        .as_ref()
        .and_then(|c| c.link.as_ref())
        .map(|l| l.graph.clone())
        .filter(|h| graph6_encode(h).ok() == graph6_encode(g).ok());
    let mut report = verify_graph(g, Some(n), opts);
    if stored.status(Property::NilCertificate).is_some() {
        let ok = match (&cert, &labeled) {
            (Some(c), Some(h)) => c.order == n && c.certifies(h) && c.validate().is_ok(),
            _ => false,
        };
        report.checks.push(CheckResult {
            property: Property::NilCertificate,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: String::new(),
        });
    }
    if let Some(status) = stored.status(Property::GlueStructure) {
        report.checks.push(match (status, &labeled) {
            (Status::Skipped, _) => CheckResult {
                property: Property::GlueStructure,
                status,
                detail: String::new(),
            },
            (_, Some(h)) => glue_structure(h, n),
            (_, None) => CheckResult {
                property: Property::GlueStructure,
                status: Status::Fail,
                detail: "no labeled copy matches the stored graph".into(),
            },
        });
    }
    report
}

fn statuses(r: &VerificationReport) -> BTreeMap<Property, Status> {
    r.checks.iter().map(|c| (c.property, c.status)).collect()
}

/// Reloads every entry, checks the graph6 round trip and re-derives each
/// stored report.
pub fn check_catalog(dir: &Path) -> Result<Vec<EntryCheck>, CatalogError> {
    let index = load_index(dir)?;
    let mut out = Vec::new();
    for entry in &index.entries {
        let path = dir.join(&entry.graph_file);
        let text = std::fs::read_to_string(&path).map_err(io_err(&path))?;
        let line = text.trim_end();
        let g = match graph6_decode(line) {
            Ok(g) => g,
            Err(e) => {
                out.push(EntryCheck {
                    name: entry.name.clone(),
                    ok: false,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let round_trip = line == entry.graph6 && graph6_encode(&g).is_ok_and(|s| s == entry.graph6);
        let mut ok = round_trip && g.order() == entry.order;
        let mut detail = if ok { "graph6 round trip".to_string() } else { "graph6 mismatch".to_string() };
        if let Some(report_file) = &entry.report_file {
            let stored: VerificationReport = read_json(&dir.join(report_file))?;
            let cert = match &entry.certificate_file {
                Some(f) => Some(read_json::<NilCertificate>(&dir.join(f))?),
                None => None,
            };
            let fresh = recompute(&g, &stored, cert);
            let agree = statuses(&fresh) == statuses(&stored);
            ok &= agree && stored.passed();
            detail = format!(
                "{detail}; report {}",
                if agree { "re-verified" } else { "disagrees with recomputation" }
            );
        }
        if let (Some(hash), Role::T) = (&entry.recipe_hash, entry.role) {
            let same = recipe_hash(entry.order).is_ok_and(|h| &h == hash);
            ok &= same;
            if !same {
                detail.push_str("; recipe hash changed");
            }
        }
        out.push(EntryCheck {
            name: entry.name.clone(),
            ok,
            detail,
        });
    }
    Ok(out)
}
