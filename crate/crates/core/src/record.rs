//! Result records and the append-only JSON-lines cache.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::engine::{Certificate, InvariantReport};
use crate::error::Result;
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;

/// Bump when a change could alter computed values; cached records from
/// other versions are ignored.
pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+e1");

pub const CACHE_ENV: &str = "DOMLAB_CACHE";
pub const DEFAULT_CACHE: &str = ".domlab-cache.jsonl";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub graph_spec: String,
    pub canonical_hash: String,
    pub invariant: String,
    pub k: Option<usize>,
    pub value: Option<usize>,
    /// `ok`, or a short description of why there is no value.
    pub outcome: String,
    /// Human-readable certificate with vertex labels.
    pub certificate: String,
    /// SHA-256 of the certificate's JSON form.
    pub certificate_digest: String,
    pub engine_version: String,
    pub wall_time_secs: f64,
}

impl ResultRecord {
    pub fn from_report(spec: &str, g: &Graph, report: &InvariantReport) -> ResultRecord {
        let json = serde_json::to_string(&report.certificate).expect("certificates serialize");
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            graph_spec: spec.to_string(),
            canonical_hash: report.hash.clone(),
            invariant: report.invariant.to_string(),
            k: None,
            value: Some(report.value),
            outcome: "ok".into(),
            certificate: describe_certificate(g, &report.certificate),
            certificate_digest: digest(&json),
            engine_version: ENGINE_VERSION.into(),
            wall_time_secs: report.elapsed_secs,
        }
    }

    pub fn key(&self) -> CacheKey {
        CacheKey {
            hash: self.canonical_hash.clone(),
            invariant: self.invariant.clone(),
            k: self.k,
            engine_version: self.engine_version.clone(),
        }
    }
}

pub fn digest(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

pub fn describe_certificate(g: &Graph, cert: &Certificate) -> String {
    match cert {
        Certificate::Witness { set } => format!("dominating set {}", g.format_set(set)),
        Certificate::Family(f) => format!(
            "autonomous family of {} sets at k={} containing {}",
            f.size,
            f.k,
            g.format_set(&f.representative)
        ),
        Certificate::FixedPoint { k, size } => format!("{size} configurations survive at k={k}"),
        Certificate::Formula { formula } => formula.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub hash: String,
    pub invariant: String,
    pub k: Option<usize>,
    pub engine_version: String,
}

/// Records loaded from a JSON-lines file, keyed by graph hash, invariant,
/// `k` and engine version. Lookups return the stored line verbatim.
pub struct Cache {
    path: PathBuf,
    lines: HashMap<CacheKey, String>,
}

impl Cache {
    /// Loads `path` if it exists. Lines that do not parse are skipped with a
    /// warning on stderr.
    pub fn open(path: impl AsRef<Path>) -> Result<Cache> {
        let path = path.as_ref().to_path_buf();
        let mut lines = HashMap::new();
        if path.exists() {
            for (i, line) in std::fs::read_to_string(&path)?.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<ResultRecord>(line) {
                    Ok(r) => {
                        lines.entry(r.key()).or_insert_with(|| line.to_string());
                    }
                    Err(e) => eprintln!("warning: {}:{}: skipping corrupt cache line ({e})", path.display(), i + 1),
                }
            }
        }
        Ok(Cache { path, lines })
    }

    /// Path from `$DOMLAB_CACHE`, else the default file name.
    pub fn default_path() -> PathBuf {
        std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE))
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn get(&self, key: &CacheKey) -> Option<(&str, ResultRecord)> {
        let line = self.lines.get(key)?;
        Some((line.as_str(), serde_json::from_str(line).expect("validated on load")))
    }

    /// Appends the record and returns the exact line written.
    pub fn insert(&mut self, record: &ResultRecord) -> Result<String> {
        let line = serde_json::to_string(record)?;
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{line}")?;
        self.lines.insert(record.key(), line.clone());
        Ok(line)
    }
}
