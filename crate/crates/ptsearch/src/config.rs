//! Search configuration, its canonical text form, and the hash that guards
//! resume against mismatched inputs.

use crate::catalog::CatalogFormat;
use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    /// Generate the catalog of the configured order in-process.
    Generate,
    File { path: PathBuf, format: CatalogFormat },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub order: usize,
    pub remove_edges: usize,
    pub genus: usize,
    /// Candidate filters; forced off when `remove_edges >= 1`.
    pub filters: bool,
    pub block_size: u64,
    pub input: InputSource,
    pub checkpoint: PathBuf,
    pub witnesses: PathBuf,
    pub report: Option<PathBuf>,
}

impl SearchConfig {
    /// Canonical one-line form, stored in the checkpoint header. Paths must
    /// not contain whitespace (they are space-delimited fields).
    pub fn to_line(&self) -> String {
        let (kind, input) = match &self.input {
            InputSource::Generate => ("generate".to_string(), "-".to_string()),
            InputSource::File { path, format } => {
                (format.name().to_string(), path.display().to_string())
            }
        };
        let mut line = String::from("config");
        let _ = write!(
            line,
            " order={} remove-edges={} genus={} filters={} block-size={} input-kind={} input={} witnesses={} report={}",
            self.order,
            self.remove_edges,
            self.genus,
            if self.filters { "on" } else { "off" },
            self.block_size,
            kind,
            input,
            self.witnesses.display(),
            self.report.as_ref().map_or("-".to_string(), |p| p.display().to_string()),
        );
        line
    }

    pub fn from_line(line: &str, checkpoint: &Path) -> Result<SearchConfig> {
        let mut fields = std::collections::HashMap::new();
        for token in line.split_whitespace().skip(1) {
            let (key, value) = token
                .split_once('=')
                .with_context(|| format!("malformed config field `{token}`"))?;
            fields.insert(key.to_string(), value.to_string());
        }
        let get = |key: &str| -> Result<String> {
            fields.get(key).cloned().with_context(|| format!("config field `{key}` missing"))
        };
        let input = match get("input-kind")?.as_str() {
            "generate" => InputSource::Generate,
            kind => InputSource::File {
                path: PathBuf::from(get("input")?),
                format: CatalogFormat::parse(kind)?,
            },
        };
        let report = match get("report")?.as_str() {
            "-" => None,
            path => Some(PathBuf::from(path)),
        };
        let filters = match get("filters")?.as_str() {
            "on" => true,
            "off" => false,
            other => bail!("config field filters has invalid value `{other}`"),
        };
        Ok(SearchConfig {
            order: get("order")?.parse().context("config field order")?,
            remove_edges: get("remove-edges")?.parse().context("config field remove-edges")?,
            genus: get("genus")?.parse().context("config field genus")?,
            filters,
            block_size: get("block-size")?.parse().context("config field block-size")?,
            input,
            checkpoint: checkpoint.to_path_buf(),
            witnesses: PathBuf::from(get("witnesses")?),
            report,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if !(4..=26).contains(&self.order) {
            bail!("order {} out of range 4..=26", self.order);
        }
        if self.block_size == 0 {
            bail!("block size must be at least 1");
        }
        if self.filters && self.remove_edges >= 1 {
            bail!("filters only apply to the exact search; pass --no-filters with --remove-edges >= 1");
        }
        Ok(())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

/// Hash guarding resume: semantic config fields plus the input bytes. The
/// worker count is deliberately excluded; it never changes results.
pub fn config_hash(config_line: &str, input_sha: &str) -> String {
    sha256_hex(format!("{config_line}\n{input_sha}").as_bytes())
}
