//! Reading and writing triangulation catalogs.

use anyhow::{bail, Context, Result};
use rotsys::io;
use rotsys::Embedding;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogFormat {
    Surftri,
    PlanarCode,
}

impl CatalogFormat {
    pub fn name(self) -> &'static str {
        match self {
            CatalogFormat::Surftri => "surftri",
            CatalogFormat::PlanarCode => "planar-code",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "surftri" => Ok(CatalogFormat::Surftri),
            "planar-code" => Ok(CatalogFormat::PlanarCode),
            other => bail!("unknown catalog format `{other}` (expected surftri or planar-code)"),
        }
    }
}

pub fn read(path: &Path, format: CatalogFormat) -> Result<Vec<Embedding>> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let embeddings = match format {
        CatalogFormat::Surftri => {
            let text = String::from_utf8(bytes)
                .with_context(|| format!("{} is not utf-8", path.display()))?;
            io::parse_surftri(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        CatalogFormat::PlanarCode => io::parse_planar_code(&bytes)
            .with_context(|| format!("parsing {}", path.display()))?,
    };
    Ok(embeddings)
}

pub fn write_surftri(path: &Path, embeddings: &[Embedding]) -> Result<()> {
    let text = io::write_surftri(embeddings).context("serializing catalog")?;
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Checks that every record is a sphere triangulation of the given order;
/// errors name the offending record.
pub fn validate_triangulations(embeddings: &[Embedding], order: usize) -> Result<()> {
    for (idx, e) in embeddings.iter().enumerate() {
        if e.order() != order {
            bail!("record {idx}: order {} does not match the configured order {order}", e.order());
        }
        if e.genus() != Ok(0) || !e.is_triangulation() {
            bail!("record {idx}: not a sphere triangulation");
        }
    }
    Ok(())
}
