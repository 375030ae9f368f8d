//! On-disk cache of quantum Bruhat graphs: one JSON file per type plus a
//! manifest of checksums. Anything that fails to validate is rebuilt.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use alcove::qbg::GraphJson;
use alcove::{QuantumBruhatGraph, RootDatum, WeylGroup};
use anyhow::Result;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const MANIFEST: &str = "manifest.json";

#[derive(Debug, Default, Serialize, Deserialize)]
struct Manifest {
    graphs: BTreeMap<String, Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Entry {
    file: String,
    sha256: String,
    edges: usize,
}

pub struct GraphCache {
    dir: Option<PathBuf>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl GraphCache {
    pub fn new(dir: Option<PathBuf>) -> GraphCache {
        GraphCache { dir }
    }

    pub fn disabled() -> GraphCache {
        GraphCache { dir: None }
    }

    /// The graph for `datum`, from disk when a valid copy exists.
    pub fn load(&self, datum: RootDatum, cap: u128) -> Result<QuantumBruhatGraph> {
        let group = Arc::new(WeylGroup::enumerate_with_cap(Arc::new(datum), cap)?);
        let Some(dir) = &self.dir else {
            return Ok(QuantumBruhatGraph::from_group(group));
        };
        let key = group.datum().label();
        if let Some(g) = read_cached(dir, &key, &group) {
            return Ok(g);
        }
        let graph = QuantumBruhatGraph::from_group(group);
        // A cache that cannot be written is not an error.
        let _ = write_cached(dir, &key, &graph);
        Ok(graph)
    }
}

fn read_manifest(dir: &Path) -> Manifest {
    fs::read(dir.join(MANIFEST))
        .ok()
        .and_then(|b| serde_json::from_slice(&b).ok())
        .unwrap_or_default()
}

fn read_cached(dir: &Path, key: &str, group: &Arc<WeylGroup>) -> Option<QuantumBruhatGraph> {
    let entry = read_manifest(dir).graphs.get(key)?.clone();
    let bytes = fs::read(dir.join(&entry.file)).ok()?;
    if sha256_hex(&bytes) != entry.sha256 {
        return None;
    }
    let json: GraphJson = serde_json::from_slice(&bytes).ok()?;
    if json.edges.len() != entry.edges {
        return None;
    }
    let graph = QuantumBruhatGraph::from_json(group.clone(), &json).ok()?;
    (graph.num_edges() == entry.edges).then_some(graph)
}

fn write_cached(dir: &Path, key: &str, graph: &QuantumBruhatGraph) -> Result<()> {
    fs::create_dir_all(dir)?;
    let file = format!("{key}.json");
    let bytes = serde_json::to_vec(&graph.to_json())?;
    write_atomic(&dir.join(&file), &bytes)?;
    let mut manifest = read_manifest(dir);
    manifest.graphs.insert(
        key.to_string(),
        Entry {
            file,
            sha256: sha256_hex(&bytes),
            edges: graph.num_edges(),
        },
    );
    write_atomic(&dir.join(MANIFEST), &serde_json::to_vec_pretty(&manifest)?)?;
    Ok(())
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
