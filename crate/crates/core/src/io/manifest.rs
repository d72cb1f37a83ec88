use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const MANIFEST_NAME: &str = "manifest.json";

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileEntry {
    /// Path relative to the output directory.
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp_unix: u64,
    pub subcommand: String,
    pub config_sha256: String,
    pub seed: u64,
    pub files: Vec<FileEntry>,
}

impl RunManifest {
    pub fn new(subcommand: &str, config_sha256: &str, seed: u64) -> Self {
        let timestamp_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        RunManifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp_unix,
            subcommand: subcommand.to_string(),
            config_sha256: config_sha256.to_string(),
            seed,
            files: Vec::new(),
        }
    }

    /// Writes `contents` under `dir` and records it.
    pub fn write(&mut self, dir: &Path, rel: &str, contents: &[u8]) -> Result<PathBuf> {
        let path = dir.join(rel);
        super::write_file(&path, contents)?;
        self.files.push(FileEntry {
            path: rel.to_string(),
            sha256: sha256_hex(contents),
            bytes: contents.len() as u64,
        });
        Ok(path)
    }

    pub fn save(&self, dir: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self).expect("manifest serialises");
        super::write_file(&dir.join(MANIFEST_NAME), json.as_bytes())
    }

    pub fn load(dir: &Path) -> Result<RunManifest> {
        let path = dir.join(MANIFEST_NAME);
        let s = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        serde_json::from_str(&s).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    /// Files under `dir` whose checksum differs from the record, or that are
    /// missing.
    pub fn verify(&self, dir: &Path) -> Vec<String> {
        self.files
            .iter()
            .filter(|f| match std::fs::read(dir.join(&f.path)) {
                Ok(b) => sha256_hex(&b) != f.sha256,
                Err(_) => true,
            })
            .map(|f| f.path.clone())
            .collect()
    }

    /// Paths whose checksums differ between two manifests, ignoring the
    /// timestamp.
    pub fn diff(&self, other: &RunManifest) -> Vec<String> {
        let mut out = Vec::new();
        for f in &self.files {
            match other.files.iter().find(|g| g.path == f.path) {
                Some(g) if g.sha256 == f.sha256 => {}
                _ => out.push(f.path.clone()),
            }
        }
        for g in &other.files {
            if !self.files.iter().any(|f| f.path == g.path) {
                out.push(g.path.clone());
            }
        }
        out
    }
}
