//! Run manifests: enough to repeat a run and check that its outputs are
//! byte-identical.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use antimagic_core::design::solver::SOLVER_SEED;

#[derive(Debug, Clone, Serialize)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool_version: &'static str,
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub parameters: Value,
    pub recipe: Option<String>,
    pub solver_seed: String,
    pub outputs: Vec<OutputDigest>,
}

impl RunManifest {
    pub fn new(parameters: Value, recipe: Option<String>) -> Self {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION"),
            command: std::env::args().skip(1).collect(),
            parameters,
            recipe,
            solver_seed: format!("{SOLVER_SEED:#018x}"),
            outputs: Vec::new(),
        }
    }

    pub fn record(&mut self, path: &Path, contents: &[u8]) {
        self.outputs.push(OutputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(contents),
        });
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `out.json` gets `out.json.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn manifest_sits_next_to_output() {
        assert_eq!(
            manifest_path(Path::new("a/z.json")),
            PathBuf::from("a/z.json.manifest.json")
        );
    }
}
