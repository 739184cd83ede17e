//! Run reports, input digests and atomic file output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use permcut::ParamSet;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Everything a run did, serialized as JSON with a fixed key order.
///
/// `verdicts` only lists checks that were run, so a missing key means the
/// check was not requested rather than failed.
#[derive(Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// input path -> SHA-256 of its bytes
    pub inputs: BTreeMap<String, String>,
    pub params: Option<ParamSet>,
    pub outputs: Vec<String>,
    pub verdicts: BTreeMap<String, bool>,
    pub result: serde_json::Value,
    pub timing: Timing,
}

#[derive(Debug, Default, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            result: serde_json::Value::Null,
            ..Default::default()
        }
    }

    /// Reads an input file and records its digest.
    pub fn read_input(&mut self, path: &Path) -> Result<Vec<u8>> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.insert(path.display().to_string(), hex_digest(&bytes));
        Ok(bytes)
    }

    pub fn read_input_text(&mut self, path: &Path) -> Result<String> {
        let bytes = self.read_input(path)?;
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    /// Writes an output file atomically and records its path.
    pub fn write_output(&mut self, path: &Path, contents: &[u8]) -> Result<()> {
        write_atomic(path, contents)?;
        self.outputs.push(path.display().to_string());
        Ok(())
    }

    pub fn verdict(&mut self, name: &str, holds: bool) {
        self.verdicts.insert(name.to_owned(), holds);
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.timing.elapsed_ms = d.as_secs_f64() * 1e3;
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Temp file in the target directory, then rename over the target.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir: PathBuf = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
