//! Content-addressed on-disk cache and run manifests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "CUBKNOT_CACHE_DIR";
pub const MANIFEST_SCHEMA: &str = "cubknot.manifest/1";

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("cubknot-cache"))
}

/// Writes to a sibling temporary file, then renames over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn open() -> Cache {
        Cache { root: cache_dir() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn path(&self, kind: &str, key: &str) -> PathBuf {
        self.root.join(kind).join(format!("{}.json", digest(key.as_bytes())))
    }

    /// Unreadable or corrupt entries count as misses.
    pub fn get<T: DeserializeOwned>(&self, kind: &str, key: &str) -> Option<T> {
        let bytes = fs::read(self.path(kind, key)).ok()?;
        let entry: Entry<T> = serde_json::from_slice(&bytes).ok()?;
        (entry.key == key).then_some(entry.value)
    }

    /// Cache failures are not fatal; the value is just recomputed next time.
    pub fn put<T: Serialize>(&self, kind: &str, key: &str, value: &T) {
        let entry = Entry { key: key.to_string(), value };
        if let Ok(bytes) = serde_json::to_vec(&entry) {
            let _ = write_atomic(&self.path(kind, key), &bytes);
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    key: String,
    value: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema: String,
    pub command: String,
    pub parameters: serde_json::Value,
    pub caps: serde_json::Value,
    pub version: String,
    pub outputs: Vec<OutputDigest>,
}

impl RunManifest {
    pub fn new(command: &str, parameters: serde_json::Value, caps: serde_json::Value) -> RunManifest {
        RunManifest {
            schema: MANIFEST_SCHEMA.to_string(),
            command: command.to_string(),
            parameters,
            caps,
            version: env!("CARGO_PKG_VERSION").to_string(),
            outputs: Vec::new(),
        }
    }

    pub fn record(&mut self, name: &str, bytes: &[u8]) {
        self.outputs.push(OutputDigest { name: name.to_string(), sha256: digest(bytes) });
    }

    /// Key of the run itself: command, parameters, caps and version.
    pub fn run_key(&self) -> String {
        let inputs = serde_json::json!([self.command, self.parameters, self.caps, self.version]);
        digest(inputs.to_string().as_bytes())
    }
}
