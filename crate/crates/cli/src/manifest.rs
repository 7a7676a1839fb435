//! Run manifests embedded in (or written next to) every output file.

use serde::Serialize;
use serde_json::Value;
use std::path::Path;

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config: Value,
    pub seed: u64,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub seconds: f64,
    pub version: String,
}

impl RunManifest {
    pub fn new(command: &str, config: Value, seed: u64) -> Self {
        Self {
            command: command.into(),
            config,
            seed,
            inputs: Vec::new(),
            outputs: Vec::new(),
            seconds: 0.0,
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("manifest serializes")
    }
}

/// Path of the sidecar manifest for a non-JSON output.
pub fn sidecar(out: &Path) -> std::path::PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    s.into()
}

/// Adds `"manifest"` to a JSON document produced by a library serializer.
pub fn embed(doc: &str, m: &RunManifest) -> String {
    let mut v: Value = serde_json::from_str(doc).expect("library JSON parses");
    if let Value::Object(map) = &mut v {
        map.insert("manifest".into(), m.to_value());
    }
    serde_json::to_string(&v).expect("document serializes")
}

/// Reads the embedded manifest of a JSON output, if any.
pub fn read_embedded(doc: &str) -> Option<Value> {
    let v: Value = serde_json::from_str(doc).ok()?;
    v.get("manifest").cloned()
}
