use std::path::{Path, PathBuf};

use serde_json::json;
use sha2::{Digest, Sha256};

/// Enough to rerun a command and check that it produced the same bytes.
pub struct RunManifest {
    args: Vec<String>,
    inputs: Vec<(String, Option<String>)>,
    digest: String,
    seed: u64,
    budget: u64,
    output_path: Option<String>,
    output_sha256: Option<String>,
    exit_code: u8,
}

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    pub fn new(
        args: Vec<String>,
        inputs: &[PathBuf],
        seed: u64,
        budget: u64,
        out: Option<&Path>,
        output: Option<&str>,
        exit_code: u8,
    ) -> Self {
        let inputs: Vec<(String, Option<String>)> =
            inputs.iter().map(|p| (p.display().to_string(), std::fs::read(p).ok().map(|b| sha256(&b)))).collect();
        let mut h = Sha256::new();
        for (name, d) in &inputs {
            h.update(name.as_bytes());
            h.update([0]);
            h.update(d.as_deref().unwrap_or("missing").as_bytes());
            h.update([0]);
        }
        RunManifest {
            args,
            inputs,
            digest: hex::encode(h.finalize()),
            seed,
            budget,
            output_path: out.map(|p| p.display().to_string()),
            output_sha256: output.map(|o| sha256(o.as_bytes())),
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        let inputs: Vec<_> = self.inputs.iter().map(|(p, d)| json!({"path": p, "sha256": d})).collect();
        let v = json!({
            "tool": "rota2",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.args,
            "inputs": inputs,
            "digest": self.digest,
            "seed": self.seed,
            "budget": self.budget,
            "output": {"path": self.output_path, "sha256": self.output_sha256},
            "exit_code": self.exit_code,
        });
        serde_json::to_string_pretty(&v).expect("manifest serializes") + "\n"
    }
}
