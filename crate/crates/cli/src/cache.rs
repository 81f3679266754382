//! One JSON document per prime per command, at `<dir>/<command>/<prime>.json`.

use std::fs;
use std::io;
use std::path::PathBuf;

use hasse5_core::census::CensusReport;
use hasse5_core::fricke::FrickeReport;
use hasse5_core::modeq::K5pReport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Payload {
    Census(CensusReport),
    K5p(K5pReport),
    Fricke(FrickeReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedRecord {
    pub schema_version: u32,
    pub prime: u64,
    pub artifact_version: String,
    pub payload: Payload,
}

/// Hash of the core library version, the schema version and the command.
pub fn artifact_version(command: &str) -> String {
    let mut h = Sha256::new();
    h.update(format!("hasse5-core {} schema {SCHEMA_VERSION} {command}", hasse5_core::VERSION));
    let d = h.finalize();
    d.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn path(&self, command: &str, prime: u64) -> PathBuf {
        self.dir.join(command).join(format!("{prime}.json"))
    }

    /// The cached payload, if present and written by this schema and artifact version.
    pub fn load(&self, command: &str, prime: u64) -> Option<Payload> {
        let text = fs::read_to_string(self.path(command, prime)).ok()?;
        let rec: CachedRecord = serde_json::from_str(&text).ok()?;
        (rec.schema_version == SCHEMA_VERSION
            && rec.prime == prime
            && rec.artifact_version == artifact_version(command))
        .then_some(rec.payload)
    }

    /// Writes through a temporary file and a rename, so concurrent writers of
    /// the same record leave one complete document.
    pub fn store(&self, command: &str, prime: u64, payload: &Payload) -> io::Result<()> {
        let path = self.path(command, prime);
        let parent = path.parent().expect("cache path has a parent");
        fs::create_dir_all(parent)?;
        let rec = CachedRecord {
            schema_version: SCHEMA_VERSION,
            prime,
            artifact_version: artifact_version(command),
            payload: payload.clone(),
        };
        let tmp = parent.join(format!(".{prime}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(&rec)? + "\n")?;
        fs::rename(&tmp, &path)
    }
}
