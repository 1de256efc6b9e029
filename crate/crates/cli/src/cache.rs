//! Content-addressed JSON cache. Entries store the hash of their payload and
//! are recomputed whenever it does not match.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::{CliError, Result};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Serialize, Deserialize)]
struct Entry {
    payload_hash: String,
    payload: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lookup<T> {
    Hit(T),
    Miss,
    Corrupt(String),
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io { path: dir.display().to_string(), source: e })?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Lookup<T> {
        let Ok(bytes) = std::fs::read(self.path(key)) else { return Lookup::Miss };
        let entry: Entry = match serde_json::from_slice(&bytes) {
            Ok(e) => e,
            Err(e) => return Lookup::Corrupt(format!("unreadable entry: {e}")),
        };
        let body = serde_json::to_vec(&entry.payload).expect("values serialize");
        if sha256_hex(&body) != entry.payload_hash {
            return Lookup::Corrupt("payload hash mismatch".into());
        }
        match serde_json::from_value(entry.payload) {
            Ok(v) => Lookup::Hit(v),
            Err(e) => Lookup::Corrupt(format!("payload does not decode: {e}")),
        }
    }

    /// Writes through a temporary file in the same directory and renames it
    /// into place.
    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        let payload = serde_json::to_value(value).expect("cache payloads serialize");
        let body = serde_json::to_vec(&payload).expect("values serialize");
        let entry = Entry { payload_hash: sha256_hex(&body), payload };
        let io = |e| CliError::Io { path: self.path(key).display().to_string(), source: e };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(&serde_json::to_vec(&entry).expect("entries serialize")).map_err(io)?;
        tmp.as_file().sync_all().map_err(io)?;
        tmp.persist(self.path(key)).map_err(|e| io(e.error))?;
        Ok(())
    }

    /// Loads `key`, or computes and stores it. Corrupt entries are reported
    /// on stderr and recomputed.
    pub fn get_or_compute<T, E>(&self, key: &str, compute: impl FnOnce() -> std::result::Result<T, E>) -> std::result::Result<T, E>
    where
        T: Serialize + DeserializeOwned,
        E: From<CliError>,
    {
        match self.load(key) {
            Lookup::Hit(v) => return Ok(v),
            Lookup::Miss => {}
            Lookup::Corrupt(why) => eprintln!("warning: cache entry {key} is corrupt ({why}); recomputing"),
        }
        let v = compute()?;
        self.store(key, &v)?;
        Ok(v)
    }
}
