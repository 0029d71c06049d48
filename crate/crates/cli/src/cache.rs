//! On-disk cache of seed expansions.
//!
//! Each artifact is a payload file `{name}_N{prec}.json` in the fourier JSON
//! format plus a `{name}_N{prec}.meta.json` record holding its checksum.
//! Writes go through a temporary file and a rename; a `.lock` file guards
//! the directory while an entry is written.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

const LOCK_NAME: &str = ".lock";
const LOCK_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub artifact: String,
    pub prec: u32,
    pub checksum: String,
    pub payload: String,
}

pub struct Cache {
    dir: PathBuf,
}

struct LockGuard {
    path: PathBuf,
}

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

pub fn checksum(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn payload_name(artifact: &str, prec: u32) -> String {
        format!("{artifact}_N{prec}.json")
    }

    fn meta_path(&self, artifact: &str, prec: u32) -> PathBuf {
        self.dir.join(format!("{artifact}_N{prec}.meta.json"))
    }

    fn lock(&self) -> Result<LockGuard, CliError> {
        let path = self.dir.join(LOCK_NAME);
        let start = Instant::now();
        loop {
            match fs::OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(mut f) => {
                    let _ = writeln!(f, "{}", std::process::id());
                    return Ok(LockGuard { path });
                }
                Err(e) if e.kind() == ErrorKind::AlreadyExists => {
                    if start.elapsed() > LOCK_TIMEOUT {
                        return Err(CliError::Cache(format!(
                            "cache directory is locked ({} exists)",
                            path.display()
                        )));
                    }
                    thread::sleep(Duration::from_millis(50));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }

    fn write_atomic(&self, name: &str, bytes: &[u8]) -> Result<(), CliError> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(bytes)?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.dir.join(name)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Stores `payload` and returns its cache record.
    pub fn store(&self, artifact: &str, prec: u32, payload: &[u8]) -> Result<CacheEntry, CliError> {
        fs::create_dir_all(&self.dir)?;
        let _guard = self.lock()?;
        let entry = CacheEntry {
            artifact: artifact.to_string(),
            prec,
            checksum: checksum(payload),
            payload: Self::payload_name(artifact, prec),
        };
        self.write_atomic(&entry.payload, payload)?;
        let meta = serde_json::to_vec(&entry)?;
        self.write_atomic(&format!("{artifact}_N{prec}.meta.json"), &meta)?;
        Ok(entry)
    }

    /// Precisions with a record for `artifact`, ascending.
    fn recorded(&self, artifact: &str) -> Vec<u32> {
        let prefix = format!("{artifact}_N");
        let mut out: Vec<u32> = fs::read_dir(&self.dir)
            .into_iter()
            .flatten()
            .flatten()
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                name.strip_prefix(&prefix)?.strip_suffix(".meta.json")?.parse().ok()
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The smallest cached entry of precision at least `prec`, with its
    /// verified payload.
    pub fn load(&self, artifact: &str, prec: u32) -> Result<Option<(CacheEntry, Vec<u8>)>, CliError> {
        let Some(found) = self.recorded(artifact).into_iter().find(|&p| p >= prec) else {
            return Ok(None);
        };
        let meta: CacheEntry = serde_json::from_slice(&fs::read(self.meta_path(artifact, found))?)?;
        if meta.artifact != artifact || meta.prec < prec {
            return Err(CliError::Cache(format!(
                "cache record for {artifact} at N={found} is inconsistent"
            )));
        }
        let bytes = fs::read(self.dir.join(&meta.payload))?;
        let sum = checksum(&bytes);
        if sum != meta.checksum {
            return Err(CliError::Cache(format!(
                "checksum mismatch for {}: recorded {}, found {sum}",
                meta.payload, meta.checksum
            )));
        }
        Ok(Some((meta, bytes)))
    }
}
