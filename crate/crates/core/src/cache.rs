//! Content-addressed on-disk store for serialized results.
//!
//! Keys hash the tool version, an operation tag, free-form parameters and
//! the canonical matrix text. Writes go to a temporary file in the same
//! directory and are renamed into place, so readers never see partial data.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::linalg::IntMat;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(op: &str, matrix: &IntMat, params: &str) -> String {
        let mut h = Sha256::new();
        for part in [VERSION, op, params, &matrix.to_text()] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Result<Option<String>> {
        match fs::read_to_string(self.path(key)) {
            Ok(s) => Ok(Some(s)),
            Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    pub fn put(&self, key: &str, payload: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(
            ".{key}.{}.{}.tmp",
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(payload.as_bytes())?;
        f.sync_all()?;
        drop(f);
        if let Err(e) = fs::rename(&tmp, self.path(key)) {
            let _ = fs::remove_file(&tmp);
            return Err(e.into());
        }
        Ok(())
    }

    /// Returns the stored payload, or computes, stores and returns it.
    pub fn get_or_insert_with(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        if let Some(hit) = self.get(key)? {
            return Ok(hit);
        }
        let payload = compute()?;
        self.put(key, &payload)?;
        Ok(payload)
    }
}
