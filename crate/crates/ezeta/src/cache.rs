//! Content-addressed artifact cache.
//!
//! Layout: `<root>/<kind>/<key>.bin`, where `key` is the hex SHA-256 of
//! `kind NUL params NUL version_tag`. Each file is
//!
//! | bytes | field |
//! |------:|-------|
//! | 8 | magic `EZCACHE\0` |
//! | 4 | envelope version, u32 LE |
//! | 8 | payload length, u64 LE |
//! | 32 | SHA-256 of the payload |
//! | n | payload |
//!
//! Entries are written to a temporary name in the same directory and renamed
//! into place. A file that fails any check is reported as corrupt and treated
//! as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

/// Environment variable overriding the cache root.
pub const CACHE_DIR_ENV: &str = "EZETA_CACHE_DIR";

/// Root used when neither a path nor the environment variable is given.
pub const DEFAULT_CACHE_DIR: &str = ".ezeta-cache";

const MAGIC: &[u8; 8] = b"EZCACHE\0";
const ENVELOPE_VERSION: u32 = 1;
const HEADER_LEN: usize = 8 + 4 + 8 + 32;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache I/O on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("artifact kind {0:?} must be a non-empty [a-z0-9-] name")]
    BadKind(String),
}

/// Identifies one artifact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey {
    pub kind: String,
    /// Canonical parameter string.
    pub params: String,
}

impl CacheKey {
    pub fn new(kind: impl Into<String>, params: impl Into<String>) -> Self {
        Self {
            kind: kind.into(),
            params: params.into(),
        }
    }
}

/// Result of [`CacheHandle::get`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(Vec<u8>),
    Miss,
    /// The entry exists but failed verification; holds the reason.
    Corrupt(String),
}

impl Lookup {
    pub fn into_payload(self) -> Option<Vec<u8>> {
        match self {
            Lookup::Hit(p) => Some(p),
            _ => None,
        }
    }
}

/// What [`CacheHandle::put`] wrote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Receipt {
    pub path: PathBuf,
    pub digest: String,
    pub bytes: u64,
}

#[derive(Debug)]
pub struct CacheHandle {
    pub root_dir: PathBuf,
    pub version_tag: String,
    hits: AtomicU64,
    misses: AtomicU64,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CacheError + '_ {
    move |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    }
}

impl CacheHandle {
    pub fn new(root_dir: impl Into<PathBuf>, version_tag: impl Into<String>) -> Self {
        Self {
            root_dir: root_dir.into(),
            version_tag: version_tag.into(),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    /// Uses `explicit`, else `$EZETA_CACHE_DIR`, else [`DEFAULT_CACHE_DIR`].
    pub fn resolve(explicit: Option<&Path>, version_tag: impl Into<String>) -> Self {
        let root = match explicit {
            Some(p) => p.to_path_buf(),
            None => std::env::var_os(CACHE_DIR_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR)),
        };
        Self::new(root, version_tag)
    }

    /// Hex SHA-256 of the key and the version tag.
    pub fn digest(&self, key: &CacheKey) -> String {
        let mut h = Sha256::new();
        h.update(key.kind.as_bytes());
        h.update([0u8]);
        h.update(key.params.as_bytes());
        h.update([0u8]);
        h.update(self.version_tag.as_bytes());
        hex::encode(h.finalize())
    }

    pub fn path_for(&self, key: &CacheKey) -> Result<PathBuf, CacheError> {
        let ok = !key.kind.is_empty()
            && key
                .kind
                .bytes()
                .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-');
        if !ok {
            return Err(CacheError::BadKind(key.kind.clone()));
        }
        Ok(self.root_dir.join(&key.kind).join(format!("{}.bin", self.digest(key))))
    }

    /// Stores `payload`, replacing any existing entry atomically.
    pub fn put(&self, key: &CacheKey, payload: &[u8]) -> Result<Receipt, CacheError> {
        let path = self.path_for(key)?;
        let dir = path.parent().expect("entry path has a parent");
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        let mut bytes = Vec::with_capacity(HEADER_LEN + payload.len());
        bytes.extend_from_slice(MAGIC);
        bytes.extend_from_slice(&ENVELOPE_VERSION.to_le_bytes());
        bytes.extend_from_slice(&(payload.len() as u64).to_le_bytes());
        bytes.extend_from_slice(&Sha256::digest(payload));
        bytes.extend_from_slice(payload);

        let tmp = dir.join(format!(
            ".{}.{}.{}.tmp",
            self.digest(key),
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&bytes)?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        if let Err(e) = write() {
            let _ = fs::remove_file(&tmp);
            return Err(io_err(&path)(e));
        }
        Ok(Receipt {
            digest: self.digest(key),
            bytes: bytes.len() as u64,
            path,
        })
    }

    /// Reads and verifies an entry. Corrupt entries log a warning.
    pub fn get(&self, key: &CacheKey) -> Result<Lookup, CacheError> {
        let path = self.path_for(key)?;
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                self.misses.fetch_add(1, Ordering::Relaxed);
                return Ok(Lookup::Miss);
            }
            Err(e) => return Err(io_err(&path)(e)),
        };
        match verify(&bytes) {
            Ok(()) => {
                self.hits.fetch_add(1, Ordering::Relaxed);
                Ok(Lookup::Hit(bytes[HEADER_LEN..].to_vec()))
            }
            Err(reason) => {
                log::warn!("ignoring corrupt cache entry {}: {reason}", path.display());
                self.misses.fetch_add(1, Ordering::Relaxed);
                Ok(Lookup::Corrupt(reason))
            }
        }
    }

    /// `(hits, misses)` so far; corrupt entries count as misses.
    pub fn stats(&self) -> (u64, u64) {
        (self.hits.load(Ordering::Relaxed), self.misses.load(Ordering::Relaxed))
    }
}

fn verify(bytes: &[u8]) -> Result<(), String> {
    if bytes.len() < HEADER_LEN {
        return Err(format!("truncated header ({} bytes)", bytes.len()));
    }
    if &bytes[..8] != MAGIC {
        return Err("bad magic".into());
    }
    let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if version != ENVELOPE_VERSION {
        return Err(format!("unsupported envelope version {version}"));
    }
    let len = u64::from_le_bytes(bytes[12..20].try_into().unwrap());
    if len != (bytes.len() - HEADER_LEN) as u64 {
        return Err(format!("length {len} does not match {} payload bytes", bytes.len() - HEADER_LEN));
    }
    if Sha256::digest(&bytes[HEADER_LEN..]).as_slice() != &bytes[20..52] {
        return Err("checksum mismatch".into());
    }
    Ok(())
}
