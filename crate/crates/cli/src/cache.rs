//! Content-addressed on-disk store for transition tables.
//!
//! One file per `(rank, word, weight)`. The file name is the SHA-256 of the
//! cache version and the key, so a format change never reads stale files.
//! Each file holds a JSON header line and the JSON table; the header carries
//! the SHA-256 of the table text, and a mismatch means the file is ignored
//! and the table recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use qcanon_core::algebra::{TableStore, TransitionTable};
use qcanon_core::weyl::{Root, Word};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Header {
    version: u32,
    rank: usize,
    word: Vec<u8>,
    weight: Root,
    digest: String,
}

#[derive(Debug, Default)]
pub struct CacheStats {
    pub hits: AtomicUsize,
    pub misses: AtomicUsize,
    pub corrupt: AtomicUsize,
    pub writes: AtomicUsize,
}

/// Table store rooted at one directory. Cloning shares the statistics.
#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
    stats: Arc<CacheStats>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl DiskCache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache {
            dir,
            stats: Arc::default(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn stats(&self) -> &CacheStats {
        &self.stats
    }

    pub fn hits(&self) -> usize {
        self.stats.hits.load(Ordering::Relaxed)
    }

    pub fn corrupt(&self) -> usize {
        self.stats.corrupt.load(Ordering::Relaxed)
    }

    /// Path of the file for one key.
    pub fn path_for(&self, word: &Word, weight: &Root) -> PathBuf {
        let key = serde_json::json!([CACHE_VERSION, word.rank(), word.letters(), weight]);
        self.dir
            .join(format!("{}.json", sha256_hex(key.to_string().as_bytes())))
    }

    fn read(&self, word: &Word, weight: &Root) -> Option<TransitionTable> {
        let text = fs::read_to_string(self.path_for(word, weight)).ok()?;
        let (head, body) = text.split_once('\n')?;
        let header: Header = serde_json::from_str(head).ok()?;
        if header.version != CACHE_VERSION
            || header.rank != word.rank()
            || header.word != word.letters()
            || header.weight != *weight
            || header.digest != sha256_hex(body.as_bytes())
        {
            return None;
        }
        serde_json::from_str(body).ok()
    }
}

impl TableStore for DiskCache {
    fn load(&self, word: &Word, weight: &Root) -> Option<TransitionTable> {
        let path = self.path_for(word, weight);
        if !path.exists() {
            self.stats.misses.fetch_add(1, Ordering::Relaxed);
            return None;
        }
        match self.read(word, weight) {
            Some(t) => {
                self.stats.hits.fetch_add(1, Ordering::Relaxed);
                Some(t)
            }
            None => {
                self.stats.corrupt.fetch_add(1, Ordering::Relaxed);
                None
            }
        }
    }

    fn store(&self, table: &TransitionTable) {
        let body = serde_json::to_string(table).expect("table serializes");
        let header = Header {
            version: CACHE_VERSION,
            rank: table.word.rank(),
            word: table.word.letters().to_vec(),
            weight: table.weight.clone(),
            digest: sha256_hex(body.as_bytes()),
        };
        let path = self.path_for(&table.word, &table.weight);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            writeln!(
                f,
                "{}",
                serde_json::to_string(&header).expect("header serializes")
            )?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        // A cache that cannot be written only costs recomputation later.
        if write().is_ok() {
            self.stats.writes.fetch_add(1, Ordering::Relaxed);
        } else {
            let _ = fs::remove_file(&tmp);
        }
    }
}
