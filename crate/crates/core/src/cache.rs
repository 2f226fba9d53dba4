//! Content-addressed result cache: one JSON file per run key.
//!
//! The key digests everything that affects the counts (schema version,
//! operation, canonical polynomial text, s, domain), so equal inputs hit
//! the same file. Writes go through a temporary file and an atomic rename,
//! making concurrent writers safe; corrupt or foreign entries are warned
//! about on stderr and treated as misses, never trusted.

use serde_json::json;
use sha2::{Digest, Sha256};
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::domain::Domain;
use crate::poly::IntPolynomial;
use crate::report::CountsDocument;
use crate::SCHEMA;

pub const DEFAULT_CACHE_DIR: &str = ".paucity-cache";

/// Digest identifying one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunKey(String);

impl RunKey {
    pub fn enumerate(f: &IntPolynomial, s: u8, domain: &Domain) -> Self {
        let text = format!(
            "{SCHEMA}|enumerate|{}|{}|{}",
            f.display_comma(),
            s,
            domain.key_text()
        );
        let mut hasher = Sha256::new();
        hasher.update(text.as_bytes());
        RunKey(format!("{:x}", hasher.finalize()))
    }

    pub fn hex(&self) -> &str {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct RunCache {
    dir: PathBuf,
}

impl RunCache {
    /// Open (creating if needed) a cache rooted at `dir`.
    pub fn open(dir: impl AsRef<Path>) -> io::Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(RunCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn entry_path(&self, key: &RunKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.hex()))
    }

    /// Stored document for the key, or None on miss. A file that exists
    /// but does not parse as a current-schema document is reported on
    /// stderr as a JSON line and ignored.
    pub fn load(&self, key: &RunKey) -> Option<CountsDocument> {
        let path = self.entry_path(key);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<CountsDocument>(&bytes) {
            Ok(doc) if doc.schema == SCHEMA => Some(doc),
            Ok(doc) => {
                warn_ignored(&path, &format!("schema {:?} is not {SCHEMA:?}", doc.schema));
                None
            }
            Err(err) => {
                warn_ignored(&path, &err.to_string());
                None
            }
        }
    }

    /// Write the document under the key via a same-directory temp file and
    /// an atomic rename.
    pub fn store(&self, key: &RunKey, doc: &CountsDocument) -> io::Result<()> {
        let mut body = serde_json::to_string_pretty(doc)?;
        body.push('\n');
        let file = tempfile::Builder::new()
            .prefix(".write-")
            .suffix(".tmp")
            .tempfile_in(&self.dir)?;
        fs::write(file.path(), body.as_bytes())?;
        file.persist(self.entry_path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

fn warn_ignored(path: &Path, reason: &str) {
    eprintln!(
        "{}",
        json!({
            "warning": "ignoring corrupt cache entry",
            "path": path.display().to_string(),
            "reason": reason,
        })
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate, EnumerateOptions};

    fn poly(text: &str) -> IntPolynomial {
        IntPolynomial::parse(text).unwrap()
    }

    #[test]
    fn keys_separate_everything_that_changes_counts() {
        let box12 = Domain::Box { bound: 12 };
        let a = RunKey::enumerate(&poly("x^3"), 2, &box12);
        assert_eq!(a, RunKey::enumerate(&poly("x^3"), 2, &box12));
        assert_ne!(a, RunKey::enumerate(&poly("x^3+x"), 2, &box12));
        assert_ne!(a, RunKey::enumerate(&poly("x^3"), 3, &box12));
        assert_ne!(a, RunKey::enumerate(&poly("x^3"), 2, &Domain::Box { bound: 13 }));
        assert_ne!(
            a,
            RunKey::enumerate(
                &poly("x^3"),
                2,
                &Domain::Progression { first: 1, step: 1, count: 12 }
            )
        );
        assert_eq!(a.hex().len(), 64);
    }

    #[test]
    fn store_then_load_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let cache = RunCache::open(dir.path()).unwrap();
        let run = enumerate(&poly("x^3"), 2, 12, &EnumerateOptions::default()).unwrap();
        let doc = CountsDocument::new(&run.summary, "box", 3);
        let key = RunKey::enumerate(&poly("x^3"), 2, &Domain::Box { bound: 12 });
        assert!(cache.load(&key).is_none());
        cache.store(&key, &doc).unwrap();
        assert_eq!(cache.load(&key), Some(doc.clone()));
        // the stored bytes end with a newline and replay byte-identically
        let bytes = std::fs::read(cache.entry_path(&key)).unwrap();
        let mut expect = serde_json::to_string_pretty(&doc).unwrap();
        expect.push('\n');
        assert_eq!(bytes, expect.as_bytes());
    }

    #[test]
    fn corrupt_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = RunCache::open(dir.path()).unwrap();
        let key = RunKey::enumerate(&poly("x^3"), 2, &Domain::Box { bound: 12 });
        std::fs::write(cache.entry_path(&key), b"{ not json").unwrap();
        assert!(cache.load(&key).is_none());
        // wrong schema is also a miss
        let run = enumerate(&poly("x^3"), 2, 12, &EnumerateOptions::default()).unwrap();
        let mut doc = CountsDocument::new(&run.summary, "box", 3);
        doc.schema = "paucity-lab/0".into();
        std::fs::write(
            cache.entry_path(&key),
            serde_json::to_string_pretty(&doc).unwrap(),
        )
        .unwrap();
        assert!(cache.load(&key).is_none());
    }

    #[test]
    fn open_creates_nested_directories() {
        let dir = tempfile::tempdir().unwrap();
        let nested = dir.path().join("a").join("b");
        let cache = RunCache::open(&nested).unwrap();
        assert!(nested.is_dir());
        drop(cache);
    }
}
