//! Append-only JSON-lines result cache.
//!
//! Each line is `{"version": ..., "key": ..., "value": ...}`. Lines written by
//! another tool version, or that fail to parse, are ignored; the last line
//! for a key wins. [`ResultCache::compact`] rewrites the file keeping only
//! live entries.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub const CACHE_FILE: &str = "posetlab-cache.jsonl";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub key: String,
    pub value: Value,
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    version: String,
    entries: BTreeMap<String, Value>,
}

impl ResultCache {
    /// Opens (creating the directory if needed) the cache under `dir`.
    pub fn open(dir: &Path) -> Result<ResultCache> {
        ResultCache::open_with_version(dir, TOOL_VERSION)
    }

    pub fn open_with_version(dir: &Path, version: &str) -> Result<ResultCache> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = BTreeMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let Ok(entry) = serde_json::from_str::<CacheEntry>(&line?) else {
                    continue;
                };
                if entry.version == version {
                    entries.insert(entry.key, entry.value);
                }
            }
        }
        Ok(ResultCache {
            path,
            version: version.to_string(),
            entries,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.get(key)
    }

    pub fn put(&mut self, key: &str, value: Value) -> Result<()> {
        let entry = CacheEntry {
            version: self.version.clone(),
            key: key.to_string(),
            value,
        };
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{}", serde_json::to_string(&entry)?)?;
        self.entries.insert(entry.key, entry.value);
        Ok(())
    }

    /// Rewrites the file with one line per live key. Returns the number of
    /// lines dropped.
    pub fn compact(&self) -> Result<usize> {
        let before = match File::open(&self.path) {
            Ok(f) => BufReader::new(f).lines().count(),
            Err(_) => 0,
        };
        let tmp = self.path.with_extension("jsonl.tmp");
        {
            let mut out = File::create(&tmp)?;
            for (key, value) in &self.entries {
                let entry = CacheEntry {
                    version: self.version.clone(),
                    key: key.clone(),
                    value: value.clone(),
                };
                writeln!(out, "{}", serde_json::to_string(&entry)?)?;
            }
        }
        fs::rename(&tmp, &self.path)?;
        Ok(before.saturating_sub(self.entries.len()))
    }
}
