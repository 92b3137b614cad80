//! Append-only JSON-lines cache for computed Verlinde numbers.
//!
//! One record per line, keyed by (group, level, genus); values are decimal
//! strings since they outgrow native integers quickly. Lookups scan the
//! file and take the last match; unparseable lines (e.g. a torn final line
//! from an interrupted run) are skipped, so earlier records survive
//! anything short of file corruption.

use serde::{Deserialize, Serialize};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

pub const CACHE_ENV: &str = "VERLINDE_CACHE";
pub const DEFAULT_CACHE_FILE: &str = "verlinde_cache.jsonl";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheRecord {
    pub group: String,
    pub level: u32,
    pub genus: u32,
    pub value: String,
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    /// The cache at the path from `VERLINDE_CACHE`, or the default file in
    /// the working directory.
    pub fn from_env() -> Cache {
        let path = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_FILE));
        Cache { path }
    }

    pub fn path(&self) -> &std::path::Path {
        &self.path
    }

    pub fn lookup(&self, group: &str, level: u32, genus: u32) -> Option<String> {
        let file = File::open(&self.path).ok()?;
        let mut hit = None;
        for line in BufReader::new(file).lines() {
            let Ok(line) = line else { break };
            if let Ok(record) = serde_json::from_str::<CacheRecord>(&line) {
                if record.group == group && record.level == level && record.genus == genus {
                    hit = Some(record.value);
                }
            }
        }
        hit
    }

    /// Append one record as a complete line.
    pub fn append(&self, record: &CacheRecord) -> std::io::Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let line = serde_json::to_string(record).expect("record serializes");
        writeln!(file, "{line}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_takes_last_match_and_skips_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        std::fs::write(
            &path,
            concat!(
                r#"{"group":"sl:2","level":1,"genus":2,"value":"4"}"#,
                "\n",
                "not json at all\n",
                r#"{"group":"sl:2","level":1,"genus":2,"value":"4"}"#,
                "\n",
                r#"{"group":"sl:2","level":1,"genus":3,"value":"8"}"#,
                "\n",
                r#"{"group":"spin:7","level":2,"genus":2,"va"#, // torn line
            ),
        )
        .unwrap();
        let cache = Cache { path };
        assert_eq!(cache.lookup("sl:2", 1, 2).as_deref(), Some("4"));
        assert_eq!(cache.lookup("sl:2", 1, 3).as_deref(), Some("8"));
        assert_eq!(cache.lookup("spin:7", 2, 2), None);
    }

    #[test]
    fn append_then_lookup_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache {
            path: dir.path().join("cache.jsonl"),
        };
        assert_eq!(cache.lookup("spin:9", 2, 4), None);
        let record = CacheRecord {
            group: "spin:9".into(),
            level: 2,
            genus: 4,
            value: "107913280".into(),
        };
        cache.append(&record).unwrap();
        assert_eq!(cache.lookup("spin:9", 2, 4).as_deref(), Some("107913280"));
    }
}
