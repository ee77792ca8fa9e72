//! Append-only JSON-lines store of computed records, keyed by the literal
//! graph6 string.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use icpart::graph6::parse_graph6;

use crate::record::ScanRecord;

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "ICPART_CACHE";

/// `$ICPART_CACHE`, else `records.jsonl` under the platform cache directory.
pub fn default_path() -> PathBuf {
    if let Some(p) = std::env::var_os(CACHE_ENV).filter(|p| !p.is_empty()) {
        return PathBuf::from(p);
    }
    dirs::cache_dir()
        .unwrap_or_else(std::env::temp_dir)
        .join("icpart")
        .join("records.jsonl")
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, ScanRecord>,
}

impl Cache {
    /// Loads `path`, skipping (with a warning) lines that do not decode to a
    /// record consistent with their own key. A missing file is an empty cache.
    pub fn open(path: &Path) -> Result<Cache> {
        let mut entries = HashMap::new();
        match File::open(path) {
            Ok(file) => {
                for (i, line) in BufReader::new(file).lines().enumerate() {
                    let line = line.with_context(|| format!("reading {}", path.display()))?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<ScanRecord>(&line) {
                        Ok(r) if consistent(&r) => {
                            entries.insert(r.graph6.clone(), r);
                        }
                        _ => eprintln!(
                            "warning: ignoring corrupt cache entry at {}:{}",
                            path.display(),
                            i + 1
                        ),
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e).with_context(|| format!("opening {}", path.display())),
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, graph6: &str) -> Option<&ScanRecord> {
        self.entries.get(graph6)
    }

    /// Stores complete records; records with skipped fields depend on the
    /// caller's bounds and are not kept. Later writes win on reload.
    pub fn put_all<'a>(&mut self, records: impl IntoIterator<Item = &'a ScanRecord>) -> Result<()> {
        let fresh: Vec<&ScanRecord> = records
            .into_iter()
            .filter(|r| !r.has_skipped() && self.entries.get(&r.graph6) != Some(*r))
            .collect();
        if fresh.is_empty() {
            return Ok(());
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening {}", self.path.display()))?;
        let mut buf = String::new();
        for r in fresh {
            buf.push_str(&serde_json::to_string(r)?);
            buf.push('\n');
            self.entries.insert(r.graph6.clone(), r.clone());
        }
        file.write_all(buf.as_bytes())
            .with_context(|| format!("writing {}", self.path.display()))?;
        Ok(())
    }

    pub fn clear(&mut self) -> Result<()> {
        self.entries.clear();
        match fs::remove_file(&self.path) {
            Err(e) if e.kind() != std::io::ErrorKind::NotFound => {
                Err(e).with_context(|| format!("removing {}", self.path.display()))
            }
            _ => Ok(()),
        }
    }
}

fn consistent(r: &ScanRecord) -> bool {
    parse_graph6(&r.graph6).is_ok_and(|g| g.order() == r.n && g.edge_count() == r.edges)
}
