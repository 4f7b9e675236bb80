use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leinster::LeinsterReport;

#[derive(Serialize, Deserialize)]
struct Record {
    spec: String,
    report: LeinsterReport,
}

/// Append-only JSON-lines cache of reports keyed by the exact spec string.
///
/// One record per line: `{"spec": ..., "report": {...}}`. Unparseable lines
/// are skipped with a warning. Writes go through a single mutex-guarded
/// handle, so concurrent workers never interleave partial lines.
pub struct ReportCache {
    path: PathBuf,
    entries: Mutex<HashMap<String, LeinsterReport>>,
    writer: Mutex<Option<File>>,
}

impl ReportCache {
    pub fn open(path: impl AsRef<Path>) -> Result<ReportCache> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let file = File::open(&path)
                .map_err(|e| Error::Input(format!("cannot read cache {}: {e}", path.display())))?;
            for (n, line) in BufReader::new(file).lines().enumerate() {
                let Ok(line) = line else {
                    log::warn!("cache {}: unreadable line {}", path.display(), n + 1);
                    continue;
                };
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Record>(&line) {
                    Ok(r) => {
                        entries.insert(r.spec, r.report);
                    }
                    Err(e) => log::warn!("cache {}: skipping line {}: {e}", path.display(), n + 1),
                }
            }
        }
        Ok(ReportCache {
            path,
            entries: Mutex::new(entries),
            writer: Mutex::new(None),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, spec: &str) -> Option<LeinsterReport> {
        self.entries.lock().expect("cache lock").get(spec).cloned()
    }

    pub fn insert(&self, spec: &str, report: &LeinsterReport) -> Result<()> {
        {
            let mut entries = self.entries.lock().expect("cache lock");
            if entries.contains_key(spec) {
                return Ok(());
            }
            entries.insert(spec.to_string(), report.clone());
        }
        let line = serde_json::to_string(&Record {
            spec: spec.to_string(),
            report: report.clone(),
        })
        .map_err(|e| Error::Input(e.to_string()))?;
        let mut writer = self.writer.lock().expect("cache lock");
        if writer.is_none() {
            let file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)
                .map_err(|e| {
                    Error::Input(format!("cannot write cache {}: {e}", self.path.display()))
                })?;
            *writer = Some(file);
        }
        let file = writer.as_mut().expect("writer opened above");
        writeln!(file, "{line}").map_err(|e| Error::Input(e.to_string()))
    }

    /// Cached report for `spec`, or compute and record it.
    pub fn get_or_compute<F>(&self, spec: &str, compute: F) -> Result<LeinsterReport>
    where
        F: FnOnce() -> Result<LeinsterReport>,
    {
        if let Some(r) = self.get(spec) {
            return Ok(r);
        }
        let report = compute()?;
        self.insert(spec, &report)?;
        Ok(report)
    }
}

/// Looks `spec` up in an optional cache.
pub(crate) fn cached<F>(
    cache: Option<&ReportCache>,
    spec: &str,
    compute: F,
) -> Result<LeinsterReport>
where
    F: FnOnce() -> Result<LeinsterReport>,
{
    match cache {
        Some(c) => c.get_or_compute(spec, compute),
        None => compute(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corrupt_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let report = LeinsterReport::from_orders("C6", 6, vec![1, 2, 3, 6]);
        {
            let cache = ReportCache::open(&path).unwrap();
            assert!(cache.is_empty());
            cache.insert("C6", &report).unwrap();
            cache.insert("C6", &report).unwrap();
        }
        let mut text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        text.push_str("{not json\n");
        std::fs::write(&path, text).unwrap();
        let cache = ReportCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.get("C6"), Some(report));
        assert_eq!(cache.get("C6 "), None);
    }
}
