//! On-disk Z tables: a header `zcache v1 n=<n> algo=<tag>` followed by one
//! `[parts] <Z>` line per partition in enumeration order.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

use super::ZTable;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "PLETH_CACHE_DIR";
pub const CACHE_VERSION: &str = "v1";

fn file_name(n: usize) -> String {
    format!("z{n}.zcache")
}

fn header(n: usize, algo: &str) -> String {
    format!("zcache {CACHE_VERSION} n={n} algo={algo}")
}

fn corrupt(path: &Path, reason: impl Into<String>) -> Error {
    Error::CacheCorrupt {
        path: path.display().to_string(),
        reason: reason.into(),
    }
}

/// Serialises a table in the cache format.
pub(crate) fn render(table: &ZTable) -> String {
    let mut s = header(table.n(), table.algo());
    s.push('\n');
    for (p, z) in table.iter() {
        s.push_str(&format!("{p} {z}\n"));
    }
    s
}

/// Loads the table for `n`. A missing file or a header with another
/// version or algorithm gives `None`; a damaged body is an error.
pub(crate) fn load(dir: &Path, n: usize, algo: &'static str) -> Result<Option<ZTable>> {
    let path = dir.join(file_name(n));
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut lines = text.lines();
    if lines.next() != Some(header(n, algo).as_str()) {
        return Ok(None);
    }
    let mut values = BTreeMap::new();
    let mut expected = enumerate_partitions(n);
    for (i, line) in lines.enumerate() {
        let (p, z) = line
            .rsplit_once(' ')
            .ok_or_else(|| corrupt(&path, format!("line {}: no value", i + 2)))?;
        let p: Partition = p
            .parse()
            .map_err(|e| corrupt(&path, format!("line {}: {e}", i + 2)))?;
        let z: u128 = z
            .parse()
            .map_err(|e| corrupt(&path, format!("line {}: {e}", i + 2)))?;
        if expected.next().as_ref() != Some(&p) {
            return Err(corrupt(&path, format!("line {}: {p} out of order", i + 2)));
        }
        values.insert(p, z);
    }
    if expected.next().is_some() {
        return Err(corrupt(&path, "truncated"));
    }
    ZTable::from_values(n, values, algo).map(Some)
}

pub(crate) fn exists(dir: &Path, n: usize) -> bool {
    dir.join(file_name(n)).is_file()
}

/// Writes through a temporary file so a crash never leaves half a table.
pub(crate) fn store(dir: &Path, table: &ZTable) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = dir.join(file_name(table.n()));
    let tmp = dir.join(format!("{}.tmp", file_name(table.n())));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(render(table).as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// A table file found in a cache directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub path: PathBuf,
    pub header: String,
    pub bytes: u64,
}

/// Table files in `dir`, sorted by name.
pub fn cache_entries(dir: &Path) -> Result<Vec<CacheEntry>> {
    let mut out = Vec::new();
    let rd = match fs::read_dir(dir) {
        Ok(rd) => rd,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    for entry in rd {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("zcache") {
            continue;
        }
        let text = fs::read_to_string(&path)?;
        let header = text.lines().next().unwrap_or("").to_string();
        out.push(CacheEntry {
            bytes: text.len() as u64,
            path,
            header,
        });
    }
    out.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(out)
}

/// Deletes every table file in `dir`; returns how many were removed.
pub fn clear_cache_dir(dir: &Path) -> Result<usize> {
    let entries = cache_entries(dir)?;
    for e in &entries {
        fs::remove_file(&e.path)?;
    }
    Ok(entries.len())
}
