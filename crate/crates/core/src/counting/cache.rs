//! Line-oriented count cache.
//!
//! ```text
//! # parity-bias count cache v1
//! d:0;m:1;f:<TAB>0<TAB>0<TAB>0<TAB>1
//! d:0;m:1;f:<TAB>1<TAB>1<TAB>0<TAB>0
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigUint;
use thiserror::Error;

use super::{BiasCount, CountTable};
use crate::partition::{BiasSelector, ClassSpec};

pub const HEADER: &str = "# parity-bias count cache v1";
pub const FILE_NAME: &str = "bias-counts.tsv";
pub const ENV_VAR: &str = "PARITY_BIAS_CACHE_DIR";

static WRITE_LOCK: Mutex<()> = Mutex::new(());

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("cache header mismatch in {path}: found {found:?}")]
    Version { path: PathBuf, found: String },
    #[error("corrupt cache line {line} in {path}: {reason}")]
    Corrupt { path: PathBuf, line: usize, reason: String },
}

pub fn file_path(dir: &Path) -> PathBuf {
    dir.join(FILE_NAME)
}

type Rows = BTreeMap<String, BTreeMap<u32, BiasCount>>;

fn read_all(path: &Path) -> Result<Rows, CacheError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Rows::new()),
        Err(e) => return Err(e.into()),
    };
    let corrupt = |line: usize, reason: &str| CacheError::Corrupt {
        path: path.to_path_buf(),
        line,
        reason: reason.to_string(),
    };
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    if header != HEADER {
        return Err(CacheError::Version { path: path.to_path_buf(), found: header.to_string() });
    }
    if !text.ends_with('\n') {
        return Err(corrupt(text.lines().count(), "missing final newline (truncated write?)"));
    }
    let mut rows = Rows::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(corrupt(lineno, "expected 5 tab-separated fields"));
        }
        let n: u32 = fields[1].parse().map_err(|_| corrupt(lineno, "bad n"))?;
        let num = |s: &str| s.parse::<BigUint>().map_err(|_| corrupt(lineno, "bad count"));
        let row = BiasCount { n, odd_heavy: num(fields[2])?, even_heavy: num(fields[3])?, balanced: num(fields[4])? };
        rows.entry(fields[0].to_string()).or_default().insert(n, row);
    }
    Ok(rows)
}

/// Table for `spec` if the cache holds a dense prefix 0..=k for it.
pub fn load(spec: &ClassSpec, dir: &Path) -> Result<Option<CountTable>, CacheError> {
    let path = file_path(dir);
    let mut all = read_all(&path)?;
    let Some(rows) = all.remove(&spec.key()) else {
        return Ok(None);
    };
    let mut dense = Vec::with_capacity(rows.len());
    for (i, (n, row)) in rows.into_iter().enumerate() {
        if n as usize != i {
            return Err(CacheError::Corrupt {
                path,
                line: 0,
                reason: format!("rows for {} are not dense (gap before n={n})", spec.key()),
            });
        }
        dense.push(row);
    }
    if dense.is_empty() {
        return Ok(None);
    }
    Ok(Some(CountTable { spec: spec.clone().with_bias(BiasSelector::All), rows: dense }))
}

/// Merges `table` into the cache file, replacing the file atomically.
pub fn store(table: &CountTable, dir: &Path) -> Result<(), CacheError> {
    let _guard = WRITE_LOCK.lock().unwrap_or_else(|e| e.into_inner());
    fs::create_dir_all(dir)?;
    let path = file_path(dir);
    let mut all = match read_all(&path) {
        Ok(rows) => rows,
        Err(CacheError::Io(e)) => return Err(e.into()),
        Err(_) => Rows::new(),
    };
    let entry = all.entry(table.spec.key()).or_default();
    for row in &table.rows {
        entry.insert(row.n, row.clone());
    }
    let tmp = dir.join(format!(".{FILE_NAME}.{}.tmp", std::process::id()));
    {
        let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
        writeln!(f, "{HEADER}")?;
        for (key, rows) in &all {
            for row in rows.values() {
                writeln!(f, "{key}\t{}\t{}\t{}\t{}", row.n, row.odd_heavy, row.even_heavy, row.balanced)?;
            }
        }
        f.flush()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(())
}
