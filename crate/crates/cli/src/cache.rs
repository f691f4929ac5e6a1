//! On-disk cache of [`ResultRecord`]s keyed by partition and tool version.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use specht::oracle::brute;
use specht::Partition;

use crate::record::{ResultRecord, TOOL_VERSION};

pub const CACHE_ENV: &str = "SPECHT_CACHE";
pub const DEFAULT_DIR: &str = ".specht-cache";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Flag, then `SPECHT_CACHE`, then `.specht-cache/` in the working directory.
    pub fn resolve(flag: Option<PathBuf>) -> Cache {
        let dir = flag
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Cache { dir }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, lambda: &Partition) -> PathBuf {
        let key = lambda.to_string().replace(',', "_");
        self.dir.join(format!("{key}@{TOOL_VERSION}.json"))
    }

    /// A valid record for `lambda`, if one is stored.
    pub fn load(&self, lambda: &Partition) -> io::Result<Option<ResultRecord>> {
        let path = self.path_for(lambda);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e),
        };
        let record: ResultRecord =
            serde_json::from_str(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        if record.partition != lambda.to_string() || record.tool_version != TOOL_VERSION {
            return Ok(None);
        }
        record.validate().map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        Ok(Some(record))
    }

    /// Writes through a temporary file in the cache directory and renames it
    /// into place.
    pub fn store(&self, record: &ResultRecord) -> io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let lambda: Partition =
            record.partition.parse().map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, format!("{e}")))?;
        let path = self.path_for(&lambda);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(record.to_json().as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }

    /// Cached record, or a fresh computation that is then stored. Cache
    /// failures are reported on `warn` and never abort the computation.
    pub fn get_or_compute(&self, lambda: &Partition, warn: &mut dyn Write) -> specht::Result<ResultRecord> {
        match self.load(lambda) {
            Ok(Some(r)) => return Ok(r),
            Ok(None) => {}
            Err(e) => {
                let _ = writeln!(warn, "warning: ignoring cache entry {}: {e}", self.path_for(lambda).display());
            }
        }
        let record = ResultRecord::from_brute(&*brute(lambda)?);
        if let Err(e) = self.store(&record) {
            let _ = writeln!(warn, "warning: cannot write cache in {}: {e}", self.dir.display());
        }
        Ok(record)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let lambda: Partition = "3,1".parse().unwrap();
        let mut warn = Vec::new();
        let first = cache.get_or_compute(&lambda, &mut warn).unwrap();
        let bytes = fs::read(cache.path_for(&lambda)).unwrap();
        let second = cache.load(&lambda).unwrap().unwrap();
        assert_eq!(first, second);
        cache.store(&second).unwrap();
        assert_eq!(fs::read(cache.path_for(&lambda)).unwrap(), bytes);
        assert!(warn.is_empty());
    }

    #[test]
    fn corrupt_entry_falls_back() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let lambda: Partition = "2,2".parse().unwrap();
        fs::write(cache.path_for(&lambda), "{not json").unwrap();
        let mut warn = Vec::new();
        let r = cache.get_or_compute(&lambda, &mut warn).unwrap();
        assert_eq!(r.elementary_divisors, vec!["2", "6"]);
        assert!(String::from_utf8(warn).unwrap().contains("ignoring cache entry"));
        assert!(cache.load(&lambda).unwrap().is_some());
    }
}
