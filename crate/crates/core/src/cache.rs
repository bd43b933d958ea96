//! On-disk cache of graded bases: one JSON file per degree, named by a
//! SHA-256 hash of the data that determines it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::GradedBasis;
use crate::cartan::{CartanDatum, RootVec};

pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "BORELQ_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    key: String,
    basis: GradedBasis,
}

#[derive(Serialize)]
struct KeyData<'a> {
    series: char,
    rank: usize,
    cartan: &'a [Vec<i64>],
    w0: &'a [usize],
    eta: &'a [i64],
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    /// The directory named by `BORELQ_CACHE_DIR`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR)
            .filter(|v| !v.is_empty())
            .map(|v| Self::new(PathBuf::from(v)))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(datum: &CartanDatum, w0: &[usize], eta: &RootVec) -> String {
        let data = KeyData {
            series: datum.series().letter(),
            rank: datum.rank(),
            cartan: datum.matrix(),
            w0,
            eta: &eta.0,
        };
        let bytes = serde_json::to_vec(&data).expect("key data serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("basis-{key}.json"))
    }

    /// A cached basis, or `None` on a miss, a version mismatch or a damaged file.
    pub fn load(&self, datum: &CartanDatum, w0: &[usize], eta: &RootVec) -> Option<GradedBasis> {
        let key = Self::key(datum, w0, eta);
        let text = fs::read_to_string(self.path(&key)).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.version != FORMAT_VERSION || file.key != key || file.basis.degree != *eta {
            return None;
        }
        file.basis.restore()
    }

    pub fn store(
        &self,
        datum: &CartanDatum,
        w0: &[usize],
        basis: &GradedBasis,
    ) -> crate::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let key = Self::key(datum, w0, &basis.degree);
        let file = CacheFile {
            version: FORMAT_VERSION,
            key: key.clone(),
            basis: basis.clone(),
        };
        let text = serde_json::to_string(&file).map_err(|e| crate::Error::Io(e.to_string()))?;
        let target = self.path(&key);
        let tmp = self.dir.join(format!(
            ".basis-{key}.{}.{:?}.tmp",
            std::process::id(),
            std::thread::current().id()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
        }
        fs::rename(&tmp, &target)?;
        Ok(())
    }
}
