//! On-disk cache of Weyl groups and dominant-weight lists, as versioned
//! JSON files keyed by type.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::liealg::{RootSystem, Weight, WeylElement};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "MODFUSION_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct WeylFile {
    version: u32,
    family: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    elements: Vec<WeylElement>,
}

#[derive(Serialize, Deserialize)]
struct WeightsFile {
    version: u32,
    family: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    level: i64,
    weights: Vec<Weight>,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Explicit directory if given, else the environment variable, else none.
    pub fn resolve(explicit: Option<PathBuf>) -> Option<Self> {
        explicit
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn weyl_path(&self, rs: &RootSystem) -> PathBuf {
        self.dir.join(format!("weyl-{}{}.v{CACHE_VERSION}.json", rs.family(), rs.rank()))
    }

    fn weights_path(&self, rs: &RootSystem, level: i64) -> PathBuf {
        self.dir.join(format!(
            "weights-{}{}-level{level}.v{CACHE_VERSION}.json",
            rs.family(),
            rs.rank()
        ))
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Installs a cached Weyl group into `rs` if a valid file exists.
    /// Corrupt or mismatched files are ignored.
    pub fn load_weyl(&self, rs: &RootSystem) -> bool {
        let Ok(bytes) = fs::read(self.weyl_path(rs)) else {
            return false;
        };
        let Ok(file) = serde_json::from_slice::<WeylFile>(&bytes) else {
            return false;
        };
        let valid = file.version == CACHE_VERSION
            && file.family == rs.family().to_string()
            && file.rank == rs.rank()
            && file.cartan == rs.cartan()
            && file.elements.len() as u128 == rs.weyl_order()
            && file.elements.len() <= rs.limits().weyl_max
            && file.elements.iter().all(|e| e.matrix.len() == rs.rank() * rs.rank());
        valid && rs.preload_weyl_group(file.elements)
    }

    pub fn store_weyl(&self, rs: &RootSystem, elements: &[WeylElement]) -> Result<()> {
        let file = WeylFile {
            version: CACHE_VERSION,
            family: rs.family().to_string(),
            rank: rs.rank(),
            cartan: rs.cartan().to_vec(),
            elements: elements.to_vec(),
        };
        self.write_atomic(&self.weyl_path(rs), &serde_json::to_vec(&file)?)
    }

    /// The Weyl group of `rs`, from disk when possible, otherwise computed
    /// and written back.
    pub fn weyl_group(&self, rs: &RootSystem) -> Result<Arc<Vec<WeylElement>>> {
        if self.load_weyl(rs) {
            return rs.weyl_group();
        }
        let w = rs.weyl_group()?;
        self.store_weyl(rs, &w)?;
        Ok(w)
    }

    pub fn dominant_weights(&self, rs: &RootSystem, level: i64) -> Result<Vec<Weight>> {
        let path = self.weights_path(rs, level);
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(file) = serde_json::from_slice::<WeightsFile>(&bytes) {
                if file.version == CACHE_VERSION
                    && file.family == rs.family().to_string()
                    && file.rank == rs.rank()
                    && file.cartan == rs.cartan()
                    && file.level == level
                {
                    return Ok(file.weights);
                }
            }
        }
        let weights = rs.dominant_weights_of_level(level);
        let file = WeightsFile {
            version: CACHE_VERSION,
            family: rs.family().to_string(),
            rank: rs.rank(),
            cartan: rs.cartan().to_vec(),
            level,
            weights: weights.clone(),
        };
        self.write_atomic(&path, &serde_json::to_vec(&file)?)?;
        Ok(weights)
    }
}
