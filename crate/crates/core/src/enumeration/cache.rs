//! On-disk cache of canonical graph lists.
//!
//! Each list lives in `{mode}_n{n}_m{m}.g6` (one canonical graph6 per line)
//! next to `{mode}_n{n}_m{m}.meta.json` holding the count and a SHA-256 of
//! the list. A list whose metadata does not match is treated as absent.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::{encode_graph6, ChemicalGraph};

pub const CACHE_ENV: &str = "AGX_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".agx-cache";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, Serialize, Deserialize)]
struct Meta {
    count: usize,
    sha256: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$AGX_CACHE`, or `./.agx-cache`.
    pub fn from_env() -> Self {
        Cache::new(
            std::env::var_os(CACHE_ENV)
                .map_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR), PathBuf::from),
        )
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn paths(&self, mode: &str, n: usize, m: usize) -> (PathBuf, PathBuf) {
        let stem = format!("{mode}_n{n}_m{m}");
        (
            self.dir.join(format!("{stem}.g6")),
            self.dir.join(format!("{stem}.meta.json")),
        )
    }

    pub fn load(&self, mode: &str, n: usize, m: usize) -> Option<Vec<ChemicalGraph>> {
        let (list, meta) = self.paths(mode, n, m);
        let text = fs::read_to_string(list).ok()?;
        let meta: Meta = serde_json::from_str(&fs::read_to_string(meta).ok()?).ok()?;
        if meta.sha256 != digest(text.as_bytes()) {
            return None;
        }
        let graphs: Vec<ChemicalGraph> = text
            .lines()
            .map(ChemicalGraph::from_graph6)
            .collect::<Result<_, _>>()
            .ok()?;
        (graphs.len() == meta.count).then_some(graphs)
    }

    pub fn store(
        &self,
        mode: &str,
        n: usize,
        m: usize,
        graphs: &[ChemicalGraph],
    ) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let (list, meta) = self.paths(mode, n, m);
        let text: String = graphs.iter().map(|g| encode_graph6(g) + "\n").collect();
        let meta_json = serde_json::to_string_pretty(&Meta {
            count: graphs.len(),
            sha256: digest(text.as_bytes()),
        })?;
        fs::write(list, text)?;
        fs::write(meta, meta_json)
    }

    pub fn load_json<T: for<'de> Deserialize<'de>>(&self, name: &str) -> Option<T> {
        let text = fs::read_to_string(self.dir.join(name)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store_json<T: Serialize>(&self, name: &str, value: &T) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.dir.join(name), serde_json::to_string_pretty(value)?)
    }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
