//! On-disk class tables keyed by the rendered group spec.

use std::path::{Path, PathBuf};

use anyhow::Context;
use classcover_core::group::{ClassTable, Elem, GroupTable};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const FORMAT: &str = "classcover-classes-v1";

#[derive(Serialize, Deserialize)]
struct Entry {
    format: String,
    spec: String,
    key: String,
    order: usize,
    class_of: Vec<u32>,
    reps: Vec<Elem>,
}

/// Hex SHA-256 of the format tag and the rendered spec.
pub fn spec_key(rendered: &str) -> String {
    hex_sha256(format!("{FORMAT}\0{rendered}").as_bytes())
}

pub fn hex_sha256(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub struct ClassCache {
    dir: PathBuf,
}

impl ClassCache {
    pub fn new(dir: impl Into<PathBuf>) -> anyhow::Result<ClassCache> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).with_context(|| format!("creating cache {}", dir.display()))?;
        Ok(ClassCache { dir })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", &key[..32]))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// A cached table, if present and consistent with `g`.
    pub fn load(&self, rendered: &str, g: &GroupTable) -> Option<ClassTable> {
        let key = spec_key(rendered);
        let text = std::fs::read_to_string(self.path(&key)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        if e.format != FORMAT || e.key != key || e.spec != rendered || e.order != g.order() {
            return None;
        }
        let ct = ClassTable::from_parts(e.order, e.class_of, &e.reps)?;
        // classes must be closed under conjugation by the generators
        let closed = g.elements().all(|x| {
            (0..g.generators().len()).all(|k| ct.class_of(g.conj_gen(x, k)) == ct.class_of(x))
        });
        closed.then_some(ct)
    }

    pub fn store(&self, rendered: &str, ct: &ClassTable) -> anyhow::Result<()> {
        let key = spec_key(rendered);
        let e = Entry {
            format: FORMAT.into(),
            spec: rendered.into(),
            key: key.clone(),
            order: ct.class_index_table().len(),
            class_of: ct.class_index_table().to_vec(),
            reps: ct.classes().iter().map(|c| c.rep).collect(),
        };
        let tmp = self.dir.join(format!(".{}.tmp", &key[..32]));
        std::fs::write(&tmp, serde_json::to_vec(&e)?)?;
        std::fs::rename(&tmp, self.path(&key))?;
        Ok(())
    }

    /// Loads or computes and stores; the flag tells whether it was a hit.
    pub fn get_or_compute(&self, rendered: &str, g: &GroupTable) -> anyhow::Result<(ClassTable, bool)> {
        if let Some(ct) = self.load(rendered, g) {
            return Ok((ct, true));
        }
        let ct = ClassTable::new(g);
        self.store(rendered, &ct)?;
        Ok((ct, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use classcover_core::group::{build_group, BuildOptions};
    use classcover_core::GroupSpec;

    #[test]
    fn round_trip_and_invalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ClassCache::new(dir.path()).unwrap();
        let spec = GroupSpec::parse("S_4").unwrap().render();
        let g = build_group(&GroupSpec::parse("S_4").unwrap(), &BuildOptions::default()).unwrap();
        let (cold, hit) = cache.get_or_compute(&spec, &g).unwrap();
        assert!(!hit);
        let (warm, hit) = cache.get_or_compute(&spec, &g).unwrap();
        assert!(hit);
        assert_eq!(cold.class_index_table(), warm.class_index_table());
        assert_eq!(cold.size_multiset(), warm.size_multiset());
        // a table for another group is never served
        let a4 = build_group(&GroupSpec::parse("A_4").unwrap(), &BuildOptions::default()).unwrap();
        assert!(cache.load(&spec, &a4).is_none());
        // corrupt entries are ignored
        let key = spec_key(&spec);
        std::fs::write(dir.path().join(format!("{}.json", &key[..32])), "{}").unwrap();
        assert!(cache.load(&spec, &g).is_none());
    }
}
