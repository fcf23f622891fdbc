//! Generator files and family descriptions.

use std::path::{Path, PathBuf};

use classcover_core::filterbase::{FamilySpec, MemberSpec};
use classcover_core::group::{GeneratorData, GeneratorLoader};
use classcover_core::{CoreError, GroupSpec};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum GeneratorFile {
    Perm {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Matrix {
        p: u32,
        n: usize,
        generators: Vec<Vec<Vec<u32>>>,
    },
}

/// Permutation images are 1-based when every image lies in `1..=degree`
/// and 0-based otherwise.
pub fn normalize_images(degree: usize, gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let one_based = !gens.is_empty()
        && gens
            .iter()
            .all(|g| g.iter().all(|&x| x >= 1 && x as usize <= degree));
    if one_based {
        gens.into_iter().map(|g| g.into_iter().map(|x| x - 1).collect()).collect()
    } else {
        gens
    }
}

pub fn parse_generator_file(text: &str) -> Result<GeneratorData, CoreError> {
    let f: GeneratorFile = serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    Ok(match f {
        GeneratorFile::Perm { degree, generators } => GeneratorData::Perm {
            degree,
            gens: normalize_images(degree, generators),
        },
        GeneratorFile::Matrix { p, n, generators } => {
            let mut gens = Vec::new();
            for m in generators {
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    return Err(CoreError::LengthMismatch {
                        expected: n,
                        got: m.len(),
                    });
                }
                gens.push(m.into_iter().flatten().map(|x| x % p).collect());
            }
            GeneratorData::Matrix { p, n, gens }
        }
    })
}

/// Resolves `file(path)` relative to a base directory.
pub struct FileLoader {
    pub base: PathBuf,
}

impl FileLoader {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        FileLoader { base: base.into() }
    }
}

impl GeneratorLoader for FileLoader {
    fn load(&self, path: &str) -> Result<GeneratorData, CoreError> {
        let p = Path::new(path);
        let full = if p.is_absolute() { p.to_path_buf() } else { self.base.join(p) };
        let text = std::fs::read_to_string(&full)
            .map_err(|e| CoreError::InvalidSpec(format!("{}: {e}", full.display())))?;
        parse_generator_file(&text)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MemberEntry {
    Spec(String),
    Range { range: String, from: u32, to: u32 },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    members: Vec<MemberEntry>,
}

pub fn parse_family(text: &str) -> Result<FamilySpec, CoreError> {
    let f: FamilyFile = serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    let mut members = Vec::new();
    for m in f.members {
        members.push(match m {
            MemberEntry::Spec(s) => MemberSpec::Group(GroupSpec::parse(&s)?),
            MemberEntry::Range { range, from, to } => {
                if range != "A_n" {
                    return Err(CoreError::InvalidSpec(format!("unsupported range family {range:?}")));
                }
                if from > to {
                    return Err(CoreError::InvalidSpec(format!("empty range {from}..{to}")));
                }
                MemberSpec::AlternatingRange { from, to }
            }
        });
    }
    Ok(FamilySpec { members })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CorpusFile {
    List(Vec<String>),
    Table { groups: Vec<String> },
}

/// A list of group specs from JSON (`[..]` or `{"groups": [..]}`) or
/// TOML (`groups = [..]`).
pub fn parse_corpus(path: &Path) -> anyhow::Result<Vec<GroupSpec>> {
    let text = std::fs::read_to_string(path)?;
    let c: CorpusFile = match path.extension().and_then(|e| e.to_str()) {
        Some("toml") => toml::from_str(&text)?,
        _ => serde_json::from_str(&text)?,
    };
    let names = match c {
        CorpusFile::List(v) | CorpusFile::Table { groups: v } => v,
    };
    Ok(names.iter().map(|s| GroupSpec::parse(s)).collect::<Result<_, _>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use classcover_core::group::{build_group, BuildOptions};

    #[test]
    fn one_and_zero_based_images() {
        assert_eq!(normalize_images(3, vec![vec![2, 3, 1]]), vec![vec![1, 2, 0]]);
        assert_eq!(normalize_images(3, vec![vec![1, 2, 0]]), vec![vec![1, 2, 0]]);
    }

    #[test]
    fn loads_perm_and_matrix_files() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("s4.json"), r#"{"degree": 4, "generators": [[2,1,3,4],[2,3,4,1]]}"#).unwrap();
        std::fs::write(
            dir.path().join("sl23.json"),
            r#"{"p": 3, "n": 2, "generators": [[[1,1],[0,1]], [[1,0],[1,1]]]}"#,
        )
        .unwrap();
        let loader = FileLoader::new(dir.path());
        let opts = BuildOptions {
            loader: Some(&loader),
            ..Default::default()
        };
        let g = build_group(&GroupSpec::parse("file(s4.json)").unwrap(), &opts).unwrap();
        assert_eq!(g.order(), 24);
        let h = build_group(&GroupSpec::parse("file(sl23.json)").unwrap(), &opts).unwrap();
        assert_eq!(h.order(), 24);
        assert!(build_group(&GroupSpec::parse("file(missing.json)").unwrap(), &opts).is_err());
    }

    #[test]
    fn family_files() {
        let f = parse_family(r#"{"members": ["A_5", "PSL(2,7)", {"range": "A_n", "from": 5, "to": 9}]}"#).unwrap();
        assert_eq!(f.members.len(), 3);
        assert_eq!(f.members[2], MemberSpec::AlternatingRange { from: 5, to: 9 });
        assert!(parse_family(r#"{"members": [{"range": "S_n", "from": 5, "to": 9}]}"#).is_err());
    }
}
