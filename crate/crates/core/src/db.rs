//! Built-in polytope dataset and ingestion of external ".poly" corpora.
//!
//! The built-in set covers the anticanonical polytopes of all 18 smooth
//! toric Fano threefolds, the five toric del Pezzo polygons and the
//! segment. The three families whose vertex data is published verbatim
//! are stored byte-identically; the remaining entries were derived once
//! from their fans (see the manifest notes) and are cross-checked
//! structurally by the test suite rather than trusted.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lattice::format::parse_poly;
use crate::Polytope;

const POLYTOPES_POLY: &str = include_str!("../data/polytopes.poly");
const MANIFEST_TSV: &str = include_str!("../data/manifest.tsv");

/// Where a stored polytope came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Vertex list published verbatim; byte-matched by tests.
    PaperAppendix,
    /// Constructed from a fan or product description and frozen.
    DerivedConstruction,
    /// Read from a user-supplied file.
    IngestedFile,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::PaperAppendix => "paper-appendix",
            Source::DerivedConstruction => "derived-construction",
            Source::IngestedFile => "ingested-file",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedPolytope {
    pub name: String,
    pub polytope: Polytope,
    pub source: Source,
}

/// One row of the dataset manifest.
#[derive(Clone, Debug)]
pub struct ManifestEntry {
    pub name: String,
    pub source: Source,
    pub picard: u32,
    pub expected_inscribed: bool,
    pub note: String,
}

/// The built-in dataset.
pub struct PolytopeDb {
    entries: BTreeMap<String, NamedPolytope>,
    manifest: Vec<ManifestEntry>,
}

fn parse_source(s: &str) -> Result<Source> {
    match s {
        "paper-appendix" => Ok(Source::PaperAppendix),
        "derived-construction" => Ok(Source::DerivedConstruction),
        "ingested-file" => Ok(Source::IngestedFile),
        _ => Err(Error::Parse {
            line: 0,
            message: format!("unknown source tag {s}"),
        }),
    }
}

fn load_builtin() -> Result<PolytopeDb> {
    let mut manifest = Vec::new();
    for line in MANIFEST_TSV.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 5 {
            return Err(Error::Parse {
                line: 0,
                message: format!("manifest row needs 5 columns: {line}"),
            });
        }
        manifest.push(ManifestEntry {
            name: cols[0].to_string(),
            source: parse_source(cols[1])?,
            picard: cols[2].parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad picard number in manifest: {}", cols[2]),
            })?,
            expected_inscribed: match cols[3] {
                "inscribed" => true,
                "not-inscribed" => false,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("bad expected verdict: {other}"),
                    })
                }
            },
            note: cols[4].to_string(),
        });
    }

    let mut entries = BTreeMap::new();
    for rec in parse_poly::<crate::Int>(POLYTOPES_POLY)? {
        let name = rec.name.clone().ok_or(Error::Parse {
            line: 0,
            message: "built-in record without a name".into(),
        })?;
        if !rec.warnings.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: format!("built-in record {name} is not canonical: {:?}", rec.warnings),
            });
        }
        let source = manifest
            .iter()
            .find(|m| m.name == name)
            .map(|m| m.source)
            .ok_or_else(|| Error::KnowledgeBase(format!("{name} missing from manifest")))?;
        entries.insert(
            name.clone(),
            NamedPolytope {
                name,
                polytope: rec.polytope,
                source,
            },
        );
    }
    for m in &manifest {
        if !entries.contains_key(&m.name) {
            return Err(Error::KnowledgeBase(format!(
                "manifest entry {} has no polytope",
                m.name
            )));
        }
    }
    Ok(PolytopeDb { entries, manifest })
}

static BUILTIN: OnceLock<PolytopeDb> = OnceLock::new();

impl PolytopeDb {
    /// The built-in dataset (loaded once; the data is embedded).
    pub fn builtin() -> &'static PolytopeDb {
        BUILTIN.get_or_init(|| load_builtin().expect("embedded dataset is valid"))
    }

    fn resolve<'a>(&self, name: &'a str) -> &'a str {
        match name {
            "cube" => "III_27",
            "S6" => "dP6",
            "S7" => "dP7",
            "S8" | "F1" => "dP8",
            other => other,
        }
    }

    pub fn get(&self, name: &str) -> Result<&NamedPolytope> {
        let key = self.resolve(name);
        self.entries
            .get(key)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn manifest(&self) -> &[ManifestEntry] {
        &self.manifest
    }

    /// Manifest rows for the 18 toric Fano threefolds, in name order.
    pub fn threefolds(&self) -> Vec<&ManifestEntry> {
        self.manifest
            .iter()
            .filter(|m| self.entries[&m.name].polytope.dim() == 3)
            .collect()
    }
}

/// One failed file during ingestion.
#[derive(Debug)]
pub struct IngestError {
    pub file: String,
    pub message: String,
}

/// Parse every `*.poly` file in a directory (sorted by file name).
/// Per-file errors are collected, not fatal. Multi-record files yield one
/// entry per record, named by the record header or `stem#k`.
pub fn ingest_directory(path: &Path) -> Result<(Vec<NamedPolytope>, Vec<IngestError>)> {
    let mut files: Vec<_> = std::fs::read_dir(path)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "poly") == Some(true))
        .collect();
    files.sort();
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for file in files {
        let display = file
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| file.display().to_string());
        let stem = file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| display.clone());
        let text = match std::fs::read_to_string(&file) {
            Ok(t) => t,
            Err(e) => {
                errors.push(IngestError {
                    file: display,
                    message: e.to_string(),
                });
                continue;
            }
        };
        match parse_poly::<crate::Int>(&text) {
            Ok(records) => {
                let many = records.len() > 1;
                for (k, rec) in records.into_iter().enumerate() {
                    let name = rec.name.unwrap_or_else(|| {
                        if many {
                            format!("{stem}#{k}")
                        } else {
                            stem.clone()
                        }
                    });
                    out.push(NamedPolytope {
                        name,
                        polytope: rec.polytope,
                        source: Source::IngestedFile,
                    });
                }
            }
            Err(e) => errors.push(IngestError {
                file: display,
                message: e.to_string(),
            }),
        }
    }
    Ok((out, errors))
}

/// Resolve a data file against the `FANOSCOPE_DATA` override directory,
/// falling back to the embedded copy.
pub fn data_text(file: &str, embedded: &'static str) -> String {
    if let Ok(dir) = std::env::var("FANOSCOPE_DATA") {
        let p = Path::new(&dir).join(file);
        if let Ok(text) = std::fs::read_to_string(&p) {
            return text;
        }
    }
    embedded.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Vector;

    #[test]
    fn builtin_loads_and_matches_manifest() {
        let db = PolytopeDb::builtin();
        assert_eq!(db.manifest().len(), 24);
        assert_eq!(db.threefolds().len(), 18);
        for m in db.manifest() {
            let p = &db.get(&m.name).unwrap().polytope;
            assert!(p.is_reflexive(), "{} not reflexive", m.name);
            assert!(p.smoothness().is_smooth(), "{} not smooth", m.name);
            assert_eq!(
                p.facets().len(),
                p.dim() + m.picard as usize,
                "{}: ray count vs picard",
                m.name
            );
        }
    }

    #[test]
    fn appendix_vertex_lists_are_verbatim() {
        let db = PolytopeDb::builtin();
        let iii29 = &db.get("III_29").unwrap().polytope;
        let mut expected: Vec<Vector> = [
            [-1, -1, -1],
            [-1, -1, 3],
            [-1, 3, -1],
            [1, -1, -1],
            [0, -1, 2],
            [1, -1, 0],
            [0, 2, -1],
            [1, 0, -1],
        ]
        .iter()
        .map(|c| Vector::from_i32(c))
        .collect();
        expected.sort();
        assert_eq!(iii29.vertices(), &expected[..]);
        assert_eq!(db.get("III_29").unwrap().source, Source::PaperAppendix);
        assert_eq!(db.get("IV_11").unwrap().polytope.vertices().len(), 10);
        assert_eq!(db.get("IV_12").unwrap().polytope.vertices().len(), 10);
    }

    #[test]
    fn aliases_resolve() {
        let db = PolytopeDb::builtin();
        assert_eq!(db.get("cube").unwrap().name, "III_27");
        assert_eq!(db.get("S6").unwrap().name, "dP6");
        assert!(db.get("nonsense").is_err());
    }

    #[test]
    fn ingest_reports_errors_per_file() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("good.poly"),
            "dim 2\nvertices 3\n-1 -1\n2 -1\n-1 2\n",
        )
        .unwrap();
        std::fs::write(dir.path().join("bad.poly"), "dim 2\nvertices 1\n0 0\n").unwrap();
        std::fs::write(dir.path().join("ignored.txt"), "not a polytope").unwrap();
        let (polys, errors) = ingest_directory(dir.path()).unwrap();
        assert_eq!(polys.len(), 1);
        assert_eq!(polys[0].name, "good");
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].file, "bad.poly");
    }

    #[test]
    fn ingest_empty_directory() {
        let dir = tempfile::tempdir().unwrap();
        let (polys, errors) = ingest_directory(dir.path()).unwrap();
        assert!(polys.is_empty());
        assert!(errors.is_empty());
    }
}
